"""Sphinx configuration for weighted-core-ep."""

project = "weighted-core-ep"
author = "weighted-core-ep contributors"
release = "0.1.0"

extensions = [
    "myst_parser",
    "autodoc2",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
]

autodoc2_packages = [
    {
        "path": "../src/weighted_core_ep",
        "module": "weighted_core_ep",
    },
]

myst_enable_extensions = [
    "colon_fence",
    "dollarmath",
    "fieldlist",
]

templates_path = ["_templates"]
exclude_patterns = ["_build"]

html_theme = "furo"

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable", None),
    "pydantic": ("https://docs.pydantic.dev/latest", None),
}

source_suffix = {
    ".rst": "restructuredtext",
    ".md": "markdown",
}

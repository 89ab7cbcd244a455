"""Inverse kinds, construction paths and operation outcomes."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from weighted_core_ep.matrix import Matrix
    from weighted_core_ep.verify import AxiomReport

__all__ = [
    "ConstructionPath",
    "HypothesisFailed",
    "Inconsistent",
    "InverseKind",
    "InverseResult",
    "NoExist",
    "Outcome",
]


class InverseKind(StrEnum):
    """Inverse families; values double as CLI ``--kind`` names."""

    MOORE_PENROSE = "moore-penrose"
    DRAZIN = "drazin"
    GROUP = "group"
    ONE_THREE_E = "one-three-e"
    ONE_FOUR_F = "one-four-f"
    WEIGHTED_MP = "weighted-mp"
    WEIGHTED_CORE = "weighted-core"
    WEIGHTED_DUAL_CORE = "weighted-dual-core"
    CORE_EP_E = "core-ep"
    DUAL_CORE_EP_F = "dual-core-ep"
    STAR_CORE_EP = "star-core-ep"
    DUAL_CORE_EP_STAR = "dual-core-ep-star"


class ConstructionPath(StrEnum):
    """How a weighted core-EP inverse was assembled.

    ``THM_ONETHREE_POWER``: ``A^D A^m Y`` with ``Y`` a ``{1,3^E}`` inverse
    of ``A^m`` (dual: ``Y A^m A^D`` with a ``{1,4^F}`` inverse).
    ``COR_WEIGHTED_MP``: the same with ``Y`` the weighted Moore-Penrose
    inverse of ``A^m``. ``PROP_MP_OF_POWER``: ``A^m (A^{m+1})†_{E,I}``.
    ``FACTOR_SUFFICIENT``: from a solution of ``A^k = X((A^k)*)²EA^k``.
    """

    THM_ONETHREE_POWER = "thm_onethree_power"
    COR_WEIGHTED_MP = "cor_weighted_mp"
    PROP_MP_OF_POWER = "prop_mp_of_power"
    FACTOR_SUFFICIENT = "factor_sufficient"


@dataclass(frozen=True, slots=True)
class NoExist:
    """The requested inverse does not exist for these inputs."""

    reason: str

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True, slots=True)
class Inconsistent:
    """A linear matrix equation has no solution."""

    residual: float

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True, slots=True)
class HypothesisFailed:
    """Hypotheses of a conditional identity that do not hold."""

    failed: tuple[str, ...]

    def __bool__(self) -> bool:
        return False


Outcome = NoExist | Inconsistent | HypothesisFailed


@dataclass(frozen=True, slots=True)
class InverseResult:
    """A computed inverse together with its certificate."""

    value: Matrix
    kind: InverseKind
    report: AxiomReport
    index_used: int = 0
    power_used: int | None = None
    path: str = ""

    @property
    def certified(self) -> bool:
        return self.report.passed

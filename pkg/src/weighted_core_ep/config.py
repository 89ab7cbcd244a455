"""Runtime configuration."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from weighted_core_ep.matrix import Tolerance
from weighted_core_ep.protocols import Backend


class WcepConfig(BaseSettings):
    """Defaults for the ``wcep`` command.

    Reads from environment variables with ``WCEP_`` prefix.
    """

    model_config = SettingsConfigDict(env_prefix="WCEP_")

    backend: Backend = Backend.EXACT
    tol: float = Field(default=1e-9, gt=0)
    rank_tol: float = Field(default=1e-12, gt=0)
    log_level: str = "WARNING"

    def tolerance(self, backend: Backend | str | None = None) -> Tolerance:
        """Tolerance for ``backend`` (zeros on the exact backend)."""
        if Backend(backend or self.backend) is Backend.EXACT:
            return Tolerance.exact()
        return Tolerance.floating(rank_rel=self.rank_tol, residual_rel=self.tol)

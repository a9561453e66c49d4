"""Configuration management for anytime_cs."""

from pathlib import Path
from typing import Literal, Optional, Tuple, Type, Union

from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

from anytime_cs.models import BettingConfig, BootstrapConfig, CsConfig


class Settings(BaseSettings):
    """Application settings loaded from environment variables or a dotenv file.

    Every field can be set as ``ANYTIME_CS_<FIELD>``; ``ANYTIME_CS_SEED`` is the
    seed fallback when no ``--seed`` flag is given.
    """

    model_config = SettingsConfigDict(
        env_prefix="ANYTIME_CS_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Coverage
    alpha: float = Field(default=0.05, gt=0.0, lt=1.0, description="Miscoverage budget")
    horizon: int = Field(default=10_000, ge=1, description="Stream length n")

    # Seeding
    seed: Optional[int] = Field(default=None, ge=0, description="Master seed")
    seeds: int = Field(default=20, ge=1, description="Replications of the synthetic study")

    # Betting
    grid_size: int = Field(default=1000, ge=2, description="Candidate-mean grid size G")
    theta: float = Field(default=0.5, ge=0.0, le=1.0, description="Hedge weight")
    trunc: float = Field(default=0.5, gt=0.0, lt=1.0, description="Betting fraction truncation")

    # Bootstrap
    replicates_b: int = Field(default=200, ge=2, description="Bootstrap replicates B")
    batches_l: int = Field(default=10, ge=1, description="Dyadic batches L")
    bootstrap_window: Literal["prefix", "batch"] = Field(default="prefix")
    bootstrap_stride: int = Field(default=1, ge=1, description="Steps between bootstrap CIs")

    # Studies
    beta_a: float = Field(default=10.0, gt=0.0)
    beta_b: float = Field(default=30.0, gt=0.0)
    replications: int = Field(default=100, ge=1, description="Baseball data replications")

    # Output
    out_dir: Path = Field(default=Path("results"))

    # Logging
    log_level: str = Field(default="INFO", description="Logging level")
    log_format: str = Field(default="console", description="Log format (json or console)")

    # Performance
    workers: int = Field(default=1, ge=1, description="Processes for replications")

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        # Config files outrank the environment; ANYTIME_CS_* variables are fallbacks.
        return init_settings, dotenv_settings, env_settings, file_secret_settings

    @property
    def master_seed(self) -> int:
        return self.seed if self.seed is not None else 0

    def cs_config(self) -> CsConfig:
        return CsConfig(alpha=self.alpha, horizon=self.horizon)

    def betting_config(self) -> BettingConfig:
        return BettingConfig(
            grid_size=self.grid_size, theta=self.theta, trunc=self.trunc, alpha=self.alpha
        )

    def bootstrap_config(self, seed: Optional[int] = None) -> BootstrapConfig:
        return BootstrapConfig(
            replicates=self.replicates_b,
            batches=self.batches_l,
            alpha=self.alpha,
            seed=self.master_seed if seed is None else seed,
            window=self.bootstrap_window,
            stride=self.bootstrap_stride,
        )


def load_settings(config_path: Optional[Union[str, Path]] = None, **overrides: object) -> Settings:
    """Build settings with precedence overrides > config file > environment > defaults.

    ``None`` overrides are dropped so unset CLI flags fall through.
    """
    explicit = {key: value for key, value in overrides.items() if value is not None}
    if config_path is not None:
        path = Path(config_path)
        if not path.is_file():
            raise FileNotFoundError(f"config file not found: {path}")
        return Settings(_env_file=path, **explicit)  # type: ignore[call-arg]
    return Settings(**explicit)  # type: ignore[arg-type]


"""Configuration schema using Pydantic."""

from pydantic import BaseModel, Field, model_validator
from pydantic_settings import BaseSettings


class ForestConfig(BaseModel):
    """Forest behaviour."""
    audit_every: int = Field(default=0, ge=0)  # full audit after every k-th mutation; 0 disables
    check_int64: bool = True
    default_weight: int | float = 1


class BenchConfig(BaseModel):
    """Benchmark harness defaults."""
    min_exp: int = Field(default=10, ge=1)
    max_exp: int = 17
    ops: int = Field(default=20000, ge=1)
    seed: int = 0
    max_ratio: float = 1.4  # acceptable mean time(2n)/time(n)
    evert_depth: int = Field(default=512, ge=1)  # path length of the evert profile
    evert_ops: int = Field(default=500, ge=1)

    @model_validator(mode="after")
    def _check_range(self) -> "BenchConfig":
        if self.min_exp > self.max_exp:
            raise ValueError(f"min_exp {self.min_exp} exceeds max_exp {self.max_exp}")
        return self


class CliConfig(BaseModel):
    """Script runner configuration."""
    verify_every: int = Field(default=1, ge=1)
    float_digits: int = Field(default=12, ge=1)


class Config(BaseSettings):
    """Root configuration for dftree. Environment variables win over file values."""
    forest: ForestConfig = Field(default_factory=ForestConfig)
    bench: BenchConfig = Field(default_factory=BenchConfig)
    cli: CliConfig = Field(default_factory=CliConfig)

    class Config:
        env_prefix = "DFTREE_"
        env_nested_delimiter = "__"

    @classmethod
    def settings_customise_sources(
        cls, settings_cls, init_settings, env_settings, dotenv_settings, file_secret_settings
    ):
        return env_settings, init_settings, dotenv_settings, file_secret_settings

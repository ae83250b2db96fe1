from enum import Enum
from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Environment(Enum):
    DEVELOPMENT = "development"
    PRODUCTION = "production"
    TESTING = "testing"


class AppSettings(BaseSettings):
    name: str = Field(
        default="poisson_pencils", description="The name of the application"
    )
    version: str = Field(default="1.0.0", description="The version of the application")
    description: str = Field(
        default="Poisson pencils on loop algebras: reduction and invariants",
        description="The description of the application",
    )
    schema_tag: str = Field(
        default="ppl/1", description="Version tag written into every JSON document"
    )

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="APP_",
        env_ignore_empty=True,
        env_file_encoding="utf-8",
        extra="ignore",
    )


class NumericSettings(BaseSettings):
    precision: int = Field(
        default=50, ge=15, description="Decimal digits used by the high-precision layer"
    )
    constancy_tol: float = Field(
        default=1e-9, gt=0, description="Maximal spread of a constant central invariant"
    )
    odd_tol: float = Field(
        default=1e-25, gt=0, description="Bound on odd coefficients of root expansions"
    )
    eigen_tol: float = Field(
        default=1e-8, gt=0, description="Bound on eigenvalue multiset distances"
    )
    seed: int = Field(default=20240601, description="Seed of the sample-point generator")
    samples: int = Field(default=5, ge=1, description="Number of sample points")
    order: int = Field(default=4, ge=2, description="Even order of root expansions")
    max_order: int = Field(
        default=24, ge=1, description="Maximal length of the D-block Neumann series"
    )
    miura_order: int = Field(
        default=8, ge=0, description="Truncation order of Miura inversions"
    )

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="PPL_",
        env_ignore_empty=True,
        env_file_encoding="utf-8",
        extra="ignore",
    )


class Settings(BaseSettings):
    app: AppSettings = AppSettings()
    numeric: NumericSettings = NumericSettings()

    environment: Environment = Field(
        default=Environment.DEVELOPMENT, description="The application environment"
    )
    debug: bool = Field(default=False, description="Enable or disable debug mode")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_ignore_empty=True,
        env_file_encoding="utf-8",
        extra="ignore",
    )

    @property
    def is_production(self) -> bool:
        return self.environment == Environment.PRODUCTION

    @property
    def is_development(self) -> bool:
        return self.environment == Environment.DEVELOPMENT


@lru_cache
def get_settings() -> Settings:
    return Settings()


settings = get_settings()

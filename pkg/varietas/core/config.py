from pydantic_settings import BaseSettings
from pydantic import Field
from functools import lru_cache


class Settings(BaseSettings):
    log_level: str = Field("WARNING", alias="VARIETAS_LOG_LEVEL")

    # Highest multilinear degree any component may be built at.
    # Tree ambient at degree 6 already has 42 x 720 = 30240 monomials per op.
    degree_cap: int = Field(6, alias="VARIETAS_DEGREE_CAP")

    # Worker threads for per-degree consequence generation.
    # Results are merged in submission order, so the count never changes output.
    threads: int = Field(1, alias="VARIETAS_THREADS")

    # ── Inputs ────────────────────────────────────────────────────────────────
    fixtures_dir: str = Field("fixtures", alias="VARIETAS_FIXTURES_DIR")
    suite_file: str = Field("config/paper_suite.yaml", alias="VARIETAS_SUITE_FILE")

    # Polarization convention: "paper" is xy = [x,y] - {x,y},
    # "standard" is xy = 1/2 [x,y] + 1/2 {x,y}
    convention: str = Field("paper", alias="VARIETAS_CONVENTION")

    # ── Check log ─────────────────────────────────────────────────────────────
    # Directory for checks.jsonl; empty disables the per-check log.
    check_log_dir: str = Field("", alias="VARIETAS_CHECK_LOG_DIR")
    check_log_max_bytes: int = Field(5 * 1024 * 1024, alias="VARIETAS_CHECK_LOG_MAX_BYTES")

    @property
    def check_log_enabled(self) -> bool:
        return bool(self.check_log_dir)

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"


@lru_cache
def get_settings() -> Settings:
    return Settings()

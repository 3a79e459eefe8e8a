from pydantic_settings import BaseSettings, SettingsConfigDict


class BaseAppSettings(BaseSettings):
    """Base settings that are safe to version control."""

    model_config = SettingsConfigDict(
        env_prefix='HFW_',
        env_file='.env',
        env_file_encoding='utf-8',
        extra='ignore',
    )

    # FastAPI settings
    API_DEBUG: bool = False
    API_VERSION: str = '1.0.0'
    API_PREFIX: str = '/api/v1'

    # Logging
    LOG_LEVEL: str = 'WARNING'

    # Wire-format versions
    INDEX_TABLE_VERSION: str = '1'
    GRAMMAR_VERSION: str = '1'


class BudgetSettings(BaseSettings):
    """Default resource budgets; every CLI flag overrides one of these."""

    model_config = SettingsConfigDict(
        env_prefix='HFW_',
        env_file='.env',
        env_file_encoding='utf-8',
        extra='ignore',
    )

    BUDGET_ELEMS: int = 200_000
    BUDGET_OPS: int = 2_000_000
    BUDGET_DEPTH: int = 6
    FUEL: int = 10_000
    SEED: int = 20250101
    SEARCH_RANK: int = 3
    POWERSET_CAP: int = 16
    LL_ENUM_LIMIT: int = 3
    NAME_CUTOFF: int = 3
    NAME_BUDGET: int = 50_000
    DEF_DEPTH: int = 4
    DEF_BOUND: int = 16


class Settings(BaseAppSettings, BudgetSettings):
    """Combined settings class."""

    pass


def get_settings() -> Settings:
    """
    Returns the project settings.

    :return: Project settings.
    """
    return Settings()

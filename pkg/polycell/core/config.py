from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    APP_NAME: str = "polycell"
    APP_VERSION: str = "0.1.0"
    LOG_LEVEL: str = "INFO"

    # Search limits
    SEARCH_NODE_BUDGET: int = 200_000
    MAX_GROUP_ORDER: int = 2_000_000
    HOM_ENUMERATION_LIMIT: int = 1_000_000

    # Verification suites
    DEFAULT_SEED: int = 7
    DEFAULT_TRIALS: int = 20
    SUITE_WORKERS: int = 4

    # Semantics switches
    ALLOW_FACE_REFLECTION: bool = True
    CYCLE_KEY_REVERSAL: bool = True

    class Config:
        env_file = ".env"
        env_prefix = "POLYCELL_"


settings = Settings()

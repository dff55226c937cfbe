from typing import List
from pydantic_settings import BaseSettings
from functools import lru_cache


class Settings(BaseSettings):
    # App
    APP_NAME: str = "surge-planner"
    APP_ENV: str = "development"
    DEBUG: bool = False
    API_PREFIX: str = "/api/v1"
    TOOL_VERSION: str = "1.0.0"

    # Server
    HOST: str = "0.0.0.0"
    PORT: int = 8000

    # CORS
    CORS_ORIGINS: List[str] = ["http://localhost:3000", "http://localhost:8080"]

    # Config files
    SURGE_CONFIG_DIR: str = "./configs"
    SPLIT_CURVES_PATH: str = "./configs/split_curves.json"
    DECISION_LOG_PATH: str = ""

    # Analytical model
    GRID_STEP: float = 0.05
    RHO_RD: float = 0.75
    LINK_ETA: float = 0.94

    # Simulation clock: 1000-cycle intervals at 2.4 GHz
    CPU_FREQ_GHZ: float = 2.4
    INTERVAL_CYCLES: int = 1000

    # I/O activity levels, fraction of peak per direction
    IO_LEVEL_LOW: float = 0.10
    IO_LEVEL_MED: float = 0.50
    IO_LEVEL_HIGH: float = 0.80
    IO_PEAK_GBPS: float = 50.0  # 400 Gbps NIC

    # Cluster manager
    IO_HEAVY_THRESHOLD: float = 0.5

    # Split curve generation
    AVAILABILITY_LEVELS: List[float] = [0.25, 0.5, 0.75, 1.0]
    DEMAND_GRID_POINTS: int = 40
    MAX_SPLIT_CURVES: int = 4096

    # Monte Carlo / reproducibility
    MC_SAMPLES: int = 200_000
    DEFAULT_SEED: int = 7

    @property
    def interval_ns(self) -> float:
        return self.INTERVAL_CYCLES / self.CPU_FREQ_GHZ

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = True


@lru_cache()
def get_settings() -> Settings:
    return Settings()


settings = get_settings()

from app.modules.utility.schemas.pod import PodConfig, UtilityPoint

__all__ = ["PodConfig", "UtilityPoint"]

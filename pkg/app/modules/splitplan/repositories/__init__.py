from app.modules.splitplan.repositories.split_set_repository import (
    SplitCurveSetRepository,
    save_set,
    load_set,
)

__all__ = ["SplitCurveSetRepository", "save_set", "load_set"]

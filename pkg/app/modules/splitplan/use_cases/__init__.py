# Split Plan Module Use Cases
from .plan_split import PlanSplitUseCase

__all__ = ["PlanSplitUseCase"]

from app.core.messaging.types import DecisionEvent
from app.core.messaging.publisher.service import (
    decision_publisher,
    DecisionPublisher,
    DECISION_LOGGER_NAME,
)

__all__ = [
    "DecisionEvent",
    "decision_publisher",
    "DecisionPublisher",
    "DECISION_LOGGER_NAME",
]

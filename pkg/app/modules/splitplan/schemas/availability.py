from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field

AXES = ("b_p_avail", "b_s_avail", "link_ing_avail", "link_egr_avail")


class ResourceAvailability(BaseModel):
    """
    Bandwidth (GB/s) left on each resource axis: primary memory, salvage
    memory, link ingress, link egress. Serialized with short keys.
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    b_p_avail: float = Field(..., ge=0, alias="b_p")
    b_s_avail: float = Field(..., ge=0, alias="b_s")
    link_ing_avail: float = Field(..., ge=0, alias="link_ing")
    link_egr_avail: float = Field(..., ge=0, alias="link_egr")

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.b_p_avail, self.b_s_avail, self.link_ing_avail, self.link_egr_avail)

    @classmethod
    def from_tuple(cls, values) -> "ResourceAvailability":
        return cls(**dict(zip(AXES, (float(v) for v in values))))

    def plus(self, other: "ResourceAvailability") -> "ResourceAvailability":
        return ResourceAvailability.from_tuple(a + b for a, b in zip(self.as_tuple(), other.as_tuple()))

    def minus(self, other: "ResourceAvailability") -> "ResourceAvailability":
        """Axis-wise difference, floored at 0."""
        return ResourceAvailability.from_tuple(
            max(0.0, a - b) for a, b in zip(self.as_tuple(), other.as_tuple())
        )

    def fits_within(self, other: "ResourceAvailability", tolerance: float = 1e-9) -> bool:
        return all(a <= b + tolerance for a, b in zip(self.as_tuple(), other.as_tuple()))

    @classmethod
    def zero(cls) -> "ResourceAvailability":
        return cls.from_tuple((0.0, 0.0, 0.0, 0.0))

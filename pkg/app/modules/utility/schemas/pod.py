from pydantic import BaseModel, ConfigDict, Field


class PodConfig(BaseModel):
    """
    N servers sharing one salvage memory device. ``x`` is the device's
    provisioned bandwidth in units of one salvage link's bandwidth.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Pod size (1 = Solo)")
    p: float = Field(..., ge=0, le=1, description="Probability a server's salvage link is idle enough")
    x: float = Field(1.0, gt=0, description="Provisioned device : link bandwidth ratio")


class UtilityPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    p: float
    x: float
    utility_analytic: float
    utility_mc: float

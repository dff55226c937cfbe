from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from app.modules.curves.schemas import LoadLatencyCurve
from app.modules.link.schemas import LinkSpec


class SystemConfig(BaseModel):
    """One server's memory and salvage-link provisioning."""

    model_config = ConfigDict(frozen=True)

    b_p: float = Field(..., gt=0, description="Primary peak sustainable bandwidth, GB/s")
    b_s: float = Field(..., gt=0, description="Salvage peak sustainable bandwidth, GB/s")
    primary_curve: LoadLatencyCurve
    salvage_curve: LoadLatencyCurve
    link: LinkSpec
    rho_rd: float = Field(0.75, ge=0, le=1, description="Read share of memory traffic")
    link_ing_bw: Optional[float] = Field(
        None, ge=0, description="Ingress bandwidth available to memory, GB/s (None = raw)"
    )
    link_egr_bw: Optional[float] = Field(
        None, ge=0, description="Egress bandwidth available to memory, GB/s (None = raw)"
    )
    label: str = ""

    @property
    def rho_wr(self) -> float:
        return 1.0 - self.rho_rd

    @property
    def ing_capacity(self) -> float:
        return self.link.raw_bw_per_dir if self.link_ing_bw is None else self.link_ing_bw

    @property
    def egr_capacity(self) -> float:
        return self.link.raw_bw_per_dir if self.link_egr_bw is None else self.link_egr_bw

    def with_capacities(
        self, b_p: float, b_s: float, link_ing: float, link_egr: float
    ) -> "SystemConfig":
        """
        Copy with capacities replaced by the given availabilities.

        Availabilities may be zero, so the copy skips field validation.
        """
        return self.model_copy(
            update={"b_p": b_p, "b_s": b_s, "link_ing_bw": link_ing, "link_egr_bw": link_egr}
        )

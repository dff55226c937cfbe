"""
Solve the per-access metadata byte counts of the link model.

Two anchors are known: at a given read fraction the ingress direction
delivers ``rx_target`` and the egress direction ``tx_target`` of the raw
link as data payload. Each anchor is linear in the header bytes of its
direction, so with the read request and write completion sizes fixed the
read-response and write headers follow directly.

    python scripts/calibrate_metadata.py --rx-target 0.80 --tx-target 0.40
"""

import logging
import sys

import click
import numpy as np

sys.path.insert(0, ".")

from app.config.settings import settings
from app.modules.link.schemas import MetadataModel
from app.modules.link.services import CACHE_LINE_BYTES, build_link_spec, effective_direction_bandwidth

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(levelname)s - %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)
logger = logging.getLogger(__name__)


def solve_headers(read_fraction, rx_target, tx_target, eta, rd_req_bytes, wr_cmpl_bytes):
    """Return (rd_resp_hdr_bytes, wr_hdr_bytes) meeting both anchors exactly."""
    f = read_fraction
    # bytes per 64B of data that make each direction hit its target share
    ing_bytes = eta * f * CACHE_LINE_BYTES / rx_target
    egr_bytes = eta * (1.0 - f) * CACHE_LINE_BYTES / tx_target

    # f*(64 + h_r) + (1-f)*c_w = ing_bytes ; f*q + (1-f)*(64 + h_w) = egr_bytes
    a = np.array([[f, 0.0], [0.0, 1.0 - f]])
    b = np.array(
        [
            ing_bytes - f * CACHE_LINE_BYTES - (1.0 - f) * wr_cmpl_bytes,
            egr_bytes - (1.0 - f) * CACHE_LINE_BYTES - f * rd_req_bytes,
        ]
    )
    h_r, h_w = np.linalg.solve(a, b)
    return float(h_r), float(h_w)


@click.command()
@click.option("--read-fraction", type=click.FloatRange(0, 1, min_open=True, max_open=True), default=2 / 3)
@click.option("--rx-target", type=click.FloatRange(0, 1, min_open=True), default=0.80)
@click.option("--tx-target", type=click.FloatRange(0, 1, min_open=True), default=0.40)
@click.option("--eta", type=click.FloatRange(0, 1, min_open=True), default=settings.LINK_ETA)
@click.option("--rd-req-bytes", type=click.FloatRange(min=0), default=32.0)
@click.option("--wr-cmpl-bytes", type=click.FloatRange(min=0), default=6.0)
def main(read_fraction, rx_target, tx_target, eta, rd_req_bytes, wr_cmpl_bytes):
    h_r, h_w = solve_headers(read_fraction, rx_target, tx_target, eta, rd_req_bytes, wr_cmpl_bytes)
    logger.info(f"Exact solution: rd_resp_hdr_bytes={h_r:.3f}, wr_hdr_bytes={h_w:.3f}")
    if h_r < 0 or h_w < 0:
        raise click.ClickException("targets are unreachable with these request/completion sizes")

    meta = MetadataModel(
        rd_req_bytes=rd_req_bytes,
        rd_resp_hdr_bytes=float(round(h_r)),
        wr_hdr_bytes=float(round(h_w)),
        wr_cmpl_bytes=wr_cmpl_bytes,
    )
    spec = build_link_spec(eta=eta, meta=meta)
    rx, tx = effective_direction_bandwidth(spec, read_fraction)
    raw = spec.raw_bw_per_dir
    logger.info(f"Rounded to whole bytes: rx={rx / raw:.4f} raw, tx={tx / raw:.4f} raw")
    click.echo(meta.model_dump_json(indent=2))


if __name__ == "__main__":
    main()

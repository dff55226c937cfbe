"""
CSV and JSON output helpers shared by the commands.
"""

import csv
import io
import json
import math
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import click


def json_float(value: float) -> Optional[float]:
    """Non-finite values (infeasible latencies) are emitted as null."""
    return value if math.isfinite(value) else None


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, allow_nan=False)


def render_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def emit(text: str, out: Optional[Union[str, Path]] = None) -> Optional[Path]:
    """Write ``text`` to ``out``, or to stdout when no path is given."""
    if out is None or str(out) == "-":
        click.echo(text, nl=False)
        return None
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    return path

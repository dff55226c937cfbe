"""
Run manifests: what produced a set of output files.
"""

import hashlib
import json
from pathlib import Path
from typing import List, Optional, Sequence, Union

from pydantic import BaseModel, Field

from app.config.settings import settings


class RunManifest(BaseModel):
    command: str
    config_digest: str = Field(..., description="sha256 of the canonical JSON of the resolved config")
    seed: Optional[int] = None
    tool_version: str = settings.TOOL_VERSION
    outputs: List[str] = Field(default_factory=list)


def config_digest(config: Union[BaseModel, dict, list]) -> str:
    """Stable across runs: keys sorted, no whitespace."""
    payload = config.model_dump(mode="json") if isinstance(config, BaseModel) else config
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def write_manifest(
    path: Union[str, Path],
    command: str,
    config: Union[BaseModel, dict, list],
    outputs: Sequence[Union[str, Path]],
    seed: Optional[int] = None,
) -> RunManifest:
    manifest = RunManifest(
        command=command,
        config_digest=config_digest(config),
        seed=seed,
        outputs=[str(p) for p in outputs],
    )
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(manifest.model_dump_json(indent=2) + "\n", encoding="utf-8")
    return manifest

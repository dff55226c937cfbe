import json
import logging
from pathlib import Path
from typing import Union

from pydantic import ValidationError

from app.core.exceptions import SchemaError
from app.modules.splitplan.schemas import SCHEMA_VERSION, SplitCurveSet

logger = logging.getLogger(__name__)


def _first_error(exc: ValidationError) -> tuple:
    err = exc.errors()[0]
    field = ".".join(str(p) for p in err.get("loc", ())) or None
    return field, err.get("msg", str(exc))


class SplitCurveSetRepository:
    """JSON file store for split curve sets (``schema_version`` gated)."""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)

    def save(self, curve_set: SplitCurveSet) -> Path:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.path.write_text(
            curve_set.model_dump_json(by_alias=True, indent=2), encoding="utf-8"
        )
        logger.info(f"Saved {len(curve_set.curves)} split curves to {self.path}")
        return self.path

    def load(self) -> SplitCurveSet:
        try:
            raw = json.loads(self.path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise SchemaError(f"split curve set not found: {self.path}") from None
        except UnicodeDecodeError as e:
            raise SchemaError(f"split curve set {self.path} is not UTF-8 text: invalid byte at offset {e.start}") from None
        except json.JSONDecodeError as e:
            raise SchemaError(
                f"split curve set {self.path} is not valid JSON: {e.msg} (line {e.lineno})"
            ) from None

        if not isinstance(raw, dict):
            raise SchemaError(f"split curve set {self.path} must be a JSON object")
        version = raw.get("schema_version")
        if version != SCHEMA_VERSION:
            raise SchemaError(
                f"unsupported schema_version {version!r} in {self.path}; expected {SCHEMA_VERSION}",
                field="schema_version",
                details={"expected": SCHEMA_VERSION, "found": version},
            )

        try:
            curve_set = SplitCurveSet.model_validate(raw)
        except ValidationError as e:
            field, msg = _first_error(e)
            raise SchemaError(f"invalid split curve set {self.path}: {field}: {msg}", field=field) from None
        logger.debug(f"Loaded {len(curve_set.curves)} split curves from {self.path}")
        return curve_set


def save_set(curve_set: SplitCurveSet, path: Union[str, Path]) -> Path:
    return SplitCurveSetRepository(path).save(curve_set)


def load_set(path: Union[str, Path]) -> SplitCurveSet:
    return SplitCurveSetRepository(path).load()

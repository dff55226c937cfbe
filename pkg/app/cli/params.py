"""
Parsers for list-valued options such as ``--n 1..16`` or ``--p 0.05,0.2``.
"""

from typing import List

import click


def _split(value: str) -> List[str]:
    parts = [p.strip() for p in value.split(",")]
    if not value.strip() or any(not p for p in parts):
        raise ValueError("empty list item")
    return parts


class IntListParam(click.ParamType):
    """Comma list of integers and inclusive ``a..b`` ranges."""

    name = "int-list"

    def __init__(self, minimum: int = 1):
        self.minimum = minimum

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        try:
            result = []
            for part in _split(value):
                if ".." in part:
                    lo, hi = (int(v) for v in part.split("..", 1))
                    if hi < lo:
                        raise ValueError(f"empty range {part}")
                    result.extend(range(lo, hi + 1))
                else:
                    result.append(int(part))
        except ValueError as e:
            self.fail(f"{value!r} is not a list of integers or a..b ranges ({e})", param, ctx)
        if any(v < self.minimum for v in result):
            self.fail(f"values must be >= {self.minimum}", param, ctx)
        return result


class FloatListParam(click.ParamType):
    """Comma list of floats within [minimum, maximum]."""

    name = "float-list"

    def __init__(self, minimum: float = None, maximum: float = None, open_minimum: bool = False):
        self.minimum = minimum
        self.maximum = maximum
        self.open_minimum = open_minimum

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        try:
            result = [float(p) for p in _split(value)]
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of numbers", param, ctx)
        for v in result:
            below = self.minimum is not None and (v <= self.minimum if self.open_minimum else v < self.minimum)
            above = self.maximum is not None and v > self.maximum
            if below or above:
                self.fail(f"{v} is outside the allowed range", param, ctx)
        return result


class VariantListParam(click.ParamType):
    """Salvage variants as ``premium_ns@boost`` pairs, e.g. ``50@0.5,200@1.0``."""

    name = "variant-list"

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        try:
            variants = []
            for part in _split(value):
                premium, boost = part.split("@", 1)
                variants.append((float(premium), float(boost)))
        except ValueError:
            self.fail(f"{value!r} is not a list of premium_ns@boost pairs", param, ctx)
        if any(p < 0 or b <= 0 for p, b in variants):
            self.fail("premiums must be >= 0 and boosts > 0", param, ctx)
        return variants

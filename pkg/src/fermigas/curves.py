"""Sampled universal curves and their CSV/JSON serialization.

Serialized output is byte-stable across runs: samples are written with 17
significant digits, which round-trips IEEE doubles exactly.
"""

import json
from dataclasses import dataclass

from .errors import DomainError

AXIS_LABELS = frozenset({"t", "s", "q", "m", "c", "msd", "density"})


@dataclass(frozen=True)
class UniversalCurve:
    """Ordered (x, y) table for one of the dimensionless universal figures."""

    x_label: str
    y_label: str
    samples: tuple

    def __post_init__(self):
        if self.x_label not in AXIS_LABELS or self.y_label not in AXIS_LABELS:
            raise DomainError(
                f"curve labels must come from {sorted(AXIS_LABELS)}, "
                f"got ({self.x_label!r}, {self.y_label!r})")
        if len(self.samples) == 0:
            raise DomainError("curve has no samples")
        xs = [x for x, _ in self.samples]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise DomainError("curve abscissa must be strictly increasing")

    def to_csv(self) -> str:
        lines = [f"{self.x_label},{self.y_label}"]
        lines.extend(f"{x:.17g},{y:.17g}" for x, y in self.samples)
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {
            "x_label": self.x_label,
            "y_label": self.y_label,
            "samples": [[x, y] for x, y in self.samples],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2) + "\n"


def parse_csv(text: str) -> UniversalCurve:
    """Round-trip reader for the CSV layout written by to_csv."""
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    if not lines:
        raise DomainError("empty curve file")
    x_label, y_label = (tok.strip() for tok in lines[0].split(","))
    samples = []
    for ln in lines[1:]:
        a, b = ln.split(",")
        samples.append((float(a), float(b)))
    return UniversalCurve(x_label, y_label, tuple(samples))


def render(curve: UniversalCurve, fmt: str) -> str:
    if fmt == "csv":
        return curve.to_csv()
    if fmt == "json":
        return curve.to_json()
    raise DomainError(f"unknown output format {fmt!r}")

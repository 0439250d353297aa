"""Parameter sweeps over SPE outcomes and Firm utility curves.

A sweep evaluates the equilibrium on a two-dimensional lattice of parameter
values.  Each axis range ``[lo, hi]`` is split into ``steps`` cells and the
game is solved at every cell centre, so an equilibrium boundary drawn from
the grid is accurate to half a cell.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .errors import DataShareError, SweepSpecError
from .kernels import onpath_utility
from .model import GameInstance, thresholds
from .spe import SpeOutcome, solve_spe
from .svg import heatmap_svg

SWEEPABLE = ("r_f", "r_g", "c", "m")
QUANTITIES = ("alpha", "x", "U", "V", "kind")
CSV_HEADER = ("axis1_value", "axis2_value", "alpha", "x", "U", "V", "kind", "case_id")


@dataclass(frozen=True)
class Axis:
    name: str
    lo: float
    hi: float
    steps: int

    def __post_init__(self) -> None:
        if self.name not in SWEEPABLE:
            raise SweepSpecError(f"axis {self.name!r} is not one of {SWEEPABLE}")
        if isinstance(self.steps, bool) or not isinstance(self.steps, int) or self.steps < 2:
            raise SweepSpecError(f"axis {self.name}: steps must be an integer >= 2, got {self.steps!r}")
        if not float(self.lo) < float(self.hi):
            raise SweepSpecError(f"axis {self.name}: need lo < hi, got [{self.lo}, {self.hi}]")

    def values(self) -> np.ndarray:
        width = (self.hi - self.lo) / self.steps
        return self.lo + (np.arange(self.steps) + 0.5) * width

    @property
    def cell_width(self) -> float:
        return (self.hi - self.lo) / self.steps

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "min": self.lo, "max": self.hi, "steps": self.steps}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> Axis:
        try:
            return cls(d["name"], float(d["min"]), float(d["max"]), d["steps"])
        except KeyError as exc:
            raise SweepSpecError(f"axis is missing field {exc}") from None


@dataclass(frozen=True)
class SweepSpec:
    base: GameInstance
    axis1: Axis
    axis2: Axis
    quantities: tuple[str, ...] = QUANTITIES

    def __post_init__(self) -> None:
        object.__setattr__(self, "quantities", tuple(self.quantities))
        if self.axis1.name == self.axis2.name:
            raise SweepSpecError("axis1 and axis2 must sweep different parameters")
        if not self.quantities:
            raise SweepSpecError("at least one quantity is required")
        unknown = set(self.quantities) - set(QUANTITIES)
        if unknown:
            raise SweepSpecError(f"unknown quantities {sorted(unknown)}")
        # construction invariants are monotone in each parameter, so the
        # corner cells bound every cell
        a, b = self.axis1.values(), self.axis2.values()
        for v1 in (a[0], a[-1]):
            for v2 in (b[0], b[-1]):
                try:
                    self.instance_at(v1, v2)
                except DataShareError as exc:
                    raise SweepSpecError(f"sweep leaves the valid parameter range: {exc}") from None

    def instance_at(self, v1: float, v2: float) -> GameInstance:
        return self.base.replace(**{self.axis1.name: float(v1), self.axis2.name: float(v2)})

    def to_dict(self) -> dict[str, Any]:
        return {
            "base": self.base.to_dict(),
            "axis1": self.axis1.to_dict(),
            "axis2": self.axis2.to_dict(),
            "quantities": list(self.quantities),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> SweepSpec:
        try:
            return cls(
                GameInstance.from_dict(d["base"]),
                Axis.from_dict(d["axis1"]),
                Axis.from_dict(d["axis2"]),
                tuple(d.get("quantities", QUANTITIES)),
            )
        except KeyError as exc:
            raise SweepSpecError(f"sweep spec is missing field {exc}") from None

    @classmethod
    def from_json(cls, path: str | Path) -> SweepSpec:
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


@dataclass
class SweepGrid:
    """Row-major cells: ``cells[i][j]`` pairs axis1 value ``i`` with axis2 value ``j``."""

    spec: SweepSpec
    axis1_values: np.ndarray
    axis2_values: np.ndarray
    cells: list[list[SpeOutcome]] = field(repr=False)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.axis1_values), len(self.axis2_values)

    def matrix(self, quantity: str) -> np.ndarray:
        """Matrix of one quantity; ``kind`` yields an object array of labels."""
        getters = {
            "alpha": lambda o: o.alpha,
            "x": lambda o: o.x,
            "U": lambda o: o.firm_utility,
            "V": lambda o: o.genai_utility,
            "kind": lambda o: o.kind.value,
        }
        if quantity not in getters:
            raise SweepSpecError(f"unknown quantity {quantity!r}")
        get = getters[quantity]
        dtype = object if quantity == "kind" else np.float64
        return np.array([[get(o) for o in row] for row in self.cells], dtype=dtype)


def run_sweep(spec: SweepSpec) -> SweepGrid:
    a, b = spec.axis1.values(), spec.axis2.values()
    cells = [[solve_spe(spec.instance_at(v1, v2)) for v2 in b] for v1 in a]
    return SweepGrid(spec, a, b, cells)


def utility_curve(inst: GameInstance, steps: int) -> list[tuple[float, float, float]]:
    """Firm utility under GenAI's best reply, as ``(alpha, U, x_reply)`` rows.

    The even grid is augmented with both thresholds (clamped to [0, 1]) so
    the jump at GenAI's indifference point and the interior peak are hit
    exactly.
    """
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 2:
        raise SweepSpecError(f"steps must be an integer >= 2, got {steps!r}")
    th = thresholds(inst)
    extra = [min(max(v, 0.0), 1.0) for v in (th.r_g_threshold, th.r_f_threshold)]
    alphas = np.unique(np.concatenate([np.linspace(0.0, 1.0, steps), extra]))
    u = onpath_utility(alphas, inst.r_f, inst.m, inst.gamma, th.r_g_threshold)
    x = np.where(alphas < th.r_g_threshold, 1.0 - alphas, 0.0)
    return [(float(a), float(ui), float(xi)) for a, ui, xi in zip(alphas, u, x)]


def fmt(v: float) -> str:
    """Twelve significant digits; keeps emitted files stable across platforms."""
    return format(float(v), ".12g")


def emit_csv(grid: SweepGrid, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        write_csv(grid, fh)


def write_csv(grid: SweepGrid, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for v1, row in zip(grid.axis1_values, grid.cells):
        for v2, o in zip(grid.axis2_values, row):
            w.writerow(
                [fmt(v1), fmt(v2), fmt(o.alpha), fmt(o.x), fmt(o.firm_utility), fmt(o.genai_utility), o.kind.value, o.case_id]
            )


def emit_heatmap(grid: SweepGrid, quantity: str, path: str | Path) -> None:
    if quantity not in grid.spec.quantities:
        raise SweepSpecError(f"quantity {quantity!r} was not requested by the sweep spec")
    svg = heatmap_svg(
        grid.matrix(quantity),
        x_values=grid.axis1_values,
        y_values=grid.axis2_values,
        x_label=grid.spec.axis1.name,
        y_label=grid.spec.axis2.name,
        title=quantity,
        discrete=quantity == "kind",
    )
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(svg)


def write_curve_csv(rows: Sequence[tuple[float, float, float]], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(("alpha", "U", "x_reply"))
    for a, u, x in rows:
        w.writerow([fmt(a), fmt(u), fmt(x)])

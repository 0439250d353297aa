"""Game parameters, feasible actions, traffic and the two utility functions.

The Firm (leader) shares a fraction ``alpha`` of its data; GenAI (follower)
then buys ``x <= 1 - alpha`` units of expert data.  Traffic to the Firm is

    T(alpha, x) = 1 - alpha - x + gamma * alpha * x

which factorises as ``(1 - alpha)(1 - x)`` when ``gamma == 1``.
"""

from __future__ import annotations

import dataclasses
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .errors import InfeasibleProfileError, InvalidInstanceError

FEASIBILITY_TOL = 1e-9

PARAMETER_NAMES = ("r_f", "r_g", "c", "m", "gamma")


@dataclass(frozen=True)
class GameInstance:
    """One data-sharing game.

    Attributes:
        r_f: Firm's reward per unit of user traffic.
        r_g: GenAI's reward per unit of user traffic.
        c: Expert cost per unit of data.
        m: Per-unit price paid by GenAI to the Firm for shared data; negative
            when the Firm pays to share.
        gamma: Overlap between Firm data and expert data, in (0, 1].
    """

    r_f: float
    r_g: float
    c: float
    m: float
    gamma: float = 1.0

    def __post_init__(self) -> None:
        for name in PARAMETER_NAMES:
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InvalidInstanceError(f"{name} must be a real number, got {value!r}")
            if not math.isfinite(value):
                raise InvalidInstanceError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, float(value))
        if self.r_f <= 0:
            raise InvalidInstanceError(f"r_f must be > 0, got {self.r_f}")
        if self.r_g <= 0:
            raise InvalidInstanceError(f"r_g must be > 0, got {self.r_g}")
        if self.c <= 0:
            raise InvalidInstanceError(f"c must be > 0, got {self.c}")
        # gamma == 0 makes both stages linear and the threshold formulas divide by it
        if not 0.0 < self.gamma <= 1.0:
            raise InvalidInstanceError(f"gamma must lie in (0, 1], got {self.gamma}")

    def replace(self, **changes: float) -> GameInstance:
        return dataclasses.replace(self, **changes)

    def scaled(self, k: float) -> GameInstance:
        """Scale all monetary parameters (r_f, r_g, c, m) by ``k > 0``."""
        return dataclasses.replace(
            self, r_f=self.r_f * k, r_g=self.r_g * k, c=self.c * k, m=self.m * k
        )

    def to_dict(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in PARAMETER_NAMES}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> GameInstance:
        unknown = set(data) - set(PARAMETER_NAMES)
        if unknown:
            raise InvalidInstanceError(f"unknown instance fields: {sorted(unknown)}")
        missing = [name for name in ("r_f", "r_g", "c", "m") if name not in data]
        if missing:
            raise InvalidInstanceError(f"missing instance fields: {missing}")
        return cls(
            r_f=data["r_f"],
            r_g=data["r_g"],
            c=data["c"],
            m=data["m"],
            gamma=data.get("gamma", 1.0),
        )

    @classmethod
    def from_json(cls, path: str | Path) -> GameInstance:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise InvalidInstanceError("instance JSON must be an object")
        return cls.from_dict(data)


@dataclass(frozen=True)
class ActionProfile:
    """A feasible pair ``(alpha, x)`` with ``x <= 1 - alpha``.

    Values within ``FEASIBILITY_TOL`` of the feasible set are clamped onto it,
    so grid endpoints damaged by rounding are still accepted.
    """

    alpha: float
    x: float

    def __post_init__(self) -> None:
        alpha, x = float(self.alpha), float(self.x)
        if not (math.isfinite(alpha) and math.isfinite(x)):
            raise InfeasibleProfileError(f"non-finite profile ({alpha}, {x})")
        if alpha < -FEASIBILITY_TOL or alpha > 1.0 + FEASIBILITY_TOL:
            raise InfeasibleProfileError(f"alpha={alpha} outside [0, 1]")
        alpha = min(max(alpha, 0.0), 1.0)
        if x < -FEASIBILITY_TOL or x > 1.0 - alpha + FEASIBILITY_TOL:
            raise InfeasibleProfileError(f"x={x} outside [0, 1 - alpha] for alpha={alpha}")
        x = min(max(x, 0.0), 1.0 - alpha)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "x", x)


@dataclass(frozen=True)
class Thresholds:
    r_g_threshold: float
    r_f_threshold: float
    regular: bool


def _as_profile(a: ActionProfile | tuple[float, float]) -> ActionProfile:
    if isinstance(a, ActionProfile):
        return a
    alpha, x = a
    return ActionProfile(alpha, x)


def traffic(inst: GameInstance, a: ActionProfile | tuple[float, float]) -> float:
    """Share of users who stay with the Firm."""
    p = _as_profile(a)
    return 1.0 - p.alpha - p.x + inst.gamma * p.alpha * p.x


def firm_utility(inst: GameInstance, a: ActionProfile | tuple[float, float]) -> float:
    p = _as_profile(a)
    return traffic(inst, p) * inst.r_f + inst.m * p.alpha


def genai_utility(inst: GameInstance, a: ActionProfile | tuple[float, float]) -> float:
    p = _as_profile(a)
    return (1.0 - traffic(inst, p)) * inst.r_g - inst.c * p.x - inst.m * p.alpha


def thresholds(inst: GameInstance) -> Thresholds:
    """GenAI's indifference threshold and the Firm's forced-completion level.

    ``r_g_threshold`` is the sharing level at which GenAI is indifferent
    between completing its dataset with expert data and buying nothing;
    ``r_f_threshold`` is the Firm's unconstrained optimum when GenAI always
    completes its dataset.
    """
    g = inst.gamma
    rg = (inst.r_g - inst.c) / (g * inst.r_g)
    rf = (g * inst.r_f + inst.m) / (2.0 * g * inst.r_f)
    return Thresholds(rg, rf, 0.0 <= rg <= 1.0 and 0.0 <= rf <= 1.0)

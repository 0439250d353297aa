"""Designer's price choice: maximise ``alpha + lam * x`` at the induced SPE
over prices ``m`` in ``[-r_f, r_f]``."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UnsupportedParameterError
from .intervals import Interval, PriceIntervalSet
from .model import GameInstance
from .spe import Kind, boundary_price, solve_spe

NUMERIC_GRID = 20_001
NUMERIC_TIE_TOL = 1e-12


@dataclass(frozen=True)
class PricingSolution:
    optimal_prices: PriceIntervalSet
    objective_value: float
    lam: float
    method: str
    representative: float

    def to_dict(self) -> dict:
        return {
            **self.optimal_prices.to_dict(),
            "objective_value": self.objective_value,
            "lambda": self.lam,
            "method": self.method,
            "representative": self.representative,
        }


def objective(inst: GameInstance, lam: float) -> float:
    if not lam >= 0.0:
        raise DomainError(f"lambda must be >= 0, got {lam}")
    eq = solve_spe(inst)
    return eq.alpha + lam * eq.x


def _snap_to_forced(r_f: float, r_g: float, c: float, m: float) -> float:
    # the boundary is a tie the solver resolves toward forced completion;
    # rounding in m can land one ulp on the wrong side
    step = math.ulp(r_f)
    for j in range(64):
        cand = m - step * (2**j - 1)
        if solve_spe(GameInstance(r_f, r_g, c, cand)).kind is Kind.FORCED_COMPLETION:
            return cand
    raise AssertionError("boundary price did not resolve to forced completion")  # pragma: no cover


def optimal_price_closed_form(r_f: float, r_g: float, c: float, lam: float, gamma: float = 1.0) -> PricingSolution:
    """Full optimal price set for ``gamma == 1`` with ``0 <= R_G <= 1``."""
    if not lam >= 0.0:
        raise DomainError(f"lambda must be >= 0, got {lam}")
    base = GameInstance(r_f, r_g, c, 0.0, gamma)
    r_f, r_g, c, gamma = base.r_f, base.r_g, base.c, base.gamma
    if gamma != 1.0:
        raise UnsupportedParameterError("closed-form pricing requires gamma == 1")
    if c > r_g:
        raise UnsupportedParameterError("closed-form pricing requires c <= r_g")

    if r_g < 2.0 * c:
        # forced completion never occurs and the threshold does not move with m
        prices = PriceIntervalSet.of([Interval.closed(-r_f, r_f)])
    else:
        mb = boundary_price(r_f, r_g, c)
        if lam > 1.0:
            prices = PriceIntervalSet.of([Interval.point(-r_f)])
        elif lam == 1.0:
            # every forced-completion price gives alpha + x = 1
            prices = PriceIntervalSet.of([Interval.closed(-r_f, _snap_to_forced(r_f, r_g, c, mb))])
        elif lam > 0.5:
            prices = PriceIntervalSet.of([Interval.point(_snap_to_forced(r_f, r_g, c, mb))])
        elif lam == 0.5:
            prices = PriceIntervalSet.of([Interval.closed(mb, r_f)])
        else:
            prices = PriceIntervalSet.of([Interval(mb, False, r_f, True)])

    rep = prices.intervals[0].midpoint
    value = objective(GameInstance(r_f, r_g, c, rep, gamma), lam)
    return PricingSolution(prices, value, lam, "closed_form", rep)


def optimal_price_numeric(
    r_f: float, r_g: float, c: float, lam: float, gamma: float = 1.0, grid_points: int = NUMERIC_GRID
) -> PricingSolution:
    """Grid search over prices; maximisers are merged into closed runs."""
    if not lam >= 0.0:
        raise DomainError(f"lambda must be >= 0, got {lam}")
    base = GameInstance(r_f, r_g, c, 0.0, gamma)
    r_f, r_g, c, gamma = base.r_f, base.r_g, base.c, base.gamma
    ms = np.linspace(-r_f, r_f, grid_points)
    vals = np.array([objective(GameInstance(r_f, r_g, c, float(m), gamma), lam) for m in ms])
    best = float(vals.max())
    hit = np.flatnonzero(vals >= best - NUMERIC_TIE_TOL)
    runs = []
    start = prev = int(hit[0])
    for i in map(int, hit[1:]):
        if i != prev + 1:
            runs.append((start, prev))
            start = i
        prev = i
    runs.append((start, prev))
    prices = PriceIntervalSet.of([Interval.closed(float(ms[a]), float(ms[b])) for a, b in runs])
    rep = float(ms[hit[len(hit) // 2]])
    return PricingSolution(prices, best, lam, "numeric", rep)


def optimal_price(r_f: float, r_g: float, c: float, lam: float, gamma: float = 1.0) -> PricingSolution:
    """Closed form where it applies, grid search otherwise (flagged ``numeric``)."""
    if gamma == 1.0 and c <= r_g:
        return optimal_price_closed_form(r_f, r_g, c, lam, gamma)
    return optimal_price_numeric(r_f, r_g, c, lam, gamma)

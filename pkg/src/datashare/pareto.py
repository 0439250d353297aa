"""Prices at which data sharing weakly improves both players.

The reference point is the no-sharing outcome: the Firm keeps ``alpha = 0``
and GenAI best-responds.  A price is Pareto improving when the equilibrium
gives both players at least their reference utilities.
"""

from __future__ import annotations

from .errors import UnsupportedParameterError
from .intervals import Interval, PriceIntervalSet
from .model import ActionProfile, GameInstance, firm_utility, genai_utility
from .spe import best_response, solve_spe

PARETO_SLACK = 1e-12


def pareto_baseline(inst: GameInstance) -> tuple[float, float]:
    """Utilities ``(U0, V0)`` when the Firm shares nothing."""
    p = ActionProfile(0.0, best_response(inst, 0.0))
    return firm_utility(inst, p), genai_utility(inst, p)


def is_pareto_improving(inst: GameInstance) -> bool:
    u0, v0 = pareto_baseline(inst)
    eq = solve_spe(inst)
    return eq.firm_utility >= u0 - PARETO_SLACK and eq.genai_utility >= v0 - PARETO_SLACK


def pareto_price_set(r_f: float, r_g: float, c: float, gamma: float = 1.0) -> PriceIntervalSet:
    """Closed-form set of Pareto-improving prices.

    For ``gamma == 1`` this is the exact union of the prices sustaining the
    threshold equilibrium and those sustaining forced completion.  For
    ``gamma < 1`` only a single interval of prices guaranteed to improve is
    available; it is not claimed to be the whole set.
    """
    # reuse construction-time validation; m is irrelevant here
    base = GameInstance(r_f, r_g, c, 0.0, gamma)
    r_f, r_g, c, gamma = base.r_f, base.r_g, base.c, base.gamma
    rg = (r_g - c) / (gamma * r_g)
    if rg <= 0.0:
        return PriceIntervalSet()
    if gamma == 1.0:
        return _price_set_full_overlap(r_f, r_g, c, rg)
    if rg > 1.0:
        raise UnsupportedParameterError(
            f"indifference threshold {rg:g} > 1: no closed-form Pareto set outside the regular regime"
        )
    return _price_set_partial_overlap(r_f, r_g, c, gamma, rg)


def _price_set_full_overlap(r_f: float, r_g: float, c: float, rg: float) -> PriceIntervalSet:
    mb = r_f * (4.0 * rg - 3.0)
    out = []

    # Threshold equilibrium: holds strictly above mb; Firm needs
    # m >= -r_f (1 - rg) / rg and GenAI needs m <= 0.
    firm_floor = -r_f * (1.0 - rg) / rg
    lo = max(-r_f, firm_floor, mb)
    lo_closed = lo > mb
    if Interval.is_nonempty(lo, lo_closed, 0.0, True):
        out.append(Interval(lo, lo_closed, 0.0, True))

    # Forced completion: holds at or below mb; GenAI's participation
    # condition flips direction with the sign of r_g - 2 r_f.
    if r_g < 2.0 * r_f:
        hi = min(r_f * (r_g - 2.0 * c) / (r_g - 2.0 * r_f), mb)
    elif r_g == 2.0 * r_f:
        # the condition loses its m-dependence: 0 >= r_f (r_g - 2c)
        hi = mb if r_g <= 2.0 * c else None
    else:
        hi = None
    if hi is not None and Interval.is_nonempty(-r_f, True, hi, True):
        out.append(Interval.closed(-r_f, hi))

    return PriceIntervalSet.of(out)


def _price_set_partial_overlap(
    r_f: float, r_g: float, c: float, gamma: float, rg: float
) -> PriceIntervalSet:
    genai_forced = r_f * (gamma * r_g - 2.0 * c) / (r_g - 2.0 * r_f) if r_g != 2.0 * r_f else None
    upper = [gamma * r_f, r_g * (1.0 - gamma), r_f * (gamma * r_g + 2.0 * c) / (r_g + 2.0 * r_f)]
    lower = [-gamma * r_f, -r_f * (1.0 - rg) / rg]
    if genai_forced is not None:
        (upper if r_g < 2.0 * r_f else lower).append(genai_forced)
    lo, hi = max(lower), min(upper)
    if lo > hi:
        return PriceIntervalSet()
    return PriceIntervalSet.of([Interval.closed(lo, hi)])

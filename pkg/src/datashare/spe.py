"""Closed-form subgame perfect equilibrium of the data-sharing game.

GenAI's utility is affine in ``x`` at fixed ``alpha``, so its best reply is
an endpoint of ``[0, 1 - alpha]``.  The Firm's on-path utility is then
concave-quadratic below GenAI's indifference threshold and affine above it,
which leaves five possible on-path profiles.  ``solve_spe`` walks the full
case table in a fixed order; the first matching branch wins.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DomainError, UnsupportedParameterError
from .model import ActionProfile, GameInstance, firm_utility, genai_utility, thresholds


class Kind(str, enum.Enum):
    FULL_SHARE = "FullShare"
    NO_INTERACTION = "NoInteraction"
    EXPERT_ONLY = "ExpertOnly"
    INDIFFERENCE_POINT = "IndifferencePoint"
    FORCED_COMPLETION = "ForcedCompletion"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SpeOutcome:
    profile: ActionProfile
    firm_utility: float
    genai_utility: float
    kind: Kind
    case_id: str

    @property
    def alpha(self) -> float:
        return self.profile.alpha

    @property
    def x(self) -> float:
        return self.profile.x

    def to_dict(self) -> dict[str, float | str]:
        return {
            "alpha": self.alpha,
            "x": self.x,
            "U": self.firm_utility,
            "V": self.genai_utility,
            "kind": self.kind.value,
            "case_id": self.case_id,
        }


def best_response(inst: GameInstance, alpha: float) -> float:
    """GenAI's expert purchase after observing ``alpha``.

    Buys ``1 - alpha`` strictly below the indifference threshold and nothing
    at or above it (indifference resolves to the smaller purchase).
    """
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha={alpha} outside [0, 1]")
    if alpha < thresholds(inst).r_g_threshold:
        return 1.0 - alpha
    return 0.0


def _outcome(inst: GameInstance, alpha: float, x: float, kind: Kind, case_id: str) -> SpeOutcome:
    p = ActionProfile(alpha, x)
    return SpeOutcome(p, firm_utility(inst, p), genai_utility(inst, p), kind, case_id)


def solve_spe(inst: GameInstance) -> SpeOutcome:
    """Unique on-path SPE outcome for any valid instance, regular or not.

    Leader ties resolve to the smaller sharing level throughout; in
    particular at ``m == r_f`` the Firm is indifferent over the whole
    post-threshold segment and keeps the threshold itself.
    """
    th = thresholds(inst)
    rg, rf = th.r_g_threshold, th.r_f_threshold
    r_f, r_g, c, m, g = inst.r_f, inst.r_g, inst.c, inst.m, inst.gamma

    # Firm's utility at the two interior candidates
    u_rg = r_f + rg * (m - r_f)
    u_rf = (g * r_f + m) ** 2 / (4.0 * g * r_f)

    def full_share(case_id: str) -> SpeOutcome:
        return _outcome(inst, 1.0, 0.0, Kind.FULL_SHARE, case_id)

    def at_threshold(case_id: str) -> SpeOutcome:
        return _outcome(inst, rg, 0.0, Kind.INDIFFERENCE_POINT, case_id)

    def forced(case_id: str) -> SpeOutcome:
        return _outcome(inst, rf, 1.0 - rf, Kind.FORCED_COMPLETION, case_id)

    if m > r_f:
        return full_share("full_share/price_above_rf")
    if rg >= 1.0 and m >= g * r_f:
        return full_share("full_share/threshold_ge_1")

    if c > r_g:
        return _outcome(inst, 0.0, 0.0, Kind.NO_INTERACTION, "no_interaction/cost_above_rg")

    if rg >= 1.0 and m < -g * r_f:
        return _outcome(inst, 0.0, 1.0, Kind.EXPERT_ONLY, "expert_only/threshold_ge_1")
    if 1.0 > rg >= 0.0 and m < -g * r_f and u_rg <= 0.0:
        return _outcome(inst, 0.0, 1.0, Kind.EXPERT_ONLY, "expert_only/threshold_loses_to_zero")

    if 1.0 > rg > rf >= 0.0 and u_rg > u_rf:
        return at_threshold("indifference/threshold_beats_forced")
    if 1.0 > rg > 0.0 > rf and u_rg > 0.0:
        return at_threshold("indifference/forced_negative")
    if 1.0 > rg >= 0.0 and g * r_f <= m <= r_f:
        return at_threshold("indifference/price_in_gamma_band")
    if 1.0 > rf >= rg >= 0.0:
        return at_threshold("indifference/forced_above_threshold")

    if rg >= 1.0 > rf >= 0.0:
        return forced("forced/threshold_ge_1")
    if 1.0 > rg > rf >= 0.0 and u_rg <= u_rf:
        return forced("forced/forced_beats_threshold")

    # c == r_g with m < -gamma r_f: expert data is never bought, and the
    # Firm's post-threshold utility decreases from alpha = 0
    if rg == 0.0 and rf < 0.0:
        return at_threshold("indifference/zero_threshold_forced_negative")

    raise AssertionError(f"case table is not total at {inst!r}")  # pragma: no cover


def boundary_price(r_f: float, r_g: float, c: float, gamma: float = 1.0) -> float:
    """Price at which the equilibrium switches between the threshold profile
    and forced completion; forced completion holds iff ``m`` is at or below it.

    Only the ``gamma == 1`` form is available.
    """
    if gamma != 1.0:
        raise UnsupportedParameterError("boundary_price is defined for gamma == 1 only")
    rg = (r_g - c) / r_g
    return r_f * (4.0 * rg - 3.0)

"""Brute-force validator for the closed-form solver.

The leader's sharing level is searched exhaustively on an even grid.  For
each grid point the follower's reply is computed exactly by comparing its
utility at both endpoints of ``[0, 1 - alpha]``; nothing here uses the
threshold formulas except the optional injection of the two analytic
candidates into the grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import OracleConfigError
from .kernels import leader_scan
from .model import ActionProfile, GameInstance, firm_utility, genai_utility, thresholds
from .spe import Kind, SpeOutcome, best_response, solve_spe

# relative slack under which the follower's two endpoints count as a tie
FOLLOWER_TIE_RTOL = 1e-12


@dataclass(frozen=True)
class OracleConfig:
    grid_points: int = 10_001
    include_analytic_candidates: bool = True

    def __post_init__(self) -> None:
        if isinstance(self.grid_points, bool) or not isinstance(self.grid_points, int):
            raise OracleConfigError(f"grid_points must be an integer, got {self.grid_points!r}")
        if self.grid_points < 2:
            raise OracleConfigError(f"grid_points must be >= 2, got {self.grid_points}")


def leader_grid(inst: GameInstance, cfg: OracleConfig) -> np.ndarray:
    alphas = np.linspace(0.0, 1.0, cfg.grid_points)
    if cfg.include_analytic_candidates:
        th = thresholds(inst)
        extra = [min(max(v, 0.0), 1.0) for v in (th.r_g_threshold, th.r_f_threshold)]
        alphas = np.unique(np.concatenate([alphas, extra]))
    return alphas


def _infer_kind(inst: GameInstance, alpha: float, x: float) -> Kind:
    th = thresholds(inst)
    rf = min(max(th.r_f_threshold, 0.0), 1.0)
    families = [
        (Kind.FULL_SHARE, (1.0, 0.0)),
        (Kind.NO_INTERACTION, (0.0, 0.0)),
        (Kind.EXPERT_ONLY, (0.0, 1.0)),
        (Kind.INDIFFERENCE_POINT, (min(max(th.r_g_threshold, 0.0), 1.0), 0.0)),
        (Kind.FORCED_COMPLETION, (rf, 1.0 - rf)),
    ]
    # first family wins among equally close ones
    best = min(families, key=lambda kv: abs(kv[1][0] - alpha) + abs(kv[1][1] - x))
    return best[0]


def oracle_spe(inst: GameInstance, cfg: OracleConfig | None = None) -> SpeOutcome:
    """SPE by exhaustive leader search with exact follower replies."""
    cfg = OracleConfig() if cfg is None else cfg
    alphas = leader_grid(inst, cfg)
    tie_tol = FOLLOWER_TIE_RTOL * (inst.r_g + inst.c + abs(inst.m))
    i, _, x = leader_scan(alphas, inst.r_f, inst.r_g, inst.c, inst.m, inst.gamma, tie_tol)
    p = ActionProfile(float(alphas[i]), x)
    return SpeOutcome(
        p,
        firm_utility(inst, p),
        genai_utility(inst, p),
        _infer_kind(inst, p.alpha, p.x),
        f"oracle/grid_{cfg.grid_points}",
    )


def oracle_pareto(
    r_f: float, r_g: float, c: float, m_grid: Iterable[float], gamma: float = 1.0
) -> list[tuple[float, bool]]:
    """Pareto-improvement flag for every price in ``m_grid``, by substitution."""
    out = []
    for m in m_grid:
        inst = GameInstance(r_f, r_g, c, float(m), gamma)
        eq = solve_spe(inst)
        base = ActionProfile(0.0, best_response(inst, 0.0))
        u0, v0 = firm_utility(inst, base), genai_utility(inst, base)
        ok = eq.firm_utility >= u0 - 1e-12 and eq.genai_utility >= v0 - 1e-12
        out.append((float(m), ok))
    return out


# ---------------------------------------------------------------- comparisons


def random_instances(
    rng: np.random.Generator, n: int, gammas: Sequence[float] = (0.25, 0.5, 1.0)
) -> list[GameInstance]:
    """Instances spread across every branch of the case table.

    Prices are drawn from ``[-2 r_f, 2 r_f]`` and costs from ``(0, 1.5 r_g)``
    so both regular and non-regular regimes occur.  Draws that sit within
    rounding distance of a leader tie are redrawn: at an exact tie the SPE
    and the grid search may legitimately pick different maximisers.
    """
    out: list[GameInstance] = []
    while len(out) < n:
        r_f = rng.uniform(0.2, 3.0)
        r_g = rng.uniform(0.2, 3.0)
        c = rng.uniform(0.0, 1.5) * r_g
        m = rng.uniform(-2.0, 2.0) * r_f
        gamma = float(rng.choice(gammas))
        if c <= 0.0:
            continue
        inst = GameInstance(r_f, r_g, c, m, gamma)
        if _near_leader_tie(inst):
            continue
        out.append(inst)
    return out


def _near_leader_tie(inst: GameInstance, tol: float = 1e-9) -> bool:
    th = thresholds(inst)
    rg, g = th.r_g_threshold, inst.gamma
    u_rg = inst.r_f + rg * (inst.m - inst.r_f)
    u_rf = (g * inst.r_f + inst.m) ** 2 / (4.0 * g * inst.r_f)
    scale = tol * max(1.0, inst.r_f)
    critical = (inst.r_f, g * inst.r_f, -g * inst.r_f)
    if any(abs(inst.m - p) < scale for p in critical):
        return True
    return abs(u_rg - u_rf) < scale or abs(u_rg) < scale


@dataclass
class OracleReport:
    instances: int
    max_alpha_err: float
    max_U_err: float
    failures: list[dict]

    def to_dict(self) -> dict:
        return {
            "instances": self.instances,
            "max_alpha_err": self.max_alpha_err,
            "max_U_err": self.max_U_err,
            "failures": self.failures,
        }


def compare_with_oracle(instances: Iterable[GameInstance], cfg: OracleConfig | None = None) -> OracleReport:
    """Closed form vs brute force on every instance.

    Tolerances: ``|d alpha| <= 2 / grid_points`` and
    ``|d U| <= 1e-6 * max(1, r_f)``.
    """
    cfg = OracleConfig() if cfg is None else cfg
    alpha_tol = 2.0 / cfg.grid_points
    count, max_da, max_du = 0, 0.0, 0.0
    failures = []
    for inst in instances:
        count += 1
        eq = solve_spe(inst)
        ref = oracle_spe(inst, cfg)
        da = abs(eq.alpha - ref.alpha)
        du = abs(eq.firm_utility - ref.firm_utility)
        max_da, max_du = max(max_da, da), max(max_du, du)
        if da > alpha_tol or du > 1e-6 * max(1.0, inst.r_f):
            failures.append(
                {
                    "instance": inst.to_dict(),
                    "closed_form": eq.to_dict(),
                    "oracle": ref.to_dict(),
                }
            )
    return OracleReport(count, max_da, max_du, failures)

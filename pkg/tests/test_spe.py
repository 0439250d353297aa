import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from datashare import (
    DomainError,
    GameInstance,
    Kind,
    UnsupportedParameterError,
    best_response,
    boundary_price,
    firm_utility,
    genai_utility,
    solve_spe,
    thresholds,
)


def test_ref_instance_equilibrium(ref_instance):
    eq = solve_spe(ref_instance)
    assert eq.alpha == pytest.approx(0.68, abs=1e-12)
    assert eq.x == 0.0
    assert eq.firm_utility == pytest.approx(0.252, abs=1e-12)
    assert eq.genai_utility == pytest.approx(0.748, abs=1e-12)
    assert eq.kind is Kind.INDIFFERENCE_POINT


def test_ref_instance_best_responses(ref_instance):
    assert best_response(ref_instance, 0.0) == 1.0
    assert best_response(ref_instance, 0.68) == 0.0
    rg = thresholds(ref_instance).r_g_threshold
    assert best_response(ref_instance, rg) == 0.0
    assert best_response(ref_instance, np.nextafter(rg, 0)) == pytest.approx(1 - rg)


def test_best_response_negative_threshold():
    inst = GameInstance(1, 1, 2, 0)
    assert all(best_response(inst, a) == 0.0 for a in np.linspace(0, 1, 11))


def test_best_response_domain():
    inst = GameInstance(1, 1, 0.5, 0)
    with pytest.raises(DomainError):
        best_response(inst, -0.1)
    with pytest.raises(DomainError):
        best_response(inst, 1.1)


@pytest.mark.parametrize(
    "params, profile, kind",
    [
        ((1, 1, 1.5, 0.5), (0.0, 0.0), Kind.NO_INTERACTION),
        ((1, 1, 0.5, 1.5), (1.0, 0.0), Kind.FULL_SHARE),
        # oracle-confirmed: (r_f + m)^2 / 4 r_f = 0.0025 beats U(R_G, 0) = -0.71
        ((1, 1, 0.1, -0.9), (0.05, 0.95), Kind.FORCED_COMPLETION),
        # oracle-confirmed: U(R_G, 0) = -1.25 <= 0 and m < -r_f
        ((1, 1, 0.1, -1.5), (0.0, 1.0), Kind.EXPERT_ONLY),
    ],
)
def test_case_table_examples(params, profile, kind):
    eq = solve_spe(GameInstance(*params))
    assert eq.alpha == pytest.approx(profile[0], abs=1e-12)
    assert eq.x == pytest.approx(profile[1], abs=1e-12)
    assert eq.kind is kind


def test_to_dict_keys(ref_instance):
    d = solve_spe(ref_instance).to_dict()
    assert set(d) == {"alpha", "x", "U", "V", "kind", "case_id"}
    assert d["kind"] == "IndifferencePoint"


@pytest.mark.parametrize("c, expected", [(0.32, -0.28), (0.2, 0.2), (0.25, 0.0)])
def test_boundary_price_values(c, expected):
    assert boundary_price(1, 1, c) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("c", [0.32, 0.2])
def test_kind_flips_across_boundary(c):
    mb = boundary_price(1, 1, c)
    assert solve_spe(GameInstance(1, 1, c, mb - 1e-6)).kind is Kind.FORCED_COMPLETION
    assert solve_spe(GameInstance(1, 1, c, mb + 1e-6)).kind is Kind.INDIFFERENCE_POINT


def test_boundary_price_rejects_partial_overlap():
    with pytest.raises(UnsupportedParameterError):
        boundary_price(1, 1, 0.3, gamma=0.5)


def test_exact_leader_tie_at_rf_prefers_threshold():
    # at m = r_f the Firm is indifferent over [R_G, 1]; the smaller alpha wins
    eq = solve_spe(GameInstance(1, 1, 0.3, 1.0))
    assert eq.kind is Kind.INDIFFERENCE_POINT
    assert eq.alpha == pytest.approx(0.7)


def test_zero_threshold_with_low_price():
    eq = solve_spe(GameInstance(1, 1, 1, -1.5))
    assert (eq.alpha, eq.x) == (0.0, 0.0)


pos = st.floats(0.05, 5.0)


@st.composite
def instances(draw):
    r_f, r_g = draw(pos), draw(pos)
    c = draw(st.floats(0.01, 1.5)) * r_g
    m = draw(st.floats(-2, 2)) * r_f
    g = draw(st.sampled_from([0.25, 0.5, 0.8, 1.0]))
    return GameInstance(r_f, r_g, c, m, g)


@given(instances())
@settings(max_examples=400)
def test_outcome_consistency(inst):
    eq = solve_spe(inst)
    th = thresholds(inst)
    assert 0 <= eq.alpha <= 1 and 0 <= eq.x <= 1 - eq.alpha + 1e-12
    assert eq.x == best_response(inst, eq.alpha)
    expected = {
        Kind.FULL_SHARE: (1.0, 0.0),
        Kind.NO_INTERACTION: (0.0, 0.0),
        Kind.EXPERT_ONLY: (0.0, 1.0),
        Kind.INDIFFERENCE_POINT: (th.r_g_threshold, 0.0),
        Kind.FORCED_COMPLETION: (th.r_f_threshold, 1 - th.r_f_threshold),
    }[eq.kind]
    if eq.kind is Kind.INDIFFERENCE_POINT and th.r_g_threshold <= 0:
        expected = (0.0, 0.0)
    assert eq.alpha == pytest.approx(expected[0], abs=1e-12)
    assert eq.x == pytest.approx(expected[1], abs=1e-12)
    assert eq.firm_utility == pytest.approx(firm_utility(inst, eq.profile), abs=1e-12)
    assert eq.genai_utility == pytest.approx(genai_utility(inst, eq.profile), abs=1e-12)


@given(instances())
@settings(max_examples=200)
def test_leader_optimality_against_probes(inst):
    eq = solve_spe(inst)
    th = thresholds(inst)
    probes = list(np.linspace(0, 1, 2001)) + [
        min(max(v, 0.0), 1.0) for v in (0.0, 1.0, th.r_g_threshold, th.r_f_threshold)
    ]
    best = max(firm_utility(inst, (a, best_response(inst, a))) for a in probes)
    assert eq.firm_utility >= best - 1e-9 * inst.r_f


@given(instances())
@settings(max_examples=300)
def test_follower_optimality(inst):
    eq = solve_spe(inst)
    a = eq.alpha
    v0 = genai_utility(inst, (a, 0.0))
    v1 = genai_utility(inst, (a, 1 - a))
    assert eq.genai_utility >= max(v0, v1) - 1e-12
    if v1 <= v0:
        assert eq.x == 0.0


@given(instances(), st.floats(0.0, 1.0))
@settings(max_examples=300)
def test_follower_affine_in_x(inst, a):
    v0 = genai_utility(inst, (a, 0.0))
    v1 = genai_utility(inst, (a, 1 - a))
    vm = genai_utility(inst, (a, (1 - a) / 2))
    assert vm == pytest.approx((v0 + v1) / 2, rel=1e-12, abs=1e-12)

"""The Haar-weight linear program: model construction, exact solving, theorems."""

from fractions import Fraction as F

import pytest

from haargap.entropy import component_entropy_cap, haar_entropy
from haargap.rigidity import (
    BOUND_THM14,
    LPModel,
    RigidityProblem,
    build_lp,
    default_test_directions,
    extremal_vertex_report,
    inner_weight_formula,
    min_haar_weight,
    rigidity_problem,
    solve_lp,
    solve_min_haar,
    verify_solution,
)
from haargap.roots import build_type_a, cartan, weyl_orbit
from haargap.supports import CapacityError, enumerate_symmetric_closed, make_support
from util import brute_force_lp_minimum


def sl3_problem(beta, **kw):
    return rigidity_problem(3, "generic", beta, **kw)


def test_build_lp_sl3_shape_and_first_constraint():
    model = build_lp(sl3_problem(F(1, 2)))
    assert len(model.variables) == 5
    assert len(model.ge_rows) == 3
    assert model.variables == ("∅", "{±α_12}", "{±α_13}", "{±α_23}", "Δ")
    assert model.directions[0].coords == cartan(2, -1, -1).coords
    assert model.ge_rows[0] == (F(0), F(3), F(3), F(0), F(6))
    assert model.ge_rhs[0] == 3


def test_build_lp_rows_match_entropy_caps():
    rs = build_type_a(4)
    problem = rigidity_problem(4, "generic", F(1, 2))
    model = build_lp(problem)
    for X, row in zip(model.directions, model.ge_rows):
        for s, coeff in zip(model.supports, row):
            assert coeff == component_entropy_cap(rs, s, X)


def test_build_lp_beta_zero_is_trivially_feasible():
    model = build_lp(sl3_problem(F(0)))
    assert all(rhs == 0 for rhs in model.ge_rhs)
    assert solve_lp(model).optimum == 0


def test_build_lp_thm14_mode_equals_half_haar_at_extreme_directions():
    # every positive exponent of the default directions is equal, so the proved
    # floor coincides with half the Haar entropy
    a = build_lp(sl3_problem(F(1, 2)))
    b = build_lp(sl3_problem(F(0), bound_mode=BOUND_THM14))
    assert a.ge_rhs == b.ge_rhs
    assert a.ge_rows == b.ge_rows


def test_build_lp_validation_errors():
    rs = build_type_a(3)
    supports = tuple(enumerate_symmetric_closed(rs))
    directions = default_test_directions(3)
    no_full = tuple(s for s in supports if s.kind != "full")
    with pytest.raises(ValueError, match="Δ missing"):
        build_lp(RigidityProblem(rs, no_full, directions, F(1, 2)))
    doubled = supports + (supports[-1],)
    with pytest.raises(ValueError, match="more than once"):
        build_lp(RigidityProblem(rs, doubled, directions, F(1, 2)))
    with pytest.raises(ValueError, match="empty test set"):
        build_lp(RigidityProblem(rs, supports, (), F(1, 2)))
    with pytest.raises(ValueError, match="nonzero"):
        build_lp(RigidityProblem(rs, supports, (cartan(0, 0, 0),), F(1, 2)))
    with pytest.raises(ValueError, match="beta"):
        build_lp(RigidityProblem(rs, supports, directions, F(3, 2)))
    with pytest.raises(ValueError, match="bound mode"):
        build_lp(RigidityProblem(rs, supports, directions, F(1, 2), "nonsense"))


def test_solve_lp_sl3_theorem_vertex():
    _, model, solution = solve_min_haar(3, "generic", F(1, 2))
    assert solution.status == "optimal"
    assert solution.optimum == F(1, 4)
    by_label = {s.label: w for s, w in solution.weights.items()}
    assert by_label == {
        "∅": F(0),
        "{±α_12}": F(1, 4),
        "{±α_13}": F(1, 4),
        "{±α_23}": F(1, 4),
        "Δ": F(1, 4),
    }
    assert verify_solution(model, solution)
    valid_names = set(model.variables) | {f"surplus_{k}" for k in range(len(model.ge_rows))}
    assert solution.basis and set(solution.basis) <= valid_names


def test_solve_lp_single_support_families():
    # with Δ alone, the total-mass equality pins w_Δ = 1; adding ∅ lets the
    # entropy constraint bind instead and the optimum drops to 1/2
    rs = build_type_a(3)
    delta = make_support(rs, rs.full_mask())
    empty = make_support(rs, 0)
    directions = default_test_directions(3)
    only_delta = build_lp(RigidityProblem(rs, (delta,), directions, F(1, 2)))
    assert solve_lp(only_delta).optimum == 1
    with_empty = build_lp(RigidityProblem(rs, (empty, delta), directions, F(1, 2)))
    assert solve_lp(with_empty).optimum == F(1, 2)


@pytest.mark.parametrize("n", [3, 4])
def test_solve_lp_beta_one_forces_full_weight(n):
    # every proper support has a strictly smaller cap at some test direction
    problem = rigidity_problem(n, "generic", F(1))
    rs = problem.rs
    for s in problem.supports:
        if s.kind == "full":
            continue
        assert any(
            component_entropy_cap(rs, s, X) < haar_entropy(rs, X)
            for X in problem.test_directions
        )
    assert solve_lp(build_lp(problem)).optimum == 1


def test_solve_lp_infeasible_status():
    # a hand-built model whose single constraint exceeds what Δ can deliver
    rs = build_type_a(3)
    delta = make_support(rs, rs.full_mask())
    X = cartan(2, -1, -1)
    model = LPModel(
        variables=(delta.label,),
        supports=(delta,),
        directions=(X,),
        objective=(F(1),),
        ge_rows=((F(6),),),
        ge_rhs=(F(10),),
    )
    solution = solve_lp(model)
    assert solution.status == "infeasible"
    assert solution.optimum is None and solution.weights == {}


def test_min_haar_weight_theorem_values():
    assert min_haar_weight(3, "generic", F(1, 2)) == F(1, 4)
    assert min_haar_weight(4, "generic", F(1, 2) + F(1, 20)) == F(1, 10)
    assert min_haar_weight(3, "generic", F(1, 3) + F(1, 30)) == F(1, 20)
    assert min_haar_weight(5, "inner", F(1, 2)) == F(1, 2)
    assert min_haar_weight(6, "inner", F(1, 2)) == F(1, 6)


def test_min_haar_weight_input_validation():
    with pytest.raises(ValueError):
        min_haar_weight(2, "generic", F(1, 2))
    with pytest.raises(CapacityError):
        min_haar_weight(7, "generic", F(1, 2))
    with pytest.raises(CapacityError):
        min_haar_weight(13, "inner", F(1, 2))
    with pytest.raises(ValueError):
        min_haar_weight(4, "outer", F(1, 2))


def test_inner_weight_formula():
    assert [inner_weight_formula(n) for n in range(3, 13)] == [
        F(1, 2), F(1, 4), F(1, 2), F(1, 6), F(1, 2),
        F(1, 8), F(1, 3), F(1, 10), F(1, 2), F(1, 12),
    ]


def test_extremal_vertex_report_sl4():
    _, _, solution = solve_min_haar(4, "generic", F(1, 2))
    report = extremal_vertex_report(solution)
    assert report.optimum == 0
    assert report.haar_weight == 0
    assert len(report.entries) == 4
    for label, kind, weight in report.entries:
        assert kind == "block-partition"
        assert weight == F(1, 4)
        assert label.count(",") == 2  # a 3-element block plus a singleton


def test_extremal_vertex_report_sl3_and_delta_only():
    _, _, solution = solve_min_haar(3, "generic", F(1, 2))
    report = extremal_vertex_report(solution)
    assert {label for label, _, _ in report.entries} == {"{±α_12}", "{±α_13}", "{±α_23}", "Δ"}
    assert report.haar_weight == F(1, 4)

    rs = build_type_a(3)
    delta = make_support(rs, rs.full_mask())
    model = build_lp(RigidityProblem(rs, (delta,), default_test_directions(3), F(1, 2)))
    report = extremal_vertex_report(solve_lp(model))
    assert [e[0] for e in report.entries] == ["Δ"]

    infeasible = solve_lp(
        LPModel((delta.label,), (delta,), (cartan(2, -1, -1),), (F(1),), ((F(6),),), (F(10),))
    )
    with pytest.raises(ValueError):
        extremal_vertex_report(infeasible)


@pytest.mark.parametrize("n", [3, 4])
def test_monotonicity_in_beta(n):
    grid = [F(0), F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(1)]
    values = [min_haar_weight(n, "generic", b) for b in grid]
    assert all(a <= b for a, b in zip(values, values[1:]))


def test_orbit_sufficiency_inverse_flow():
    # adding the constraints of the inverse flow changes nothing: caps agree on
    # symmetric supports, so the extra rows duplicate existing ones
    for n in (3, 4):
        base = rigidity_problem(n, "generic", F(1, 2))
        orbit = default_test_directions(n)
        doubled = rigidity_problem(
            n, "generic", F(1, 2),
            test_directions=orbit + tuple(X.negated() for X in orbit),
        )
        m1 = build_lp(base)
        m2 = build_lp(doubled)
        k = len(orbit)
        for i, X in enumerate(orbit):
            assert m2.ge_rows[k + i] == tuple(
                component_entropy_cap(base.rs, s, X.negated()) for s in base.supports
            )
            assert m2.ge_rows[k + i] in m1.ge_rows  # -X duplicates some +Y row
        assert solve_lp(m1).optimum == solve_lp(m2).optimum


def test_verify_solution_rejects_corruption():
    _, model, solution = solve_min_haar(3, "generic", F(1, 2))
    assert verify_solution(model, solution)
    tampered_weights = dict(solution.weights)
    first = next(iter(tampered_weights))
    tampered_weights[first] += F(1, 100)
    tampered = type(solution)(solution.status, solution.optimum, tampered_weights, solution.basis)
    assert not verify_solution(model, tampered)


def test_bounds_sandwich_closed_forms_meet_lp():
    # the closed-form lower bounds coincide with the LP optimum on every
    # instance; a strict gap would be a finding, so it fails loudly here
    assert min_haar_weight(3, "generic", F(1, 2)) == F(1, 4)
    for eps in (F(0), F(1, 100), F(1, 20), F(1, 10)):
        assert min_haar_weight(4, "generic", F(1, 2) + eps) == 2 * eps
    for eps in (F(1, 30), F(1, 12)):
        assert min_haar_weight(3, "generic", F(1, 3) + eps) == F(3, 2) * eps
    for n in range(3, 13):
        assert min_haar_weight(n, "inner", F(1, 2)) == inner_weight_formula(n)


def test_lp_matches_brute_force_vertex_enumeration():
    # instances small enough for exhaustive vertex search
    small = [
        solve_min_haar(3, "generic", F(1, 2)),
        solve_min_haar(3, "generic", F(1, 3) + F(1, 30)),
        solve_min_haar(3, "inner", F(1, 2)),
        solve_min_haar(4, "inner", F(1, 2)),
        solve_min_haar(5, "inner", F(1, 2)),
    ]
    for _, model, solution in small:
        assert len(model.variables) <= 6
        assert brute_force_lp_minimum(model) == solution.optimum


def test_custom_test_directions_override():
    X = cartan(1, 0, -1)
    _, model, _ = solve_min_haar(3, "generic", F(1, 2), test_directions=[X])
    assert len(model.ge_rows) == 1
    assert model.directions[0].coords == X.coords


def test_weights_keyed_by_support_and_sum_to_one():
    _, _, solution = solve_min_haar(4, "inner", F(1, 2))
    total = sum(solution.weights.values(), F(0))
    assert total == 1
    assert all(w >= 0 for w in solution.weights.values())

import random

import pytest

import oracle
from olfm.axioms import (
    PROPERTY_KEYS,
    AxiomReport,
    PairedSystems,
    check_dictated_independence,
    check_dictator,
    check_equal_abs_change,
    check_equal_gain,
    check_horizontal_neutrality,
    check_normalization,
    check_opposite_gain,
    check_power_neutrality_2,
    check_symmetry,
    generate_case,
    normalization_total,
    perturbed_score,
    random_society,
    run_axiom_suite,
    run_negative_control,
    satisfaction_score,
)
from olfm.errors import InvalidParams, PreconditionUnmet
from olfm.scores import sat_all
from olfm.society import build_society


def _deltas_by_oracle(n, base_edges, added, actors):
    sb = oracle.sat_scores(n, base_edges)
    se = oracle.sat_scores(n, base_edges + [added])
    return {a: se[a - 1] - sb[a - 1] for a in actors}


# --- symmetry ----------------------------------------------------------------


def test_symmetry_two_leaders(two_leader3):
    report = check_symmetry(two_leader3, 2, 3)
    assert report.holds
    assert report.witnesses == ((2, 6, 6),)


def test_symmetry_precondition(example2):
    with pytest.raises(PreconditionUnmet):
        check_symmetry(example2, 3, 6)
    with pytest.raises(PreconditionUnmet):
        check_symmetry(example2, 3, 3)


def test_checker_rejects_out_of_range_actor(example2):
    from olfm.errors import InvalidActor

    with pytest.raises(InvalidActor):
        check_symmetry(example2, 0, 3)
    with pytest.raises(InvalidActor):
        check_dictator(example2, 8)


def test_symmetry_all_independent():
    s = build_society(5, [])
    assert check_symmetry(s, 1, 4).holds


# --- dictator ----------------------------------------------------------------


def test_dictator_star(star3):
    report = check_dictator(star3, 1)
    assert report.holds and report.witnesses == ((1, 8, 8),)


def test_dictator_single_actor():
    report = check_dictator(build_society(1, []), 1)
    assert report.holds and report.witnesses == ((1, 2, 2),)


def test_dictator_star5():
    s = build_society(5, [(1, v) for v in (2, 3, 4, 5)])
    report = check_dictator(s, 1)
    assert report.holds and report.witnesses == ((1, 32, 32),)


def test_dictator_precondition(example2):
    with pytest.raises(PreconditionUnmet):
        check_dictator(example2, 1)


# --- dictated independence ---------------------------------------------------


def test_dictated_independence_example2(example2):
    for i in (4, 6):
        report = check_dictated_independence(example2, example2, i)
        assert report.holds
        assert report.witnesses[0] == (i, 64, 64)


def test_dictated_independence_pair():
    s1 = build_society(3, [(2, 1)])
    s2 = build_society(3, [(3, 1)])
    report = check_dictated_independence(s1, s2, 1)
    assert report.holds and report.witnesses[0] == (1, 4, 4)


def test_dictated_independence_precondition(example2, star3):
    with pytest.raises(PreconditionUnmet):
        check_dictated_independence(example2, example2, 1)
    with pytest.raises(PreconditionUnmet):
        check_dictated_independence(example2, star3, 4)


# --- equal gain --------------------------------------------------------------


def test_equal_gain_two_leader():
    base = build_society(3, [(2, 1)])
    report = check_equal_gain(PairedSystems.add(base, 3, 1))
    assert report.holds
    assert report.witnesses == ((3, 2, 2),)


def test_equal_gain_five_actors():
    base = build_society(5, [(2, 1), (3, 1)])
    report = check_equal_gain(PairedSystems.add(base, 4, 1))
    assert report.holds
    want = _deltas_by_oracle(5, [(2, 1), (3, 1)], (4, 1), [4, 1])
    assert report.witnesses == ((4, want[4], want[1]),)


def test_equal_gain_precondition(example2):
    reduced = build_society(7, [e for e in example2.edges if e != (2, 6)])
    # actor 6 is independent there, so it is an opposite-gain case instead
    with pytest.raises(PreconditionUnmet):
        check_equal_gain(PairedSystems.add(reduced, 2, 6))
    assert check_opposite_gain(PairedSystems.add(reduced, 2, 6)).holds


# --- equal absolute change ---------------------------------------------------


def test_equal_abs_change_example2(example2):
    base = build_society(7, [e for e in example2.edges if e != (1, 5)])
    report = check_equal_abs_change(PairedSystems.add(base, 1, 5))
    assert report.holds
    (actor, di, dj) = report.witnesses[0]
    assert abs(di) == abs(dj)


def test_equal_gain_instances_satisfy_equal_abs_change():
    base = build_society(3, [(2, 1)])
    pair = PairedSystems.add(base, 3, 1)
    assert check_equal_gain(pair).holds
    report = check_equal_abs_change(pair)
    assert report.holds and report.branch == "equal"


def test_equal_abs_change_precondition():
    base = build_society(3, [])
    with pytest.raises(PreconditionUnmet):
        check_equal_abs_change(PairedSystems.add(base, 1, 2))  # j independent


def test_equal_abs_change_opposite_branch_under_fraction():
    # the same edge addition is an equal gain under unanimity but flips
    # sign under the fraction rule: a third influencer makes the follower
    # easier to override, so the follower loses what the influencer gains
    from fractions import Fraction

    from olfm.decision import FractionRule

    edges = [(1, 4), (2, 4)]
    una = PairedSystems.add(build_society(5, edges), 3, 4)
    assert check_equal_gain(una).holds
    assert check_equal_abs_change(una).branch == "equal"

    frac = PairedSystems.add(build_society(5, edges, FractionRule(Fraction(1, 2))), 3, 4)
    with_report = check_equal_abs_change(frac)
    assert with_report.holds and with_report.branch == "opposite"
    assert with_report.witnesses == ((3, 4, -4),)
    assert not check_equal_gain(frac).holds


# --- opposite gain -----------------------------------------------------------


def test_opposite_gain_no_edges():
    base = build_society(3, [])
    assert sat_all(base).sat == (6, 6, 6)
    pair = PairedSystems.add(base, 2, 1)
    assert sat_all(pair.extended).sat == (4, 8, 4)
    report = check_opposite_gain(pair)
    assert report.holds and report.branch == "opposite"
    assert report.witnesses == ((2, 2, -2),)


def test_opposite_gain_fig1_restored(fig1):
    # removing (4,1) leaves actor 1 with predecessors {2,3}: the restored
    # edge is an equal-gain configuration, not an opposite-gain one
    base = build_society(5, [e for e in fig1.edges if e != (4, 1)])
    pair = PairedSystems.add(base, 4, 1)
    with pytest.raises(PreconditionUnmet):
        check_opposite_gain(pair)
    assert check_equal_gain(pair).holds


def test_opposite_gain_precondition(example2):
    base = build_society(7, [e for e in example2.edges if e != (4, 7)])
    # actor 7 still has predecessor 5 there: not independent
    with pytest.raises(PreconditionUnmet):
        check_opposite_gain(PairedSystems.add(base, 4, 7))


# --- horizontal neutrality ---------------------------------------------------


def test_horizontal_neutrality_two_leader():
    base = build_society(3, [(2, 1)])
    report = check_horizontal_neutrality(PairedSystems.add(base, 3, 1), h=2)
    assert report.holds
    assert report.witnesses == ((3, 2, -2),)


def test_horizontal_neutrality_five():
    base = build_society(5, [(2, 1)])
    report = check_horizontal_neutrality(PairedSystems.add(base, 3, 1), h=2)
    assert report.holds
    want = _deltas_by_oracle(5, [(2, 1)], (3, 1), [3, 2])
    assert want[3] == -want[2]


def test_horizontal_neutrality_precondition():
    base = build_society(5, [(2, 1), (4, 5)])
    with pytest.raises(PreconditionUnmet):
        check_horizontal_neutrality(PairedSystems.add(base, 3, 1), h=4)  # h not in P(j)


# --- power neutrality for two influencers ------------------------------------


def test_power_neutrality_covers_horizontal_case():
    base = build_society(3, [(2, 1)])
    report = check_power_neutrality_2(PairedSystems.add(base, 3, 1), h=2)
    assert report.holds and report.branch == "opposite"


def test_power_neutrality_example2(example2):
    base = build_society(7, [e for e in example2.edges if e != (1, 5)])
    report = check_power_neutrality_2(PairedSystems.add(base, 1, 5), h=2)
    assert report.holds


def test_power_neutrality_precondition(example2):
    base = build_society(7, [e for e in example2.edges if e != (1, 5)])
    with pytest.raises(PreconditionUnmet):
        check_power_neutrality_2(PairedSystems.add(base, 1, 5), h=1)


# --- normalization -----------------------------------------------------------


def test_normalization_example2(example2):
    report = check_normalization(example2)
    assert report.holds and report.witnesses == ((0, 552, 552),)


def test_normalization_small():
    assert check_normalization(build_society(1, [])).witnesses == ((0, 2, 2),)
    assert check_normalization(build_society(3, [(2, 1), (3, 1)])).witnesses == ((0, 18, 18),)


def test_normalization_total_matches_oracle():
    rng = random.Random(11)
    for _ in range(10):
        edges = oracle.random_layered_edges(rng, [2, 3], 0.7)
        s = build_society(5, edges)
        assert normalization_total(s) == oracle.normalization_sum(5, edges)


# --- the satisfaction score violates the two-branch properties in their
# --- full precondition space; these frozen instances pin the finding


def test_opposite_gain_counterexample_mediator_influencer():
    base_edges = [(1, 2), (3, 4)]
    base = build_society(5, base_edges)
    pair = PairedSystems.add(base, 2, 5)  # i=2 is a follower (a dummy), j=5 independent
    report = check_opposite_gain(pair)
    assert not report.holds
    assert report.witnesses == ((2, 0, -8),)
    want = _deltas_by_oracle(5, base_edges, (2, 5), [2, 5])
    assert (want[2], want[5]) == (0, -8)


def test_equal_abs_change_counterexample_mediator_influencer():
    base_edges = [(1, 2), (2, 3), (4, 5)]
    base = build_society(5, base_edges)
    pair = PairedSystems.add(base, 5, 3)  # i=5 is a follower-dummy one layer above j=3
    report = check_equal_abs_change(pair)
    assert not report.holds
    assert report.witnesses == ((5, 0, 8),)
    want = _deltas_by_oracle(5, base_edges, (5, 3), [5, 3])
    assert (want[5], want[3]) == (0, 8)


def test_power_neutrality_counterexample_mediator_h():
    base_edges = [(1, 2), (1, 3), (2, 4), (5, 2)]
    base = build_society(5, base_edges)
    pair = PairedSystems.add(base, 3, 4)  # h=2 is a mediator, i=3 a dummy
    report = check_power_neutrality_2(pair, h=2)
    assert not report.holds
    assert report.witnesses == ((3, 0, -4),)
    want = _deltas_by_oracle(5, base_edges, (3, 4), [3, 2])
    assert (want[3], want[2]) == (0, -4)


# --- score plumbing ----------------------------------------------------------


def test_satisfaction_score_matches_sat_all(example2):
    values = satisfaction_score(example2)
    assert values == {i: sat_all(example2).sat[i - 1] for i in range(1, 8)}


def test_custom_score_can_fail_axioms(star3):
    flat = lambda s: {i: 1 << (s.n - 1) for i in range(1, s.n + 1)}
    assert not check_dictator(star3, 1, score=flat).holds
    assert not check_normalization(star3, score=flat).holds


def test_checkers_do_not_mutate(example2):
    snapshot = example2.edges
    check_normalization(example2)
    check_dictated_independence(example2, example2, 4)
    assert example2.edges == snapshot


def test_report_json_shape(two_leader3):
    data = check_symmetry(two_leader3, 2, 3).to_json()
    assert set(data) == {"axiom", "holds", "branch", "witnesses", "context"}
    assert data["axiom"] == "Sym" and data["holds"] is True


def test_paired_systems_validation(two_leader3):
    with pytest.raises(InvalidParams):
        PairedSystems(two_leader3, two_leader3, (1, 2))
    with pytest.raises(InvalidParams):
        PairedSystems(two_leader3, build_society(5, []), (1, 2))


# --- random generation -------------------------------------------------------


def test_random_society_deterministic():
    a = random_society(12, [3, 2, 2], 0.5)
    b = random_society(12, [3, 2, 2], 0.5)
    assert a == b
    assert a.max_layer == 3


def test_random_society_single_layer():
    s = random_society(1, [3], 0.5)
    assert s.edges == () and s.independents == (1, 2, 3)


def test_random_society_density_one():
    s = random_society(2, [2, 3], 1.0)
    assert set(s.edges) == {(u, v) for u in (1, 2) for v in (3, 4, 5)}


def test_random_society_min_indegree():
    s = random_society(5, [2, 3, 2], 0.0)
    for i in range(1, 8):
        if s.layers[i - 1] > 1:
            assert len(s.preds[i - 1]) >= 1


def test_random_society_invalid_params():
    with pytest.raises(InvalidParams):
        random_society(0, [2, 2], 0.5)  # even total
    with pytest.raises(InvalidParams):
        random_society(0, [], 0.5)
    with pytest.raises(InvalidParams):
        random_society(0, [3], 1.5)


def test_generate_case_produces_valid_preconditions():
    rng = random.Random(3)
    for key in PROPERTY_KEYS:
        for _ in range(5):
            case = generate_case(key, rng, (3, 5, 7))
            report = case.checker(**case.kwargs)  # must not raise PreconditionUnmet
            assert isinstance(report, AxiomReport)


def test_generate_case_unknown_key():
    with pytest.raises(InvalidParams):
        generate_case("8-mystery", random.Random(0), (3, 5))


# --- suites ------------------------------------------------------------------


def test_suite_sources_scope_all_hold():
    suite = run_axiom_suite(seed=11, trials=30, influencers="sources")
    assert suite.ok
    for key in PROPERTY_KEYS:
        assert suite.passed(key) == 30


def test_suite_full_scope_finds_the_violations():
    suite = run_axiom_suite(
        seed=7,
        trials=40,
        properties=("5b-opposite-gain-general", "6b-power-neutrality-2"),
    )
    assert not suite.ok
    axioms = {r.axiom for r in suite.failures()}
    assert axioms <= {"OppGain", "PowerNeut2", "EqAbsChange"}


def test_suite_zero_trials():
    suite = run_axiom_suite(seed=0, trials=0)
    assert suite.ok
    assert all(len(v) == 0 for v in suite.results.values())


def test_suite_json(two_leader3):
    suite = run_axiom_suite(seed=1, trials=3, properties=("7-normalization",))
    data = suite.to_json()
    assert data["ok"] is True
    assert data["properties"]["7-normalization"]["passed"] == 3


def test_negative_control_every_trial_violated():
    outcomes = run_negative_control(seed=5, trials=30)
    assert len(outcomes) == 30
    for o in outcomes:
        assert o["violated"], o
        assert "Norm" in o["violated"]


def test_perturbed_score_bumps_one_actor(example2):
    score = perturbed_score(3)
    values = score(example2)
    assert values[3] == sat_all(example2).sat[2] + 1
    assert values[1] == sat_all(example2).sat[0]

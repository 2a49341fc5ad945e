import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from olfm.decision import UNANIMITY, FractionRule
from olfm.errors import (
    DuplicateEdge,
    InvalidActor,
    InvalidParams,
    NotLayered,
    SelfLoop,
)
from olfm.society import (
    ActorClass,
    DegreeProfile,
    add_edge,
    build_society,
    classify,
    dumps_society,
    loads_society,
    neighbors,
    society_from_json,
    society_to_json,
)


def test_example2_classification(example2):
    assert example2.opinion_leaders == (1, 2)
    assert example2.independents == (3,)
    assert example2.mediators == (4, 5)
    assert example2.followers == (6, 7)
    assert example2.layers == (1, 1, 1, 2, 2, 2, 3)
    assert example2.max_layer == 3
    assert classify(example2, 4) is ActorClass.MEDIATOR


def test_single_actor_society():
    s = build_society(1, [])
    assert classify(s, 1) is ActorClass.INDEPENDENT
    assert s.layers == (1,)


def test_fig1_classification(fig1):
    assert classify(fig1, 5) is ActorClass.INDEPENDENT
    assert classify(fig1, 1) is ActorClass.FOLLOWER
    assert fig1.opinion_leaders == (2, 3, 4)


def test_layer_skipping_edge_rejected():
    with pytest.raises(NotLayered):
        build_society(3, [(1, 2), (2, 3), (1, 3)])


def test_cycle_rejected():
    with pytest.raises(NotLayered):
        build_society(3, [(1, 2), (2, 1)])


def test_bad_inputs():
    with pytest.raises(InvalidActor):
        build_society(3, [(1, 4)])
    with pytest.raises(SelfLoop):
        build_society(3, [(2, 2)])
    with pytest.raises(DuplicateEdge):
        build_society(3, [(1, 2), (1, 2)])
    with pytest.raises(InvalidParams):
        build_society(0, [])


def test_neighbors(example2):
    p, s, deg = neighbors(example2, 7)
    assert (p, s, deg) == (frozenset({4, 5}), frozenset(), DegreeProfile(2, 0))
    p, s, deg = neighbors(example2, 1)
    assert (p, s, deg) == (frozenset(), frozenset({4, 5}), DegreeProfile(0, 2))
    single = build_society(1, [])
    assert neighbors(single, 1) == (frozenset(), frozenset(), DegreeProfile(0, 0))
    with pytest.raises(InvalidActor):
        neighbors(example2, 8)


def test_add_edge_two_layer():
    s = build_society(3, [(2, 1)])
    s2 = add_edge(s, 3, 1)
    assert s2.opinion_leaders == (2, 3)
    assert s2.followers == (1,)
    # the original is untouched
    assert s.edges == ((2, 1),)


def test_add_edge_restores_removed(example2):
    reduced = build_society(7, [e for e in example2.edges if e != (1, 5)])
    assert add_edge(reduced, 1, 5) == example2


def test_add_edge_errors():
    s = build_society(3, [(1, 2)])
    with pytest.raises(NotLayered):
        add_edge(s, 2, 1)
    with pytest.raises(DuplicateEdge):
        add_edge(s, 1, 2)
    with pytest.raises(SelfLoop):
        add_edge(s, 1, 1)


def test_classes_partition(example2, fig1):
    for s in (example2, fig1):
        for i in range(1, s.n + 1):
            p, succ, _ = neighbors(s, i)
            want = (
                ActorClass.MEDIATOR
                if p and succ
                else ActorClass.FOLLOWER
                if p
                else ActorClass.OPINION_LEADER
                if succ
                else ActorClass.INDEPENDENT
            )
            assert classify(s, i) is want


def _society_strategy(max_n=9):
    """Random layered societies via seeded edge sampling."""

    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        k = draw(st.integers(min_value=1, max_value=min(3, n)))
        seed = draw(st.integers(min_value=0, max_value=10**6))
        rng = random.Random(seed)
        sizes = [1] * k
        for _ in range(n - k):
            sizes[rng.randrange(k)] += 1
        density = draw(st.floats(min_value=0.1, max_value=1.0))
        edges = oracle.random_layered_edges(rng, sizes, density)
        return build_society(n, edges)

    return build()


@settings(max_examples=120, deadline=None)
@given(_society_strategy())
def test_layer_condition_always_holds(s):
    for u, v in s.edges:
        assert s.layers[v - 1] - s.layers[u - 1] == 1
    # layers are contiguous from 1
    assert set(s.layers) == set(range(1, s.max_layer + 1))
    # oracle agrees on the layering
    lay = oracle.layering(s.n, list(s.edges))
    assert lay == {i: s.layers[i - 1] for i in range(1, s.n + 1)}


@settings(max_examples=120, deadline=None)
@given(_society_strategy())
def test_two_layer_societies_have_no_mediators(s):
    if s.max_layer <= 2:
        assert s.mediators == ()


@settings(max_examples=80, deadline=None)
@given(_society_strategy(max_n=9), st.integers(0, 10**6))
def test_add_edge_matches_direct_build(s, pick):
    rng = random.Random(pick)
    candidates = [
        (i, j)
        for i in range(1, s.n + 1)
        for j in range(1, s.n + 1)
        if i != j and (i, j) not in s.edges
    ]
    if not candidates:
        return
    i, j = rng.choice(candidates)
    try:
        via_add = add_edge(s, i, j)
    except NotLayered:
        with pytest.raises(NotLayered):
            build_society(s.n, list(s.edges) + [(i, j)])
        return
    assert via_add == build_society(s.n, list(s.edges) + [(i, j)])


# --- JSON interface ---------------------------------------------------------


def test_json_round_trip_unanimity(example2):
    text = dumps_society(example2)
    assert loads_society(text) == example2
    data = json.loads(text)
    assert data["rule"] == {"type": "unanimity"}


@pytest.mark.parametrize("q", [Fraction(1, 2), Fraction(3, 5), Fraction(3, 4), Fraction(2, 3)])
def test_json_round_trip_fraction(q):
    s = build_society(3, [(1, 2)], FractionRule(q))
    assert loads_society(dumps_society(s)) == s


def test_json_exact_decimal_q():
    s = loads_society('{"n": 3, "edges": [[1, 2]], "rule": {"type": "fraction", "q": 0.6}}')
    assert s.rule == FractionRule(Fraction(3, 5))


def test_json_q_string_forms():
    for q_text in ('"3/5"', '"0.6"'):
        s = loads_society(
            '{"n": 3, "edges": [[1, 2]], "rule": {"type": "fraction", "q": %s}}' % q_text
        )
        assert s.rule == FractionRule(Fraction(3, 5))


def test_json_default_rule_is_unanimity():
    s = loads_society('{"n": 2, "edges": [[1, 2]]}')
    assert s.rule == UNANIMITY


def test_json_edge_order_is_irrelevant():
    a = loads_society('{"n": 3, "edges": [[1, 2], [1, 3]], "rule": {"type": "unanimity"}}')
    b = loads_society('{"n": 3, "edges": [[1, 3], [1, 2]], "rule": {"type": "unanimity"}}')
    assert a == b


def test_json_errors():
    with pytest.raises(InvalidParams):
        loads_society("{not json")
    with pytest.raises(InvalidParams):
        loads_society('{"edges": []}')
    with pytest.raises(InvalidParams):
        loads_society('{"n": 2, "edges": [[1]]}')
    with pytest.raises(InvalidParams):
        loads_society('{"n": 2, "edges": [], "rule": {"type": "fraction"}}')
    with pytest.raises(InvalidParams):
        loads_society('{"n": 2, "edges": [], "rule": {"type": "fraction", "q": 1.5}}')
    with pytest.raises(DuplicateEdge):
        loads_society('{"n": 2, "edges": [[1, 2], [1, 2]]}')


def test_society_to_json_shape(example2):
    data = society_to_json(example2)
    assert data["n"] == 7
    assert [4, 7] in data["edges"]
    assert society_from_json(data) == example2


def test_society_pickles(example2):
    # societies cross process boundaries for the parallel enumeration
    import pickle

    clone = pickle.loads(pickle.dumps(example2))
    assert clone == example2
    assert clone.layers == example2.layers

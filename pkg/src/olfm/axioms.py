"""Mechanical checks of the satisfaction-score axioms.

Each checker validates its structural precondition exactly (raising
PreconditionUnmet otherwise) and then tests the required integer
equalities.  Checkers score societies with the exact satisfaction counts
by default but accept any per-actor score function, which makes negative
controls possible: a deliberately perturbed score must break at least one
axiom.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence, Union

from .decision import UNANIMITY, DecisionRule, DecisionVector, FractionRule, decide
from .errors import InvalidParams, NotLayered, PreconditionUnmet
from .scores import DEFAULT_CAP, _check_cap, _resolve, sat_all
from .society import ActorClass, Society, _check_actor, add_edge, build_society

ScoreFn = Callable[[Society], Mapping[int, int]]


@functools.lru_cache(maxsize=4096)
def _cached_sat(society: Society) -> tuple[int, ...]:
    return sat_all(society).sat


def satisfaction_score(society: Society) -> dict[int, int]:
    """Default score used by the checkers: exact satisfaction counts."""
    values = _cached_sat(society)
    return {i: values[i - 1] for i in range(1, society.n + 1)}


def _score(score: Union[ScoreFn, None]) -> ScoreFn:
    return satisfaction_score if score is None else score


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of one axiom check.

    witnesses holds the integer (actor, lhs, rhs) values whose equality
    was tested; for disjunctive axioms branch records which equality held
    ("opposite", "equal" or "both" when the change is zero).
    """

    axiom: str
    holds: bool
    branch: Union[str, None]
    witnesses: tuple[tuple[int, int, int], ...]
    context: str

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "holds": self.holds,
            "branch": self.branch,
            "witnesses": [list(w) for w in self.witnesses],
            "context": self.context,
        }


@dataclass(frozen=True)
class PairedSystems:
    """Two societies on the same actors differing by one added edge."""

    base: Society
    extended: Society
    added_edge: tuple[int, int]

    def __post_init__(self) -> None:
        if self.base.n != self.extended.n:
            raise InvalidParams("paired societies must share the actor set")
        want = set(self.base.edges) | {self.added_edge}
        if self.added_edge in self.base.edges or set(self.extended.edges) != want:
            raise InvalidParams(
                f"extended edge set must be the base plus {self.added_edge}"
            )

    @classmethod
    def add(cls, base: Society, i: int, j: int) -> "PairedSystems":
        return cls(base=base, extended=add_edge(base, i, j), added_edge=(i, j))


def _rule_label(rule: DecisionRule) -> str:
    if isinstance(rule, FractionRule):
        return f"fraction({rule.q})"
    return "unanimity"


def _society_label(s: Society) -> str:
    return f"n={s.n} edges={list(s.edges)} rule={_rule_label(s.rule)}"


def _pair_label(p: PairedSystems, extra: str = "") -> str:
    i, j = p.added_edge
    return f"{_society_label(p.base)} added=({i},{j}){extra}"


def _leaderish(s: Society, i: int) -> bool:
    return s.classes[i - 1] in (ActorClass.OPINION_LEADER, ActorClass.INDEPENDENT)


# ---------------------------------------------------------------------------
# Checkers
# ---------------------------------------------------------------------------


def check_symmetry(
    s: Society, i: int, j: int, score: Union[ScoreFn, None] = None
) -> AxiomReport:
    """Actors in identical positions must score identically."""
    _check_actor(s.n, i)
    _check_actor(s.n, j)
    if i == j:
        raise PreconditionUnmet("symmetry needs two different actors")
    pi, si = set(s.preds[i - 1]), set(s.succs[i - 1])
    pj, sj = set(s.preds[j - 1]), set(s.succs[j - 1])
    if pi != pj or si != sj:
        raise PreconditionUnmet(
            f"actors {i} and {j} are not in symmetric positions"
        )
    f = _score(score)(s)
    return AxiomReport(
        axiom="Sym",
        holds=f[i] == f[j],
        branch=None,
        witnesses=((i, f[i], f[j]),),
        context=f"{_society_label(s)} i={i} j={j}",
    )


def check_dictator(s: Society, i: int, score: Union[ScoreFn, None] = None) -> AxiomReport:
    """An actor pointing at everyone else must reach the maximum score 2^n."""
    _check_actor(s.n, i)
    if set(s.succs[i - 1]) != set(range(1, s.n + 1)) - {i}:
        raise PreconditionUnmet(f"actor {i} does not point at all other actors")
    f = _score(score)(s)
    want = 1 << s.n
    return AxiomReport(
        axiom="Dict",
        holds=f[i] == want,
        branch=None,
        witnesses=((i, f[i], want),),
        context=f"{_society_label(s)} i={i}",
    )


def check_dictated_independence(
    s1: Society, s2: Society, i: int, score: Union[ScoreFn, None] = None
) -> AxiomReport:
    """A single-predecessor actor scores the same in any two societies,
    namely the dummy level 2^(n-1)."""
    if s1.n != s2.n:
        raise PreconditionUnmet("societies must share the actor set")
    _check_actor(s1.n, i)
    if len(s1.preds[i - 1]) != 1 or len(s2.preds[i - 1]) != 1:
        raise PreconditionUnmet(f"actor {i} needs exactly one predecessor in both societies")
    fn = _score(score)
    f1, f2 = fn(s1), fn(s2)
    half = 1 << (s1.n - 1)
    holds = f1[i] == f2[i] == half
    return AxiomReport(
        axiom="DictInd",
        holds=holds,
        branch=None,
        witnesses=((i, f1[i], f2[i]), (i, f1[i], half)),
        context=f"s1: {_society_label(s1)} | s2: {_society_label(s2)} | i={i}",
    )


def _deltas(p: PairedSystems, actors: Sequence[int], score: Union[ScoreFn, None]):
    fn = _score(score)
    f_base, f_ext = fn(p.base), fn(p.extended)
    return {a: f_ext[a] - f_base[a] for a in actors}


def check_equal_gain(p: PairedSystems, score: Union[ScoreFn, None] = None) -> AxiomReport:
    """A follower and its new opinion leader gain exactly the same."""
    i, j = p.added_edge
    if not _leaderish(p.base, i):
        raise PreconditionUnmet(f"actor {i} must be an opinion leader or independent in the base")
    if p.base.classes[j - 1] is not ActorClass.FOLLOWER:
        raise PreconditionUnmet(f"actor {j} must be a follower in the base")
    d = _deltas(p, (i, j), score)
    return AxiomReport(
        axiom="EqGain",
        holds=d[i] == d[j],
        branch=None,
        witnesses=((i, d[i], d[j]),),
        context=_pair_label(p),
    )


def check_equal_abs_change(p: PairedSystems, score: Union[ScoreFn, None] = None) -> AxiomReport:
    """Consecutive-layer edge additions change both endpoints' scores by
    the same absolute amount."""
    i, j = p.added_edge
    if p.base.classes[j - 1] is ActorClass.INDEPENDENT:
        raise PreconditionUnmet(f"actor {j} must not be independent in the base")
    if p.extended.layers[i - 1] != p.extended.layers[j - 1] - 1:
        raise PreconditionUnmet(
            f"actor {i} must sit one layer above actor {j} in the extended society"
        )
    d = _deltas(p, (i, j), score)
    equal = d[i] == d[j]
    opposite = d[i] == -d[j]
    branch = "both" if equal and opposite else "equal" if equal else "opposite" if opposite else None
    return AxiomReport(
        axiom="EqAbsChange",
        holds=branch is not None,
        branch=branch,
        witnesses=((i, d[i], d[j]),),
        context=_pair_label(p),
    )


def check_opposite_gain(p: PairedSystems, score: Union[ScoreFn, None] = None) -> AxiomReport:
    """Influencing an independent actor moves the scores in opposite
    directions; when the new influencer is itself influenced (a mediator
    or follower in the base) the same-direction branch is also allowed."""
    i, j = p.added_edge
    if p.base.classes[j - 1] is not ActorClass.INDEPENDENT:
        raise PreconditionUnmet(f"actor {j} must be independent in the base")
    d = _deltas(p, (i, j), score)
    strict = _leaderish(p.base, i)
    opposite = d[i] == -d[j]
    equal = d[i] == d[j]
    if strict:
        branch = "opposite" if opposite else None
    else:
        branch = (
            "both" if opposite and equal else "opposite" if opposite else "equal" if equal else None
        )
    return AxiomReport(
        axiom="OppGain",
        holds=branch is not None,
        branch=branch,
        witnesses=((i, d[i], d[j]),),
        context=_pair_label(p, f" i_class={p.base.classes[i - 1].value}"),
    )


def check_horizontal_neutrality(
    p: PairedSystems, h: int, score: Union[ScoreFn, None] = None
) -> AxiomReport:
    """What the new opinion leader of a follower gains, an old opinion
    leader of that follower loses."""
    i, j = p.added_edge
    _check_actor(p.base.n, h)
    if h in (i, j):
        raise PreconditionUnmet("h must differ from both endpoints of the added edge")
    if not _leaderish(p.base, i):
        raise PreconditionUnmet(f"actor {i} must be an opinion leader or independent in the base")
    if p.base.classes[j - 1] is not ActorClass.FOLLOWER:
        raise PreconditionUnmet(f"actor {j} must be a follower in the base")
    if p.base.classes[h - 1] is not ActorClass.OPINION_LEADER:
        raise PreconditionUnmet(f"actor {h} must be an opinion leader in the base")
    if h not in p.base.preds[j - 1]:
        raise PreconditionUnmet(f"actor {h} must already influence actor {j} in the base")
    d = _deltas(p, (i, h), score)
    return AxiomReport(
        axiom="HorizNeut",
        holds=d[i] == -d[h],
        branch=None,
        witnesses=((i, d[i], d[h]),),
        context=_pair_label(p, f" h={h}"),
    )


def check_power_neutrality_2(
    p: PairedSystems, h: int, score: Union[ScoreFn, None] = None
) -> AxiomReport:
    """Adding a second influencer beside a sole influencer h changes their
    scores by the same absolute amount."""
    i, j = p.added_edge
    _check_actor(p.base.n, h)
    if h in (i, j):
        raise PreconditionUnmet("h must differ from both endpoints of the added edge")
    if tuple(p.base.preds[j - 1]) != (h,):
        raise PreconditionUnmet(f"actor {j} must have {h} as its only predecessor in the base")
    lay = p.extended.layers
    if not (lay[h - 1] == lay[i - 1] == lay[j - 1] - 1):
        raise PreconditionUnmet(
            f"actors {h} and {i} must sit one layer above actor {j} in the extended society"
        )
    d = _deltas(p, (i, h), score)
    opposite = d[i] == -d[h]
    equal = d[i] == d[h]
    branch = (
        "both" if opposite and equal else "opposite" if opposite else "equal" if equal else None
    )
    return AxiomReport(
        axiom="PowerNeut2",
        holds=branch is not None,
        branch=branch,
        witnesses=((i, d[i], d[h]),),
        context=_pair_label(p, f" h={h}"),
    )


def normalization_total(
    society: Society, tie_rule: str = "reject", cap: int = DEFAULT_CAP
) -> int:
    """Sum over all vectors of how many actors the outcome satisfies,
    accumulated vector by vector through the scalar engine."""
    _check_cap(society.n, cap)
    n = society.n
    total = 0
    for k in range(1 << n):
        value = _resolve(decide(society, DecisionVector(n, k)), tie_rule)
        ones = k.bit_count()
        total += ones if value == 1 else n - ones
    return total


def check_normalization(
    s: Society,
    score: Union[ScoreFn, None] = None,
    tie_rule: str = "reject",
    cap: int = DEFAULT_CAP,
) -> AxiomReport:
    """The scores must add up to the model's total satisfaction mass."""
    f = _score(score)(s)
    lhs = sum(f[i] for i in range(1, s.n + 1))
    rhs = normalization_total(s, tie_rule=tie_rule, cap=cap)
    return AxiomReport(
        axiom="Norm",
        holds=lhs == rhs,
        branch=None,
        witnesses=((0, lhs, rhs),),
        context=_society_label(s),
    )


# ---------------------------------------------------------------------------
# Random instance generation
# ---------------------------------------------------------------------------


def _random_society_rng(
    rng: random.Random,
    layer_sizes: Sequence[int],
    density: float,
    rule: DecisionRule,
) -> Society:
    if not layer_sizes or any(sz < 1 for sz in layer_sizes):
        raise InvalidParams("layer sizes must be positive")
    if sum(layer_sizes) % 2 == 0:
        raise InvalidParams("total actor count must be odd")
    if not 0.0 <= density <= 1.0:
        raise InvalidParams("edge density must lie in [0, 1]")
    bounds = [0]
    for sz in layer_sizes:
        bounds.append(bounds[-1] + sz)
    n = bounds[-1]
    edges = []
    for m in range(1, len(layer_sizes)):
        above = list(range(bounds[m - 1] + 1, bounds[m] + 1))
        for v in range(bounds[m] + 1, bounds[m + 1] + 1):
            chosen = [u for u in above if rng.random() < density]
            if not chosen:
                # every non-top actor needs an influencer, or it would
                # belong in layer 1
                chosen = [rng.choice(above)]
            edges.extend((u, v) for u in chosen)
    return build_society(n, edges, rule)


def random_society(
    seed: int,
    layer_sizes: Sequence[int],
    density: float,
    rule: DecisionRule = UNANIMITY,
) -> Society:
    """Deterministic random layered society: actors are numbered layer by
    layer, edges sampled between consecutive layers only, and every actor
    below the top layer receives at least one predecessor."""
    return _random_society_rng(random.Random(seed), layer_sizes, density, rule)


def _random_sizes(rng: random.Random, n: int, k: int) -> list[int]:
    sizes = [1] * k
    for _ in range(n - k):
        sizes[rng.randrange(k)] += 1
    return sizes


_SUITE_QS = (Fraction(1, 2), Fraction(3, 5), Fraction(3, 4))


def _draw_society(
    rng: random.Random,
    n_choices: Sequence[int],
    k_choices: Sequence[int] = (1, 2, 3),
    rule: Union[DecisionRule, None] = UNANIMITY,
) -> Society:
    n = rng.choice(list(n_choices))
    k = rng.choice([k for k in k_choices if k <= n])
    if rule is None:
        rule = UNANIMITY if rng.random() < 0.5 else FractionRule(rng.choice(_SUITE_QS))
    return _random_society_rng(rng, _random_sizes(rng, n, k), rng.uniform(0.3, 0.9), rule)


def _relabel(s: Society, swap: tuple[int, int]) -> Society:
    a, b = swap
    perm = {a: b, b: a}
    edges = [(perm.get(u, u), perm.get(v, v)) for u, v in s.edges]
    return build_society(s.n, edges, s.rule)


_MAX_TRIES = 400


def _attempts(rng: random.Random, what: str):
    for _ in range(_MAX_TRIES):
        yield
    raise RuntimeError(f"could not generate a {what} instance in {_MAX_TRIES} attempts")


@dataclass(frozen=True)
class SuiteCase:
    checker: Callable[..., AxiomReport]
    kwargs: dict


def _gen_symmetry(rng: random.Random, n_choices, influencers="any") -> SuiteCase:
    for _ in _attempts(rng, "symmetry"):
        s = _draw_society(rng, n_choices)
        layers: dict[int, list[int]] = {}
        for i in range(1, s.n + 1):
            layers.setdefault(s.layers[i - 1], []).append(i)
        wide = [actors for actors in layers.values() if len(actors) >= 2]
        if not wide:
            continue
        i, j = rng.sample(rng.choice(wide), 2)
        edges = [e for e in s.edges if j not in e]
        edges += [(p, j) for p in s.preds[i - 1]]
        edges += [(j, q) for q in s.succs[i - 1]]
        try:
            twin = build_society(s.n, edges, s.rule)
        except NotLayered:
            # dropping j's edges can orphan a lower actor; resample
            continue
        return SuiteCase(check_symmetry, {"s": twin, "i": i, "j": j})


def _gen_dictator(rng: random.Random, n_choices, influencers="any") -> SuiteCase:
    n = rng.choice(list(n_choices))
    center = rng.randrange(1, n + 1)
    edges = [(center, v) for v in range(1, n + 1) if v != center]
    s = build_society(n, edges)
    return SuiteCase(check_dictator, {"s": s, "i": center})


def _single_pred_actors(s: Society) -> list[int]:
    return [i for i in range(1, s.n + 1) if len(s.preds[i - 1]) == 1]


def _gen_dictated_independence(rng: random.Random, n_choices, influencers="any") -> SuiteCase:
    for _ in _attempts(rng, "dictated-independence"):
        s1 = _draw_society(rng, n_choices, k_choices=(2, 3))
        candidates = _single_pred_actors(s1)
        if not candidates:
            continue
        i = rng.choice(candidates)
        s2 = _draw_society(rng, [s1.n], k_choices=(2, 3))
        others = _single_pred_actors(s2)
        if not others:
            continue
        a = rng.choice(others)
        if a != i:
            s2 = _relabel(s2, (a, i))
        return SuiteCase(check_dictated_independence, {"s1": s1, "s2": s2, "i": i})


def _addable(s: Society, i: int, j: int) -> bool:
    return i != j and (i, j) not in s.edges


def _gen_equal_gain(rng: random.Random, n_choices, influencers="any") -> SuiteCase:
    for _ in _attempts(rng, "equal-gain"):
        s = _draw_society(rng, n_choices, k_choices=(2,))
        followers = s.followers
        heads = s.opinion_leaders + s.independents
        pairs = [
            (i, j)
            for i in heads
            for j in followers
            if _addable(s, i, j) and s.layers[j - 1] == 2
        ]
        if not pairs:
            continue
        i, j = rng.choice(pairs)
        return SuiteCase(check_equal_gain, {"p": PairedSystems.add(s, i, j)})


def _gen_equal_abs_change(rng: random.Random, n_choices, influencers="any") -> SuiteCase:
    for _ in _attempts(rng, "equal-abs-change"):
        s = _draw_society(rng, n_choices, k_choices=(2, 3))
        pairs = [
            (i, j)
            for j in range(1, s.n + 1)
            if s.preds[j - 1]
            for i in range(1, s.n + 1)
            if s.layers[i - 1] == s.layers[j - 1] - 1
            and _addable(s, i, j)
            and (influencers == "any" or _leaderish(s, i))
        ]
        if not pairs:
            continue
        i, j = rng.choice(pairs)
        return SuiteCase(check_equal_abs_change, {"p": PairedSystems.add(s, i, j)})


def _gen_opposite_gain(rng: random.Random, n_choices, general: bool, influencers="any") -> SuiteCase:
    what = "opposite-gain-general" if general else "opposite-gain"
    for _ in _attempts(rng, what):
        s = _draw_society(rng, n_choices, k_choices=(2, 3))
        independents = s.independents
        if general and influencers == "any":
            heads = s.mediators + s.followers
        else:
            heads = s.opinion_leaders + s.independents
        pairs = [(i, j) for i in heads for j in independents if i != j]
        if not pairs:
            continue
        i, j = rng.choice(pairs)
        return SuiteCase(check_opposite_gain, {"p": PairedSystems.add(s, i, j)})


def _gen_horizontal_neutrality(rng: random.Random, n_choices, influencers="any") -> SuiteCase:
    for _ in _attempts(rng, "horizontal-neutrality"):
        s = _draw_society(rng, n_choices, k_choices=(2, 3))
        heads = s.opinion_leaders + s.independents
        triples = []
        for j in s.followers:
            if s.layers[j - 1] != 2:
                continue
            for h in s.preds[j - 1]:
                triples.extend(
                    (i, j, h) for i in heads if i != h and _addable(s, i, j)
                )
        if not triples:
            continue
        i, j, h = rng.choice(triples)
        return SuiteCase(
            check_horizontal_neutrality, {"p": PairedSystems.add(s, i, j), "h": h}
        )


def _gen_power_neutrality_2(rng: random.Random, n_choices, influencers="any") -> SuiteCase:
    for _ in _attempts(rng, "power-neutrality-2"):
        s = _draw_society(rng, n_choices, k_choices=(2, 3))
        triples = []
        for j in _single_pred_actors(s):
            (h,) = s.preds[j - 1]
            if influencers == "sources" and s.classes[h - 1] is not ActorClass.OPINION_LEADER:
                continue
            triples.extend(
                (i, j, h)
                for i in range(1, s.n + 1)
                if i not in (h, j)
                and s.layers[i - 1] == s.layers[h - 1]
                and _addable(s, i, j)
                and (influencers == "any" or _leaderish(s, i))
            )
        if not triples:
            continue
        i, j, h = rng.choice(triples)
        return SuiteCase(
            check_power_neutrality_2, {"p": PairedSystems.add(s, i, j), "h": h}
        )


def _gen_normalization(rng: random.Random, n_choices, influencers="any") -> SuiteCase:
    s = _draw_society(rng, n_choices, rule=None)
    return SuiteCase(check_normalization, {"s": s})


PROPERTY_KEYS = (
    "1-symmetry",
    "2-dictator",
    "3-dictated-independence",
    "4-equal-gain",
    "4b-equal-abs-change",
    "5-opposite-gain",
    "5b-opposite-gain-general",
    "6-horizontal-neutrality",
    "6b-power-neutrality-2",
    "7-normalization",
)

_GENERATORS: dict[str, Callable] = {
    "1-symmetry": _gen_symmetry,
    "2-dictator": _gen_dictator,
    "3-dictated-independence": _gen_dictated_independence,
    "4-equal-gain": _gen_equal_gain,
    "4b-equal-abs-change": _gen_equal_abs_change,
    "5-opposite-gain": lambda rng, nc, infl="any": _gen_opposite_gain(
        rng, nc, general=False, influencers=infl
    ),
    "5b-opposite-gain-general": lambda rng, nc, infl="any": _gen_opposite_gain(
        rng, nc, general=True, influencers=infl
    ),
    "6-horizontal-neutrality": _gen_horizontal_neutrality,
    "6b-power-neutrality-2": _gen_power_neutrality_2,
    "7-normalization": _gen_normalization,
}


def generate_case(
    key: str,
    rng: random.Random,
    n_choices: Sequence[int],
    influencers: str = "any",
) -> SuiteCase:
    """One randomized instance with the named property's preconditions.

    influencers="sources" restricts the actors gaining a successor (i, and
    h for the two-influencer property) to opinion leaders / independents,
    the scope on which the generalized properties provably hold; "any"
    samples the full precondition space, where satisfaction is known to
    violate the two-branch properties on some instances.
    """
    if key not in _GENERATORS:
        raise InvalidParams(f"unknown property {key!r}; known: {', '.join(PROPERTY_KEYS)}")
    if influencers not in ("any", "sources"):
        raise InvalidParams(f"influencers must be 'any' or 'sources', got {influencers!r}")
    return _GENERATORS[key](rng, n_choices, influencers)


@dataclass
class SuiteReport:
    """Aggregated pass/fail counts of a randomized axiom run."""

    seed: int
    trials: int
    results: dict[str, list[AxiomReport]] = field(default_factory=dict)

    def passed(self, key: str) -> int:
        return sum(1 for r in self.results[key] if r.holds)

    def failures(self) -> list[AxiomReport]:
        return [r for reports in self.results.values() for r in reports if not r.holds]

    @property
    def ok(self) -> bool:
        return not self.failures()

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "ok": self.ok,
            "properties": {
                key: {
                    "passed": self.passed(key),
                    "total": len(reports),
                    "failures": [r.to_json() for r in reports if not r.holds],
                }
                for key, reports in self.results.items()
            },
        }


def run_axiom_suite(
    seed: int = 0,
    trials: int = 100,
    properties: Union[Sequence[str], None] = None,
    n_choices: Sequence[int] = (3, 5, 7, 9),
    score: Union[ScoreFn, None] = None,
    influencers: str = "any",
) -> SuiteReport:
    """Generate `trials` randomized instances per property and run the
    matching checker on each.  See generate_case for the influencers
    scopes."""
    keys = tuple(properties) if properties else PROPERTY_KEYS
    for key in keys:
        if key not in _GENERATORS:
            raise InvalidParams(f"unknown property {key!r}")
    if trials < 0:
        raise InvalidParams("trials must be non-negative")
    rng = random.Random(seed)
    report = SuiteReport(seed=seed, trials=trials)
    for key in keys:
        outcomes = []
        for _ in range(trials):
            case = generate_case(key, rng, n_choices, influencers)
            outcomes.append(case.checker(score=score, **case.kwargs))
        report.results[key] = outcomes
    return report


def _non_symmetric_actor(s: Society, rng: random.Random) -> Union[int, None]:
    candidates = []
    for a in range(1, s.n + 1):
        twin = any(
            b != a
            and set(s.preds[a - 1]) == set(s.preds[b - 1])
            and set(s.succs[a - 1]) == set(s.succs[b - 1])
            for b in range(1, s.n + 1)
        )
        if not twin:
            candidates.append(a)
    return rng.choice(candidates) if candidates else None


def perturbed_score(actor: int, bump: int = 1) -> ScoreFn:
    """Satisfaction with `bump` added to one actor: by the uniqueness of
    the satisfaction score this must violate at least one axiom."""

    def fn(society: Society) -> dict[int, int]:
        values = satisfaction_score(society)
        values[actor] += bump
        return values

    return fn


def run_negative_control(
    seed: int = 0,
    trials: int = 100,
    n_choices: Sequence[int] = (3, 5, 7, 9),
) -> list[dict]:
    """Per trial: perturb the satisfaction of one non-symmetric actor and
    collect which axioms of the characterizing set the perturbed score
    violates.  Every trial must yield at least one violation."""
    rng = random.Random(seed)
    outcomes = []
    for _ in range(trials):
        s = None
        actor = None
        for _ in _attempts(rng, "negative-control"):
            s = _draw_society(rng, n_choices, k_choices=(2, 3))
            actor = _non_symmetric_actor(s, rng)
            if actor is not None:
                break
        score = perturbed_score(actor)
        reports = [check_normalization(s, score=score)]
        if len(s.preds[actor - 1]) == 1:
            reports.append(check_dictated_independence(s, s, actor, score=score))
        violated = [r.axiom for r in reports if not r.holds]
        outcomes.append(
            {
                "context": f"{_society_label(s)} perturbed_actor={actor}",
                "checked": [r.axiom for r in reports],
                "violated": violated,
            }
        )
    return outcomes

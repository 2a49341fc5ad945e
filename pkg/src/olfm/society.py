"""Layered influence digraphs with actor classification.

A society is a DAG over actors 1..n in which every edge steps exactly one
layer down.  Layers are not part of the input: they are recovered as
longest-path depth from the sources, and the input is rejected when any
edge fails the consecutive-layer condition.  Societies are immutable;
every mutation returns a new value.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import IO, Iterable, NamedTuple, Union

from .decision import UNANIMITY, DecisionRule, FractionRule, UnanimityRule
from .errors import (
    DuplicateEdge,
    InvalidActor,
    InvalidParams,
    NotLayered,
    SelfLoop,
)

Edge = tuple[int, int]


class ActorClass(enum.Enum):
    OPINION_LEADER = "opinion-leader"
    FOLLOWER = "follower"
    INDEPENDENT = "independent"
    MEDIATOR = "mediator"


class DegreeProfile(NamedTuple):
    indegree: int
    outdegree: int


@dataclass(frozen=True)
class Society:
    """Validated layered influence digraph plus its decision rule.

    All derived fields (layers, neighbourhoods, classes, processing order)
    are fixed at construction; use :func:`build_society` rather than the
    raw constructor.
    """

    n: int
    edges: tuple[Edge, ...]
    rule: DecisionRule
    layers: tuple[int, ...] = field(repr=False)
    preds: tuple[tuple[int, ...], ...] = field(repr=False)
    succs: tuple[tuple[int, ...], ...] = field(repr=False)
    classes: tuple[ActorClass, ...] = field(repr=False)
    order: tuple[int, ...] = field(repr=False)

    @property
    def max_layer(self) -> int:
        return max(self.layers)

    def layer_of(self, i: int) -> int:
        _check_actor(self.n, i)
        return self.layers[i - 1]

    def actors_of_class(self, cls: ActorClass) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if self.classes[i - 1] is cls)

    @property
    def opinion_leaders(self) -> tuple[int, ...]:
        return self.actors_of_class(ActorClass.OPINION_LEADER)

    @property
    def followers(self) -> tuple[int, ...]:
        return self.actors_of_class(ActorClass.FOLLOWER)

    @property
    def independents(self) -> tuple[int, ...]:
        return self.actors_of_class(ActorClass.INDEPENDENT)

    @property
    def mediators(self) -> tuple[int, ...]:
        return self.actors_of_class(ActorClass.MEDIATOR)


def _check_actor(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise InvalidActor(f"actor {i} out of range 1..{n}")


def build_society(n: int, edges: Iterable[Edge], rule: DecisionRule = UNANIMITY) -> Society:
    """Validate the edge list, recover layers and classify every actor.

    Raises InvalidActor, SelfLoop, DuplicateEdge or NotLayered when the
    input is not a layered digraph over actors 1..n.
    """
    if n < 1:
        raise InvalidParams(f"need at least one actor, got n={n}")
    edge_list = [(int(u), int(v)) for u, v in edges]
    seen: set[Edge] = set()
    for u, v in edge_list:
        _check_actor(n, u)
        _check_actor(n, v)
        if u == v:
            raise SelfLoop(f"edge ({u},{v})")
        if (u, v) in seen:
            raise DuplicateEdge(f"edge ({u},{v})")
        seen.add((u, v))

    preds: list[list[int]] = [[] for _ in range(n)]
    succs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_list:
        preds[v - 1].append(u)
        succs[u - 1].append(v)

    # Longest-path depth from the sources, via Kahn's algorithm; a leftover
    # actor means a cycle.
    indeg = [len(p) for p in preds]
    layer = [0] * n
    queue = [i for i in range(1, n + 1) if indeg[i - 1] == 0]
    for i in queue:
        layer[i - 1] = 1
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for v in succs[u - 1]:
            if layer[u - 1] + 1 > layer[v - 1]:
                layer[v - 1] = layer[u - 1] + 1
            indeg[v - 1] -= 1
            if indeg[v - 1] == 0:
                queue.append(v)
    if head != n:
        raise NotLayered("influence graph contains a cycle")
    for u, v in edge_list:
        if layer[v - 1] - layer[u - 1] != 1:
            raise NotLayered(
                f"edge ({u},{v}) spans layers {layer[u - 1]} to {layer[v - 1]}"
            )

    classes = []
    for i in range(1, n + 1):
        has_in = bool(preds[i - 1])
        has_out = bool(succs[i - 1])
        if has_in and has_out:
            classes.append(ActorClass.MEDIATOR)
        elif has_in:
            classes.append(ActorClass.FOLLOWER)
        elif has_out:
            classes.append(ActorClass.OPINION_LEADER)
        else:
            classes.append(ActorClass.INDEPENDENT)

    order = tuple(sorted(range(1, n + 1), key=lambda i: (layer[i - 1], i)))
    return Society(
        n=n,
        edges=tuple(sorted(seen)),
        rule=rule,
        layers=tuple(layer),
        preds=tuple(tuple(sorted(p)) for p in preds),
        succs=tuple(tuple(sorted(s)) for s in succs),
        classes=tuple(classes),
        order=order,
    )


def classify(society: Society, i: int) -> ActorClass:
    """Class of actor i, determined by its in/out degrees."""
    _check_actor(society.n, i)
    return society.classes[i - 1]


def neighbors(society: Society, i: int) -> tuple[frozenset[int], frozenset[int], DegreeProfile]:
    """Predecessor set, successor set and degree profile of actor i."""
    _check_actor(society.n, i)
    p = society.preds[i - 1]
    s = society.succs[i - 1]
    return frozenset(p), frozenset(s), DegreeProfile(len(p), len(s))


def add_edge(society: Society, i: int, j: int) -> Society:
    """New society with edge (i, j) added; layers are recomputed from
    scratch because the addition can pull an independent actor out of
    layer 1."""
    _check_actor(society.n, i)
    _check_actor(society.n, j)
    if i == j:
        raise SelfLoop(f"edge ({i},{j})")
    if (i, j) in society.edges:
        raise DuplicateEdge(f"edge ({i},{j})")
    return build_society(society.n, society.edges + ((i, j),), society.rule)


# ---------------------------------------------------------------------------
# JSON form:  {"n": int, "edges": [[u, v], ...],
#              "rule": {"type": "unanimity"} | {"type": "fraction", "q": 0.6}}
# q also accepts the strings "0.6" and "3/5"; the emitter falls back to the
# "num/den" string whenever the exact rational has no short decimal form.
# ---------------------------------------------------------------------------


def _rule_from_json(data: object) -> DecisionRule:
    if not isinstance(data, dict) or "type" not in data:
        raise InvalidParams(f"bad rule object: {data!r}")
    kind = data["type"]
    if kind == "unanimity":
        return UNANIMITY
    if kind == "fraction":
        if "q" not in data:
            raise InvalidParams("fraction rule needs a q value")
        q = data["q"]
        try:
            q = q if isinstance(q, Fraction) else Fraction(str(q))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidParams(f"bad fraction value {data['q']!r}") from exc
        return FractionRule(q)
    raise InvalidParams(f"unknown rule type {kind!r}")


def _rule_to_json(rule: DecisionRule) -> dict:
    if isinstance(rule, UnanimityRule):
        return {"type": "unanimity"}
    q = rule.q
    as_float = float(q)
    # Emit a plain number when its shortest repr parses back to the same
    # exact rational, otherwise keep the rational spelled out.
    if Fraction(repr(as_float)) == q:
        return {"type": "fraction", "q": as_float}
    return {"type": "fraction", "q": f"{q.numerator}/{q.denominator}"}


def society_from_json(data: object, rule_override: Union[DecisionRule, None] = None) -> Society:
    if not isinstance(data, dict):
        raise InvalidParams("society JSON must be an object")
    try:
        n = int(data["n"])
        raw_edges = data["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidParams(f"society JSON needs integer 'n' and 'edges': {exc}") from exc
    if not isinstance(raw_edges, list):
        raise InvalidParams("'edges' must be a list of [u, v] pairs")
    edges = []
    for item in raw_edges:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise InvalidParams(f"bad edge entry: {item!r}")
        edges.append((int(item[0]), int(item[1])))
    rule = rule_override if rule_override is not None else _rule_from_json(
        data.get("rule", {"type": "unanimity"})
    )
    return build_society(n, edges, rule)


def society_to_json(society: Society) -> dict:
    return {
        "n": society.n,
        "edges": [[u, v] for u, v in society.edges],
        "rule": _rule_to_json(society.rule),
    }


def loads_society(text: str, rule_override: Union[DecisionRule, None] = None) -> Society:
    try:
        # Exact decimals: route float literals through Fraction instead of
        # binary floating point, so q = 0.6 really means 3/5.
        data = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise InvalidParams(f"invalid JSON: {exc}") from exc
    return society_from_json(data, rule_override)


def dumps_society(society: Society, indent: Union[int, None] = None) -> str:
    return json.dumps(society_to_json(society), indent=indent)


def load_society(fp: IO[str], rule_override: Union[DecisionRule, None] = None) -> Society:
    return loads_society(fp.read(), rule_override)

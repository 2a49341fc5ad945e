"""Decision rules, decision vectors and the collective decision process.

Actors are labelled 1..n.  A decision vector stores one bit per actor; in
the canonical text form the leftmost character belongs to actor 1, so the
vector doubles as the binary numeral of its integer form.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Union

from .errors import InvalidActor, InvalidParams, LengthMismatch

if TYPE_CHECKING:
    from .society import Society


@dataclass(frozen=True)
class UnanimityRule:
    """A non-source actor switches only when every predecessor settled on
    the opposite value."""

    def threshold(self, indegree: int) -> int:
        # Unanimity as a count threshold: more than d-1 agreeing
        # predecessors means all d of them.
        return indegree - 1

    @property
    def kind(self) -> str:
        return "unanimity"


@dataclass(frozen=True)
class FractionRule:
    """A non-source actor adopts value b once strictly more than
    floor(q * indegree) predecessors settled on b, with 1/2 <= q < 1.

    q is kept as an exact rational so the threshold is bit-exact.
    """

    q: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.q, Fraction):
            object.__setattr__(self, "q", Fraction(self.q))
        if not (Fraction(1, 2) <= self.q < 1):
            raise InvalidParams(f"fraction value must satisfy 1/2 <= q < 1, got {self.q}")

    def threshold(self, indegree: int) -> int:
        return (self.q.numerator * indegree) // self.q.denominator

    @property
    def kind(self) -> str:
        return "fraction"


DecisionRule = Union[UnanimityRule, FractionRule]

UNANIMITY = UnanimityRule()


class Outcome(enum.Enum):
    """Result of the collective decision: the majority value, or a tie."""

    ZERO = 0
    ONE = 1
    TIE = "tie"


@dataclass(frozen=True)
class DecisionVector:
    """n decision bits packed into an integer; actor 1 owns the most
    significant of the n bits."""

    n: int
    value: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParams("decision vector needs at least one bit")
        if not 0 <= self.value < (1 << self.n):
            raise InvalidParams(f"value {self.value} does not fit in {self.n} bits")

    @classmethod
    def from_string(cls, text: str) -> "DecisionVector":
        if not text or set(text) - {"0", "1"}:
            raise InvalidParams(f"not a bitstring: {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "DecisionVector":
        seq = tuple(bits)
        value = 0
        for b in seq:
            value = (value << 1) | (b & 1)
        return cls(len(seq), value)

    @classmethod
    def zeros(cls, n: int) -> "DecisionVector":
        return cls(n, 0)

    def bit(self, i: int) -> int:
        """Bit of actor i (1-based)."""
        if not 1 <= i <= self.n:
            raise InvalidActor(f"actor {i} out of range 1..{self.n}")
        return (self.value >> (self.n - i)) & 1

    def with_bit(self, i: int, b: int) -> "DecisionVector":
        if not 1 <= i <= self.n:
            raise InvalidActor(f"actor {i} out of range 1..{self.n}")
        mask = 1 << (self.n - i)
        value = self.value | mask if b else self.value & ~mask
        return DecisionVector(self.n, value)

    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> (self.n - i)) & 1 for i in range(1, self.n + 1))

    def __str__(self) -> str:
        return format(self.value, f"0{self.n}b")


def with_bit(x: DecisionVector, i: int, b: int) -> DecisionVector:
    """Copy of x with actor i's bit set to b; x itself is unchanged."""
    return x.with_bit(i, b)


def propagate(society: "Society", x: DecisionVector) -> DecisionVector:
    """Collective decision vector: process actors layer by layer, letting
    each non-source actor react to the already-settled values of its
    predecessors.

    Sources keep their initial bit.  Everyone else keeps x_i unless the
    society's rule makes the predecessors' settled values override it.
    """
    if x.n != society.n:
        raise LengthMismatch(f"vector has {x.n} bits, society has {society.n} actors")
    c = list(x.bits())
    rule = society.rule
    unanimous = isinstance(rule, UnanimityRule)
    for i in society.order:
        preds = society.preds[i - 1]
        if not preds:
            continue
        settled = [c[j - 1] for j in preds]
        if unanimous:
            first = settled[0]
            if all(v == first for v in settled):
                c[i - 1] = first
        else:
            t = rule.threshold(len(preds))
            ones = sum(settled)
            if ones > t:
                c[i - 1] = 1
            elif len(settled) - ones > t:
                c[i - 1] = 0
    return DecisionVector.from_bits(c)


def decide(society: "Society", x: DecisionVector) -> Outcome:
    """Simple-majority outcome over the collective decision vector."""
    c = propagate(society, x)
    ones = sum(c.bits())
    zeros = c.n - ones
    if ones > zeros:
        return Outcome.ONE
    if ones < zeros:
        return Outcome.ZERO
    return Outcome.TIE

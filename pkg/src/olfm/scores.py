"""Exact satisfaction, Rae and Banzhaf scores by full enumeration.

All scores are raw integer counts over the 2^n initial decision vectors
(no normalization).  The satisfaction path runs through the bit-parallel
kernels; the Rae and Banzhaf operations enumerate coalitions of the
induced simple game through the scalar decision engine, so the affine
relation sat = rae = 2^(n-1) + banzhaf stays a falsifiable cross-check
between independent code paths rather than an identity by construction.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Union

from .decision import DecisionVector, Outcome, decide
from .errors import TieEncountered, TooLarge
from .kernels import banzhaf_from_win, enumerate_society
from .society import Society, _check_actor

DEFAULT_CAP = 24
MEMO_LIMIT = 20  # largest n for which the induced game tabulates outcomes

TieRule = str  # "reject" | "ones-win" | "zeros-win"


def _resolve(outcome: Outcome, tie_rule: TieRule) -> int:
    if outcome is Outcome.TIE:
        if tie_rule == "ones-win":
            return 1
        if tie_rule == "zeros-win":
            return 0
        raise TieEncountered("majority tie under tie rule 'reject'")
    return outcome.value


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise TooLarge(f"enumeration over 2^{n} vectors exceeds the cap of {cap} actors")


@dataclass(frozen=True)
class ScoreTable:
    """Per-actor satisfaction and Banzhaf counts for one society.

    total_sat is accumulated per vector (how many actors each outcome
    satisfies), independently of the per-actor sat counts.
    """

    n: int
    sat: tuple[int, ...]
    banzhaf: tuple[int, ...]
    total_sat: int

    def sat_of(self, i: int) -> int:
        return self.sat[i - 1]

    def banzhaf_of(self, i: int) -> int:
        return self.banzhaf[i - 1]


class InducedGame:
    """Simple game induced by the collective decision: a coalition wins
    iff the decision on its characteristic vector is 1.

    Outcomes are evaluated lazily through the scalar engine; for n up to
    MEMO_LIMIT they are cached per coalition, above that nothing 2^n-sized
    is materialized.
    """

    def __init__(self, society: Society, tie_rule: TieRule = "reject"):
        self.society = society
        self.n = society.n
        self.tie_rule = tie_rule
        self._memo: Union[bytearray, None] = (
            bytearray(1 << society.n) if society.n <= MEMO_LIMIT else None
        )

    def winning_index(self, k: int) -> bool:
        """Winning status of the coalition whose characteristic vector has
        integer form k (actor 1 = most significant of the n bits)."""
        memo = self._memo
        if memo is not None and memo[k]:
            return memo[k] == 2
        value = _resolve(decide(self.society, DecisionVector(self.n, k)), self.tie_rule)
        if memo is not None:
            memo[k] = 2 if value else 1
        return bool(value)

    def winning(self, coalition: Iterable[int]) -> bool:
        k = 0
        for i in coalition:
            _check_actor(self.n, i)
            k |= 1 << (self.n - i)
        return self.winning_index(k)


@functools.lru_cache(maxsize=16)
def _induced(society: Society, tie_rule: TieRule) -> InducedGame:
    return InducedGame(society, tie_rule)


def satbar(society: Society, i: int, x: DecisionVector, tie_rule: TieRule = "reject") -> int:
    """1 when the collective decision on x matches actor i's initial bit."""
    value = _resolve(decide(society, x), tie_rule)
    return 1 if value == x.bit(i) else 0


def sat_all(
    society: Society,
    *,
    tie_rule: TieRule = "reject",
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    backend: Union[str, None] = None,
) -> ScoreTable:
    """One enumeration pass over all 2^n vectors: satisfaction for every
    actor, Banzhaf counts from the outcome bitmap, and the per-vector
    agreement total as a double-entry check on the sat column."""
    _check_cap(society.n, cap)
    result = enumerate_society(society, tie_rule=tie_rule, workers=workers, backend=backend)
    bz = banzhaf_from_win(result.win, society.n)
    table = ScoreTable(
        n=society.n, sat=result.sat, banzhaf=bz, total_sat=result.agree_total
    )
    if table.total_sat != sum(table.sat):
        raise RuntimeError(
            "enumeration bookkeeping mismatch: per-vector total "
            f"{table.total_sat} != per-actor sum {sum(table.sat)}"
        )
    return table


def sat(
    society: Society,
    i: int,
    *,
    tie_rule: TieRule = "reject",
    cap: int = DEFAULT_CAP,
    workers: int = 1,
) -> int:
    """Number of initial vectors whose collective decision matches actor
    i's initial bit."""
    _check_actor(society.n, i)
    _check_cap(society.n, cap)
    result = enumerate_society(society, tie_rule=tie_rule, workers=workers)
    return result.sat[i - 1]


def banzhaf(
    society: Society,
    i: int,
    *,
    tie_rule: TieRule = "reject",
    cap: int = DEFAULT_CAP,
) -> int:
    """Number of coalitions in which actor i is critical: X wins while X
    minus {i} loses.  Enumerated coalition by coalition over the induced
    game, never via the affine satisfaction relation."""
    _check_actor(society.n, i)
    _check_cap(society.n, cap)
    game = _induced(society, tie_rule)
    n = society.n
    member = 1 << (n - i)
    count = 0
    for k in range(1 << n):
        if k & member and game.winning_index(k) and not game.winning_index(k ^ member):
            count += 1
    return count


def rae(
    society: Society,
    i: int,
    *,
    tie_rule: TieRule = "reject",
    cap: int = DEFAULT_CAP,
) -> int:
    """Number of coalitions where actor i's membership status matches the
    outcome: i inside a winning coalition or outside a losing one."""
    _check_actor(society.n, i)
    _check_cap(society.n, cap)
    game = _induced(society, tie_rule)
    n = society.n
    member = 1 << (n - i)
    count = 0
    for k in range(1 << n):
        if bool(k & member) == game.winning_index(k):
            count += 1
    return count


def is_dummy(
    society: Society,
    i: int,
    *,
    tie_rule: TieRule = "reject",
    cap: int = DEFAULT_CAP,
) -> bool:
    """True when removing actor i never turns a winning coalition losing."""
    _check_actor(society.n, i)
    _check_cap(society.n, cap)
    game = _induced(society, tie_rule)
    n = society.n
    member = 1 << (n - i)
    for k in range(1 << n):
        if k & member and game.winning_index(k) and not game.winning_index(k ^ member):
            return False
    return True


def is_dictator(
    society: Society,
    i: int,
    *,
    tie_rule: TieRule = "reject",
    cap: int = DEFAULT_CAP,
) -> bool:
    """True when a coalition wins exactly when actor i belongs to it."""
    _check_actor(society.n, i)
    _check_cap(society.n, cap)
    game = _induced(society, tie_rule)
    n = society.n
    member = 1 << (n - i)
    for k in range(1 << n):
        if bool(k & member) != game.winning_index(k):
            return False
    return True


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def table_rows(society: Society, table: ScoreTable) -> list[dict]:
    half = 1 << (society.n - 1)
    rows = []
    for i in range(1, society.n + 1):
        rows.append(
            {
                "actor": i,
                "class": society.classes[i - 1].value,
                "layer": society.layers[i - 1],
                "sat": table.sat[i - 1],
                "banzhaf": table.banzhaf[i - 1],
                "sat_affine": half + table.banzhaf[i - 1],
            }
        )
    return rows


def table_to_tsv(society: Society, table: ScoreTable) -> str:
    header = ["actor", "class", "layer", "sat", "banzhaf", "sat_affine"]
    lines = ["\t".join(header)]
    for row in table_rows(society, table):
        lines.append("\t".join(str(row[col]) for col in header))
    lines.append(f"# total_sat\t{table.total_sat}")
    return "\n".join(lines) + "\n"


def table_to_json(society: Society, table: ScoreTable) -> dict:
    return {
        "n": table.n,
        "actors": table_rows(society, table),
        "total_sat": table.total_sat,
    }

"""Kernel backend selection and the partitioned enumeration driver.

The hot loop (evaluating the collective decision for all 2^n initial
vectors) has two interchangeable implementations: a compiled Cython
extension and a pure-Python big-integer twin.  The compiled one is picked
at import when available; set OLFM_PURE=1 to force the fallback.  Both
return exact integers, so results are bit-identical across backends and
across any 64-aligned partition of the index space.
"""

from __future__ import annotations

import os
from array import array
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING

from . import _core_py
from ._core_py import index_bit_plane
from .errors import TieEncountered

if TYPE_CHECKING:
    from .society import Society

_FORCE_PURE = os.environ.get("OLFM_PURE") == "1"

if not _FORCE_PURE:
    try:
        from . import _core as _active

        BACKEND = "compiled"
    except ImportError:
        _active = _core_py
        BACKEND = "pure-python"
else:
    _active = _core_py
    BACKEND = "pure-python"

KERNEL_MAX_ACTORS = 30


def available_backends() -> tuple[str, ...]:
    names = ["pure-python"]
    try:
        from . import _core  # noqa: F401

        names.insert(0, "compiled")
    except ImportError:
        pass
    return tuple(names)


def get_backend(name: str | None):
    """Kernel module by name; None means the backend selected at import."""
    if name is None:
        return _active
    if name == "pure-python":
        return _core_py
    if name == "compiled":
        from . import _core

        return _core
    raise ValueError(f"unknown backend {name!r}")


@dataclass(frozen=True)
class Plan:
    """Society compiled to the flat arrays the kernels consume.

    Actor positions are 0-based; thr holds the agreement count that must
    be exceeded to override an actor (-1 for sources), and the
    predecessors sit in CSR layout.
    """

    n: int
    order: array
    thr: array
    pred_ptr: array
    pred_idx: array


def compile_plan(society: "Society") -> Plan:
    n = society.n
    order = array("i", (i - 1 for i in society.order))
    thr = array("i")
    pred_ptr = array("i", [0])
    pred_idx = array("i")
    for a in range(n):
        preds = society.preds[a]
        if preds:
            thr.append(society.rule.threshold(len(preds)))
        else:
            thr.append(-1)
        for p in preds:
            pred_idx.append(p - 1)
        pred_ptr.append(len(pred_idx))
    return Plan(n=n, order=order, thr=thr, pred_ptr=pred_ptr, pred_idx=pred_idx)


def majority_params(n: int, tie_rule: str) -> tuple[int, bool]:
    """Majority count threshold (outcome 1 when ones exceed it) plus
    whether ties must be detected for rejection."""
    if tie_rule not in ("reject", "ones-win", "zeros-win"):
        raise ValueError(f"unknown tie rule {tie_rule!r}")
    if n % 2 == 1:
        return n // 2, False
    if tie_rule == "ones-win":
        return n // 2 - 1, False
    return n // 2, tie_rule == "reject"


def split_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Split [0, total) into at most `parts` contiguous 64-aligned ranges."""
    if parts <= 1 or total <= 64:
        return [(0, total)]
    lanes = (total + 63) // 64
    per = -(-lanes // parts) * 64
    return [(lo, min(lo + per, total)) for lo in range(0, total, per)]


@dataclass(frozen=True)
class EnumResult:
    """Full-space enumeration output for one society."""

    n: int
    sat: tuple[int, ...]
    agree_total: int
    win: int  # bit k = collective outcome for vector index k


def _run_chunk(args):
    (backend_name, n, order, thr, pred_ptr, pred_idx, lo, hi, maj_t, detect) = args
    impl = get_backend(backend_name)
    return impl.enumerate_range(n, order, thr, pred_ptr, pred_idx, lo, hi, maj_t, detect)


def enumerate_society(
    society: "Society",
    tie_rule: str = "reject",
    workers: int = 1,
    backend: str | None = None,
) -> EnumResult:
    """Run the kernel over the whole 2^n index space.

    With workers > 1 the space is split into contiguous 64-aligned ranges
    handled by separate processes; counts combine by addition and outcome
    bitmap chunks by concatenation, so the result does not depend on the
    partition.
    """
    n = society.n
    if n > KERNEL_MAX_ACTORS:
        raise ValueError(f"enumeration kernels support up to {KERNEL_MAX_ACTORS} actors")
    plan = compile_plan(society)
    maj_t, detect = majority_params(n, tie_rule)
    total = 1 << n
    ranges = split_ranges(total, max(1, workers))
    payloads = [
        (backend, n, plan.order, plan.thr, plan.pred_ptr, plan.pred_idx, lo, hi, maj_t, detect)
        for lo, hi in ranges
    ]
    if len(payloads) == 1 or workers <= 1:
        chunks = [_run_chunk(p) for p in payloads]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_chunk, payloads))

    sat = [0] * n
    agree_total = 0
    parts: list[bytes] = []
    tie_seen = False
    for chunk_sat, chunk_agree, chunk_win, chunk_tie in chunks:
        for a in range(n):
            sat[a] += chunk_sat[a]
        agree_total += chunk_agree
        parts.append(chunk_win)
        tie_seen = tie_seen or chunk_tie
    if tie_seen:
        raise TieEncountered(f"majority tie with {n} actors under tie rule 'reject'")
    win = int.from_bytes(b"".join(parts), "little")
    return EnumResult(n=n, sat=tuple(sat), agree_total=agree_total, win=win)


# ---------------------------------------------------------------------------
# Whole-bitmap derivations.  With W the outcome bitmap over [0, 2^n), the
# coalition X containing actor i pairs with X minus i at index distance
# 2^(n-i); shifting aligned halves of W answers per-coalition questions for
# every X at once.
# ---------------------------------------------------------------------------


def critical_coalitions(win: int, n: int, i: int) -> int:
    """Bitmap of coalitions X (as vector indices) where X wins and
    X minus {i} loses."""
    j = n - i
    plane = index_bit_plane(j, 0, 1 << n)
    full = (1 << (1 << n)) - 1
    with_i = win & plane
    without_i = (win & (full ^ plane)) << (1 << j)
    return with_i & (full ^ without_i)


def banzhaf_from_win(win: int, n: int) -> tuple[int, ...]:
    return tuple(critical_coalitions(win, n, i).bit_count() for i in range(1, n + 1))


def win_is_monotone(win: int, n: int) -> bool:
    """True when flipping any single bit up never flips the outcome down."""
    full = (1 << (1 << n)) - 1
    for j in range(n):
        plane = index_bit_plane(j, 0, 1 << n)
        hi_half = win & plane
        lo_half = win & (full ^ plane)
        if lo_half & (full ^ (hi_half >> (1 << j))):
            return False
    return True

"""Pure-Python twin of the compiled enumeration kernel.

Every actor's value across the index range [lo, hi) is held in a single
big integer: bit (k - lo) is the value for decision vector k.  Python's
arbitrary-width integers then act as wide SIMD lanes, so one pass of
bitwise operations evaluates the influence process for every vector at
once.  Vector index k encodes the initial decisions with actor 1 in the
most significant of the n bits, i.e. actor i reads index bit n - i.
"""

from __future__ import annotations

from typing import Sequence


def index_bit_plane(j: int, lo: int, hi: int) -> int:
    """Big int whose bit (k - lo) equals bit j of k, for k in [lo, hi)."""
    width = hi - lo
    if width <= 0:
        return 0
    half = 1 << j
    period = half << 1
    offset = lo & (period - 1)
    needed = offset + width
    if needed <= period:
        # The range touches a single period window; emit the ones block
        # [half, period) clipped to it.
        start = max(offset, half)
        stop = min(needed, period)
        if stop <= start:
            return 0
        return ((1 << (stop - start)) - 1) << (start - offset)
    pattern = ((1 << half) - 1) << half
    filled = period
    while filled < needed:
        pattern |= pattern << filled
        filled <<= 1
    return (pattern >> offset) & ((1 << width) - 1)


def _ge_planes(planes: Sequence[int], mask: int) -> list[int]:
    """ge[m] = lanes where at least m of the given planes are set."""
    d = len(planes)
    ge = [mask] + [0] * d
    upper = 0
    for plane in planes:
        upper += 1
        for m in range(upper, 0, -1):
            ge[m] |= ge[m - 1] & plane
    return ge


def enumerate_range(
    n: int,
    order: Sequence[int],
    thr: Sequence[int],
    pred_ptr: Sequence[int],
    pred_idx: Sequence[int],
    lo: int,
    hi: int,
    maj_threshold: int,
    detect_ties: bool,
):
    """Evaluate the collective decision for every vector index in [lo, hi).

    Actors are given as 0-based positions in layer order; thr[a] is the
    agreement count a coalition of predecessors must exceed to override
    actor a (-1 marks a source, which keeps its own bit).  Returns
    per-actor counts of vectors whose outcome matches the actor's initial
    bit, the per-vector agreement total, the outcome bitmap as
    little-endian bytes, and whether any majority tie was seen.
    """
    width = hi - lo
    if width <= 0:
        return [0] * n, 0, b"", False
    mask = (1 << width) - 1

    c = [0] * n
    xs = [0] * n
    for a in order:
        x = index_bit_plane(n - 1 - a, lo, hi)
        xs[a] = x
        t = thr[a]
        if t < 0:
            c[a] = x
            continue
        preds = [c[pred_idx[e]] for e in range(pred_ptr[a], pred_ptr[a + 1])]
        d = len(preds)
        ge = _ge_planes(preds, mask)
        to_one = ge[t + 1]  # more than t predecessors settled on 1
        to_zero = mask ^ ge[d - t]  # fewer than d-t ones: more than t zeros
        c[a] = to_one | (x & (mask ^ (to_one | to_zero)))

    ge = _ge_planes(c, mask)
    win = ge[maj_threshold + 1]
    tie_seen = False
    if detect_ties:
        half = n >> 1
        tie_seen = (ge[half] & (mask ^ ge[half + 1])) != 0

    sat = [0] * n
    agree = [0] * n
    for a in range(n):
        agree[a] = mask ^ (win ^ xs[a])
        sat[a] = agree[a].bit_count()

    # Independent per-vector bookkeeping: sum the agreement count of each
    # vector by accumulating threshold planes instead of per-actor counts.
    ge_agree = _ge_planes(agree, mask)
    agree_total = sum(ge_agree[m].bit_count() for m in range(1, n + 1))

    win_bytes = win.to_bytes((width + 7) // 8, "little")
    return sat, agree_total, win_bytes, tie_seen

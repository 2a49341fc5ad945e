# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel: 64 decision vectors per machine word.

Mirrors olfm._core_py.enumerate_range.  Lane words pack the values of 64
consecutive vector indices, influence thresholds and the majority vote are
evaluated with bit-sliced counters, so a lane costs O(edges + actors) word
operations.
"""

from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    """
    static inline int olfm_popcount64(unsigned long long v) {
        return __builtin_popcountll(v);
    }
    """
    int olfm_popcount64(unsigned long long) nogil

MAXN = 30

cdef uint64_t ALL = <uint64_t>0xFFFFFFFFFFFFFFFFULL


cdef inline uint64_t _xlane(int j, uint64_t k0) noexcept nogil:
    # bit t of the result = bit j of (k0 + t); k0 is 64-aligned, so for
    # j >= 6 the whole lane shares one value and below that the lane is a
    # fixed period pattern.
    if j >= 6:
        return ALL if (k0 >> j) & 1 else 0
    if j == 0:
        return <uint64_t>0xAAAAAAAAAAAAAAAAULL
    if j == 1:
        return <uint64_t>0xCCCCCCCCCCCCCCCCULL
    if j == 2:
        return <uint64_t>0xF0F0F0F0F0F0F0F0ULL
    if j == 3:
        return <uint64_t>0xFF00FF00FF00FF00ULL
    if j == 4:
        return <uint64_t>0xFFFF0000FFFF0000ULL
    return <uint64_t>0xFFFFFFFF00000000ULL


cdef inline void _cnt_add(uint64_t* cnt, uint64_t plane) noexcept nogil:
    cdef uint64_t carry = plane
    cdef uint64_t t
    cdef int b = 0
    while carry != 0 and b < 6:
        t = cnt[b] ^ carry
        carry = cnt[b] & carry
        cnt[b] = t
        b += 1


cdef inline uint64_t _cnt_gt(uint64_t* cnt, int t) noexcept nogil:
    # lanes where the bit-sliced counter exceeds t (0 <= t < 64)
    cdef uint64_t gt = 0
    cdef uint64_t eq = ALL
    cdef uint64_t tb
    cdef int b
    for b in range(5, -1, -1):
        tb = ALL if (t >> b) & 1 else 0
        gt |= eq & cnt[b] & ~tb
        eq &= ~(cnt[b] ^ tb)
    return gt


def enumerate_range(int n, object order, object thr, object pred_ptr,
                    object pred_idx, unsigned long long lo,
                    unsigned long long hi, int maj_threshold,
                    bint detect_ties):
    """Same contract as olfm._core_py.enumerate_range."""
    if n < 1 or n > 30:
        raise ValueError("kernel supports 1..30 actors")
    if lo > hi or hi > (<unsigned long long>1 << n):
        raise ValueError("bad index range")
    if (lo & 63) != 0 and lo != hi:
        raise ValueError("range start must be 64-aligned")

    if hi == lo:
        return [0] * n, 0, b"", False

    cdef int[:] order_v = order
    cdef int[:] thr_v = thr
    cdef int[:] ptr_v = pred_ptr
    cdef int[:] idx_v = pred_idx

    cdef uint64_t width = hi - lo
    buf = bytearray(<Py_ssize_t>((width + 7) >> 3))
    cdef unsigned char[:] out = buf

    cdef int64_t sat[30]
    cdef uint64_t c[30]
    cdef uint64_t xs[30]
    cdef uint64_t cnt[6]
    cdef int64_t agree_total = 0
    cdef uint64_t tie_acc = 0
    cdef uint64_t k0, lanemask, win, x, to_one, to_zero, aplane
    cdef Py_ssize_t off
    cdef int a, b, p, t, d, e, lane_bits, nb, half

    for a in range(n):
        sat[a] = 0

    with nogil:
        k0 = lo
        while k0 < hi:
            lane_bits = 64 if hi - k0 >= 64 else <int>(hi - k0)
            lanemask = ALL if lane_bits == 64 else ((<uint64_t>1 << lane_bits) - 1)

            # settle each actor in layer order
            for p in range(n):
                a = order_v[p]
                x = _xlane(n - 1 - a, k0)
                xs[a] = x
                t = thr_v[a]
                if t < 0:
                    c[a] = x
                    continue
                d = ptr_v[a + 1] - ptr_v[a]
                for b in range(6):
                    cnt[b] = 0
                for e in range(ptr_v[a], ptr_v[a + 1]):
                    _cnt_add(cnt, c[idx_v[e]])
                to_one = _cnt_gt(cnt, t)
                to_zero = ~_cnt_gt(cnt, d - t - 1)  # fewer than d-t ones
                c[a] = to_one | (x & ~(to_one | to_zero))

            # simple majority over the settled values
            for b in range(6):
                cnt[b] = 0
            for a in range(n):
                _cnt_add(cnt, c[a])
            win = _cnt_gt(cnt, maj_threshold) & lanemask
            if detect_ties:
                half = n >> 1
                tie_acc |= _cnt_gt(cnt, half - 1) & ~_cnt_gt(cnt, half) & lanemask

            off = <Py_ssize_t>((k0 - lo) >> 3)
            nb = (lane_bits + 7) >> 3
            for b in range(nb):
                out[off + b] = <unsigned char>((win >> (8 * b)) & 0xFF)

            # agreement of the outcome with each initial bit, plus the
            # per-vector agreement totals through a second counter
            for b in range(6):
                cnt[b] = 0
            for a in range(n):
                aplane = (~(win ^ xs[a])) & lanemask
                sat[a] += olfm_popcount64(aplane)
                _cnt_add(cnt, aplane)
            for b in range(6):
                agree_total += (<int64_t>1 << b) * olfm_popcount64(cnt[b])

            k0 += 64

    return [sat[a] for a in range(n)], agree_total, bytes(buf), tie_acc != 0

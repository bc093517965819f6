# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled state enumeration; same contract as ``_pykernel.state_histogram``."""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport int64_t, uint64_t


cdef int _popcount(uint64_t s) nogil:
    cdef int c = 0
    while s:
        s &= s - 1
        c += 1
    return c


def state_histogram(slot_end, end_slot, seam, int n_cross, lo, hi, int shift=0):
    cdef int n_edges = len(seam)
    if n_cross > 62:
        raise OverflowError("more than 62 crossings")
    cdef int n_slots = 4 * n_cross
    cdef int *c_slot_end = <int *> malloc(max(n_slots, 1) * sizeof(int))
    cdef int *c_end_slot = <int *> malloc(max(2 * n_edges, 1) * sizeof(int))
    cdef int *c_seam = <int *> malloc(max(n_edges, 1) * sizeof(int))
    cdef char *seen = <char *> malloc(max(n_edges, 1))
    cdef int dim = n_edges + 1
    cdef int64_t *hist = <int64_t *> calloc((n_cross + 1) * dim * dim, sizeof(int64_t))
    if not (c_slot_end and c_end_slot and c_seam and seen and hist):
        free(c_slot_end); free(c_end_slot); free(c_seam); free(seen); free(hist)
        raise MemoryError()
    cdef int i
    for i in range(n_slots):
        c_slot_end[i] = slot_end[i]
    for i in range(2 * n_edges):
        c_end_slot[i] = end_slot[i]
    for i in range(n_edges):
        c_seam[i] = seam[i]

    cdef uint64_t s, c_lo = lo, c_hi = hi
    cdef uint64_t mask = (<uint64_t> 1 << n_cross) - 1
    cdef int e0, e, k, slot, end, start, pos, w, k0, k1, bad = 0, bad_w = 0
    with nogil:
        s = c_lo
        while s < c_hi and not bad:
            if shift and (((s << shift) | (s >> (n_cross - shift))) & mask) == s:
                s += 1
                continue
            for i in range(n_edges):
                seen[i] = 0
            k0 = 0
            k1 = 0
            for e0 in range(n_edges):
                if seen[e0]:
                    continue
                seen[e0] = 1
                w = c_seam[e0]
                pos = 2 * e0 + 1
                start = 2 * e0
                while True:
                    slot = c_end_slot[pos]
                    k = slot & 3
                    if (s >> (slot >> 2)) & 1:
                        k = 3 - k
                    else:
                        k = k ^ 1
                    end = c_slot_end[(slot & ~3) | k]
                    if end == start:
                        break
                    e = end >> 1
                    seen[e] = 1
                    if end & 1:
                        w -= c_seam[e]
                        pos = end - 1
                    else:
                        w += c_seam[e]
                        pos = end + 1
                if w == 0:
                    k0 += 1
                elif w == 1 or w == -1:
                    k1 += 1
                else:
                    bad = 1
                    bad_w = w
                    break
            hist[(_popcount(s) * dim + k0) * dim + k1] += 1
            s += 1

    result = {}
    cdef int r, a, b
    cdef int64_t cnt
    if not bad:
        for r in range(n_cross + 1):
            for a in range(dim):
                for b in range(dim):
                    cnt = hist[(r * dim + a) * dim + b]
                    if cnt:
                        result[(r, a, b)] = cnt
    free(c_slot_end); free(c_end_slot); free(c_seam); free(seen); free(hist)
    if bad:
        raise ValueError(f"circle with winding {bad_w}: malformed annular diagram")
    return result

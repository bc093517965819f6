"""Pure-Python state enumeration (reference and fallback)."""


def state_histogram(slot_end, end_slot, seam, n_cross, lo, hi, shift=0):
    """Histogram ``{(r, k0, k1): count}`` over the states ``lo <= s < hi``.

    ``r`` is the number of 1-smoothings, ``k0``/``k1`` the numbers of circles
    with winding 0 and +-1. With ``shift > 0``, states fixed by rotating the
    bit string by ``shift`` positions are skipped.
    """
    n_edges = len(seam)
    mask = (1 << n_cross) - 1
    hist = {}
    for s in range(lo, hi):
        if shift and (((s << shift) | (s >> (n_cross - shift))) & mask) == s:
            continue
        seen = [False] * n_edges
        k0 = k1 = 0
        for e0 in range(n_edges):
            if seen[e0]:
                continue
            seen[e0] = True
            w = seam[e0]
            pos = 2 * e0 + 1
            start = 2 * e0
            while True:
                slot = end_slot[pos]
                k = slot & 3
                if (s >> (slot >> 2)) & 1:
                    k = 3 - k
                else:
                    k ^= 1
                end = slot_end[(slot & ~3) | k]
                if end == start:
                    break
                e = end >> 1
                seen[e] = True
                if end & 1:
                    w -= seam[e]
                    pos = end - 1
                else:
                    w += seam[e]
                    pos = end + 1
            if w == 0:
                k0 += 1
            elif w == 1 or w == -1:
                k1 += 1
            else:
                raise ValueError(f"circle with winding {w}: malformed annular diagram")
        key = (bin(s).count("1"), k0, k1)
        hist[key] = hist.get(key, 0) + 1
    return hist

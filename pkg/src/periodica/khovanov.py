"""Rational Khovanov homology by the cube of resolutions, and rank tables.

Generators of a resolution are bitmasks over its circles: bit ``a`` set means
circle ``a`` carries ``x`` (degree -1), clear means ``1`` (degree +1).
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Iterable, List, Optional, Tuple

from .budget import Budget, BudgetExceeded, default_budget
from .diagram import PlanarDiagram, crossing_counts
from .laurent import LaurentPoly

__all__ = [
    "RankTable",
    "DataInconsistency",
    "kh_ranks",
    "ingest_ranks",
    "max_rank",
    "integer_rank",
]


class DataInconsistency(ValueError):
    """Rank data that is malformed or contradicts a Jones polynomial."""


@dataclass
class RankTable:
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)
    provenance: str = "computed"

    def __post_init__(self):
        for key, rank in self.entries.items():
            if rank < 1:
                raise DataInconsistency(f"rank {rank} at {key}: absent entries already mean zero")

    def euler_characteristic(self) -> LaurentPoly:
        coeffs: Dict[int, int] = {}
        for (i, j), rank in self.entries.items():
            coeffs[j] = coeffs.get(j, 0) + (-rank if i & 1 else rank)
        return LaurentPoly(coeffs)

    def to_csv(self) -> str:
        out = ["i,j,rank"]
        out.extend(f"{i},{j},{r}" for (i, j), r in sorted(self.entries.items()))
        return "\n".join(out) + "\n"

    def __eq__(self, other) -> bool:
        if not isinstance(other, RankTable):
            return NotImplemented
        return self.entries == other.entries


def max_rank(t: RankTable) -> int:
    return max(t.entries.values(), default=0)


def integer_rank(rows: Iterable[Dict[int, int]]) -> int:
    """Rank over Q of an integer matrix given as sparse rows.

    Rows are reduced against earlier pivots in registration order. Unit
    pivots keep everything integral; otherwise rows are cross-multiplied and
    divided by their content, so no fractions appear.
    """
    pivots: Dict[int, Tuple[int, Dict[int, int]]] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            hits = [(pivots[c][0], c) for c in r if c in pivots]
            if not hits:
                break
            _, c = min(hits)
            prow = pivots[c][1]
            a, b = r[c], prow[c]
            if b in (1, -1):
                mul, fac = 1, a * b
            else:
                g = gcd(a, b)
                mul, fac = b // g, a // g
            if mul != 1:
                r = {k: v * mul for k, v in r.items()}
            for k, v in prow.items():
                nv = r.get(k, 0) - fac * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
            if mul != 1 and r:
                g = 0
                for v in r.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    r = {k: v // g for k, v in r.items()}
        if r:
            unit = [c for c, v in r.items() if v in (1, -1)]
            col = min(unit) if unit else min(r)
            pivots[col] = (len(pivots), r)
    return len(pivots)


def _circles(flat: PlanarDiagram, ends, bits: int) -> List[int]:
    """Circle index of every edge in the resolution ``bits``."""
    slot_end, end_slot = ends
    owner = [-1] * flat.n_edges
    count = 0
    for e0 in range(flat.n_edges):
        if owner[e0] >= 0:
            continue
        owner[e0] = count
        pos, start = 2 * e0 + 1, 2 * e0
        while True:
            slot = end_slot[pos]
            k = slot & 3
            k = 3 - k if (bits >> (slot >> 2)) & 1 else k ^ 1
            end = slot_end[(slot & ~3) | k]
            if end == start:
                break
            owner[end >> 1] = count
            pos = end - 1 if end & 1 else end + 1
        count += 1
    return owner


def _edge_map(flat, owner, owner2, c):
    """Describe the cube edge flipping crossing ``c``.

    Returns ``(kind, involved, perm)``: kind is "m" (merge) or "s" (split),
    ``involved`` the circles touched on each side, ``perm`` the target index
    of every untouched source circle.
    """
    edges = flat.crossings[c]
    n_src = max(owner) + 1
    a, b = owner[edges[0]], owner[edges[2]]
    a2, b2 = owner2[edges[0]], owner2[edges[1]]
    perm = [-1] * n_src
    for e, circ in enumerate(owner):
        if circ not in (a, b):
            perm[circ] = owner2[e]
    if a != b:
        return "m", (a, b), (a2,), perm
    return "s", (a,), (a2, b2), perm


def _apply(kind, src, dst, perm, mask):
    """Images of generator ``mask`` as a list of target masks (coefficient 1)."""
    base = 0
    for circ, t in enumerate(perm):
        if t >= 0 and (mask >> circ) & 1:
            base |= 1 << t
    if kind == "m":
        xa = (mask >> src[0]) & 1
        xb = (mask >> src[1]) & 1
        if xa and xb:
            return []
        return [base | ((xa | xb) << dst[0])]
    if (mask >> src[0]) & 1:
        return [base | (1 << dst[0]) | (1 << dst[1])]
    return [base | (1 << dst[1]), base | (1 << dst[0])]


def kh_ranks(
    d: PlanarDiagram,
    threads: int = 1,
    budget: Optional[Budget] = None,
) -> RankTable:
    """Ranks of rational Khovanov homology, keyed by ``(i, j)``."""
    budget = budget or default_budget()
    n = d.n_crossings
    if n > budget.kh_crossings:
        raise BudgetExceeded(f"Khovanov homology of {n} crossings exceeds the budget of {budget.kh_crossings}")
    npos, nneg = crossing_counts(d)
    ends = d.ends()
    owners = [_circles(d, ends, s) for s in range(1 << n)]
    ncirc = [max(o) + 1 if o else 0 for o in owners]

    # generator indices per (r, raw quantum degree)
    index: Dict[Tuple[int, int], Dict[Tuple[int, int], int]] = {}
    for s in range(1 << n):
        r = bin(s).count("1")
        k = ncirc[s]
        for mask in range(1 << k):
            deg = k - 2 * bin(mask).count("1") + r
            block = index.setdefault((r, deg), {})
            block[(s, mask)] = len(block)

    def rank_of(key):
        r, deg = key
        target = index.get((r + 1, deg))
        if not target:
            return key, 0
        rows = []
        for (s, mask) in index[key]:
            row: Dict[int, int] = {}
            for c in range(n):
                if (s >> c) & 1:
                    continue
                s2 = s | (1 << c)
                sign = -1 if bin(s & ((1 << c) - 1)).count("1") & 1 else 1
                kind, src, dst, perm = _edge_map(d, owners[s], owners[s2], c)
                for m2 in _apply(kind, src, dst, perm, mask):
                    col = target[(s2, m2)]
                    v = row.get(col, 0) + sign
                    if v:
                        row[col] = v
                    else:
                        del row[col]
            rows.append(row)
        return key, integer_rank(rows)

    keys = sorted(index)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            ranks = dict(pool.map(rank_of, keys))
    else:
        ranks = dict(map(rank_of, keys))

    entries: Dict[Tuple[int, int], int] = {}
    for (r, deg), block in index.items():
        h = len(block) - ranks[(r, deg)] - ranks.get((r - 1, deg), 0)
        if h:
            entries[(r - nneg, deg + npos - 2 * nneg)] = h
    # each crossing-free loop tensors with a two-dimensional space
    for _ in d.loops:
        grown: Dict[Tuple[int, int], int] = {}
        for (i, j), h in entries.items():
            for dj in (1, -1):
                grown[(i, j + dj)] = grown.get((i, j + dj), 0) + h
        entries = grown
    return RankTable(entries, "computed")


def ingest_ranks(source, jones: Optional[LaurentPoly] = None) -> RankTable:
    """Read a ``i,j,rank`` CSV (text or file object) into a validated table."""
    text = source if isinstance(source, str) else source.read()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    entries: Dict[Tuple[int, int], int] = {}
    if lines:
        reader = csv.reader(io.StringIO("\n".join(lines)))
        header = [h.strip() for h in next(reader)]
        if header != ["i", "j", "rank"]:
            raise DataInconsistency(f"expected header i,j,rank, got {','.join(header)}")
        for lineno, row in enumerate(reader, start=2):
            if len(row) != 3:
                raise DataInconsistency(f"line {lineno}: expected 3 fields, got {len(row)}")
            try:
                i, j, rank = (int(x.strip()) for x in row)
            except ValueError:
                raise DataInconsistency(f"line {lineno}: non-integer field in {row}") from None
            if rank < 1:
                raise DataInconsistency(f"line {lineno}: rank {rank} (absent entries already mean zero)")
            if (i, j) in entries:
                raise DataInconsistency(f"line {lineno}: duplicate entry ({i},{j})")
            entries[(i, j)] = rank
    table = RankTable(entries, "ingested")
    if jones is not None:
        chi = table.euler_characteristic()
        if chi != jones:
            raise DataInconsistency(f"Euler characteristic {chi} does not match Jones polynomial {jones}")
    return table

"""Kauffman states of periodic diagrams: tracing, isotropy levels, state sums."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple, Union

from . import _core
from .budget import Budget, default_budget
from .diagram import AnnularDiagram, PeriodicTangleCode, PlanarDiagram, crossing_counts, quotient
from .laurent import LaurentPoly, ONE

__all__ = [
    "KauffmanState",
    "StateStats",
    "Circle",
    "resolve_and_trace",
    "enumerate_level",
    "level_histogram",
    "state_histogram",
    "jones_kauffman",
    "UNKNOT_VALUE",
]

UNKNOT_VALUE = LaurentPoly({1: 1, -1: 1})


@dataclass(frozen=True)
class KauffmanState:
    """Bit ``x`` of ``bits`` is the smoothing (0 or 1) at crossing ``x``."""

    bits: int
    n_crossings: int

    def __post_init__(self):
        if not 0 <= self.bits < (1 << self.n_crossings):
            raise ValueError("state has bits beyond the crossing count")

    @property
    def r(self) -> int:
        return bin(self.bits).count("1")

    def __str__(self) -> str:
        return "".join(str((self.bits >> x) & 1) for x in range(self.n_crossings))


@dataclass(frozen=True)
class StateStats:
    r: int  # 1-smoothings in the full diagram
    v: int  # isotropy is exactly Z/p^v
    k: int  # free orbits of circles
    f: int  # fixed circles


@dataclass(frozen=True)
class Circle:
    edges: Tuple[int, ...]
    winding: int


def _flat(d: Union[AnnularDiagram, PlanarDiagram]) -> PlanarDiagram:
    return d.flatten() if isinstance(d, AnnularDiagram) else d


def resolve_and_trace(d: Union[AnnularDiagram, PlanarDiagram], state) -> List[Circle]:
    """Circles of the smoothing ``state`` of ``d`` with their windings."""
    flat = _flat(d)
    bits = state.bits if isinstance(state, KauffmanState) else int(state)
    if bits >> flat.n_crossings:
        raise ValueError("state does not fit the diagram")
    return _trace(flat, flat.ends(), bits)


def _trace(flat: PlanarDiagram, ends, bits: int) -> List[Circle]:
    slot_end, end_slot = ends
    seam = flat.seam
    seen = [False] * flat.n_edges
    circles = []
    for e0 in range(flat.n_edges):
        if seen[e0]:
            continue
        seen[e0] = True
        edges = [e0]
        w = seam[e0]
        pos, start = 2 * e0 + 1, 2 * e0
        while True:
            slot = end_slot[pos]
            k = slot & 3
            k = 3 - k if (bits >> (slot >> 2)) & 1 else k ^ 1
            end = slot_end[(slot & ~3) | k]
            if end == start:
                break
            e = end >> 1
            seen[e] = True
            edges.append(e)
            if end & 1:
                w -= seam[e]
                pos = end - 1
            else:
                w += seam[e]
                pos = end + 1
        assert abs(w) <= 1, f"circle with winding {w}: malformed annular diagram"
        circles.append(Circle(tuple(edges), w))
    circles.extend(Circle((), w) for w in flat.loops)
    return circles


def _level_shift(code: PeriodicTangleCode, v: int) -> Tuple[AnnularDiagram, int]:
    ann = quotient(code, v)
    nc = len(code.tangle.crossings)
    shift = (ann.copies // code.p) * nc if v < code.n else 0
    return ann, shift


def enumerate_level(code: PeriodicTangleCode, v: int) -> Iterator[Tuple[KauffmanState, StateStats]]:
    """Stream the states of the level-``v`` quotient whose isotropy is exactly Z/p^v."""
    ann, shift = _level_shift(code, v)
    if v < code.n and not code.tangle.crossings:
        return
    flat = ann.flatten()
    ends = flat.ends()
    n = flat.n_crossings
    mask = (1 << n) - 1
    mult = code.p**v
    for bits in range(1 << n):
        if shift and (((bits << shift) | (bits >> (n - shift))) & mask) == bits:
            continue
        circles = _trace(flat, ends, bits)
        f = sum(1 for c in circles if c.winding)
        st = KauffmanState(bits, n)
        yield st, StateStats(mult * st.r, v, len(circles) - f, f)


def state_histogram(
    flat: PlanarDiagram,
    shift: int = 0,
    threads: int = 1,
    budget: Optional[Budget] = None,
) -> Dict[Tuple[int, int, int], int]:
    """``{(r, k0, k1): count}`` over all (shift-aperiodic) states of ``flat``.

    Crossing-free loops of ``flat`` are included in the circle counts.
    """
    budget = budget or default_budget()
    n = flat.n_crossings
    budget.check_states(n)
    slot_end, end_slot = flat.ends()
    seam = list(flat.seam)
    total = 1 << n
    kernel = _core.state_histogram
    threads = max(1, int(threads))
    if threads == 1 or total < 4096:
        parts = [kernel(slot_end, end_slot, seam, n, 0, total, shift)]
    else:
        chunks = threads * 4
        bounds = [total * i // chunks for i in range(chunks + 1)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(
                pool.map(lambda i: kernel(slot_end, end_slot, seam, n, bounds[i], bounds[i + 1], shift), range(chunks))
            )
    l0 = sum(1 for w in flat.loops if w == 0)
    l1 = len(flat.loops) - l0
    hist: Dict[Tuple[int, int, int], int] = {}
    for part in parts:
        for (r, k0, k1), cnt in part.items():
            key = (r, k0 + l0, k1 + l1)
            hist[key] = hist.get(key, 0) + cnt
    return hist


def level_histogram(
    code: PeriodicTangleCode,
    v: int,
    threads: int = 1,
    budget: Optional[Budget] = None,
) -> Dict[Tuple[int, int, int], int]:
    """Counts of exact-isotropy level-``v`` states keyed by full-diagram ``(r, k, f)``."""
    ann, shift = _level_shift(code, v)
    if v < code.n and not code.tangle.crossings:
        # the empty state is fixed by the whole group
        return {}
    hist = state_histogram(ann.flatten(), shift, threads, budget)
    mult = code.p**v
    return {(mult * r, k, f): c for (r, k, f), c in hist.items()}


@lru_cache(maxsize=None)
def _u_pow(k: int) -> LaurentPoly:
    return UNKNOT_VALUE**k


def jones_kauffman(
    d: Union[AnnularDiagram, PlanarDiagram, PeriodicTangleCode],
    threads: int = 1,
    budget: Optional[Budget] = None,
) -> LaurentPoly:
    """Unreduced Jones polynomial by the Kauffman state sum (unknot = q + 1/q)."""
    if isinstance(d, PeriodicTangleCode):
        d = quotient(d, 0)
    flat = _flat(d)
    npos, nneg = crossing_counts(flat)
    hist = state_histogram(flat, 0, threads, budget)
    total = LaurentPoly()
    for (r, k0, k1), cnt in hist.items():
        sign = -cnt if r & 1 else cnt
        total = total + _u_pow(k0 + k1).shift(r).scale(sign)
    prefactor = LaurentPoly({npos - 2 * nneg: -1 if nneg & 1 else 1})
    return total * prefactor

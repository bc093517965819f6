"""Difference and equivariant Jones polynomials of p^n-periodic diagrams.

``dj[s]`` is the difference polynomial for the p^s-isotypic stratum and
``equiv_jones(code, s)`` the p^s-th equivariant Jones polynomial, the partial
sum ``dj[s] + ... + dj[n]``. Everything is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Tuple

from .budget import Budget
from .diagram import PeriodicTangleCode
from .laurent import LaurentPoly, ONE, ZERO, is_prime
from .states import UNKNOT_VALUE, jones_kauffman, level_histogram

__all__ = [
    "DiffJonesVector",
    "totient",
    "poly_P",
    "qdim_M",
    "dj_trivial",
    "dj_state_sum",
    "dj_vector",
    "equiv_jones",
    "check_decomposition",
    "check_skein",
    "SkeinReport",
]


def totient(m: int) -> int:
    result, k = m, 2
    rest = m
    while k * k <= rest:
        if rest % k == 0:
            while rest % k == 0:
                rest //= k
            result -= result // k
        k += 1
    if rest > 1:
        result -= result // rest
    return result


def _check_p(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"p={p} is not an odd prime")


@lru_cache(maxsize=None)
def poly_P(p: int, n: int) -> LaurentPoly:
    """Orbit-count polynomial of aperiodic binary words of length p^n.

    ``P_0 = q + 1/q``; for n >= 1 the coefficient of ``q^(2k - p^n)`` is the
    number of length-p^n words with k ones and exact period p^n, divided by
    p^n.
    """
    _check_p(p)
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return UNKNOT_VALUE
    N = p**n
    M = p ** (n - 1)
    coeffs = {}
    for k in range(1, N):
        count = comb(N, k)
        if k % p == 0:
            count -= comb(M, k // p)
        if count % N:
            raise ArithmeticError(f"P_{n}(p={p}): coefficient {count}/{N} is not integral")
        if count:
            coeffs[2 * k - N] = count // N
    return LaurentPoly(coeffs)


@lru_cache(maxsize=None)
def qdim_M(p: int, n: int, s: int, k: int, f: int) -> LaurentPoly:
    """Graded dimension of the p^s-stratum of a trivial link with ``k`` free
    orbits and ``f`` fixed circles under Z/p^n.

    The ``l`` free orbits of exact period p^s contribute ``C(k, l)``
    placements, the remaining ``k - l`` orbits run over the shorter periods.
    """
    _check_p(p)
    if not 0 <= s <= n:
        raise ValueError(f"stratum s={s} outside 0..{n}")
    if k < 0 or f < 0:
        raise ValueError("orbit counts must be non-negative")
    head = UNKNOT_VALUE**f
    if k == 0:
        return head if s == 0 else ZERO
    top = poly_P(p, s).substitute(p ** (n - s))
    lower = ZERO
    for j in range(s):
        lower = lower + poly_P(p, j).substitute(p ** (n - j)).scale(p**j)
    total = ZERO
    for ell in range(1, k + 1):
        term = (top**ell) * (lower ** (k - ell))
        total = total + term.scale(comb(k, ell) * p ** (s * (ell - 1)))
    return head * total


def dj_trivial(p: int, v: int, m: int, k: int, f: int) -> LaurentPoly:
    """Difference polynomial of index ``v - m`` of the Z/p^v trivial link."""
    if not 0 <= m <= v:
        raise ValueError(f"m={m} outside 0..{v}")
    return qdim_M(p, v, v - m, k, f)


@dataclass(frozen=True)
class DiffJonesVector:
    p: int
    n: int
    dj: Tuple[LaurentPoly, ...]

    def equivariant(self, s: int) -> LaurentPoly:
        if not 0 <= s <= self.n:
            raise ValueError(f"s={s} outside 0..{self.n}")
        total = ZERO
        for t in range(s, self.n + 1):
            total = total + self.dj[t]
        return total

    def jones(self) -> LaurentPoly:
        total = ZERO
        for s, poly in enumerate(self.dj):
            total = total + poly.scale(self.p**s)
        return total

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "dj": [str(x) for x in self.dj]}


def _prefactor(code: PeriodicTangleCode) -> LaurentPoly:
    npos, nneg = code.tangle.counts()
    npos *= code.order
    nneg *= code.order
    return LaurentPoly({npos - 2 * nneg: -1 if nneg & 1 else 1})


def _histograms(code, levels, threads, budget):
    return {v: level_histogram(code, v, threads, budget) for v in levels}


def _dj_from_hists(code: PeriodicTangleCode, m: int, hists) -> LaurentPoly:
    p, n = code.p, code.n
    total = ZERO
    for v in range(m, n + 1):
        orbit = p ** (n - v)
        for (r, k, f), cnt in hists[v].items():
            if cnt % orbit:
                raise ArithmeticError(f"level {v}: {cnt} states do not split into orbits of size {orbit}")
            coeff = cnt // orbit
            if r & 1:
                coeff = -coeff
            total = total + dj_trivial(p, v, m, k, f).shift(r).scale(coeff)
    return _prefactor(code) * total


def dj_state_sum(code: PeriodicTangleCode, m: int, threads: int = 1, budget: Optional[Budget] = None) -> LaurentPoly:
    """Difference polynomial of index ``n - m`` by the equivariant state sum.

    Level v contributes one term per Z/p^n-orbit of states with isotropy
    exactly Z/p^v, i.e. the exact states of the level-v quotient divided by
    the orbit size p^(n - v).
    """
    if not 0 <= m <= code.n:
        raise ValueError(f"m={m} outside 0..{code.n}")
    hists = _histograms(code, range(m, code.n + 1), threads, budget)
    return _dj_from_hists(code, m, hists)


def dj_vector(code: PeriodicTangleCode, threads: int = 1, budget: Optional[Budget] = None) -> DiffJonesVector:
    hists = _histograms(code, range(code.n + 1), threads, budget)
    dj = [ZERO] * (code.n + 1)
    for m in range(code.n + 1):
        dj[code.n - m] = _dj_from_hists(code, m, hists)
    return DiffJonesVector(code.p, code.n, tuple(dj))


def equiv_jones(code: PeriodicTangleCode, s: int, threads: int = 1, budget: Optional[Budget] = None) -> LaurentPoly:
    return dj_vector(code, threads, budget).equivariant(s)


def check_decomposition(code: PeriodicTangleCode, threads: int = 1, budget: Optional[Budget] = None):
    """Compare both decompositions of J against the full Kauffman state sum.

    Returns ``(ok, report)``.
    """
    vec = dj_vector(code, threads, budget)
    classical = jones_kauffman(code, threads, budget)
    weighted = vec.jones()
    by_totient = ZERO
    for s in range(code.n + 1):
        by_totient = by_totient + vec.equivariant(s).scale(totient(code.p**s))
    report = {
        "p": code.p,
        "n": code.n,
        "dj": [str(x) for x in vec.dj],
        "equivariant": [str(vec.equivariant(s)) for s in range(code.n + 1)],
        "jones": str(classical),
        "sum_p_s_dj": str(weighted),
        "sum_phi_equivariant": str(by_totient),
    }
    ok = weighted == classical and by_totient == classical
    report["ok"] = ok
    return ok, report


@dataclass
class SkeinReport:
    crossing: int
    exact_identity: bool
    congruences: Dict[int, bool] = field(default_factory=dict)
    lhs: List[str] = field(default_factory=list)
    rhs: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.exact_identity and all(self.congruences.values())

    def to_json(self) -> dict:
        return {
            "crossing": self.crossing,
            "exact_identity": self.exact_identity,
            "congruences": {str(k): v for k, v in self.congruences.items()},
            "ok": self.ok,
        }


def check_skein(code: PeriodicTangleCode, crossing_id: int, threads: int = 1, budget: Optional[Budget] = None) -> SkeinReport:
    """Skein relation of the difference polynomials for one crossing orbit.

    With ``N = p^n`` and D+, D-, D0 the orbit made positive, negative and
    resolved: ``q^-2N DJ_0(D+) - q^2N DJ_0(D-) = (q^-N - q^N) DJ_0(D0)``
    exactly, and for every s the same combination of ``DJ_{n-s}`` holds
    modulo ``q^(p^s) - q^(-p^s)``.
    """
    t = code.tangle
    t.crossing(crossing_id)
    pos = dj_vector(code.replace(t.with_sign(crossing_id, 1)), threads, budget)
    neg = dj_vector(code.replace(t.with_sign(crossing_id, -1)), threads, budget)
    res = dj_vector(code.replace(t.resolve(crossing_id)), threads, budget)
    N = code.order
    factor = LaurentPoly({-N: 1, N: -1})
    report = SkeinReport(crossing_id, False)
    for s in range(code.n + 1):
        idx = code.n - s
        lhs = pos.dj[idx].shift(-2 * N) - neg.dj[idx].shift(2 * N)
        rhs = factor * res.dj[idx]
        report.lhs.append(str(lhs))
        report.rhs.append(str(rhs))
        if idx == 0:
            report.exact_identity = lhs == rhs
        modulus = LaurentPoly.sym(code.p**s)
        report.congruences[s] = (lhs - rhs).div_exact(modulus) is not None
    return report

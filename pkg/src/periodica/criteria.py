"""Periodicity criteria: ideal membership tests and the Murasugi congruence."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .budget import Budget
from .diagram import PeriodicTangleCode, lk_with_axis, quotient
from .equivariant import totient
from .khovanov import DataInconsistency, RankTable, max_rank
from .laurent import LaurentPoly, ModPoly, is_prime
from .states import UNKNOT_VALUE, jones_kauffman

__all__ = [
    "IdealChain",
    "Verdict",
    "ideal_member",
    "przytycki_chain",
    "example_chain",
    "strengthened_chain",
    "przytycki_check",
    "strengthened_check",
    "murasugi_verify",
    "OBSTRUCTED",
    "NO_OBSTRUCTION",
]

OBSTRUCTED = "Obstructed"
NO_OBSTRUCTION = "NoObstruction"


@dataclass(frozen=True)
class IdealChain:
    """Generators ``p^a * (q^b - q^-b)``; ``b == 0`` stands for ``p^a`` itself."""

    p: int
    generators: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"p={self.p} is not an odd prime")
        gens = tuple((int(a), int(b)) for a, b in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("an ideal chain needs at least one generator")
        for i, (a, b) in enumerate(gens):
            if a != i:
                raise ValueError(f"generator {i} has p-exponent {a}, expected {i}")
            if b < 0:
                raise ValueError(f"generator {i} has negative exponent {b}")
            if b == 0 and i != len(gens) - 1:
                raise ValueError("a constant generator may only come last")
        for (_, b0), (_, b1) in zip(gens, gens[1:]):
            if b1 and b0 % b1:
                raise ValueError(f"q^{b1} - q^-{b1} does not divide q^{b0} - q^-{b0}")

    def element(self, i: int) -> LaurentPoly:
        a, b = self.generators[i]
        g = LaurentPoly.sym(b) if b else LaurentPoly.const(1)
        return g.scale(self.p**a)

    def __str__(self) -> str:
        parts = []
        for a, b in self.generators:
            coef = "" if a == 0 else (f"{self.p}" if a == 1 else f"{self.p}^{a}")
            if b == 0:
                parts.append(coef or "1")
            else:
                parts.append(f"{coef}(q^{b}-q^-{b})" if coef else f"q^{b}-q^-{b}")
        return "<" + ", ".join(parts) + ">"


def przytycki_chain(p: int, n: int) -> IdealChain:
    gens = [(i, p ** (n - i)) for i in range(n)] + [(n, 0)]
    return IdealChain(p, tuple(gens))


def example_chain(p: int, n: int) -> IdealChain:
    """Like ``przytycki_chain`` but ending in ``p^n (q - q^-1)`` instead of ``p^n``."""
    return IdealChain(p, tuple((i, p ** (n - i)) for i in range(n + 1)))


def strengthened_chain(p: int, n: int, s: int) -> IdealChain:
    if not 1 <= s <= n:
        raise ValueError(f"s={s} outside 1..{n}")
    return IdealChain(p, tuple((i, p ** (n - i)) for i in range(s)))


@dataclass
class Trace:
    stages: List[str] = field(default_factory=list)
    failed_stage: Optional[int] = None
    remainder: Optional[str] = None


def ideal_member(f: LaurentPoly, chain: IdealChain) -> Tuple[bool, Trace]:
    """Decide ``f in chain`` by successive p-adic reduction."""
    p = chain.p
    trace = Trace()
    last = len(chain.generators) - 1
    cur = f
    for i, (_, b) in enumerate(chain.generators):
        trace.stages.append(str(cur))
        if b == 0:
            return True, trace
        g = LaurentPoly.sym(b)
        if i == last:
            rem = cur.rem_monic(g)
            if rem:
                trace.failed_stage, trace.remainder = i, str(rem)
                return False, trace
            return True, trace
        red = cur.mod_p(p)
        gm = g.mod_p(p)
        if not red:
            h = ModPoly(p)
        else:
            h = red.div_exact(gm)
            if h is None:
                trace.failed_stage, trace.remainder = i, str(red.reduce(gm).lift())
                return False, trace
        cur = (cur - h.lift() * g).exact_div_int(p)
    return True, trace


@dataclass(frozen=True)
class Verdict:
    criterion: str
    p: int
    n: int
    s: Optional[int]
    result: str
    witness_stage: Optional[int] = None
    witness_poly: Optional[str] = None
    ideal: str = ""

    @property
    def obstructed(self) -> bool:
        return self.result == OBSTRUCTED

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "p": self.p,
            "n": self.n,
            "s": self.s,
            "result": self.result,
            "witness_stage": self.witness_stage,
            "witness_poly": self.witness_poly,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def __str__(self) -> str:
        s = "" if self.s is None else f" s={self.s}"
        line = f"{self.criterion} p={self.p} n={self.n}{s} {self.ideal}: {self.result}"
        if self.obstructed:
            line += f" (stage {self.witness_stage} remainder {self.witness_poly})"
        return line


def _verdict(name: str, J: LaurentPoly, chain: IdealChain, n: int, s: Optional[int]) -> Verdict:
    ok, trace = ideal_member(J - J.mirror(), chain)
    if ok:
        return Verdict(name, chain.p, n, s, NO_OBSTRUCTION, ideal=str(chain))
    return Verdict(name, chain.p, n, s, OBSTRUCTED, trace.failed_stage, trace.remainder, str(chain))


def przytycki_check(J: LaurentPoly, p: int, n: int, variant: str = "theorem") -> Verdict:
    """Test ``J(q) - J(1/q)`` against the period-p^n ideal.

    ``variant="example"`` uses the smaller ideal whose last generator is
    ``p^n (q - 1/q)``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if variant == "theorem":
        return _verdict("przytycki", J, przytycki_chain(p, n), n, None)
    if variant == "example":
        return _verdict("przytycki-example-ideal", J, example_chain(p, n), n, None)
    raise ValueError(f"unknown variant {variant!r}")


def strengthened_check(J: LaurentPoly, ranks: RankTable, p: int, n: int) -> Verdict:
    """Sharper test when all Khovanov ranks are below ``phi(p^s)``."""
    chi = ranks.euler_characteristic()
    if chi != J:
        raise DataInconsistency(f"rank table Euler characteristic {chi} differs from Jones polynomial {J}")
    top = max_rank(ranks)
    for s in range(1, n + 1):
        if top < totient(p**s):
            return _verdict("strengthened", J, strengthened_chain(p, n, s), n, s)
    return _verdict("strengthened", J, przytycki_chain(p, n), n, None)


def murasugi_verify(code: PeriodicTangleCode, threads: int = 1, budget: Optional[Budget] = None) -> Verdict:
    """Check ``J(D) = J(D_*)^(p^n)`` modulo ``p`` and ``(q + 1/q)^(a(p^n - 1)) - 1``."""
    p, n = code.p, code.n
    N = code.order
    full = jones_kauffman(quotient(code, 0), threads, budget)
    base = jones_kauffman(quotient(code, n), threads, budget)
    alpha = 1 if lk_with_axis(code) % 2 else 2
    modulus = (UNKNOT_VALUE ** (alpha * (N - 1))).mod_p(p) - ModPoly(p, {0: 1})
    diff = full.mod_p(p) - base.mod_p(p) ** N
    rem = diff.reduce(modulus)
    ideal = f"<{p}, (q+q^-1)^{alpha * (N - 1)}-1>"
    if rem:
        return Verdict("murasugi", p, n, None, OBSTRUCTED, 0, str(rem.lift()), ideal)
    return Verdict("murasugi", p, n, None, NO_OBSTRUCTION, ideal=ideal)

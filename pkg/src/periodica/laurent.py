"""Exact Laurent polynomials over the integers and over F_p.

Both types are immutable and kept in canonical form (no zero coefficients
stored), so ``==`` is structural.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Mapping, Optional, Tuple

__all__ = ["LaurentPoly", "ModPoly", "is_prime", "q", "ONE", "ZERO"]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _clean(items: Iterable[Tuple[int, int]]) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for e, c in items:
        if c:
            out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def _poly_divmod(num, den, inv_lead=None, modulus=None):
    """Long division of dense coefficient lists (index = exponent).

    Over Z (``modulus is None``) returns ``None`` as soon as a leading
    coefficient is not divisible by the divisor's lead.
    """
    num = list(num)
    dl = len(den) - 1
    lead = den[dl]
    if len(num) - 1 < dl:
        return [], num
    quot = [0] * (len(num) - dl)
    for i in range(len(num) - 1, dl - 1, -1):
        c = num[i]
        if modulus is not None:
            c %= modulus
            num[i] = c
        if not c:
            continue
        if modulus is None:
            if c % lead:
                return None
            t = c // lead
        else:
            t = (c * inv_lead) % modulus
        quot[i - dl] = t
        base = i - dl
        for j, dc in enumerate(den):
            if dc:
                num[base + j] -= t * dc
    rem = num[:dl]
    if modulus is not None:
        rem = [c % modulus for c in rem]
    return quot, rem


class LaurentPoly:
    """An element of Z[q, q^-1]."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Optional[Mapping[int, int]] = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = int(v)
                if v:
                    c[int(e)] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: Dict[int, int]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def sym(cls, b: int) -> "LaurentPoly":
        """``q^b - q^-b``."""
        if b == 0:
            return cls()
        return cls({b: 1, -b: -1})

    # -- accessors -----------------------------------------------------
    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def degree(self) -> int:
        return max(self._c)

    def valuation(self) -> int:
        return min(self._c)

    def span(self) -> int:
        return self.degree() - self.valuation() if self._c else -1

    # -- ring structure ------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    @staticmethod
    def _coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: Dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("power exponent must be a non-negative integer")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by the unit ``q^k``."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def scale(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e: v * k for e, v in self._c.items()})

    def substitute(self, k: int) -> "LaurentPoly":
        """Return ``f(q^k)``; ``k = -1`` is the mirror substitution."""
        if k == 0:
            raise ValueError("substitution q -> q^0 is not allowed")
        return LaurentPoly._raw({e * k: v for e, v in self._c.items()})

    def mirror(self) -> "LaurentPoly":
        return self.substitute(-1)

    def exact_div_int(self, d: int) -> "LaurentPoly":
        out = {}
        for e, v in self._c.items():
            if v % d:
                raise ArithmeticError(f"coefficient {v} of q^{e} not divisible by {d}")
            out[e] = v // d
        return LaurentPoly._raw(out)

    def div_exact(self, g: "LaurentPoly") -> Optional["LaurentPoly"]:
        """Return ``h`` with ``self == g * h``, or ``None`` if no such ``h``."""
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return ZERO
        fv, gv = self.valuation(), g.valuation()
        fd = [0] * (self.degree() - fv + 1)
        for e, v in self._c.items():
            fd[e - fv] = v
        gd = [0] * (g.degree() - gv + 1)
        for e, v in g._c.items():
            gd[e - gv] = v
        res = _poly_divmod(fd, gd)
        if res is None:
            return None
        quot, rem = res
        if any(rem) or not quot:
            return None
        return LaurentPoly({i + fv - gv: v for i, v in enumerate(quot)})

    def rem_monic(self, g: "LaurentPoly") -> "LaurentPoly":
        """Remainder of division by ``g`` whose top coefficient is +-1.

        Same shift convention as ``ModPoly.reduce``.
        """
        if g.is_zero() or g._c[g.degree()] not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        if not self:
            return ZERO
        fv = self.valuation()
        fd = [0] * (self.degree() - fv + 1)
        for e, v in self._c.items():
            fd[e - fv] = v
        gv = g.valuation()
        gd = [0] * (g.degree() - gv + 1)
        for e, v in g._c.items():
            gd[e - gv] = v
        _, rem = _poly_divmod(fd, gd)
        return LaurentPoly({i + fv: v for i, v in enumerate(rem) if v})

    def mod_p(self, p: int) -> "ModPoly":
        return ModPoly(p, self._c)

    def content(self) -> int:
        from math import gcd

        g = 0
        for v in self._c.values():
            g = gcd(g, v)
        return g

    def __call__(self, x):
        return sum(v * x**e for e, v in self._c.items())

    # -- text form -----------------------------------------------------
    def __str__(self) -> str:
        if not self._c:
            return "0"
        return " + ".join(f"{self._c[e]}*q^{e}" for e in sorted(self._c, reverse=True))

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    _TERM = re.compile(r"^\s*([+-]?\d+)\*q\^([+-]?\d+)\s*$")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        text = text.strip()
        if text == "0":
            return ZERO
        c: Dict[int, int] = {}
        for term in text.split(" + "):
            m = cls._TERM.match(term)
            if not m:
                raise ValueError(f"malformed term {term!r}")
            coef, exp = int(m.group(1)), int(m.group(2))
            if coef == 0 or exp in c:
                raise ValueError(f"non-canonical term {term!r}")
            c[exp] = coef
        return cls(c)


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
q = LaurentPoly({1: 1})


class ModPoly:
    """An element of F_p[q, q^-1] for an odd prime ``p``."""

    __slots__ = ("p", "_c")

    def __init__(self, p: int, coeffs: Optional[Mapping[int, int]] = None, _checked: bool = False):
        if not _checked and (p == 2 or not is_prime(p)):
            raise ValueError(f"modulus {p} is not an odd prime")
        self.p = p
        self._c = {}
        if coeffs:
            for e, v in coeffs.items():
                v %= p
                if v:
                    self._c[int(e)] = v

    def _new(self, c: Mapping[int, int]) -> "ModPoly":
        return ModPoly(self.p, c, _checked=True)

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        return max(self._c)

    def valuation(self) -> int:
        return min(self._c)

    def span(self) -> int:
        return self.degree() - self.valuation() if self._c else -1

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModPoly):
            return NotImplemented
        return self.p == other.p and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.p, frozenset(self._c.items())))

    def _check(self, other: "ModPoly") -> None:
        if other.p != self.p:
            raise ValueError("moduli differ")

    def __add__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return self._new(c)

    def __neg__(self) -> "ModPoly":
        return self._new({e: -v for e, v in self._c.items()})

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        return self + (-other)

    def __mul__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        c: Dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return self._new(c)

    def __pow__(self, k: int) -> "ModPoly":
        if k < 0:
            raise ValueError("power exponent must be non-negative")
        result = self._new({0: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def _dense(self):
        v = self.valuation()
        d = [0] * (self.degree() - v + 1)
        for e, c in self._c.items():
            d[e - v] = c
        return v, d

    def reduce(self, m: "ModPoly") -> "ModPoly":
        """Euclidean remainder of ``self`` modulo ``m``.

        Both sides are shifted to lowest exponent 0 (multiplication by a
        unit), divided in F_p[q], and the remainder is shifted back by the
        valuation of ``self``.
        """
        self._check(m)
        if not m:
            raise ZeroDivisionError("reduction modulo the zero polynomial")
        if not self:
            return self
        fv, fd = self._dense()
        _, md = m._dense()
        inv = pow(md[-1], -1, self.p)
        _, rem = _poly_divmod(fd, md, inv_lead=inv, modulus=self.p)
        return self._new({i + fv: c for i, c in enumerate(rem) if c})

    def div_exact(self, g: "ModPoly") -> Optional["ModPoly"]:
        """Quotient ``h`` with ``self == g * h`` in F_p[q, q^-1], else ``None``."""
        self._check(g)
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return self
        fv, fd = self._dense()
        gv, gd = g._dense()
        inv = pow(gd[-1], -1, self.p)
        quot, rem = _poly_divmod(fd, gd, inv_lead=inv, modulus=self.p)
        if any(rem) or not any(quot):
            return None
        return self._new({i + fv - gv: c for i, c in enumerate(quot) if c})

    def lift(self) -> LaurentPoly:
        """Integer lift with coefficients in ``[0, p)``."""
        return LaurentPoly(self._c)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        return " + ".join(f"{self._c[e]}*q^{e}" for e in sorted(self._c, reverse=True))

    def __repr__(self) -> str:
        return f"ModPoly({self.p}, {str(self)!r})"

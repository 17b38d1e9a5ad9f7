"""Quotient rings ``Z[t]/(n, p(t))`` with ``p`` monic."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd

from .linalg import det, solve_mod


@dataclass(frozen=True)
class QuotRing:
    """The ring ``Z[t]/(n, p(t))``.

    ``poly`` lists the coefficients of ``p`` from the constant term up and
    must be monic.  Elements are coefficient tuples of length ``deg p``.
    """

    n: int
    poly: tuple = (1, 1, 1)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("modulus must be positive")
        if len(self.poly) < 2 or self.poly[-1] != 1:
            raise ValueError("p(t) must be monic of degree >= 1")
        object.__setattr__(self, "poly", tuple(int(c) for c in self.poly))

    @property
    def degree(self):
        return len(self.poly) - 1

    def __call__(self, *coeffs):
        return RingElem(self, self._reduce(list(coeffs)))

    def _reduce(self, coeffs):
        c = [int(v) for v in coeffs]
        d = self.degree
        # t^d = -(p_0 + p_1 t + ... + p_{d-1} t^{d-1})
        for k in range(len(c) - 1, d - 1, -1):
            lead = c[k]
            if lead:
                for i in range(d):
                    c[k - d + i] -= lead * self.poly[i]
            c[k] = 0
        c = (c + [0] * d)[:d]
        return tuple(v % self.n for v in c)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def t(self):
        return self(0, 1)

    def elements(self):
        for c in product(range(self.n), repeat=self.degree):
            yield RingElem(self, tuple(c))

    def mul_matrix(self, a):
        """Matrix of ``x -> x * a`` on coefficient row vectors."""
        rows = []
        for i in range(self.degree):
            e = [0] * self.degree
            e[i] = 1
            rows.append(list((self(*e) * a).coeffs))
        return rows

    @cached_property
    def units(self):
        return [a for a in self.elements() if a.is_unit()]

    def galois(self, a):
        """The automorphism ``t -> t^2`` (only for ``p = t^2 + t + 1``)."""
        if self.poly != (1, 1, 1):
            raise ValueError("Galois twist is defined for t^2 + t + 1 only")
        x, y = a.coeffs
        # x + y t^2 = x + y(-1 - t)
        return self(x - y, -y)

    def __repr__(self):
        return f"QuotRing(n={self.n}, poly={self.poly})"


@dataclass(frozen=True)
class RingElem:
    ring: QuotRing
    coeffs: tuple

    def _check(self, other):
        if isinstance(other, int):
            return self.ring(other)
        if other.ring != self.ring:
            raise ValueError("elements of different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        return RingElem(self.ring, tuple((a + b) % self.ring.n
                                         for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return RingElem(self.ring, tuple(-a % self.ring.n for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        d = self.ring.degree
        prod_ = [0] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod_[i + j] += a * b
        return RingElem(self.ring, self.ring._reduce(prod_))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.ring.one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring(other)
        return isinstance(other, RingElem) and self.ring == other.ring \
            and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def is_unit(self):
        return gcd(det(self.ring.mul_matrix(self)), self.ring.n) == 1

    def inverse(self):
        one = [1] + [0] * (self.ring.degree - 1)
        x = solve_mod(self.ring.mul_matrix(self), one, self.ring.n) \
            if self.is_unit() else None
        if x is None:
            raise ZeroDivisionError(f"{self} is not a unit")
        return RingElem(self.ring, tuple(x))

    def project(self):
        """Constant coefficient: ``a + t b -> a``."""
        return self.coeffs[0]

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        return f"<{self} in Z[t]/({self.ring.n}, p)>"

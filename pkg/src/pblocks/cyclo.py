"""Exact arithmetic in cyclotomic fields.

Values are elements of Q(zeta_n) stored sparsely on the power basis
{zeta_n^k : 0 <= k < phi(n)} with Fraction coefficients, always reduced to
the smallest possible conductor (never 2 mod 4, so conductors are unique).
Canonical form makes equality, hashing and sorting trivial, which the block
and character machinery leans on heavily.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ZeroInput


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients (low degree first) of the n-th cyclotomic polynomial."""
    if n == 1:
        return (-1, 1)
    # divide x^n - 1 by the product of the lower-order factors
    num = [Fraction(0)] * (n + 1)
    num[0], num[n] = Fraction(-1), Fraction(1)
    for d in range(1, n):
        if n % d:
            continue
        phi_d = cyclotomic_polynomial(d)
        num = _polydiv_exact(num, [Fraction(c) for c in phi_d])
    assert all(c.denominator == 1 for c in num)
    return tuple(int(c) for c in num)


def _polydiv_exact(num, den):
    num = list(num)
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    dn = len(den) - 1
    lead = den[-1]
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i] / lead
        out[i - dn] = c
        if c:
            for j, dc in enumerate(den):
                num[i - dn + j] -= c * dc
    assert all(c == 0 for c in num[:dn]), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    out = n
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            out -= out // f
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        out -= out // m
    return out


def _normalize_conductor(n: int) -> int:
    return n // 2 if n % 4 == 2 else n


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> dict:
    """zeta_n^k for phi(n) <= k < n, expressed on the power basis."""
    phi = euler_phi(n)
    poly = cyclotomic_polynomial(n)
    # x^phi = -(poly[0] + ... + poly[phi-1] x^{phi-1}) since poly is monic
    rows = {}
    current = [Fraction(-poly[i]) for i in range(phi)]
    rows[phi] = tuple(current)
    for k in range(phi + 1, n):
        nxt = [Fraction(0)] * phi
        for i, c in enumerate(current):
            if not c:
                continue
            if i + 1 < phi:
                nxt[i + 1] += c
            else:
                for j in range(phi):
                    nxt[j] += c * -poly[j]
        current = nxt
        rows[k] = tuple(current)
    return rows


def _reduce_exponents(n: int, data: dict) -> dict:
    """Collapse arbitrary exponents into the power basis of Q(zeta_n)."""
    phi = euler_phi(n)
    rows = _reduction_rows(n) if n > 1 else {}
    out = {}
    for k, c in data.items():
        if not c:
            continue
        k %= n
        if k < phi:
            out[k] = out.get(k, Fraction(0)) + c
        else:
            for j, rc in enumerate(rows[k]):
                if rc:
                    out[j] = out.get(j, Fraction(0)) + c * rc
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _descent_solver(n: int, d: int):
    """Row-reduced data for rewriting suitable Q(zeta_n) elements over
    Q(zeta_d), where d divides n.  Returns (pivot rows, pivot columns)."""
    phi_d = euler_phi(d)
    cols = []
    for i in range(phi_d):
        vec = _reduce_exponents(n, {(n // d) * i: Fraction(1)})
        cols.append(vec)
    # Gaussian elimination on the phi(n) x phi_d system, kept sparse by rows
    phi_n = euler_phi(n)
    matrix = [[cols[j].get(i, Fraction(0)) for j in range(phi_d)]
              for i in range(phi_n)]
    return matrix


def _solve_descent(matrix, target_vec, phi_n, phi_d):
    """Solve matrix * y = target for y (phi_d unknowns), or None."""
    aug = [row[:] + [target_vec[i]] for i, row in enumerate(matrix)]
    pivots = []
    r = 0
    for c in range(phi_d):
        pr = None
        for i in range(r, phi_n):
            if aug[i][c]:
                pr = i
                break
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        lead = aug[r][c]
        aug[r] = [x / lead for x in aug[r]]
        for i in range(phi_n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    # consistency: rows beyond the pivots must be zero
    for i in range(r, phi_n):
        if aug[i][phi_d]:
            return None
    y = [Fraction(0)] * phi_d
    for i, c in enumerate(pivots):
        y[c] = aug[i][phi_d]
    return y


def _divisors(n: int) -> list:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


class Cyclotomic:
    """An element of some cyclotomic field, in canonical minimal form.

    Instances are immutable.  ``conductor`` is 1 for rationals and never
    2 mod 4 otherwise; ``coeffs`` maps basis exponents to nonzero Fractions.
    """

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, n: int = 1, data: dict | None = None):
        n = int(n)
        if n < 1:
            raise ZeroInput("conductor must be positive")
        data = {} if data is None else {int(k): Fraction(v)
                                        for k, v in data.items()}
        n2 = _normalize_conductor(n)
        if n2 != n:
            # zeta_2m = -zeta_m^((m+1)/2) for odd m, so collapse exponents
            m = n2
            shift = (m + 1) // 2
            conv = {}
            for k, c in self._merge(data, n).items():
                key = (k * shift) % m
                term = c if k % 2 == 0 else -c
                conv[key] = conv.get(key, Fraction(0)) + term
            data = conv
            n = m
        reduced = _reduce_exponents(n, data) if n > 1 else {
            0: sum(data.values(), Fraction(0))}
        reduced = {k: v for k, v in reduced.items() if v}
        n, reduced = self._descend(n, reduced)
        self.conductor = n
        self.coeffs = reduced
        self._hash = None

    @staticmethod
    def _merge(data, n):
        out = {}
        for k, c in data.items():
            k %= n
            out[k] = out.get(k, Fraction(0)) + c
        return {k: v for k, v in out.items() if v}

    @staticmethod
    def _descend(n, reduced):
        if n == 1 or not reduced:
            return (1, reduced)
        if set(reduced) == {0}:
            return (1, reduced)
        phi_n = euler_phi(n)
        for d in _divisors(n)[:-1]:
            if d % 4 == 2:
                continue
            # fixed by Gal(Q(zeta_n)/Q(zeta_d))?
            fixed = True
            for j in range(2, n + 1):
                if gcd(j, n) != 1 or j % d != 1 % d:
                    continue
                mapped = _reduce_exponents(
                    n, {(k * j) % n: c for k, c in reduced.items()})
                if mapped != reduced:
                    fixed = False
                    break
            if not fixed:
                continue
            target = [reduced.get(i, Fraction(0)) for i in range(phi_n)]
            y = _solve_descent(_descent_solver(n, d), target,
                               phi_n, euler_phi(d))
            if y is None:
                continue
            return (d, {i: c for i, c in enumerate(y) if c})
        return (n, reduced)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, q) -> "Cyclotomic":
        q = Fraction(q)
        out = cls.__new__(cls)
        out.conductor = 1
        out.coeffs = {0: q} if q else {}
        out._hash = None
        return out

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Cyclotomic":
        return cls(n, {k: Fraction(1)})

    @classmethod
    def zero(cls) -> "Cyclotomic":
        return cls.from_rational(0)

    @classmethod
    def one(cls) -> "Cyclotomic":
        return cls.from_rational(1)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return self.conductor == 1

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.coeffs.get(0, Fraction(0))

    def is_integer(self) -> bool:
        return self.is_rational() and self.rational_value().denominator == 1

    def integer_value(self) -> int:
        v = self.rational_value()
        if v.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return v.numerator

    def is_algebraic_integer(self) -> bool:
        """True when all power-basis coefficients are integers.

        The power basis is an integral basis of the cyclotomic ring of
        integers, so this is exact, not a heuristic.
        """
        return all(c.denominator == 1 for c in self.coeffs.values())

    # -- arithmetic --------------------------------------------------------

    def _lift_to(self, n: int) -> dict:
        f = n // self.conductor
        return {k * f: c for k, c in self.coeffs.items()}

    @staticmethod
    def _common(a: "Cyclotomic", b: "Cyclotomic") -> int:
        return a.conductor * b.conductor // gcd(a.conductor, b.conductor)

    def __add__(self, other) -> "Cyclotomic":
        other = _coerce(other)
        n = self._common(self, other)
        data = self._lift_to(n)
        for k, c in other._lift_to(n).items():
            data[k] = data.get(k, Fraction(0)) + c
        return Cyclotomic(n, data)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        out = Cyclotomic.__new__(Cyclotomic)
        out.conductor = self.conductor
        out.coeffs = {k: -c for k, c in self.coeffs.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "Cyclotomic":
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return Cyclotomic.zero()
        if other.is_rational():
            q = other.rational_value()
            out = Cyclotomic.__new__(Cyclotomic)
            out.conductor = self.conductor
            out.coeffs = {k: c * q for k, c in self.coeffs.items()}
            out._hash = None
            return out
        if self.is_rational():
            return other * self
        n = self._common(self, other)
        a = self._lift_to(n)
        b = other._lift_to(n)
        data = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = (k1 + k2) % n
                data[k] = data.get(k, Fraction(0)) + c1 * c2
        return Cyclotomic(n, data)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroInput("division by zero cyclotomic")
        if self.is_rational():
            return Cyclotomic.from_rational(1 / self.rational_value())
        n = self.conductor
        phi = euler_phi(n)
        # solve (multiplication by self) y = 1 on the power basis
        cols = []
        for i in range(phi):
            prod = _reduce_exponents(
                n, {(k + i) % n: c for k, c in self.coeffs.items()})
            cols.append(prod)
        matrix = [[cols[j].get(i, Fraction(0)) for j in range(phi)]
                  for i in range(phi)]
        target = [Fraction(1)] + [Fraction(0)] * (phi - 1)
        y = _solve_descent(matrix, target, phi, phi)
        assert y is not None, "unit solve failed in a field (bug)"
        return Cyclotomic(n, {i: c for i, c in enumerate(y)})

    def __truediv__(self, other):
        other = _coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    # -- Galois ------------------------------------------------------------

    def galois(self, j: int) -> "Cyclotomic":
        """Apply the automorphism zeta -> zeta^j (j coprime to the
        conductor)."""
        n = self.conductor
        if n == 1:
            return self
        if gcd(j, n) != 1:
            raise ZeroInput(f"galois exponent {j} not coprime to {n}")
        return Cyclotomic(n, {(k * j) % n: c for k, c in self.coeffs.items()})

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1)

    # -- comparisons / output ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _coerce(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return (self.conductor == other.conductor
                and self.coeffs == other.coeffs)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.conductor,
                               tuple(sorted(self.coeffs.items()))))
        return self._hash

    def sort_key(self):
        return (self.conductor,
                tuple((k, c.numerator, c.denominator)
                      for k, c in sorted(self.coeffs.items())))

    def to_complex(self) -> complex:
        n = self.conductor
        return sum((complex(c) * cmath.exp(2j * cmath.pi * k / n)
                    for k, c in self.coeffs.items()), 0j)

    def __repr__(self):
        if self.is_zero():
            return "0"
        if self.is_rational():
            return str(self.rational_value())
        parts = []
        for k, c in sorted(self.coeffs.items()):
            z = f"z{self.conductor}" + (f"^{k}" if k != 1 else "")
            if k == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(z)
            elif c == -1:
                parts.append(f"-{z}")
            else:
                parts.append(f"{c}*{z}")
        out = "+".join(parts).replace("+-", "-")
        return out


def _coerce(x) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic.from_rational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Cyclotomic")


ZERO = Cyclotomic.zero()
ONE = Cyclotomic.one()

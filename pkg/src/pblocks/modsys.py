"""The p-modular bridge: reduction of cyclotomic values into GF(p^m) and
Brauer lifting of roots of unity back to characteristic zero.

For a group exponent n = p^a * n' (p not dividing n'), the target field is
GF(p^m) with m the multiplicative order of p mod n'.  Reduction ("star")
sends p-power roots of unity to 1 and the chosen primitive n'-th root to a
fixed field element; p-local rationals a/b reduce to (a mod p)(b mod p)^-1.
The maximal ideal behind the map is pinned by fixing that root image, so
every computation in one session reduces compatibly.

One system built from a parent group serves all of its subgroups and
quotients, because their exponents divide the parent's.  That shared frame
is what makes restricted and inflated Brauer characters directly
comparable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .cyclo import Cyclotomic
from .errors import CapExceeded, InconsistentLift, NotPLocal
from .gf import finite_field
from .group import require_prime, valuation

ORDER_EXPONENT_CAP = 32


def multiplicative_order(a: int, n: int) -> int:
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not invertible mod {n}")
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


class PModularSystem:
    """Fixed reduction data for one prime and one exponent."""

    def __init__(self, exponent: int, p: int, root_power: int = 1):
        require_prime(p)
        if exponent < 1:
            raise NotPLocal("exponent must be positive")
        self.p = p
        self.exponent = exponent
        self.n_prime = exponent // (p ** valuation(exponent, p))
        m = multiplicative_order(p, self.n_prime)
        if m > ORDER_EXPONENT_CAP:
            raise CapExceeded(
                f"splitting field degree {m} exceeds cap {ORDER_EXPONENT_CAP}")
        self.field = finite_field(p, m)
        q = self.field.q
        assert (q - 1) % self.n_prime == 0
        if gcd(root_power, self.n_prime) != 1:
            raise NotPLocal(
                f"root twist {root_power} not coprime to {self.n_prime}")
        self.zeta_image = self.field.pow_(
            self.field.generator, (q - 1) // self.n_prime * root_power)
        if self.n_prime > 1:
            assert self.field.element_order(self.zeta_image) == self.n_prime

    # -- reduction ---------------------------------------------------------

    def star_fraction(self, c: Fraction) -> int:
        c = Fraction(c)
        if c.denominator % self.p == 0:
            raise NotPLocal(
                f"denominator of {c} is divisible by {self.p}")
        num = c.numerator % self.p
        den = c.denominator % self.p
        return self.field.mul(num, self.field.inv(den))

    def star(self, value) -> int:
        """Reduce a cyclotomic (or rational) value into the field."""
        if isinstance(value, (int, Fraction)):
            return self.star_fraction(Fraction(value))
        if not isinstance(value, Cyclotomic):
            raise NotPLocal(f"cannot reduce {type(value).__name__}")
        d = value.conductor
        a = valuation(d, self.p)
        d0 = d // self.p ** a
        if self.n_prime % d0 != 0:
            raise NotPLocal(
                f"conductor {d} has p'-part {d0} outside the frame "
                f"(n' = {self.n_prime})")
        root = self.field.pow_(self.zeta_image, self.n_prime // d0) \
            if d0 > 1 else 1
        c2 = pow(self.p ** a, -1, d0) if d0 > 1 else 0
        out = 0
        for k, c in value.coeffs.items():
            term = self.star_fraction(c)
            if d0 > 1:
                term = self.field.mul(term,
                                      self.field.pow_(root, k * c2 % d0))
            out = self.field.add(out, term)
        return out

    # -- lifting -----------------------------------------------------------

    def brauer_lift(self, code: int) -> Cyclotomic:
        """The unique n'-th root of unity reducing to the given field
        element."""
        if code == 0:
            raise InconsistentLift("zero is not a root of unity")
        if self.n_prime == 1:
            if code != 1:
                raise InconsistentLift(
                    f"{code} is not the reduction of a root of unity")
            return Cyclotomic.one()
        step = (self.field.q - 1) // self.n_prime
        t = self.field.log[code]
        # solve zeta_image^s = code, i.e. (step * tw) * s = t mod q-1
        tw = self.field.log[self.zeta_image] // step
        s_num = t
        if s_num % step != 0:
            raise InconsistentLift(
                f"{code} is not an n'-th root of unity (n' = {self.n_prime})")
        s = s_num // step * pow(tw, -1, self.n_prime) % self.n_prime
        assert self.field.pow_(self.zeta_image, s) == code
        return Cyclotomic.zeta(self.n_prime, s)

    def __repr__(self):
        return (f"<p-modular system: p={self.p}, n'={self.n_prime}, "
                f"field {self.field!r}>")

"""Reduction (star) and Brauer lift tests.

The star map is pinned down by three properties: it is a ring homomorphism,
it kills p-power roots of unity, and composed with the Brauer lift it is
the identity on p'-roots of unity.  The homomorphism property is sampled
heavily over random p-local cyclotomics.
"""

import random
from fractions import Fraction

import pytest

from pblocks.cyclo import Cyclotomic
from pblocks.errors import InconsistentLift, NotPLocal
from pblocks.group import p_part
from pblocks.modsys import PModularSystem, multiplicative_order

FRAMES = [(30, 2, 15, 16), (30, 3, 10, 81), (30, 5, 6, 25),
          (12, 2, 3, 4), (12, 3, 4, 9), (24, 2, 3, 4), (8, 2, 1, 2),
          (21, 3, 7, 729), (10, 5, 2, 5)]


def test_multiplicative_order():
    assert multiplicative_order(2, 15) == 4
    assert multiplicative_order(3, 10) == 4
    assert multiplicative_order(5, 6) == 2
    assert multiplicative_order(7, 1) == 1


@pytest.mark.parametrize("n,p,n_prime,q", FRAMES)
def test_frame_dimensions(n, p, n_prime, q):
    sys = PModularSystem(n, p)
    assert sys.n_prime == n_prime
    assert sys.field.q == q
    if n_prime > 1:
        assert sys.field.element_order(sys.zeta_image) == n_prime


def _random_local_element(rng, n, p):
    data = {}
    for _ in range(rng.randrange(1, 4)):
        k = rng.randrange(n)
        num = rng.randrange(-6, 7)
        den = rng.choice([d for d in range(1, 8) if d % p != 0])
        data[k] = data.get(k, Fraction(0)) + Fraction(num, den)
    return Cyclotomic(n, data)


@pytest.mark.parametrize("n,p", [(30, 2), (30, 3), (30, 5), (12, 2),
                                 (12, 3), (24, 3)])
def test_star_is_ring_homomorphism(n, p):
    sys = PModularSystem(n, p)
    F = sys.field
    rng = random.Random(0)
    for _ in range(2500):
        x = _random_local_element(rng, n, p)
        y = _random_local_element(rng, n, p)
        assert sys.star(x + y) == F.add(sys.star(x), sys.star(y))
        assert sys.star(x * y) == F.mul(sys.star(x), sys.star(y))
    assert sys.star(Cyclotomic.one()) == 1
    assert sys.star(Cyclotomic.zero()) == 0


@pytest.mark.parametrize("n,p", [(30, 2), (30, 3), (12, 2), (24, 3), (8, 2)])
def test_star_kills_p_power_roots(n, p):
    sys = PModularSystem(n, p)
    pa = p_part(n, p)
    for a in range(1, pa):
        if pa % (pa // p_part(a, p)):
            pass
        assert sys.star(Cyclotomic.zeta(pa, a)) == 1


@pytest.mark.parametrize("n,p", [(30, 2), (30, 3), (30, 5), (12, 3),
                                 (21, 3)])
def test_lift_inverts_star_on_p_regular_roots(n, p):
    sys = PModularSystem(n, p)
    for k in range(sys.n_prime):
        z = Cyclotomic.zeta(sys.n_prime, k)
        assert sys.brauer_lift(sys.star(z)) == z
    # and a mixed root: its p'-part is what survives
    pa = p_part(n, p)
    if pa > 1 and sys.n_prime > 1:
        mixed = Cyclotomic.zeta(n)          # order n = pa * n'
        code = sys.star(mixed)
        lifted = sys.brauer_lift(code)
        expected = Cyclotomic.zeta(sys.n_prime,
                                   pow(pa, -1, sys.n_prime))
        assert lifted == expected


def test_star_rejects_p_in_denominator():
    sys = PModularSystem(30, 2)
    with pytest.raises(NotPLocal):
        sys.star(Fraction(1, 2))
    with pytest.raises(NotPLocal):
        sys.star(Cyclotomic(15, {1: Fraction(1, 4)}))


def test_star_rejects_foreign_conductor():
    sys = PModularSystem(12, 2)    # n' = 3
    with pytest.raises(NotPLocal):
        sys.star(Cyclotomic.zeta(5))


def test_lift_rejects_non_roots():
    sys = PModularSystem(30, 2)    # GF(16), n' = 15 = q - 1, all nonzero ok
    with pytest.raises(InconsistentLift):
        sys.brauer_lift(0)
    sys3 = PModularSystem(30, 3)   # GF(81), n' = 10, most codes not roots
    root_codes = {sys3.field.pow_(sys3.zeta_image, k) for k in range(10)}
    non_root = next(c for c in range(1, 81) if c not in root_codes)
    with pytest.raises(InconsistentLift):
        sys3.brauer_lift(non_root)


def test_root_twist_gives_equivalent_system():
    # a different maximal ideal: star changes, but lift still inverts it
    base = PModularSystem(30, 2)
    twisted = PModularSystem(30, 2, root_power=2)
    assert base.zeta_image != twisted.zeta_image
    for k in range(15):
        z = Cyclotomic.zeta(15, k)
        assert twisted.brauer_lift(twisted.star(z)) == z
    rng = random.Random(7)
    F = twisted.field
    for _ in range(500):
        x = _random_local_element(rng, 30, 2)
        y = _random_local_element(rng, 30, 2)
        assert twisted.star(x * y) == F.mul(twisted.star(x),
                                            twisted.star(y))

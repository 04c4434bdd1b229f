"""Character table tests.

Degree lists for the battery groups are classical facts asserted directly.
Structural checks (orthogonality, integrality, permutation-character
decomposition) hold for every finite group and are verified exactly, which
pins the values themselves, not just the degrees.
"""

from fractions import Fraction

import pytest

from pblocks.chartab import (CharacterTable, character_table,
                             class_constants)
from pblocks.cyclo import Cyclotomic
from pblocks.group import build_group
from pblocks.perm import parse_perm_list


def make(label, text):
    return build_group(parse_perm_list(text), label=label)


def sl23():
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def mat_perm(m):
        return tuple(idx[((m[0][0] * v[0] + m[0][1] * v[1]) % 3,
                          (m[1][0] * v[0] + m[1][1] * v[1]) % 3)]
                     for v in vecs)

    return build_group([mat_perm([[1, 1], [0, 1]]),
                        mat_perm([[0, 2], [1, 0]])], label="sl:2:3")


BATTERY = [
    ("sym:3", "(1,2); (1,2,3)", [1, 1, 2]),
    ("sym:4", "(1,2); (1,2,3,4)", [1, 1, 2, 3, 3]),
    ("alt:4", "(1,2,3); (1,2)(3,4)", [1, 1, 1, 3]),
    ("alt:5", "(1,2,3); (3,4,5)", [1, 3, 3, 4, 5]),
    ("cyclic:6", "(1,2,3,4,5,6)", [1, 1, 1, 1, 1, 1]),
    ("dihedral:8", "(1,2,3,4); (1,3)", [1, 1, 1, 1, 2]),
    ("quaternion:8", "(1,2,3,4)(5,6,7,8); (1,5,3,7)(2,8,4,6)",
     [1, 1, 1, 1, 2]),
]


@pytest.mark.parametrize("label,gens,degrees", BATTERY)
def test_known_degree_lists(label, gens, degrees):
    T = character_table(make(label, gens))
    assert [c.degree for c in T.chars] == degrees


def test_sl23_degrees():
    T = character_table(sl23())
    assert [c.degree for c in T.chars] == [1, 1, 1, 2, 2, 2, 3]


def test_s3_exact_values():
    T = character_table(make("sym:3", "(1,2); (1,2,3)"))
    rows = [[v for v in c.values] for c in T.chars]
    assert rows[0] == [1, 1, 1]
    assert rows[1] == [Cyclotomic.one(), Cyclotomic.from_rational(-1),
                       Cyclotomic.one()]
    assert rows[2] == [Cyclotomic.from_rational(2), Cyclotomic.zero(),
                       Cyclotomic.from_rational(-1)]


def test_a5_irrational_values_are_golden_ratio_pair():
    T = character_table(make("alt:5", "(1,2,3); (3,4,5)"))
    z5 = Cyclotomic.zeta(5)
    phi_plus = -(z5 * z5) - z5.galois(3)     # (1+sqrt5)/2
    phi_minus = 1 + z5 * z5 + z5.galois(3)   # (1-sqrt5)/2
    assert phi_plus + phi_minus == 1 and phi_plus * phi_minus == -1
    deg3 = [c for c in T.chars if c.degree == 3]
    vals = {deg3[0].values[3], deg3[0].values[4]}
    assert vals == {phi_plus, phi_minus}


def test_trivial_character_is_first_everywhere():
    for label, gens, _ in BATTERY:
        T = character_table(make(label, gens))
        assert T.chars[0].is_trivial()
        assert not any(c.is_trivial() for c in T.chars[1:])


@pytest.mark.parametrize("label,gens,_", BATTERY)
def test_orthogonality_both_ways(label, gens, _):
    T = character_table(make(label, gens))
    G = T.group
    inv = G.power_map(-1)
    k = len(T.classes)
    for a in range(k):
        for b in range(k):
            total = Cyclotomic.zero()
            for j, cls in enumerate(T.classes):
                total = total + cls.size * T.chars[a].values[j] \
                    * T.chars[b].values[inv[j]]
            assert total == (G.order if a == b else 0)


@pytest.mark.parametrize("label,gens,_", BATTERY)
def test_degrees_divide_group_order(label, gens, _):
    T = character_table(make(label, gens))
    for c in T.chars:
        assert T.group.order % c.degree == 0


@pytest.mark.parametrize("label,gens,_", BATTERY)
def test_natural_permutation_character_decomposes(label, gens, _):
    T = character_table(make(label, gens))
    fix = [Cyclotomic.from_rational(sum(1 for i, x in enumerate(cls.rep)
                                        if x == i))
           for cls in T.classes]
    recon = [Cyclotomic.zero()] * len(T.classes)
    for c in T.chars:
        mult = T.inner_product(fix, c.values)
        assert mult.denominator == 1 and mult >= 0
        for j in range(len(recon)):
            recon[j] = recon[j] + mult * c.values[j]
    assert recon == fix


@pytest.mark.parametrize("label,gens,_", BATTERY)
def test_central_characters_integral(label, gens, _):
    T = character_table(make(label, gens))
    for c in T.chars:
        for om in T.central_character(c):
            assert om.is_algebraic_integer()


def test_class_constant_invariant():
    for label, gens, _ in BATTERY[:4]:
        G = make(label, gens)
        a = class_constants(G)
        cls = G.conjugacy_classes()
        k = len(cls)
        for i in range(k):
            for j in range(k):
                assert sum(a[i][j][t] * cls[t].size for t in range(k)) \
                    == cls[i].size * cls[j].size


def test_defect_and_p_regular_helpers():
    T = character_table(make("sym:4", "(1,2); (1,2,3,4)"))
    by_deg = {c.degree: c for c in T.chars}
    assert T.char_defect(by_deg[2], 2) == 2     # 24 = 8*3, deg 2 has nu=1
    assert T.char_defect(by_deg[3], 2) == 3
    assert T.char_defect(by_deg[3], 3) == 0
    assert T.is_defect_zero(by_deg[3], 3)
    assert not T.is_defect_zero(by_deg[2], 2)
    regs = T.p_regular_class_indices(2)
    assert [T.classes[j].name for j in regs] == ["1a", "3a"]
    assert len(T.restrict_to_p_regular(by_deg[2], 2)) == 2


def test_values_constant_on_classes():
    T = character_table(make("alt:4", "(1,2,3); (1,2)(3,4)"))
    G = T.group
    for c in T.chars:
        for cls in T.classes:
            for x in cls.elements[:4]:
                assert T.value(c, x) == c.values[cls.index]

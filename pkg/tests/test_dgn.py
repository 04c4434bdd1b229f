"""Defect-zero correspondence across a p-group layer, both flavours."""

import pytest

from pblocks.errors import HypothesisViolated, QuotientNotPGroup
from pblocks.group import build_group, p_core, sylow
from pblocks.workspace import Workspace
from pblocks.weights import dz0_characters
from pblocks.dgn import (brauer_invariant_under, build_dgn_context,
                         dgn_brauer, dgn_multiplicity_oracle,
                         glauberman_dgn_ordinary, induced_brauer_values,
                         ordinary_invariant_under, rdz, rdz0,
                         relative_defect, stabilizer_of_brauer)


def make(label, gens):
    return build_group([tuple(g) for g in gens], label=label)


def sl23():
    vecs = [(a, b) for a in range(3) for b in range(3)][1:]

    def act(m):
        out = []
        for v in vecs:
            w = ((m[0][0] * v[0] + m[0][1] * v[1]) % 3,
                 (m[1][0] * v[0] + m[1][1] * v[1]) % 3)
            out.append(vecs.index(w))
        return tuple(out)

    return make("SL23", [act(((1, 1), (0, 1))), act(((0, 2), (1, 0)))])


def s3():
    return make("S3", [(1, 0, 2), (1, 2, 0)])


def s4():
    return make("S4", [(1, 0, 2, 3), (1, 2, 3, 0)])


def e9c2():
    # two commuting 3-cycles swapped by an involution
    return make("E9C2", [(1, 2, 0, 3, 4, 5), (0, 1, 2, 4, 5, 3),
                         (3, 4, 5, 0, 1, 2)])


def invariant_chars(ws, M, K):
    kb = ws.bundle(K)
    return [chi for chi in kb.table.chars
            if ordinary_invariant_under(kb.table, chi, M.gens)]


def test_diagonal_correspondence_on_e9():
    M = e9c2()
    K = M.subgroup([(1, 2, 0, 3, 4, 5), (0, 1, 2, 4, 5, 3)])
    ws = Workspace(M, 2)
    inv = invariant_chars(ws, M, K)
    assert [chi.index for chi in inv] == [0, 4, 8]
    targets = {}
    for chi in inv:
        od = glauberman_dgn_ordinary(ws, M, K, chi)
        assert od.D.order == 2 and od.C.order == 3
        oracle = dgn_multiplicity_oracle(ws, K, od.C, chi)
        assert od.theta_prime.values == oracle.values
        targets[chi.index] = od.theta_prime.index
    # the diagonal restriction doubles the character parameter
    assert targets == {0: 0, 4: 2, 8: 1}


FROBENIUS_CASES = [
    ("S3", 2), ("D10", 2), ("F21", 3),
]


def frobenius_pair(name):
    if name == "S3":
        M = s3()
        return M, M.subgroup([(1, 2, 0)])
    if name == "D10":
        M = make("D10", [(1, 2, 3, 4, 0), (0, 4, 3, 2, 1)])
        return M, M.subgroup([(1, 2, 3, 4, 0)])
    M = make("F21", [(1, 2, 3, 4, 5, 6, 0), (0, 2, 4, 6, 1, 3, 5)])
    return M, M.subgroup([(1, 2, 3, 4, 5, 6, 0)])


@pytest.mark.parametrize("name,p", FROBENIUS_CASES)
def test_frobenius_kernels_have_one_invariant_char(name, p):
    M, K = frobenius_pair(name)
    ws = Workspace(M, p)
    inv = invariant_chars(ws, M, K)
    assert len(inv) == 1 and inv[0].is_trivial()
    od = glauberman_dgn_ordinary(ws, M, K, inv[0])
    # the complement acts fixed point freely: the centralizer collapses
    assert od.C.order == 1 and od.theta_prime.degree == 1
    oracle = dgn_multiplicity_oracle(ws, K, od.C, inv[0])
    assert od.theta_prime.values == oracle.values


def test_sl23_two_dimensional_goes_to_sign():
    SL = sl23()
    Q8 = sylow(SL, 2)
    ws = Workspace(SL, 3)
    inv = invariant_chars(ws, SL, Q8)
    assert sorted(chi.degree for chi in inv) == [1, 2]
    two = [chi for chi in inv if chi.degree == 2][0]
    od = glauberman_dgn_ordinary(ws, SL, Q8, two)
    assert od.D.order == 3 and od.C.order == 2
    vals = [v.rational_value() for v in od.theta_prime.values]
    assert vals == [1, -1]
    assert dgn_multiplicity_oracle(ws, Q8, od.C, two).values \
        == od.theta_prime.values


def test_sl23_trivial_goes_to_trivial():
    SL = sl23()
    Q8 = sylow(SL, 2)
    ws = Workspace(SL, 3)
    od = glauberman_dgn_ordinary(ws, SL, Q8, ws.bundle(Q8).table.chars[0])
    assert all(v.rational_value() == 1 for v in od.theta_prime.values)


def test_rejects_non_invariant_character():
    M = s3()
    K = M.subgroup([(1, 2, 0)])
    ws = Workspace(M, 2)
    faithful = ws.bundle(K).table.chars[1]
    with pytest.raises(HypothesisViolated):
        glauberman_dgn_ordinary(ws, M, K, faithful)


def test_rejects_positive_defect_character():
    M = make("D8", [(1, 2, 3, 0), (3, 2, 1, 0)])
    K = M.subgroup([(2, 3, 0, 1)])        # central C2
    ws = Workspace(M, 2)
    with pytest.raises(HypothesisViolated):
        glauberman_dgn_ordinary(ws, M, K, ws.bundle(K).table.chars[0])


def test_rejects_non_p_power_index():
    SL = sl23()
    Q8 = sylow(SL, 2)
    ws = Workspace(SL, 2)
    with pytest.raises(QuotientNotPGroup):
        glauberman_dgn_ordinary(ws, SL, Q8, ws.bundle(Q8).table.chars[0])


def test_rejects_wrong_complement():
    M = e9c2()
    K = M.subgroup([(1, 2, 0, 3, 4, 5), (0, 1, 2, 4, 5, 3)])
    ws = Workspace(M, 2)
    chi = ws.bundle(K).table.chars[0]
    with pytest.raises(HypothesisViolated):
        glauberman_dgn_ordinary(ws, M, K, chi, D=M.subgroup([]))


def test_brauer_route_with_nontrivial_core():
    D8 = make("D8", [(1, 2, 3, 0), (3, 2, 1, 0)])
    C4 = D8.subgroup([(1, 2, 3, 0)])
    ws = Workspace(D8, 2)
    phi = ws.bundle(C4).ibr[0]
    ctx = build_dgn_context(ws, D8, C4, phi)
    assert ctx.L.order == 4 and ctx.D.order == 8
    NKD, res = dgn_brauer(ws, ctx)
    assert NKD.order == 4 and res.dim == 1 and res.is_trivial()


def test_brauer_route_matches_ordinary_when_core_trivial():
    SL = sl23()
    Q8 = sylow(SL, 2)
    ws = Workspace(SL, 3)
    qb = ws.bundle(Q8)
    inv = [f for f in qb.ibr if brauer_invariant_under(qb, f, SL.gens)]
    assert sorted(f.dim for f in inv) == [1, 2]
    phi = [f for f in inv if f.dim == 2][0]
    ctx = build_dgn_context(ws, SL, Q8, phi)
    NKD, res = dgn_brauer(ws, ctx)
    assert NKD.order == 2
    assert [v.rational_value() for v in res.values] == [1, -1]


def test_relative_defect_over_trivial_is_plain_defect():
    G = s4()
    for p in (2, 3):
        ws = Workspace(G, p)
        tb = ws.bundle(G).table
        eb = ws.bundle(G.subgroup([])).table
        for chi in tb.chars:
            assert relative_defect(tb, chi, eb, p) \
                == tb.char_defect(chi, p)


def test_rdz_over_trivial_recovers_defect_zero():
    G = s4()
    ws = Workspace(G, 3)
    tb = ws.bundle(G).table
    eb = ws.bundle(G.subgroup([])).table
    assert sorted(c.degree for c in rdz(tb, eb, eb.chars[0], 3)) == [3, 3]
    ws2 = Workspace(G, 2)
    tb2 = ws2.bundle(G).table
    eb2 = ws2.bundle(G.subgroup([])).table
    assert rdz(tb2, eb2, eb2.chars[0], 2) == []


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("gname", ["S3", "S4"])
def test_rdz0_over_the_p_core_recovers_dz0(gname, p):
    G = s3() if gname == "S3" else s4()
    ws = Workspace(G, p)
    E = G.subgroup([])
    got = rdz0(ws, G, p_core(G, p), E, ws.bundle(E).ibr[0])
    want = dz0_characters(ws, G)
    assert {f.index for f in got} == {f.index for f in want}


def test_rdz0_clifford_route_for_moving_character():
    G = s3()
    C3 = G.subgroup([(1, 2, 0)])
    ws = Workspace(G, 2)
    faithful = [f for f in ws.bundle(C3).ibr if not f.is_trivial()][0]
    assert stabilizer_of_brauer(ws, G, C3, faithful).order == 3
    got = rdz0(ws, G, C3, C3, faithful)
    assert [(f.index, f.dim) for f in got] == [(1, 2)]


def test_rdz0_extension_independence_runs_both_routes():
    # two invariant extensions exist (trivial and sign); both routes
    # must agree, and the answer is the single Brauer character over phi
    G = make("C6", [(1, 2, 3, 4, 5, 0)])
    C3 = G.subgroup([(2, 3, 4, 5, 0, 1)])
    ws = Workspace(G, 2)
    got = rdz0(ws, G, G, C3, ws.bundle(C3).ibr[0])
    assert [(f.index, f.dim, f.is_trivial()) for f in got] \
        == [(0, 1, True)]


def test_context_rejects_non_dz0_character():
    G = s4()
    ws = Workspace(G, 2)
    trivial = ws.bundle(G).ibr[0]
    with pytest.raises(HypothesisViolated):
        build_dgn_context(ws, G, G, trivial)


def test_induced_brauer_values_match_regular_character():
    # inducing the trivial from C3 to S3 gives the permutation Brauer
    # character of the coset action: 2 on the identity, 2 on 3-cycles
    G = s3()
    C3 = G.subgroup([(1, 2, 0)])
    ws = Workspace(G, 2)
    vals = induced_brauer_values(ws, G, C3, ws.bundle(C3).ibr[0])
    assert [v.rational_value() for v in vals] == [2, 2]

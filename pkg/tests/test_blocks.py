"""Block distribution, defect groups, induction, covering, domination."""

import pytest

from pblocks.blocks import (
    block_induction,
    block_of_character,
    brauer_correspondent,
    covered_blocks,
    covers,
    distribute_blocks,
    dominated_blocks,
    principal_block,
    restriction_multiplicity,
)
from pblocks.chartab import character_table
from pblocks.errors import NoCorrespondent
from pblocks.group import build_group, normalizer, quotient_group, sylow
from pblocks.modsys import PModularSystem
from pblocks.perm import parse_perm_list
from pblocks.workspace import Workspace


def make(label, gens):
    return build_group(parse_perm_list(gens), label=label)


def blocks_of(group, p):
    table = character_table(group)
    system = PModularSystem(group.exponent(), p)
    return table, distribute_blocks(table, p, system)


def profile(blocks):
    # (number of ordinary characters, defect) per block, in block order
    return [(len(B.char_indices), B.defect) for B in blocks]


def test_s3_two_blocks():
    table, blocks = blocks_of(make("sym:3", "(1,2); (1,2,3)"), 2)
    assert profile(blocks) == [(2, 1), (1, 0)]
    b0 = blocks[0]
    assert b0.is_principal
    assert sorted(table.chars[i].degree for i in b0.char_indices) == [1, 1]
    assert b0.defect_group.order == 2
    assert blocks[1].defect_group.order == 1


def test_s3_p3_single_block():
    table, blocks = blocks_of(make("sym:3", "(1,2); (1,2,3)"), 3)
    assert profile(blocks) == [(3, 1)]
    assert blocks[0].defect_group.order == 3


def test_s4_block_shapes():
    _, b2 = blocks_of(make("sym:4", "(1,2); (1,2,3,4)"), 2)
    assert profile(b2) == [(5, 3)]
    table, b3 = blocks_of(make("sym:4", "(1,2); (1,2,3,4)"), 3)
    assert profile(b3) == [(3, 1), (1, 0), (1, 0)]
    # the two defect-zero blocks hold the degree-3 characters
    for B in b3[1:]:
        (i,) = B.char_indices
        assert table.chars[i].degree == 3


def test_a5_blocks_all_primes():
    g = make("alt:5", "(1,2,3); (3,4,5)")
    _, b2 = blocks_of(g, 2)
    assert profile(b2) == [(4, 2), (1, 0)]
    _, b3 = blocks_of(g, 3)
    assert profile(b3) == [(3, 1), (1, 0), (1, 0)]
    _, b5 = blocks_of(g, 5)
    assert profile(b5) == [(4, 1), (1, 0)]


def test_sl23_p2_single_block():
    # O_2 = Q8 is contained in every defect group, so one block only
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def mat_perm(m):
        return tuple(
            idx[((m[0][0] * v[0] + m[0][1] * v[1]) % 3,
                 (m[1][0] * v[0] + m[1][1] * v[1]) % 3)]
            for v in vecs
        )

    g = build_group([mat_perm([[1, 1], [0, 1]]), mat_perm([[0, 2], [1, 0]])],
                    label="sl:2:3")
    _, b2 = blocks_of(g, 2)
    assert profile(b2) == [(7, 3)]
    assert b2[0].defect_group.order == 8
    _, b3 = blocks_of(g, 3)
    assert profile(b3) == [(3, 1), (3, 1), (1, 0)]


def test_principal_block_contains_trivial():
    for label, gens, p in [
        ("sym:4", "(1,2); (1,2,3,4)", 2),
        ("sym:4", "(1,2); (1,2,3,4)", 3),
        ("alt:5", "(1,2,3); (3,4,5)", 5),
    ]:
        table, blocks = blocks_of(make(label, gens), p)
        B0 = principal_block(blocks)
        assert B0.index == 0
        triv = next(i for i, r in enumerate(table.chars)
                    if all(v == 1 for v in r.values))
        assert triv in B0.char_indices


def test_block_of_character_partition():
    table, blocks = blocks_of(make("sym:4", "(1,2); (1,2,3,4)"), 3)
    seen = []
    for i in range(len(table.chars)):
        B = block_of_character(blocks, i)
        assert i in B.char_indices
        seen.append(B.index)
    assert sorted(set(seen)) == [0, 1, 2]


def test_defect_zero_iff_degree_p_part():
    # defect zero exactly when p-part of degree equals p-part of group order
    g = make("alt:5", "(1,2,3); (3,4,5)")
    table, blocks = blocks_of(g, 2)
    for B in blocks:
        if B.defect == 0:
            (i,) = B.char_indices
            assert table.chars[i].degree % 4 == 0


def test_brauer_correspondence_a5_p2():
    # principal block of N(V4) = A4 induces to the principal block of A5
    g = make("alt:5", "(1,2,3); (3,4,5)")
    ws = Workspace(g, 2)
    bund = ws.ambient_bundle()
    B0 = bund.blocks[0]
    N = normalizer(g, B0.defect_group)
    assert N.order == 12
    nb = ws.bundle(N)
    corr = brauer_correspondent(B0, bund.blocks, nb.table, nb.blocks)
    assert corr.is_principal
    assert corr.defect_group.order == 4
    assert block_induction(corr, bund.table, bund.blocks).index == 0


def test_brauer_correspondence_sylow_normalizer():
    # for the full Sylow normalizer every block has a correspondent or not;
    # the principal one always does (Brauer's third main theorem direction)
    g = make("sym:4", "(1,2); (1,2,3,4)")
    ws = Workspace(g, 3)
    bund = ws.ambient_bundle()
    P = sylow(g, 3)
    N = normalizer(g, P)
    assert N.order == 6
    nb = ws.bundle(N)
    corr = brauer_correspondent(bund.blocks[0], bund.blocks, nb.table, nb.blocks)
    assert corr.is_principal


def test_no_correspondent_when_defect_too_small():
    # a defect-zero block of G has no correspondent in a proper subgroup
    g = make("sym:4", "(1,2); (1,2,3,4)")
    ws = Workspace(g, 3)
    bund = ws.ambient_bundle()
    dz = [B for B in bund.blocks if B.defect == 0][0]
    P = sylow(g, 3)
    N = normalizer(g, P)
    nb = ws.bundle(N)
    with pytest.raises(NoCorrespondent):
        brauer_correspondent(dz, bund.blocks, nb.table, nb.blocks)


def test_covering_s4_over_v4():
    g = make("sym:4", "(1,2); (1,2,3,4)")
    ws = Workspace(g, 2)
    bund = ws.ambient_bundle()
    v4 = g.subgroup(parse_perm_list("(1,2)(3,4); (1,3)(2,4)"))
    bv = ws.bundle(v4)
    assert profile(bv.blocks) == [(4, 2)]
    assert covers(bund.blocks[0], bv.blocks[0], bund.table, bv.table)
    assert [c.index for c in
            covered_blocks(bund.blocks[0], bund.table, bv.table, bv.blocks)] == [0]


def test_covering_s3_over_c3():
    g = make("sym:3", "(1,2); (1,2,3)")
    ws = Workspace(g, 2)
    bund = ws.ambient_bundle()
    c3 = g.subgroup(parse_perm_list("(1,2,3)"))
    bc = ws.bundle(c3)
    # C3 at p=2: three blocks, one per character
    assert profile(bc.blocks) == [(1, 0), (1, 0), (1, 0)]
    cov0 = covered_blocks(bund.blocks[0], bund.table, bc.table, bc.blocks)
    cov1 = covered_blocks(bund.blocks[1], bund.table, bc.table, bc.blocks)
    # trivial-character block below lies under the principal block above
    assert [c.index for c in cov0] == [0]
    # the faithful C3 characters fuse under the S3 action into one cover set
    assert [c.index for c in cov1] == [1, 2]


def test_restriction_multiplicity_matches_hand_value():
    g = make("sym:3", "(1,2); (1,2,3)")
    table = character_table(g)
    c3 = g.subgroup(parse_perm_list("(1,2,3)"))
    sub = character_table(c3)
    # the 2-dimensional character restricted to C3 contains each faithful
    # linear character once and the trivial one not at all
    two = next(r for r in table.chars if r.degree == 2)
    mults = [restriction_multiplicity(table, two, sub, theta)
             for theta in sub.chars]
    assert sorted(mults) == [0, 1, 1]


def test_domination_s4_mod_v4():
    g = make("sym:4", "(1,2); (1,2,3,4)")
    ws = Workspace(g, 2)
    bund = ws.ambient_bundle()
    v4 = g.subgroup(parse_perm_list("(1,2)(3,4); (1,3)(2,4)"))
    q = quotient_group(g, v4)
    qb = ws.bundle(q.group)
    # S4/V4 is S3: two 2-blocks upstairs in the quotient, both dominated by
    # the unique block of S4
    assert profile(qb.blocks) == [(2, 1), (1, 0)]
    dom = dominated_blocks(q, qb.table, qb.blocks, bund.table, bund.blocks)
    assert {k: v.index for k, v in dom.items()} == {0: 0, 1: 0}


def test_domination_c6_mod_c3():
    g = make("cyclic:6", "(1,2,3,4,5,6)")
    ws = Workspace(g, 2)
    bund = ws.ambient_bundle()
    c3 = g.subgroup(parse_perm_list("(1,3,5)(2,4,6)"))
    q = quotient_group(g, c3)
    qb = ws.bundle(q.group)
    dom = dominated_blocks(q, qb.table, qb.blocks, bund.table, bund.blocks)
    # C6/C3 = C2 has a single 2-block; it sits under the principal block of C6
    assert len(dom) == 1
    assert dom[0].is_principal

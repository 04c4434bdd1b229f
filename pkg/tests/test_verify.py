"""Counting identity verifiers against independently computed values.

Expected counts were frozen from hand calculations with the ordinary
character tables (block splittings, local normalizer structure, and
defect-zero counts worked out on paper before running the code).
"""

import json

import pytest

from pblocks.errors import (BlockNotInvariant, CapExceeded, DefectZeroBlock,
                            HypothesisViolated, NotNormal, QuotientNotPGroup)
from pblocks.group import build_group
from pblocks.verify import (PChain, VerificationReport, covering_p_subgroup_classes,
                            enumerate_p_chains, verify_bawc, verify_chain_counts,
                            verify_dgn_count, verify_extended,
                            verify_extension_bridge, verify_nav_set,
                            verify_navarro)
from pblocks.workspace import Workspace


def make(label, gens):
    return build_group(gens, label=label)


def sl23():
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]

    def act(m):
        out = []
        for v in vecs:
            w = ((m[0][0] * v[0] + m[0][1] * v[1]) % 3,
                 (m[1][0] * v[0] + m[1][1] * v[1]) % 3)
            out.append(vecs.index(w))
        return tuple(out)

    return make("SL23", [act(((1, 1), (0, 1))), act(((0, 2), (1, 0)))])


BATTERY = {
    "C6": lambda: make("C6", [(1, 2, 3, 4, 5, 0)]),
    "S3": lambda: make("S3", [(1, 0, 2), (1, 2, 0)]),
    "S4": lambda: make("S4", [(1, 0, 2, 3), (1, 2, 3, 0)]),
    "A4": lambda: make("A4", [(1, 2, 0, 3), (0, 2, 3, 1)]),
    "A5": lambda: make("A5", [(1, 2, 0, 3, 4), (0, 1, 3, 4, 2)]),
    "D8": lambda: make("D8", [(1, 2, 3, 0), (3, 2, 1, 0)]),
    "Q8": lambda: make("Q8", [(1, 2, 3, 0, 5, 6, 7, 4),
                              (4, 7, 6, 5, 2, 1, 0, 3)]),
    "SL23": sl23,
}

# (lhs, rhs) per block, in block order
GOLDEN_BAWC = {
    ("C6", 2): [(1, 1), (1, 1), (1, 1)],
    ("C6", 3): [(1, 1), (1, 1)],
    ("S3", 2): [(1, 1), (1, 1)],
    ("S3", 3): [(2, 2)],
    ("S4", 2): [(2, 2)],
    ("S4", 3): [(2, 2), (1, 1), (1, 1)],
    ("A4", 2): [(3, 3)],
    ("A4", 3): [(1, 1), (1, 1)],
    ("A5", 2): [(3, 3), (1, 1)],
    ("A5", 3): [(2, 2), (1, 1), (1, 1)],
    ("A5", 5): [(2, 2), (1, 1)],
    ("D8", 2): [(1, 1)],
    ("Q8", 2): [(1, 1)],
    ("SL23", 2): [(3, 3)],
    ("SL23", 3): [(1, 1), (1, 1), (1, 1)],
}


def pair_groups():
    S3 = make("S3", [(1, 2, 0), (1, 0, 2)])
    C3 = make("C3", [(1, 2, 0)])
    D8 = make("D8", [(1, 2, 3, 0), (3, 2, 1, 0)])
    V4 = make("V4", [(1, 0, 3, 2), (2, 3, 0, 1)])
    C6 = make("C6", [(1, 2, 0, 4, 3)])
    C3b = make("C3b", [(1, 2, 0, 3, 4)])
    S4 = make("S4", [(1, 2, 3, 0), (1, 0, 2, 3)])
    A4 = make("A4", [(1, 0, 3, 2), (1, 2, 0, 3)])
    E9C2 = make("E9C2", [(1, 2, 0, 3, 4, 5), (0, 1, 2, 4, 5, 3),
                         (3, 4, 5, 0, 1, 2)])
    E9 = make("E9", [(1, 2, 0, 3, 4, 5), (0, 1, 2, 4, 5, 3)])
    return {"C3<S3": (C3, S3), "V4<D8": (V4, D8), "C3<C6": (C3b, C6),
            "A4<S4": (A4, S4), "E9<E9C2": (E9, E9C2)}


PAIRS = pair_groups()

# every invariant block balances one to one at p = 2
GOLDEN_NAVARRO = {
    "C3<S3": [("B0", 1, 1)],
    "V4<D8": [("B0", 1, 1)],
    "C3<C6": [("B0", 1, 1), ("B1", 1, 1), ("B2", 1, 1)],
    "A4<S4": [("B0", 1, 1)],
    "E9<E9C2": [("B0", 1, 1), ("B4", 1, 1), ("B8", 1, 1)],
}

# all blocks of the normal subgroup, invariant or not
GOLDEN_EXTENDED = {
    "C3<S3": [(1, 1), (0, 0), (0, 0)],
    "V4<D8": [(1, 1)],
    "C3<C6": [(1, 1), (1, 1), (1, 1)],
    "A4<S4": [(1, 1)],
    "E9<E9C2": [(1, 1), (0, 0), (0, 0), (0, 0), (1, 1),
                (0, 0), (0, 0), (0, 0), (1, 1)],
}


@pytest.mark.parametrize("name,p", sorted(GOLDEN_BAWC))
def test_bawc_battery(name, p):
    ws = Workspace(BATTERY[name](), p)
    report = verify_bawc(ws)
    assert report.verdict == "EQUAL"
    got = [(l.lhs, l.rhs) for l in report.per_block]
    assert got == GOLDEN_BAWC[(name, p)]


def test_bawc_prime_not_dividing_order():
    C5 = make("C5", [(1, 2, 3, 4, 0)])
    ws = Workspace(C5, 3)
    report = verify_bawc(ws)
    assert [(l.lhs, l.rhs) for l in report.per_block] == [(1, 1)] * 5
    assert report.verdict == "EQUAL"


def test_bawc_report_shape():
    ws = Workspace(BATTERY["S3"](), 3)
    report = verify_bawc(ws)
    assert report.statement == "awc"
    assert report.group == "S3"
    assert report.prime == 3
    line = report.per_block[0]
    assert line.block_id == "B0" and line.defect == 1
    assert sorted(line.witnesses["weights"]) == line.witnesses["weights"]


def test_bawc_with_overgroup_orbit_multisets():
    A4, S4 = PAIRS["A4<S4"]
    ws = Workspace(S4, 2)
    report = verify_bawc(ws, A4, A=S4)
    assert report.verdict == "EQUAL"
    assert report.overgroup == "S4"
    line = report.per_block[0]
    assert line.witnesses["ibr_orbit_sizes"] == [1, 2]
    assert line.witnesses["weight_orbit_sizes"] == [1, 2]
    assert line.witnesses["stabilizer_order"] == 24


def test_bawc_with_overgroup_trivial_action():
    C3b, C6 = PAIRS["C3<C6"]
    ws = Workspace(C6, 2)
    report = verify_bawc(ws, C3b, A=C6)
    assert report.verdict == "EQUAL"
    for line in report.per_block:
        assert line.witnesses["ibr_orbit_sizes"] == [1]
        assert line.witnesses["weight_orbit_sizes"] == [1]


def test_bawc_overgroup_must_normalize():
    S4 = PAIRS["A4<S4"][1]
    D8 = S4.subgroup([(1, 2, 3, 0), (3, 2, 1, 0)])
    ws = Workspace(S4, 2)
    with pytest.raises(NotNormal):
        verify_bawc(ws, D8, A=S4)


@pytest.mark.parametrize("name", sorted(GOLDEN_NAVARRO))
def test_navarro_pairs(name):
    G, Gamma = PAIRS[name]
    ws = Workspace(Gamma, 2)
    report = verify_navarro(ws, G)
    assert report.verdict == "EQUAL"
    got = [(l.block_id, l.lhs, l.rhs) for l in report.per_block]
    assert got == GOLDEN_NAVARRO[name]


@pytest.mark.parametrize("name,p", [("S3", 2), ("S3", 3), ("S4", 2),
                                    ("A4", 2), ("D8", 2), ("SL23", 3)])
def test_navarro_degenerates_to_bawc(name, p):
    G = BATTERY[name]()
    ws = Workspace(G, p)
    nav = verify_navarro(ws, G)
    awc = verify_bawc(ws)
    key = lambda rep: [(l.block_id, l.defect, l.lhs, l.rhs, l.verdict)
                       for l in rep.per_block]
    assert key(nav) == key(awc)


def test_navarro_quotient_must_be_p_group():
    A4, S4 = PAIRS["A4<S4"]
    ws = Workspace(S4, 3)
    with pytest.raises(QuotientNotPGroup):
        verify_navarro(ws, A4)


def test_covering_classes_for_klein_in_dihedral():
    V4, D8 = PAIRS["V4<D8"]
    ws = Workspace(D8, 2)
    B = ws.bundle(V4).blocks[0]
    classes = covering_p_subgroup_classes(ws, D8, V4, B)
    assert sorted(c.order for c in classes) == [2, 4, 4, 8]


def test_covering_classes_reject_moving_block():
    C3, S3 = PAIRS["C3<S3"]
    ws = Workspace(S3, 2)
    moving = ws.bundle(C3).blocks[1]
    with pytest.raises(BlockNotInvariant):
        covering_p_subgroup_classes(ws, S3, C3, moving)


@pytest.mark.parametrize("name", sorted(GOLDEN_EXTENDED))
def test_extended_pairs(name):
    G, Gamma = PAIRS[name]
    ws = Workspace(Gamma, 2)
    report = verify_extended(ws, G)
    assert report.verdict == "EQUAL"
    assert [(l.lhs, l.rhs) for l in report.per_block] == GOLDEN_EXTENDED[name]


@pytest.mark.parametrize("name,p,expect", [
    ("C3<S3", 3, [(2, 2)]),
    ("A4<S4", 3, [(2, 2), (2, 2)]),
])
def test_extended_with_prime_to_quotient(name, p, expect):
    # quotient of order two at an odd prime: no p-group hypothesis needed
    G, Gamma = PAIRS[name]
    ws = Workspace(Gamma, p)
    report = verify_extended(ws, G)
    assert report.verdict == "EQUAL"
    assert [(l.lhs, l.rhs) for l in report.per_block] == expect


@pytest.mark.parametrize("name", sorted(GOLDEN_NAVARRO))
def test_extension_bridge_pairs(name):
    G, Gamma = PAIRS[name]
    ws = Workspace(Gamma, 2)
    report = verify_extension_bridge(ws, G)
    assert report.verdict == "EQUAL"
    for line in report.per_block:
        assert line.lhs == line.rhs


def test_extension_bridge_has_lift_lines():
    A4, S4 = PAIRS["A4<S4"]
    ws = Workspace(S4, 2)
    report = verify_extension_bridge(ws, A4)
    lifted = [l for l in report.per_block if "lift_order" in l.witnesses]
    assert len(lifted) == 1
    assert lifted[0].witnesses["lift_order"] == 8


@pytest.mark.parametrize("name", sorted(GOLDEN_NAVARRO))
def test_nav_set_pairs(name):
    G, Gamma = PAIRS[name]
    ws = Workspace(Gamma, 2)
    report = verify_nav_set(ws, G)
    assert report.verdict == "EQUAL"
    got = [(l.block_id, l.lhs, l.rhs) for l in report.per_block]
    assert got == GOLDEN_NAVARRO[name]
    for line in report.per_block:
        assert "counting consequence" in line.witnesses["note"]


DGN_COUNT_CASES = [
    ("C3<S3", 2, 1),
    ("E9<E9C2", 2, 3),
    ("C5<D10", 2, 1),
    ("C7<F21", 3, 1),
]


def dgn_pair(name):
    if name in PAIRS:
        return PAIRS[name]
    if name == "C5<D10":
        return (make("C5", [(1, 2, 3, 4, 0)]),
                make("D10", [(1, 2, 3, 4, 0), (0, 4, 3, 2, 1)]))
    return (make("C7", [(1, 2, 3, 4, 5, 6, 0)]),
            make("F21", [(1, 2, 3, 4, 5, 6, 0), (0, 2, 4, 6, 1, 3, 5)]))


@pytest.mark.parametrize("name,p,count", DGN_COUNT_CASES)
def test_dgn_count_cases(name, p, count):
    K, Gamma = dgn_pair(name)
    ws = Workspace(Gamma, p)
    report = verify_dgn_count(ws, K)
    line = report.per_block[0]
    assert (line.lhs, line.rhs) == (count, count)
    assert report.verdict == "EQUAL"


def test_dgn_count_rejects_dividing_prime():
    V4, D8 = PAIRS["V4<D8"]
    ws = Workspace(D8, 2)
    with pytest.raises(HypothesisViolated):
        verify_dgn_count(ws, V4)


def test_dgn_count_rejects_wrong_index():
    K, Gamma = dgn_pair("C5<D10")
    ws = Workspace(Gamma, 3)
    with pytest.raises(HypothesisViolated):
        verify_dgn_count(ws, K)


def test_chain_classes_of_a5():
    A5 = BATTERY["A5"]()
    chains = enumerate_p_chains(A5, 2)
    assert [c.label() for c in chains] == ["1", "1<2", "1<4", "1<2<4"]
    assert [c.length for c in chains] == [0, 1, 1, 2]
    assert [c.stabilizer.order for c in chains] == [60, 4, 12, 4]


def test_chain_cap():
    S4 = BATTERY["S4"]()
    with pytest.raises(CapExceeded):
        enumerate_p_chains(S4, 2, cap=3)


def test_chain_balance_s3_golden():
    S3 = BATTERY["S3"]()
    ws = Workspace(S3, 3)
    B0 = ws.bundle(S3).blocks[0]
    line = verify_chain_counts(ws, B0).per_block[0]
    assert (line.lhs, line.rhs) == (2, 2)


def test_chain_balance_s3_even_prime():
    S3 = BATTERY["S3"]()
    ws = Workspace(S3, 2)
    B0 = ws.bundle(S3).blocks[0]
    line = verify_chain_counts(ws, B0).per_block[0]
    assert (line.lhs, line.rhs) == (1, 1)


def test_chain_balance_p_group():
    D8 = BATTERY["D8"]()
    ws = Workspace(D8, 2)
    B0 = ws.bundle(D8).blocks[0]
    report = verify_chain_counts(ws, B0)
    line = report.per_block[0]
    assert line.lhs == line.rhs
    assert report.verdict == "EQUAL"


def test_chain_balance_a5_signed_detail():
    A5 = BATTERY["A5"]()
    ws = Workspace(A5, 2)
    B0 = ws.bundle(A5).blocks[0]
    line = verify_chain_counts(ws, B0).per_block[0]
    assert (line.lhs, line.rhs) == (4, 4)
    assert line.witnesses["signed_counts"] == {
        "1": 3, "1<2": -1, "1<4": -3, "1<2<4": 1}


@pytest.mark.parametrize("name,p", [("S4", 2), ("S4", 3), ("A4", 2),
                                    ("A5", 3), ("A5", 5), ("SL23", 2),
                                    ("SL23", 3), ("C6", 2), ("Q8", 2)])
def test_chain_balance_battery(name, p):
    G = BATTERY[name]()
    ws = Workspace(G, p)
    for B in ws.bundle(G).blocks:
        if B.defect == 0:
            continue
        report = verify_chain_counts(ws, B)
        assert report.verdict == "EQUAL", (name, p, B.label())


def test_chain_rejects_defect_zero_block():
    A5 = BATTERY["A5"]()
    ws = Workspace(A5, 2)
    B1 = ws.bundle(A5).blocks[1]
    assert B1.defect == 0
    with pytest.raises(DefectZeroBlock):
        verify_chain_counts(ws, B1)


def test_report_verdict_aggregation():
    report = VerificationReport(statement="x", group="g", prime=2, seed=0)
    report.add(block_id="B0", defect=1, lhs=1, rhs=1)
    assert report.verdict == "EQUAL"
    report.add(block_id="B1", defect=0, lhs=1, rhs=None, verdict="SKIPPED")
    assert report.verdict == "SKIPPED"
    report.add(block_id="B2", defect=0, lhs=1, rhs=2)
    assert report.verdict == "UNEQUAL"


def test_payload_deterministic_and_integer():
    def run():
        ws = Workspace(PAIRS["A4<S4"][1], 2)
        rep = verify_navarro(ws, PAIRS["A4<S4"][0])
        return json.dumps(rep.payload(), sort_keys=True)

    first, second = run(), run()
    assert first == second
    data = json.loads(first)
    assert data["wall_ms"] == 0
    assert data["schema_version"] == 1
    assert data["overgroup"] == "S4"
    for line in data["per_block"]:
        assert isinstance(line["lhs"], int) and isinstance(line["rhs"], int)


def test_payload_omits_overgroup_when_absent():
    ws = Workspace(BATTERY["S3"](), 2)
    payload = verify_bawc(ws).payload()
    assert "overgroup" not in payload

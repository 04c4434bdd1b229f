"""Radical p-subgroups and weight enumeration.

A weight of G at p is a pair (Q, psi): Q a radical p-subgroup (meaning
Q is exactly the p-core of its own normalizer) and psi a Brauer
character of N_G(Q) that becomes a defect-zero character once Q is
factored out.  Weights are counted up to conjugacy; since Brauer
characters of N_G(Q) are class functions, each psi is a full orbit by
itself once the subgroup class is fixed.
"""

from dataclasses import dataclass

from .errors import InductionUndefined, ReductionFailure
from .group import (PermGroup, SubgroupClass, normalizer, p_core,
                    p_subgroup_classes, quotient_group, require_normal)
from .blocks import Block, block_induction
from .modrep import BrauerCharacter, decompose_in_basis
from .workspace import Bundle, Workspace

__all__ = [
    "is_radical_p_subgroup", "radical_p_subgroup_classes",
    "quotient_class_map", "deflated_brauer", "dz0_characters",
    "Weight", "enumerate_weights", "rad0", "b_weights",
    "restricted_values", "weights_over",
]


def is_radical_p_subgroup(G: PermGroup, Q: PermGroup, p: int) -> bool:
    """Q is radical in G when Q = O_p(N_G(Q)).  The trivial subgroup is
    radical exactly when O_p(G) = 1."""
    N = normalizer(G, Q)
    return p_core(N, p).element_set() == Q.element_set()


def radical_p_subgroup_classes(G: PermGroup, p: int) -> list:
    """G-classes of radical p-subgroups, sorted by (order, class key)."""
    return [cls for cls in p_subgroup_classes(G, p)
            if is_radical_p_subgroup(G, cls.rep, p)]


def quotient_class_map(hb: Bundle, qb: Bundle, quo) -> list:
    """Positionwise map of p-regular classes under a quotient map.

    Entry i gives the position, inside the quotient's p-regular class
    list, of the class containing the image of the i-th p-regular class
    representative of the source group.
    """
    dst = qb.p_regular_indices()
    pos = {c: i for i, c in enumerate(dst)}
    out = []
    for c in hb.p_regular_indices():
        rep = hb.table.classes[c].rep
        out.append(pos[qb.table.group.class_index(quo.project(rep))])
    return out


def deflated_brauer(hb: Bundle, qb: Bundle, quo,
                    phi: BrauerCharacter) -> BrauerCharacter:
    """The quotient Brauer character matching phi through the quotient
    map.  Exists and is unique whenever the kernel is a normal p-subgroup
    (p-groups act trivially on simple modules in characteristic p)."""
    cmap = quotient_class_map(hb, qb, quo)
    hits = [mu for mu in qb.ibr
            if mu.dim == phi.dim
            and all(phi.values[i] == mu.values[j]
                    for i, j in enumerate(cmap))]
    if len(hits) != 1:
        raise ReductionFailure(
            f"deflation of phi{phi.index} matched {len(hits)} quotient "
            f"Brauer characters, expected exactly one")
    return hits[0]


def dz0_characters(ws: Workspace, H: PermGroup) -> list:
    """Brauer characters of H whose deflation modulo O_p(H) sits in a
    defect-zero block of H/O_p(H)."""
    hb = ws.bundle(H)
    L = p_core(H, ws.p)
    if L.order == 1:
        return [phi for phi in hb.ibr
                if hb.blocks[hb.ibr_block[phi.index]].defect == 0]
    quo = quotient_group(H, L)
    qb = ws.bundle(quo.group)
    keep = []
    for phi in hb.ibr:
        bar = deflated_brauer(hb, qb, quo, phi)
        if qb.blocks[qb.ibr_block[bar.index]].defect == 0:
            keep.append(phi)
    return keep


@dataclass(frozen=True)
class Weight:
    """One G-orbit of weights, carried by its canonical representative."""
    subgroup: SubgroupClass          # radical class of Q
    psi: BrauerCharacter             # member of dz0 of N_G(Q)
    normalizer_block: int            # block index of psi inside N_G(Q)
    induced_block: int               # index of the block of G it lands in
    orbit_id: str

    def __repr__(self):
        return f"<weight {self.orbit_id} -> B{self.induced_block}>"


def enumerate_weights(ws: Workspace, G: PermGroup = None) -> list:
    """All weight orbits of G, ordered by radical class then character.

    The block of G attached to a weight is the induced block of the
    block of N_G(Q) holding psi; induction from a normalizer of a
    p-subgroup is always defined, so a miss is an internal error.
    """
    if G is None:
        G = ws.ambient
    gb = ws.bundle(G)
    out = []
    for cls in radical_p_subgroup_classes(G, ws.p):
        N = normalizer(G, cls.rep)
        nb = ws.bundle(N)
        for psi in dz0_characters(ws, N):
            nblk = nb.blocks[nb.ibr_block[psi.index]]
            induced = block_induction(nblk, gb.table, gb.blocks)
            if induced is None:
                raise InductionUndefined(
                    f"no induced block from normalizer block "
                    f"{nblk.label()} at {cls.canonical_label()}")
            out.append(Weight(
                subgroup=cls, psi=psi,
                normalizer_block=nblk.index,
                induced_block=induced.index,
                orbit_id=f"{cls.canonical_label()}:phi{psi.index}"))
    return out


def rad0(ws: Workspace, G: PermGroup = None) -> list:
    """Radical classes carrying at least one weight."""
    weights = enumerate_weights(ws, G)
    live = {w.subgroup.key for w in weights}
    return [cls for cls in radical_p_subgroup_classes(
                G if G is not None else ws.ambient, ws.p)
            if cls.key in live]


def b_weights(ws: Workspace, B: Block, G: PermGroup = None) -> list:
    """Weight orbits attached to the block B."""
    return [w for w in enumerate_weights(ws, G)
            if w.induced_block == B.index]


def restricted_values(hb: Bundle, sb: Bundle,
                      phi: BrauerCharacter) -> tuple:
    """Values of phi on the p-regular classes of a subgroup, read off by
    locating each subgroup class representative inside the big group."""
    out = []
    for c in sb.p_regular_indices():
        rep = sb.table.classes[c].rep
        j = hb.table.group.class_index(rep)
        pos = hb.p_regular_indices().index(j)
        out.append(phi.values[pos])
    return tuple(out)


def weights_over(ws: Workspace, K: PermGroup,
                 G: PermGroup = None) -> list:
    """Orbits of pairs (Q, eta): Q radical in the normal subgroup K, eta
    a Brauer character of N_G(Q) lying over some dz0 member of N_K(Q).

    With K = G this reproduces the plain weights; with K trivial it
    degenerates to one pair per Brauer character of G.
    """
    if G is None:
        G = ws.ambient
    require_normal(G, K)
    kset = K.element_set()
    out = []
    for cls in p_subgroup_classes(G, ws.p):
        if not cls.rep.element_set() <= kset:
            continue
        if not is_radical_p_subgroup(K, cls.rep, ws.p):
            continue
        NG = normalizer(G, cls.rep)
        NK = normalizer(K, cls.rep)
        ngb = ws.bundle(NG)
        nkb = ws.bundle(NK)
        dz_idx = {phi.index for phi in dz0_characters(ws, NK)}
        basis = [phi.values for phi in nkb.ibr]
        for eta in ngb.ibr:
            target = restricted_values(ngb, nkb, eta)
            coeffs = decompose_in_basis(basis, target)
            if any(c > 0 and j in dz_idx for j, c in enumerate(coeffs)):
                out.append((cls, eta))
    return out

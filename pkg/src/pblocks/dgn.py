"""Dade-Glauberman-Nagao correspondence and relative defect machinery.

Setting: K normal in M with M/K a p-group.  An M-invariant defect-zero
character of K determines a unique covering block of M; its defect
group D complements K, and chasing the block to N_M(D) = D x C_K(D)
drops a unique defect-zero character of C_K(D), the DGN correspondent.
The Brauer-character version runs the same chase in M/O_p(K) and pulls
the answer back to N_K(D).
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (CapExceeded, HypothesisViolated, NoInvariantExtension,
                     QuotientNotPGroup, ReductionFailure)
from .group import (PermGroup, Quotient, centralizer, conjugating_element,
                    normalizer, p_core, quotient_group, require_normal,
                    subgroup_intersection)
from .perm import conj, pmul
from .cyclo import Cyclotomic
from .chartab import CharacterRow, CharacterTable
from .blocks import (Block, block_of_character, brauer_correspondent,
                     covered_blocks, covers, find_character_by_values,
                     restriction_multiplicity, restriction_values)
from .modrep import BrauerCharacter, decompose_in_basis
from .weights import deflated_brauer, dz0_characters
from .workspace import Bundle, Workspace

__all__ = [
    "is_p_power", "ordinary_invariant_under", "brauer_invariant_under",
    "OrdinaryDgn", "glauberman_dgn_ordinary", "dgn_multiplicity_oracle",
    "DgnContext", "build_dgn_context", "dgn_brauer",
    "relative_defect", "rdz", "stabilizer_of_brauer", "induced_brauer_values",
    "rdz0",
]

EXTENSION_SEARCH_CAP = 64       # bound on |M:K| for invariant extensions


def is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def ordinary_invariant_under(table: CharacterTable, chi: CharacterRow,
                             gens) -> bool:
    """Invariance of an ordinary character under conjugation by outside
    elements (which must normalize the group)."""
    G = table.group
    for g in gens:
        for cls in table.classes:
            if chi.values[G.class_index(conj(cls.rep, g))] \
                    != chi.values[cls.index]:
                return False
    return True


def brauer_invariant_under(bundle: Bundle, phi: BrauerCharacter,
                           gens) -> bool:
    G = bundle.table.group
    pr = bundle.p_regular_indices()
    pos = {c: i for i, c in enumerate(pr)}
    for g in gens:
        for i, c in enumerate(pr):
            rep = bundle.table.classes[c].rep
            if phi.values[pos[G.class_index(conj(rep, g))]] \
                    != phi.values[i]:
                return False
    return True


@dataclass
class OrdinaryDgn:
    """Everything the defect-zero chase produces in one place."""
    D: PermGroup                 # complement of K in M
    N: PermGroup                 # N_M(D) = D x C_K(D)
    C: PermGroup                 # C_K(D)
    covering_block: Block        # the unique block of M over bl(theta)
    local_block: Block           # its correspondent in N_M(D)
    target_block: Block          # defect-zero block of C_K(D) underneath
    theta_prime: CharacterRow    # the correspondent itself


def glauberman_dgn_ordinary(ws: Workspace, M: PermGroup, K: PermGroup,
                            theta: CharacterRow,
                            D: PermGroup = None) -> OrdinaryDgn:
    """DGN correspondent of an M-invariant defect-zero character of K.

    When D is omitted it is taken to be a defect group of the covering
    block; a supplied D must be one (up to M-conjugacy).
    """
    require_normal(M, K)
    if not is_p_power(M.order // K.order, ws.p):
        raise QuotientNotPGroup(
            f"index {M.order // K.order} is not a power of {ws.p}")
    kb, mb = ws.bundle(K), ws.bundle(M)
    if kb.table.char_defect(theta, ws.p) != 0:
        raise HypothesisViolated("character of K must have defect zero")
    if not ordinary_invariant_under(kb.table, theta, M.gens):
        raise HypothesisViolated("character of K must be M-invariant")

    b_theta = block_of_character(kb.blocks, theta.index)
    covering = [B for B in mb.blocks
                if covers(B, b_theta, mb.table, kb.table)]
    assert len(covering) == 1, "p-power index forces a unique cover"
    b = covering[0]

    if D is None:
        D = b.defect_group
    elif conjugating_element(M, D, b.defect_group) is None:
        raise HypothesisViolated(
            "supplied D is not a defect group of the covering block")
    assert K.order * D.order == M.order
    assert subgroup_intersection(K, D).order == 1

    N = normalizer(M, D)
    C = centralizer(K, D)
    assert D.order * C.order == N.order
    assert subgroup_intersection(D, C).order == 1
    assert all(pmul(d, c) == pmul(c, d) for d in D.gens for c in C.gens)

    nb, cb = ws.bundle(N), ws.bundle(C)
    corr = brauer_correspondent(b, mb.blocks, nb.table, nb.blocks)
    dz_under = [blk for blk in covered_blocks(corr, nb.table, cb.table,
                                              cb.blocks)
                if blk.defect == 0]
    assert len(dz_under) == 1
    c = dz_under[0]
    assert len(c.char_indices) == 1
    return OrdinaryDgn(D=D, N=N, C=C, covering_block=b, local_block=corr,
                       target_block=c,
                       theta_prime=cb.table.chars[c.char_indices[0]])


def dgn_multiplicity_oracle(ws: Workspace, K: PermGroup, C: PermGroup,
                            theta: CharacterRow) -> CharacterRow:
    """Unique constituent of theta restricted to C whose multiplicity is
    prime to p.  Independent route to the correspondent."""
    kb, cb = ws.bundle(K), ws.bundle(C)
    hits = []
    for xi in cb.table.chars:
        m = restriction_multiplicity(kb.table, theta, cb.table, xi)
        if m != 0 and int(m) % ws.p != 0:
            hits.append(xi)
    if len(hits) != 1:
        raise ReductionFailure(
            f"multiplicity route found {len(hits)} candidates")
    return hits[0]


@dataclass
class DgnContext:
    """Inputs of the Brauer-character correspondence, precomputed."""
    M: PermGroup
    K: PermGroup
    phi: BrauerCharacter         # M-invariant, defect-zero-core
    L: PermGroup                 # O_p(K)
    quo: object                  # M -> M/L (identity shim when L = 1)
    M_bar: PermGroup
    K_bar: PermGroup
    theta_bar: CharacterRow      # ordinary lift of phi mod L
    D: PermGroup                 # p-subgroup with D/L a defect group


class _IdentityQuotient:
    """Stand-in for quotienting by the trivial subgroup; avoids blowing
    the group up to its regular representation."""

    def __init__(self, G: PermGroup):
        self.parent = G
        self.kernel = G.subgroup([])
        self.group = G

    def project(self, x):
        return tuple(x)

    def preimage(self, q):
        return tuple(q)


def layer_quotient(parent: PermGroup, L: PermGroup):
    if L.order == 1:
        return _IdentityQuotient(parent)
    return quotient_group(parent, L)


def lift_to_ordinary(kb: Bundle, phi_values: tuple, p: int) -> CharacterRow:
    """The unique ordinary character of defect zero restricting to the
    given Brauer values on p-regular classes."""
    hits = [chi for chi in kb.table.chars
            if kb.table.char_defect(chi, p) == 0
            and kb.table.restrict_to_p_regular(chi, p) == tuple(phi_values)]
    if len(hits) != 1:
        raise ReductionFailure(
            f"defect-zero lift matched {len(hits)} ordinary characters")
    return hits[0]


def subgroup_image(quo: Quotient, H: PermGroup) -> PermGroup:
    return quo.group.subgroup([quo.project(h) for h in H.gens])


def subgroup_preimage(quo: Quotient, H_bar: PermGroup) -> PermGroup:
    members = H_bar.element_set()
    gens = [x for x in quo.parent.elements() if quo.project(x) in members]
    return quo.parent.subgroup(gens)


def build_dgn_context(ws: Workspace, M: PermGroup, K: PermGroup,
                      phi: BrauerCharacter) -> DgnContext:
    require_normal(M, K)
    if not is_p_power(M.order // K.order, ws.p):
        raise QuotientNotPGroup(
            f"index {M.order // K.order} is not a power of {ws.p}")
    kb = ws.bundle(K)
    if phi.index not in {f.index for f in dz0_characters(ws, K)}:
        raise HypothesisViolated(
            "phi must deflate into a defect-zero block of K/O_p(K)")
    if not brauer_invariant_under(kb, phi, M.gens):
        raise HypothesisViolated("phi must be M-invariant")

    L = p_core(K, ws.p)
    quo = layer_quotient(M, L)
    M_bar = quo.group
    K_bar = subgroup_image(quo, K)
    kbar_b = ws.bundle(K_bar)
    phi_bar = deflated_brauer(kb, kbar_b, quo, phi)
    theta_bar = lift_to_ordinary(kbar_b, phi_bar.values, ws.p)

    mbar_b = ws.bundle(M_bar)
    b_bar = block_of_character(kbar_b.blocks, theta_bar.index)
    covering = [B for B in mbar_b.blocks
                if covers(B, b_bar, mbar_b.table, kbar_b.table)]
    assert len(covering) == 1
    D_bar = covering[0].defect_group
    D = subgroup_preimage(quo, D_bar)
    assert is_p_power(D.order, ws.p)
    assert K.order * D.order // L.order == M.order      # M = KD
    assert subgroup_intersection(K, D).element_set() == L.element_set()
    return DgnContext(M=M, K=K, phi=phi, L=L, quo=quo, M_bar=M_bar,
                      K_bar=K_bar, theta_bar=theta_bar, D=D)


def dgn_brauer(ws: Workspace, ctx: DgnContext):
    """Brauer-character DGN correspondent of ctx.phi.

    Returns (N_K(D), correspondent) where the correspondent is one of
    the irreducible Brauer characters of N_K(D); it always lands in the
    defect-zero-core set of that normalizer.
    """
    D_bar = subgroup_image(ctx.quo, ctx.D)
    od = glauberman_dgn_ordinary(ws, ctx.M_bar, ctx.K_bar, ctx.theta_bar,
                                 D=D_bar)

    NKD = normalizer(ctx.K, ctx.D)
    # the quotient map carries N_K(D) onto the centralizer downstairs
    image = {ctx.quo.project(x) for x in NKD.elements()}
    assert image == od.C.element_set()
    assert ctx.L.element_set() <= NKD.element_set()

    nkb = ws.bundle(NKD)
    c_group = od.target_block.table.group
    vals = tuple(od.theta_prime.values[
                     c_group.class_index(ctx.quo.project(cls.rep))]
                 for cls in nkb.table.classes)
    theta_prime = find_character_by_values(nkb.table, vals)
    assert theta_prime is not None, "inflation must stay irreducible"

    target = nkb.table.restrict_to_p_regular(theta_prime, ws.p)
    coeffs = decompose_in_basis([f.values for f in nkb.ibr], target)
    assert sorted(coeffs) == [0] * (len(coeffs) - 1) + [1]
    result = nkb.ibr[coeffs.index(1)]
    assert result.index in {f.index for f in dz0_characters(ws, NKD)}
    return NKD, result


# -- relative defect -------------------------------------------------------

def p_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def relative_defect(G_table: CharacterTable, chi: CharacterRow,
                    N_table: CharacterTable, p: int) -> int:
    """Defect of chi relative to a normal subgroup: the p-part of
    |G:N| divided by the degree ratio chi(1)/theta(1), as an exponent.
    All constituents theta of the restriction give the same answer."""
    require_normal(G_table.group, N_table.group)
    cons = [th for th in N_table.chars
            if restriction_multiplicity(G_table, chi, N_table, th) != 0]
    assert cons, "restriction of a character cannot vanish"
    answers = {p_valuation(G_table.group.order // N_table.group.order, p)
               - p_valuation(chi.degree, p) + p_valuation(th.degree, p)
               for th in cons}
    assert len(answers) == 1
    return answers.pop()


def rdz(G_table: CharacterTable, M_table: CharacterTable,
        theta_hat: CharacterRow, p: int) -> list:
    """Characters over theta_hat whose defect relative to M vanishes."""
    out = []
    for chi in G_table.chars:
        if restriction_multiplicity(G_table, chi, M_table, theta_hat) == 0:
            continue
        if relative_defect(G_table, chi, M_table, p) == 0:
            out.append(chi)
    return out


def stabilizer_of_brauer(ws: Workspace, G: PermGroup, K: PermGroup,
                         phi: BrauerCharacter) -> PermGroup:
    """Stabilizer in G of a Brauer character of the normal subgroup K."""
    require_normal(G, K)
    kb = ws.bundle(K)
    pr = kb.p_regular_indices()
    pos = {c: i for i, c in enumerate(pr)}
    KG = kb.table.group

    def fixes(g):
        return all(phi.values[pos[KG.class_index(
                       conj(kb.table.classes[c].rep, g))]] == phi.values[i]
                   for i, c in enumerate(pr))

    return G.subgroup([g for g in G.elements() if fixes(g)])


def induced_brauer_values(ws: Workspace, G: PermGroup, H: PermGroup,
                          phi: BrauerCharacter) -> tuple:
    """Values of the induced Brauer class function on the p-regular
    classes of G (zero extension off H, averaged over the group)."""
    gb, hb = ws.bundle(G), ws.bundle(H)
    members = H.element_set()
    pr_h = hb.p_regular_indices()
    pos_h = {c: i for i, c in enumerate(pr_h)}
    HG = hb.table.group
    out = []
    for c in gb.p_regular_indices():
        rep = gb.table.classes[c].rep
        total = Cyclotomic.zero()
        for x in G.elements():
            y = conj(rep, x)
            if y in members:
                total = total + phi.values[pos_h[HG.class_index(y)]]
        out.append(total * Fraction(1, H.order))
    return tuple(out)


def rdz0(ws: Workspace, G: PermGroup, M: PermGroup, K: PermGroup,
         phi: BrauerCharacter) -> list:
    """Brauer characters of G with defect zero relative to M over phi.

    phi must be an M-invariant defect-zero-core character of K, with
    K <= M normal in G and M/K a p-group.  A phi that is not G-invariant
    is routed through its stabilizer and induced back up.
    """
    require_normal(G, M)
    require_normal(G, K)
    if not is_p_power(M.order // K.order, ws.p):
        raise QuotientNotPGroup(
            f"index {M.order // K.order} is not a power of {ws.p}")
    kb = ws.bundle(K)
    if not brauer_invariant_under(kb, phi, M.gens):
        raise HypothesisViolated("phi must be M-invariant")

    stab = stabilizer_of_brauer(ws, G, K, phi)
    if stab.order != G.order:
        inner = rdz0(ws, stab, M, K, phi)
        gb = ws.bundle(G)
        basis = [f.values for f in gb.ibr]
        out = []
        for psi in inner:
            vals = induced_brauer_values(ws, G, stab, psi)
            coeffs = decompose_in_basis(basis, vals)
            assert sorted(coeffs) == [0] * (len(coeffs) - 1) + [1], \
                "induction from the stabilizer must stay irreducible"
            out.append(gb.ibr[coeffs.index(1)])
        return out

    if M.order // K.order > EXTENSION_SEARCH_CAP:
        raise CapExceeded(
            f"invariant extension search over index {M.order // K.order}")

    L = p_core(K, ws.p)
    quo = layer_quotient(G, L)
    G_bar = quo.group
    M_bar = subgroup_image(quo, M)
    K_bar = subgroup_image(quo, K)
    gbar_b, mbar_b, kbar_b = (ws.bundle(G_bar), ws.bundle(M_bar),
                              ws.bundle(K_bar))
    phi_bar = deflated_brauer(kb, kbar_b, quo, phi)
    theta_bar = lift_to_ordinary(kbar_b, phi_bar.values, ws.p)

    extensions = [chi for chi in mbar_b.table.chars
                  if chi.degree == theta_bar.degree
                  and restriction_values(mbar_b.table, chi, kbar_b.table)
                  == theta_bar.values
                  and ordinary_invariant_under(mbar_b.table, chi,
                                               G_bar.gens)]
    if not extensions:
        raise NoInvariantExtension(
            f"no invariant extension of the lift to {M_bar.describe()}")

    def one_route(theta_hat):
        picked = []
        for chi_bar in rdz(gbar_b.table, mbar_b.table, theta_hat, ws.p):
            target = gbar_b.table.restrict_to_p_regular(chi_bar, ws.p)
            coeffs = decompose_in_basis([f.values for f in gbar_b.ibr],
                                        target)
            assert sorted(coeffs) == [0] * (len(coeffs) - 1) + [1], \
                "relative defect zero must restrict irreducibly"
            picked.append(coeffs.index(1))
        assert len(set(picked)) == len(picked)
        return sorted(picked)

    chosen = one_route(extensions[0])
    if len(extensions) > 1:
        # the set does not depend on which invariant extension is used
        assert one_route(extensions[1]) == chosen

    gb = ws.bundle(G)
    out = []
    for j in chosen:
        mu = gbar_b.ibr[j]
        hits = [f for f in gb.ibr
                if deflated_brauer(gb, gbar_b, quo, f).index == mu.index]
        assert len(hits) == 1
        out.append(hits[0])
    return out

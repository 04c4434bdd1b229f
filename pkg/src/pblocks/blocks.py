"""p-blocks of a finite group from reduced central characters.

Two ordinary irreducibles lie in the same p-block exactly when their
central characters agree after reduction into the modular frame.  Each
block carries its reduced central function (lambda), its defect, and a
defect group computed from a minimal-defect class in the support of
lambda; the defect-group order is re-checked against the character-degree
formula, so a wrong pick cannot slip through.

Block induction follows the class-sum formula: the induced central
function evaluates lambda on the part of each ambient class lying in the
subgroup.  Induction is "defined" exactly when the resulting function is
the lambda of some block upstairs; no separate homomorphism test is
needed, because the lambdas downstairs enumerate all algebra
homomorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chartab import CharacterTable
from .errors import NoCorrespondent, ReductionFailure
from .group import (PermGroup, centralizer_of_element, contains_group,
                    require_normal, sylow, valuation)
from .modsys import PModularSystem


@dataclass
class Block:
    """One p-block: a set of ordinary irreducibles with shared lambda."""
    index: int
    p: int
    char_indices: tuple
    lam: tuple            # field codes per conjugacy class
    defect: int
    defect_group: PermGroup = field(repr=False)
    table: CharacterTable = field(repr=False)
    system: PModularSystem = field(repr=False)

    @property
    def is_principal(self) -> bool:
        return 0 in self.char_indices

    def chars(self) -> list:
        return [self.table.chars[i] for i in self.char_indices]

    def label(self) -> str:
        return f"B{self.index}"

    def __repr__(self):
        return (f"<block B{self.index} (p={self.p}): "
                f"{len(self.char_indices)} ordinary chars, "
                f"defect {self.defect}>")


def distribute_blocks(table: CharacterTable, p: int,
                      system: PModularSystem) -> list:
    """Partition Irr(G) into p-blocks and attach defect data."""
    G = table.group
    by_lam = {}
    for chi in table.chars:
        omega = table.central_character(chi)
        lam = tuple(system.star(v) for v in omega)
        by_lam.setdefault(lam, []).append(chi.index)
    groups = sorted(by_lam.items(), key=lambda kv: min(kv[1]))
    blocks = []
    for index, (lam, char_indices) in enumerate(groups):
        defect = max(table.char_defect(table.chars[i], p)
                     for i in char_indices)
        D = _defect_group(table, p, lam, defect)
        blocks.append(Block(index=index, p=p,
                            char_indices=tuple(sorted(char_indices)),
                            lam=lam, defect=defect, defect_group=D,
                            table=table, system=system))
    principal = blocks[0]
    assert principal.is_principal
    for j, cls in enumerate(table.classes):
        assert principal.lam[j] == system.star(Fraction(cls.size)), \
            "principal block lambda mismatch (bug)"
    return blocks


def _defect_group(table: CharacterTable, p: int, lam: tuple,
                  defect: int) -> PermGroup:
    """A defect group, from the minimal-defect p-regular class in the
    support of lambda."""
    G = table.group
    best = None
    for j, cls in enumerate(table.classes):
        if lam[j] == 0 or not cls.is_p_regular(p):
            continue
        d_cls = valuation(centralizer_of_element(G, cls.rep).order, p)
        if best is None or d_cls < best[0]:
            best = (d_cls, j)
    assert best is not None, "no p-regular class supports lambda (bug)"
    d_cls, j = best
    D = sylow(centralizer_of_element(G, table.classes[j].rep), p)
    if D.order != p ** defect:
        raise ReductionFailure(
            f"defect-class group order {D.order} disagrees with block "
            f"defect {defect}")
    return D


def block_of_character(blocks: list, char_index: int) -> Block:
    for b in blocks:
        if char_index in b.char_indices:
            return b
    raise AssertionError("character missing from every block (bug)")


def principal_block(blocks: list) -> Block:
    return blocks[0]


# -- induction -------------------------------------------------------------

def induced_lambda(source: Block, G_table: CharacterTable) -> tuple:
    """The class-sum induced central function lambda^G as field codes.

    Each subgroup class lands inside one ambient class; summing the source
    lambda over the classes hitting an ambient class evaluates lambda on
    the intersection of that class with the subgroup.
    """
    G = G_table.group
    H = source.table.group
    assert contains_group(G, H)
    F = source.system.field
    out = [0] * len(G_table.classes)
    for j, cls in enumerate(source.table.classes):
        g_idx = G.class_index(cls.rep)
        out[g_idx] = F.add(out[g_idx], source.lam[j])
    return tuple(out)


def block_induction(source: Block, G_table: CharacterTable,
                    G_blocks: list):
    """b^G if defined (the induced lambda matches a block of G), else
    None."""
    lam_g = induced_lambda(source, G_table)
    for B in G_blocks:
        if B.lam == lam_g:
            return B
    return None


def brauer_correspondent(B: Block, G_blocks: list,
                         N_table: CharacterTable,
                         N_blocks: list) -> Block:
    """The unique block of the local subgroup inducing to B with the same
    defect.

    Intended for N the normalizer of B's defect group D: there D lies in
    the p-core, hence inside every defect group of every block of N, so
    matching the defect forces the defect group to be exactly D.
    """
    matches = []
    for b in N_blocks:
        if b.defect != B.defect:
            continue
        if block_induction(b, B.table, G_blocks) is B:
            matches.append(b)
    if len(matches) != 1:
        raise NoCorrespondent(
            f"expected exactly one correspondent for {B!r} in "
            f"{N_table.group.describe()}, found {len(matches)}")
    return matches[0]


# -- covering and domination ----------------------------------------------

def restriction_values(G_table: CharacterTable, chi,
                       N_table: CharacterTable) -> tuple:
    """Values of chi restricted to the subgroup, per subgroup class."""
    G = G_table.group
    return tuple(chi.values[G.class_index(cls.rep)]
                 for cls in N_table.classes)


def restriction_multiplicity(G_table: CharacterTable, chi,
                             N_table: CharacterTable, theta) -> Fraction:
    """<Res chi, theta> over the subgroup; exact and non-negative."""
    res = restriction_values(G_table, chi, N_table)
    mult = N_table.inner_product(res, theta.values)
    assert mult.denominator == 1 and mult >= 0
    return mult


def covers(B: Block, b: Block, G_table: CharacterTable,
           N_table: CharacterTable) -> bool:
    """Whether the ambient block B covers the normal-subgroup block b."""
    G = G_table.group
    N = N_table.group
    require_normal(G, N)
    for chi in B.chars():
        for theta in b.chars():
            if restriction_multiplicity(G_table, chi, N_table, theta) != 0:
                return True
    return False


def covered_blocks(B: Block, G_table: CharacterTable,
                   N_table: CharacterTable, N_blocks: list) -> list:
    return [b for b in N_blocks if covers(B, b, G_table, N_table)]


def inflate_values(quotient, q_table: CharacterTable, chi_bar,
                   G_table: CharacterTable) -> tuple:
    """Values of the inflation of a quotient character, per G-class."""
    q_group = q_table.group
    out = []
    for cls in G_table.classes:
        image = quotient.project(cls.rep)
        out.append(chi_bar.values[q_group.class_index(image)])
    return tuple(out)


def find_character_by_values(table: CharacterTable, values: tuple):
    for chi in table.chars:
        if chi.values == tuple(values):
            return chi
    return None


def dominated_blocks(quotient, q_table: CharacterTable, q_blocks: list,
                     G_table: CharacterTable, G_blocks: list) -> dict:
    """Map each quotient block to the unique block of G dominating it."""
    out = {}
    for beta in q_blocks:
        owners = set()
        for chi_bar in beta.chars():
            values = inflate_values(quotient, q_table, chi_bar, G_table)
            chi = find_character_by_values(G_table, values)
            assert chi is not None, "inflated character missing (bug)"
            owners.add(block_of_character(G_blocks, chi.index).index)
        assert len(owners) == 1, "block domination not unique (bug)"
        out[beta.index] = G_blocks[owners.pop()]
    return out

"""Modular representations over the splitting field: MeatAxe splitting,
Brauer characters, decomposition matrices, projective characters.

Modules are matrix representations acting on row vectors (v -> v M), with
one matrix per group generator, matching the left-to-right composition of
the permutation layer.  The irreducibility test is the classical
nullity-equals-degree criterion with the dual-spin certificate, so
"irreducible" answers are proofs, not samples.  All randomness is driven
by a caller-supplied seeded generator.

Simple modules are found by chopping the natural permutation module and
then tensoring with it: the permutation module is faithful, so its
character separates p-regular classes and the tensor closure reaches every
simple; the search stops exactly when the number of distinct simples hits
the number of p-regular classes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .chartab import CharacterTable
from .cyclo import Cyclotomic
from .errors import (LinkageConflict, NonIntegralSolution, ReductionFailure,
                     SplitFailure)
from .gf import (FiniteField, matrix_min_poly, poly_eval_matrix,
                 poly_irreducible_factors)
from .group import PermGroup
from .modsys import PModularSystem

DEFAULT_DIM_CAP = 400
DEFAULT_TENSOR_DEPTH = 8
MEATAXE_TRIES = 40


@dataclass
class Module:
    """A matrix representation of group over field, one matrix per
    generator."""
    group: PermGroup
    fieldobj: FiniteField
    mats: tuple
    dim: int
    _elem_cache: dict = field(default_factory=dict, repr=False)

    def element_matrix(self, x) -> np.ndarray:
        x = tuple(x)
        if x in self._elem_cache:
            return self._elem_cache[x]
        word = self.group.element_words()[x]
        out = np.eye(self.dim, dtype=np.int64)
        for i in word:
            out = self.fieldobj.matmul(out, self.mats[i])
        self._elem_cache[x] = out
        return out

    def __repr__(self):
        return f"<module dim {self.dim} over {self.fieldobj!r}>"


def natural_permutation_module(G: PermGroup, F: FiniteField) -> Module:
    mats = []
    for g in G.gens:
        M = np.zeros((G.degree, G.degree), dtype=np.int64)
        for i, j in enumerate(g):
            M[i, j] = 1
        mats.append(M)
    return Module(group=G, fieldobj=F, mats=tuple(mats), dim=G.degree)


def trivial_module(G: PermGroup, F: FiniteField) -> Module:
    one = np.ones((1, 1), dtype=np.int64)
    return Module(group=G, fieldobj=F, mats=tuple(one for _ in G.gens),
                  dim=1)


def tensor_module(a: Module, b: Module) -> Module:
    assert a.group is b.group and a.fieldobj is b.fieldobj
    F = a.fieldobj
    mats = []
    for Ma, Mb in zip(a.mats, b.mats):
        if F.m == 1:
            mats.append(np.kron(Ma, Mb) % F.p)
        else:
            big = F.mul_arr(Ma[:, None, :, None], Mb[None, :, None, :])
            mats.append(big.reshape(a.dim * b.dim, a.dim * b.dim))
    return Module(group=a.group, fieldobj=F, mats=tuple(mats),
                  dim=a.dim * b.dim)


def restrict_module(module: Module, H: PermGroup) -> Module:
    """The same matrices, indexed by the generators of a subgroup."""
    mats = tuple(module.element_matrix(h) for h in H.gens)
    return Module(group=H, fieldobj=module.fieldobj, mats=mats,
                  dim=module.dim)


def inflate_module(module: Module, quotient, G: PermGroup) -> Module:
    """Pull a quotient-group module back to the full group."""
    mats = tuple(module.element_matrix(quotient.project(g)) for g in G.gens)
    return Module(group=G, fieldobj=module.fieldobj, mats=mats,
                  dim=module.dim)


# -- spinning --------------------------------------------------------------

class _Spinner:
    """Incremental row-reduced basis closed under right multiplication."""

    def __init__(self, F: FiniteField, dim: int):
        self.F = F
        self.dim = dim
        self.rows = []
        self.pivots = []

    def reduce(self, v):
        F = self.F
        v = v.copy()
        for row, c in zip(self.rows, self.pivots):
            if v[c]:
                v = F.add_arr(v, F.scal_mul(F.neg(int(v[c])), row))
        return v

    def insert(self, v) -> bool:
        """Reduce v; if independent, add it and return True."""
        F = self.F
        v = self.reduce(v)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = F.scal_mul(F.inv(int(v[c])), v)
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < c:
            pos += 1
        self.rows.insert(pos, v)
        self.pivots.insert(pos, c)
        for i in range(len(self.rows)):
            if i != pos and self.rows[i][c]:
                self.rows[i] = F.add_arr(
                    self.rows[i],
                    F.scal_mul(F.neg(int(self.rows[i][c])), v))
        return True

    def basis(self) -> np.ndarray:
        if not self.rows:
            return np.zeros((0, self.dim), dtype=np.int64)
        return np.array(self.rows)


def spin_rows(F: FiniteField, seeds: np.ndarray, mats) -> np.ndarray:
    """Smallest subspace containing the seeds and closed under right
    multiplication by the matrices; returned as a reduced row basis."""
    sp = _Spinner(F, seeds.shape[1])
    for v in seeds:
        sp.insert(np.asarray(v, dtype=np.int64))
    pending = [r.copy() for r in sp.rows]
    idx = 0
    while idx < len(pending):
        v = pending[idx]
        idx += 1
        for M in mats:
            w = F.matmul(v.reshape(1, -1), M).ravel()
            reduced = sp.reduce(w)
            if sp.insert(w):
                pending.append(reduced)
    return sp.basis()


# -- submodule / quotient actions -----------------------------------------

def submodule_action(module: Module, basis: np.ndarray) -> Module:
    F = module.fieldobj
    piv = _pivots_of_rref(basis)
    mats = []
    for M in module.mats:
        W = F.matmul(basis, M)
        mats.append(W[:, piv])
    return Module(group=module.group, fieldobj=F, mats=tuple(mats),
                  dim=basis.shape[0])


def quotient_action(module: Module, basis: np.ndarray) -> Module:
    F = module.fieldobj
    dim = module.dim
    piv = _pivots_of_rref(basis)
    free = [c for c in range(dim) if c not in set(piv)]
    mats = []
    for M in module.mats:
        rows = []
        for c in free:
            v = M[c].copy()
            v = _reduce_by_rref(F, v, basis, piv)
            rows.append(v[free])
        mats.append(np.array(rows, dtype=np.int64))
    return Module(group=module.group, fieldobj=F, mats=tuple(mats),
                  dim=len(free))


def _pivots_of_rref(basis: np.ndarray) -> list:
    piv = []
    for row in basis:
        nz = np.nonzero(row)[0]
        assert nz.size
        piv.append(int(nz[0]))
    return piv


def _reduce_by_rref(F: FiniteField, v, basis, piv):
    v = v.copy()
    for row, c in zip(basis, piv):
        if v[c]:
            v = F.add_arr(v, F.scal_mul(F.neg(int(v[c])), row))
    return v


# -- the MeatAxe -----------------------------------------------------------

def _random_algebra_element(module: Module, rng) -> np.ndarray:
    F = module.fieldobj
    n = module.dim
    z = np.zeros((n, n), dtype=np.int64)
    mats = module.mats
    for M in mats:
        c = rng.randrange(F.q)
        if c:
            z = F.add_arr(z, F.scal_mul(c, M))
    for _ in range(rng.randrange(1, 3)):
        i = rng.randrange(len(mats))
        j = rng.randrange(len(mats))
        c = rng.randrange(1, F.q)
        z = F.add_arr(z, F.scal_mul(c, F.matmul(mats[i], mats[j])))
    return z


def find_submodule(module: Module, rng):
    """A proper nonzero invariant subspace (reduced row basis), or None if
    the module is certified irreducible."""
    F = module.fieldobj
    n = module.dim
    if n <= 1 or not module.mats:
        if n > 1:
            # no generators: every line is invariant
            e = np.zeros((1, n), dtype=np.int64)
            e[0, 0] = 1
            return e
        return None
    for _ in range(MEATAXE_TRIES):
        z = _random_algebra_element(module, rng)
        minp = matrix_min_poly(F, z.T)
        factors = poly_irreducible_factors(F, minp, rng)
        for f in factors:
            fz = poly_eval_matrix(F, list(f), z)
            null = F.nullspace(fz.T)    # rows v with v @ fz = 0
            nullity = null.shape[0]
            assert nullity > 0
            W = spin_rows(F, null[:1], module.mats)
            if W.shape[0] < n:
                return W
            if nullity == len(f) - 1:
                # Norton's dual certificate
                t_mats = [M.T for M in module.mats]
                null_t = F.nullspace(fz)    # rows v with v @ fz.T = 0
                Wt = spin_rows(F, null_t[:1], t_mats)
                if Wt.shape[0] < n:
                    perp = F.nullspace(Wt)
                    assert 0 < perp.shape[0] < n
                    return F.rref(perp)[0]
                return None
    raise SplitFailure(
        f"meataxe failed to decide a dim-{n} module over {F!r}")


def chop(module: Module, rng) -> list:
    """All composition factors (with multiplicity), deterministic order."""
    out = []
    stack = [module]
    while stack:
        m = stack.pop()
        if m.dim == 0:
            continue
        if m.dim == 1:
            out.append(m)
            continue
        basis = find_submodule(m, rng)
        if basis is None:
            out.append(m)
        else:
            stack.append(submodule_action(m, basis))
            stack.append(quotient_action(m, basis))
    return out


# -- Brauer characters -----------------------------------------------------

@dataclass(frozen=True)
class BrauerCharacter:
    """An irreducible Brauer character: exact values on p-regular
    classes."""
    index: int
    dim: int
    values: tuple       # Cyclotomic per p-regular class (canonical order)

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values)


def brauer_character_values(module: Module, reps,
                            system: PModularSystem) -> tuple:
    """Lift eigenvalue multiplicities at each representative to
    characteristic zero."""
    F = system.field
    out = []
    for g in reps:
        M = module.element_matrix(g)
        n = module.dim
        total = 0
        value = Cyclotomic.zero()
        npr = system.n_prime
        for j in range(npr):
            code = F.pow_(system.zeta_image, j) if npr > 1 else 1
            shifted = M.copy()
            d = np.arange(n)
            shifted[d, d] = F.add_arr(shifted[d, d],
                                      np.full(n, F.neg(code),
                                              dtype=np.int64))
            mult = n - F.rank(shifted)
            if mult:
                total += mult
                value = value + mult * Cyclotomic.zeta(npr, j)
        assert total == n, "matrix not diagonalizable at p-regular rep (bug)"
        out.append(value)
    return tuple(out)


def all_simples(G: PermGroup, p: int, system: PModularSystem, rng=None,
                dim_cap: int = DEFAULT_DIM_CAP,
                depth: int = DEFAULT_TENSOR_DEPTH) -> list:
    """Every simple module over the splitting field, as (module, Brauer
    values) pairs sorted by (dim, values)."""
    if rng is None:
        rng = random.Random(0)
    F = system.field
    classes = G.conjugacy_classes()
    reg_reps = [c.rep for c in classes if c.is_p_regular(p)]
    target = len(reg_reps)
    natural = natural_permutation_module(G, F)
    seen = {}
    frontier = []
    for piece in chop(natural, rng):
        bc = brauer_character_values(piece, reg_reps, system)
        if bc not in seen:
            seen[bc] = piece
            frontier.append(piece)
    rounds = 0
    while len(seen) < target and rounds < depth:
        rounds += 1
        new_frontier = []
        for piece in frontier:
            if piece.dim * natural.dim > dim_cap:
                continue
            for factor in chop(tensor_module(piece, natural), rng):
                bc = brauer_character_values(factor, reg_reps, system)
                if bc not in seen:
                    seen[bc] = factor
                    new_frontier.append(factor)
        frontier = new_frontier
        if not frontier:
            break
    if len(seen) != target:
        raise ReductionFailure(
            f"found {len(seen)} simples, expected {target} "
            f"(p-regular class count)")
    items = sorted(seen.items(),
                   key=lambda kv: (any(v != 1 for v in kv[0]),
                                   kv[1].dim,
                                   tuple(v.sort_key() for v in kv[0])))
    return [(mod, vals) for vals, mod in items]


# -- decomposition theory --------------------------------------------------

def _cyclo_solve(matrix, rhs):
    """Solve x @ matrix = rhs exactly over the cyclotomics; matrix must be
    square with independent rows."""
    n = len(matrix)
    # row j of the augmented system is the equation for column j
    A = [[matrix[i][j] for i in range(n)] + [rhs[j]]
         for j in range(len(rhs))]
    rows = len(A)
    pivots = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, rows):
            if not A[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = A[r][c].inverse()
        A[r] = [inv * v for v in A[r]]
        for i in range(rows):
            if i != r and not A[i][c].is_zero():
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    if len(pivots) != n:
        raise NonIntegralSolution("value matrix is singular")
    for i in range(r, rows):
        if not A[i][n].is_zero():
            raise NonIntegralSolution("inconsistent decomposition system")
    out = [Cyclotomic.zero()] * n
    for i, c in enumerate(pivots):
        out[c] = A[i][n]
    return out


def decompose_in_basis(ibr_values: list, target: tuple) -> tuple:
    """Coordinates of a Brauer class function in the IBr basis; must come
    out as non-negative integers."""
    coords = _cyclo_solve(ibr_values, target)
    out = []
    for c in coords:
        if not c.is_rational():
            raise NonIntegralSolution(f"irrational multiplicity {c}")
        q = c.rational_value()
        if q.denominator != 1 or q < 0:
            raise NonIntegralSolution(f"bad multiplicity {q}")
        out.append(int(q))
    return tuple(out)


def decomposition_matrix(table: CharacterTable, p: int,
                         ibr: list) -> list:
    """Rows indexed by Irr(G), columns by IBr(G): restriction of each
    ordinary character to p-regular classes, written in the IBr basis."""
    basis = [phi.values for phi in ibr]
    rows = []
    for chi in table.chars:
        target = table.restrict_to_p_regular(chi, p)
        rows.append(decompose_in_basis(basis, target))
    # column sanity: each simple occurs in some ordinary character
    for j in range(len(ibr)):
        assert any(row[j] for row in rows), "unused simple (bug)"
    return rows


def projective_indecomposable(table: CharacterTable, dec: list,
                              phi_index: int) -> tuple:
    """The ordinary character of the projective cover of a simple, as
    values on all classes."""
    k = len(table.classes)
    out = [Cyclotomic.zero()] * k
    for chi, row in zip(table.chars, dec):
        d = row[phi_index]
        if d:
            for j in range(k):
                out[j] = out[j] + d * chi.values[j]
    return tuple(out)


def assign_ibr_to_blocks(blocks: list, dec: list, ibr: list) -> dict:
    """Map each IBr index to its block index through decomposition
    linkage: a simple belongs to the block of every ordinary character it
    appears in, and those must agree."""
    char_block = {}
    for b in blocks:
        for i in b.char_indices:
            char_block[i] = b.index
    out = {}
    for j in range(len(ibr)):
        owners = {char_block[chi_idx]
                  for chi_idx, row in enumerate(dec) if row[j]}
        if len(owners) != 1:
            raise LinkageConflict(
                f"simple {j} linked to blocks {sorted(owners)}")
        out[j] = owners.pop()
    return out


def ibr_count_by_rank(table: CharacterTable, p: int, block) -> int:
    """Rank of the p-regular restrictions of a block's ordinary
    characters: a decomposition-free route to the number of simples."""
    rows = [list(table.restrict_to_p_regular(table.chars[i], p))
            for i in block.char_indices]
    return _cyclo_rank(rows)


def _cyclo_rank(rows: list) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    used = [False] * len(rows)
    for c in range(cols):
        pr = None
        for i in range(len(rows)):
            if not used[i] and not rows[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        used[pr] = True
        rank += 1
        inv = rows[pr][c].inverse()
        piv_row = [inv * v for v in rows[pr]]
        rows[pr] = piv_row
        for i in range(len(rows)):
            if i != pr and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], piv_row)]
    return rank

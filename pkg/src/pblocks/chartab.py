"""Ordinary character tables by eigenvector splitting of the class algebra.

The class-sum structure constants are integer matrices; over a prime field
GF(q) with q = 1 mod exponent(G) and q > 2*sqrt(|G|), their common
eigenvectors are the central characters mod q, and discrete Fourier
inversion over the power maps recovers exact eigenvalue multiplicities,
hence exact cyclotomic character values.  Everything is deterministic: the
working prime is the smallest admissible one and subspaces split in fixed
class order.

The resulting table is verified against both orthogonality relations at
construction time, so downstream block theory can rely on it blindly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .cyclo import Cyclotomic
from .errors import ReductionFailure
from .gf import finite_field, matrix_min_poly
from .group import PermGroup, is_prime, valuation
from .perm import pinv


def class_constants(G: PermGroup) -> list:
    """Structure constants a[i][j][k] of the class sums: the number of ways
    an element of class k factors as (element of class i) * (element of
    class j)."""
    classes = G.conjugacy_classes()
    k = len(classes)
    a = [[[0] * k for _ in range(k)] for _ in range(k)]
    for kk, ck in enumerate(classes):
        z = ck.rep
        for i, ci in enumerate(classes):
            for x in ci.elements:
                j = G.class_index(_left_quotient(x, z))
                a[i][j][kk] += 1
    return a


def _left_quotient(x, z):
    from .perm import pmul
    return pmul(pinv(x), z)


@dataclass(frozen=True)
class CharacterRow:
    """One irreducible ordinary character: exact values per class."""
    index: int
    degree: int
    values: tuple   # Cyclotomic per conjugacy class

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values)


class CharacterTable:
    """Irr(G) with classes in canonical order, trivial character first."""

    def __init__(self, G: PermGroup):
        self.group = G
        self.classes = G.conjugacy_classes()
        self.exponent = G.exponent()
        self.constants = class_constants(G)
        self.chars = self._dixon()
        self._verify_orthogonality()
        self._inverse_class = G.power_map(-1)

    # -- the main computation ---------------------------------------------

    def _working_prime(self) -> int:
        e = self.exponent
        lower = 2 * isqrt(self.group.order) + 1
        q = max(lower, e + 1)
        r = q % e
        if r != 1:
            q += (1 - r) % e
        while not is_prime(q):
            q += e if e > 1 else 1
        assert self.group.order % q != 0
        return q

    def _dixon(self) -> list:
        G = self.group
        k = len(self.classes)
        q = self._working_prime()
        F = finite_field(q)
        # mats[i] acts on central-character vectors w by (M_i w)_j =
        # sum_t a[i][j][t] w_t, with eigenvalue w_i on each such vector
        mats = [np.array(self.constants[i], dtype=np.int64) % q
                for i in range(k)]

        spaces = [F.rref(F.identity_matrix(k))[0]]
        done = []
        for i in range(1, k):
            if not spaces:
                break
            nxt = []
            for V in spaces:
                r = V.shape[0]
                if r == 1:
                    done.append(V)
                    continue
                _, piv = F.rref(V)
                W = F.matmul(V, mats[i].T)
                C = W[:, piv]
                assert F.rank(np.vstack([V, W])) == r, \
                    "subspace not invariant (bug)"
                for lam in _eigenvalues(F, C):
                    shifted = (C.T - lam * F.identity_matrix(r)) % q
                    null = F.nullspace(shifted)
                    sub = F.rref(F.matmul(null, V))[0]
                    nxt.append(sub)
            spaces = nxt
        done.extend(spaces)
        assert len(done) == k and all(V.shape[0] == 1 for V in done), \
            "class algebra failed to split into lines (bug)"

        omegas = []
        for V in done:
            w = V[0]
            w0 = int(w[0])
            assert w0 != 0
            omegas.append(F.scal_mul(F.inv(w0), w))

        inv_class = G.power_map(-1)
        sizes = [c.size for c in self.classes]
        e = self.exponent
        z = F.pow_(F.generator, (q - 1) // e)
        z_inv_pows = [F.pow_(z, (-s) % e) for s in range(e)]
        e_inv = F.inv(e % q)
        power_classes = [G.power_map(s) for s in range(e)]
        order = G.order

        rows = []
        for w in omegas:
            s_val = 0
            for j in range(k):
                term = F.mul(int(w[j]), int(w[inv_class[j]]))
                s_val = F.add(s_val, F.mul(term, F.inv(sizes[j] % q)))
            target = F.mul(order % q, F.inv(s_val))
            degree = None
            for d in range(1, isqrt(order) + 1):
                if d * d % q == target:
                    assert degree is None, "ambiguous degree (bug)"
                    degree = d
            assert degree is not None, "no degree matches (bug)"
            c_mod = [F.mul(degree % q,
                           F.mul(int(w[j]), F.inv(sizes[j] % q)))
                     for j in range(k)]
            values = []
            for j in range(k):
                mults = []
                for t in range(e):
                    acc = 0
                    for s in range(e):
                        acc = F.add(acc, F.mul(c_mod[power_classes[s][j]],
                                               z_inv_pows[(s * t) % e]))
                    mults.append(F.mul(e_inv, acc))
                assert sum(mults) % q == degree % q
                total = sum(mults)
                if total != degree:
                    raise ReductionFailure(
                        "eigenvalue multiplicities exceed the working prime")
                values.append(Cyclotomic(
                    e, {t: Fraction(m) for t, m in enumerate(mults) if m}))
            assert values[0] == degree
            rows.append((degree, values))

        assert sum(d * d for d, _ in rows) == order
        rows.sort(key=lambda dv: (dv[0] != 1 or any(v != 1 for v in dv[1]),
                                  dv[0],
                                  tuple(v.sort_key() for v in dv[1])))
        assert rows[0][0] == 1 and all(v == 1 for v in rows[0][1]), \
            "trivial character missing (bug)"
        return [CharacterRow(index=i, degree=d, values=tuple(vals))
                for i, (d, vals) in enumerate(rows)]

    # -- consistency -------------------------------------------------------

    def _verify_orthogonality(self):
        k = len(self.classes)
        order = self.group.order
        inv_class = self.group.power_map(-1)
        for a, chi in enumerate(self.chars):
            for b in range(a, k):
                psi = self.chars[b]
                total = Cyclotomic.zero()
                for j, cls in enumerate(self.classes):
                    total = total + (cls.size * chi.values[j]
                                     * psi.values[inv_class[j]])
                expected = order if a == b else 0
                assert total == expected, "row orthogonality failure (bug)"
        for i in range(k):
            for j in range(i, k):
                total = Cyclotomic.zero()
                for chi in self.chars:
                    total = total + chi.values[i] * chi.values[inv_class[j]]
                expected = order // self.classes[i].size if i == j else 0
                assert total == expected, \
                    "column orthogonality failure (bug)"

    # -- queries -----------------------------------------------------------

    def value(self, chi: CharacterRow, g) -> Cyclotomic:
        return chi.values[self.group.class_index(g)]

    def inner_product(self, values_a, values_b) -> Fraction:
        """<a, b> for two class functions given as value tuples."""
        total = Cyclotomic.zero()
        for j, cls in enumerate(self.classes):
            total = total + (cls.size * values_a[j]
                             * values_b[j].conjugate())
        q = total.rational_value() / self.group.order
        return q

    def central_character(self, chi: CharacterRow) -> tuple:
        """omega_chi on every class sum, as exact cyclotomic integers."""
        out = []
        for j, cls in enumerate(self.classes):
            om = (cls.size * chi.values[j]) / chi.degree
            assert om.is_algebraic_integer(), \
                "central character not integral (bug)"
            out.append(om)
        return tuple(out)

    def char_defect(self, chi: CharacterRow, p: int) -> int:
        return valuation(self.group.order, p) - valuation(chi.degree, p)

    def is_defect_zero(self, chi: CharacterRow, p: int) -> bool:
        return self.char_defect(chi, p) == 0

    def p_regular_class_indices(self, p: int) -> list:
        return [j for j, cls in enumerate(self.classes)
                if cls.is_p_regular(p)]

    def restrict_to_p_regular(self, chi: CharacterRow, p: int) -> tuple:
        return tuple(chi.values[j]
                     for j in self.p_regular_class_indices(p))

    def __repr__(self):
        return (f"<character table: {self.group.describe()}, "
                f"{len(self.chars)} irreducibles>")


def _eigenvalues(F, C):
    """All eigenvalues of C over the prime field, ascending."""
    poly = matrix_min_poly(F, C)
    roots = []
    for lam in range(F.q):
        acc = 0
        for c in reversed(poly):
            acc = F.add(F.mul(acc, lam), int(c))
        if acc == 0:
            roots.append(lam)
    return roots


def character_table(G: PermGroup) -> CharacterTable:
    return CharacterTable(G)

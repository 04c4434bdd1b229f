"""Finite fields GF(p^m) with table-driven arithmetic and numpy linear
algebra.

Field elements are integer codes 0..q-1: the base-p digits of a code are the
coefficients of the residue polynomial, low degree first.  The defining
polynomial is the first monic degree-m polynomial (by code order) for which
x generates the multiplicative group; that single test certifies both
irreducibility and primitivity, and scanning in code order makes the field
construction reproducible.

Matrices are numpy int64 arrays of codes.  Extension-field matrix products
go through a q x q multiplication table plus digitwise addition; prime
fields use plain modular arithmetic.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import CapExceeded, ZeroInput
from .group import is_prime, require_prime

FIELD_TABLE_CAP = 4096


def _prime_factors(n: int) -> list:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


class FiniteField:
    """GF(p^m) with exp/log tables and vectorized matrix kernels."""

    def __init__(self, p: int, m: int = 1, cap: int = FIELD_TABLE_CAP):
        require_prime(p)
        if m < 1:
            raise ZeroInput("extension degree must be positive")
        self.p = p
        self.m = m
        self.q = p ** m
        if self.q > cap:
            raise CapExceeded(f"field size {self.q} exceeds table cap {cap}")
        self.zero = 0
        self.one = 1
        if m == 1:
            self.modulus_digits = None
            self._build_prime_tables()
        else:
            self.modulus_digits = self._find_primitive_modulus()
        self._digit_table = self._make_digit_table()
        if m > 1:
            self._mul_table = self._make_mul_table()
        self._neg_table = self._make_neg_table()
        self._inv_table = self._make_inv_table()

    # -- construction ------------------------------------------------------

    def _build_prime_tables(self):
        p = self.p
        if p == 2:
            g = 1
        else:
            factors = _prime_factors(p - 1)
            g = None
            for cand in range(2, p):
                if all(pow(cand, (p - 1) // r, p) != 1 for r in factors):
                    g = cand
                    break
            assert g is not None
        self.generator = g
        exp = [1] * (p - 1)
        for i in range(1, p - 1):
            exp[i] = exp[i - 1] * g % p
        self.exp = exp
        self.log = {v: i for i, v in enumerate(exp)}

    def _find_primitive_modulus(self) -> tuple:
        """First monic polynomial whose residue x has full multiplicative
        order; fills the exp/log tables as a side effect."""
        p, m, q = self.p, self.m, self.q
        for code in range(q):
            lower = list(self.digits(code))
            if lower[0] == 0:
                continue    # x divides the polynomial, x not a unit
            # walk powers of x modulo (x^m + lower)
            exp = [1]
            cur = [1] + [0] * (m - 1)
            ok = None
            for step in range(1, q):
                carry = cur[m - 1]
                cur = [0] + cur[:m - 1]
                if carry:
                    for i in range(m):
                        cur[i] = (cur[i] - carry * lower[i]) % p
                codeval = self._digits_int(cur)
                if codeval == 1:
                    ok = step
                    break
                exp.append(codeval)
            if ok == q - 1:
                self.generator = p    # code of x
                self.exp = exp
                self.log = {v: i for i, v in enumerate(exp)}
                return tuple(lower)
        raise AssertionError("no primitive polynomial found (bug)")

    def _make_digit_table(self):
        table = np.zeros((self.q, self.m), dtype=np.int64)
        codes = np.arange(self.q)
        for i in range(self.m):
            table[:, i] = codes % self.p
            codes = codes // self.p
        return table

    def _make_mul_table(self):
        q = self.q
        table = np.zeros((q, q), dtype=np.int64)
        qm1 = q - 1
        logs = np.zeros(q, dtype=np.int64)
        for v, i in self.log.items():
            logs[v] = i
        exp_arr = np.array(self.exp, dtype=np.int64)
        nz = np.arange(1, q)
        la = logs[nz][:, None]
        lb = logs[nz][None, :]
        table[1:, 1:] = exp_arr[(la + lb) % qm1]
        return table

    def _make_neg_table(self):
        digits = self._digit_table
        return self._encode_digits((self.p - digits) % self.p)

    def _make_inv_table(self):
        table = np.zeros(self.q, dtype=np.int64)
        qm1 = self.q - 1
        for v, i in self.log.items():
            table[v] = self.exp[(qm1 - i) % qm1]
        return table

    def _encode_digits(self, digits):
        weights = self.p ** np.arange(self.m, dtype=np.int64)
        return (digits * weights).sum(axis=-1)

    # -- digits helpers ----------------------------------------------------

    def digits(self, code: int) -> tuple:
        out = []
        for _ in range(self.m):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def _digits_int(self, digits) -> int:
        out = 0
        for d in reversed(digits):
            out = out * self.p + d
        return out

    def from_digits(self, digits) -> int:
        return self._digits_int([d % self.p for d in digits])

    # -- scalar arithmetic -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        da, db = self.digits(a), self.digits(b)
        return self._digits_int([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        return int(self._neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInput("inverse of zero field element")
        return int(self._inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow_(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroInput("inverse of zero field element")
            return 0 if k else 1
        qm1 = self.q - 1
        return self.exp[(self.log[a] * k) % qm1]

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ZeroInput("order of zero field element")
        qm1 = self.q - 1
        la = self.log[a]
        from math import gcd
        return qm1 // gcd(la, qm1)

    def embed_int(self, n: int) -> int:
        """The image of an ordinary integer (repeated 1 additions)."""
        return n % self.p

    # -- vectorized --------------------------------------------------------

    def arr(self, data) -> np.ndarray:
        return np.asarray(data, dtype=np.int64)

    def add_arr(self, A, B):
        if self.m == 1:
            return (A + B) % self.p
        da = self._digit_table[A]
        db = self._digit_table[B]
        return self._encode_digits((da + db) % self.p)

    def neg_arr(self, A):
        return self._neg_table[A]

    def sub_arr(self, A, B):
        return self.add_arr(A, self._neg_table[B])

    def mul_arr(self, A, B):
        """Elementwise (broadcasting) product."""
        if self.m == 1:
            return A * B % self.p
        return self._mul_table[A, B]

    def scal_mul(self, c: int, A):
        if self.m == 1:
            return c * A % self.p
        return self._mul_table[c, A]

    def matmul(self, A, B):
        A = self.arr(A)
        B = self.arr(B)
        if self.m == 1:
            return A @ B % self.p
        n, k = A.shape
        k2, r = B.shape
        assert k == k2
        acc = np.zeros((n, r, self.m), dtype=np.int64)
        for t in range(k):
            prod = self._mul_table[A[:, t][:, None], B[t][None, :]]
            acc += self._digit_table[prod]
        return self._encode_digits(acc % self.p)

    def identity_matrix(self, n) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def mat_from_rows(self, rows) -> np.ndarray:
        return self.arr([list(r) for r in rows])

    # -- linear algebra ----------------------------------------------------

    def rref(self, A):
        """Reduced row echelon form; returns (matrix, pivot columns)."""
        R = self.arr(A).copy()
        if R.size == 0:
            return R, []
        rows, cols = R.shape
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(R[r:, c])[0]
            if nz.size == 0:
                continue
            pr = r + int(nz[0])
            if pr != r:
                R[[r, pr]] = R[[pr, r]]
            piv = int(R[r, c])
            if piv != 1:
                R[r] = self.scal_mul(self.inv(piv), R[r])
            col = R[:, c].copy()
            col[r] = 0
            hit = np.nonzero(col)[0]
            if hit.size:
                factors = self._neg_table[col[hit]]
                upd = self.mul_arr(factors[:, None], R[r][None, :])
                R[hit] = self.add_arr(R[hit], upd)
            pivots.append(c)
            r += 1
        return R, pivots

    def rank(self, A) -> int:
        return len(self.rref(A)[1])

    def nullspace(self, A) -> np.ndarray:
        """Basis of the right kernel {v : A v = 0}, as matrix rows."""
        A = self.arr(A)
        if A.size == 0:
            return self.identity_matrix(A.shape[1] if A.ndim == 2 else 0)
        R, pivots = self.rref(A)
        cols = A.shape[1]
        free = [c for c in range(cols) if c not in pivots]
        basis = np.zeros((len(free), cols), dtype=np.int64)
        for i, fc in enumerate(free):
            basis[i, fc] = 1
            for j, pc in enumerate(pivots):
                basis[i, pc] = self._neg_table[R[j, fc]]
        return basis

    def solve(self, A, b):
        """One solution x of A x = b, or None."""
        A = self.arr(A)
        b = self.arr(b).reshape(-1, 1)
        aug = np.concatenate([A, b], axis=1)
        R, pivots = self.rref(aug)
        cols = A.shape[1]
        if cols in pivots:
            return None
        x = np.zeros(cols, dtype=np.int64)
        for j, pc in enumerate(pivots):
            x[pc] = R[j, cols]
        return x

    def inv_matrix(self, A):
        A = self.arr(A)
        n = A.shape[0]
        aug = np.concatenate([A, self.identity_matrix(n)], axis=1)
        R, pivots = self.rref(aug)
        if pivots != list(range(n)):
            raise ZeroInput("matrix is singular")
        return R[:, n:]

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"


@lru_cache(maxsize=None)
def finite_field(p: int, m: int = 1) -> FiniteField:
    return FiniteField(p, m)


# -- polynomial arithmetic over a field (lists, low degree first) ----------

def poly_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_add(F: FiniteField, f, g):
    n = max(len(f), len(g))
    return poly_trim([F.add(f[i] if i < len(f) else 0,
                            g[i] if i < len(g) else 0) for i in range(n)])


def poly_sub(F: FiniteField, f, g):
    n = max(len(f), len(g))
    return poly_trim([F.sub(f[i] if i < len(f) else 0,
                            g[i] if i < len(g) else 0) for i in range(n)])


def poly_mul(F: FiniteField, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return poly_trim(out)


def poly_divmod(F: FiniteField, f, g):
    f = list(f)
    if not g:
        raise ZeroInput("division by zero polynomial")
    dg = len(g) - 1
    inv_lead = F.inv(g[-1])
    quo = [0] * max(0, len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        c = F.mul(f[i], inv_lead)
        if c == 0:
            continue
        quo[i - dg] = c
        for j, b in enumerate(g):
            f[i - dg + j] = F.sub(f[i - dg + j], F.mul(c, b))
    return poly_trim(quo), poly_trim(f[:dg])


def poly_mod(F, f, g):
    return poly_divmod(F, f, g)[1]


def poly_gcd(F: FiniteField, f, g):
    f, g = list(f), list(g)
    while g:
        f, g = g, poly_mod(F, f, g)
    if f:
        inv_lead = F.inv(f[-1])
        f = [F.mul(c, inv_lead) for c in f]
    return f


def poly_pow_mod(F: FiniteField, f, k, mod):
    result = [1]
    base = poly_mod(F, list(f), mod)
    while k:
        if k & 1:
            result = poly_mod(F, poly_mul(F, result, base), mod)
        base = poly_mod(F, poly_mul(F, base, base), mod)
        k >>= 1
    return result


def poly_monic(F: FiniteField, f):
    if not f:
        return f
    inv_lead = F.inv(f[-1])
    return [F.mul(c, inv_lead) for c in f]


def poly_derivative(F: FiniteField, f):
    return poly_trim([F.mul(F.embed_int(i), c)
                      for i, c in enumerate(f)][1:])


def _poly_pth_root(F: FiniteField, f):
    """For f(x) = g(x^p), recover g; coefficientwise p-th root in GF(q)."""
    p = F.p
    root_exp = F.q // p   # a^(q/p) is the p-th root since a^q = a
    out = []
    for i in range(0, len(f), p):
        out.append(F.pow_(f[i], root_exp) if f[i] else 0)
    return out


def poly_squarefree_parts(F: FiniteField, f):
    """Multiset of monic squarefree factors (with multiplicity collapsed).

    Only used to seed irreducible factorization, so multiplicities are not
    tracked; every irreducible factor of f divides some returned part.
    """
    f = poly_monic(F, list(f))
    out = []
    stack = [f]
    while stack:
        g = stack.pop()
        if len(g) <= 1:
            continue
        d = poly_derivative(F, g)
        if not d:
            stack.append(_poly_pth_root(F, g))
            continue
        c = poly_gcd(F, g, d)
        sqfree, _ = poly_divmod(F, g, c)
        if len(sqfree) > 1:
            out.append(sqfree)
        if len(c) > 1:
            stack.append(c)
    return out


def poly_distinct_degree(F: FiniteField, f):
    """Splitting of a squarefree monic f into (degree d, product of its
    degree-d irreducible factors)."""
    out = []
    h = [0, 1]    # x
    g = list(f)
    d = 0
    while len(g) - 1 >= 2 * (d + 1):
        d += 1
        h = poly_pow_mod(F, h, F.q, g)
        part = poly_gcd(F, g, poly_sub(F, h, [0, 1]))
        if len(part) > 1:
            out.append((d, part))
            g, _ = poly_divmod(F, g, part)
            h = poly_mod(F, h, g)
    if len(g) > 1:
        out.append((len(g) - 1, g))
    return out


def _random_poly(F: FiniteField, degree, rng):
    return poly_trim([rng.randrange(F.q) for _ in range(degree)])


def poly_equal_degree_split(F: FiniteField, f, d, rng):
    """Cantor-Zassenhaus split of a product of degree-d irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        r = _random_poly(F, n, rng)
        if len(r) <= 1:
            continue
        g = poly_gcd(F, f, r)
        if 1 < len(g) < len(f):
            pass
        elif F.p == 2:
            # additive trace map splits in characteristic 2
            t = list(r)
            acc = list(r)
            for _ in range(d * F.m - 1):
                acc = poly_pow_mod(F, acc, 2, f)
                t = poly_add(F, t, acc)
            g = poly_gcd(F, f, t)
        else:
            e = (F.q ** d - 1) // 2
            t = poly_pow_mod(F, r, e, f)
            g = poly_gcd(F, f, poly_sub(F, t, [1]))
        if 1 < len(g) < len(f):
            rest, _ = poly_divmod(F, f, g)
            return (poly_equal_degree_split(F, poly_monic(F, g), d, rng)
                    + poly_equal_degree_split(F, poly_monic(F, rest), d, rng))


def poly_irreducible_factors(F: FiniteField, f, rng) -> list:
    """Distinct monic irreducible factors of f, sorted by (degree, coeffs)."""
    found = set()
    for part in poly_squarefree_parts(F, f):
        for d, prod in poly_distinct_degree(F, part):
            for irr in poly_equal_degree_split(F, prod, d, rng):
                found.add(tuple(poly_monic(F, irr)))
    return sorted(found, key=lambda t: (len(t), t))


def matrix_min_poly(F: FiniteField, C) -> list:
    """Minimal polynomial of a square matrix, via Krylov spans from each
    standard basis vector (lcm of the per-vector annihilators)."""
    C = F.arr(C)
    r = C.shape[0]
    poly = [1]
    for start in range(r):
        v = np.zeros(r, dtype=np.int64)
        v[start] = 1
        krylov = [v]
        while True:
            nxt = F.matmul(C, krylov[-1].reshape(-1, 1)).ravel()
            stack = np.array(krylov + [nxt])
            coeffs = F.nullspace(stack.T)
            if coeffs.shape[0]:
                rel = coeffs[0]
                lead_idx = len(krylov)
                lead = int(rel[lead_idx])
                assert lead != 0
                inv_l = F.inv(lead)
                local = [F.mul(int(c), inv_l) for c in rel[:lead_idx + 1]]
                g = poly_gcd(F, poly, local)
                lcm, _ = poly_divmod(F, poly_mul(F, poly, local), g)
                poly = lcm
                break
            krylov.append(nxt)
        if len(poly) - 1 == r:
            break
    return poly


def poly_eval_matrix(F: FiniteField, poly, M) -> np.ndarray:
    """poly(M) by Horner's rule."""
    M = F.arr(M)
    n = M.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    for c in reversed(poly):
        out = F.matmul(out, M)
        if c:
            out[np.arange(n), np.arange(n)] = F.add_arr(
                out[np.arange(n), np.arange(n)],
                np.full(n, c, dtype=np.int64))
    return out

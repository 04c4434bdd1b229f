"""Finite permutation groups with deterministic base-and-strong-generator
chains.

Everything downstream (classes, blocks, weights) needs bit-reproducible
answers, so all search orders here are fixed: generators are stored sorted,
orbits are breadth-first in generator order, and base points are always the
smallest non-fixed point.  Groups are immutable once built and cache their
expensive data (element list, factorization words, conjugacy classes).

Orders are kept under a configurable cap (default 5000); operations that
would enumerate a larger group raise CapExceeded instead of degrading.
"""

from __future__ import annotations

import hashlib
import math
from collections import deque
from dataclasses import dataclass, field

from .errors import (CapExceeded, MalformedPermutation, NotASubgroup,
                     NotNormal, PrimeRequired)
from .perm import (Perm, check_perm, conj, format_cycles, identity, pad, pinv,
                   pmul, ppow)

DEFAULT_ORDER_CAP = 5000


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def require_prime(p: int) -> None:
    if not is_prime(p):
        raise PrimeRequired(f"{p} is not a prime")


def valuation(n: int, p: int) -> int:
    """Largest v with p^v dividing n (n != 0)."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_part(n: int, p: int) -> int:
    return p ** valuation(n, p)


@dataclass(frozen=True)
class ConjClass:
    """A conjugacy class with its canonical (lexicographically smallest)
    representative."""
    index: int
    rep: Perm
    size: int
    order: int
    elements: tuple
    name: str

    def is_p_regular(self, p: int) -> bool:
        return self.order % p != 0


class PermGroup:
    """A permutation group on {0..degree-1} given by generators.

    The public surface treats subgroups as PermGroups on the same point set;
    relation checks (containment, normality) are free functions below.
    """

    def __init__(self, degree, generators=(), cap=None, label=None):
        self.degree = int(degree)
        if self.degree < 1:
            raise MalformedPermutation("degree must be at least 1")
        self.cap = DEFAULT_ORDER_CAP if cap is None else cap
        self.label = label
        seen = set()
        gens = []
        ident = identity(self.degree)
        for g in generators:
            g = pad(check_perm(g), self.degree)
            if len(g) != self.degree:
                raise MalformedPermutation(
                    f"generator degree {len(g)} exceeds group degree "
                    f"{self.degree}")
            if g != ident and g not in seen:
                seen.add(g)
                gens.append(g)
        self.gens = tuple(sorted(gens))
        self._levels = []          # (base point, {image: transversal perm})
        self._build_chain()
        self.order = 1
        for _, trans in self._levels:
            self.order *= len(trans)
        self._elements = None
        self._words = None
        self._classes = None
        self._class_of = None
        self._content_id = None

    # -- construction ------------------------------------------------------

    def _build_chain(self):
        """Deterministic Schreier-Sims.

        Levels are verified bottom-up: whenever a sifted Schreier generator
        survives, it is inserted at its proper level and verification resumes
        there.  No randomization anywhere.
        """
        levels = self._levels

        def rebuild(i):
            point, _ = levels[i]
            gens = [g for _, lg in _level_gens[i:] for g in lg]
            trans = {point: identity(self.degree)}
            order = [point]
            qi = 0
            while qi < len(order):
                a = order[qi]
                qi += 1
                t = trans[a]
                for g in gens:
                    b = g[a]
                    if b not in trans:
                        trans[b] = pmul(t, g)
                        order.append(b)
            levels[i] = (point, trans)
            _level_orbit[i] = order

        def strip(p, start):
            for i in range(start, len(levels)):
                point, trans = levels[i]
                img = p[point]
                if img not in trans:
                    return p, i
                p = pmul(p, pinv(trans[img]))
            return p, len(levels)

        def insert(p, lvl):
            if lvl == len(levels):
                point = min(i for i in range(self.degree) if p[i] != i)
                levels.append((point, {}))
                _level_gens.append((point, []))
                _level_orbit.append([])
            _level_gens[lvl][1].append(p)

        _level_gens = []   # (point, [gens first moving this level])
        _level_orbit = []  # orbit points in BFS discovery order
        ident = identity(self.degree)
        for g in self.gens:
            residue, lvl = strip(g, 0)
            if residue != ident:
                insert(residue, lvl)
                rebuild(lvl)

        i = len(levels) - 1
        while i >= 0:
            rebuild(i)
            _, trans = levels[i]
            gens_here = [g for _, lg in _level_gens[i:] for g in lg]
            dirty = False
            for a in _level_orbit[i]:
                t = trans[a]
                for g in gens_here:
                    b = g[a]
                    schreier = pmul(pmul(t, g), pinv(trans[b]))
                    if schreier == ident:
                        continue
                    residue, lvl = strip(schreier, i + 1)
                    if residue != ident:
                        insert(residue, lvl)
                        i = lvl
                        dirty = True
                        break
                if dirty:
                    break
            if not dirty:
                i -= 1

    # -- basic queries -----------------------------------------------------

    @property
    def base(self):
        return tuple(point for point, _ in self._levels)

    def __contains__(self, p) -> bool:
        p = pad(tuple(p), self.degree)
        if len(p) != self.degree:
            return False
        for point, trans in self._levels:
            img = p[point]
            if img not in trans:
                return False
            p = pmul(p, pinv(trans[img]))
        return p == identity(self.degree)

    def __len__(self):
        return self.order

    def __repr__(self):
        name = self.label or "group"
        return (f"<{name}: order {self.order}, degree {self.degree}, "
                f"{len(self.gens)} generators>")

    def identity_element(self) -> Perm:
        return identity(self.degree)

    def content_id(self) -> str:
        """Stable short hash of the element set (same subgroup, same id)."""
        if self._content_id is None:
            h = hashlib.sha256()
            h.update(str(self.degree).encode())
            for e in self.elements():
                h.update(bytes(x % 256 for x in e))
                h.update(b"|")
            self._content_id = h.hexdigest()[:12]
        return self._content_id

    def describe(self) -> str:
        core = f"order {self.order}, degree {self.degree}"
        return f"{self.label} ({core})" if self.label else core

    # -- enumeration -------------------------------------------------------

    def elements(self) -> tuple:
        if self._elements is None:
            self._enumerate()
        return self._elements

    def element_words(self) -> dict:
        """Map each element to a word (tuple of generator indices)."""
        if self._words is None:
            self._enumerate()
        return self._words

    def _enumerate(self):
        if self.order > self.cap:
            raise CapExceeded(
                f"group order {self.order} exceeds cap {self.cap}")
        ident = identity(self.degree)
        words = {ident: ()}
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            wx = words[x]
            for i, g in enumerate(self.gens):
                y = pmul(x, g)
                if y not in words:
                    words[y] = wx + (i,)
                    queue.append(y)
        assert len(words) == self.order, "BSGS order mismatch (bug)"
        self._elements = tuple(sorted(words))
        self._words = words

    def element_set(self) -> frozenset:
        return frozenset(self.elements())

    def exponent(self) -> int:
        return math.lcm(*(cls.order for cls in self.conjugacy_classes()))

    # -- conjugacy classes -------------------------------------------------

    def conjugacy_classes(self) -> list:
        if self._classes is None:
            self._compute_classes()
        return self._classes

    def class_index(self, x) -> int:
        if self._class_of is None:
            self._compute_classes()
        return self._class_of[tuple(x)]

    def class_of(self, x) -> ConjClass:
        return self.conjugacy_classes()[self.class_index(x)]

    def _compute_classes(self):
        elements = self.elements()
        assigned = {}
        raw = []
        for x in elements:
            if x in assigned:
                continue
            orbit = {x}
            queue = deque([x])
            while queue:
                y = queue.popleft()
                for g in self.gens:
                    z = conj(y, g)
                    if z not in orbit:
                        orbit.add(z)
                        queue.append(z)
            for y in orbit:
                assigned[y] = len(raw)
            raw.append((x, tuple(sorted(orbit))))
        # x was the smallest yet-unassigned element, hence the class minimum
        order_of = {x: _perm_order_cached(x) for x, _ in raw}
        raw.sort(key=lambda item: (order_of[item[0]], len(item[1]), item[0]))
        classes = []
        by_order_counter = {}
        remap = {}
        for new_index, (rep, elems) in enumerate(raw):
            o = order_of[rep]
            letter = _letter(by_order_counter.get(o, 0))
            by_order_counter[o] = by_order_counter.get(o, 0) + 1
            classes.append(ConjClass(index=new_index, rep=rep,
                                     size=len(elems), order=o, elements=elems,
                                     name=f"{o}{letter}"))
            remap[assigned[rep]] = new_index
        self._classes = classes
        self._class_of = {x: remap[i] for x, i in assigned.items()}

    def power_map(self, s: int) -> tuple:
        """Class index map j -> class of rep_j ** s."""
        return tuple(self.class_index(ppow(cls.rep, s))
                     for cls in self.conjugacy_classes())

    # -- derived groups ----------------------------------------------------

    def subgroup(self, generators, label=None) -> "PermGroup":
        return PermGroup(self.degree, generators, cap=self.cap, label=label)

    def trivial_subgroup(self) -> "PermGroup":
        return self.subgroup(())


def _perm_order_cached(x):
    from .perm import perm_order
    return perm_order(x)


def _letter(k: int) -> str:
    out = ""
    while True:
        out = chr(ord("a") + k % 26) + out
        k = k // 26 - 1
        if k < 0:
            return out


# -- relations ------------------------------------------------------------

def contains_group(G: PermGroup, H: PermGroup) -> bool:
    return G.degree == H.degree and all(g in G for g in H.gens)


def require_subgroup(G: PermGroup, H: PermGroup) -> None:
    if not contains_group(G, H):
        raise NotASubgroup(f"{H!r} is not a subgroup of {G!r}")


def is_normal_in(G: PermGroup, N: PermGroup) -> bool:
    if not contains_group(G, N):
        return False
    return all(conj(n, g) in N for n in N.gens for g in G.gens)


def require_normal(G: PermGroup, N: PermGroup) -> None:
    if not is_normal_in(G, N):
        raise NotNormal(f"{N!r} is not normal in {G!r}")


def build_group(generators, degree=None, cap=None, label=None) -> PermGroup:
    """Build a group from image arrays; degree defaults to the longest one."""
    gens = [check_perm(g) for g in generators]
    if degree is None:
        if not gens:
            raise MalformedPermutation("need generators or an explicit degree")
        degree = max(len(g) for g in gens)
    return PermGroup(degree, gens, cap=cap, label=label)


# -- orbit/stabilizer machinery -------------------------------------------

def orbit_transversal(G: PermGroup, x0, act):
    """Orbit of x0 under the given action plus transversal elements.

    Returns (orbit dict x -> g with act-path x0 -> x, stabilizer generators
    via Schreier's lemma).  Deterministic BFS in generator order.
    """
    ident = identity(G.degree)
    trans = {x0: ident}
    order = [x0]
    qi = 0
    stab = set()
    while qi < len(order):
        x = order[qi]
        qi += 1
        t = trans[x]
        for g in G.gens:
            y = act(x, g)
            if y not in trans:
                trans[y] = pmul(t, g)
                order.append(y)
            else:
                s = pmul(pmul(t, g), pinv(trans[y]))
                if s != ident:
                    stab.add(s)
    return trans, sorted(stab)


def centralizer(G: PermGroup, H: PermGroup) -> PermGroup:
    """C_G(H), via iterated element stabilizers.

    H need not be contained in G (think C_K(D) for a p-subgroup D acting on
    a normal p'-subgroup K); only the degrees must match.
    """
    if G.degree != H.degree:
        raise NotASubgroup("degree mismatch between the two groups")
    C = G
    for h in H.gens:
        _, stab_gens = orbit_transversal(C, h, conj)
        C = G.subgroup(stab_gens)
    return C


def centralizer_of_element(G: PermGroup, x) -> PermGroup:
    _, stab_gens = orbit_transversal(G, tuple(x), conj)
    return G.subgroup(stab_gens)


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    """N_G(H), as the stabilizer of H's element set under conjugation.

    H need not be contained in G (think N_K(Q) for K normal and Q a
    p-subgroup of the ambient group); only the degrees must match.
    """
    if G.degree != H.degree:
        raise NotASubgroup("degree mismatch between the two groups")
    target = H.element_set()

    def act(S, g):
        return frozenset(conj(x, g) for x in S)

    _, stab_gens = orbit_transversal(G, target, act)
    extra = [h for h in H.gens if h in G]
    N = G.subgroup(stab_gens + extra)
    if contains_group(G, H):
        assert all(h in N for h in H.gens)
    return N


def conjugating_element(G: PermGroup, A: PermGroup, B: PermGroup):
    """Some g in G with A^g = B, or None."""
    if A.order != B.order:
        return None
    source = A.element_set()
    target = B.element_set()

    def act(S, g):
        return frozenset(conj(x, g) for x in S)

    trans, _ = orbit_transversal(G, source, act)
    return trans.get(target)


def conjugate_subgroup(G: PermGroup, H: PermGroup, g) -> PermGroup:
    return G.subgroup([conj(h, g) for h in H.gens] or ())


def is_conjugate_into(G: PermGroup, A: PermGroup, D: PermGroup) -> bool:
    """Whether some G-conjugate of A is contained in D."""
    a_elems = A.elements()
    d_set = D.element_set()
    if len(a_elems) > len(d_set):
        return False
    for g in G.elements():
        if all(conj(x, g) in d_set for x in a_elems):
            return True
    return False


def subgroup_intersection(A: PermGroup, B: PermGroup) -> PermGroup:
    small, big = (A, B) if A.order <= B.order else (B, A)
    return A.subgroup([x for x in small.elements() if x in big])


def join_subgroups(A: PermGroup, B: PermGroup) -> PermGroup:
    return A.subgroup(list(A.gens) + list(B.gens))


# -- p-structure ----------------------------------------------------------

def sylow(G: PermGroup, p: int) -> PermGroup:
    """A Sylow p-subgroup, grown deterministically through normalizers."""
    require_prime(p)
    target = p_part(G.order, p)
    P = G.trivial_subgroup()
    while P.order < target:
        N = normalizer(G, P)
        p_set = P.element_set()
        grown = False
        for x in N.elements():
            if x in p_set:
                continue
            o = _perm_order_cached(x)
            if o != 1 and o == p_part(o, p):
                # x normalizes P and is a p-element, so <P, x> is a p-group
                P = G.subgroup(list(P.gens) + [x])
                grown = True
                break
        assert grown, "Sylow growth stalled (bug)"
    assert P.order == target
    return P


def p_core(G: PermGroup, p: int) -> PermGroup:
    """O_p(G): the intersection of a Sylow p-subgroup with its conjugates."""
    require_prime(p)
    S = sylow(G, p)
    s_elems = S.elements()
    core = set(s_elems)
    for g in G.elements():
        if not core:
            break
        core &= {conj(x, g) for x in s_elems}
    O = G.subgroup(sorted(core))
    assert is_normal_in(G, O)
    return O


def p_part_decomposition(g, p: int):
    """g = g_p * g_{p'} with commuting factors of p-power and p'-order."""
    require_prime(p)
    g = tuple(g)
    o = _perm_order_cached(g)
    a = valuation(o, p)
    pa = p ** a
    m = o // pa
    if m == 1:
        return g, identity(len(g))
    if a == 0:
        return identity(len(g)), g
    g_p = ppow(g, m * pow(m, -1, pa))
    g_pp = ppow(g, pa * pow(pa, -1, m))
    assert pmul(g_p, g_pp) == g and pmul(g_pp, g_p) == g
    return g_p, g_pp


# -- quotients -------------------------------------------------------------

class Quotient:
    """G/N as a permutation group on the right cosets of N.

    ``project`` is the natural epimorphism; ``preimage`` picks the canonical
    (lexicographically smallest) coset representative, which is what
    character inflation uses.
    """

    def __init__(self, G: PermGroup, N: PermGroup):
        require_normal(G, N)
        self.parent = G
        self.kernel = N
        n_elems = N.elements()
        coset_of = {}
        reps = []
        queue = deque()

        def add_coset(x):
            coset = sorted(pmul(n, x) for n in n_elems)
            rep = coset[0]
            for e in coset:
                coset_of[e] = rep
            reps.append(rep)
            queue.append(rep)

        add_coset(identity(G.degree))
        while queue:
            r = queue.popleft()
            for g in G.gens:
                x = pmul(r, g)
                if x not in coset_of:
                    add_coset(x)
        reps.sort()
        assert reps[0] == identity(G.degree)  # N contains the identity
        self.reps = tuple(reps)
        self._rep_index = {r: i for i, r in enumerate(reps)}
        self._coset_rep = coset_of
        images = [self.project_raw(g) for g in G.gens]
        self.group = PermGroup(len(reps), images, cap=G.cap,
                               label=None if G.label is None
                               else f"{G.label}/N")

    def project_raw(self, x) -> Perm:
        x = tuple(x)
        return tuple(self._rep_index[self._coset_rep[pmul(r, x)]]
                     for r in self.reps)

    def project(self, x) -> Perm:
        return self.project_raw(x)

    def preimage(self, q) -> Perm:
        """Canonical preimage of a quotient element."""
        return self.reps[tuple(q)[0]]


def quotient_group(G: PermGroup, N: PermGroup) -> Quotient:
    return Quotient(G, N)


# -- p-subgroup enumeration ------------------------------------------------

def _set_closure(degree, elems):
    """Subgroup closure of a set of permutations (all inside a known finite
    group, so products suffice)."""
    closure = set(elems)
    closure.add(identity(degree))
    queue = deque(closure)
    while queue:
        x = queue.popleft()
        for y in list(closure):
            for z in (pmul(x, y), pmul(y, x)):
                if z not in closure:
                    closure.add(z)
                    queue.append(z)
    return frozenset(closure)


def subgroups_of_p_group(P: PermGroup) -> list:
    """All subgroups of a (small) p-group, as element frozensets."""
    elements = P.elements()
    trivial = frozenset({identity(P.degree)})
    found = {trivial}
    frontier = [trivial]
    while frontier:
        new = []
        for H in frontier:
            for x in elements:
                if x in H:
                    continue
                K = _set_closure(P.degree, set(H) | {x})
                if K not in found:
                    found.add(K)
                    new.append(K)
        frontier = new
    return sorted(found, key=lambda S: (len(S), tuple(sorted(S))))


@dataclass
class SubgroupClass:
    """A G-conjugacy class of p-subgroups."""
    rep: PermGroup
    order: int
    key: tuple                       # sorted element tuple of the class minimum
    conjugates: tuple = field(repr=False)   # every member, as frozensets

    def canonical_label(self) -> str:
        return f"Q{self.order}.{self.rep.content_id()}"


def p_subgroup_classes(G: PermGroup, p: int) -> list:
    """G-classes of p-subgroups (including the trivial one).

    Enumerates all subgroups of one fixed Sylow p-subgroup, then fuses under
    G-conjugation; every p-subgroup of G is conjugate into the Sylow.
    """
    require_prime(p)
    S = sylow(G, p)
    subs = subgroups_of_p_group(S)
    seen = set()
    classes = []
    for H in subs:
        if H in seen:
            continue
        orbit = {H}
        queue = deque([H])
        while queue:
            x = queue.popleft()
            for g in G.gens:
                y = frozenset(conj(e, g) for e in x)
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        seen |= orbit
        key = min(tuple(sorted(member)) for member in orbit)
        rep = G.subgroup(list(key))
        classes.append(SubgroupClass(rep=rep, order=len(H), key=key,
                                     conjugates=tuple(sorted(
                                         orbit, key=lambda m: tuple(sorted(m))))))
    classes.sort(key=lambda c: (c.order, c.key))
    return classes


def all_p_subgroups(G: PermGroup, p: int) -> list:
    """Every p-subgroup of G (not up to conjugacy), as PermGroups."""
    out = []
    for cls in p_subgroup_classes(G, p):
        for member in cls.conjugates:
            out.append(G.subgroup(sorted(member)))
    return out

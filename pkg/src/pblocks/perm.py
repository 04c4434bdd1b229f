"""Permutation primitives.

A permutation on n points is a tuple of length n whose entry at index i is
the image of point i (0-based internally).  Composition is left-to-right:
``pmul(a, b)`` applies a first, then b.  User-facing cycle notation is
1-based, e.g. "(1,2,3)(4,5)".
"""

from __future__ import annotations

import math
import re

from .errors import MalformedPermutation, ParseError

Perm = tuple


def identity(n: int) -> Perm:
    return tuple(range(n))


def check_perm(p) -> Perm:
    """Validate an image array and return it as a tuple."""
    t = tuple(p)
    if sorted(t) != list(range(len(t))):
        raise MalformedPermutation(f"not a bijection on 0..{len(t) - 1}: {t}")
    return t


def pmul(a: Perm, b: Perm) -> Perm:
    """a then b."""
    return tuple(b[x] for x in a)


def pinv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def ppow(a: Perm, k: int) -> Perm:
    if k < 0:
        return ppow(pinv(a), -k)
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = pmul(result, base)
        base = pmul(base, base)
        k >>= 1
    return result


def conj(x: Perm, g: Perm) -> Perm:
    """x conjugated by g, i.e. g^-1 x g."""
    gi = pinv(g)
    return tuple(g[x[gi[i]]] for i in range(len(x)))


def perm_order(a: Perm) -> int:
    return math.lcm(*(len(c) for c in cycles(a))) if any(
        i != x for i, x in enumerate(a)) else 1


def cycles(a: Perm) -> tuple:
    """Nontrivial cycles, each starting at its smallest point."""
    seen = [False] * len(a)
    out = []
    for i in range(len(a)):
        if seen[i] or a[i] == i:
            continue
        cyc = [i]
        seen[i] = True
        j = a[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = a[j]
        out.append(tuple(cyc))
    return tuple(out)


def format_cycles(a: Perm) -> str:
    """1-based cycle notation, '()' for the identity."""
    cs = cycles(a)
    if not cs:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cs)


_CYCLE_RE = re.compile(r"\(\s*([0-9]+(?:\s*,\s*[0-9]+)*)?\s*\)")


def parse_perm(text: str, degree: int = 0) -> Perm:
    """Parse 1-based cycle notation like "(1,2,3)(4,5)" into a permutation.

    The result acts on max(degree, largest point mentioned) points.
    """
    pos = 0
    cycle_lists = []
    n = degree
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _CYCLE_RE.match(text, pos)
        if m is None:
            raise ParseError(f"expected a cycle in {text!r}", position=pos)
        if m.group(1):
            points = [int(tok) for tok in m.group(1).split(",")]
            if any(x < 1 for x in points):
                raise ParseError("cycle points are 1-based", position=pos)
            if len(set(points)) != len(points):
                raise ParseError(f"repeated point in cycle {m.group(0)!r}",
                                 position=pos)
            n = max(n, max(points))
            cycle_lists.append([x - 1 for x in points])
        pos = m.end()
    images = list(range(n))
    for cyc in cycle_lists:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if images[a] != a:
                raise ParseError(f"point {a + 1} appears in two cycles")
            images[a] = b
    return check_perm(images)


def parse_perm_list(text: str, degree: int = 0) -> list[Perm]:
    """Parse ';'-separated cycle-notation permutations on a common point set."""
    parts = [part.strip() for part in text.split(";")]
    parts = [part for part in parts if part]
    if not parts:
        raise ParseError("no permutations given")
    n = degree
    for part in parts:
        for m in _CYCLE_RE.finditer(part):
            if m.group(1):
                n = max(n, max(int(tok) for tok in m.group(1).split(",")))
    return [parse_perm(part, n) for part in parts]


def pad(a: Perm, degree: int) -> Perm:
    """Extend a permutation to fix the extra points up to degree."""
    if len(a) >= degree:
        return a
    return a + tuple(range(len(a), degree))

"""Group construction from catalog names, inline cycles, and files.

Catalog names: ``sym:n``, ``alt:n``, ``dihedral:m`` (m = group order),
``cyclic:n``, ``quaternion:8``, ``sl:2:3``.  Inline specs are
semicolon-separated 1-based cycle strings like ``(1,2,3)(4,5); (1,2)``.
Group files hold a ``degree d`` header followed by one comma-separated
image line per generator (0-based), and survive a write/read round trip
byte for byte.
"""

import math
import os

from .errors import ParseError
from .group import PermGroup, build_group
from .perm import format_cycles, parse_perm_list

__all__ = ["catalog_group", "inline_group", "read_group_file",
           "write_group_file", "resolve_group", "CATALOG_NAMES"]

CATALOG_NAMES = ("sym", "alt", "dihedral", "cyclic", "quaternion", "sl")


def _sym(n, cap):
    if n < 1:
        raise ParseError("sym:n needs n >= 1")
    if n == 1:
        return build_group([], degree=1, cap=cap, label="sym:1")
    gens = [tuple(range(1, n)) + (0,)]
    if n > 2:
        gens.append((1, 0) + tuple(range(2, n)))
    return build_group(gens, cap=cap, label=f"sym:{n}")


def _alt(n, cap):
    if n < 3:
        raise ParseError("alt:n needs n >= 3")
    three = (1, 2, 0) + tuple(range(3, n))
    if n == 3:
        gens = [three]
    elif n % 2:
        gens = [three, tuple(range(1, n)) + (0,)]
    else:
        gens = [three, (0,) + tuple(range(2, n)) + (1,)]
    G = build_group(gens, cap=cap, label=f"alt:{n}")
    assert G.order == math.factorial(n) // 2
    return G


def _dihedral(m, cap):
    if m < 4 or m % 2:
        raise ParseError("dihedral:m needs an even order m >= 4")
    if m == 4:
        return build_group([(1, 0, 2, 3), (0, 1, 3, 2)], cap=cap,
                           label="dihedral:4")
    n = m // 2
    rot = tuple(range(1, n)) + (0,)
    ref = tuple(n - 1 - i for i in range(n))
    return build_group([rot, ref], cap=cap, label=f"dihedral:{m}")


def _cyclic(n, cap):
    if n < 1:
        raise ParseError("cyclic:n needs n >= 1")
    if n == 1:
        return build_group([], degree=1, cap=cap, label="cyclic:1")
    return build_group([tuple(range(1, n)) + (0,)], cap=cap,
                       label=f"cyclic:{n}")


def _quaternion(n, cap):
    if n != 8:
        raise ParseError("only quaternion:8 is in the catalog")
    gens = parse_perm_list("(1,2,3,4)(5,6,7,8); (1,5,3,7)(2,8,4,6)")
    return build_group(gens, cap=cap, label="quaternion:8")


def _sl(args, cap):
    if args != ["2", "3"]:
        raise ParseError("only sl:2:3 is in the catalog")
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]

    def act(m):
        return tuple(vecs.index(((m[0][0] * v[0] + m[0][1] * v[1]) % 3,
                                 (m[1][0] * v[0] + m[1][1] * v[1]) % 3))
                     for v in vecs)

    return build_group([act(((1, 1), (0, 1))), act(((0, 2), (1, 0)))],
                       cap=cap, label="sl:2:3")


def catalog_group(spec: str, cap: int = None) -> PermGroup:
    parts = spec.strip().lower().split(":")
    name, args = parts[0], parts[1:]
    if name == "sl":
        return _sl(args, cap)
    if len(args) != 1 or not args[0].isdigit():
        raise ParseError(f"bad catalog spec {spec!r}")
    n = int(args[0])
    table = {"sym": _sym, "alt": _alt, "dihedral": _dihedral,
             "cyclic": _cyclic, "quaternion": _quaternion}
    if name not in table:
        raise ParseError(f"unknown catalog name {name!r}")
    return table[name](n, cap)


def inline_group(text: str, cap: int = None) -> PermGroup:
    gens = parse_perm_list(text)
    label = ";".join(format_cycles(g) for g in gens)
    return build_group(gens, cap=cap, label=label)


def read_group_file(path: str, cap: int = None) -> PermGroup:
    with open(path, "r", encoding="ascii") as fh:
        lines = [ln.strip() for ln in fh.read().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("degree "):
        raise ParseError(f"{path}: first line must be 'degree d'")
    try:
        degree = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ParseError(f"{path}: bad degree line {lines[0]!r}")
    gens = []
    for ln in lines[1:]:
        try:
            images = tuple(int(tok) for tok in ln.split(","))
        except ValueError:
            raise ParseError(f"{path}: bad image line {ln!r}")
        if len(images) != degree:
            raise ParseError(f"{path}: image line has {len(images)} entries, "
                             f"expected {degree}")
        gens.append(images)
    return build_group(gens, degree=degree, cap=cap)


def write_group_file(G: PermGroup, path: str) -> None:
    lines = [f"degree {G.degree}"]
    for g in G.gens:
        lines.append(",".join(str(x) for x in g))
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def resolve_group(text: str, cap: int = None) -> PermGroup:
    """Dispatch on the spec shape: cycles, catalog name, or file path."""
    stripped = text.strip()
    if "(" in stripped:
        return inline_group(stripped, cap)
    head = stripped.split(":")[0].lower()
    if head in CATALOG_NAMES:
        return catalog_group(stripped, cap)
    if os.path.exists(stripped):
        return read_group_file(stripped, cap)
    raise ParseError(f"cannot interpret group spec {text!r}: not cycles, "
                     f"not a catalog name, not an existing file")

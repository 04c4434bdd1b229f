"""Ordinary character tables from permutation generators.

Builds a few small groups, prints their tables, and spot checks the
orthogonality relations with exact cyclotomic arithmetic.
"""

from pblocks import character_table, resolve_group
from pblocks.perm import format_cycles

for spec in ("sym:3", "alt:4", "quaternion:8"):
    G = resolve_group(spec)
    table = character_table(G)
    print(f"{spec}: order {G.order}, {len(table.classes)} classes")
    header = "  ".join(format_cycles(c.rep) for c in table.classes)
    print(f"    classes: {header}")
    for chi in table.chars:
        print(f"    X{chi.index}: " + "  ".join(str(v) for v in chi.values))

    # first orthogonality: <chi, chi> = 1 and distinct rows orthogonal
    for i, chi in enumerate(table.chars):
        for j, psi in enumerate(table.chars):
            ip = table.inner_product(chi.values, psi.values)
            assert str(ip) == ("1" if i == j else "0")
    print("    orthogonality holds")
    print()

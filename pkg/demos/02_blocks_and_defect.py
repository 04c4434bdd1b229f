"""p-block distribution and defect groups.

Splits the irreducible characters of S4 and SL(2,3) into p-blocks for
each prime dividing the order, reporting defects and defect groups.
The partition comes from linking central characters modulo a maximal
ideal over p; the defect group is computed from class defects.
"""

from pblocks import Workspace, resolve_group

for spec, primes in (("sym:4", (2, 3)), ("sl:2:3", (2, 3))):
    G = resolve_group(spec)
    for p in primes:
        ws = Workspace(G, p)
        bundle = ws.bundle(G)
        print(f"{spec} at p = {p}: {len(bundle.blocks)} blocks")
        for B in bundle.blocks:
            chars = ", ".join(f"X{i}" for i in sorted(B.char_indices))
            tag = " (principal)" if B.is_principal else ""
            print(f"  {B.label()}{tag}: defect {B.defect}, "
                  f"defect group order {B.defect_group.order}, "
                  f"contains {chars}")
        # defect zero blocks are exactly the characters with full p-part
        for B in bundle.blocks:
            if B.defect == 0:
                (i,) = B.char_indices
                chi = bundle.table.chars[i]
                assert bundle.table.is_defect_zero(chi, p)
        print()

"""The counting identities, verified end to end.

Four statements, each reduced to exact integer equalities per block:

  awc      simples in a block = weight orbits assigned to it
  navarro  fixed Brauer characters under a p-power overgroup = local
           defect zero characters over qualifying p-subgroups
  extended the same shape for any normal embedding, via restriction
  chains   alternating sum over p-chain classes vanishes against the
           block's simple count

Every verifier returns a report whose verdict is EQUAL only when all
left counts equal all right counts; the same reports are available
from the command line (pblocks verify ..., pblocks battery).
"""

from pblocks import (Workspace, resolve_group, verify_bawc,
                     verify_chain_counts, verify_extended, verify_navarro)
from pblocks.catalog import inline_group


def show(rep):
    head = rep.group if rep.overgroup is None \
        else f"{rep.group} inside {rep.overgroup}"
    print(f"  {rep.statement} for {head} at p = {rep.prime}: {rep.verdict}")
    for line in rep.per_block:
        print(f"    {line.block_id}: {line.lhs} = {line.rhs}")


print("weight counts")
for spec, p in (("sym:4", 2), ("alt:5", 2), ("sl:2:3", 3)):
    show(verify_bawc(Workspace(resolve_group(spec), p)))

print("fixed point counts over a p-power quotient")
A4 = resolve_group("alt:4")
S4 = resolve_group("sym:4")
ws = Workspace(S4, 2)
show(verify_navarro(ws, A4))
show(verify_extended(ws, A4))

print("restriction counts without any quotient hypothesis")
C3 = inline_group("(1,2,3)")
S3 = inline_group("(1,2,3); (1,2)")
show(verify_extended(Workspace(S3, 3), C3))

print("alternating chain sums")
G = resolve_group("alt:5")
ws = Workspace(G, 2)
B = ws.bundle(G).blocks[0]
rep = verify_chain_counts(ws, B)
show(rep)
print(f"    signed counts {rep.per_block[0].witnesses['signed_counts']}")

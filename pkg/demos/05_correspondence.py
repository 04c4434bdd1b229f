"""Correspondents across a coprime p-power layer.

K is normal in M with M/K a p-group and p prime to |K|.  An
M-invariant defect zero character theta of K walks through blocks:
the unique block of M covering bl(theta), its correspondent in N_M(D)
for a defect group D complementing K, and finally the defect zero
block of C_K(D) underneath, whose single character is the
correspondent theta'.  A restriction multiplicity computation gives
the same character by an independent route.
"""

from pblocks import Workspace, resolve_group
from pblocks.dgn import (build_dgn_context, dgn_brauer,
                         dgn_multiplicity_oracle, glauberman_dgn_ordinary,
                         ordinary_invariant_under)
from pblocks.group import sylow

# SL(2,3) over its quaternion subgroup at p = 3
SL = resolve_group("sl:2:3")
Q8 = sylow(SL, 2)
ws = Workspace(SL, 3)
qb = ws.bundle(Q8)

invariant = [chi for chi in qb.table.chars
             if ordinary_invariant_under(qb.table, chi, SL.gens)]
print(f"SL(2,3) / Q8 at p = 3: "
      f"{len(invariant)} invariant characters of Q8")
for theta in invariant:
    od = glauberman_dgn_ordinary(ws, SL, Q8, theta)
    oracle = dgn_multiplicity_oracle(ws, Q8, od.C, theta)
    print(f"  theta degree {theta.degree} -> |D| = {od.D.order}, "
          f"|C_K(D)| = {od.C.order}, theta' degree {od.theta_prime.degree}")
    # the block walk and the multiplicity count land on the same character
    assert od.theta_prime.values == oracle.values

# Brauer character version through a nontrivial p-core
D8 = resolve_group("dihedral:8")
C4 = D8.subgroup([(1, 2, 3, 0)])
ws2 = Workspace(D8, 2)
phi = ws2.bundle(C4).ibr[0]
ctx = build_dgn_context(ws2, D8, C4, phi)
NKD, res = dgn_brauer(ws2, ctx)
print(f"D8 / C4 at p = 2: core order {ctx.L.order}, lifted defect "
      f"subgroup order {ctx.D.order}, correspondent dim {res.dim} "
      f"on a normalizer section of order {NKD.order}")

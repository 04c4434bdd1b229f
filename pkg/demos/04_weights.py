"""Radical p-subgroups and weights.

A weight is a pair (Q, psi): Q a radical p-subgroup and psi a defect
zero Brauer character of N(Q)/Q, inflated back to N(Q).  Each weight
orbit is assigned to the block obtained by induction from N(Q), and
the blockwise count matches the number of modular simples per block.
"""

from pblocks import Workspace, enumerate_weights, resolve_group
from pblocks.weights import radical_p_subgroup_classes

G = resolve_group("alt:5")
for p in (2, 3, 5):
    ws = Workspace(G, p)
    bundle = ws.bundle(G)
    radicals = radical_p_subgroup_classes(G, p)
    print(f"alt:5 at p = {p}: "
          f"{len(radicals)} radical subgroup classes, orders "
          f"{[cls.order for cls in radicals]}")
    weights = enumerate_weights(ws)
    for w in weights:
        print(f"  weight {w.orbit_id}: |Q| = {w.subgroup.order}, "
              f"psi dim {w.psi.dim}, block B{w.induced_block}")
    for B in bundle.blocks:
        simples = len(bundle.ibr_of_block(B))
        in_block = sum(1 for w in weights if w.induced_block == B.index)
        print(f"  {B.label()}: {simples} simples vs {in_block} weights")
        assert simples == in_block
    print()

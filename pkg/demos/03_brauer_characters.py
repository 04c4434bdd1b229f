"""Irreducible Brauer characters and the decomposition matrix.

Computes IBr(G) for A5 at p = 2 by splitting modular representations,
lifts traces to Brauer characters, and expresses each ordinary
character on p-regular classes in the Brauer basis.  The row sums
recover ordinary degrees from modular dimensions.
"""

from pblocks import Workspace, resolve_group

G = resolve_group("alt:5")
ws = Workspace(G, 2)
bundle = ws.bundle(G)

print(f"alt:5 at p = 2: {len(bundle.ibr)} irreducible Brauer characters")
for phi in bundle.ibr:
    block = bundle.ibr_block[phi.index]
    print(f"  phi{phi.index}: dim {phi.dim}, block B{block}, values "
          + "  ".join(str(v) for v in phi.values))

D = bundle.decomposition
print("decomposition matrix (rows = ordinary, columns = Brauer):")
for i, row in enumerate(D):
    chi = bundle.table.chars[i]
    print(f"  X{i} (degree {chi.degree}): {list(row)}")
    assert chi.degree == sum(d * phi.dim
                             for d, phi in zip(row, bundle.ibr))

# number of Brauer characters equals number of p-regular classes
assert len(bundle.ibr) == len(bundle.p_regular_indices())
print("degrees and counts consistent")

"""
Generalized Gell-Mann generators
================================

Build the traceless Hermitian generator set for a qutrit, check the
algebra, and walk the flat Bloch index that orders every vector and
matrix in this package.
"""

import numpy as np

from quditcorr import gellmann, gellmann_basis, gm_index, gm_unindex

d = 3

# The basis splits into three groups: diagonal, symmetric, antisymmetric.
print(f"generators for d={d}:")
for j in range(1, d * d):
    spec = gm_unindex(d, j)
    kind = {1: "diagonal", 2: "symmetric", 3: "antisymmetric"}[spec.group]
    label = f"k={spec.k}" if spec.group == 1 else f"(k,l)=({spec.k},{spec.l})"
    print(f"  j={j}: {kind:13s} {label}")

# The second diagonal generator weights the first two levels against the
# third: diag(1, 1, -2)/sqrt(3).
print("\nsecond diagonal generator:")
print(np.round(gellmann(d, 1, 2).real, 6))

# Orthogonality: Tr(G_j G_k) = 2 delta_jk over the whole set.
stack = np.stack(gellmann_basis(d))
gram = np.einsum("aij,bji->ab", stack, stack).real
print("\nmax |Tr(Gj Gk) - 2 delta_jk| =", np.abs(gram - 2 * np.eye(d * d - 1)).max())

# The flat index map is a bijection; the symmetric group starts at j = d.
print("first symmetric slot:", gm_index(d, 2, 1, 2), "(expected", d, ")")
print("first antisymmetric slot:", gm_index(d, 3, 1, 2), "(expected", d + d * (d - 1) // 2, ")")

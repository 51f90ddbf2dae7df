# Building lattices from blow-up classes and classifying them exactly.
#
# L_d is spanned by the chain e1-e2, ..., e_{2d-1}-e_{2d} and the class
# h-e1-...-ed inside H_2 of CP^2 blown up at k >= 2d points.

from lattice_obstruction import (
    classify_definiteness,
    ld_generators,
    ld_lattice,
    pairing,
    sublattice_from_classes,
)

for d in range(1, 5):
    gens = ld_generators(d)
    L = sublattice_from_classes(2 * d, gens)
    assert L.gram == ld_lattice(d).gram
    print(f"L_{d}: generators {[g.label() for g in gens]}")
    for row in L.gram:
        print("   ", row)
    print("   ", classify_definiteness(L).describe())

# The d = 2 lattice is degenerate; its kernel vector pairs to zero with everything.
L2 = ld_lattice(2)
kernel = classify_definiteness(L2).kernel
print("kernel of L_2:", kernel, [pairing(L2, kernel, e) for e in ([1, 0, 0, 0], [0, 0, 0, 1])])

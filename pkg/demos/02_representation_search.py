# Searching for pairing-preserving maps into D_m.
#
# A chain of -2 classes always maps to a staircase. L_d for d >= 3 has no
# representation in any D_m, and the support bound m* = 5d - 3 makes that
# a finite check. L_2 is the exception: its A_3 chain has a second,
# non-staircase image, and that one extends.

from lattice_obstruction import (
    DiagonalTarget,
    SearchOptions,
    chain_lattice,
    find_representations,
    ld_lattice,
    orbit_count,
    represents_into_some_diagonal,
)

for r in range(1, 8):
    print(f"A_{r} -> D_{r + 1}: {orbit_count(chain_lattice(r), DiagonalTarget(r + 1))} orbit(s)")

for d in range(1, 6):
    cert = represents_into_some_diagonal(ld_lattice(d))
    print(f"L_{d}: {cert.outcome} at D_{cert.m}, nodes {cert.nodes_visited}, pruned {cert.pruned_by}")

cert = find_representations(ld_lattice(2), DiagonalTarget(3), SearchOptions(canonicalize=False))
print("a representation of L_2 in D_3:")
for row in cert.solutions[0].images:
    print("   ", row)

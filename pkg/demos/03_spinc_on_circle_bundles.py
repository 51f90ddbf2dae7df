# Torsion Spin^c structures on Y_{g,n} and the ones induced by xi_0, xi_1.

from lattice_obstruction import (
    CircleBundle,
    c1_circle,
    contact_spinc,
    euler_class_xi,
    spin_structures_circle,
    spincform_check,
)

for g, n in [(1, 3), (1, 4), (2, 4), (3, 8)]:
    b = CircleBundle(g, n)
    spin = sorted(t.e for t in spin_structures_circle(b))
    print(f"Y_({g},{n}): spin structures t_e for e in {spin}")
    for i in (0, 1):
        t = contact_spinc(b, i)
        line = (f"  xi_{i}: t_{t.e}, c1 = {c1_circle(t).coefficient}F, "
                f"euler = {euler_class_xi(b, i).coefficient}F")
        if n % 2 == 0:
            line += f", t_v + PD[L_v] agrees: {spincform_check(b, i)}"
        print(line)

"""A weight-one Eisenstein family modulo eps^2 and its U_p eigenvalue.

With chi(p) = 1 the weight-one form E_1(1, chi) has two p-stabilizations
that coincide, and the family F* deforms it. Reading off the U_p
eigenvalue of F* from its q-expansion gives 1 + eps * L_p'/L.

Run: python3 demos/04_eisenstein_family.py
"""

from padic_stark import kronecker_character, verify_F_eigen

for d, p in [(-3, 7), (-4, 5)]:
    r = verify_F_eigen(kronecker_character(d), p, n_max=60, prec=10)
    print(f"chi_{d}, p = {p}")
    print("   constant terms cancel:", r.constant_terms_cancel)
    for c in r.t_checks:
        print(f"   {c.operator}: eigen-equation holds to {c.agreement} digits")
    ratio = r.l_ratio
    eps = r.u_realized.derivative
    print("   U_p eps-part vs +L_p'/L:", eps.agreement(ratio))
    print("   U_p eps-part vs -L_p'/L:", eps.agreement(-ratio))

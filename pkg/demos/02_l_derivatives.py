"""The derivative at s = 0 of a p-adic L-function with a trivial zero,
computed three independent ways.

Run: python3 demos/02_l_derivatives.py
"""

from padic_stark import ferrero_greenberg_report, kronecker_character, verify_rank_one

M = 10
for d, p in [(-3, 7), (-4, 5), (-4, 13)]:
    r = ferrero_greenberg_report(kronecker_character(d), p, M).to_record()
    print(f"chi_{d}, p = {p}: L_p(0) digits {r['L_p(0)']['unit_digits']}")
    for route in ("gamma_route", "jacobi_route", "oracle_difference_quotient"):
        v = r[route]
        print(f"   {route:28s} p^{v['valuation']} * {v['unit_digits']}")
    print("   pairwise agreement:", min(r["agreement"].values()))

# For an imaginary quadratic field the derivative is a p-adic logarithm of
# a p-unit, the p-adic analogue of a regulator. Q(sqrt(-23)) has class
# number 3, so the unit comes from a generator of the cube of a prime above 3.
r = verify_rank_one(-23, 3, M).to_record()
print(f"\nQ(sqrt(-23)), p = 3: h = {r['h']}, generator {r['alpha']}")
print("   L-side", r["lhs"]["unit_digits"], " log-side", r["rhs"]["unit_digits"])
print("   agreement", r["agreement_precision"])

"""Morita's Gamma_p, and Gauss sums written as products of Gamma_p values.

Run: python3 demos/01_gamma_and_gauss_sums.py
"""

from padic_stark import GaussSumInstance, gamma_p_rational, gross_koblitz_verify

p, M = 7, 8


def signed(x):
    v = x.lift()
    return v - p**M if v > p**M // 2 else v


# Gamma_p(n + 1) = (-1)^(n+1) * prod of the j < n+1 prime to p, so small
# integers are easy to check by hand.
for n in range(1, 6):
    g = gamma_p_rational(n, 1, p, M)
    print(f"Gamma_{p}({n}) = {signed(g)} mod {p}^{M}")

# Reflection: Gamma_p(x) Gamma_p(1 - x) is a sign.
x = gamma_p_rational(2, 5, p, M) * gamma_p_rational(3, 5, p, M)
print("Gamma_7(2/5) Gamma_7(3/5) =", signed(x))

# A Gauss sum over F_27 attached to a character of order 13. Its pi-adic
# valuation is a digit sum, and its unit part is a product of Gamma_3 values.
rec = gross_koblitz_verify(GaussSumInstance(3, 13, 1, M)).to_record()
print(f"q = 3^{rec['f']}: valuation {rec['gauss_valuation']}, digit sum {rec['digit_sum']}")
print("unit part from the sum:  ", rec["lhs_unit"]["unit_digits"])
print("unit part from Gamma_3:  ", rec["rhs_unit"]["unit_digits"])
print("agree to", rec["agreement_precision"], "digits")

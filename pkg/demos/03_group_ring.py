"""Stickelberger elements and the augmentation filtration of Z[G].

Run: python3 demos/03_group_ring.py
"""

from padic_stark import (
    AbelianFieldDatum,
    FiniteAbelianGroup,
    ideal_power_structure,
    refined_congruence_check_over_Q,
    theta_element,
)
from padic_stark.grouprings import calibrate

# I^n / I^(n+1) is cyclic of order m for cyclic G but grows for (Z/p)^2.
for orders in [(6,), (3, 3), (2, 2)]:
    G = FiniteAbelianGroup.from_orders(orders)
    print(orders, [ideal_power_structure(G, n) for n in range(1, 5)])

# theta for Q(mu_5) with S = {inf, 5} and T = {7}. Coordinates are powers
# of the class of a generator of (Z/5)^*.
d = AbelianFieldDatum(5, (), (5,), (7,))
print("\ntheta:", theta_element(d))

# The refined congruence: theta + h * det lies one step deeper in the
# filtration than theta itself.
for d in [AbelianFieldDatum(4, (), (2,), (3,)), AbelianFieldDatum(12, (), (2, 3), (5,))]:
    r = refined_congruence_check_over_Q(d)
    print(f"N = {d.N}, S = {d.S}: theta in I^{r.n} {r.theta_in_In}, congruence {r.congruence}")

# Two normalizations of local reciprocity. On Q(i) both pass the congruence,
# so the product formula decides.
for name, res in calibrate().items():
    print(name, res)

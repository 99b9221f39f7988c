"""Compactness of the perturbed real slice, and unboundedness without it.

Derives exact bounds for the positive real slice of the perturbed cone,
probes them with seeded samples, and exhibits arbitrarily large points on
the unperturbed cone for contrast.
"""

from fractions import Fraction

from conetower import (
    PerturbationParams,
    cone_unbounded_witness,
    real_slice_bound,
    sample_real_slice,
)

params = PerturbationParams(k=1, N=2, eps=Fraction(1))
R4, R, cert = real_slice_bound(params)

print(f"=== bounds for the perturbed slice, k={params.k}, N={params.N}, eps={params.eps} ===")
for check in cert.checks:
    print(f"  {check.name}: {check.witness}")
print(f"x4 bound R4 = {R4}, recipe coordinate bound R = {R}, "
      f"sharp coordinate bound {cert.values['coordinate_bound']}")
print()

print("=== seeded probe: 2000 sample points of the slice ===")
summary = sample_real_slice(params, count=2000, seed=0)
print(f"accepted {summary['accepted']} points from {summary['draws']} draws")
print(f"largest x4 upper bound seen: {summary['max_x4_upper']} (certified R4 = {summary['R4']})")
print(f"violations: {len(summary['violations'])}")
print()

print("=== the unperturbed cone is unbounded: exact witnesses ===")
for k in (1, 2, 3):
    point = cone_unbounded_witness(k, Fraction(10**6))
    x1, x2, x3, x4 = point
    value = x1**2 + x2**2 + x3**2 - x4**(2 * k)
    print(f"k = {k}: point {tuple(str(c) for c in point)}, cone equation value {value}")

bound_eps_quarter = real_slice_bound(PerturbationParams(k=1, N=3, eps=Fraction(1, 4)))
print()
print(f"for eps = 1/4, N = 3: R4 = {bound_eps_quarter[0]} (smallest half-integer with R4^4 >= 4)")

"""An exact certificate that (5, 6, (1,1,2,3,4,4)) is not totally geodesic.

The exclusion index n gives a rank-4 invariant quadric built from the
pencils <1, x> and <omega_{n,0}, omega_{m-n,0}>.  A rational abscissa x0
where the logarithmic derivative L of psi = omega_{m-n,0} / omega_{n,0}
does not vanish is enough to make the second Gaussian map of the quadric
nonzero over x0.
"""

import json
from fractions import Fraction

from cyclic_covers import build_cover, find_witness, validate, verify_witness
from cyclic_covers.witness import log_derivative_function

d = validate(5, 6, (1, 1, 2, 3, 4, 4))
model = build_cover(d)                       # branch points 0, 1, ..., 5
cert = find_witness(model)
print("exclusion index n =", model.n)
print("psi exponents e  =", cert.psi_exponents)
print("L coefficients c =", [str(c) for c in cert.log_deriv_coeffs])
print(f"x0 = {cert.x0}, L(x0) = {cert.L_value}")
print("verified:", verify_witness(cert))

# the same L as a reduced rational function of x
print("dpsi/psi =", log_derivative_function(model), "dx")

# other branch points work just as well
other = build_cover(d, [Fraction(1, 2), Fraction(-3, 7), 5, 11, Fraction(2, 3), -4])
obj = find_witness(other).to_json_dict()
print(json.dumps({k: obj[k] for k in ("t", "n", "x0", "L_value", "checks")}))

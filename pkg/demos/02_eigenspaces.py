"""Eigenspace dimensions, genus and invariant quadrics.

The cyclic group splits the holomorphic 1-forms into eigenspaces V_n of
dimension d_n = -1 + sum <-n a_i / m>.  The invariant quadrics through the
canonical curve have dimension dim S^2(H^0 K)^G - (N - 3).
"""

from cyclic_covers import family_invariants, local_exponent, validate

for m, N, a in [(5, 4, (1, 3, 3, 3)), (5, 5, (2, 2, 2, 2, 2)),
                (5, 6, (1, 1, 2, 2, 2, 2)), (3, 6, (1,) * 6), (6, 5, (2, 2, 2, 3, 3))]:
    f = family_invariants(validate(m, N, a))
    print(f"{f.datum}: genus {f.genus}, d = {f.profile.d}, "
          f"dim S2^G = {f.inv_sym2_dim}, family dim = {f.family_dim}, "
          f"invariant quadrics = {f.inv_quadric_dim}")

# the exponents l(i, n) of the eigenform basis
# omega_{n,nu} = y^n (x - t_1)^nu prod (x - t_i)^{l(i,n)} dx
d = validate(5, 4, (1, 3, 3, 3))
for n in range(1, 5):
    print(f"n={n}: l(i,n) =", [local_exponent(d, i, n) for i in range(1, 5)])

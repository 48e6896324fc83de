"""Dimension bounds for totally geodesic germs in the Jacobian locus."""

from cyclic_covers import bound_report, gonality_upper, quadric_system_bound, tg_dim_bound

print(" g  k_max  2g+k-4 bound  5(g-1)/2 bound  quadric-system bound")
for g in range(4, 16):
    print(f"{g:2d}  {gonality_upper(g):5d}  {g * 2 + gonality_upper(g) - 4:12d}"
          f"  {tg_dim_bound(g):14d}  {quadric_system_bound(g):20d}")

print(bound_report(6, 4))

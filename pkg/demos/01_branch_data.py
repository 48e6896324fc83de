"""Branch data, equivalence and enumeration.

A family of cyclic covers y^m = prod (x - t_i)^{a_i} is fixed by the
triple (m, N, a).  Multiplying a by a unit mod m or permuting it gives the
same family, so we work with one canonical representative per class.
"""

from cyclic_covers import canonicalize, enumerate_classes, equivalent, validate
from cyclic_covers.errors import InvalidBranchDatum

# a valid datum, and one whose monodromies do not sum to 0 mod m
d = validate(5, 4, (1, 3, 3, 3))
print("valid:", d)
try:
    validate(5, 4, (1, 1, 1, 1))
except InvalidBranchDatum as exc:
    print("rejected:", exc.constraint, "-", exc)

# (1,3,3,3) times the unit 2 is (2,6,6,6) = (2,1,1,1) mod 5, so the
# canonical representative is (1,1,1,2)
print("canonical form of", d, "is", canonicalize(d))
print("(3,6,(2^6)) ~ (3,6,(1^6)):", equivalent(validate(3, 6, (2,) * 6), validate(3, 6, (1,) * 6)))

# the classes for a few small (m, N)
for m, N in [(3, 4), (3, 6), (5, 4), (5, 5), (7, 4)]:
    reps = [c.a for c in enumerate_classes(m, N)]
    print(f"m={m} N={N}: {len(reps)} classes {reps}")

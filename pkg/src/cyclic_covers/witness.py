"""Exact certificates that a family is not totally geodesic.

When ``d_n >= 2`` and ``d_{m-n} >= 2`` with ``n != m - n``, the forms

    omega_{k, nu} = y^k (x - t_1)^nu prod (x - t_i)^{l(i, k)} dx

give a rank-4 invariant quadric

    Q = omega_{n,0} . omega_{m-n,1} - omega_{n,1} . omega_{m-n,0}

built from the pencils ``<1, x>`` (the covering map) and
``<omega_{n,0}, omega_{m-n,0}>``, whose ratio is the meromorphic function

    psi = y^(m-2n) prod (x - t_i)^(e_i),    e_i = l(i, m-n) - l(i, n).

For a rank-4 quadric the second Gaussian map factors as the product of the
Wronskians of the two pencils.  Over an unbranched abscissa ``x0`` the
Wronskian of ``<1, x>`` is nonzero, and that of the second pencil is
``omega_{n,0}^2 * dpsi/psi`` with ``omega_{n,0}`` nonvanishing, so
``mu_2(Q)`` is nonzero at every point over ``x0`` as soon as

    L(x0) = sum c_i / (x0 - t_i),   c_i = ((m - 2n) a_i + m e_i) / m,

is nonzero (``L dx = dpsi/psi``).  The whole fibre over ``x0`` is a single
group orbit, so the chosen point avoids the critical set of the covering
map, the orbit of the critical set of ``psi`` and the base locus at once.
Evaluating the second fundamental form of the family on the invariant
Schiffer vector at such a point gives ``-2 pi i m mu_2(Q)(p)``, which is
therefore nonzero.

Everything in the certificate is a rational number; the fibre point and
the constant ``-2 pi i m`` are not computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Iterator, Optional, Sequence

from .branch import BranchDatum, validate
from .errors import (
    BudgetExhausted,
    DegeneratePencil,
    DomainError,
    DuplicateBranchPoints,
    InvariantViolation,
    NoExclusionIndex,
)
from .exact import Polynomial, RationalFunction, format_rational, parse_rational
from .invariants import eigen_profile, local_exponent
from .classifier import exclusion_criterion

__all__ = [
    "CoverModel",
    "WitnessCertificate",
    "SOUNDNESS_CLAUSE",
    "default_branch_points",
    "build_cover",
    "psi_exponents",
    "log_derivative_coeffs",
    "residue_sum_check",
    "log_derivative_function",
    "find_witness",
    "verify_witness",
    "candidate_abscissae",
]

SOUNDNESS_CLAUSE = (
    "Q = omega_{n,0}.omega_{m-n,1} - omega_{n,1}.omega_{m-n,0} is a G-invariant "
    "rank-4 quadric through the canonical curve. Since x0 is not a branch value, "
    "the Wronskian of <1,x> does not vanish over x0, and L(x0) != 0 shows that "
    "the Wronskian of <omega_{n,0}, omega_{m-n,0}> does not vanish there either "
    "(dpsi/psi = L dx). Hence mu_2(Q)(p) != 0 for every p over x0, and the "
    "second fundamental form of Z(m,N,a) on the invariant Schiffer vector at p "
    "equals -2*pi*i*m*mu_2(Q)(p) != 0: the family is not totally geodesic, "
    "provided its general member is not hyperelliptic (criterion: d_n >= 2, "
    "d_{m-n} >= 2, n != m-n)."
)


@dataclass(frozen=True)
class CoverModel:
    datum: BranchDatum
    t: tuple[Fraction, ...]
    n: int


@dataclass(frozen=True)
class WitnessCertificate:
    model: CoverModel
    psi_exponents: tuple[int, ...]
    log_deriv_coeffs: tuple[Fraction, ...]
    x0: Fraction
    L_value: Fraction
    checks: dict

    def to_json_dict(self) -> dict:
        d = self.model.datum
        return {
            "m": d.m,
            "N": d.N,
            "a": list(d.a),
            "t": [format_rational(x) for x in self.model.t],
            "n": self.model.n,
            "e": list(self.psi_exponents),
            "c": [format_rational(x) for x in self.log_deriv_coeffs],
            "x0": format_rational(self.x0),
            "L_value": format_rational(self.L_value),
            "checks": {k: bool(v) for k, v in sorted(self.checks.items())},
            "soundness": SOUNDNESS_CLAUSE,
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "WitnessCertificate":
        """Rebuild a certificate without re-validating its numbers.

        The branch datum itself must be valid; everything else is taken
        as given so that :func:`verify_witness` can judge it.
        """
        datum = validate(obj["m"], obj["N"], obj["a"])
        model = CoverModel(datum, tuple(parse_rational(x) for x in obj["t"]), int(obj["n"]))
        return cls(
            model=model,
            psi_exponents=tuple(int(e) for e in obj["e"]),
            log_deriv_coeffs=tuple(parse_rational(x) for x in obj["c"]),
            x0=parse_rational(obj["x0"]),
            L_value=parse_rational(obj["L_value"]),
            checks=dict(obj["checks"]),
        )


def default_branch_points(N: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(i) for i in range(N))


def build_cover(d: BranchDatum, t: Optional[Sequence] = None,
                n: Optional[int] = None) -> CoverModel:
    if t is None:
        t = default_branch_points(d.N)
    t = tuple(Fraction(x) for x in t)
    if len(t) != d.N:
        raise DomainError(f"expected {d.N} branch points, got {len(t)}")
    if len(set(t)) != len(t):
        raise DuplicateBranchPoints(f"branch points are not distinct: "
                                    f"{[format_rational(x) for x in t]}")
    p = eigen_profile(d)
    if n is None:
        n = exclusion_criterion(p)
        if n is None:
            raise NoExclusionIndex(
                f"exclusion criterion does not fire for {d}: d = {p.d}")
    elif not (1 <= n <= d.m - 1 and 2 * n != d.m
              and p.dim(n) >= 2 and p.dim(d.m - n) >= 2):
        raise NoExclusionIndex(f"n = {n} does not satisfy the exclusion criterion for {d}")
    return CoverModel(d, t, n)


def psi_exponents(model: CoverModel) -> tuple[int, ...]:
    d, n = model.datum, model.n
    return tuple(local_exponent(d, i, d.m - n) - local_exponent(d, i, n)
                 for i in range(1, d.N + 1))


def log_derivative_coeffs(model: CoverModel) -> tuple[Fraction, ...]:
    d, n = model.datum, model.n
    e = psi_exponents(model)
    c = tuple(Fraction((d.m - 2 * n) * a + d.m * ei, d.m) for a, ei in zip(d.a, e))
    if all(x == 0 for x in c):
        raise DegeneratePencil(f"psi is constant for {d} with n = {n}")
    return c


def residue_sum_check(model: CoverModel) -> int:
    """Sum of the ``c_i``, computed from the coefficients and from degrees.

    ``psi`` has degree ``(m - 2n) sum(a) / m + sum(e)`` in ``x``; the two
    computations must agree and land on an integer.
    """
    d, n = model.datum, model.n
    from_coeffs = sum(log_derivative_coeffs(model), Fraction(0))
    from_degrees = (d.m - 2 * n) * (sum(d.a) // d.m) + sum(psi_exponents(model))
    if from_coeffs != from_degrees:
        raise InvariantViolation(
            f"residue sum {from_coeffs} != degree count {from_degrees} for {d}")
    return from_degrees


def _L(coeffs: Sequence[Fraction], t: Sequence[Fraction], x0: Fraction) -> Fraction:
    return sum((c / (x0 - ti) for c, ti in zip(coeffs, t)), Fraction(0))


def candidate_abscissae() -> Iterator[Fraction]:
    """0, 1, -1, 2, -2, ..."""
    yield Fraction(0)
    for k in count(1):
        yield Fraction(k)
        yield Fraction(-k)


def find_witness(model: CoverModel, budget: Optional[int] = None) -> WitnessCertificate:
    """Search integer abscissae in order of absolute value for ``L(x0) != 0``.

    Every candidate counts against ``budget``, skipped branch points
    included.  At most ``N`` candidates are branch points and at most
    ``N - 1`` are zeros of ``L``, so ``budget >= 2N`` always succeeds.
    The default budget is ``2N + 4``.
    """
    N = model.datum.N
    if budget is None:
        budget = 2 * N + 4
    e = psi_exponents(model)
    c = log_derivative_coeffs(model)
    branch = set(model.t)
    tried = 0
    for x0 in candidate_abscissae():
        if tried >= budget:
            break
        tried += 1
        if x0 in branch:
            continue
        value = _L(c, model.t, x0)
        if value != 0:
            return WitnessCertificate(
                model=model,
                psi_exponents=e,
                log_deriv_coeffs=c,
                x0=x0,
                L_value=value,
                checks={"x0_not_branch": True, "L_nonzero": True},
            )
    raise BudgetExhausted(f"no witness among the first {budget} candidates for {model.datum}")


def log_derivative_function(model: CoverModel, e: Optional[Sequence[int]] = None) -> RationalFunction:
    """``dpsi/psi`` as a rational function of ``x``, by formal differentiation.

    The ``x``-part ``P = prod (x - t_i)^{e_i}`` is expanded and
    differentiated to get ``P'/P``; the ``y``-part contributes
    ``(m - 2n)/m * f'/f`` with ``f = prod (x - t_i)^{a_i}``, since
    ``y^m = f``.
    """
    d, n = model.datum, model.n
    if e is None:
        e = psi_exponents(model)
    P = RationalFunction(1)
    f = Polynomial.constant(1)
    for ti, ei, ai in zip(model.t, e, d.a):
        P = P * RationalFunction.power_of_linear(ti, ei)
        f = f * Polynomial.linear(ti) ** ai
    x_part = P.derivative() / P
    f_rat = RationalFunction(f)
    y_part = RationalFunction(Fraction(d.m - 2 * n, d.m)) * f_rat.derivative() / f_rat
    return x_part + y_part


def verify_witness(cert: WitnessCertificate) -> bool:
    """Independently re-check a certificate; never raises.

    The value of ``L`` at ``x0`` is recomputed three ways: from the stored
    coefficients, from coefficients rederived from the branch datum, and
    by formal differentiation of ``psi``.  All must equal the stored value,
    which must be nonzero, and ``x0`` must not be a branch point.
    """
    try:
        model = cert.model
        d = model.datum
        if len(model.t) != d.N or len(set(model.t)) != d.N:
            return False
        if cert.x0 in set(model.t):
            return False
        if not (1 <= model.n <= d.m - 1) or 2 * model.n == d.m:
            return False
        p = eigen_profile(d)
        if p.dim(model.n) < 2 or p.dim(d.m - model.n) < 2:
            return False
        if tuple(cert.psi_exponents) != psi_exponents(model):
            return False
        if tuple(cert.log_deriv_coeffs) != log_derivative_coeffs(model):
            return False
        stored_route = _L(cert.log_deriv_coeffs, model.t, cert.x0)
        formal_route = log_derivative_function(model, cert.psi_exponents)(cert.x0)
        if not (stored_route == formal_route == cert.L_value):
            return False
        if cert.L_value == 0:
            return False
        return bool(cert.checks.get("x0_not_branch")) and bool(cert.checks.get("L_nonzero"))
    except (ArithmeticError, ValueError):
        return False

"""End-to-end algorithms: Gosper's indefinite summation and rational
solutions of order-d linear difference equations, plus exact verifiers.

Gosper: given the term ratio r(n) = t_{n+1}/t_n in lowest terms a/b, the
stabilized gcd sequence of (b, a) at order 1 supplies a denominator g, the
key polynomial equation

    a(n) g(n) f(n+1) - b(n) g(n+1) f(n) = b(n) g(n) g(n+1)

is handed to the polynomial solver, and z_n = (f(n)/g(n)) t_n is an
antidifference of t_n whenever a polynomial f exists; no f means no
hypergeometric antidifference exists at all.

Rational solving: the closed-form universal denominator G clears the
order-d equation to a purely polynomial one whose solutions f give all
rational solutions y = f/G.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .dispersion import dispersion
from .gcdseq import GcdLimit, gcd_limit, _universal_from_shift
from .polys import Poly, RatFunc, shift
from .recurrences import LinearRecurrence, SolutionSet, poly_solutions


@dataclass(frozen=True)
class GosperSolution:
    """Certificate of summability: ratio * certificate(n+1) - certificate = 1.

    raw_numerator / raw_denominator are the solver's f and the gcd-limit g
    before reduction; they need not be coprime, and certificate is their
    reduced quotient.
    """

    ratio: RatFunc
    certificate: RatFunc
    raw_numerator: Poly
    raw_denominator: Poly
    max_shift: int
    gcd_trace: GcdLimit


@dataclass(frozen=True)
class RationalSolutions:
    """All rational solutions of a recurrence, as numerators over a single
    universal denominator."""

    denominator: Poly
    max_shift: int
    numerators: SolutionSet

    @cached_property
    def particular(self) -> RatFunc | None:
        if self.numerators.particular is None:
            return None
        return RatFunc.reduced(self.numerators.particular, self.denominator)

    @cached_property
    def homogeneous(self) -> tuple[RatFunc, ...]:
        return tuple(
            RatFunc.reduced(h, self.denominator) for h in self.numerators.homogeneous_basis
        )


def gosper(ratio: RatFunc) -> GosperSolution | None:
    """Solve z_{n+1} - z_n = t_n for hypergeometric z given r = t_{n+1}/t_n.

    Returns None when no hypergeometric antidifference exists.  When the
    key equation has free constants, they are set to zero, which picks one
    valid certificate among many.
    """
    if ratio.is_zero:
        raise ValueError("the term ratio of a hypergeometric term is nonzero")
    a, b = ratio.num, ratio.den
    trace = gcd_limit(b, a, 1)
    g = trace.limit
    g_up = shift(g, 1)
    key = LinearRecurrence((-(b * g_up), a * g), b * g * g_up)
    found = poly_solutions(key)
    if found.particular is None:
        return None
    f = found.particular
    return GosperSolution(
        ratio=ratio,
        certificate=RatFunc.reduced(f, g),
        raw_numerator=f,
        raw_denominator=g,
        max_shift=trace.max_shift,
        gcd_trace=trace,
    )


def rational_solve(rec: LinearRecurrence) -> RationalSolutions:
    """All rational solutions of sum_m coeffs[m](n) y(n+m) = rhs(n).

    Computes the universal denominator G from the leading and trailing
    coefficients, clears the equation by the shifts of G, and solves the
    resulting polynomial equation.  An absent particular solution means
    the equation has no rational solution at all.
    """
    if rec.coeffs[0].is_zero:
        raise ValueError("rational solving needs a nonzero trailing coefficient")
    p0, pd, d = rec.coeffs[0], rec.coeffs[-1], rec.order
    n_max = dispersion(shift(pd, -d), p0).value
    denominator = _universal_from_shift(p0, pd, d, n_max)
    den_shifts = [shift(denominator, j) for j in range(d + 1)]
    prefix = [Poly.one()]
    for s in den_shifts:
        prefix.append(prefix[-1] * s)
    suffix = [Poly.one()]
    for s in reversed(den_shifts):
        suffix.append(suffix[-1] * s)
    suffix.reverse()
    cleared = LinearRecurrence(
        tuple(q * prefix[m] * suffix[m + 1] for m, q in enumerate(rec.coeffs)),
        rec.rhs * prefix[-1],
    )
    return RationalSolutions(denominator, n_max, poly_solutions(cleared))


def verify_gosper(solution: GosperSolution) -> bool:
    """Exact check of ratio * certificate(n+1) - certificate(n) = 1."""
    y = solution.certificate
    return solution.ratio * y.shifted(1) - y == RatFunc.one()


def verify_rational(rec: LinearRecurrence, y: RatFunc) -> bool:
    """Exact check that y solves the recurrence, after clearing denominators."""
    return rec.apply_rational(y) == RatFunc.from_poly(rec.rhs)

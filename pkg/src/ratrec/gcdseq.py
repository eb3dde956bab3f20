"""The converging gcd sequence and the explicit universal denominator.

For an order-d difference equation with trailing coefficient p0 and leading
coefficient pd, define

    G_k(n) = gcd( p0(n) p0(n+1) ... p0(n+k-1),
                  pd(n-d) pd(n-d-1) ... pd(n-d-k+1) ).

The sequence G_1, G_2, ... stabilizes at k = N + 1 where N is the
dispersion of pd(n-d) against p0(n); the stable value is a universal
denominator for the rational solutions of the equation.  The same limit
has a closed form as a single gcd of two falling-factorial products, and
`universal_denominator` computes it along that second, independent route.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dispersion import dispersion
from .polys import Poly, falling_product, gcd_monic, shift


@dataclass(frozen=True)
class GcdLimit:
    """Stabilized gcd sequence: its index bound, limit, and full trace.

    max_shift is the dispersion N (-1 when the sequence is identically 1);
    trace holds G_1 .. G_{N+1}, each monic, forming a divisibility chain
    whose last entry equals limit.
    """

    max_shift: int
    limit: Poly
    trace: tuple[Poly, ...]


def gcd_term(p0: Poly, pd: Poly, d: int, k: int) -> Poly:
    """The k-th member G_k of the gcd sequence (k >= 1), monic."""
    if p0.is_zero or pd.is_zero:
        raise ValueError("gcd sequence needs nonzero coefficient polynomials")
    if k < 1:
        raise ValueError("gcd sequence index starts at 1")
    rising = Poly.one()
    falling = Poly.one()
    for j in range(k):
        rising = rising * shift(p0, j)
        falling = falling * shift(pd, -d - j)
    return gcd_monic(rising, falling)


def gcd_limit(p0: Poly, pd: Poly, d: int) -> GcdLimit:
    """Stabilized value of the gcd sequence, with the trace G_1 .. G_{N+1}."""
    if p0.is_zero or pd.is_zero:
        raise ValueError("gcd sequence needs nonzero coefficient polynomials")
    n_max = dispersion(shift(pd, -d), p0).value
    if n_max < 0:
        return GcdLimit(-1, Poly.one(), ())
    trace = []
    rising = Poly.one()
    falling = Poly.one()
    for j in range(n_max + 1):
        rising = rising * shift(p0, j)
        falling = falling * shift(pd, -d - j)
        trace.append(gcd_monic(rising, falling))
    return GcdLimit(n_max, trace[-1], tuple(trace))


def universal_denominator(p0: Poly, pd: Poly, d: int) -> Poly:
    """Universal denominator via the closed-form gcd of falling factorials.

    Equals gcd_limit(p0, pd, d).limit, but computed independently as
    gcd([p0(n+N)] falling (N+1), [pd(n-d)] falling (N+1)); returns 1 when
    the dispersion N is -1.
    """
    if d < 1:
        raise ValueError("the equation order d must be positive")
    if p0.is_zero or pd.is_zero:
        raise ValueError("universal denominator needs nonzero coefficients")
    n_max = dispersion(shift(pd, -d), p0).value
    return _universal_from_shift(p0, pd, d, n_max)


def _universal_from_shift(p0: Poly, pd: Poly, d: int, n_max: int) -> Poly:
    if n_max < 0:
        return Poly.one()
    lead = falling_product(shift(p0, n_max), n_max + 1)
    trail = falling_product(shift(pd, -d), n_max + 1)
    return gcd_monic(lead, trail)

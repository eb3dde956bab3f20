"""Independent oracles and corpus generators shared by the test modules.

Everything here deliberately avoids the production code paths it is used
to check: the resultant oracle is a Sylvester determinant, the gcd oracle
is the classical monic remainder sequence, and dispersion is brute-forced
by scanning shifts.
"""

from __future__ import annotations

import random
from fractions import Fraction

from ratrec.linalg import solve_exact
from ratrec.polys import Poly, RatFunc, divrem, exact_div, shift
from ratrec.recurrences import LinearRecurrence, SolutionSet


def det_exact(matrix: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    size = len(matrix)
    m = [row[:] for row in matrix]
    det = Fraction(1)
    for c in range(size):
        pivot = next((i for i in range(c, size) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, size):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [v - f * w for v, w in zip(m[i], m[c])]
    return det


def sylvester_resultant(a: Poly, b: Poly) -> Fraction:
    """Res(a, b) as the determinant of the Sylvester matrix."""
    da, db = int(a.degree), int(b.degree)
    if da == 0:
        return a.lc ** db
    if db == 0:
        return b.lc ** da
    size = da + db
    rows = []
    desc_a = [a.coeff(da - i) for i in range(da + 1)]
    desc_b = [b.coeff(db - i) for i in range(db + 1)]
    for i in range(db):
        rows.append([Fraction(0)] * i + desc_a + [Fraction(0)] * (size - da - 1 - i))
    for i in range(da):
        rows.append([Fraction(0)] * i + desc_b + [Fraction(0)] * (size - db - 1 - i))
    return det_exact(rows)


def monic_ers_gcd(a: Poly, b: Poly) -> Poly:
    """Reference gcd by the monic Euclidean remainder sequence."""
    while not b.is_zero:
        _, r = divrem(a, b)
        a, b = b, (r.monic() if not r.is_zero else r)
    return a.monic()


def brute_dispersion(a: Poly, b: Poly, kmax: int = 30) -> int:
    """Largest k in [0, kmax] with a nontrivial gcd(a(n), b(n+k)), else -1."""
    best = -1
    for k in range(kmax + 1):
        if monic_ers_gcd(a, shift(b, k)).degree >= 1:
            best = k
    return best


def divides(small: Poly, big: Poly) -> bool:
    return divrem(big, small)[1].is_zero


# -- random generators ------------------------------------------------------


def rand_poly(rng: random.Random, max_deg: int, lo: int = -6, hi: int = 6) -> Poly:
    """Random nonzero polynomial with integer coefficients."""
    deg = rng.randint(0, max_deg)
    coeffs = [rng.randint(lo, hi) for _ in range(deg)]
    lead = 0
    while lead == 0:
        lead = rng.randint(lo, hi)
    return Poly(coeffs + [lead])


def rand_poly_int_roots(rng: random.Random, max_deg: int, root_lo: int, root_hi: int) -> Poly:
    """Random polynomial that splits into integer-rooted linear factors."""
    deg = rng.randint(1, max_deg)
    out = Poly.const(rng.choice([1, 1, 2, -1, 3]))
    for _ in range(deg):
        out = out * Poly((-rng.randint(root_lo, root_hi), 1))
    return out


def planted_pair(rng: random.Random, max_shift: int = 8) -> tuple[Poly, Poly, int]:
    """(p0, pd, d) such that pd(n-d) and p0(n+k) share a factor for some
    k in [0, max_shift]; degrees stay <= 5."""
    d = rng.randint(1, 3)
    k = rng.randint(0, max_shift)
    w = rand_poly_int_roots(rng, 2, -3, 3).monic()
    p0 = rand_poly(rng, 3, -4, 4) * shift(w, -k)
    pd = rand_poly(rng, 3, -4, 4) * shift(w, d)
    if rng.random() < 0.3:
        extra = Poly((-rng.randint(-3, 3), 1))
        j = rng.randint(0, max_shift)
        p0 = p0 * shift(extra, -j) if p0.degree <= 4 else p0
        pd = pd * shift(extra, d) if pd.degree <= 4 else pd
    return p0, pd, d


def random_coprime_pair(rng: random.Random) -> tuple[Poly, Poly]:
    """Coprime (a, b), often with nontrivial dispersion between shifts."""
    a = rand_poly(rng, 3, -4, 4)
    b = rand_poly(rng, 3, -4, 4)
    if rng.random() < 0.6:
        w = Poly((-rng.randint(-3, 3), 1))
        a = a * w
        b = b * shift(w, -rng.randint(1, 5))
    g = monic_ers_gcd(a, b)
    if g.degree > 0:
        a = exact_div(a, g)
        b = exact_div(b, g)
    return a, b


def planted_antidifference_ratio(rng: random.Random) -> RatFunc:
    """Term ratio r of t = (difference of z) for a hypergeometric z whose own
    ratio is a random rational function, so a certificate must exist."""
    while True:
        num = rand_poly(rng, 2, -4, 4)
        den = rand_poly(rng, 2, -4, 4)
        rz = RatFunc.reduced(num, den)
        if rz.is_zero or rz == RatFunc.one():
            continue
        ratio = rz * (rz.shifted(1) - RatFunc.one()) / (rz - RatFunc.one())
        if not ratio.is_zero:
            return ratio


def planted_rational_instance(
    rng: random.Random,
) -> tuple[LinearRecurrence, RatFunc, Poly]:
    """(recurrence, planted solution y = f/g, planted g).

    Coefficients are p_m(n) * g(n+m) and the right side is built by
    substitution, so y solves the recurrence by construction.
    """
    deg_g = rng.randint(1, 4)
    base = rng.randint(-3, 3)
    g = Poly.one()
    for _ in range(deg_g):
        g = g * Poly((-(base + rng.randint(0, 6)), 1))
    f = rand_poly(rng, 4, -5, 5)
    d = rng.randint(1, 2)
    ps = [rand_poly(rng, 2, -4, 4) for _ in range(d + 1)]
    coeffs = tuple(ps[m] * shift(g, m) for m in range(d + 1))
    rhs = Poly.zero()
    for m in range(d + 1):
        rhs = rhs + ps[m] * shift(f, m)
    return LinearRecurrence(coeffs, rhs), RatFunc.reduced(f, g), g


def in_affine_family(solutions: SolutionSet, candidate: Poly) -> bool:
    """Exact membership of candidate in particular + span(basis)."""
    if solutions.particular is None:
        return False
    target = candidate - solutions.particular
    basis = solutions.homogeneous_basis
    if not basis:
        return target.is_zero
    height = max([target.degree + 1] + [h.degree + 1 for h in basis if not h.is_zero] + [1])
    height = int(height)
    matrix = [[h.coeff(i) for h in basis] for i in range(height)]
    rhs = [target.coeff(i) for i in range(height)]
    particular, _ = solve_exact(matrix, rhs)
    return particular is not None


def rand_ratfunc(rng: random.Random) -> RatFunc:
    num = rand_poly(rng, 3, -9, 9) if rng.random() < 0.9 else Poly.zero()
    den = rand_poly(rng, 3, -9, 9)
    return RatFunc.reduced(num, den)

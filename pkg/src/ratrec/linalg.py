"""Exact linear algebra over the rationals (dense Gauss-Jordan)."""

from __future__ import annotations

from fractions import Fraction


def solve_exact(
    matrix: list[list[Fraction]], rhs: list[Fraction]
) -> tuple[list[Fraction] | None, list[list[Fraction]]]:
    """Solve M x = rhs exactly.

    Returns (particular, nullspace_basis).  particular is None when the
    system is inconsistent; the nullspace basis comes from the reduced row
    echelon form, one vector per free column with a 1 in that column, so
    the output is deterministic.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    aug = [list(matrix[i]) + [rhs[i]] for i in range(rows)]

    pivot_cols: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == rows:
            break

    consistent = all(aug[i][cols] == 0 for i in range(r, rows))

    particular: list[Fraction] | None = None
    if consistent:
        particular = [Fraction(0)] * cols
        for i, c in enumerate(pivot_cols):
            particular[c] = aug[i][cols]

    free_cols = [c for c in range(cols) if c not in pivot_cols]
    basis: list[list[Fraction]] = []
    for f in free_cols:
        vec = [Fraction(0)] * cols
        vec[f] = Fraction(1)
        for i, c in enumerate(pivot_cols):
            vec[c] = -aug[i][f]
        basis.append(vec)
    return particular, basis

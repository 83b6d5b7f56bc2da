"""Exact linear algebra over the rationals.

Everything here runs on plain sequences of ``Fraction`` with Gaussian
elimination and first-nonzero pivoting, so results are exact and
deterministic.  The phase-1 simplex at the bottom decides nonnegative
solvability of a rational linear system and is the engine behind exact
convex-hull membership.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = Sequence[Fraction]


def _as_fractions(vec: Sequence) -> list[Fraction]:
    return [Fraction(v) for v in vec]


class SpanSolver:
    """Reduced row-echelon form of a fixed list of row vectors, kept together
    with the combinations that produced each echelon row.  Repeated membership
    queries against the same span then cost a single reduction pass."""

    def __init__(self, rows: Sequence[Vector]):
        self.num_rows = len(rows)
        self.length = len(rows[0]) if rows else 0
        self._echelon: list[tuple[list[Fraction], list[Fraction], int]] = []
        for index, row in enumerate(rows):
            if len(row) != self.length:
                raise ValueError("rows of unequal length")
            vec = _as_fractions(row)
            combo = [Fraction(0)] * self.num_rows
            combo[index] = Fraction(1)
            self._reduce(vec, combo)
            pivot = self._first_nonzero(vec)
            if pivot is None:
                continue
            inv = Fraction(1) / vec[pivot]
            vec = [v * inv for v in vec]
            combo = [c * inv for c in combo]
            for other_vec, other_combo, other_pivot in self._echelon:
                factor = other_vec[pivot]
                if factor:
                    for i in range(self.length):
                        other_vec[i] -= factor * vec[i]
                    for i in range(self.num_rows):
                        other_combo[i] -= factor * combo[i]
            self._echelon.append((vec, combo, pivot))

    @staticmethod
    def _first_nonzero(vec: Sequence[Fraction]) -> int | None:
        for i, v in enumerate(vec):
            if v:
                return i
        return None

    def _reduce(self, vec: list[Fraction], combo: list[Fraction] | None) -> None:
        for evec, ecombo, pivot in self._echelon:
            factor = vec[pivot]
            if factor:
                for i in range(self.length):
                    vec[i] -= factor * evec[i]
                if combo is not None:
                    for i in range(self.num_rows):
                        combo[i] -= factor * ecombo[i]

    @property
    def rank(self) -> int:
        return len(self._echelon)

    def solve(self, target: Vector) -> list[Fraction] | None:
        """Coefficients c with sum(c_i * rows_i) == target, or None."""
        if len(target) != self.length and self.num_rows > 0:
            raise ValueError("target has wrong length")
        vec = _as_fractions(target)
        combo = [Fraction(0)] * self.num_rows
        self._reduce(vec, combo)
        if any(vec):
            return None
        return [-c for c in combo]

    def contains(self, target: Vector) -> bool:
        return self.solve(target) is not None


def rat_linear_solve(rows: Sequence[Vector], target: Vector
                     ) -> list[Fraction] | None:
    """Exact coefficients expressing ``target`` in the span of ``rows``,
    or None when the target is not in the span.

    All rows and the target must have equal length.  When the expression is
    not unique the solution with untouched rows weighted zero is returned,
    deterministically.
    """
    if rows:
        length = len(rows[0])
        if any(len(r) != length for r in rows) or len(target) != length:
            raise ValueError("dimension mismatch")
    elif any(Fraction(v) for v in target):
        return None
    else:
        return []
    return SpanSolver(rows).solve(target)


def rank(vectors: Sequence[Vector]) -> int:
    if not vectors:
        return 0
    return SpanSolver(vectors).rank


def independent_indices(vectors: Sequence[Vector]) -> list[int]:
    """Indices of a maximal linearly independent subset, chosen greedily in
    input order (deterministic)."""
    if not vectors:
        return []
    length = len(vectors[0])
    echelon: list[tuple[list[Fraction], int]] = []
    kept = []
    for index, row in enumerate(vectors):
        if len(row) != length:
            raise ValueError("rows of unequal length")
        vec = _as_fractions(row)
        for evec, pivot in echelon:
            factor = vec[pivot]
            if factor:
                for i in range(length):
                    vec[i] -= factor * evec[i]
        pivot = SpanSolver._first_nonzero(vec)
        if pivot is None:
            continue
        inv = Fraction(1) / vec[pivot]
        echelon.append(([v * inv for v in vec], pivot))
        kept.append(index)
    return kept


def kernel_basis(rows: Sequence[Vector], length: int) -> list[list[Fraction]]:
    """Basis of the right kernel {x : row . x = 0 for every row}."""
    solver = SpanSolver(rows) if rows else None
    pivots = {}
    if solver is not None:
        for vec, _combo, pivot in solver._echelon:
            pivots[pivot] = vec
    free = [j for j in range(length) if j not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * length
        x[f] = Fraction(1)
        for pivot, vec in pivots.items():
            x[pivot] = -vec[f]
        basis.append(x)
    return basis


def nonnegative_solution_exists(columns: Sequence[Vector], rhs: Vector) -> bool:
    """Decide feasibility of {x >= 0 : sum x_j * columns_j = rhs} exactly.

    Phase-1 simplex with Bland's rule; termination is guaranteed and every
    pivot is carried out in rational arithmetic.
    """
    m = len(rhs)
    k = len(columns)
    for col in columns:
        if len(col) != m:
            raise ValueError("dimension mismatch")
    rows = [[Fraction(columns[j][i]) for j in range(k)] for i in range(m)]
    b = _as_fractions(rhs)
    for i in range(m):
        if b[i] < 0:
            rows[i] = [-v for v in rows[i]]
            b[i] = -b[i]
    # tableau columns: k structural, m artificial, then the rhs.  Artificial
    # columns never re-enter the basis once they leave (sound for a pure
    # feasibility question), so Bland's rule on the structural columns
    # guarantees termination.
    width = k + m
    tableau = [rows[i] + [Fraction(1 if j == i else 0) for j in range(m)] + [b[i]]
               for i in range(m)]
    basis = [k + i for i in range(m)]
    while True:
        in_basis = set(basis)
        objective = [Fraction(0)] * (width + 1)
        for i in range(m):
            if basis[i] >= k:
                row = tableau[i]
                for j in range(width + 1):
                    objective[j] += row[j]
        entering = None
        for j in range(k):
            if j not in in_basis and objective[j] > 0:
                entering = j
                break
        if entering is None:
            return objective[width] == 0
        leaving = None
        best = None
        for i in range(m):
            coeff = tableau[i][entering]
            if coeff > 0:
                ratio = tableau[i][width] / coeff
                if best is None or ratio < best or \
                        (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving is None:  # cannot happen: the objective is bounded below
            raise RuntimeError("unbounded phase-1 simplex")
        pivot = tableau[leaving][entering]
        tableau[leaving] = [v / pivot for v in tableau[leaving]]
        for i in range(m):
            if i != leaving and tableau[i][entering]:
                factor = tableau[i][entering]
                tableau[i] = [v - factor * w
                              for v, w in zip(tableau[i], tableau[leaving])]
        basis[leaving] = entering

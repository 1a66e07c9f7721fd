"""Exact integer Smith normal form and first homology of a presentation.

H_1 is the cokernel of the relator-by-generator exponent-sum matrix; its
invariant factors are read off the Smith normal form.  The SNF routine keeps
the unimodular transforms U and V with U A V = D so tests can re-multiply and
verify the reduction, and selects pivots by least absolute value to tame
coefficient growth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .presentations import Presentation

Matrix = List[List[int]]


@dataclass(frozen=True)
class AbelianizationResult:
    invariant_factors: Tuple[int, ...]
    free_rank: int
    balanced: bool

    def is_trivial(self) -> bool:
        return not self.invariant_factors and self.free_rank == 0


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    rows, inner, cols = len(A), len(B), len(B[0]) if B else 0
    return [
        [sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def smith_normal_form(A: Matrix) -> Tuple[Matrix, Matrix, Matrix]:
    """Return (D, U, V) with U A V = D diagonal, d_i >= 0 and d_i | d_{i+1}."""
    D = [row[:] for row in A]
    rows = len(D)
    cols = len(D[0]) if rows else 0
    U = identity_matrix(rows)
    V = identity_matrix(cols)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, factor):
        D[dst] = [a + factor * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + factor * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, factor):
        for row in D:
            row[dst] += factor * row[src]
        for row in V:
            row[dst] += factor * row[src]

    t = 0
    while t < min(rows, cols):
        # Least-absolute-value nonzero pivot in the remaining block.
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if D[i][j] and (pivot is None or abs(D[i][j]) < abs(D[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            for i in range(t + 1, rows):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // D[t][t]))
            if any(D[i][t] for i in range(t + 1, rows)):
                i = min(
                    (i for i in range(t + 1, rows) if D[i][t]),
                    key=lambda i: abs(D[i][t]),
                )
                swap_rows(t, i)
                continue
            for j in range(t + 1, cols):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // D[t][t]))
            if any(D[t][j] for j in range(t + 1, cols)):
                j = min(
                    (j for j in range(t + 1, cols) if D[t][j]),
                    key=lambda j: abs(D[t][j]),
                )
                swap_cols(t, j)
                continue
            break
        # Pivot must divide every entry of the remaining block.
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if D[i][j] % D[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(offender, t, 1)
            continue
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return D, U, V


def abelianization(pres: Presentation) -> AbelianizationResult:
    """Invariant factors and free rank of H_1 from the exponent-sum matrix."""
    n = pres.ngens
    matrix = []
    for relator in pres.relators:
        row = [0] * n
        for letter in relator:
            row[abs(letter) - 1] += 1 if letter > 0 else -1
        matrix.append(row)
    if not matrix:
        return AbelianizationResult((), n, pres.is_balanced())
    D, _, _ = smith_normal_form(matrix)
    diag = [D[i][i] for i in range(min(len(D), n))]
    nonzero = [d for d in diag if d != 0]
    factors = tuple(d for d in nonzero if d > 1)
    return AbelianizationResult(factors, n - len(nonzero), pres.is_balanced())

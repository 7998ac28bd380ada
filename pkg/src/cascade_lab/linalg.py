"""Fraction-free linear algebra over the integers.

Rows are reduced with integer combinations ``a*r - b*p`` followed by division
by the row content, so every intermediate stays an exact Python ``int``.
"""
from __future__ import annotations

from math import gcd
from typing import List, Sequence, Tuple

Matrix = List[List[int]]


def _primitive(row: List[int]) -> List[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def row_reduce(matrix: Sequence[Sequence[int]]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form up to row scaling.

    Returns the nonzero rows and their pivot columns.  Each pivot column is
    zero outside its pivot row, but pivots are not normalised to 1.
    """
    rows = [list(map(int, r)) for r in matrix if any(r)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: List[int] = []
    done = 0
    for col in range(ncols):
        pr = next((i for i in range(done, len(rows)) if rows[i][col]), None)
        if pr is None:
            continue
        rows[done], rows[pr] = rows[pr], rows[done]
        p = rows[done]
        a = p[col]
        for i in range(len(rows)):
            if i != done and rows[i][col]:
                b = rows[i][col]
                g = gcd(a, b)
                fa, fb = a // g, b // g
                rows[i] = _primitive([fa * x - fb * y for x, y in zip(rows[i], p)])
        pivots.append(col)
        done += 1
        if done == len(rows):
            break
    return rows[:done], pivots


def rank(matrix: Sequence[Sequence[int]]) -> int:
    return len(row_reduce(matrix)[1])


def nullspace(matrix: Sequence[Sequence[int]], ncols: int = None) -> List[List[int]]:
    """Integer basis of the right kernel, one vector per free column."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    rows, pivots = row_reduce(matrix)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        scale = 1
        for r, p in zip(rows, pivots):
            if r[f]:
                scale = scale * abs(r[p]) // gcd(scale, abs(r[p]))
        v = [0] * ncols
        v[f] = scale
        for r, p in zip(rows, pivots):
            if r[f]:
                v[p] = -r[f] * scale // r[p]
        basis.append(v)
    return basis


def mat_vec(matrix: Sequence[Sequence[int]], v: Sequence[int]) -> List[int]:
    return [sum(a * b for a, b in zip(row, v)) for row in matrix]

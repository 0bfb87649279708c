"""Row reduction, rank and nullspace over a finite field.

Matrices are lists of rows; entries are element indices of a Field.
Everything is exact and deterministic (leftmost pivot, top-down).
"""

from __future__ import annotations

from .field import Field


def rref(rows: list[list[int]], field: Field):
    """Reduced row echelon form.  Returns (reduced nonzero rows, pivot cols)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, v) for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [
                    field.sub(mat[i][j], field.mul(factor, mat[r][j]))
                    for j in range(ncols)
                ]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows, field: Field) -> int:
    return len(rref(rows, field)[0])


def nullspace(rows: list[list[int]], field: Field, ncols: int | None = None):
    """Basis of the right nullspace {v : M v = 0}, as rows."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    red, pivots = rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in zip(red, pivots):
            v[pc] = field.neg(r[fc])
        basis.append(v)
    return basis


def mat_vec_dot(row_a, row_b, field: Field) -> int:
    total = 0
    for a, b in zip(row_a, row_b):
        total = field.add(total, field.mul(a, b))
    return total

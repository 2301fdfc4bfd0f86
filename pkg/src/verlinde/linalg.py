"""Dense exact linear algebra over the rationals.

Matrices carry ``Fraction`` entries.  Rank is computed by fraction-free
(Bareiss) elimination on a denominator-cleared integer copy, so every
intermediate value is an exact minor of the input and no rounding can
occur.  Kernels come from a rational reduced row echelon form.
"""

from __future__ import annotations

import math
from fractions import Fraction

try:
    from gmpy2 import mpz
except ImportError:  # pure-int fallback: same results, slower on large minors
    mpz = int

__all__ = ["ExactMatrix", "rank", "kernel_basis", "random_unimodular"]


class ExactMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(entries) != rows:
            raise ValueError(f"expected {rows} rows, got {len(entries)}")
        data = []
        for row in entries:
            if len(row) != cols:
                raise ValueError(f"expected {cols} columns, got {len(row)}")
            data.append([x if isinstance(x, Fraction) else Fraction(x) for x in row])
        self.rows = rows
        self.cols = cols
        self.entries = data

    @classmethod
    def from_rows(cls, entries, cols=None):
        rows = len(entries)
        if cols is None:
            if rows == 0:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(entries[0])
        return cls(rows, cols, entries)

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, [[Fraction(0)] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.entries)))

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"

    def copy_rows(self):
        return [row[:] for row in self.entries]

    def transpose(self):
        return ExactMatrix(self.cols, self.rows,
                           [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        return ExactMatrix(self.rows, self.cols + other.cols,
                           [self.entries[i] + other.entries[i] for i in range(self.rows)])

    def vstack(self, other):
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        return ExactMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def scale(self, c):
        c = Fraction(c)
        return ExactMatrix(self.rows, self.cols,
                           [[c * x for x in row] for row in self.entries])

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in matrix sum")
        return ExactMatrix(self.rows, self.cols,
                           [[a + b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.entries, other.entries)])

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        ot = other.transpose().entries
        out = [[sum(a * b for a, b in zip(row, col)) if self.cols else Fraction(0)
                for col in ot]
               for row in self.entries]
        return ExactMatrix(self.rows, other.cols, out)

    def column(self, j):
        return [self.entries[i][j] for i in range(self.rows)]

    def apply_to_vector(self, vec):
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum(a * b for a, b in zip(row, vec)) if self.cols else Fraction(0)
                for row in self.entries]

    def rank(self):
        """Exact rank over Q (fraction-free elimination)."""
        return _bareiss_rank(_cleared_int_rows(self.entries))

    def kernel_basis(self):
        """Basis of the right kernel as a list of Fraction column vectors."""
        return _kernel_from_rref(self.entries, self.rows, self.cols)

    def to_json(self):
        return [[str(x) for x in row] for row in self.entries]

    @classmethod
    def from_json(cls, rows, cols, grid):
        entries = [[Fraction(x) for x in row] for row in grid]
        return cls(rows, cols, entries)


def rank(m: ExactMatrix) -> int:
    return m.rank()


def kernel_basis(m: ExactMatrix):
    return m.kernel_basis()


def _cleared_int_rows(entries):
    """Scale each row to integers (row scaling preserves rank and kernel)."""
    out = []
    for row in entries:
        if all(x.denominator == 1 for x in row):
            out.append([mpz(x.numerator) for x in row])
            continue
        l = math.lcm(*(x.denominator for x in row))
        out.append([mpz(x.numerator * (l // x.denominator)) for x in row])
    return out


def _bareiss_rank(rows):
    """Rank of an integer matrix by single-step fraction-free elimination.

    Pivot rows are chosen by minimal bit length to slow coefficient growth;
    every division below is exact (entries stay minors of the input).
    """
    m = len(rows)
    if m == 0:
        return 0
    ncols = len(rows[0])
    prev = mpz(1)
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = -1
        best = -1
        for i in range(r, m):
            e = rows[i][c]
            if e:
                bl = e.bit_length() if e > 0 else (-e).bit_length()
                if piv < 0 or bl < best:
                    piv, best = i, bl
                    if bl == 1:
                        break
        if piv < 0:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[c]
        for i in range(r + 1, m):
            row = rows[i]
            e = row[c]
            if e:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - e * prow[j]) // prev
            elif p != prev:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        r += 1
    return r


def _rref(entries, m, n):
    """Reduced row echelon form over Fraction; returns (rows, pivot list)."""
    rows = [row[:] for row in entries]
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append((r, c))
        r += 1
    return rows, pivots


def _kernel_from_rref(entries, m, n):
    rows, pivots = _rref(entries, m, n)
    pivot_cols = {c for _, c in pivots}
    basis = []
    for fc in range(n):
        if fc in pivot_cols:
            continue
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for pr, pc in pivots:
            v[pc] = -rows[pr][fc]
        basis.append(v)
    return basis


def random_unimodular(n, rng, shears=None):
    """Random integer matrix with determinant +-1 (small entries).

    Built from seeded row shears and a permutation, so conjugating by it
    preserves rank and splitting data while scrambling any visible block
    structure.
    """
    if n == 0:
        return ExactMatrix.zero(0, 0)
    if shears is None:
        shears = 2 * n + 2
    rows = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for _ in range(shears):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        c = rng.choice((-2, -1, 1, 2))
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    rng.shuffle(rows)
    return ExactMatrix(n, n, rows)

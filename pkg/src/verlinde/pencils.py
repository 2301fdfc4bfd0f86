"""Splitting types of cokernels of injective pencils O(-1)^u -> O^w on P^1.

A pencil is a pair (A, B) of w x u matrices describing the sheaf map
s*A + t*B.  For an injective pencil whose cokernel E is a bundle with
nonnegative splitting entries, the twisted section dimensions
h^0(E(-t)) are recovered from ranks of Sylvester-style block matrices,
and the splitting type is the conjugate partition of their differences.
This avoids computing any canonical form of the (possibly singular)
pencil; canonical blocks appear only in the forward direction as a
seeded test constructor.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .linalg import ExactMatrix, random_unimodular

__all__ = [
    "Pencil",
    "SplittingType",
    "PencilError",
    "NotInjectiveError",
    "CokernelError",
    "is_injective",
    "sylvester_block",
    "twisted_section_dims",
    "splitting_type",
    "kronecker_pencil",
    "dominates",
    "dominance",
]


class PencilError(ValueError):
    pass


class NotInjectiveError(PencilError):
    """The pencil drops rank identically, so it is not an injective sheaf map."""


class CokernelError(PencilError):
    """The section-dimension sequence is not that of a bundle with
    nonnegative splitting entries (torsion or negative twists)."""


class SplittingType:
    """Non-increasing tuple of nonnegative integers b_1 >= ... >= b_r."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple(int(b) for b in entries)
        if any(b < 0 for b in entries):
            raise ValueError(f"negative entry in splitting type {entries}")
        if any(entries[i] < entries[i + 1] for i in range(len(entries) - 1)):
            raise ValueError(f"splitting type {entries} is not non-increasing")
        self.entries = entries

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def total(self):
        return sum(self.entries)

    def zeros(self):
        return self.entries.count(0)

    def __eq__(self, other):
        if isinstance(other, SplittingType):
            return self.entries == other.entries
        if isinstance(other, tuple):
            return self.entries == other
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"SplittingType{self.entries}"

    def dominates(self, other):
        return dominates(self, other)

    def to_json(self):
        return {"entries": list(self.entries)}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["entries"])


def dominates(t1, t2):
    """Prefix-sum dominance; False for mismatched length or total."""
    if len(t1) != len(t2) or t1.total != t2.total:
        return False
    s1 = s2 = 0
    for a, b in zip(t1, t2):
        s1 += a
        s2 += b
        if s1 < s2:
            return False
    return True


def dominance(t1, t2):
    """One of 'equal', 'dominates', 'dominated', 'incomparable',
    'incomparable-frame' (the last when lengths or totals differ)."""
    if len(t1) != len(t2) or t1.total != t2.total:
        return "incomparable-frame"
    if t1 == t2:
        return "equal"
    if dominates(t1, t2):
        return "dominates"
    if dominates(t2, t1):
        return "dominated"
    return "incomparable"


class Pencil:
    """Pair of w x u matrices (A, B) for the map s*A + t*B: O(-1)^u -> O^w."""

    __slots__ = ("A", "B")

    def __init__(self, A, B):
        if (A.rows, A.cols) != (B.rows, B.cols):
            raise PencilError("A and B must have equal shapes")
        if A.cols > A.rows:
            raise PencilError("pencil must have u <= w")
        self.A = A
        self.B = B

    @property
    def w(self):
        return self.A.rows

    @property
    def u(self):
        return self.A.cols

    def at(self, s, t):
        """The matrix s*A + t*B."""
        return self.A.scale(s) + self.B.scale(t)

    def swap(self):
        return Pencil(self.B, self.A)

    def coordinate_change(self, a, b, c, d):
        """Replace (A, B) by (a*A + b*B, c*A + d*B); needs ad - bc != 0."""
        if Fraction(a) * Fraction(d) - Fraction(b) * Fraction(c) == 0:
            raise PencilError("coordinate change must be invertible")
        return Pencil(self.A.scale(a) + self.B.scale(b),
                      self.A.scale(c) + self.B.scale(d))

    def conjugate(self, left, right):
        """Left/right multiply both matrices (an equivalence of pencils)."""
        return Pencil(left @ self.A @ right, left @ self.B @ right)

    def __eq__(self, other):
        if not isinstance(other, Pencil):
            return NotImplemented
        return self.A == other.A and self.B == other.B

    def __repr__(self):
        return f"Pencil(w={self.w}, u={self.u})"

    def to_json(self):
        return {"w": self.w, "u": self.u, "A": self.A.to_json(), "B": self.B.to_json()}

    @classmethod
    def from_json(cls, obj):
        w, u = int(obj["w"]), int(obj["u"])
        return cls(ExactMatrix.from_json(w, u, obj["A"]),
                   ExactMatrix.from_json(w, u, obj["B"]))


def is_injective(pencil):
    """Whether s*A + t*B is injective as a sheaf map (generic rank u).

    Fast path: three pseudo-random specializations; any full-rank hit
    certifies injectivity.  Exact fallback: the generic rank of a pencil
    equals the maximum specialization rank over any u+1 distinct points
    of P^1, since a nonzero r x r minor is a binary form of degree
    r <= u and cannot vanish at u+1 distinct points.
    """
    u = pencil.u
    if u == 0:
        return True
    rng = random.Random("pencil-injectivity")
    for _ in range(3):
        s, t = rng.randint(-99, 99), rng.randint(-99, 99)
        if (s, t) == (0, 0):
            s = 1
        if pencil.at(s, t).rank() == u:
            return True
    for i in range(u):
        if pencil.at(1, i).rank() == u:
            return True
    return pencil.at(0, 1).rank() == u


def sylvester_block(pencil, j):
    """Block matrix S_j with (j+1) x j blocks: A^T on the diagonal, B^T below.

    S_j represents the transposed pencil acting
    H^0(O(j-1)) (x) W* -> H^0(O(j)) (x) U*; S_0 is empty.
    """
    if j < 0:
        raise ValueError("block index must be nonnegative")
    u, w = pencil.u, pencil.w
    if j == 0:
        return ExactMatrix.zero(u, 0)
    at = pencil.A.transpose().entries
    bt = pencil.B.transpose().entries
    grid = [[Fraction(0)] * (j * w) for _ in range((j + 1) * u)]
    for block in range(j):
        r0, c0 = block * u, block * w
        for i in range(u):
            row_a = grid[r0 + i]
            row_b = grid[r0 + u + i]
            src_a = at[i]
            src_b = bt[i]
            for jj in range(w):
                row_a[c0 + jj] = src_a[jj]
                row_b[c0 + jj] = src_b[jj]
    return ExactMatrix((j + 1) * u, j * w, grid)


def _h_value(pencil, t):
    """h^0(E(-t)) for the cokernel E, via rank of S_(t-1)."""
    return t * pencil.u - sylvester_block(pencil, t - 1).rank()


def twisted_section_dims(pencil, t_max):
    """The sequence h^0(E(-t)) for t = 1..t_max.

    Twisting 0 -> O(-1)^u -> O^w -> E -> 0 by O(-t) and taking cohomology
    gives h^0(E(-t)) = ker(H^1(O(-t-1))^u -> H^1(O(-t))^w); by Serre
    duality that connecting map is the transposed Sylvester block S_(t-1),
    so h^0(E(-t)) = t*u - rank(S_(t-1)).  Once the sequence of a genuine
    nonnegative bundle reaches zero it stays zero, so trailing values are
    filled without further elimination.
    """
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    if not is_injective(pencil):
        raise NotInjectiveError("pencil is not injective")
    dims = []
    for t in range(1, t_max + 1):
        h = _h_value(pencil, t)
        dims.append(h)
        if h == 0:
            dims.extend([0] * (t_max - t))
            break
    return dims


def splitting_type(pencil):
    """Splitting type of the cokernel bundle of an injective pencil.

    Raises CokernelError when the section dimensions are not those of a
    bundle with nonnegative entries (e.g. torsion in the cokernel).
    """
    if not is_injective(pencil):
        raise NotInjectiveError("pencil is not injective")
    u, w = pencil.u, pencil.w
    if u == 0:
        return SplittingType((0,) * w)
    h = []
    for t in range(1, u + 2):
        h.append(_h_value(pencil, t))
        if h[-1] == 0:
            break
    else:
        raise CokernelError(
            f"h^0(E(-t)) did not reach zero by t = {u + 1}; "
            "cokernel has torsion or negative twists")
    h.append(0)
    counts = [h[t] - h[t + 1] for t in range(len(h) - 1)]  # c_t = #{i : b_i >= t}
    if any(c < 0 for c in counts):
        raise CokernelError("section dimensions are not non-increasing")
    if any(counts[i] < counts[i + 1] for i in range(len(counts) - 1)):
        raise CokernelError("section dimensions are not convex")
    if counts and counts[0] > w - u:
        raise CokernelError("more nonzero entries than the rank allows")
    entries = []
    for i in range(1, counts[0] + 1 if counts else 1):
        entries.append(sum(1 for c in counts if c >= i))
    entries.sort(reverse=True)
    entries.extend([0] * (w - u - len(entries)))
    return SplittingType(entries)


def kronecker_pencil(st, w, u, seed=None):
    """Build a pencil with prescribed splitting type from canonical blocks.

    For each entry b >= 1 a (b+1) x b block (A = identity over a zero
    row, B = zero row over identity, cokernel O(b)) is placed on the
    diagonal; zero entries contribute zero rows.  With a seed, the result
    is conjugated by random unimodular row and column transformations.
    """
    if not isinstance(st, SplittingType):
        st = SplittingType(st)
    if len(st) != w - u:
        raise PencilError(f"type length {len(st)} != w - u = {w - u}")
    if st.total != u:
        raise PencilError(f"type sum {st.total} != u = {u}")
    a_rows = [[Fraction(0)] * u for _ in range(w)]
    b_rows = [[Fraction(0)] * u for _ in range(w)]
    r0 = c0 = 0
    for b in st.entries:
        if b == 0:
            continue
        for i in range(b):
            a_rows[r0 + i][c0 + i] = Fraction(1)
            b_rows[r0 + 1 + i][c0 + i] = Fraction(1)
        r0 += b + 1
        c0 += b
    pencil = Pencil(ExactMatrix(w, u, a_rows), ExactMatrix(w, u, b_rows))
    if seed is None:
        return pencil
    rng = random.Random(f"{seed}:kronecker")
    left = random_unimodular(w, rng)
    right = random_unimodular(u, rng)
    return pencil.conjugate(left, right)

"""Verlinde bundles of the universal hypersurface family, restricted to lines.

For the family of degree-d hypersurfaces in P^n, the k-th Verlinde bundle
V_k restricted to the line spanned by forms f1, f2 is the cokernel of the
pencil (A, B) = (mult by f1, mult by f2) acting from degree k-d to degree
k.  Everything here is an executable criterion about that pencil: the
zero count of the splitting type, genericity as a single rank condition,
and the gcd test that predicts jumping behavior.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb

from .linalg import ExactMatrix
from .pencils import Pencil, SplittingType
from .polynomials import (
    COEFF_BOUND,
    HomogeneousPolynomial,
    gcd_degree,
    mult_matrix,
    random_form,
)

__all__ = [
    "VerlindeContext",
    "LineInSystem",
    "DegenerateLineError",
    "GenericTypeUndefinedError",
    "context",
    "verlinde_pencil",
    "zero_count",
    "generic_type",
    "near_generic_type",
    "is_generic_type",
    "GcdPrediction",
    "predict_by_gcd",
    "sample_line",
    "genericity_range_table",
    "GenericityRow",
]


class DegenerateLineError(ValueError):
    """f1 and f2 do not span a line (linearly dependent)."""


class GenericTypeUndefinedError(ValueError):
    """The generic type (1,...,1,0,...,0) needs degree <= rank."""


@dataclass(frozen=True)
class VerlindeContext:
    """Numerical invariants of V_k for hypersurfaces of degree d in P^n.

    w and u are the dimensions of the degree-k and degree-(k-d) graded
    pieces; rank = w - u and degree = u are the rank and degree of V_k.
    """

    n: int
    d: int
    k: int
    w: int
    u: int
    rank: int
    degree: int


def context(n, d, k):
    if n < 2:
        raise ValueError("ambient dimension n must be >= 2")
    if d < 1:
        raise ValueError("hypersurface degree d must be >= 1")
    if k < 1:
        raise ValueError("twist k must be >= 1")
    w = comb(k + n, n)
    u = comb(k - d + n, n) if k >= d else 0
    return VerlindeContext(n=n, d=d, k=k, w=w, u=u, rank=w - u, degree=u)


@dataclass(frozen=True)
class LineInSystem:
    """A line in the system of degree-d hypersurfaces, spanned by f1, f2."""

    f1: HomogeneousPolynomial
    f2: HomogeneousPolynomial

    def __post_init__(self):
        f1, f2 = self.f1, self.f2
        if f1.num_vars != f2.num_vars:
            raise DegenerateLineError("spanning forms live in different rings")
        if f1.degree != f2.degree:
            raise DegenerateLineError("spanning forms have different degrees")
        if f1.is_zero or f2.is_zero:
            raise DegenerateLineError("spanning forms must be nonzero")
        coeffs = ExactMatrix.from_rows(
            [[a, b] for a, b in zip(f1.coeff_vector(), f2.coeff_vector())], cols=2)
        if coeffs.rank() != 2:
            raise DegenerateLineError("f1 and f2 are linearly dependent")

    def swap(self):
        return LineInSystem(self.f2, self.f1)


def _check_line(ctx, line):
    if line.f1.n != ctx.n:
        raise ValueError(f"line lives in P^{line.f1.n}, context in P^{ctx.n}")
    if line.f1.degree != ctx.d:
        raise ValueError(f"line has degree {line.f1.degree}, context degree {ctx.d}")


def verlinde_pencil(ctx, line):
    """The pencil presenting V_k on the line; empty (u = 0) when k < d."""
    _check_line(ctx, line)
    if ctx.k < ctx.d:
        empty = ExactMatrix.zero(ctx.w, 0)
        return Pencil(empty, empty)
    src = ctx.k - ctx.d
    return Pencil(mult_matrix(line.f1, src), mult_matrix(line.f2, src))


def _stacked_products(ctx, line):
    """The w x 2u matrix [A | B] of all products f1*theta, f2*theta."""
    p = verlinde_pencil(ctx, line)
    return p.A.hstack(p.B)


def zero_count(ctx, line):
    """Number of zero entries of the splitting type, as a single rank:
    w - dim(f1*U + f2*U) with U the degree-(k-d) graded piece."""
    return ctx.w - _stacked_products(ctx, line).rank()


def generic_type(ctx):
    """The type (1,...,1,0,...,0) with u ones; needs degree <= rank."""
    if ctx.degree > ctx.rank:
        raise GenericTypeUndefinedError(
            f"generic type undefined: degree {ctx.degree} > rank {ctx.rank}")
    return SplittingType((1,) * ctx.u + (0,) * (ctx.rank - ctx.u))


def is_generic_type(ctx, line):
    """Whether the products f1*theta, f2*theta are linearly independent,
    i.e. the splitting type is the generic (1,...,1,0,...,0)."""
    if ctx.degree > ctx.rank:
        raise GenericTypeUndefinedError(
            f"generic type undefined: degree {ctx.degree} > rank {ctx.rank}")
    return _stacked_products(ctx, line).rank() == 2 * ctx.u


def near_generic_type(ctx):
    """The type (2,1,...,1,0,...,0); with the generic type, the only one
    attained at k = d + 1.  The degree constraint pins u - 2 ones."""
    if ctx.u < 2 or ctx.rank < ctx.u - 1:
        raise GenericTypeUndefinedError(
            f"no near-generic type for u = {ctx.u}, rank = {ctx.rank}")
    return SplittingType((2,) + (1,) * (ctx.u - 2) + (0,) * (ctx.rank - ctx.u + 1))


@dataclass(frozen=True)
class GcdPrediction:
    gcd_degree: int
    jumping: bool
    predicted_type: SplittingType | None  # only populated at k = d + 1


def predict_by_gcd(ctx, line, trials=3, seed=0):
    """Predict jumping behavior from deg gcd(f1, f2).

    The line is jumping iff deg gcd >= 2d - k; at k = d + 1 the full type
    is determined: (2,1,...,1,0,...,0) when jumping, the generic type
    otherwise.
    """
    if ctx.degree > ctx.rank:
        raise GenericTypeUndefinedError(
            f"generic type undefined: degree {ctx.degree} > rank {ctx.rank}")
    _check_line(ctx, line)
    dprime = gcd_degree(line.f1, line.f2, trials=trials, seed=seed)
    jumping = dprime >= 2 * ctx.d - ctx.k
    predicted = None
    if ctx.k == ctx.d + 1:
        predicted = near_generic_type(ctx) if jumping else generic_type(ctx)
    return GcdPrediction(gcd_degree=dprime, jumping=jumping, predicted_type=predicted)


def sample_line(ctx, mode, seed, bound=COEFF_BOUND, _retries=16):
    """Draw a line: mode 'random', or 'jumping:D' for a planted gcd of degree D.

    Jumping mode draws h of degree D and g1, g2 of degree d - D and spans
    the line by (h*g1, h*g2); sampling is retried until the two forms are
    independent.
    """
    n, d = ctx.n, ctx.d
    if mode == "random":
        dprime = None
    elif isinstance(mode, str) and mode.startswith("jumping:"):
        dprime = int(mode.split(":", 1)[1])
    elif isinstance(mode, tuple) and mode[0] == "jumping":
        dprime = int(mode[1])
    else:
        raise ValueError(f"unknown sampling mode {mode!r}")
    if dprime is not None and not 0 <= dprime <= d - 1:
        raise ValueError(f"planted gcd degree must lie in [0, {d - 1}], got {dprime}")
    for attempt in range(_retries):
        rng = random.Random(f"{seed}:line:{mode}:{attempt}")
        try:
            if dprime is None:
                return LineInSystem(random_form(n, d, rng, bound),
                                    random_form(n, d, rng, bound))
            h = random_form(n, dprime, rng, bound)
            g1 = random_form(n, d - dprime, rng, bound)
            g2 = random_form(n, d - dprime, rng, bound)
            return LineInSystem(h * g1, h * g2)
        except DegenerateLineError:
            continue
    raise RuntimeError(f"failed to sample an independent line after {_retries} tries")


@dataclass(frozen=True)
class GenericityRow:
    k: int
    degree: int
    rank: int
    degree_le_rank: bool
    k_le_2d: bool


def genericity_range_table(n, d, k_max):
    """Table of (k, degree, rank) with the two genericity predicates.

    On every row, k <= 2d must imply degree <= rank; the converse can
    fail (the degree can stay below the rank slightly past k = 2d).
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    rows = []
    for k in range(1, k_max + 1):
        ctx = context(n, d, k)
        rows.append(GenericityRow(
            k=k,
            degree=ctx.degree,
            rank=ctx.rank,
            degree_le_rank=ctx.degree <= ctx.rank,
            k_le_2d=k <= 2 * d,
        ))
    return rows

import pytest

from verlinde.family import (
    DegenerateLineError,
    GenericTypeUndefinedError,
    LineInSystem,
    context,
    generic_type,
    genericity_range_table,
    is_generic_type,
    near_generic_type,
    predict_by_gcd,
    sample_line,
    verlinde_pencil,
    zero_count,
)
from verlinde.pencils import is_injective, splitting_type
from verlinde.polynomials import HomogeneousPolynomial


def x(i):
    return HomogeneousPolynomial.variable(3, i)


@pytest.fixture
def shared_factor_line():
    return LineInSystem(x(0) * x(1), x(0) * x(2))


def test_context_values():
    ctx = context(2, 2, 3)
    assert (ctx.w, ctx.u, ctx.rank, ctx.degree) == (10, 3, 7, 3)
    ctx5 = context(2, 2, 5)
    assert (ctx5.w, ctx5.u, ctx5.rank, ctx5.degree) == (21, 10, 11, 10)
    for n, d in [(2, 2), (3, 3)]:
        assert context(n, d, d).u == 1
        assert context(n, d, d).degree == 1


def test_context_validation():
    with pytest.raises(ValueError):
        context(1, 2, 3)
    with pytest.raises(ValueError):
        context(2, 0, 3)
    with pytest.raises(ValueError):
        context(2, 2, 0)


def test_line_independence_check():
    with pytest.raises(DegenerateLineError):
        LineInSystem(x(0) * x(1), (x(0) * x(1)).scale(3))
    with pytest.raises(DegenerateLineError):
        LineInSystem(x(0), x(0) * x(1))  # degree mismatch


def test_verlinde_pencil_construction(shared_factor_line):
    ctx = context(2, 2, 3)
    p = verlinde_pencil(ctx, shared_factor_line)
    assert (p.w, p.u) == (10, 3)
    assert is_injective(p)
    swapped = verlinde_pencil(ctx, shared_factor_line.swap())
    assert swapped.A == p.B and swapped.B == p.A


def test_pencil_below_degree_is_trivial(shared_factor_line):
    ctx = context(2, 2, 1)
    assert ctx.u == 0
    p = verlinde_pencil(ctx, shared_factor_line)
    assert p.u == 0
    assert splitting_type(p) == (0,) * ctx.w


def test_zero_count_shared_factor(shared_factor_line):
    # rank [A|B] = 5: the single relation x2*(x0x1) = x1*(x0x2)
    assert zero_count(context(2, 2, 3), shared_factor_line) == 5


def test_zero_count_random_line():
    ctx = context(2, 2, 3)
    line = sample_line(ctx, "random", seed=11)
    assert zero_count(ctx, line) == 4  # w - 2u = 10 - 6


def test_zero_count_at_k_equals_d():
    for n, d in [(2, 2), (2, 3), (3, 2)]:
        ctx = context(n, d, d)
        line = sample_line(ctx, "random", seed=3)
        assert zero_count(ctx, line) == ctx.w - 2


def test_zero_count_matches_splitting_type(shared_factor_line):
    ctx = context(2, 2, 3)
    st = splitting_type(verlinde_pencil(ctx, shared_factor_line))
    assert st == (2, 1, 0, 0, 0, 0, 0)
    assert zero_count(ctx, shared_factor_line) == st.zeros()


def test_generic_type_and_guard():
    ctx = context(2, 2, 3)
    assert generic_type(ctx) == (1, 1, 1, 0, 0, 0, 0)
    assert near_generic_type(ctx) == (2, 1, 0, 0, 0, 0, 0)
    bad = context(2, 2, 6)  # degree 15 > rank 13
    with pytest.raises(GenericTypeUndefinedError):
        generic_type(bad)
    with pytest.raises(GenericTypeUndefinedError):
        is_generic_type(bad, sample_line(bad, "random", seed=0))


def test_is_generic(shared_factor_line):
    ctx = context(2, 2, 3)
    assert not is_generic_type(ctx, shared_factor_line)
    assert is_generic_type(ctx, sample_line(ctx, "random", seed=2))


def test_generic_never_occurs_past_2d():
    ctx = context(2, 2, 5)
    assert ctx.degree <= ctx.rank
    for seed in range(8):
        line = sample_line(ctx, "random", seed=seed)
        assert not is_generic_type(ctx, line)


def test_predict_by_gcd_shared_factor(shared_factor_line):
    ctx = context(2, 2, 3)
    pred = predict_by_gcd(ctx, shared_factor_line, trials=3, seed=0)
    assert pred.jumping and pred.gcd_degree == 1
    assert pred.predicted_type == (2, 1, 0, 0, 0, 0, 0)


def test_predict_by_gcd_coprime():
    ctx = context(2, 2, 3)
    line = LineInSystem(x(0) * x(0), x(1) * x(1))
    pred = predict_by_gcd(ctx, line, trials=3, seed=0)
    assert not pred.jumping and pred.gcd_degree == 0
    assert pred.predicted_type == generic_type(ctx)


def test_predict_matches_splitting_on_planted_line():
    ctx = context(3, 2, 3)
    line = sample_line(ctx, "jumping:1", seed=4)
    pred = predict_by_gcd(ctx, line, trials=3, seed=4)
    st = splitting_type(verlinde_pencil(ctx, line))
    assert pred.jumping
    assert pred.predicted_type == st == near_generic_type(ctx)
    assert len(st) == 16


def test_sample_line_modes():
    ctx = context(2, 3, 4)
    jump = sample_line(ctx, "jumping:2", seed=1)
    assert not is_generic_type(ctx, jump)  # d' = d-1 at k = d+1 always jumps
    coprime = sample_line(ctx, "jumping:0", seed=1)
    assert is_generic_type(ctx, coprime)  # d' = 0 < d-1 for d >= 2
    for seed in range(10):
        assert is_generic_type(ctx, sample_line(ctx, "random", seed=seed))
    with pytest.raises(ValueError):
        sample_line(ctx, "jumping:3", seed=0)
    with pytest.raises(ValueError):
        sample_line(ctx, "bogus", seed=0)


def test_genericity_range_table():
    rows = genericity_range_table(2, 2, 8)
    assert [r.degree_le_rank for r in rows[:5]] == [True] * 5  # k = 1..5
    assert rows[4].k_le_2d is False  # k = 5 > 2d yet degree <= rank
    assert all(r.degree_le_rank for r in rows if r.k_le_2d)
    rows33 = genericity_range_table(3, 3, 12)
    assert all(r.degree_le_rank for r in rows33 if r.k_le_2d)

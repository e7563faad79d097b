import random

import pytest

from sharecircuit.errors import (
    IndexOutOfRange,
    InvalidArguments,
    InverseOfZero,
    SingularMatrix,
)
from sharecircuit.field import (
    FieldModulus,
    Matrix,
    ff_add,
    ff_inv,
    ff_mul,
    ff_sub,
    is_prime,
    mat_inverse,
    mat_mul,
    mat_rank,
    submatrix,
)

GF7 = FieldModulus(7)


def brute_inverse(a, p):
    """Independent oracle: scan [1, p) for the multiplicative inverse."""
    for x in range(1, p):
        if a * x % p == 1:
            return x
    raise AssertionError(f"{a} has no inverse mod {p}")


def test_modulus_rejects_composite_and_small():
    with pytest.raises(InvalidArguments):
        FieldModulus(9)
    with pytest.raises(InvalidArguments):
        FieldModulus(2)
    assert FieldModulus(2**61 - 1).p == 2**61 - 1


def test_is_prime_small_range():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(50):
        assert is_prime(n) == (n in primes)


def test_ff_ops_examples():
    assert ff_add(3, 5, GF7) == 1
    assert ff_sub(3, 5, GF7) == 5
    assert ff_mul(3, 5, GF7) == 1
    assert ff_inv(1, GF7) == 1
    assert ff_inv(3, GF7) == brute_inverse(3, 7) == 5


def test_ff_inv_of_zero():
    with pytest.raises(InverseOfZero):
        ff_inv(0, GF7)


def test_ff_inv_matches_fermat_exponent():
    for p in (3, 5, 7, 11, 13, 97):
        mod = FieldModulus(p)
        for a in range(1, p):
            assert ff_inv(a, mod) == pow(a, p - 2, p) == brute_inverse(a, p)


def test_rank_examples():
    assert mat_rank(Matrix.identity(3), GF7) == 3
    assert mat_rank(Matrix(2, 4, (0,) * 8), GF7) == 0
    m = Matrix.from_rows([[1, 1], [1, 2], [1, 3]])
    # oracle: no row is a scalar multiple of another and a 2x2 minor is
    # nonzero mod 7, so rank is exactly 2
    assert (1 * 2 - 1 * 1) % 7 != 0
    assert mat_rank(m, GF7) == 2


def test_inverse_examples():
    assert mat_inverse(Matrix.identity(4), GF7).entries == Matrix.identity(4).entries
    m = Matrix.from_rows([[1, 1], [1, 2]])
    inv = mat_inverse(m, GF7)
    assert inv.entries == (2, 6, 6, 1)
    assert mat_mul(m, inv, GF7).entries == Matrix.identity(2).entries
    with pytest.raises(SingularMatrix):
        mat_inverse(Matrix.from_rows([[1, 1], [2, 2]]), GF7)


def test_submatrix_examples():
    m = Matrix.from_rows([[4, 5], [6, 7]])
    assert submatrix(m, [0, 1], [0, 1]).entries == m.entries
    assert submatrix(m, [0], [0]).entries == (4,)
    m3 = Matrix.from_rows([[1, 2], [3, 4], [5, 6]])
    assert submatrix(m3, [0, 2], [1]).entries == (2, 6)


def test_submatrix_index_errors():
    m = Matrix.from_rows([[1, 2], [3, 4]])
    with pytest.raises(IndexOutOfRange):
        submatrix(m, [0, 2], [0])
    with pytest.raises(IndexOutOfRange):
        submatrix(m, [1, 0], [0])


def _random_matrix(rng, rows, cols, p):
    return Matrix(rows, cols, tuple(rng.randrange(p) for _ in range(rows * cols)))


def test_inverse_times_matrix_is_identity_100_seeds():
    p = 10007
    mod = FieldModulus(p)
    hits = 0
    for seed in range(100):
        rng = random.Random(seed)
        n = rng.randrange(1, 8)
        a = _random_matrix(rng, n, n, p)
        if mat_rank(a, mod) != n:
            continue
        hits += 1
        assert mat_mul(a, mat_inverse(a, mod), mod).entries == Matrix.identity(n).entries
    assert hits > 50


def test_rank_equals_rank_of_transpose():
    mod = FieldModulus(13)
    for seed in range(30):
        rng = random.Random(seed)
        rows, cols = rng.randrange(1, 21), rng.randrange(1, 21)
        a = _random_matrix(rng, rows, cols, 13)
        at = Matrix(cols, rows, tuple(a.at(r, c) for c in range(cols) for r in range(rows)))
        assert mat_rank(a, mod) == mat_rank(at, mod)


def test_rank_invariant_under_row_swap_and_scaling():
    mod = FieldModulus(11)
    for seed in range(20):
        rng = random.Random(1000 + seed)
        rows, cols = rng.randrange(2, 10), rng.randrange(1, 10)
        a = _random_matrix(rng, rows, cols, 11)
        base = mat_rank(a, mod)
        r1, r2 = rng.sample(range(rows), 2)
        rows_list = [list(a.row(r)) for r in range(rows)]
        rows_list[r1], rows_list[r2] = rows_list[r2], rows_list[r1]
        scale = rng.randrange(1, 11)
        rows_list[r1] = [x * scale % 11 for x in rows_list[r1]]
        assert mat_rank(Matrix.from_rows(rows_list), mod) == base

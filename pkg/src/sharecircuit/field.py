"""Exact arithmetic and dense linear algebra over a prime field GF(p)."""

from dataclasses import dataclass

from . import _kernels
from .errors import IndexOutOfRange, InvalidArguments, InverseOfZero, SingularMatrix

# Word-size Mersenne prime; large enough for the synthesizer's
# Schwartz-Zippel failure bound at any desk-scale (depth, n, t).
DEFAULT_PRIME = 2**61 - 1

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldModulus:
    p: int

    def __post_init__(self):
        if self.p < 3:
            raise InvalidArguments(f"modulus must be >= 3, got {self.p}")
        if not is_prime(self.p):
            raise InvalidArguments(f"modulus {self.p} is not prime")


def ff_add(a: int, b: int, modulus: FieldModulus) -> int:
    return (a + b) % modulus.p


def ff_sub(a: int, b: int, modulus: FieldModulus) -> int:
    return (a - b) % modulus.p


def ff_mul(a: int, b: int, modulus: FieldModulus) -> int:
    return a * b % modulus.p


def ff_inv(a: int, modulus: FieldModulus) -> int:
    if a % modulus.p == 0:
        raise InverseOfZero("inverse of zero requested")
    return pow(a, modulus.p - 2, modulus.p)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix with entries in [0, p)."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise InvalidArguments(
                f"entry count {len(self.entries)} != {self.rows}x{self.cols}"
            )

    def at(self, r: int, c: int) -> int:
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    @staticmethod
    def from_rows(rows_list, modulus: FieldModulus | None = None) -> "Matrix":
        nrows = len(rows_list)
        ncols = len(rows_list[0]) if nrows else 0
        flat = []
        for row in rows_list:
            if len(row) != ncols:
                raise InvalidArguments("ragged rows")
            flat.extend(row)
        if modulus is not None:
            flat = [x % modulus.p for x in flat]
        return Matrix(nrows, ncols, tuple(flat))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, tuple(1 if i % (n + 1) == 0 else 0 for i in range(n * n)))


def mat_rank(m: Matrix, modulus: FieldModulus) -> int:
    return _kernels.gf_rank(m.rows, m.cols, list(m.entries), modulus.p)


def mat_inverse(m: Matrix, modulus: FieldModulus) -> Matrix:
    """Gauss-Jordan inverse; raises SingularMatrix below full rank."""
    if m.rows != m.cols:
        raise InvalidArguments("inverse requires a square matrix")
    n = m.rows
    p = modulus.p
    aug = [list(m.row(r)) + [1 if c == r else 0 for c in range(n)] for r in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] % p != 0), None)
        if pivot is None:
            raise SingularMatrix(f"matrix is singular at column {col}")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], p - 2, p)
        aug[col] = [x * inv % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] % p != 0:
                factor = aug[r][col]
                aug[r] = [(a - factor * b) % p for a, b in zip(aug[r], aug[col])]
    flat = []
    for r in range(n):
        flat.extend(aug[r][n:])
    return Matrix(n, n, tuple(flat))


def submatrix(m: Matrix, row_idx, col_idx) -> Matrix:
    """Slice by strictly increasing row and column index sequences."""
    for name, idx, bound in (("row", row_idx, m.rows), ("col", col_idx, m.cols)):
        prev = -1
        for i in idx:
            if not 0 <= i < bound:
                raise IndexOutOfRange(f"{name} index {i} out of range [0, {bound})")
            if i <= prev:
                raise IndexOutOfRange(f"{name} indices must be strictly increasing")
            prev = i
    flat = [m.at(r, c) for r in row_idx for c in col_idx]
    return Matrix(len(row_idx), len(col_idx), tuple(flat))


def mat_vec(m: Matrix, vec, modulus: FieldModulus) -> list:
    if len(vec) != m.cols:
        raise InvalidArguments("vector length does not match column count")
    p = modulus.p
    return [
        sum(m.at(r, c) * vec[c] for c in range(m.cols)) % p for r in range(m.rows)
    ]


def mat_mul(a: Matrix, b: Matrix, modulus: FieldModulus) -> Matrix:
    if a.cols != b.rows:
        raise InvalidArguments("inner dimensions do not match")
    p = modulus.p
    flat = []
    for r in range(a.rows):
        for c in range(b.cols):
            flat.append(
                sum(a.at(r, k) * b.at(k, c) for k in range(a.cols)) % p
            )
    return Matrix(a.rows, b.cols, tuple(flat))

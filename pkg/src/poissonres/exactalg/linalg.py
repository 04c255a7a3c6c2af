"""Dense exact linear algebra over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class SingularMatrixError(ArithmeticError):
    pass


class QMatrix:
    """Immutable rational matrix stored row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Sequence[Sequence]):
        data = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if data and any(len(r) != len(data[0]) for r in data):
            raise ValueError("ragged matrix")
        self._data = data
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._data[i][j] == self._data[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def transpose(self) -> QMatrix:
        return QMatrix([[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __neg__(self) -> QMatrix:
        return QMatrix([[-x for x in r] for r in self._data])

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            return QMatrix([
                [sum((self._data[i][k] * other._data[k][j] for k in range(self.cols)), Fraction(0))
                 for j in range(other.cols)]
                for i in range(self.rows)
            ])
        vec = [Fraction(x) for x in other]
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return [sum((a * b for a, b in zip(r, vec)), Fraction(0)) for r in self._data]

    def __eq__(self, other) -> bool:
        return isinstance(other, QMatrix) and self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        return f"QMatrix({[[str(x) for x in r] for r in self._data]})"

    def minor(self, k: int) -> QMatrix:
        """Leading ``k x k`` submatrix."""
        return QMatrix([r[:k] for r in self._data[:k]])


def _require_square(m: QMatrix) -> None:
    if not m.is_square():
        raise ValueError(f"square matrix required, got {m.rows}x{m.cols}")


def det(m: QMatrix) -> Fraction:
    _require_square(m)
    a = m.tolist()
    n = len(a)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        piv = a[c][c]
        result *= piv
        for r in range(c + 1, n):
            f = a[r][c] / piv
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return sign * result


def _eliminate(m: QMatrix, rhs: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan on ``[m | rhs]``; returns the solved right-hand block."""
    _require_square(m)
    n = m.rows
    a = m.tolist()
    b = [list(r) for r in rhs]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        a[c], a[p] = a[p], a[c]
        b[c], b[p] = b[p], b[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        b[c] = [x * inv for x in b[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
                b[r] = [x - f * y for x, y in zip(b[r], b[c])]
    return b


def solve_linear(m: QMatrix, v: Sequence) -> list[Fraction]:
    """Exact solution ``a`` of ``m @ a == v``."""
    if len(v) != m.rows:
        raise ValueError("right-hand side has wrong length")
    if m.rows == 0:
        return []
    sol = _eliminate(m, [[Fraction(x)] for x in v])
    return [r[0] for r in sol]


def inverse(m: QMatrix) -> QMatrix:
    _require_square(m)
    if m.rows == 0:
        return m
    ident = QMatrix.identity(m.rows).tolist()
    return QMatrix(_eliminate(m, ident))


def is_negative_definite(m: QMatrix) -> bool:
    """Sylvester test: ``(-1)^k det(M_k) > 0`` for every leading minor."""
    if not m.is_symmetric():
        raise ValueError("negative definiteness needs a symmetric matrix")
    for k in range(1, m.rows + 1):
        d = det(m.minor(k))
        if (d if k % 2 == 0 else -d) <= 0:
            return False
    return True

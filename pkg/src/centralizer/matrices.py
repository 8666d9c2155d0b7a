"""Square matrices with exact field or polynomial entries."""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .errors import MixedFieldsError
from .fields import FieldElement, FieldSpec
from .poly import Polynomial


class ExactMatrix:
    __slots__ = ("rows", "field")

    def __init__(self, rows: Sequence[Sequence], field: FieldSpec):
        n = len(rows)
        if n == 0:
            raise ValueError("matrices must have positive dimension")
        packed = []
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            packed.append(tuple(field.element(c) for c in row))
        object.__setattr__(self, "rows", tuple(packed))
        object.__setattr__(self, "field", field)

    def __setattr__(self, *args):
        raise AttributeError("ExactMatrix is immutable")

    @property
    def n(self) -> int:
        return len(self.rows)

    @staticmethod
    def identity(n: int, field: FieldSpec) -> "ExactMatrix":
        return ExactMatrix(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)], field
        )

    @staticmethod
    def zero(n: int, field: FieldSpec) -> "ExactMatrix":
        return ExactMatrix([[0] * n for _ in range(n)], field)

    @staticmethod
    def diag(values: Sequence, field: FieldSpec) -> "ExactMatrix":
        n = len(values)
        return ExactMatrix(
            [[values[i] if i == j else 0 for j in range(n)] for i in range(n)], field
        )

    @staticmethod
    def jordan_block(eigenvalue, size: int, field: FieldSpec) -> "ExactMatrix":
        rows = [[0] * size for _ in range(size)]
        ev = field.element(eigenvalue)
        for i in range(size):
            rows[i][i] = ev
            if i + 1 < size:
                rows[i][i + 1] = field.one()
        return ExactMatrix(rows, field)

    @staticmethod
    def block_diag(blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        if not blocks:
            raise ValueError("need at least one block")
        field = blocks[0].field
        n = sum(b.n for b in blocks)
        rows = [[field.zero()] * n for _ in range(n)]
        offset = 0
        for b in blocks:
            if b.field != field:
                raise MixedFieldsError("blocks over different fields")
            for i in range(b.n):
                for j in range(b.n):
                    rows[offset + i][offset + j] = b.rows[i][j]
            offset += b.n
        return ExactMatrix(rows, field)

    def entry(self, i: int, j: int) -> FieldElement:
        return self.rows[i][j]

    def _check(self, other: "ExactMatrix"):
        if self.field != other.field:
            raise MixedFieldsError("matrices over different fields")
        if self.n != other.n:
            raise ValueError("matrix sizes differ")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        return ExactMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            self.field,
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        return ExactMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            self.field,
        )

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.field.zero()
                for a, b in zip(self.rows[i], cols[j]):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return ExactMatrix(out, self.field)

    def scale(self, c) -> "ExactMatrix":
        c = self.field.element(c)
        return ExactMatrix(
            [[a * c for a in row] for row in self.rows], self.field
        )

    def power(self, e: int) -> "ExactMatrix":
        result = ExactMatrix.identity(self.n, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return all(not c for row in self.rows for c in row)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field.characteristic, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(c) for c in row) for row in self.rows)
        return f"<{self.n}x{self.n} [{body}] over {self.field}>"


class PolyMatrix:
    __slots__ = ("rows", "field")

    def __init__(self, rows: Sequence[Sequence[Polynomial]], field: FieldSpec):
        n = len(rows)
        if n == 0:
            raise ValueError("matrices must have positive dimension")
        packed = []
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            for p in row:
                if p.field != field:
                    raise MixedFieldsError("entry over a different field")
            packed.append(tuple(row))
        object.__setattr__(self, "rows", tuple(packed))
        object.__setattr__(self, "field", field)

    def __setattr__(self, *args):
        raise AttributeError("PolyMatrix is immutable")

    @property
    def n(self) -> int:
        return len(self.rows)

    def mutable_rows(self) -> List[List[Polynomial]]:
        return [list(row) for row in self.rows]


def characteristic_matrix(c: ExactMatrix) -> PolyMatrix:
    """The matrix x*I - c over the polynomial ring."""
    field = c.field
    x = Polynomial.x(field)
    rows = []
    for i in range(c.n):
        row = []
        for j in range(c.n):
            entry = Polynomial.constant(-c.rows[i][j], field)
            if i == j:
                entry = entry + x
            row.append(entry)
        rows.append(row)
    return PolyMatrix(rows, field)


def rank(rows: Sequence[Sequence[FieldElement]], field: FieldSpec) -> int:
    """Rank of a (possibly rectangular) grid of field elements."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    m, n = len(work), len(work[0])
    r = 0
    for col in range(n):
        pivot = None
        for i in range(r, m):
            if work[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = work[r][col].inverse()
        work[r] = [c * inv for c in work[r]]
        for i in range(m):
            if i != r and work[i][col]:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        r += 1
        if r == m:
            break
    return r


def inverse(m: ExactMatrix) -> ExactMatrix:
    """Inverse via Gauss-Jordan; raises ValueError when singular."""
    n = m.n
    work = [list(row) + [m.field.one() if i == j else m.field.zero() for j in range(n)]
            for i, row in enumerate(m.rows)]
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if work[i][col]:
                pivot = i
                break
        if pivot is None:
            raise ValueError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = work[col][col].inverse()
        work[col] = [c * inv for c in work[col]]
        for i in range(n):
            if i != col and work[i][col]:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[col])]
    return ExactMatrix([row[n:] for row in work], m.field)

"""Exact rational scalars, vectors, matrices and sparse tensors.

Conventions fixed here for the whole package:

* every scalar is a ``fractions.Fraction`` (arbitrary precision, always
  stored reduced, never a float);
* vectors are coordinate tuples, matrices act on column coordinate
  vectors, and the matrix of an operator has the images of the basis
  vectors as its columns;
* the transpose of an operator matrix is the matrix of the dual map in
  dual bases;
* sparse tensors never store zero entries and iterate in lexicographic
  index order, so serialized output is canonical.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Rat = Fraction
Vec = tuple[Fraction, ...]


def rat(value) -> Fraction:
    """Coerce an int, string ("p/q" or "p") or Fraction to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def rat_str(value: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    return str(value)


ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

def vec(coords: Iterable) -> Vec:
    return tuple(rat(c) for c in coords)


def vzero(n: int) -> Vec:
    return (ZERO,) * n


def vbasis(n: int, i: int) -> Vec:
    return tuple(ONE if k == i else ZERO for k in range(n))


def vadd(a: Vec, b: Vec) -> Vec:
    if len(a) != len(b):
        raise ValueError(f"vector dimensions differ: {len(a)} vs {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vec, b: Vec) -> Vec:
    if len(a) != len(b):
        raise ValueError(f"vector dimensions differ: {len(a)} vs {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


def vis_zero(a: Vec) -> bool:
    return all(x == 0 for x in a)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class Mat:
    """Dense exact-rational matrix; immutable after construction."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable]):
        rows = tuple(tuple(rat(c) for c in row) for row in entries)
        self.entries: tuple[tuple[Fraction, ...], ...] = rows
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != self.cols:
                raise ValueError("ragged matrix rows")

    def _same_shape(self, other: "Mat") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shapes differ")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_cols(cls, cols: Iterable[Vec]) -> "Mat":
        cols = [vec(c) for c in cols]
        if not cols:
            return cls.zeros(0, 0)
        n = len(cols[0])
        return cls([[c[i] for c in cols] for i in range(n)])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(rat_str(c) for c in row) for row in self.entries)
        return f"Mat[{body}]"

    def __add__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self) -> "Mat":
        return Mat([[-a for a in row] for row in self.entries])

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(
                f"matrix product shape mismatch: {self.rows}x{self.cols} @ "
                f"{other.rows}x{other.cols}"
            )
        cols = list(zip(*other.entries)) if other.entries else []
        return Mat(
            [
                [sum((a * b for a, b in zip(row, col)), ZERO) for col in cols]
                for row in self.entries
            ]
        )

    def scale(self, c) -> "Mat":
        c = rat(c)
        return Mat([[c * a for a in row] for row in self.entries])

    def apply(self, v: Vec) -> Vec:
        """Exact matrix-vector product (column-vector convention)."""
        if self.cols != len(v):
            raise ValueError(f"cannot apply {self.rows}x{self.cols} to vector of length {len(v)}")
        return tuple(sum((a * x for a, x in zip(row, v)), ZERO) for row in self.entries)

    def transpose(self) -> "Mat":
        """Matrix of the dual map in dual bases."""
        return Mat(list(zip(*self.entries)) if self.entries else [])

    def col(self, j: int) -> Vec:
        return tuple(row[j] for row in self.entries)

    def row(self, i: int) -> Vec:
        return self.entries[i]

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.entries for a in row)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.transpose()

    def det(self) -> Fraction:
        """Exact determinant by fraction-pivoting Gaussian elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        work = [list(row) for row in self.entries]
        det = ONE
        for j in range(n):
            pivot = next((i for i in range(j, n) if work[i][j] != 0), None)
            if pivot is None:
                return ZERO
            if pivot != j:
                work[j], work[pivot] = work[pivot], work[j]
                det = -det
            det *= work[j][j]
            inv = 1 / work[j][j]
            for i in range(j + 1, n):
                if work[i][j] == 0:
                    continue
                factor = work[i][j] * inv
                for k in range(j, n):
                    work[i][k] -= factor * work[j][k]
        return det

    def inverse(self) -> "Mat":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        work = [list(row) + [ONE if i == k else ZERO for k in range(n)]
                for i, row in enumerate(self.entries)]
        for j in range(n):
            pivot = next((i for i in range(j, n) if work[i][j] != 0), None)
            if pivot is None:
                raise ValueError("singular matrix has no inverse")
            work[j], work[pivot] = work[pivot], work[j]
            inv = 1 / work[j][j]
            work[j] = [a * inv for a in work[j]]
            for i in range(n):
                if i != j and work[i][j] != 0:
                    factor = work[i][j]
                    work[i] = [a - factor * b for a, b in zip(work[i], work[j])]
        return Mat([row[n:] for row in work])

    def submatrix(self, row_ids: Iterable[int], col_ids: Iterable[int]) -> "Mat":
        rows = list(row_ids)
        cols = list(col_ids)
        return Mat([[self.entries[i][j] for j in cols] for i in rows])

    @staticmethod
    def block_diag(a: "Mat", b: "Mat") -> "Mat":
        """Block-diagonal assembly; first factor block then second."""
        out = [
            list(row) + [ZERO] * b.cols for row in a.entries
        ] + [
            [ZERO] * a.cols + list(row) for row in b.entries
        ]
        return Mat(out)


def mat_apply(m: Mat, v: Vec) -> Vec:
    return m.apply(v)


def transpose(m: Mat) -> Mat:
    return m.transpose()


# ---------------------------------------------------------------------------
# sparse order-2 and order-3 tensors
# ---------------------------------------------------------------------------

class Tensor2:
    """Sparse element of V⊗W; keys (i, j), zeros never stored."""

    __slots__ = ("dim_left", "dim_right", "entries")

    def __init__(self, dim_left: int, dim_right: int, entries: Mapping | None = None):
        self.dim_left = dim_left
        self.dim_right = dim_right
        data: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in (entries or {}).items():
            c = rat(c)
            if c == 0:
                continue
            if not (0 <= i < dim_left and 0 <= j < dim_right):
                raise ValueError(f"tensor index ({i},{j}) out of bounds")
            data[(i, j)] = c
        self.entries = data

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        """Entries in lexicographic (i, j) order."""
        return iter(sorted(self.entries.items()))

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries.get((i, j), ZERO)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tensor2)
            and self.dim_left == other.dim_left
            and self.dim_right == other.dim_right
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.dim_left, self.dim_right, tuple(sorted(self.entries.items()))))

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j}):{rat_str(c)}" for (i, j), c in self.items())
        return f"Tensor2<{self.dim_left}x{self.dim_right}>{{{body}}}"

    def __add__(self, other: "Tensor2") -> "Tensor2":
        self._same_shape(other)
        data = dict(self.entries)
        for k, c in other.entries.items():
            data[k] = data.get(k, ZERO) + c
        return Tensor2(self.dim_left, self.dim_right, data)

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        return self + other.scale(-1)

    def __neg__(self) -> "Tensor2":
        return self.scale(-1)

    def scale(self, c) -> "Tensor2":
        c = rat(c)
        return Tensor2(self.dim_left, self.dim_right,
                       {k: c * v for k, v in self.entries.items()})

    def is_zero(self) -> bool:
        return not self.entries

    def is_skew(self) -> bool:
        if self.dim_left != self.dim_right:
            return False
        return all(self.entry(j, i) == -c for (i, j), c in self.entries.items())

    def _same_shape(self, other: "Tensor2") -> None:
        if (self.dim_left, self.dim_right) != (other.dim_left, other.dim_right):
            raise ValueError("tensor shapes differ")


def tensor2_map(f: Mat, g: Mat, t: Tensor2) -> Tensor2:
    """(f⊗g)(t): entry (a,b) = Σ f[a][i]·g[b][j]·t[i][j]."""
    if f.cols != t.dim_left or g.cols != t.dim_right:
        raise ValueError("operator/tensor dimension mismatch in tensor2_map")
    data: dict[tuple[int, int], Fraction] = {}
    for (i, j), c in t.entries.items():
        fcol = f.col(i)
        gcol = g.col(j)
        for a, fa in enumerate(fcol):
            if fa == 0:
                continue
            for b, gb in enumerate(gcol):
                if gb == 0:
                    continue
                key = (a, b)
                data[key] = data.get(key, ZERO) + fa * gb * c
    return Tensor2(f.rows, g.rows, data)


def flip(t: Tensor2) -> Tensor2:
    """The flip σ swapping tensor factors; square tensors only."""
    if t.dim_left != t.dim_right:
        raise ValueError("flip of a non-square tensor")
    return Tensor2(t.dim_right, t.dim_left,
                   {(j, i): c for (i, j), c in t.entries.items()})


def tensor3_map(f: Mat, g: Mat, h: Mat, t: "Tensor3") -> "Tensor3":
    """(f⊗g⊗h)(t) for order-3 tensors."""
    if (f.cols, g.cols, h.cols) != t.dims:
        raise ValueError("operator/tensor dimension mismatch in tensor3_map")
    data: dict[tuple[int, int, int], Fraction] = {}
    for (i, j, k), c in t.entries.items():
        fcol, gcol, hcol = f.col(i), g.col(j), h.col(k)
        for a, fa in enumerate(fcol):
            if fa == 0:
                continue
            for b, gb in enumerate(gcol):
                if gb == 0:
                    continue
                fg = fa * gb * c
                for d, hd in enumerate(hcol):
                    if hd == 0:
                        continue
                    key = (a, b, d)
                    data[key] = data.get(key, ZERO) + fg * hd
    return Tensor3((f.rows, g.rows, h.rows), data)


class Tensor3:
    """Sparse order-3 tensor, used only for computed residuals."""

    __slots__ = ("dims", "entries")

    def __init__(self, dims: tuple[int, int, int], entries: Mapping | None = None):
        self.dims = dims
        data: dict[tuple[int, int, int], Fraction] = {}
        for key, c in (entries or {}).items():
            c = rat(c)
            if c == 0:
                continue
            if not all(0 <= k < d for k, d in zip(key, dims)):
                raise ValueError(f"tensor index {key} out of bounds")
            data[key] = c
        self.entries = data

    def items(self) -> Iterator[tuple[tuple[int, int, int], Fraction]]:
        return iter(sorted(self.entries.items()))

    def entry(self, i: int, j: int, k: int) -> Fraction:
        return self.entries.get((i, j, k), ZERO)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tensor3)
            and self.dims == other.dims
            and self.entries == other.entries
        )

    def __add__(self, other: "Tensor3") -> "Tensor3":
        if self.dims != other.dims:
            raise ValueError("tensor shapes differ")
        data = dict(self.entries)
        for k, c in other.entries.items():
            data[k] = data.get(k, ZERO) + c
        return Tensor3(self.dims, data)

    def __repr__(self) -> str:
        body = ", ".join(f"{key}:{rat_str(c)}" for key, c in self.items())
        return f"Tensor3<{self.dims}>{{{body}}}"

    def is_zero(self) -> bool:
        return not self.entries

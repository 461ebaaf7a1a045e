"""Exact integer/rational linear algebra.

Everything here works on Python ints and :class:`fractions.Fraction`; there is
no floating point anywhere.  Rank uses fraction-free (Bareiss) elimination,
kernel lattices and lattice indices come from a Hermite normal form with a
tracked unimodular transform.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Optional, Sequence, Union

__all__ = [
    "IntMatrix",
    "KernelBasis",
    "RowspanCertificate",
    "as_matrix",
    "rank",
    "right_kernel",
    "in_rowspan",
    "solve",
    "maximal_minor_gcd",
    "pivot_columns",
    "hermite_normal_form",
    "primitive",
    "dot",
]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        if self.rows * self.cols != len(self.entries):
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )
        for e in self.entries:
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError(f"matrix entries must be int, got {type(e).__name__}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows((self.column(j) for j in range(self.cols)), self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def apply(self, v: Sequence) -> list:
        """Matrix-vector product ``M @ v`` (v may hold ints or Fractions)."""
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.cols} columns")
        return [dot(self.row(i), v) for i in range(self.rows)]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        cols = [other.column(j) for j in range(other.cols)]
        return IntMatrix.from_rows(
            ([dot(self.row(i), c) for c in cols] for i in range(self.rows)), other.cols
        )

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_rows()!r})"


MatrixLike = Union[IntMatrix, Sequence[Sequence[int]]]


def as_matrix(m: MatrixLike) -> IntMatrix:
    if isinstance(m, IntMatrix):
        return m
    return IntMatrix.from_rows(m)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by its content and make the first nonzero entry positive."""
    g = reduce(gcd, v, 0)
    if g == 0:
        return tuple(v)
    lead = next(x for x in v if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in v)


@dataclass(frozen=True)
class KernelBasis:
    """Saturated integer basis of a right kernel, in Hermite normal form."""

    vectors: tuple[tuple[int, ...], ...]
    length: int

    @property
    def corank(self) -> int:
        return len(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.vectors[i]


@dataclass(frozen=True)
class RowspanCertificate:
    """Outcome of a rowspan membership query.

    ``coefficients`` combine the matrix rows into the query vector when
    ``member`` is true; ``witness`` is a kernel vector pairing nontrivially with
    the query when it is false.
    """

    member: bool
    coefficients: Optional[tuple[Fraction, ...]] = None
    witness: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.member

    def to_dict(self) -> dict:
        out: dict = {"member": self.member}
        if self.coefficients is not None:
            out["coefficients"] = [str(c) for c in self.coefficients]
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


# -- elimination -----------------------------------------------------------


def _bareiss_echelon(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination; returns echelon rows and pivot columns.

    Pivot choice is the first nonzero entry at or below the current row in the
    leftmost remaining column, so the result is deterministic.
    """
    a = [list(r) for r in rows]
    m = len(a)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, m):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, ncols):
                ai[j] = (piv * ai[j] - f * a[r][j]) // prev
            ai[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m: MatrixLike) -> int:
    """Exact rank over the rationals."""
    m = as_matrix(m)
    if m.rows == 0 or m.cols == 0:
        return 0
    # repeated rows never change the rank
    rows = list(dict.fromkeys(m.row(i) for i in range(m.rows)))
    return len(_bareiss_echelon([list(r) for r in rows], m.cols)[1])


def pivot_columns(m: MatrixLike) -> list[int]:
    """Leftmost set of columns forming a basis of the column space."""
    m = as_matrix(m)
    if m.rows == 0 or m.cols == 0:
        return []
    return _bareiss_echelon(m.to_rows(), m.cols)[1]


def _rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    a = [[Fraction(x) for x in r] for r in rows]
    m = len(a)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _integer_row_basis(m: IntMatrix) -> list[list[int]]:
    """Primitive integer rows spanning the same rational row space as ``m``."""
    if m.rows == 0 or m.cols == 0:
        return []
    echelon, _ = _bareiss_echelon([list(m.row(i)) for i in range(m.rows)], m.cols)
    return [list(primitive(r)) for r in echelon]


def hermite_normal_form(
    rows: Sequence[Sequence[int]], ncols: int, transform: bool = False
):
    """Row-style Hermite normal form ``H = U A`` over the integers.

    Pivots are positive and entries above each pivot are reduced into
    ``[0, pivot)``.  Zero rows are kept at the bottom so that, with
    ``transform=True``, rows of ``U`` past the rank span the left kernel
    lattice of ``A``.  Returns ``(H, pivots)`` or ``(H, pivots, U)``.
    """
    a = [list(r) for r in rows]
    m = len(a)
    u = [[int(i == j) for j in range(m)] for i in range(m)] if transform else None
    pivots: list[int] = []
    r = 0

    def sub(i: int, k: int, q: int) -> None:
        # row_i -= q * row_k
        ak = a[k]
        a[i] = [x - q * y for x, y in zip(a[i], ak)]
        if u is not None:
            uk = u[k]
            u[i] = [x - q * y for x, y in zip(u[i], uk)]

    def swap(i: int, k: int) -> None:
        a[i], a[k] = a[k], a[i]
        if u is not None:
            u[i], u[k] = u[k], u[i]

    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if a[i][c] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: (abs(a[i][c]), i))
            if best != r:
                swap(r, best)
            clean = True
            for i in range(r + 1, m):
                if a[i][c]:
                    sub(i, r, a[i][c] // a[r][c])
                    if a[i][c]:
                        clean = False
            if clean:
                break
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            if u is not None:
                u[r] = [-x for x in u[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                sub(i, r, q)
        pivots.append(c)
        r += 1
    if transform:
        return a, pivots, u
    return a, pivots


def right_kernel(m: MatrixLike) -> KernelBasis:
    """Saturated integer basis of ``{x in Z^cols : M x = 0}``.

    The integer kernel only depends on the rational row space, so ``M`` is
    first replaced by a small primitive echelon basis of its rows.  The
    kernel lattice is read off the unimodular transform of a Hermite
    reduction of the transpose, then put into Hermite normal form itself,
    which makes every vector primitive with a positive leading entry.
    """
    m = as_matrix(m)
    n = m.cols
    basis_rows = _integer_row_basis(m)
    if not basis_rows:
        vecs = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        return KernelBasis(tuple(vecs), n)
    r = len(basis_rows)
    transposed = [[basis_rows[i][j] for i in range(r)] for j in range(n)]
    _, piv, u = hermite_normal_form(transposed, r, transform=True)
    raw = u[len(piv):]
    if not raw:
        return KernelBasis((), n)
    h, _ = hermite_normal_form(raw, n)
    vecs = tuple(tuple(row) for row in h if any(row))
    return KernelBasis(vecs, n)


def solve(m: MatrixLike, b: Sequence) -> Optional[tuple[Fraction, ...]]:
    """One exact solution of ``M x = b``, or ``None`` when inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    m = as_matrix(m)
    if len(b) != m.rows:
        raise ValueError(f"right-hand side of length {len(b)} for {m.rows} rows")
    aug = [list(m.row(i)) + [b[i]] for i in range(m.rows)]
    red, pivots = _rref(aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for row, c in zip(red, pivots):
        x[c] = row[-1]
    return tuple(x)


def in_rowspan(m: MatrixLike, v: Sequence, kernel: Optional[KernelBasis] = None) -> RowspanCertificate:
    """Decide whether ``v`` is a rational combination of the rows of ``M``."""
    m = as_matrix(m)
    if len(v) != m.cols:
        raise ValueError(f"vector of length {len(v)} for {m.cols} columns")
    coeffs = solve(m.transpose(), v)
    if coeffs is not None:
        return RowspanCertificate(True, coefficients=coeffs)
    kernel = kernel if kernel is not None else right_kernel(m)
    witness = next(w for w in kernel if dot(w, v) != 0)
    return RowspanCertificate(False, witness=witness)


def maximal_minor_gcd(m: MatrixLike) -> int:
    """gcd of the maximal minors of a full-row-rank matrix (0 otherwise).

    Equals the index of the column lattice in ``Z^rows``, i.e. the product of
    the pivots of the Hermite form of the transpose.
    """
    m = as_matrix(m)
    if m.rows == 0 or m.rows > m.cols:
        return 0
    h, piv = hermite_normal_form([list(m.column(j)) for j in range(m.cols)], m.rows)
    if len(piv) < m.rows:
        return 0
    out = 1
    for i, c in enumerate(piv):
        out *= h[i][c]
    return out

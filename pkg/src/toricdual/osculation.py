"""Jet matrices A^(k) and the quantities read off them.

Row ``alpha`` of ``A^(k)`` (``alpha`` in ``N^(n+1)`` with ``|alpha| = k``) is the
monomial ``x^alpha`` evaluated on the homogenized points ``(1, a_i)``; since
the first coordinate is always 1 this is the same as evaluating the
inhomogeneous monomial ``x_1^alpha_1 ... x_n^alpha_n`` of degree ``<= k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod
from typing import Iterator

from .config import LatticeConfiguration, dimension
from .exactla import IntMatrix, KernelBasis, rank, right_kernel

__all__ = [
    "JetData",
    "multiindices",
    "jet_matrix",
    "jet_rows",
    "hilbert_function",
    "is_generically_jet_spanned",
    "falling_factorial_matrix",
    "simplex_points",
]


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # descending lexicographic order
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def multiindices(n: int, k: int) -> list[tuple[int, ...]]:
    """Row indices of ``A^(k)``: all ``alpha`` in ``N^(n+1)`` with ``|alpha| = k``.

    Ordered lexicographically with coordinate 0 most significant and larger
    exponents first, which puts the inhomogeneous degree ``k - alpha_0`` in
    ascending order and starts with ``(k,0..0), (k-1,1,0..), ..., (k-1,0..,1)``.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    return list(_compositions(k, n + 1))


def simplex_points(n: int, k: int) -> list[tuple[int, ...]]:
    """Lattice points of ``k * simplex`` in ``Z^n``, in row order of ``A^(k)``."""
    return [alpha[1:] for alpha in multiindices(n, k)]


def jet_rows(points, n: int, k: int) -> list[list[int]]:
    rows = []
    for alpha in multiindices(n, k):
        e = alpha[1:]
        rows.append([prod(p[j] ** e[j] for j in range(n)) for p in points])
    return rows


@dataclass(frozen=True)
class JetData:
    k: int
    matrix: IntMatrix
    rank: int
    kernel: KernelBasis

    @property
    def d_k(self) -> int:
        return self.rank - 1

    @property
    def c_k(self) -> int:
        return self.kernel.corank

    @property
    def N(self) -> int:
        return self.matrix.cols - 1


def jet_matrix(cfg: LatticeConfiguration, k: int) -> JetData:
    """``A^(k)`` with its rank and saturated kernel basis.

    Rows that happen to coincide on the given points (e.g. ``x^2`` and ``x``
    on ``{0,1}``) are kept in the matrix; the rank routine collapses them.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    m = IntMatrix.from_rows(jet_rows(cfg.points, cfg.ambient_dim, k), len(cfg.points))
    r = rank(m)
    kern = right_kernel(m)
    assert r + kern.corank == m.cols
    return JetData(k, m, r, kern)


def hilbert_function(cfg: LatticeConfiguration, k: int) -> int:
    """Number of independent conditions the points impose on degree ``<= k`` polynomials."""
    return rank(jet_rows(cfg.points, cfg.ambient_dim, k))


def is_generically_jet_spanned(cfg: LatticeConfiguration, k: int) -> bool:
    # degenerate configurations count monomials in their own affine span
    return hilbert_function(cfg, k) == comb(dimension(cfg) + k, k)


def _falling_binomial(x: int, a: int) -> int:
    # x (x-1) ... (x-a+1) / a!  for integer x
    num = 1
    for j in range(a):
        num *= x - j
    den = 1
    for j in range(2, a + 1):
        den *= j
    return num // den


def falling_factorial_matrix(n: int, k: int) -> IntMatrix:
    """Evaluations of the binomial polynomials ``m_alpha`` on the simplex points.

    Rows and columns are both indexed by the lattice points of ``k * simplex``
    in the ``A^(k)`` order; the result is unit upper triangular.
    """
    pts = simplex_points(n, k)
    rows = [[prod(_falling_binomial(b[i], a[i]) for i in range(n)) for b in pts] for a in pts]
    return IntMatrix.from_rows(rows, len(pts))

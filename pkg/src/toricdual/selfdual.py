"""Deciding k-selfduality of a lattice configuration.

A configuration is k-selfdual exactly when it is knap (no point can be
separated from the others by a polynomial of degree <= k) and, grouping the
points by the line through the origin that their kernel coordinates ``b_i``
lie on, every group's indicator vector lies in the row space of ``A``.
"""

from __future__ import annotations

import enum
import itertools
import warnings
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Optional, Sequence

from .config import (
    AffineMap,
    LatticeConfiguration,
    homogenize,
    is_normalized,
    normalize_lattice,
    to_dict as config_to_dict,
)
from .errors import (
    EmptyKernel,
    Inapplicable,
    NormalizationWarning,
    NotAPartition,
    ParentNotSelfdual,
    TooLarge,
    ZeroBVector,
)
from .exactla import IntMatrix, RowspanCertificate, in_rowspan, pivot_columns, solve
from .osculation import JetData, is_generically_jet_spanned, jet_matrix

__all__ = [
    "Diagnostic",
    "PAPER_CONTRADICTION",
    "KnapReport",
    "Line",
    "LinePartition",
    "SelfdualVerdict",
    "SubsetVerdict",
    "knap_check",
    "b_vectors",
    "line_partition",
    "classify",
    "cayley_with_respect_to",
    "detect_two_cayley",
    "extract_DJ",
    "subconfiguration_verdict",
]

PAPER_CONTRADICTION = "PaperContradiction"


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    message: str

    def to_dict(self) -> dict:
        return {"kind": self.kind, "message": self.message}


@dataclass(frozen=True)
class KnapReport:
    is_knap: bool
    offending_indices: tuple[int, ...]
    torus_witness: Optional[tuple[int, ...]]
    J: tuple[int, ...]
    witness_t: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "is_knap": self.is_knap,
            "offending_indices": list(self.offending_indices),
            "J": list(self.J),
            "torus_witness": None if self.torus_witness is None else list(self.torus_witness),
            "witness_t": self.witness_t,
        }


@dataclass(frozen=True)
class Line:
    direction: tuple[int, ...]
    members: tuple[int, ...]
    multipliers: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "direction": list(self.direction),
            "members": list(self.members),
            "multipliers": list(self.multipliers),
        }


@dataclass(frozen=True)
class LinePartition:
    lines: tuple[Line, ...]

    @property
    def r(self) -> int:
        return len(self.lines)

    def blocks(self) -> list[tuple[int, ...]]:
        return [ln.members for ln in self.lines]

    def indicator(self, j: int, size: int) -> list[int]:
        members = set(self.lines[j].members)
        return [int(i in members) for i in range(size)]

    def to_dict(self) -> dict:
        return {"r": self.r, "lines": [ln.to_dict() for ln in self.lines]}


@dataclass(frozen=True)
class SelfdualVerdict:
    k: int
    n: int
    N: int
    c_k: int
    d_k: int
    knap: KnapReport
    kernel: tuple[tuple[int, ...], ...]
    partition: Optional[LinePartition]
    eL_certificates: tuple[RowspanCertificate, ...]
    selfdual: bool
    reason: str
    cayley_r: Optional[int] = None
    configuration: Optional[LatticeConfiguration] = None
    normalization: Optional[AffineMap] = None
    diagnostics: tuple[Diagnostic, ...] = ()
    dual_dim_check: Optional[object] = None

    @property
    def contradictions(self) -> list[Diagnostic]:
        return [d for d in self.diagnostics if d.kind == PAPER_CONTRADICTION]

    def to_dict(self) -> dict:
        out = {
            "k": self.k,
            "n": self.n,
            "N": self.N,
            "c_k": self.c_k,
            "d_k": self.d_k,
            "selfdual": self.selfdual,
            "reason": self.reason,
            "cayley_r": self.cayley_r,
            "knap": self.knap.to_dict(),
            "kernel": [list(v) for v in self.kernel],
            "partition": None if self.partition is None else self.partition.to_dict(),
            "eL_certificates": [c.to_dict() for c in self.eL_certificates],
            "diagnostics": [d.to_dict() for d in self.diagnostics],
        }
        if self.configuration is not None:
            out["configuration"] = config_to_dict(self.configuration)
        if self.normalization is not None:
            out["normalization"] = {
                "origin": list(self.normalization.origin),
                "basis": [list(b) for b in self.normalization.basis],
            }
        if self.dual_dim_check is not None:
            out["dual_dim_check"] = self.dual_dim_check.to_dict()
        return out


class SubsetVerdict(enum.Enum):
    NOT_KNAP = "NotKnap"
    SELFDUAL = "Selfdual"
    PAPER_CONTRADICTION = PAPER_CONTRADICTION


# -- knap ------------------------------------------------------------------


def _torus_witness(kernel: Sequence[Sequence[int]], size: int) -> tuple[tuple[int, ...], int]:
    """Combination ``sum_j t^j nu^j`` with no zero coordinate, smallest ``t >= 1``.

    Each coordinate is a nonzero polynomial in ``t`` of degree < c, so at
    most ``size * (c - 1)`` values of ``t`` can fail.
    """
    c = len(kernel)
    for t in range(1, size * max(c - 1, 0) + 2):
        p = [sum(t ** j * kernel[j][i] for j in range(c)) for i in range(size)]
        if all(p):
            return tuple(p), t
    raise AssertionError("no torus witness found although every coordinate is nonzero")


def knap_check(cfg: LatticeConfiguration, k: int, jet: Optional[JetData] = None) -> KnapReport:
    """Knap test computed two ways: ``e_i`` rowspan queries and a kernel zero scan.

    A disagreement between the two would be a bug in the linear algebra and
    raises ``AssertionError``.
    """
    jet = jet if jet is not None else jet_matrix(cfg, k)
    size = jet.matrix.cols
    offending = []
    for i in range(size):
        e = [0] * size
        e[i] = 1
        if in_rowspan(jet.matrix, e, kernel=jet.kernel).member:
            offending.append(i)
    J = tuple(i for i in range(size) if all(v[i] == 0 for v in jet.kernel))
    if tuple(offending) != J:
        raise AssertionError(f"rowspan test {offending} disagrees with kernel scan {list(J)}")
    if J:
        return KnapReport(False, J, None, J)
    witness, t = _torus_witness(jet.kernel.vectors, size)
    return KnapReport(True, (), witness, (), t)


# -- lines -----------------------------------------------------------------


def b_vectors(jet: JetData) -> list[tuple[int, ...]]:
    """Coordinate ``i`` of every kernel basis vector, one vector per point."""
    if jet.c_k == 0:
        raise EmptyKernel(f"A^({jet.k}) has trivial kernel")
    return [tuple(v[i] for v in jet.kernel) for i in range(jet.matrix.cols)]


def line_partition(bs: Sequence[Sequence[int]]) -> LinePartition:
    """Group the b-vectors by the line through the origin they span.

    Lines are listed in order of their smallest member, each with a primitive
    direction whose first nonzero entry is positive; ``b_i = mu_i * direction``.
    """
    groups: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for i, b in enumerate(bs):
        g = reduce(gcd, b, 0)
        if g == 0:
            raise ZeroBVector(i)
        lead = next(x for x in b if x)
        if lead < 0:
            g = -g
        beta = tuple(x // g for x in b)
        groups.setdefault(beta, []).append((i, g))
    lines = tuple(
        Line(beta, tuple(i for i, _ in members), tuple(mu for _, mu in members))
        for beta, members in groups.items()
    )
    return LinePartition(lines)


# -- classification --------------------------------------------------------


def _prepare(cfg: LatticeConfiguration, warn: bool) -> tuple[LatticeConfiguration, Optional[AffineMap]]:
    if is_normalized(cfg):
        return cfg, None
    ncfg, amap = normalize_lattice(cfg)
    if warn:
        warnings.warn(
            f"configuration{' ' + repr(cfg.label) if cfg.label else ''} does not generate "
            f"its lattice; classifying an isomorphic copy in dimension {ncfg.ambient_dim}",
            NormalizationWarning,
            stacklevel=3,
        )
    return ncfg, amap


def classify(
    cfg: LatticeConfiguration,
    k: int,
    *,
    crosscheck: bool = False,
    trials: int = 3,
    seed: int = 0,
    warn: bool = True,
) -> SelfdualVerdict:
    """Decide whether ``X_A`` is k-selfdual, with all certificates attached."""
    ncfg, amap = _prepare(cfg, warn)
    n = ncfg.ambient_dim
    N = len(ncfg.points) - 1
    jet = jet_matrix(ncfg, k)
    knap = knap_check(ncfg, k, jet)
    diags: list[Diagnostic] = []
    if amap is not None:
        diags.append(Diagnostic("Normalized", "points re-expressed in the lattice they generate"))

    partition = None
    certs: tuple[RowspanCertificate, ...] = ()
    cayley_r = None
    if jet.c_k == 0:
        selfdual, reason = False, "EmptyKernel"
        diags.append(Diagnostic(
            "EmptyKernel",
            f"A^({k}) has full column rank, so no hyperplane osculates to order {k}",
        ))
    elif not knap.is_knap:
        selfdual, reason = False, "NotKnap"
    else:
        a = homogenize(ncfg)
        partition = line_partition(b_vectors(jet))
        certs = tuple(in_rowspan(a, partition.indicator(j, N + 1)) for j in range(partition.r))
        all_members = all(c.member for c in certs)
        if jet.c_k == 1:
            selfdual = True
            if not all_members:
                diags.append(Diagnostic(PAPER_CONTRADICTION, "c_k = 1 but the all-ones vector is not in rowspan(A)"))
        else:
            selfdual = all_members
        reason = "Selfdual" if selfdual else "NotCayley"
        if partition.r < jet.c_k:
            diags.append(Diagnostic(PAPER_CONTRADICTION, f"{partition.r} lines for kernel dimension {jet.c_k}"))
        if selfdual:
            cayley_r = partition.r
            diags.extend(_selfdual_consequences(ncfg, k, jet, partition))

    verdict = SelfdualVerdict(
        k=k,
        n=n,
        N=N,
        c_k=jet.c_k,
        d_k=jet.d_k,
        knap=knap,
        kernel=jet.kernel.vectors,
        partition=partition,
        eL_certificates=certs,
        selfdual=selfdual,
        reason=reason,
        cayley_r=cayley_r,
        configuration=cfg,
        normalization=amap,
        diagnostics=tuple(diags),
    )
    if crosscheck and jet.c_k >= 1:
        from .dualdim import attach_crosscheck

        verdict = attach_crosscheck(verdict, ncfg, trials=trials, seed=seed)
    return verdict


def _selfdual_consequences(cfg, k, jet, partition) -> list[Diagnostic]:
    """Re-derive what selfduality implies; every failure becomes a diagnostic."""
    out = []
    bs = b_vectors(jet)
    for j, line in enumerate(partition.lines):
        total = [sum(bs[i][c] for i in line.members) for c in range(jet.c_k)]
        if any(total):
            out.append(Diagnostic(PAPER_CONTRADICTION, f"b-vectors on line {j} sum to {total}"))
    n = cfg.ambient_dim
    if jet.d_k < jet.N - n:
        out.append(Diagnostic(PAPER_CONTRADICTION, f"d_k = {jet.d_k} < N - n = {jet.N - n}"))
    if k >= 2 and jet.c_k >= 2 and is_generically_jet_spanned(cfg, k):
        out.append(Diagnostic(PAPER_CONTRADICTION, "selfdual with c_k >= 2 yet generically jet spanned"))
    return out


# -- Cayley structures -----------------------------------------------------


def cayley_with_respect_to(cfg: LatticeConfiguration, parts: Iterable[Iterable[int]]) -> bool:
    """True iff every part's indicator vector lies in the row space of ``A``."""
    parts = [tuple(p) for p in parts]
    size = len(cfg.points)
    seen = [i for p in parts for i in p]
    if any(not p for p in parts) or sorted(seen) != list(range(size)):
        raise NotAPartition(f"{parts} is not a partition of 0..{size - 1}")
    a = homogenize(cfg)
    for p in parts:
        members = set(p)
        if not in_rowspan(a, [int(i in members) for i in range(size)]).member:
            return False
    return True


def detect_two_cayley(cfg: LatticeConfiguration, bound: int = 24) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """A split of the points into two parts on parallel hyperplanes, if any.

    An affine functional is fixed by its values on an affine basis of the
    points, so trying every 0/1 assignment on such a basis is exhaustive.
    """
    size = len(cfg.points)
    if size > bound:
        raise TooLarge(f"{size} points exceeds the bound {bound}")
    a = homogenize(cfg)
    basis_cols = pivot_columns(a)
    sub = IntMatrix.from_rows([[a[i, c] for c in basis_cols] for i in range(a.rows)], len(basis_cols))
    # coefficients expressing every column through the basis columns
    coords = [solve(sub, a.column(j)) for j in range(size)]
    for values in itertools.product((0, 1), repeat=len(basis_cols)):
        if len(set(values)) < 2:
            continue
        f = [sum(c * v for c, v in zip(coord, values)) for coord in coords]
        if all(x in (0, 1) for x in f):
            ones = tuple(i for i in range(size) if f[i] == 1)
            zeros = tuple(i for i in range(size) if f[i] == 0)
            if ones and zeros:
                first, second = (ones, zeros) if 0 in ones else (zeros, ones)
                return first, second
    return None


# -- subconfigurations -----------------------------------------------------


def extract_DJ(cfg: LatticeConfiguration, k: int) -> LatticeConfiguration:
    """Drop the points where the (one-dimensional) kernel of ``A^(k)`` vanishes."""
    jet = jet_matrix(cfg, k)
    if jet.c_k != 1:
        raise Inapplicable(f"needs c_k = 1, got c_{k} = {jet.c_k}")
    (nu,) = jet.kernel.vectors
    keep = [i for i, x in enumerate(nu) if x != 0]
    if len(keep) == len(nu):
        raise Inapplicable(f"configuration is already {k}nap")
    label = f"{cfg.label} minus J" if cfg.label else None
    return cfg.subset(keep, label)


def subconfiguration_verdict(
    cfg: LatticeConfiguration,
    k: int,
    subset: Iterable[int],
    parent: Optional[SelfdualVerdict] = None,
) -> SubsetVerdict:
    """Classify a subset of a selfdual configuration: it is either not knap or selfdual."""
    parent = parent if parent is not None else classify(cfg, k, warn=False)
    if not parent.selfdual:
        raise ParentNotSelfdual(f"configuration is not {k}-selfdual ({parent.reason})")
    idx = sorted(set(subset))
    if not idx:
        raise ValueError("empty subset")
    v = classify(cfg.subset(idx), k, warn=False)
    if not v.knap.is_knap:
        return SubsetVerdict.NOT_KNAP
    if v.selfdual:
        return SubsetVerdict.SELFDUAL
    return SubsetVerdict.PAPER_CONTRADICTION

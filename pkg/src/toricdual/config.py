"""Lattice configurations, their homogenized matrices and file formats."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, DuplicatePoint, EmptyConfiguration, ParseError
from .exactla import IntMatrix, hermite_normal_form, maximal_minor_gcd, rank, solve

__all__ = [
    "LatticeConfiguration",
    "AffineMap",
    "validate",
    "homogenize",
    "dimension",
    "normalize_lattice",
    "is_normalized",
    "parse_text",
    "parse_json",
    "load",
    "dumps_text",
    "to_dict",
]

Point = tuple[int, ...]


@dataclass(frozen=True)
class LatticeConfiguration:
    ambient_dim: int
    points: tuple[Point, ...]
    label: Optional[str] = None

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def N(self) -> int:
        """Index of the last point; the configuration has ``N + 1`` points."""
        return len(self.points) - 1

    def subset(self, indices: Iterable[int], label: Optional[str] = None) -> "LatticeConfiguration":
        return LatticeConfiguration(self.ambient_dim, tuple(self.points[i] for i in indices), label)

    def with_label(self, label: Optional[str]) -> "LatticeConfiguration":
        return LatticeConfiguration(self.ambient_dim, self.points, label)


@dataclass(frozen=True)
class AffineMap:
    """``old_point = origin + coords @ basis`` (basis rows live in the old lattice)."""

    origin: Point
    basis: tuple[Point, ...]

    def apply(self, coords: Sequence[int]) -> Point:
        out = list(self.origin)
        for c, b in zip(coords, self.basis):
            for j, x in enumerate(b):
                out[j] += c * x
        return tuple(out)

    @property
    def is_identity(self) -> bool:
        n = len(self.origin)
        return (not any(self.origin) and len(self.basis) == n
                and all(self.basis[i][j] == (i == j) for i in range(n) for j in range(n)))


def validate(points: Iterable[Sequence[int]], label: Optional[str] = None) -> LatticeConfiguration:
    """Check a point list and wrap it as a configuration.

    Points must be nonempty integer vectors of a common length and pairwise
    distinct; order is preserved because indices show up in certificates.
    """
    pts = []
    for p in points:
        q = []
        for x in p:
            if isinstance(x, bool) or int(x) != x:
                raise ParseError(f"non-integer coordinate {x!r}")
            q.append(int(x))
        pts.append(tuple(q))
    if not pts:
        raise EmptyConfiguration("configuration has no points")
    n = len(pts[0])
    for i, p in enumerate(pts):
        if len(p) != n:
            raise DimensionMismatch(f"point {i} has dimension {len(p)}, expected {n}")
    seen: dict[Point, int] = {}
    for i, p in enumerate(pts):
        if p in seen:
            raise DuplicatePoint(seen[p], i)
        seen[p] = i
    return LatticeConfiguration(n, tuple(pts), label)


def homogenize(cfg: LatticeConfiguration) -> IntMatrix:
    """The ``(n+1) x (N+1)`` matrix whose columns are ``(1, a_i)``."""
    rows = [[1] * len(cfg.points)]
    rows += [[p[j] for p in cfg.points] for j in range(cfg.ambient_dim)]
    return IntMatrix.from_rows(rows, len(cfg.points))


def dimension(cfg: LatticeConfiguration) -> int:
    """Dimension of the affine span (= dimension of the toric variety)."""
    return rank(homogenize(cfg)) - 1


def is_normalized(cfg: LatticeConfiguration) -> bool:
    a = homogenize(cfg)
    return dimension(cfg) == cfg.ambient_dim and maximal_minor_gcd(a) == 1


def normalize_lattice(cfg: LatticeConfiguration) -> tuple[LatticeConfiguration, AffineMap]:
    """Re-express the points in a basis of the lattice their differences generate.

    The result has full-dimensional affine span and its homogenized matrix has
    coprime maximal minors.  Already-normalized input comes back unchanged
    with the identity map.
    """
    n = cfg.ambient_dim
    if is_normalized(cfg):
        return cfg, AffineMap((0,) * n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))
    origin = cfg.points[0]
    diffs = [[x - o for x, o in zip(p, origin)] for p in cfg.points]
    h, piv = hermite_normal_form(diffs, n)
    basis = [row for row in h[:len(piv)]]
    # solve c @ basis = d exactly; the Hermite basis generates the difference
    # lattice, so the coordinates are integral
    bt = IntMatrix.from_rows([[basis[i][j] for i in range(len(basis))] for j in range(n)], len(basis)) \
        if basis else None
    new_points = []
    for d in diffs:
        if bt is None:
            new_points.append(())
            continue
        c = solve(bt, d)
        assert c is not None and all(x.denominator == 1 for x in c)
        new_points.append(tuple(int(x) for x in c))
    out = LatticeConfiguration(len(basis), tuple(new_points), cfg.label)
    return out, AffineMap(tuple(origin), tuple(tuple(b) for b in basis))


# -- file formats ----------------------------------------------------------


def parse_text(text: str, label: Optional[str] = None) -> LatticeConfiguration:
    """One point per line, whitespace-separated integers, ``#`` starts a comment."""
    pts = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            p = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        if width is None:
            width = len(p)
        elif len(p) != width:
            raise ParseError(f"line {lineno}: ragged row ({len(p)} entries, expected {width})")
        pts.append(p)
    return validate(pts, label)


def parse_json(obj, label: Optional[str] = None) -> LatticeConfiguration:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from None
    if isinstance(obj, dict) and "configuration" in obj:
        obj = obj["configuration"]
    if not isinstance(obj, dict) or "points" not in obj:
        raise ParseError("expected an object with a 'points' field")
    pts = obj["points"]
    if not isinstance(pts, list) or not all(isinstance(p, list) for p in pts):
        raise ParseError("'points' must be an array of integer arrays")
    widths = {len(p) for p in pts}
    if len(widths) > 1:
        raise ParseError("ragged rows in 'points'")
    for p in pts:
        for x in p:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ParseError(f"non-integer coordinate {x!r}")
    cfg = validate(pts, obj.get("label", label))
    dim = obj.get("dim")
    if dim is not None and dim != cfg.ambient_dim:
        raise ParseError(f"'dim' is {dim} but points have dimension {cfg.ambient_dim}")
    return cfg


def load(path: str) -> LatticeConfiguration:
    """Read a configuration file; JSON is detected by content, not extension."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def to_dict(cfg: LatticeConfiguration) -> dict:
    out = {"dim": cfg.ambient_dim, "points": [list(p) for p in cfg.points]}
    if cfg.label is not None:
        out["label"] = cfg.label
    return out


def dumps_text(cfg: LatticeConfiguration) -> str:
    lines = []
    if cfg.label:
        lines.append(f"# {cfg.label}")
    lines += [" ".join(str(x) for x in p) for p in cfg.points]
    return "\n".join(lines) + "\n"

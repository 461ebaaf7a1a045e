"""Generators for the standard constructions and a catalog of named examples."""

from __future__ import annotations

import itertools
import random
from math import comb
from typing import Iterable, Optional, Sequence

from .config import LatticeConfiguration, validate
from .errors import BudgetExhausted, UnknownFixture
from .osculation import hilbert_function, jet_matrix

__all__ = [
    "segment",
    "box",
    "cube_vertices",
    "simplex",
    "cayley",
    "join",
    "togliatti",
    "three_root_conic",
    "aprime",
    "APRIME_EXTRAS",
    "mulliken",
    "fixture",
    "FIXTURES",
    "random_general",
]


def segment(d: int) -> LatticeConfiguration:
    if d < 1:
        raise ValueError("segment length must be at least 1")
    return validate([(i,) for i in range(d + 1)], f"segment({d})")


def box(*lengths: int) -> LatticeConfiguration:
    """All lattice points of ``[0, l_1] x ... x [0, l_m]``."""
    if not lengths or any(l < 1 for l in lengths):
        raise ValueError("box side lengths must be positive")
    pts = itertools.product(*(range(l + 1) for l in lengths))
    return validate(pts, f"box{tuple(lengths)}")


def cube_vertices(n: int) -> LatticeConfiguration:
    if n < 1:
        raise ValueError("cube dimension must be at least 1")
    return validate(itertools.product((0, 1), repeat=n), f"cube_vertices({n})")


def simplex(n: int, k: int) -> LatticeConfiguration:
    """Lattice points of ``k`` times the standard simplex, in jet-row order."""
    from .osculation import simplex_points

    return validate(simplex_points(n, k), f"simplex({n},{k})")


def cayley(cfgs: Sequence[LatticeConfiguration], label: Optional[str] = None) -> LatticeConfiguration:
    """Place configuration ``j`` over the vertex ``e_j`` of a simplex.

    The first simplex coordinate is dropped (it is an affine function of the
    others), so ``r`` configurations in ``Z^d`` give points in ``Z^(r-1+d)``.
    Lower-dimensional inputs are padded with zeros.
    """
    cfgs = list(cfgs)
    if not cfgs:
        raise ValueError("cayley needs at least one configuration")
    r = len(cfgs)
    d = max(c.ambient_dim for c in cfgs)
    pts = []
    for j, c in enumerate(cfgs):
        head = tuple(int(j == i + 1) for i in range(r - 1))
        for p in c.points:
            pts.append(head + tuple(p) + (0,) * (d - len(p)))
    if label is None:
        label = "cayley(" + ", ".join(c.label or "?" for c in cfgs) + ")"
    return validate(pts, label)


def join(cfgs: Sequence[LatticeConfiguration], label: Optional[str] = None) -> LatticeConfiguration:
    """Configuration of the join: each input in its own block of coordinates.

    This is the Cayley configuration of the inputs placed in complementary
    coordinate subspaces, so the homogenized matrix is block diagonal up to
    unimodular row operations.
    """
    cfgs = list(cfgs)
    if len(cfgs) < 2:
        raise ValueError("join needs at least two configurations")
    dims = [c.ambient_dim for c in cfgs]
    total = sum(dims)
    padded = []
    offset = 0
    for c, d in zip(cfgs, dims):
        pts = [(0,) * offset + tuple(p) + (0,) * (total - offset - d) for p in c.points]
        padded.append(LatticeConfiguration(total, tuple(pts), c.label))
        offset += d
    if label is None:
        label = "join(" + ", ".join(c.label or "?" for c in cfgs) + ")"
    return cayley(padded, label)


TOGLIATTI = ((0, 0), (1, 0), (0, 1), (2, 1), (1, 2), (2, 2))


def togliatti() -> LatticeConfiguration:
    return validate(TOGLIATTI, "togliatti")


def three_root_conic(m1: int, m2: int, m3: int) -> LatticeConfiguration:
    """The six points ``(m_i, m_j)``, ``i != j``, on the conic ``(f(x)-f(y))/(x-y)``."""
    ms = (m1, m2, m3)
    if len(set(ms)) != 3:
        raise ValueError("roots must be distinct")
    pts = [(ms[i], ms[j]) for i in range(3) for j in range(3) if i != j]
    return validate(pts, f"three_root_conic{ms}")


APRIME = ((0, 0), (1, 0), (0, 1), (3, 1), (1, 2))
APRIME_EXTRAS = ((3, 3), (4, 3), (4, 2))


def aprime(extras: Iterable[Sequence[int]] = ()) -> LatticeConfiguration:
    """Five points on the conic ``x^2 - 2xy + 2y^2 - x - 2y`` plus chosen extra points on it."""
    extras = [tuple(e) for e in extras]
    for e in extras:
        if e not in APRIME_EXTRAS:
            raise ValueError(f"{e} is not one of the extra lattice points {APRIME_EXTRAS}")
    return validate(list(APRIME) + extras, f"aprime+{extras}" if extras else "aprime")


def mulliken(c: int, d: int, e: int) -> LatticeConfiguration:
    """Ten-point centrally symmetric family; meaningful for ``d != 1`` and ``d != 2(c-1)``."""
    if d == 1 or d == 2 * (c - 1):
        raise ValueError("parameters need d != 1 and d != 2(c-1)")
    pts = [(0, 0), (1, 0), (0, 1), (2, 1), (c - 1, e), (c, d - 1), (c, d),
           (c - 1, d), (c - 2, d - 1), (1, d - e)]
    return validate(pts, f"mulliken{(c, d, e)}")


# Figures are transcribed from dot diagrams, bottom row y = 0.
_FIGURE3 = [(x, 0) for x in (0, 1, 3, 4)] + [(x, 1) for x in (0, 1, 3, 4)] + [(2, 2)] \
    + [(x, 3) for x in (0, 1, 4)] + [(x, 4) for x in (0, 1, 3, 4)]

FIXTURES: dict[str, dict] = {
    "togliatti": {"points": list(TOGLIATTI), "k": 2, "selfdual": True},
    "togliatti_center": {"points": list(TOGLIATTI) + [(1, 1)], "k": 2, "selfdual": False},
    "figure1": {"points": [(0, 0), (1, 0), (1, 1), (0, 2)], "k": 1, "selfdual": True},
    "figure2_hexagon": {"points": list(APRIME) + [(4, 3)], "k": 2, "selfdual": True},
    "octagon": {"points": list(APRIME) + list(APRIME_EXTRAS), "k": 3, "selfdual": True},
    "figure3": {"points": _FIGURE3, "k": 4, "selfdual": True},
    "twisted_cubic_cone": {"points": [(1, 0), (0, 0), (0, 1), (0, 2), (0, 3)], "k": 1, "selfdual": False},
    "blowup_veronese_segre": {
        "points": [(1, 0), (2, 0), (3, 0), (0, 1), (1, 1), (2, 1), (3, 1), (0, 2), (1, 2), (2, 2)],
        "k": 3,
        "selfdual": True,
    },
    "blowup_veronese_segre_alt": {
        "points": [(2, 0), (3, 0), (1, 1), (2, 1), (3, 1), (0, 2), (1, 2), (2, 2), (0, 3), (1, 3)],
        "k": 3,
        "selfdual": True,
    },
    "mulliken_5_4_2": {"points": None, "k": 3, "selfdual": True},
}


def fixture(name: str) -> LatticeConfiguration:
    """Named example configurations; ``FIXTURES[name]`` also records the expected verdict."""
    if name not in FIXTURES:
        raise UnknownFixture(name)
    if name == "mulliken_5_4_2":
        return mulliken(5, 4, 2).with_label(name)
    return validate(FIXTURES[name]["points"], name)


def random_general(
    n: int,
    k: int,
    seed: int,
    box_size: int,
    budget: int = 1000,
    return_attempts: bool = False,
):
    """``C(n+k, k) + 1`` random lattice points in ``[0, box_size]^n`` in general position.

    Draws are repeated until ``A^(k)`` has full rank ``C(n+k, k)`` and the
    points are knap; lattice sampling can hit the special locus, hence the
    resampling ``budget``.
    """
    size = comb(n + k, k) + 1
    if (box_size + 1) ** n < size:
        raise BudgetExhausted(f"[0,{box_size}]^{n} has fewer than {size} lattice points")
    rng = random.Random(seed)
    grid = list(itertools.product(range(box_size + 1), repeat=n))
    for attempt in range(budget):
        pts = rng.sample(grid, size)
        cfg = validate(pts, f"random_general(n={n}, k={k}, seed={seed}, box={box_size})")
        if hilbert_function(cfg, k) != size - 1:
            continue
        jet = jet_matrix(cfg, k)
        if all(jet.kernel[0]):
            return (cfg, attempt) if return_attempts else cfg
    raise BudgetExhausted(f"no general configuration in {budget} draws")

"""Catalog of published verdicts re-derived from scratch (backs ``verify-paper``)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Optional

from .config import LatticeConfiguration, dimension
from .dualdim import dual_dimension
from .families import (
    APRIME_EXTRAS,
    aprime,
    box,
    cayley,
    cube_vertices,
    fixture,
    join,
    mulliken,
    segment,
    three_root_conic,
    togliatti,
)
from .osculation import is_generically_jet_spanned, jet_matrix
from .selfdual import classify, extract_DJ

__all__ = ["Check", "CheckResult", "KNOWN_NOTES", "build_checks", "run_checks"]

KNOWN_NOTES = (
    "Hilbert function: the inline identity binom(n+k,k) - rk A^(k) = binom(n+k,k) + 1 - d_k "
    "is off by one between its two sides and disagrees with the value N required when c_k = 1; "
    "this package reports H(k) = rk A^(k).",
    "Three-root conic: the sentence concluding 'c_1 = 1' from rk A^(2) = 5 is about c_2.",
    "Mulliken family: 3nap with c_3 = 1 fails for some admissible (c,d,e), e.g. (5,7,4) = (j,m) = (5,2) "
    "and (7,6,4) = (7,1); the kernel of A^(3) vanishes on two points and the dual is degenerate.",
)


@dataclass(frozen=True)
class Check:
    name: str
    claim: str
    run: Callable[[Callable[[str], LatticeConfiguration]], tuple[bool, str]]


@dataclass(frozen=True)
class CheckResult:
    name: str
    claim: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "claim": self.claim, "passed": self.passed, "detail": self.detail}


def _verdict(cfg, k, selfdual, c=None, knap=None):
    v = classify(cfg, k, warn=False)
    ok = v.selfdual == selfdual and not v.contradictions
    if c is not None:
        ok = ok and v.c_k == c
    if knap is not None:
        ok = ok and v.knap.is_knap == knap
    return ok, f"selfdual={v.selfdual} reason={v.reason} c_{k}={v.c_k} knap={v.knap.is_knap}"


def _selfdual_check(name, claim, fixture_name, k, selfdual=True, c=None, knap=None) -> Check:
    return Check(name, claim, lambda get: _verdict(get(fixture_name), k, selfdual, c, knap))


def _figure3(get):
    cfg = get("figure3")
    jet = jet_matrix(cfg, 4)
    v = classify(cfg, 4, warn=False)
    ok = jet.rank == 15 and jet.c_k == 1 and v.selfdual
    return ok, f"rank A^(4)={jet.rank} c_4={jet.c_k} knap={v.knap.is_knap} selfdual={v.selfdual}"


def _twisted_cone(get):
    cfg = get("twisted_cubic_cone")
    v = classify(cfg, 1, warn=False)
    d = dual_dimension(cfg, 1, trials=3, seed=0)
    ok = not v.knap.is_knap and v.knap.offending_indices == (0,) and d.degenerate and not v.selfdual
    return ok, f"knap={v.knap.is_knap} offending={list(v.knap.offending_indices)} dual_dim={d.computed_dim} degenerate={d.degenerate}"


def _togliatti_center(get):
    cfg = get("togliatti_center")
    v = classify(cfg, 2, warn=False)
    dj = extract_DJ(cfg, 2)
    ok = not v.knap.is_knap and set(dj.points) == set(togliatti().points)
    return ok, f"knap={v.knap.is_knap} D_J={list(dj.points)}"


def _aprime_counts(get):
    details = []
    ok = True
    for e in APRIME_EXTRAS:
        good, d = _verdict(aprime([e]), 2, True)
        ok &= good
        details.append(f"+{e}: {d}")
    for i in range(3):
        pair = [x for j, x in enumerate(APRIME_EXTRAS) if j != i]
        good, d = _verdict(aprime(pair), 2, False)
        ok &= good
        details.append(f"+{pair}: {d}")
    return ok, "; ".join(details)


def _three_root(get):
    cfg = three_root_conic(0, 1, 2)
    jet = jet_matrix(cfg, 2)
    ok, d = _verdict(cfg, 2, True, c=1)
    q1 = lambda x, y: x * x - x * y + y * y - x - y
    f = lambda x: x * (x - 1) * (x - 2)
    # q2 = (f(x) - f(y)) / (x - y) expanded for roots 0, 1, 2
    q2 = lambda x, y: x * x + x * y + y * y - 3 * x - 3 * y + 2
    refl = all(q2(2 - x, y) == q1(x, y) for x in range(-3, 4) for y in range(-3, 4))
    divides = all((f(x) - f(y)) == (x - y) * q2(x, y) for x in range(-3, 4) for y in range(-3, 4))
    return ok and jet.rank == 5 and refl and divides, f"{d} rank={jet.rank} reflection={refl}"


def _scroll(get):
    details = []
    ok = True
    for k, r in ((2, 2), (2, 3), (3, 2)):
        good, d = _verdict(cayley([segment(k)] * r), k, True, c=r - 1)
        ok &= good
        details.append(f"(k={k},r={r}) {d}")
    good, d = _verdict(cayley([segment(1), segment(2)]), 1, False)
    ok &= good
    details.append(f"unbalanced (1,2): {d}")
    return ok, "; ".join(details)


def _join(get):
    cfg = join([segment(3), segment(3)])
    ok, d = _verdict(cfg, 2, True, c=2)
    dd = dual_dimension(cfg, 2, trials=3, seed=0)
    ok = ok and dimension(cfg) == 3 and dd.computed_dim == 3
    return ok, f"{d} dim={dimension(cfg)} dual_dim={dd.computed_dim}"


def _general_rank_simplex(get):
    from .families import simplex

    ok = all(is_generically_jet_spanned(simplex(n, k), k) for n in (1, 2, 3) for k in (1, 2, 3))
    return ok, "simplex jet matrices have full rank"


def _cb(get):
    a, da = _verdict(box(2, 2), 3, True, c=1)
    b, db = _verdict(cube_vertices(3), 2, True, c=1)
    return a and b, f"nine points: {da}; eight points: {db}"


def build_checks() -> list[Check]:
    checks = [
        _selfdual_check("togliatti", "Togliatti hexagon is 2nap, c_2 = 1, 2-selfdual", "togliatti", 2, True, 1, True),
        Check("togliatti_center", "adding the interior point breaks 2nap; D_J recovers the hexagon", _togliatti_center),
        Check("three_root_conic", "three-root conic on (0,1,2) is 2-selfdual and reflects the Togliatti conic", _three_root),
        Check("aprime", "A' plus one extra point is 2-selfdual, plus two is not", _aprime_counts),
        _selfdual_check("octagon", "A' plus all three extra points is 3-selfdual", "octagon", 3),
        _selfdual_check("figure1", "the quadrilateral (1:t1:t1t2:t2^2) is 1-selfdual", "figure1", 1),
        _selfdual_check("figure2_hexagon", "octagon minus two non-adjacent points is 2-selfdual", "figure2_hexagon", 2),
        Check("figure3", "sixteen-point configuration has rk A^(4) = 15, c_4 = 1, 4-selfdual", _figure3),
        Check("twisted_cubic_cone", "cone over the twisted cubic is not 1nap; its dual is degenerate", _twisted_cone),
        _selfdual_check("mulliken", "Mulliken(5,4,2) is 3nap with c_3 = 1, 3-selfdual", "mulliken_5_4_2", 3, True, 1, True),
        _selfdual_check("blowup_veronese_segre", "blown-up Veronese-Segre surface is 3-selfdual", "blowup_veronese_segre", 3),
        Check("cube_vertices", "unit n-cube vertices are (n-1)-selfdual with c = 1 (n = 2, 3, 4)",
              lambda get: _all(_verdict(cube_vertices(n), n - 1, True, c=1) for n in (2, 3, 4))),
        Check("boxes", "boxes (2,2), (3,2), (2,2,2) are (sum - 1)-selfdual with c = 1",
              lambda get: _all(_verdict(box(*l), sum(l) - 1, True, c=1) for l in ((2, 2), (3, 2), (2, 2, 2)))),
        Check("product_box", "Cayley of three unit squares is 2-selfdual with c_2 = 2",
              lambda get: _verdict(cayley([box(1, 1)] * 3), 2, True, c=2)),
        Check("scrolls", "balanced scrolls are k-selfdual with c_k = r - 1; unbalanced are not", _scroll),
        Check("join", "join of two twisted cubics is a 2-selfdual threefold with c_2 = 2", _join),
        Check("cayley_bacharach", "nine-point and eight-point complete intersections are selfdual", _cb),
        Check("simplex_full_rank", "simplex configurations are generically jet spanned", _general_rank_simplex),
        Check("mulliken_family", "Mulliken(6,5,3) is 3-selfdual", lambda get: _verdict(mulliken(6, 5, 3), 3, True, c=1)),
    ]
    return checks


def _all(results):
    results = list(results)
    return all(ok for ok, _ in results), "; ".join(d for _, d in results)


def run_checks(overrides: Optional[Mapping[str, LatticeConfiguration]] = None) -> list[CheckResult]:
    """Run every check; ``overrides`` replaces named fixtures (used to test the harness)."""
    overrides = dict(overrides or {})

    def get(name: str) -> LatticeConfiguration:
        return overrides[name] if name in overrides else fixture(name)

    out = []
    for chk in build_checks():
        try:
            ok, detail = chk.run(get)
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(chk.name, chk.claim, bool(ok), detail))
    return out

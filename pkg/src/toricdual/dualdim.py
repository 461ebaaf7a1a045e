"""Independent check of dim X^(k) through the rational parameterization of the dual.

The k-th dual is the closure of the image of

    (lambda, t)  ->  ( <b_i, lambda> * t^(-a_i) )_i

with ``b_i`` the kernel coordinates of ``A^(k)``.  Multiplying every
coordinate by ``t^a_max`` (componentwise maximum exponent) gives a polynomial
map with the same projective image, whose Jacobian is evaluated exactly at
random integer points.  The affine-cone rank minus one bounds the projective
dimension from below and equals it for generic samples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

from .config import LatticeConfiguration, dimension, homogenize, normalize_lattice, is_normalized
from .errors import BudgetExhausted, EmptyKernel
from .exactla import dot, rank, right_kernel
from .osculation import jet_matrix
from .selfdual import PAPER_CONTRADICTION, Diagnostic, SelfdualVerdict, classify

__all__ = [
    "DualDimReport",
    "CrosscheckReport",
    "dual_dimension",
    "crosscheck_characterizations",
    "binomial_membership_test",
    "SAMPLE_BOUND",
]

SAMPLE_BOUND = 101
MAX_REJECTIONS = 50


@dataclass(frozen=True)
class DualDimReport:
    k: int
    n: int
    c_k: int
    expected_dim: int
    computed_dim: int
    trials: int
    seed: int
    ranks: tuple[int, ...]
    sample_points: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    zero_coordinates: tuple[int, ...]
    agrees_with_verdict: Optional[bool] = None

    @property
    def degenerate(self) -> bool:
        """The dual sits inside a coordinate hyperplane."""
        return bool(self.zero_coordinates)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "c_k": self.c_k,
            "expected_dim": self.expected_dim,
            "computed_dim": self.computed_dim,
            "trials": self.trials,
            "seed": self.seed,
            "ranks": list(self.ranks),
            "sample_points": [
                {"lambda": list(lam), "t": list(t)} for lam, t in self.sample_points
            ],
            "zero_coordinates": list(self.zero_coordinates),
            "degenerate": self.degenerate,
            "agrees_with_verdict": self.agrees_with_verdict,
        }


def _nonzero(rng: random.Random) -> int:
    while True:
        x = rng.randint(-SAMPLE_BOUND, SAMPLE_BOUND)
        if x:
            return x


def _jacobian(points, bs, lam, t) -> list[list[int]]:
    n = len(t)
    amax = [max(p[j] for p in points) for j in range(n)]
    rows = []
    for p, b in zip(points, bs):
        e = [amax[j] - p[j] for j in range(n)]
        mono = 1
        for j in range(n):
            mono *= t[j] ** e[j]
        lin = dot(b, lam)
        row = [bj * mono for bj in b]
        for l in range(n):
            if e[l] == 0:
                row.append(0)
                continue
            # d/dt_l of t^e = e_l * t^(e - u_l)
            m = e[l]
            for j in range(n):
                m *= t[j] ** (e[j] - (j == l))
            row.append(lin * m)
        rows.append(row)
    return rows


def dual_dimension(cfg: LatticeConfiguration, k: int, trials: int = 3, seed: int = 0) -> DualDimReport:
    """Estimate ``dim X^(k)`` from exact Jacobian ranks at random points.

    Trial ``i`` always draws the same sample for a given seed, so raising
    ``trials`` can only raise the reported dimension.
    """
    if not is_normalized(cfg):
        cfg, _ = normalize_lattice(cfg)
    n = cfg.ambient_dim
    jet = jet_matrix(cfg, k)
    c = jet.c_k
    if c == 0:
        raise EmptyKernel(f"A^({k}) has trivial kernel; the {k}-th dual is empty")
    size = len(cfg.points)
    bs = [tuple(v[i] for v in jet.kernel) for i in range(size)]
    zero = tuple(i for i, b in enumerate(bs) if not any(b))
    live = [i for i in range(size) if i not in zero]
    rng = random.Random(seed)
    ranks = []
    samples = []
    for _ in range(trials):
        for _attempt in range(MAX_REJECTIONS):
            lam = tuple(rng.randint(-SAMPLE_BOUND, SAMPLE_BOUND) for _ in range(c))
            t = tuple(_nonzero(rng) for _ in range(n))
            if all(dot(bs[i], lam) for i in live):
                break
        else:
            raise BudgetExhausted(f"no admissible sample after {MAX_REJECTIONS} draws")
        jac = _jacobian(cfg.points, bs, lam, t)
        ranks.append(rank(jac))
        samples.append((lam, t))
    computed = max(ranks) - 1
    return DualDimReport(
        k=k,
        n=n,
        c_k=c,
        expected_dim=n + c - 1,
        computed_dim=computed,
        trials=trials,
        seed=seed,
        ranks=tuple(ranks),
        sample_points=tuple(samples),
        zero_coordinates=zero,
    )


@dataclass(frozen=True)
class CrosscheckReport:
    verdict: SelfdualVerdict
    dual: Optional[DualDimReport]
    dimension_says_selfdual: bool
    agree: bool
    diagnostics: tuple[Diagnostic, ...] = ()

    def to_dict(self) -> dict:
        return {
            "agree": self.agree,
            "classify_selfdual": self.verdict.selfdual,
            "dimension_says_selfdual": self.dimension_says_selfdual,
            "dual": None if self.dual is None else self.dual.to_dict(),
            "diagnostics": [d.to_dict() for d in self.diagnostics],
            "verdict": self.verdict.to_dict(),
        }


def _compare(verdict: SelfdualVerdict, dual: Optional[DualDimReport], n: int):
    if dual is None:
        # empty kernel: no osculating hyperplanes, never selfdual
        by_dim = False
    else:
        by_dim = verdict.knap.is_knap and dual.computed_dim == n
    agree = by_dim == verdict.selfdual
    diags = ()
    if not agree:
        diags = (Diagnostic(
            PAPER_CONTRADICTION,
            f"classify says selfdual={verdict.selfdual} but knap={verdict.knap.is_knap} "
            f"and dim X^({verdict.k}) = {None if dual is None else dual.computed_dim} vs dim X = {n}",
        ),)
    return by_dim, agree, diags


def crosscheck_characterizations(cfg: LatticeConfiguration, k: int, trials: int = 3, seed: int = 0) -> CrosscheckReport:
    """Compare the combinatorial verdict with the knap-plus-dimension criterion."""
    verdict = classify(cfg, k, warn=False)
    dual = dual_dimension(cfg, k, trials, seed) if verdict.c_k >= 1 else None
    n = dimension(cfg)
    by_dim, agree, diags = _compare(verdict, dual, n)
    if dual is not None:
        dual = replace(dual, agrees_with_verdict=agree)
    return CrosscheckReport(verdict, dual, by_dim, agree, diags)


def attach_crosscheck(verdict: SelfdualVerdict, cfg: LatticeConfiguration, trials: int, seed: int) -> SelfdualVerdict:
    dual = dual_dimension(cfg, verdict.k, trials, seed)
    _, agree, diags = _compare(verdict, dual, dimension(cfg))
    dual = replace(dual, agrees_with_verdict=agree)
    return replace(verdict, dual_dim_check=dual, diagnostics=verdict.diagnostics + diags)


def binomial_membership_test(
    cfg: LatticeConfiguration,
    k: int,
    witness: Optional[Sequence[int]] = None,
    kernel_vectors: Optional[Sequence[Sequence[int]]] = None,
    samples: int = 4,
    seed: int = 0,
) -> bool:
    """Check that the dual parameterization satisfies the orbit binomials of ``witness``.

    For ``v`` in ``Ker A`` and sampled ``lambda`` this tests

        p^(v-) * prod_{v_i>0} <b_i,lambda>^v_i  ==  p^(v+) * prod_{v_i<0} <b_i,lambda>^(-v_i)

    exactly.  Without explicit ``kernel_vectors`` a few random integer
    combinations of a basis of ``Ker A`` are used.
    """
    jet = jet_matrix(cfg, k)
    c = jet.c_k
    if c == 0:
        raise EmptyKernel(f"A^({k}) has trivial kernel")
    size = len(cfg.points)
    bs = [tuple(v[i] for v in jet.kernel) for i in range(size)]
    if witness is None:
        from .selfdual import knap_check

        witness = knap_check(cfg, k, jet).torus_witness
        if witness is None:
            raise ValueError("configuration is not knap; no torus witness")
    rng = random.Random(seed)
    if kernel_vectors is None:
        basis = right_kernel(homogenize(cfg)).vectors
        kernel_vectors = []
        for _ in range(samples):
            coeffs = [rng.randint(-3, 3) for _ in basis]
            kernel_vectors.append([sum(a * v[i] for a, v in zip(coeffs, basis)) for i in range(size)])
    for v in kernel_vectors:
        for _ in range(samples):
            lam = [rng.randint(-SAMPLE_BOUND, SAMPLE_BOUND) for _ in range(c)]
            vals = [dot(b, lam) for b in bs]
            lhs = rhs = 1
            for i, vi in enumerate(v):
                if vi > 0:
                    lhs *= vals[i] ** vi
                    rhs *= witness[i] ** vi
                elif vi < 0:
                    lhs *= witness[i] ** (-vi)
                    rhs *= vals[i] ** (-vi)
            if lhs != rhs:
                return False
    return True

"""Command-line interface: ``toricdual classify|hilbert|generate|search|verify-paper``.

Exit codes: 0 selfdual / success, 1 not selfdual / failed check, 2 error.
Results go to stdout (or ``--out``); progress and warnings go to stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
import time
import warnings
from typing import Optional, Sequence

from . import __version__
from .config import LatticeConfiguration, dumps_text, load, to_dict
from .errors import ToricDualError
from .families import (
    aprime,
    box,
    cayley,
    cube_vertices,
    fixture,
    join,
    mulliken,
    random_general,
    segment,
    three_root_conic,
    togliatti,
)
from .osculation import hilbert_function

log = logging.getLogger("toricdual")

EXIT_OK = 0
EXIT_NO = 1
EXIT_ERROR = 2


def manifest(command: str, params: dict, inputs: Sequence[str] = (), seed: Optional[int] = None,
             started: Optional[float] = None) -> dict:
    digests = {}
    for path in inputs:
        with open(path, "rb") as fh:
            digests[path] = hashlib.sha256(fh.read()).hexdigest()
    out = {
        "command": command,
        "parameters": params,
        "seed": seed,
        "version": __version__,
        "input_digests": digests,
    }
    if started is not None:
        out["elapsed_seconds"] = round(time.perf_counter() - started, 6)
    return out


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _format_verdict(v) -> str:
    lines = [
        f"k = {v.k}   n = {v.n}   N = {v.N}",
        f"d_{v.k} = {v.d_k}   c_{v.k} = {v.c_k}",
        f"{v.k}nap: {'yes' if v.knap.is_knap else 'no'}",
    ]
    if v.knap.offending_indices:
        lines.append(f"  separable points (J): {list(v.knap.offending_indices)}")
    if v.knap.torus_witness is not None:
        lines.append(f"  torus witness: {list(v.knap.torus_witness)}")
    if v.partition is not None:
        lines.append(f"lines: {v.partition.r}")
        for ln, cert in zip(v.partition.lines, v.eL_certificates):
            lines.append(f"  direction {list(ln.direction)} points {list(ln.members)} "
                         f"e_L in rowspan(A): {'yes' if cert.member else 'no'}")
    lines.append(f"{v.k}-selfdual: {'yes' if v.selfdual else 'no'} ({v.reason})")
    if v.dual_dim_check is not None:
        d = v.dual_dim_check
        lines.append(f"dual dimension: computed {d.computed_dim}, expected {d.expected_dim}, "
                     f"agrees: {d.agrees_with_verdict}")
    for d in v.diagnostics:
        lines.append(f"[{d.kind}] {d.message}")
    return "\n".join(lines) + "\n"


def cmd_classify(args) -> int:
    from .selfdual import classify

    started = time.perf_counter()
    cfg = load(args.input)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        v = classify(cfg, args.k, crosscheck=args.crosscheck, trials=args.trials, seed=args.seed)
    for w in caught:
        log.warning("%s", w.message)
    if args.format == "json":
        doc = {
            "manifest": manifest("classify", {"k": args.k, "crosscheck": args.crosscheck,
                                              "trials": args.trials}, [args.input], args.seed, started),
            "configuration": to_dict(cfg),
            "verdict": v.to_dict(),
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        _emit(_format_verdict(v), args.out)
    return EXIT_OK if v.selfdual else EXIT_NO


def cmd_hilbert(args) -> int:
    started = time.perf_counter()
    cfg = load(args.input)
    values = [hilbert_function(cfg, k) for k in range(1, args.k_max + 1)]
    if args.format == "json":
        doc = {
            "manifest": manifest("hilbert", {"k_max": args.k_max}, [args.input], None, started),
            "hilbert": {str(k): h for k, h in zip(range(1, args.k_max + 1), values)},
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        _emit("".join(f"{k}\t{h}\n" for k, h in zip(range(1, args.k_max + 1), values)), args.out)
    return EXIT_OK


def _ints(text: Optional[str]) -> list[int]:
    if not text:
        return []
    return [int(x) for x in text.replace(",", " ").split()]


def _points(text: Optional[str]) -> list[tuple[int, ...]]:
    # "3,3;4,2" -> [(3, 3), (4, 2)]
    if not text:
        return []
    return [tuple(int(x) for x in chunk.split(",")) for chunk in text.split(";") if chunk.strip()]


def generate(family: str, params: list[int], extras=(), seed: int = 0, copies: int = 1) -> LatticeConfiguration:
    if family == "segment":
        return segment(*params)
    if family == "box":
        return box(*params)
    if family == "cube":
        return cube_vertices(*params)
    if family == "togliatti":
        return togliatti()
    if family == "three-root-conic":
        return three_root_conic(*params)
    if family == "aprime":
        return aprime(extras)
    if family == "mulliken":
        return mulliken(*params)
    if family == "scroll":
        return cayley([segment(d) for d in params])
    if family == "cayley-box":
        return cayley([box(*params)] * copies)
    if family == "join-segments":
        return join([segment(d) for d in params])
    if family == "random-general":
        n, k, size = params
        return random_general(n, k, seed, size)
    if family == "fixture":
        raise ValueError("use --name with the fixture family")
    raise ValueError(f"unknown family {family!r}")


FAMILIES = ["segment", "box", "cube", "togliatti", "three-root-conic", "aprime", "mulliken",
            "scroll", "cayley-box", "join-segments", "random-general", "fixture"]


def cmd_generate(args) -> int:
    if args.family == "fixture":
        cfg = fixture(args.name)
    else:
        cfg = generate(args.family, _ints(args.params), _points(args.extras), args.seed, args.copies)
    if args.format == "json":
        doc = dict(to_dict(cfg))
        doc["manifest"] = manifest("generate", {"family": args.family, "params": args.params,
                                                "extras": args.extras, "copies": args.copies,
                                                "name": args.name}, (), args.seed)
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        _emit(dumps_text(cfg), args.out)
    return EXIT_OK


def cmd_search(args) -> int:
    from .search import SearchJob, run_search

    started = time.perf_counter()
    job = SearchJob(
        box=tuple(_ints(args.box)),
        size=args.size,
        k=args.k,
        knap_only=args.knap_only,
        selfdual_only=not args.all,
        dedup=args.dedup,
        budget=args.budget,
    )
    log.info("searching %d subsets", job.count())
    hits = list(run_search(job, workers=args.workers))
    if args.format == "json":
        doc = {
            "manifest": manifest("search", {"box": list(job.box), "size": job.size, "k": job.k,
                                            "knap_only": job.knap_only, "all": args.all,
                                            "dedup": job.dedup}, (), None, started),
            "count": len(hits),
            "hits": [{"indices": list(h.indices), "points": [list(p) for p in h.configuration.points],
                      "selfdual": h.verdict.selfdual, "c_k": h.verdict.c_k, "reason": h.verdict.reason}
                     for h in hits],
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        lines = [" ".join(",".join(map(str, p)) for p in h.configuration.points)
                 + f"\tc_{job.k}={h.verdict.c_k}\t{h.verdict.reason}" for h in hits]
        lines.append(f"# {len(hits)} configurations")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    from .claims import KNOWN_NOTES, run_checks

    overrides = {}
    for item in args.override or []:
        name, _, path = item.partition("=")
        overrides[name] = load(path)
    results = run_checks(overrides)
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        doc = {
            "manifest": manifest("verify-paper", {"overrides": sorted(overrides)}),
            "passed": len(results) - len(failed),
            "failed": [r.name for r in failed],
            "checks": [r.to_dict() for r in results],
            "notes": list(KNOWN_NOTES),
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.claim}\n      {r.detail}" for r in results]
        lines += [f"NOTE  {n}" for n in KNOWN_NOTES]
        lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_NO if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write results here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="toricdual", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="decide k-selfduality of a configuration")
    c.add_argument("input", nargs="?")
    c.add_argument("--input", dest="input_flag")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--crosscheck", action="store_true", help="also estimate dim X^(k) numerically")
    c.add_argument("--trials", type=int, default=3)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_classify)

    h = sub.add_parser("hilbert", parents=[common], help="Hilbert function values H(1..k_max)")
    h.add_argument("input", nargs="?")
    h.add_argument("--input", dest="input_flag")
    h.add_argument("--k-max", type=int, default=4)
    h.set_defaults(func=cmd_hilbert)

    g = sub.add_parser("generate", parents=[common], help="write a configuration from a family")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--params", help="integer parameters, e.g. '2 2' or '5,4,2'")
    g.add_argument("--extras", help="extra points for aprime, e.g. '3,3;4,2'")
    g.add_argument("--copies", type=int, default=3, help="number of copies for cayley-box")
    g.add_argument("--name", help="fixture name for --family fixture")
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("search", parents=[common], help="enumerate selfdual subsets of a lattice box")
    s.add_argument("--box", required=True, help="side lengths, e.g. '2 2'")
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--knap-only", action="store_true")
    s.add_argument("--all", action="store_true", help="emit every subset, not only selfdual ones")
    s.add_argument("--dedup", action="store_true", help="drop copies related by box symmetries")
    s.add_argument("--budget", type=int, default=2_000_000)
    s.add_argument("--workers", type=int, default=None)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify-paper", parents=[common], help="re-derive the catalog of published verdicts")
    v.add_argument("--override", action="append", metavar="NAME=PATH",
                   help="replace a named fixture by the configuration in PATH")
    v.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    if hasattr(args, "input_flag"):
        args.input = args.input_flag or args.input
        if not args.input:
            log.error("no input file given")
            return EXIT_ERROR
    try:
        return args.func(args)
    except (ToricDualError, OSError, ValueError, TypeError) as exc:
        log.error("%s", exc)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())


def main_entry() -> None:
    sys.exit(main())

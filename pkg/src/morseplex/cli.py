"""Command line interface.

Data goes to stdout (or --out); progress and errors go to stderr.  Exit
codes: 0 success, 1 runtime failure (bad input data, budget exceeded, failed
check), 2 usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import generators
from .complexes import SimplicialComplex, read_complex, write_complex
from .engine import run_many, run_once, run_once_normalized, verify_trace
from .spectra import build_report, c_avg, exact_spectrum_bruteforce
from .topology import betti_gf2, check_morse_output, edge_path_presentation
from .complexes import BudgetExceededError

_BETTI_BUDGET = 20000


def parse_gen_spec(spec: str) -> SimplicialComplex:
    """Generator specs: A:k, B:k:s, C:d:k, cyclic:d:n, stacked:d:n[:seed],
    lm:n:p[:seed], bsd:<file-or-spec>, bipyramid, dunce8, simplex:d."""
    name, _, rest = spec.partition(":")
    parts = rest.split(":") if rest else []

    def ints(n: int, m: int | None = None) -> list[int]:
        m = n if m is None else m
        if not n <= len(parts) <= m:
            raise ValueError(f"generator {name!r} takes {n} to {m} arguments, got {len(parts)}")
        return [int(p) for p in parts]

    try:
        if name == "A":
            return generators.graph_A(*ints(1))
        if name == "B":
            return generators.bouquet_B(*ints(2))
        if name == "C":
            return generators.complex_C(*ints(2))
        if name == "cyclic":
            return generators.cyclic_polytope_boundary(*ints(2))
        if name == "stacked":
            return generators.stacked_sphere(*ints(2, 3))
        if name == "lm":
            if not 2 <= len(parts) <= 3:
                raise ValueError("lm takes n:p[:seed]")
            n, p = int(parts[0]), float(parts[1])
            seed = int(parts[2]) if len(parts) == 3 else 0
            return generators.linial_meshulam(n, p, seed)
        if name == "bsd":
            if not rest:
                raise ValueError("bsd takes a file path or a nested generator spec")
            if os.path.exists(rest):
                base = read_complex(rest)
            else:
                base = parse_gen_spec(rest)
            return generators.barycentric_subdivision(base)
        if name == "bipyramid" and not parts:
            return generators.bipyramid()
        if name == "dunce8" and not parts:
            return generators.dunce_hat_8()
        if name == "simplex":
            return generators.simplex(*ints(1))
    except ValueError as exc:
        raise ValueError(f"bad generator spec {spec!r}: {exc}") from None
    raise ValueError(f"unknown generator spec {spec!r}")


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--in", dest="infile", metavar="PATH", help="facet file (text or json)")
    g.add_argument("--gen", metavar="SPEC", help="generator spec, e.g. A:1 or cyclic:4:20")


def _load_complex(args) -> SimplicialComplex:
    if args.infile is not None:
        return read_complex(args.infile)
    return parse_gen_spec(args.gen)


def _resolve_seed(args) -> int:
    if args.seed is not None:
        seed = args.seed
    elif "MORSE_SEED" in os.environ:
        seed = int(os.environ["MORSE_SEED"])
    else:
        seed = 0
    if not 0 <= seed < 2 ** 64:
        raise ValueError("seed must fit in u64")
    return seed


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _render_text_report(report: dict) -> str:
    lines = [f"rounds       {report['rounds']}"]
    lines.append(f"strategy     {report['strategy']}  seed {report['master_seed']}")
    for item in report["vectors"]:
        v = ",".join(map(str, item["vector"]))
        lines.append(f"  ({v})  count {item['count']}  freq {item['freq']:.6f}")
    lines.append(f"c_avg        {report['c_avg']:.6f}")
    if report["c_avg_normalized"] is not None:
        lines.append(f"c_avg_norm   {report['c_avg_normalized']:.6f}")
    lines.append(f"euler        {report['euler']}")
    if "betti_gf2" in report:
        lines.append(f"betti_gf2    {tuple(report['betti_gf2'])}")
    return "\n".join(lines) + "\n"


def cmd_run(args) -> int:
    C = _load_complex(args)
    seed = _resolve_seed(args)
    if args.strategy in ("lex", "revlex") and (args.rounds or 1) > 1:
        # usage error, same exit convention as argparse
        print(f"error: strategy {args.strategy} is deterministic; use --rounds 1",
              file=sys.stderr)
        return 2
    rounds = args.rounds if args.rounds is not None else (1000 if args.strategy == "random" else 1)
    workers = (os.cpu_count() or 1) if args.workers == "auto" else int(args.workers)
    t0 = time.perf_counter()
    spec = run_many(C, rounds=rounds, strategy=args.strategy, master_seed=seed,
                    workers=workers, normalized=args.normalize)
    betti = None
    if C.n_faces <= _BETTI_BUDGET:
        betti = betti_gf2(C)
        for v in spec.vectors():
            rep = check_morse_output(C, v, betti=betti)
            if not rep.passed:
                print(f"error: observed vector {v} violates the Morse conditions "
                      f"(betti {betti})", file=sys.stderr)
                return 1
    report = build_report(spec, euler=C.euler_characteristic(), master_seed=seed,
                          strategy=args.strategy, betti_gf2=betti)
    if report["c_avg_normalized"] is None:
        print("note: input is disconnected, c_avg_normalized unavailable", file=sys.stderr)
    if args.format == "json":
        _emit(json.dumps(report) + "\n", args.out)
    else:
        _emit(_render_text_report(report), args.out)
    print(f"{rounds} rounds in {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    return 0


def cmd_gen(args) -> int:
    C = parse_gen_spec(args.spec)
    _emit(write_complex(C, format=args.format), args.out)
    print(f"f = {C.f_vector()}", file=sys.stderr)
    return 0


def cmd_exact(args) -> int:
    C = _load_complex(args)
    dist = exact_spectrum_bruteforce(C, max_faces=args.max_faces)
    report = {
        "vectors": [
            {"vector": list(v), "probability": str(dist[v])} for v in sorted(dist)
        ],
        "c_avg": str(c_avg(dist)),
        "euler": C.euler_characteristic(),
    }
    _emit(json.dumps(report) + "\n", args.out)
    return 0


def cmd_betti(args) -> int:
    C = _load_complex(args)
    report = {
        "f_vector": list(C.f_vector()),
        "euler": C.euler_characteristic(),
        "betti_gf2": list(betti_gf2(C)),
    }
    _emit(json.dumps(report) + "\n", args.out)
    return 0


def cmd_pi1(args) -> int:
    C = _load_complex(args)
    pres = edge_path_presentation(C)
    report = {
        "generators": pres.n_generators,
        "relators": pres.n_relators,
        "generator_edges": [list(e) for e in pres.generators],
        "relator_words": [list(w) for w in pres.relators],
    }
    _emit(json.dumps(report) + "\n", args.out)
    return 0


def cmd_check(args) -> int:
    C = _load_complex(args)
    vector = [int(tok) for tok in args.vector.replace(",", " ").split()]
    rep = check_morse_output(C, vector)
    report = {
        "vector": list(rep.vector),
        "alternating_sum": rep.alternating_sum,
        "euler": rep.euler,
        "euler_ok": rep.euler_ok,
        "betti_gf2": list(rep.betti_gf2) if rep.betti_gf2 is not None else None,
        "inequalities_ok": rep.inequalities_ok,
        "slack": list(rep.slack) if rep.slack is not None else None,
        "passed": rep.passed,
    }
    _emit(json.dumps(report) + "\n", args.out)
    return 0 if rep.passed else 1


def cmd_trace(args) -> int:
    C = _load_complex(args)
    seed = _resolve_seed(args)
    runner = run_once_normalized if args.normalize else run_once
    vector, trace = runner(C, strategy=args.strategy, seed=seed)
    verified = verify_trace(C, trace)
    if verified != vector:
        raise RuntimeError("internal: replay disagrees with the run")
    report = {
        "seed": seed,
        "strategy": args.strategy,
        "normalized": args.normalize,
        "vector": list(vector),
        "verified": True,
        "events": [[ev[0]] + [list(f) for f in ev[1:]] for ev in trace.events],
    }
    _emit(json.dumps(report) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="morseplex",
        description="Random discrete Morse spectra of finite simplicial complexes",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run many rounds and report the empirical spectrum")
    _add_input_flags(p)
    p.add_argument("--rounds", type=int, default=None, help="default 1000 (1 for lex/revlex)")
    p.add_argument("--seed", type=int, default=None, help="master seed (or MORSE_SEED env)")
    p.add_argument("--strategy", choices=["random", "lex", "revlex"], default="random")
    p.add_argument("--normalize", action="store_true", help="deterministic 1-d endgame")
    p.add_argument("--workers", default="1", help='worker processes, or "auto"')
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("gen", help="write a generated complex as a facet file")
    p.add_argument("spec", help="generator spec, e.g. cyclic:4:50")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("exact", help="exact spectrum by brute force (small complexes)")
    _add_input_flags(p)
    p.add_argument("--max-faces", type=int, default=40)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("betti", help="GF(2) Betti numbers")
    _add_input_flags(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("pi1", help="edge-path presentation of the fundamental group")
    _add_input_flags(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("check", help="validate a Morse vector against a complex")
    _add_input_flags(p)
    p.add_argument("--vector", required=True, help='e.g. "1,0,1"')
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("trace", help="one run with a verified replayable trace")
    _add_input_flags(p)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--strategy", choices=["random", "lex", "revlex"], default="random")
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_trace)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 domain error (message on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
import time

from .census import census_classify, family_4_1, family_4_2, family_4_3, family_tag
from .cusp import CuspType, delta_closed, euclid_sequence
from .engine import classify, classify_bounds
from .errors import HypothesisMismatch, SemigroupError
from .pencil import sharp_semigroup_S, trivial_new_nongaps, window_profiles, ws_of_Q_full_genus
from .report import build_report, semigroup_record, write_report
from .semigroup import sg_from_gaps, sg_from_generators, standing_hypotheses_check, two_gen_params

FAMILY_PARAMS = {"4.1": ("n", "m"), "4.2": ("n", "m", "mprime"), "4.3": ("n",)}


def _gap_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json", "csv"), default="human")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")

    ab = argparse.ArgumentParser(add_help=False)
    ab.add_argument("--a", type=int, required=True)
    ab.add_argument("--b", type=int, required=True)

    parser = argparse.ArgumentParser(prog="absemigroup", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common, ab], help="classify a semigroup containing <a; b>")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--gaps", type=_gap_list, help="gap set of H, comma separated")
    grp.add_argument("--genus", type=int, help="genus only (bounds mode)")

    p = sub.add_parser("delta", parents=[common], help="delta invariant of a (nu, mu) cusp")
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--mu", type=int, required=True)

    p = sub.add_parser("trivial-nongaps", parents=[common, ab], help="trivial new non-gaps of a (mu, a) cusp")
    p.add_argument("--mu", type=int)

    sub.add_parser("ws-q", parents=[common, ab], help="semigroup at Q with aQ ~ aP at full genus")
    sub.add_parser("sharp-s", parents=[common, ab], help="the sharp semigroup S and its verdict")

    p = sub.add_parser("census", parents=[common, ab], help="all semigroups of a genus containing <a; b>")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--no-hypotheses", action="store_true",
                   help="keep semigroups violating the standing hypotheses")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("examples", parents=[common], help="explicit example families")
    p.add_argument("--which", choices=sorted(FAMILY_PARAMS), required=True)
    p.add_argument("--params", required=True, help="key=value list, e.g. n=2,m=1")
    return parser


def _parse_params(parser, which: str, text: str) -> dict[str, int]:
    out = {}
    for item in text.split(","):
        key, sep, val = item.partition("=")
        key = key.strip().lower().replace("'", "prime").replace("_", "").replace("-", "")
        if not sep:
            parser.error(f"--params item {item!r} is not key=value")
        try:
            out[key] = int(val)
        except ValueError:
            parser.error(f"--params value {val!r} is not an integer")
    expected = set(FAMILY_PARAMS[which])
    if set(out) != expected:
        parser.error(f"example {which} takes params {', '.join(FAMILY_PARAMS[which])}")
    return out


def _run(args, parser) -> tuple[dict, dict]:
    cmd = args.command
    if cmd == "analyze":
        p = two_gen_params(args.a, args.b)
        inputs = {"a": args.a, "b": args.b, "gaps": args.gaps, "genus": args.genus}
        if args.genus is not None:
            v = classify_bounds(args.a, args.b, args.genus)
            if args.genus == p.full_genus:
                rows = [semigroup_record(p.semigroup(), v)]
                return inputs, {"mode": "bounds", "verdict": v.to_dict(), "rows": rows}
            rec = {"genus": args.genus, "gaps": None, "a": p.a, "b": p.b, "n": p.n, "r": p.r,
                   "verdict": v.kind.value, "rulesEstablished": v.established(), "semigroup": None}
            return inputs, {"mode": "bounds", "verdict": v.to_dict(), "rows": [rec]}
        H = sg_from_gaps(args.gaps) if args.gaps is not None else p.semigroup()
        hyp = standing_hypotheses_check(H) if H.genus else None
        if hyp is None or (hyp.a, hyp.b) != (p.a, p.b):
            found = "none" if hyp is None else f"({hyp.a}, {hyp.b})"
            raise HypothesisMismatch(f"gap set has first generators {found}, not ({p.a}, {p.b})")
        v = classify(H)
        return inputs, {"mode": "semigroup", "verdict": v.to_dict(), "rows": [semigroup_record(H, v)]}

    if cmd == "delta":
        c = CuspType(args.nu, args.mu)
        seq = euclid_sequence(c)
        return {"nu": args.nu, "mu": args.mu}, {
            "nu": c.nu, "mu": c.mu, "cs": list(seq.cs), "ns": list(seq.ns),
            "deltaRecursive": seq.delta, "deltaClosed": delta_closed(c),
            "semigroupGenus": sg_from_generators((c.nu, c.mu)).genus,
        }

    if cmd == "trivial-nongaps":
        p = two_gen_params(args.a, args.b)
        tn = trivial_new_nongaps(p, args.mu)
        table = [{"m": m, "n": k, "values": [i * p.b - m * p.a for i in range(k, p.a)]}
                 for m, k in sorted(tn.n_table.items())]
        return {"a": args.a, "b": args.b, "mu": args.mu}, {
            "a": p.a, "b": p.b, "n": p.n, "r": p.r, "mu": tn.mu, "defaultMu": tn.default_mu,
            "table": table, "values": list(tn.values), "count": len(tn.values),
            "expectedCount": tn.expected_count,
        }

    if cmd == "ws-q":
        p = two_gen_params(args.a, args.b)
        Q = ws_of_Q_full_genus(p)
        windows = [{"t": w.t, "s": w.s, "qNonGaps": sorted(w.q_nongaps)} for w in window_profiles(p)]
        return {"a": args.a, "b": args.b}, {
            "windows": windows, "equalsBase": Q == p.semigroup(),
            "rows": [semigroup_record(Q, classify(Q))],
        }

    if cmd == "sharp-s":
        p = two_gen_params(args.a, args.b)
        S = sharp_semigroup_S(p)
        v = classify(S)
        return {"a": args.a, "b": args.b}, {
            "trivialNonGaps": list(trivial_new_nongaps(p).values), "verdict": v.to_dict(),
            "rows": [semigroup_record(S, v, family_tag(p, S))],
        }

    if cmd == "census":
        p = two_gen_params(args.a, args.b)
        rows = census_classify(p, args.genus, not args.no_hypotheses, max(1, args.jobs))
        recs = [semigroup_record(r.semigroup, r.verdict, r.family_tag, outcomes=True) for r in rows]
        inputs = {"a": args.a, "b": args.b, "genus": args.genus,
                  "requireStandingHypotheses": not args.no_hypotheses}
        return inputs, {"count": len(recs), "rows": recs}

    if cmd == "examples":
        params = _parse_params(parser, args.which, args.params)
        if args.which == "4.1":
            H, p = family_4_1(params["n"], params["m"]), two_gen_params(4, 4 * params["n"] + 1)
        elif args.which == "4.2":
            H = family_4_2(params["n"], params["m"], params["mprime"])
            p = two_gen_params(5, 5 * params["n"] + 1)
        else:
            H, p = family_4_3(params["n"]), two_gen_params(6, 6 * params["n"] + 1)
        v = classify(H)
        return {"which": args.which, "params": params}, {
            "family": args.which, "verdict": v.to_dict(),
            "rows": [semigroup_record(H, v, family_tag(p, H))],
        }
    raise AssertionError(cmd)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        inputs, results = _run(args, parser)
    except SemigroupError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    report = build_report(args.command, argv, inputs, results, time.perf_counter() - start)
    text = write_report(report, args.format)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return 0

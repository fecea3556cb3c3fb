"""Deterministic report rendering (human, json, csv).

A report is a plain dict with keys tool, version, command, argv, inputs,
results and timing. Only ``timing`` varies between identical invocations,
and only the JSON format includes it.
"""

from __future__ import annotations

import csv
import io
import json

from . import __version__
from .engine import Verdict
from .errors import SemigroupError
from .semigroup import NumericalSemigroup, parse_canonical, standing_hypotheses_check

CSV_HEADER = ["a", "b", "n", "r", "genus", "gaps", "verdict", "rules_established"]


def semigroup_record(
    H: NumericalSemigroup, verdict: Verdict | None = None, tag: str | None = None, outcomes: bool = False
) -> dict:
    """One row of semigroup output; a, b, n, r are read from H itself."""
    rec = {"semigroup": H.canonical(), "genus": H.genus, "gaps": list(H.gaps)}
    try:
        hyp = verdict.hypotheses if verdict is not None else standing_hypotheses_check(H)
        rec.update(a=hyp.a, b=hyp.b, n=hyp.n, r=hyp.r)
    except SemigroupError:
        rec.update(a=None, b=None, n=None, r=None)
    if verdict is not None:
        rec["verdict"] = verdict.kind.value
        rec["rulesEstablished"] = verdict.established()
        if outcomes:
            rec["outcomes"] = verdict.to_dict()["outcomes"]
    if tag is not None:
        rec["tag"] = tag
    return rec


def build_report(command: str, argv: list[str], inputs: dict, results: dict, seconds: float = 0.0) -> dict:
    return {
        "tool": "absemigroup",
        "version": __version__,
        "command": command,
        "argv": list(argv),
        "inputs": inputs,
        "results": results,
        "timing": {"seconds": round(seconds, 6)},
    }


def results_body(report: dict) -> str:
    """Canonical serialization of the results section alone."""
    return json.dumps(report["results"], sort_keys=True, separators=(",", ":"))


def _json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    res = report["results"]
    cmd = report["command"]
    if cmd == "delta":
        w.writerow(["nu", "mu", "cs", "ns", "delta_recursive", "delta_closed"])
        w.writerow([res["nu"], res["mu"], ";".join(map(str, res["cs"])),
                    ";".join(map(str, res["ns"])), res["deltaRecursive"], res["deltaClosed"]])
        return buf.getvalue()
    if cmd == "trivial-nongaps":
        w.writerow(["a", "b", "mu", "m", "n_of_m", "values"])
        for row in res["table"]:
            w.writerow([res["a"], res["b"], res["mu"], row["m"], row["n"],
                        ";".join(map(str, row["values"]))])
        return buf.getvalue()
    w.writerow(CSV_HEADER)
    for rec in res.get("rows", []):
        w.writerow([
            "" if rec.get("a") is None else rec["a"],
            "" if rec.get("b") is None else rec["b"],
            "" if rec.get("n") is None else rec["n"],
            "" if rec.get("r") is None else rec["r"],
            rec["genus"],
            ",".join(map(str, rec["gaps"])) if rec.get("gaps") is not None else "",
            rec.get("verdict", ""),
            ";".join(rec.get("rulesEstablished", [])),
        ])
    return buf.getvalue()


def _table(rows: list[list[str]]) -> list[str]:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return ["  ".join(c.ljust(wd) for c, wd in zip(r, widths)).rstrip() for r in rows]


def _human(report: dict) -> str:
    res = report["results"]
    lines = [f"{report['tool']} {report['version']} {report['command']}"]
    for key in sorted(res):
        val = res[key]
        if key in ("rows", "table", "windows", "verdict"):
            continue
        if isinstance(val, (list, dict)):
            val = json.dumps(val, sort_keys=True)
        lines.append(f"{key}: {val}")
    if "verdict" in res:
        v = res["verdict"]
        lines.append(f"kind: {v['kind']}")
        lines.append("hypotheses: " + ", ".join(f"{k}={v['hypotheses'][k]}" for k in sorted(v["hypotheses"])))
        rows = [["rule", "status", "evidence"]]
        for o in v["outcomes"]:
            rows.append([o["ruleId"], o["status"], json.dumps(o["evidence"], sort_keys=True) if o["evidence"] else "-"])
        lines.extend(_table(rows))
    if res.get("windows"):
        rows = [["t", "s", "q_nongaps"]]
        rows += [[str(w["t"]), str(w["s"]), ",".join(map(str, w["qNonGaps"]))] for w in res["windows"]]
        lines.extend(_table(rows))
    if res.get("table"):
        rows = [["m", "n(m)", "values"]]
        rows += [[str(t["m"]), str(t["n"]), ",".join(map(str, t["values"]))] for t in res["table"]]
        lines.extend(_table(rows))
    if "rows" in res:
        rows = [["genus", "verdict", "tag", "gaps", "rules"]]
        for rec in res["rows"]:
            rows.append([str(rec["genus"]), rec.get("verdict", ""), rec.get("tag") or "-",
                         ",".join(map(str, rec["gaps"])) if rec["gaps"] is not None else "-",
                         ";".join(rec.get("rulesEstablished", []))])
        lines.extend(_table(rows))
    return "\n".join(lines) + "\n"


def write_report(report: dict, fmt: str = "human") -> str:
    if fmt == "json":
        return _json(report)
    if fmt == "csv":
        return _csv(report)
    if fmt == "human":
        return _human(report)
    raise ValueError(f"unknown format {fmt!r}")


def semigroup_from_record(rec: dict) -> NumericalSemigroup:
    return parse_canonical(rec["semigroup"])

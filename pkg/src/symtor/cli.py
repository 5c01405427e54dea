"""Command line front end.

A job is one JSON document::

    {"n": 3, "generators": [[4, 1, 1], [5, 2, 0]],
     "characteristic": 0, "tasks": ["betti", "equivariant"]}

Exit status: 0 on success, 1 on bad input, 2 when ``verify`` finds a mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field, replace

from .core import SymIdeal, format_extended, new_sym_ideal
from .duality import dual_generators, extremal_report, projective_dimension, regularity
from .equivariant import (
    BettiTable,
    candidate_frontier,
    candidate_partitions,
    default_workers,
    equivariant_tor,
    graded_betti,
    invariant_betti,
    quotient_betti,
)
from .homology import FieldSpec
from .oracle import orbit_ideal, orbit_profile
from .stability import base_gamma_table, propagate

TASKS = ("betti", "equivariant", "invariant", "dual", "extremal", "reg-pdim", "verify")


class JobError(ValueError):
    pass


@dataclass(frozen=True)
class JobSpec:
    n: int
    generators: tuple[tuple[int, ...], ...]
    characteristic: int = 0
    tasks: tuple[str, ...] = ("betti",)
    warnings: tuple[str, ...] = field(default=(), compare=False)

    @property
    def ideal(self) -> SymIdeal:
        return new_sym_ideal(self.n, self.generators)

    @property
    def field(self) -> FieldSpec:
        return FieldSpec(self.characteristic)


def _check_task(task: str, n: int) -> str:
    if task in TASKS:
        return task
    if task.startswith("propagate:"):
        try:
            m = int(task.split(":", 1)[1])
        except ValueError:
            raise JobError(f"bad task {task!r}: expected propagate:<m>") from None
        if m < n:
            raise JobError(f"propagate target {m} is below n = {n}")
        return f"propagate:{m}"
    raise JobError(f"unknown task {task!r}")


def parse_job(text: str) -> JobSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise JobError(f"malformed job document: {exc}") from None
    if not isinstance(doc, dict):
        raise JobError("job document must be a JSON object")
    n = doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise JobError("n must be a positive integer")
    raw = doc.get("generators")
    if not isinstance(raw, list):
        raise JobError("generators must be a list of integer lists")
    warnings = []
    gens = []
    for g in raw:
        if not isinstance(g, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in g
        ):
            raise JobError(f"generator {g!r} must be a list of non-negative integers")
        if len(g) != n:
            raise JobError(f"length mismatch: generator {g} has length {len(g)}, n = {n}")
        part = tuple(sorted(g, reverse=True))
        if list(part) != g:
            warnings.append(f"generator {g} reordered to {list(part)}")
        gens.append(part)
    char = doc.get("characteristic", 0)
    try:
        FieldSpec(char)
    except ValueError:
        raise JobError("characteristic must be 0 or prime") from None
    tasks = doc.get("tasks", ["betti"])
    if not isinstance(tasks, list) or not all(isinstance(t, str) for t in tasks):
        raise JobError("tasks must be a list of strings")
    tasks = tuple(_check_task(t, n) for t in tasks)
    return JobSpec(n, tuple(gens), char, tasks, tuple(warnings))


def _mu(mu) -> list[int]:
    return list(mu)


def _betti(tor) -> dict:
    table = graded_betti(tor)
    return {
        "ideal": table.to_json(),
        "quotient": quotient_betti(table).to_json(),
        "totals": table.totals(),
    }


def _equivariant(tor) -> list[dict]:
    return [
        {
            "i": i,
            "mu": _mu(mu),
            "dim": tor.orbit_dim(i, mu),
            "blocks": [
                {"signature": b.signature.to_json(), "multiplicity": b.multiplicity, "c": list(b.c)}
                for b in tor.entries[(i, mu)]
            ],
        }
        for i, mu in tor.keys()
    ]


def _verify(ideal: SymIdeal, k: FieldSpec, tor) -> dict:
    plain = orbit_ideal(ideal)
    cands = candidate_partitions(ideal)
    checks = []
    for mu in cands:
        prof = orbit_profile(ideal, mu, k, plain)
        for i in sorted(set(range(ideal.n)) | set(prof)):
            formula, oracle = tor.orbit_dim(i, mu), prof.get(i, 0)
            checks.append({
                "i": i, "mu": _mu(mu), "formula": formula, "oracle": oracle,
                "status": "PASS" if formula == oracle else "FAIL",
            })
    outside = []
    for mu in candidate_frontier(cands):
        prof = orbit_profile(ideal, mu, k, plain)
        outside.append({
            "mu": _mu(mu), "oracle": sum(prof.values()),
            "status": "PASS" if not prof else "FAIL",
        })
    failed = sum(c["status"] == "FAIL" for c in checks + outside)
    return {"checks": checks, "beyond_candidates": outside, "failures": failed,
            "status": "PASS" if not failed else "FAIL"}


def run(job: JobSpec, workers: int = 1) -> dict:
    ideal, k = job.ideal, job.field
    if ideal.is_zero:
        raise JobError("the zero ideal (no generators) is not supported")
    report: dict = {
        "n": job.n,
        "generators": [list(g) for g in ideal.min_gens],
        "field": str(k),
        "characteristic": job.characteristic,
        "warnings": list(job.warnings),
        "results": {},
    }
    tor = None

    def get_tor():
        nonlocal tor
        if tor is None:
            tor = equivariant_tor(ideal, k, workers=workers)
            report["warnings"].extend(tor.warnings)
        return tor

    results = report["results"]
    for task in job.tasks:
        if task == "betti":
            results[task] = _betti(get_tor())
        elif task == "equivariant":
            results[task] = _equivariant(get_tor())
        elif task == "invariant":
            inv = invariant_betti(ideal, k, workers=workers)
            if inv.warning:
                report["warnings"].append(inv.warning)
            results[task] = [{"i": i, "mu": _mu(mu), "dim": d} for (i, mu), d in sorted(inv.values.items())]
        elif task == "dual":
            duals = dual_generators(ideal)
            results[task] = {
                "all": [format_extended(r) for r in duals.sorted_all()],
                "maximal": [format_extended(r) for r in duals.sorted_maximal()],
                "cap": duals.cap_value,
            }
        elif task == "extremal":
            results[task] = [
                {"i": e.index, "lambda": _mu(e.degree), "value": e.value, "source": format_extended(e.source)}
                for e in extremal_report(ideal)
            ]
        elif task == "reg-pdim":
            if ideal.is_unit:
                results[task] = {"reg_quotient": None, "pdim_quotient": None,
                                 "reg_ideal": 0, "pdim_ideal": 0}
            else:
                reg, pd = regularity(ideal), projective_dimension(ideal)
                results[task] = {"reg_quotient": reg, "pdim_quotient": pd,
                                 "reg_ideal": reg + 1, "pdim_ideal": pd - 1}
        elif task.startswith("propagate:"):
            m = int(task.split(":")[1])
            table = propagate(base_gamma_table(ideal, k, workers=workers), m)
            betti = BettiTable(table.betti_entries())
            results[task] = {"m": m, "gammas": table.records(), "betti": betti.to_json(),
                             "totals": betti.totals()}
        elif task == "verify":
            results[task] = _verify(ideal, k, get_tor())
    report["warnings"] = sorted(set(report["warnings"]))
    return report


def render_text(report: dict) -> str:
    gens = ", ".join("(" + ",".join(map(str, g)) + ")" for g in report["generators"])
    lines = [f"ideal: <{gens}> in {report['n']} variables over {report['field']}"]
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    for task, res in report["results"].items():
        lines.append("")
        lines.append(f"== {task}")
        if task == "betti":
            lines.append(BettiTable.from_json(res["ideal"]).render())
        elif task == "equivariant":
            for entry in res:
                mu = "(" + ",".join(map(str, entry["mu"])) + ")"
                parts = []
                for b in entry["blocks"]:
                    factors = ",".join(
                        "(" + ",".join(map(str, [p] + [1] * q)) + ")" for p, q in b["signature"]
                    )
                    parts.append(f"{b['multiplicity']} x Ind[{factors}]")
                lines.append(f"Tor_{entry['i']}<{mu}>: " + " + ".join(parts))
        elif task == "invariant":
            for entry in res:
                mu = "(" + ",".join(map(str, entry["mu"])) + ")"
                lines.append(f"Tor_{entry['i']}^S<{mu}>: {entry['dim']}")
        elif task == "dual":
            fmt = lambda r: "(" + ",".join(map(str, r)) + ")"
            lines.append("dual generators: " + " ".join(fmt(r) for r in res["all"]))
            lines.append("maximal: " + " ".join(fmt(r) for r in res["maximal"]))
        elif task == "extremal":
            for e in res:
                lam = "(" + ",".join(map(str, e["lambda"])) + ")"
                lines.append(f"beta_{e['i']},{lam}(R/I) = {e['value']}")
        elif task == "reg-pdim":
            for key in ("reg_quotient", "pdim_quotient", "reg_ideal", "pdim_ideal"):
                value = "undefined" if res[key] is None else res[key]
                lines.append(f"{key}: {value}")
        elif task.startswith("propagate:"):
            lines.append(f"Betti table of I_{res['m']}:")
            lines.append(BettiTable.from_json(res["betti"]).render())
        elif task == "verify":
            for c in res["checks"]:
                mu = "(" + ",".join(map(str, c["mu"])) + ")"
                lines.append(f"{c['status']} Tor_{c['i']}<{mu}>: formula={c['formula']} oracle={c['oracle']}")
            for c in res["beyond_candidates"]:
                mu = "(" + ",".join(map(str, c["mu"])) + ")"
                lines.append(f"{c['status']} outside bound <{mu}>: oracle={c['oracle']}")
            lines.append(f"verify: {res['status']} ({res['failures']} failures)")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="symtor",
        description="Equivariant Betti numbers of S_n-invariant monomial ideals.",
    )
    parser.add_argument("job", nargs="?", default="-", help="JSON job file, or - for stdin")
    parser.add_argument("--format", choices=("table", "json"), default="table")
    parser.add_argument("--tasks", default=None,
                        help="comma-separated task list, overriding the job's own")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: machine parallelism)")
    args = parser.parse_args(argv)

    try:
        if args.job == "-":
            text = sys.stdin.read()
        else:
            with open(args.job) as fh:
                text = fh.read()
        job = parse_job(text)
        if args.tasks is not None:
            names = [t.strip() for t in args.tasks.split(",") if t.strip()]
            job = replace(job, tasks=tuple(_check_task(t, job.n) for t in names))
        workers = args.threads if args.threads is not None else default_workers()
        if workers < 1:
            raise JobError("--threads must be >= 1")
        report = run(job, workers=workers)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(render_text(report))
    verify = report["results"].get("verify")
    if verify is not None and verify["status"] != "PASS":
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

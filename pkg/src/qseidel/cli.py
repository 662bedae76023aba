"""Command-line front end.

Subcommands: verify (theorem sweep or a single case), product, degree,
neighborhood, join.  Exit code 0 means every requested check passed, 1
means some case failed, 2 means the request itself was malformed and no
computation ran.  Output is byte-stable: reports are rendered from
canonically ordered records, so the worker count never changes a byte.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import grassmann, neighborhoods, perms, quantum

FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation; unused fields stay None."""

    command: str
    fmt: str = "text"
    n: Optional[int] = None
    k: Optional[int] = None
    root: Optional[int] = None
    u: Optional[str] = None
    w: Optional[str] = None
    lam: Optional[str] = None
    mu: Optional[str] = None
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    lam_b: Optional[str] = None
    d: Optional[int] = None
    roots_y: Optional[str] = None
    roots_z: Optional[str] = None
    n_max: Optional[int] = None
    mode: str = "exhaustive"
    sample_size: Optional[int] = None
    seed: Optional[int] = None
    jobs: Optional[int] = None


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def fmt_term(shape, q: int, coeff: int) -> str:
    inner = ",".join(str(p) for p in shape)
    return f"q^{q} * [({inner})] x{coeff}"


def render_qclass_text(c: quantum.QClass) -> str:
    if c.is_zero():
        return "0\n"
    lines = [fmt_term(shape, q, coeff) for (shape, q), coeff in c.items_canonical()]
    return "\n".join(lines) + "\n"


def render_case_text(rec: dict) -> str:
    head = (
        f"case n={rec['n']} k={rec['k']} i={rec['i']} u={rec['u']} "
        f"beta={'-' if rec['beta'] is None else rec['beta']} "
        f"dualized={fmt_bool(rec['dualized'])} d={rec['d']} pass={fmt_bool(rec['pass'])}"
    )
    checks = " ".join(f"{name}={fmt_bool(val)}" for name, val in sorted(rec["checks"].items()))
    lines = [head, f"  checks {checks}"]
    detail = rec.get("counterexample_detail")
    if detail:
        for key in ("gamma", "target", "gamma_minus_target", "target_minus_gamma"):
            lines.append(f"  {key}: " + (" | ".join(detail[key]) if detail[key] else "-"))
        lines.append(
            f"  v_partition={detail['v_partition']} target_partition={detail['target_partition']} "
            f"length_v={detail['length_v']} length_target={detail['length_target']}"
        )
        terms = "; ".join(
            fmt_term(t["partition"].split(",") if t["partition"] else (), t["q"], t["coeff"])
            for t in detail["product_terms"]
        )
        lines.append(f"  product: {terms if terms else '0'}")
    return "\n".join(lines) + "\n"


def render_sweep_text(rep: neighborhoods.SweepReport) -> str:
    out = []
    for case in rep.failures:
        out.append(render_case_text(case.record()))
    sampled = f" sample_size={rep.sample_size} seed={rep.seed}" if rep.mode == "sampled" else ""
    out.append(
        f"sweep n_max={rep.n_max} mode={rep.mode}{sampled} "
        f"cases={rep.total} pass={rep.total - len(rep.failures)} fail={len(rep.failures)}\n"
    )
    return "".join(out)


CSV_COLUMNS = ("n", "k", "i", "u", "beta", "dualized", "d", "pass") + neighborhoods.CHECK_NAMES


def render_cases_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        row = [
            rec["n"],
            rec["k"],
            rec["i"],
            rec["u"],
            "" if rec["beta"] is None else rec["beta"],
            fmt_bool(rec["dualized"]),
            rec["d"],
            fmt_bool(rec["pass"]),
        ]
        row.extend(fmt_bool(rec["checks"][name]) for name in neighborhoods.CHECK_NAMES)
        writer.writerow(row)
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qseidel",
        description="Curve-neighborhood and quantum-product checks for Grassmannian Schubert classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="verify the neighborhood theorem on a sweep or one case")
    pv.add_argument("--n-max", type=int, help="sweep all cases with 2 <= n <= n-max")
    pv.add_argument("--n", type=int, help="single case: ambient rank")
    pv.add_argument("--k", type=int, help="single case: subspace dimension")
    pv.add_argument("--root", type=int, help="single case: cocharacter index i, 0 <= i <= n-1")
    pv.add_argument("--u", type=str, help='single case: permutation, e.g. "1,3,2,4"')
    pv.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    pv.add_argument("--sample-size", type=int, help="number of sampled cases (sampled mode)")
    pv.add_argument("--seed", type=int, default=None, help="sample seed (default 0)")
    pv.add_argument("--jobs", type=int, default=None, help="worker processes for the sweep")
    pv.add_argument("--format", choices=FORMATS, default="text")

    pp = sub.add_parser("product", help="quantum product of two Schubert classes")
    pp.add_argument("--n", type=int, required=True)
    pp.add_argument("--k", type=int, required=True)
    pp.add_argument("--lhs", type=str, required=True, help='left partition, e.g. "2,1" ("" = empty)')
    pp.add_argument("--rhs", type=str, required=True, help="right partition")
    pp.add_argument("--format", choices=("text", "json"), default="text")

    pd = sub.add_parser("degree", help="smallest quantum degree of a cocharacter product")
    pd.add_argument("--n", type=int, required=True)
    pd.add_argument("--k", type=int, required=True)
    pd.add_argument("--lambda", dest="lam", type=str, required=True, help="codimension partition")
    pd.add_argument("--root", type=int, required=True, help="cocharacter index, 0 <= root <= n-1")
    pd.add_argument("--format", choices=("text", "json"), default="text")

    pn = sub.add_parser("neighborhood", help="fixed points of a degree-d curve neighborhood")
    pn.add_argument("--n", type=int, required=True)
    pn.add_argument("--k", type=int, required=True)
    pn.add_argument("--d", type=int, required=True)
    pn.add_argument(
        "--lambda-b", dest="lam_b", type=str, required=True,
        help='dimension partition of the B-stable side ("" = empty)',
    )
    pn.add_argument("--mu", type=str, required=True, help="codimension partition of the opposite side")
    pn.add_argument("--format", choices=("text", "json"), default="text")

    pj = sub.add_parser("join", help="join of the two parabolic projections of w")
    pj.add_argument("--n", type=int, required=True)
    pj.add_argument("--w", type=str, required=True, help="permutation in one-line notation")
    pj.add_argument("--roots-y", type=str, required=True, help='first parabolic set, e.g. "2,3"')
    pj.add_argument("--roots-z", type=str, required=True, help="second parabolic set")
    pj.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {
        "command": args.command,
        "fmt": getattr(args, "format", "text"),
        "n": getattr(args, "n", None),
        "k": getattr(args, "k", None),
        "root": getattr(args, "root", None),
        "u": getattr(args, "u", None),
        "w": getattr(args, "w", None),
        "lam": getattr(args, "lam", None),
        "mu": getattr(args, "mu", None),
        "lhs": getattr(args, "lhs", None),
        "rhs": getattr(args, "rhs", None),
        "lam_b": getattr(args, "lam_b", None),
        "d": getattr(args, "d", None),
        "roots_y": getattr(args, "roots_y", None),
        "roots_z": getattr(args, "roots_z", None),
        "n_max": getattr(args, "n_max", None),
        "mode": getattr(args, "mode", "exhaustive"),
        "sample_size": getattr(args, "sample_size", None),
        "seed": getattr(args, "seed", None),
        "jobs": getattr(args, "jobs", None),
    }
    return RunConfig(**fields)


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    single = cfg.n is not None or cfg.k is not None or cfg.root is not None or cfg.u is not None
    if cfg.n_max is not None and single:
        raise ValueError("give either --n-max or a single case (--n --k --root --u), not both")
    if cfg.n_max is None and not single:
        raise ValueError("give --n-max for a sweep or --n --k --root --u for one case")
    if cfg.n_max is not None:
        rep = neighborhoods.sweep(
            cfg.n_max,
            mode=cfg.mode,
            sample_size=cfg.sample_size,
            seed=cfg.seed,
            jobs=cfg.jobs,
        )
        code = 0 if rep.all_passed else 1
        if cfg.fmt == "json":
            return dumps_json(rep.record()), code
        if cfg.fmt == "csv":
            return render_cases_csv([c.record() for c in rep.cases]), code
        return render_sweep_text(rep), code
    if cfg.n is None or cfg.k is None or cfg.root is None or cfg.u is None:
        raise ValueError("a single case needs all of --n --k --root --u")
    report = neighborhoods.verify_case(cfg.n, cfg.k, cfg.root, perms.parse_perm(cfg.u))
    code = 0 if report.passed else 1
    rec = report.record()
    if cfg.fmt == "json":
        return dumps_json(rec), code
    if cfg.fmt == "csv":
        return render_cases_csv([rec]), code
    return render_case_text(rec), code


def cmd_product(cfg: RunConfig) -> tuple[str, int]:
    lhs = grassmann.parse_partition(cfg.lhs)
    rhs = grassmann.parse_partition(cfg.rhs)
    prod = quantum.quantum_product(lhs, rhs, cfg.k, cfg.n)
    if cfg.fmt == "json":
        obj = {
            "n": cfg.n,
            "k": cfg.k,
            "lhs": grassmann.fmt_partition(lhs),
            "rhs": grassmann.fmt_partition(rhs),
            "terms": quantum.qclass_records(prod),
        }
        return dumps_json(obj), 0
    return render_qclass_text(prod), 0


def cmd_degree(cfg: RunConfig) -> tuple[str, int]:
    lam = grassmann.check_box(grassmann.parse_partition(cfg.lam), cfg.k, cfg.n)
    root = cfg.root
    if not 0 <= root <= cfg.n - 1:
        raise ValueError(f"need 0 <= root <= n-1, got {root}")
    if root == 0:
        d, beta, dualized = 0, None, False
    elif root >= cfg.k:
        beta, dualized = root, False
        d = quantum.seidel_degree(lam, beta, cfg.k, cfg.n)
    else:
        lam_dual, k_dual = grassmann.dual_case(lam, cfg.k, cfg.n)
        beta, dualized = cfg.n - root, True
        d = quantum.seidel_degree(lam_dual, beta, k_dual, cfg.n)
    if cfg.fmt == "json":
        obj = {
            "n": cfg.n,
            "k": cfg.k,
            "root": root,
            "lambda": grassmann.fmt_partition(lam),
            "beta": beta,
            "dualized": dualized,
            "d": d,
        }
        return dumps_json(obj), 0
    return f"{d}\n", 0


def cmd_neighborhood(cfg: RunConfig) -> tuple[str, int]:
    lam_b = grassmann.parse_partition(cfg.lam_b)
    mu = grassmann.parse_partition(cfg.mu)
    gamma = neighborhoods.gamma_fp(lam_b, mu, cfg.d, cfg.k, cfg.n)
    subsets = sorted(grassmann.subset_of(m) for m in gamma)
    if cfg.fmt == "json":
        obj = {
            "n": cfg.n,
            "k": cfg.k,
            "d": cfg.d,
            "lambda_b": grassmann.fmt_partition(lam_b),
            "mu": grassmann.fmt_partition(mu),
            "gamma": [",".join(map(str, s)) for s in subsets],
        }
        return dumps_json(obj), 0
    return "".join(",".join(map(str, s)) + "\n" for s in subsets), 0


def cmd_join(cfg: RunConfig) -> tuple[str, int]:
    w = perms.parse_perm(cfg.w)
    if len(w) != cfg.n:
        raise ValueError(f"rank mismatch: {len(w)} vs n={cfg.n}")
    ry = perms.parse_roots(cfg.roots_y, cfg.n)
    rz = perms.parse_roots(cfg.roots_z, cfg.n)
    rx = ry & rz
    uy = perms.min_coset_rep(w, ry)
    uz = perms.min_coset_rep(w, rz)
    result = perms.join(uy, uz, rx)
    if cfg.fmt == "json":
        obj = {
            "n": cfg.n,
            "w": perms.fmt_perm(w),
            "roots_y": perms.fmt_roots(ry),
            "roots_z": perms.fmt_roots(rz),
            "roots_meet": perms.fmt_roots(rx),
            "u_y": perms.fmt_perm(uy),
            "u_z": perms.fmt_perm(uz),
            "join": None if result is None else perms.fmt_perm(result),
        }
        return dumps_json(obj), 0
    return ("NoJoin" if result is None else perms.fmt_perm(result)) + "\n", 0


HANDLERS = {
    "verify": cmd_verify,
    "product": cmd_product,
    "degree": cmd_degree,
    "neighborhood": cmd_neighborhood,
    "join": cmd_join,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = config_from_args(args)
    try:
        text, code = HANDLERS[cfg.command](cfg)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

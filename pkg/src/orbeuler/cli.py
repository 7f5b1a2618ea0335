"""Command-line front end emitting exact, machine-readable certificates.

Subcommands: ``local``, ``germ``, ``global``, ``arrangement``, ``cusps``,
``bound``, ``check``.  Output is human-readable text by default or a single
JSON object per invocation with ``--format machine``; all rationals are
emitted as ``"p/q"`` strings (decimals appear only as text annotations).

Exit codes: 0 when the computation succeeded and any checked inequality
holds; 1 when a checker reports violation, hypothesis-not-met or
precondition-failed; 2 on invalid input.  The CLI performs no arithmetic of
its own.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .applications import (
    ArrangementData,
    canonical_degree_bound,
    check_arrangement,
    check_singularity_budget,
    cusp_count_bound,
    cusp_ratio_optimize,
)
from .germs import DEFAULT_CAP, CurveGerm, germ_from_dict, germ_invariants
from .local import euler_local, singularity_from_dict
from .pairs import (
    check_bmy,
    check_bmy_multiplicities,
    euler_orbifold_global,
    pair_from_dict,
    pair_kd_squared,
)
from .rationals import as_rational, format_rational

_EXIT_BY_VERDICT = {
    "computed": 0,
    "proved": 0,
    "consistent-upper-bound": 0,
    "holds": 0,
    "no-obstruction": 0,
    "LCT-fails": 0,
    "violation": 1,
    "hypothesis-not-met": 1,
    "precondition-failed": 1,
}

_INVALID_INPUT = 2


def _decimal(x) -> str:
    # Annotation only: core results stay exact.
    return f"{float(Fraction(x)):.7g}"


def _rat(x) -> str:
    return format_rational(x)


def _load_document(source: str):
    s = source.strip()
    if s == "-":
        return json.load(sys.stdin)
    if s.startswith("{") or s.startswith("["):
        return json.loads(s)
    with open(source, encoding="utf-8") as handle:
        return json.load(handle)


def _parallel_map(function, items, jobs: int):
    if jobs < 1:
        raise ValueError(f"--jobs must be >= 1, got {jobs}")
    if jobs == 1 or len(items) <= 1:
        return [function(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(function, items))


def _eval_local_doc(doc):
    return euler_local(singularity_from_dict(doc))


def _eval_germ_doc(payload):
    doc, cap = payload
    germ = CurveGerm.parse(doc) if isinstance(doc, str) else germ_from_dict(doc)
    return germ_invariants(germ, cap)


# --- subcommand handlers ------------------------------------------------
# Each returns (verdict, values, tags, text lines, optional exit override).


def _local_inputs(args):
    shorthand = [
        name
        for name in ("ordinary", "cyclic", "star", "germ_mu_tau")
        if getattr(args, name) is not None
    ]
    if args.input is not None and shorthand:
        raise ValueError("ambiguous input: both a document and inline flags were given")
    if len(shorthand) > 1:
        raise ValueError(f"ambiguous input: several inline flags ({', '.join(shorthand)})")
    if args.input is not None:
        doc = _load_document(args.input)
        return doc if isinstance(doc, list) else [doc]
    if args.ordinary is not None:
        return [{"type": "ordinary", "coeffs": args.ordinary.split(",")}]
    if args.cyclic is not None:
        n, q, d1, d2 = args.cyclic.split(",")
        return [{"type": "cyclic", "n": int(n), "q": int(q), "d1": d1, "d2": d2}]
    if args.star is not None:
        head, *arm_texts = args.star.split(";")
        if len(arm_texts) != 3:
            raise ValueError("--star needs 'b;n,q,d;n,q,d;n,q,d'")
        arms = []
        for arm_text in arm_texts:
            n, q, d = arm_text.split(",")
            arms.append([int(n), int(q), d])
        return [{"type": "star", "b": int(head), "arms": arms}]
    if args.germ_mu_tau is not None:
        mu, tau = args.germ_mu_tau.split(",")
        return [{"type": "germ_mu_tau", "mu": int(mu), "tau": int(tau)}]
    raise ValueError("no input: give a document or one of --ordinary/--cyclic/--star/--germ-mu-tau")


_LOCAL_TAGS = {
    "ordinary": "ordinary-point-formula",
    "cyclic": "cyclic-quotient-formula",
    "star": "star-quotient-formula",
    "germ_mu_tau": "milnor-tjurina-difference",
}


def _cmd_local(args):
    docs = _local_inputs(args)
    results = _parallel_map(_eval_local_doc, docs, args.jobs)
    items = [
        {"value": _rat(value.value), "kind": value.exactness.value, "lc": value.lc_label()}
        for value in results
    ]
    tags = sorted({_LOCAL_TAGS.get(doc.get("type"), "local-euler") for doc in docs})
    lines = [
        f"value={item['value']} (~{_decimal(result.value)}) kind={item['kind']} lc={item['lc']}"
        for item, result in zip(items, results)
    ]
    values = items[0] if len(items) == 1 else {"items": items}
    return "computed", values, tags, lines, None


def _cmd_germ(args):
    source = args.input.strip()
    cap = args.cap
    if cap is None:
        cap = int(os.environ.get("OE_DEFAULT_CAP", DEFAULT_CAP))
    if source == "-" or source.startswith("{") or source.startswith("["):
        doc = _load_document(source)
    elif os.path.exists(source) and source.endswith(".json"):
        doc = _load_document(source)
    else:
        doc = source
    docs = doc if isinstance(doc, list) else [doc]
    results = _parallel_map(_eval_germ_doc, [(entry, cap) for entry in docs], args.jobs)
    items = []
    lines = []
    worst = "no-obstruction"
    for invariants in results:
        defect = invariants.mu - invariants.tau
        verdict = "LCT-fails" if defect > 0 else "no-obstruction"
        if verdict == "LCT-fails":
            worst = "LCT-fails"
        items.append(
            {
                "mu": str(invariants.mu),
                "tau": str(invariants.tau),
                "e_orb": str(defect),
                "lct": verdict,
                "truncation": str(invariants.truncation_used),
            }
        )
        lines.append(f"mu={invariants.mu} tau={invariants.tau} e_orb={defect} lct={verdict}")
    values = items[0] if len(items) == 1 else {"items": items}
    tags = ["milnor-tjurina-truncation", "comparison-theorem-obstruction"]
    return worst, values, tags, lines, None


def _cmd_global(args):
    pair = pair_from_dict(_load_document(args.input))
    global_value = euler_orbifold_global(pair)
    kd_sq = pair_kd_squared(pair)
    bmy = check_bmy(pair)
    multiplicities = check_bmy_multiplicities(pair)
    values = {
        "e_orb": _rat(global_value.value),
        "kind": global_value.exactness.value,
        "lc": "lc" if global_value.lc else "non-lc",
        "kd_sq": _rat(kd_sq),
        "bmy_lhs": _rat(bmy.lhs),
        "bmy_rhs": _rat(bmy.rhs),
        "bmy_slack": _rat(bmy.slack),
        "bmy_verdict": bmy.verdict.value,
        "bmy_equality": bmy.equality,
        "mult_lhs": _rat(multiplicities.lhs),
        "mult_rhs": _rat(multiplicities.rhs),
        "mult_slack": _rat(multiplicities.slack),
        "mult_verdict": multiplicities.verdict.value,
        "notes": list(bmy.notes + multiplicities.notes),
    }
    lines = [
        f"e_orb={_rat(global_value.value)} (~{_decimal(global_value.value)}) "
        f"kind={global_value.exactness.value} lc={values['lc']}",
        f"(K+D)^2={_rat(kd_sq)}",
        f"bmy: lhs={_rat(bmy.lhs)} rhs={_rat(bmy.rhs)} verdict={bmy.verdict.value}"
        + (" equality" if bmy.equality else ""),
        f"multiplicities: lhs={_rat(multiplicities.lhs)} rhs={_rat(multiplicities.rhs)} "
        f"verdict={multiplicities.verdict.value}",
    ]
    lines.extend(f"note: {note}" for note in bmy.notes + multiplicities.notes)
    tags = ["global-euler-assembly", "bmy-inequality", "multiplicity-refinement"]
    exit_code = max(
        _EXIT_BY_VERDICT[bmy.verdict.value], _EXIT_BY_VERDICT[multiplicities.verdict.value]
    )
    return bmy.verdict.value, values, tags, lines, exit_code


def _cmd_arrangement(args):
    if args.input is not None and (args.k is not None or args.t is not None):
        raise ValueError("ambiguous input: both a document and inline flags were given")
    if args.input is not None:
        doc = _load_document(args.input)
        if "k" not in doc or "t" not in doc:
            raise ValueError("arrangement document needs 'k' and 't' fields")
        data = ArrangementData.from_counts(doc["k"], doc["t"])
    else:
        if args.k is None or args.t is None:
            raise ValueError("give --k and --t, or a document")
        counts = {}
        for piece in args.t.split(","):
            r, _, count = piece.partition(":")
            counts[int(r)] = int(count)
        data = ArrangementData.from_counts(args.k, counts)
    report = check_arrangement(data)
    values = {
        "k": str(report.k),
        "incidence_sum": str(report.incidence_sum),
        "incidence_bound": str(report.incidence_bound),
        "incidence_equality": report.incidence_equality,
        "square_sum": str(report.square_sum),
        "square_bound": str(report.square_bound),
        "square_equality": report.square_equality,
    }
    if report.verdict == "hypothesis-not-met":
        lines = [f"hypothesis-not-met (a point lies on {report.large_pencil_r} > 2k/3 lines)"]
        values["large_pencil_r"] = str(report.large_pencil_r)
    else:
        lines = [
            f"verdict={report.verdict}",
            f"sum r*t_r = {report.incidence_sum} >= {report.incidence_bound}"
            + (" (equality)" if report.incidence_equality else f" (slack {report.incidence_slack})"),
            f"sum r^2*t_r = {report.square_sum} >= {report.square_bound}"
            + (" (equality)" if report.square_equality else f" (slack {report.square_slack})"),
        ]
    return report.verdict, values, ["line-arrangement-bounds"], lines, None


def _cmd_cusps(args):
    if args.optimize:
        if args.degree is not None or args.alpha is not None:
            raise ValueError("--optimize does not take --degree/--alpha")
        alpha_star, ratio_star = cusp_ratio_optimize(args.grid)
        values = {"alpha_star": _rat(alpha_star), "ratio_star": _rat(ratio_star)}
        lines = [
            f"alpha_star={_rat(alpha_star)} (~{_decimal(alpha_star)})",
            f"ratio_star={_rat(ratio_star)} (~{_decimal(ratio_star)})",
        ]
        return "computed", values, ["cusp-ratio-bound"], lines, None
    if args.degree is None or args.alpha is None:
        raise ValueError("give --degree and --alpha, or --optimize with --grid")
    alpha = as_rational(args.alpha)
    count = cusp_count_bound(args.degree, alpha)
    values = {"max_cusps": str(count), "degree": str(args.degree), "alpha": _rat(alpha)}
    lines = [f"max_cusps={count} (degree {args.degree}, alpha {_rat(alpha)})"]
    return "computed", values, ["cusp-piecewise-formula", "singularity-budget"], lines, None


def _cmd_bound(args):
    bound = canonical_degree_bound(args.c1_sq, args.c2, args.genus, args.ordinary)
    values = {
        "bound": _rat(bound),
        "c1_sq": str(args.c1_sq),
        "c2": str(args.c2),
        "genus": str(args.genus),
        "ordinary": args.ordinary,
    }
    lines = [f"K.C <= {_rat(bound)} (~{_decimal(bound)})"]
    return "computed", values, ["canonical-degree-bound"], lines, None


def _cmd_check(args):
    doc = _load_document(args.input)
    for key in ("c1_sq", "c2", "alpha", "k_dot_c", "c_sq", "points"):
        if key not in doc:
            raise ValueError(f"check document missing field {key!r}")
    points = []
    for entry in doc["points"]:
        if isinstance(entry, dict):
            if "mu" not in entry or "e_orb" not in entry:
                raise ValueError(f"point entry missing 'mu' or 'e_orb': {entry!r}")
            points.append((entry["mu"], entry["e_orb"]))
        else:
            mu, local_value = entry
            points.append((mu, local_value))
    report = check_singularity_budget(
        doc["c1_sq"], doc["c2"], doc["alpha"], doc["k_dot_c"], doc["c_sq"], points
    )
    values = {
        "lhs": _rat(report.lhs),
        "rhs": _rat(report.rhs),
        "slack": _rat(report.slack),
        "equality": report.equality,
    }
    lines = [
        f"lhs={_rat(report.lhs)} rhs={_rat(report.rhs)} verdict={report.verdict}"
        + (" equality" if report.equality else f" slack={_rat(report.slack)}")
    ]
    return report.verdict, values, ["singularity-budget"], lines, None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbeuler",
        description="Exact certificates for orbifold Euler numbers of surface pairs.",
    )
    parser.add_argument(
        "--format", choices=("text", "machine"), default="text", help="output format"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    local = subparsers.add_parser("local", help="evaluate a local singularity")
    local.add_argument("input", nargs="?", help="document path, '-', or inline JSON")
    local.add_argument("--ordinary", help="comma-separated branch weights, e.g. 1/2,1/2,1/2")
    local.add_argument("--cyclic", help="n,q,d1,d2")
    local.add_argument("--star", help="b;n,q,d;n,q,d;n,q,d")
    local.add_argument("--germ-mu-tau", dest="germ_mu_tau", help="mu,tau")
    local.add_argument("--jobs", type=int, default=1, help="parallel workers for list input")
    local.set_defaults(handler=_cmd_local)

    germ = subparsers.add_parser("germ", help="Milnor/Tjurina numbers of a plane germ")
    germ.add_argument("input", help="polynomial in x,y; document path; '-'; or inline JSON")
    germ.add_argument("--cap", type=int, help=f"truncation cap (default {DEFAULT_CAP})")
    germ.add_argument("--jobs", type=int, default=1, help="parallel workers for list input")
    germ.set_defaults(handler=_cmd_germ)

    global_ = subparsers.add_parser("global", help="global Euler number and BMY checks")
    global_.add_argument("input", help="pair document path, '-', or inline JSON")
    global_.set_defaults(handler=_cmd_global)

    arrangement = subparsers.add_parser("arrangement", help="line arrangement bounds")
    arrangement.add_argument("input", nargs="?", help="document path, '-', or inline JSON")
    arrangement.add_argument("--k", type=int, help="number of lines")
    arrangement.add_argument("--t", help="point counts, e.g. 2:3,3:4")
    arrangement.set_defaults(handler=_cmd_arrangement)

    cusps = subparsers.add_parser("cusps", help="cusp count bound or ratio optimization")
    cusps.add_argument("--degree", type=int, help="curve degree")
    cusps.add_argument("--alpha", help="weight in (0, 5/6]")
    cusps.add_argument("--optimize", action="store_true", help="minimize the asymptotic ratio")
    cusps.add_argument("--grid", type=int, default=10000, help="grid denominator (>= 48)")
    cusps.set_defaults(handler=_cmd_cusps)

    bound = subparsers.add_parser("bound", help="canonical degree bound")
    bound.add_argument("--c1-sq", dest="c1_sq", type=int, required=True)
    bound.add_argument("--c2", type=int, required=True)
    bound.add_argument("--genus", type=int, required=True)
    bound.add_argument("--ordinary", action="store_true", help="curve has only ordinary singularities")
    bound.set_defaults(handler=_cmd_bound)

    check = subparsers.add_parser("check", help="general singularity budget inequality")
    check.add_argument("input", help="document path, '-', or inline JSON")
    check.set_defaults(handler=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        verdict, values, tags, lines, exit_override = args.handler(args)
    except (ValueError, KeyError, TypeError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return _INVALID_INPUT
    if args.format == "machine":
        print(json.dumps({"verdict": verdict, "values": values, "paper_refs": tags}))
    else:
        for line in lines:
            print(line)
    if exit_override is not None:
        return exit_override
    return _EXIT_BY_VERDICT[verdict]


if __name__ == "__main__":
    sys.exit(main())

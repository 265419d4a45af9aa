"""Command-line front end: subcommands for every verification surface, with
JSON (default), markdown and CSV emitters and golden-file reproduction.

Exit codes: 0 success, 1 a verification ran and failed, 2 usage error.
Reports are deterministic for fixed inputs and --seed; wall-clock timings are
only attached when --timings is passed so that byte-level comparison of
reports stays meaningful.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .groups import GroupError, build_named, build_quaternion, named_subgroups, subgroup_by_label
from .reptheory import class_data, irreducible_characters, rational_irreducibles
from .decomp import (
    MultiplicityVector,
    factor_dimensions,
    is_trivial_decomposition,
    multiplicities_from_quotient_genera,
)
from .actions import (
    Signature,
    check_extension,
    classify,
    extension_data,
    family_label,
    genus_zero_actions,
    one_dimensional_families,
    quotient_data,
    ske_from_json,
    validate_ske,
)
from . import siegel as sg
from . import curves as cv


def _parse_signature(text: str) -> Signature:
    head, _, tail = text.partition(":")
    return Signature(int(head), tuple(int(k) for k in tail.split(",") if k))


def _parse_ints(text: str) -> tuple[int, ...]:
    return tuple(int(v) for v in text.split(",") if v != "")


def _load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# subcommands: each returns (exit_code, results_dict)
# ---------------------------------------------------------------------------


def cmd_groups(args) -> tuple[int, dict]:
    G = build_named(args.name, n=args.n, m=args.m)
    out = {
        "group": G.to_json(),
        "order": G.order,
        "generators": [G.names[g] for g in G.generators],
        "order_histogram": dict(
            (str(k), v) for k, v in G.order_histogram()
        ),
        "center_size": len(G.center()),
        "conjugacy_classes": len(G.conjugacy_classes()),
    }
    if G.kind == "quaternion":
        subs = named_subgroups(G)
        out["named_subgroups"] = {
            lbl: [G.names[i] for i in sub.elements] for lbl, sub in sorted(subs.items())
        }
    return 0, out


def cmd_chars(args) -> tuple[int, dict]:
    cd = class_data(args.n)
    G = cd.group
    chars = irreducible_characters(args.n)
    rats = rational_irreducibles(args.n)
    return 0, {
        "n": args.n,
        "class_representatives": [G.names[r] for r in cd.reps],
        "class_sizes": list(cd.sizes),
        "irreducibles": [
            {
                "label": ch.label,
                "degree": int(ch.degree),
                "values": [repr(v.reduce_conductor()) for v in ch.values],
                "values_exact": [v.to_json() for v in ch.values],
            }
            for ch in chars
        ],
        "rational_irreducibles": [
            {
                "label": r.label,
                "constituents": list(r.constituents),
                "schur_index": r.schur_index,
                "degree": int(r.character.degree),
            }
            for r in rats
        ],
    }


def cmd_decompose(args) -> tuple[int, dict]:
    if args.ske:
        ske = ske_from_json(_load_json(args.ske))
        ok, msg = validate_ske(ske)
        if not ok:
            return 1, {"error": f"invalid ske: {msg}"}
        mv = multiplicities_from_quotient_genera(ske)
        source = {"ske": ske.to_json()}
    else:
        if args.a is None or args.b is None:
            raise SystemExit2("decompose needs either --ske or both --a and --b")
        mv = MultiplicityVector(args.n, _parse_ints(args.a), _parse_ints(args.b))
        source = {}
    table = factor_dimensions(mv)
    trivial = is_trivial_decomposition(mv)
    return 0, {
        **source,
        "multiplicities": mv.to_json(),
        "factor_table": table.to_json(),
        "triviality": trivial.to_json(),
    }


def cmd_classify(args) -> tuple[int, dict]:
    G = build_quaternion(args.n)
    sig = _parse_signature(args.signature)
    report = classify(G, sig, max_candidates=args.budget)
    return 0, {"n": args.n, **report.to_json()}


def cmd_families(args) -> tuple[int, dict]:
    fams = one_dimensional_families(args.n)
    return 0, {
        "n": args.n,
        "count": len(fams),
        "families": [f.to_json() for f in fams],
    }


def cmd_genus_zero(args) -> tuple[int, dict]:
    recs = genus_zero_actions(args.n, args.max_b)
    ok = all(r.witness_valid and r.witness_genus_zero for r in recs)
    out = {
        "n": args.n,
        "max_b": args.max_b,
        "records": [r.to_json() for r in recs],
        "all_witnesses_ok": ok,
    }
    if args.exhaustive:
        from .actions import genus_zero_exhaustive_scan

        scan = genus_zero_exhaustive_scan(args.n, args.max_periods, jobs=args.jobs)
        out["exhaustive_scan"] = scan.to_json()
        ok = ok and scan.ok
    return (0 if ok else 1), out


def cmd_quotient(args) -> tuple[int, dict]:
    ske = ske_from_json(_load_json(args.ske))
    ok, msg = validate_ske(ske)
    if not ok:
        return 1, {"error": f"invalid ske: {msg}"}
    K = subgroup_by_label(ske.group, args.subgroup)
    qd = quotient_data(ske, K)
    return 0, {
        "ske": ske.to_json(),
        "subgroup": args.subgroup,
        "quotient": qd.to_json(),
    }


def cmd_extend(args) -> tuple[int, dict]:
    ske = ske_from_json(_load_json(args.ske)) if args.ske else None
    n = ske.group.params["n"] if ske else args.n
    if n is None:
        raise SystemExit2("extend needs --ske or --n")
    fam = args.family or (family_label(n, ske.signature) if ske else None)
    if fam is None:
        raise SystemExit2("cannot determine the family; pass --family")
    theta, theta_prime, words = extension_data(n, fam, args.super)
    if ske is not None:
        theta = ske
    report = check_extension(theta, theta_prime, words)
    return (0 if report.ok else 1), {
        "n": n,
        "family": fam,
        "supergroup": args.super,
        "theta": theta.to_json(),
        "theta_prime": theta_prime.to_json(),
        "report": report.to_json(),
    }


def cmd_siegel(args) -> tuple[int, dict]:
    fx = sg.load_fixture(args.fixture)
    data = fx["data"]
    gens = sg.fixture_generators(data)
    base = {"fixture": fx["name"], "sha256": fx["sha256"]}
    if args.action == "verify":
        out = dict(base)
        code = 0
        if "family" in data:
            rep = sg.verify_fixed_family(gens, sg.family_from_fixture(data))
            out["fixed_family"] = rep.to_json()
            if "family_variant" in data:
                out["fixed_family_variant"] = sg.verify_fixed_family(
                    gens, sg.family_with_variant(data)
                ).to_json()
            if not rep.ok:
                out["erratum"] = "printed family is not exactly fixed by the generators"
                code = 1
        if "period_matrix" in data:
            Z0 = sg.prop13_period_matrix(data)
            residual = sg.verify_fixed_point_numeric(gens, Z0, tol=args.tol)
            out["period_matrix_residual_below_tol"] = bool(residual < args.tol)
            out["tolerance"] = args.tol
            if residual >= args.tol:
                out["erratum"] = "printed period matrix is not numerically fixed"
                code = 1
        return code, out
    if args.action == "group":
        target = build_named(data["target_group"]) if data.get("target_group") else None
        rep = sg.verify_group_data(
            gens, data.get("relations"), target, gen_names=data.get("generator_names")
        )
        out = dict(base)
        out["group_data"] = rep.to_json()
        out["expected_order"] = data.get("expected_order")
        code = 0 if (rep.ok and rep.order == data.get("expected_order")) else 1
        return code, out
    if args.action == "locus":
        rep = sg.fixed_locus_dimension(
            gens, starts=args.starts, rank_tol=args.tol, rng_seed=args.seed
        )
        out = dict(base)
        loc = rep.to_json()
        loc["point"] = None  # keep reports deterministic across BLAS variants
        loc["singular_values"] = None
        loc["max_residual"] = None if rep.max_residual is None else bool(rep.max_residual < 1e-9)
        out["locus"] = loc
        out["expected_dimension"] = data.get("expected_dimension")
        code = 0 if rep.dimension == data.get("expected_dimension") else 1
        return code, out
    raise SystemExit2(f"unknown siegel action {args.action!r}")


def cmd_curve(args) -> tuple[int, dict]:
    t = complex(args.t.replace("i", "j")) if args.t else None
    if args.verify and t is None:
        raise SystemExit2("--verify needs a numeric --t")
    model = cv.build_model(args.n, t)
    out = {"model": model.to_json()}
    code = 0
    if args.verify:
        rep = cv.verify_automorphisms(model, samples=args.samples, seed=args.seed)
        out["automorphisms"] = rep.to_json()
        out["residual_below_tol"] = bool(rep.max_residual < 1e-8)
        bc = cv.branch_configuration(args.n, t)
        out["branch_count"] = bc.count
        out["branch_orbit_sizes"] = bc.orbit_sizes()
        out["point_map_group_order"] = cv.point_map_group_order(model)
        if not (rep.max_residual < 1e-8 and rep.rotation_exact):
            code = 1
    return code, out


def cmd_reproduce(args) -> tuple[int, dict]:
    from .reproduce import reproduce_report, load_expected

    report = reproduce_report(args.n)
    expected = load_expected(args.n)
    matches = report == expected
    out = {
        "n": args.n,
        "matches_expected": matches,
        "report": report,
    }
    if not matches:
        out["diff_hint"] = _first_diff(expected, report)
    return (0 if matches else 1), out


def _first_diff(a, b, path="$"):
    if type(a) is not type(b):
        return f"{path}: type {type(a).__name__} != {type(b).__name__}"
    if isinstance(a, dict):
        for k in sorted(set(a) | set(b)):
            if k not in a:
                return f"{path}.{k}: unexpected"
            if k not in b:
                return f"{path}.{k}: missing"
            d = _first_diff(a[k], b[k], f"{path}.{k}")
            if d:
                return d
        return None
    if isinstance(a, list):
        if len(a) != len(b):
            return f"{path}: length {len(a)} != {len(b)}"
        for i, (x, y) in enumerate(zip(a, b)):
            d = _first_diff(x, y, f"{path}[{i}]")
            if d:
                return d
        return None
    if a != b:
        return f"{path}: {a!r} != {b!r}"
    return None


# ---------------------------------------------------------------------------
# emitters
# ---------------------------------------------------------------------------


def _emit_markdown(results: dict) -> str:
    lines = []

    def walk(obj, depth=0):
        if isinstance(obj, dict):
            for k, v in obj.items():
                if _is_table(v):
                    lines.append(f"{'#' * (depth + 2)} {k}")
                    lines.extend(_table_lines(v))
                elif isinstance(v, dict) and v:
                    lines.append(f"{'#' * (depth + 2)} {k}")
                    walk(v, depth + 1)
                elif isinstance(v, list) and v and any(isinstance(x, (dict, list)) for x in v):
                    lines.append(f"{'#' * (depth + 2)} {k}")
                    walk(v, depth + 1)
                else:
                    lines.append(f"- **{k}**: {v}")
        elif isinstance(obj, list):
            for item in obj:
                walk(item, depth)

    walk(results)
    return "\n".join(lines) + "\n"


def _is_table(v) -> bool:
    return (
        isinstance(v, list)
        and v
        and all(isinstance(r, dict) for r in v)
        and len({tuple(sorted(r)) for r in v}) == 1
    )


def _table_lines(rows: list[dict]) -> list[str]:
    # machine-form duplicates (keys ending in _exact) stay JSON-only
    cols = [c for c in rows[0] if not c.endswith("_exact")]
    out = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    for r in rows:
        out.append("| " + " | ".join(str(r[c]) for c in cols) + " |")
    return out


def _emit_csv(results: dict) -> str:
    import csv
    import io

    table = next((v for v in results.values() if _is_table(v)), None)
    buf = io.StringIO()
    if table is None:
        w = csv.writer(buf)
        w.writerow(["key", "value"])
        for k, v in results.items():
            if not isinstance(v, (dict, list)):
                w.writerow([k, v])
    else:
        w = csv.DictWriter(buf, fieldnames=list(table[0]))
        w.writeheader()
        for row in table:
            w.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in row.items()})
    return buf.getvalue()


class SystemExit2(Exception):
    """Usage error carrying the message for exit code 2."""


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qact",
        description="Exact verification suite for generalized quaternion group actions.",
    )
    p.add_argument("--version", action="version", version=f"qact {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output (default)")
    common.add_argument("--markdown", action="store_true", help="markdown output")
    common.add_argument("--csv", action="store_true", help="CSV output")
    common.add_argument("--out", help="write the report to this path")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized numerics")
    common.add_argument("--jobs", type=int, default=1, help="worker cap for enumeration")
    common.add_argument("--timings", action="store_true", help="attach wall-clock runtime")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("groups", parents=[common], help="build and describe a named group")
    q.add_argument("--name", required=True)
    q.add_argument("--n", type=int)
    q.add_argument("--m", type=int)
    q.set_defaults(fn=cmd_groups)

    q = sub.add_parser("chars", parents=[common], help="exact character table of Q(2^n)")
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(fn=cmd_chars)

    q = sub.add_parser("decompose", parents=[common], help="isogeny factor dimension table")
    q.add_argument("--n", type=int, default=4)
    q.add_argument("--a", help="a1,a2,a3,a4")
    q.add_argument("--b", help="b1,...,b_(2^(n-2)-1)")
    q.add_argument("--ske", help="ske JSON file (multiplicities from quotient genera)")
    q.set_defaults(fn=cmd_decompose)

    q = sub.add_parser("classify", parents=[common], help="braid x Aut orbit classification")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--signature", required=True, help="gamma:k1,k2,...")
    q.add_argument("--budget", type=int, default=5_000_000)
    q.set_defaults(fn=cmd_classify)

    q = sub.add_parser("families", parents=[common], help="one-dimensional family census")
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(fn=cmd_families)

    q = sub.add_parser("genus-zero", parents=[common], help="sigma_b census with witnesses")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--max-b", type=int, default=4)
    q.add_argument("--exhaustive", action="store_true",
                   help="also scan every valid ske up to --max-periods periods")
    q.add_argument("--max-periods", type=int, default=7)
    q.set_defaults(fn=cmd_genus_zero)

    q = sub.add_parser("quotient", parents=[common], help="quotient genus and branch data")
    q.add_argument("--ske", required=True)
    q.add_argument("--subgroup", required=True)
    q.set_defaults(fn=cmd_quotient)

    q = sub.add_parser("extend", parents=[common], help="verify extension to a supergroup")
    q.add_argument("--ske")
    q.add_argument("--n", type=int)
    q.add_argument("--family", choices=["F0", "F1", "F2"])
    q.add_argument("--super", required=True, choices=["G1", "G2"])
    q.set_defaults(fn=cmd_extend)

    q = sub.add_parser("siegel", parents=[common], help="symplectic fixture verification")
    q.add_argument("action", choices=["verify", "group", "locus"])
    q.add_argument("--fixture", required=True)
    q.add_argument("--starts", type=int, default=8)
    q.add_argument("--tol", type=float, default=1e-9)
    q.set_defaults(fn=cmd_siegel)

    q = sub.add_parser("curve", parents=[common], help="hyperelliptic model verification")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--t", help="complex parameter, e.g. -1 or 0.3+1.1i")
    q.add_argument("--verify", action="store_true")
    q.add_argument("--samples", type=int, default=200)
    q.set_defaults(fn=cmd_curve)

    q = sub.add_parser("reproduce", parents=[common], help="regenerate and diff golden tables")
    q.add_argument("--n", type=int, required=True, choices=[3, 4, 5])
    q.set_defaults(fn=cmd_reproduce)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.time()
    try:
        code, results = args.fn(args)
    except SystemExit2 as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (GroupError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = {
        "command": args.command,
        "version": __version__,
        "schema": 1,
        "inputs": {
            k: v
            for k, v in sorted(vars(args).items())
            if k not in ("fn", "command") and not k.startswith("_") and v is not None
        },
        "results": results,
    }
    if "sha256" in results:
        report["fixtures"] = {results.get("fixture", "fixture"): results["sha256"]}
    if args.timings:
        report["runtime_s"] = round(time.time() - t0, 3)
    if args.markdown:
        text = _emit_markdown(report["results"])
    elif args.csv:
        text = _emit_csv(report["results"])
    else:
        text = json.dumps(report, indent=1, sort_keys=True, default=_json_default) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def _json_default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    raise TypeError(f"not JSON serializable: {type(obj)}")


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line front end. JSON reports go to stdout, logs to stderr.

Exit status: 0 on success, 1 when the mathematics refuses (singular input,
non-Artinian quotient, no stabilization), 2 on input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import re
import sys
from fractions import Fraction

from . import __version__
from .domain import DEFAULT_PRIME, Domain, is_prime
from .errors import JacRingError, NoStabilization, NotArtinian, ParseError, SingularInput
from .degeneration import FamilyScanRow, delta_warnings, family_scan, rank_drop_delta, smooth_reference_dim, total_tjurina
from .hodge import classify_ci, hypersurface_context, primitive_hodge_numbers, weighted_socle
from .ivhs import max_yukawa_rank, torelli_rank, yukawa_evaluate
from .lefschetz import find_lefschetz_witness, lefschetz_check
from .quotient import QuotientRing, ci_hilbert_series, default_degree_cap, socle_dims
from .ring import FamilyTemplate, RingDescriptor, jacobian_generators, parse_polynomial

log = logging.getLogger("jacring")

COMMANDS = ("hilbert", "hodge", "lefschetz", "yukawa", "torelli", "classify", "family-scan", "tjurina", "delta")


class InputError(Exception):
    pass


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _fraction_list(text):
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            out.append(Fraction(tok))
        except (ValueError, ZeroDivisionError):
            raise argparse.ArgumentTypeError(f"bad parameter value {tok!r}")
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("configuration")
    g.add_argument("--prime", type=int, default=None,
                   help=f"prime modulus (default: $JACRING_PRIME or {DEFAULT_PRIME})")
    g.add_argument("--rational", action="store_true", help="work over Q instead of F_p")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--samples", type=int, default=8, help="random candidates per search")
    g.add_argument("--degree-cap", type=int, default=None, help="scan cap for top-degree / stabilization")
    g.add_argument("--threads", type=int, default=1)
    g.add_argument("-v", "--verbose", action="store_true")

    ring_args = argparse.ArgumentParser(add_help=False)
    r = ring_args.add_argument_group("ring")
    r.add_argument("--vars", type=int, default=None, help="number of variables")
    r.add_argument("--weights", type=_int_list, default=None, help="comma-separated variable weights")

    parser = argparse.ArgumentParser(prog="jacring", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"jacring {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("hilbert", parents=[common, ring_args], help="graded dimensions of S/J (no Hodge interpretation)")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly", help="polynomial whose Jacobian ideal is used")
    src.add_argument("--ideal", help="semicolon-separated homogeneous generators")
    p.add_argument("--upto", type=int, default=None, help="last degree to report")

    p = sub.add_parser("hodge", parents=[common, ring_args], help="primitive Hodge numbers of a smooth hypersurface")
    p.add_argument("--poly", required=True)
    p.add_argument("--dim", type=int, required=True, help="dimension n of the hypersurface")

    p = sub.add_parser("lefschetz", parents=[common, ring_args], help="weak/strong Lefschetz test or witness search")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly")
    src.add_argument("--ideal")
    p.add_argument("--ell", default=None, help="linear form to test (default: search)")
    p.add_argument("--mode", choices=("SLP", "WLP"), default="SLP")

    p = sub.add_parser("yukawa", parents=[common, ring_args], help="diagonal n-fold Yukawa rank")
    p.add_argument("--poly", required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--xi", default=None, help="deformation class of degree d (default: maximize)")

    p = sub.add_parser("torelli", parents=[common, ring_args], help="exact infinitesimal Torelli rank")
    p.add_argument("--poly", required=True)
    p.add_argument("--dim", type=int, required=True)

    p = sub.add_parser("classify", parents=[common], help="kappa classification of a complete intersection")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--degrees", type=_int_list, required=True)
    p.add_argument("--weights", type=_int_list, default=None)

    p = sub.add_parser("family-scan", parents=[common, ring_args], help="scan a one-parameter family")
    p.add_argument("--template", required=True, help="polynomial in x0.. and the parameter t")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--t", dest="t_values", type=_fraction_list, required=True, help="comma-separated rationals")
    p.add_argument("--delta-degree", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("tjurina", parents=[common, ring_args], help="total Tjurina number by stabilization")
    p.add_argument("--poly", required=True)

    p = sub.add_parser("delta", parents=[common, ring_args], help="rank drop dim R_k - dim R_sm,k")
    p.add_argument("--poly", required=True)
    p.add_argument("--k", type=int, required=True)
    return parser


def _config(args):
    if args.rational:
        prime = None
    else:
        prime = args.prime
        if prime is None:
            env = os.environ.get("JACRING_PRIME")
            if env is not None:
                try:
                    prime = int(env)
                except ValueError:
                    raise InputError(f"JACRING_PRIME={env!r} is not an integer")
            else:
                prime = DEFAULT_PRIME
        if not is_prime(prime) or prime >= 1 << 64:
            raise InputError(f"--prime {prime} is not a prime below 2^64")
    if args.samples < 1:
        raise InputError(f"--samples {args.samples} must be positive")
    return {"prime": prime, "rational": args.rational, "seed": args.seed, "samples": args.samples,
            "degree_cap": args.degree_cap, "threads": args.threads}


def _ring(args, domain, texts):
    weights = getattr(args, "weights", None)
    nvars = getattr(args, "vars", None)
    if weights:
        if nvars is not None and nvars != len(weights):
            raise InputError(f"--vars {nvars} disagrees with {len(weights)} weights")
        nvars = len(weights)
    if nvars is None and getattr(args, "dim", None) is not None:
        nvars = args.dim + 2
    if nvars is None:
        idx = [int(m) for t in texts if t for m in re.findall(r"x(\d+)", t)]
        nvars = max(idx) + 1 if idx else 1
    try:
        return RingDescriptor(nvars, weights, domain)
    except ValueError as exc:
        raise InputError(str(exc))


def _poly(text, ring, what="--poly"):
    f = parse_polynomial(text, ring, require_homogeneous=True)
    if f.is_zero:
        raise InputError(f"{what}: zero polynomial")
    return f


def _ideal(text, ring):
    gens = [parse_polynomial(s, ring, require_homogeneous=True) for s in text.split(";") if s.strip()]
    if not gens:
        raise InputError("--ideal: no generators")
    return gens


def _quotient(args, ring):
    if getattr(args, "poly", None) is not None:
        F = _poly(args.poly, ring)
        return F, QuotientRing(ring, jacobian_generators([F]))
    return None, QuotientRing(ring, _ideal(args.ideal, ring))


def _entry(e):
    return {"k": e.k, "m": e.m, "rank": e.rank, "expected": e.expected, "kind": e.kind, "ok": e.ok}


def _lefschetz_report(rep):
    return {"ell": str(rep.ell), "mode": rep.mode, "verdict": rep.verdict,
            "failed_at": list(rep.failed_at) if rep.failed_at else None, "reason": rep.reason,
            "top_degree": rep.top_degree, "hilbert_function": list(rep.hilbert_function),
            "rank_table": [_entry(e) for e in rep.entries]}


def cmd_hilbert(args, cfg, domain, warnings):
    ring = _ring(args, domain, [args.poly, args.ideal])
    F, Q = _quotient(args, ring)
    cap = args.degree_cap or default_degree_cap(Q)
    result = {"generators": [str(g) for g in Q.generators], "num_vars": ring.num_vars,
              "weights": list(ring.weights)}
    try:
        top = Q.top_degree(cap)
        upto = top if args.upto is None else args.upto
        result.update(artinian=True, top_degree=top, socle_dims=socle_dims(Q, top))
    except NotArtinian:
        upto = cap if args.upto is None else args.upto
        result.update(artinian=False, top_degree=None)
        warnings.append(f"quotient is not Artinian below degree {cap}")
    result["hilbert_function"] = Q.hilbert_function(upto)
    if F is not None:
        try:
            result["ci_prediction"] = ci_hilbert_series([F.degree - w for w in ring.weights], ring)
        except ValueError as exc:
            warnings.append(f"no complete-intersection prediction: {exc}")
    return result


def cmd_hodge(args, cfg, domain, warnings):
    ring = _ring(args, domain, [args.poly])
    F = _poly(args.poly, ring)
    ctx = hypersurface_context(F, args.dim)
    return {"n": ctx.n, "d": ctx.d, "sigma": ctx.sigma, "hodge_degrees": ctx.hodge_degrees,
            "hodge_numbers": primitive_hodge_numbers(F, args.dim)}


def cmd_lefschetz(args, cfg, domain, warnings):
    ring = _ring(args, domain, [args.poly, args.ideal, args.ell])
    _, Q = _quotient(args, ring)
    if args.ell is not None:
        ell = parse_polynomial(args.ell, ring, require_homogeneous=True)
        rep = lefschetz_check(Q, ell, args.mode, cap=args.degree_cap, threads=args.threads)
        return _lefschetz_report(rep)
    search = find_lefschetz_witness(Q, cfg["samples"], cfg["seed"], mode=args.mode,
                                    cap=args.degree_cap, threads=args.threads)
    out = {"outcome": search.outcome, "candidates_tested": search.candidates_tested,
           "ell": str(search.ell) if search.ell is not None else None,
           "report": _lefschetz_report(search.report) if search.report else None}
    if search.obstruction is not None:
        o = search.obstruction
        out["obstruction"] = {"verdict": o.verdict, "degree": o.degree, "hilbert_function": list(o.hilbert_function)}
    if search.note:
        warnings.append(search.note)
    return out


def cmd_yukawa(args, cfg, domain, warnings):
    ring = _ring(args, domain, [args.poly, args.xi])
    F = _poly(args.poly, ring)
    if args.xi is not None:
        xi = parse_polynomial(args.xi, ring, require_homogeneous=True)
        ev = yukawa_evaluate(F, args.dim, xi)
        return {"xi": str(xi), "rank": ev.rank, "source_degree": ev.map.source_degree,
                "target_degree": ev.map.target_degree, "shape": list(ev.map.shape), "method": ev.method}
    rep = max_yukawa_rank(F, args.dim, cfg["samples"], cfg["seed"])
    if rep.verdict == "LowerBoundOnly":
        warnings.append("d_M is a certified lower bound; sampling did not reach h^{n,0}")
    return {"d_M": rep.d_M_lower_bound, "verdict": rep.verdict, "theoretical_max": rep.theoretical_max,
            "witness": str(rep.witness) if rep.witness is not None else None,
            "samples_tested": rep.samples_tested,
            "sample_ranks": [{"candidate": label, "rank": r} for label, r in rep.sample_ranks]}


def cmd_torelli(args, cfg, domain, warnings):
    ring = _ring(args, domain, [args.poly])
    F = _poly(args.poly, ring)
    res = torelli_rank(F, args.dim)
    return {"rank": res.rank, "dim_source": res.dim_source, "injective": res.injective,
            "block_shapes": [list(s) for s in res.block_shapes]}


def cmd_classify(args, cfg, domain, warnings):
    try:
        ctx = classify_ci(args.dim, len(args.degrees), args.degrees)
    except ValueError as exc:
        raise InputError(str(exc))
    out = {"n": ctx.n, "c": ctx.c, "degrees": list(ctx.degrees), "kappa": ctx.kappa,
           "classification": ctx.classification.value, "quadric": ctx.quadric}
    if args.weights:
        if len(args.weights) != args.dim + ctx.c + 1:
            raise InputError(f"--weights: expected {args.dim + ctx.c + 1} weights, got {len(args.weights)}")
        out["sigma_w"] = weighted_socle(args.weights, args.degrees)
    if ctx.quadric:
        warnings.append("quadric hypersurface: H^{n,0} = 0 and the Yukawa coupling is trivial")
    return out


def _row_json(row: FamilyScanRow):
    return {"t": str(row.t), "polynomial": str(row.polynomial) if row.polynomial is not None else None,
            "smooth": row.smooth, "dims": row.dims, "tjurina_total": row.tjurina_total,
            "yukawa_rank": row.yukawa_rank, "yukawa_verdict": row.yukawa_verdict,
            "delta": row.delta, "delta_degree": row.delta_degree, "error": row.error}


def cmd_family_scan(args, cfg, domain, warnings):
    ring = _ring(args, domain, [args.template])
    template = FamilyTemplate(args.template, ring)
    if not template.depends_on_parameter:
        warnings.append("template does not depend on t")
    rows = family_scan(template, args.dim, args.t_values, cfg["samples"], cfg["seed"], args.delta_degree)
    for row in rows:
        if row.polynomial is not None:
            warnings.extend(f"t={row.t}: {w}" for w in delta_warnings(row.polynomial, row.delta_degree))
    return {"rows": [_row_json(r) for r in rows]}


def cmd_tjurina(args, cfg, domain, warnings):
    ring = _ring(args, domain, [args.poly])
    F = _poly(args.poly, ring)
    tau = total_tjurina(F, cap=args.degree_cap)
    warnings.append("tjurina_total equals the total Milnor number when every singularity is weighted homogeneous")
    return {"tjurina_total": tau}


def cmd_delta(args, cfg, domain, warnings):
    ring = _ring(args, domain, [args.poly])
    F = _poly(args.poly, ring)
    if args.k < 0:
        raise InputError(f"--k {args.k} must be nonnegative")
    Q = QuotientRing.jacobian(F)
    delta = rank_drop_delta(F, args.k, Q=Q)
    warnings.extend(delta_warnings(F, args.k))
    return {"k": args.k, "delta": delta, "dim": Q.graded_dim(args.k),
            "smooth_reference_dim": smooth_reference_dim(ring, [F.degree], args.k)}


HANDLERS = {"hilbert": cmd_hilbert, "hodge": cmd_hodge, "lefschetz": cmd_lefschetz, "yukawa": cmd_yukawa,
            "torelli": cmd_torelli, "classify": cmd_classify, "family-scan": cmd_family_scan,
            "tjurina": cmd_tjurina, "delta": cmd_delta}

_CONFIG_KEYS = {"prime", "rational", "seed", "samples", "degree_cap", "threads", "verbose", "command", "format"}


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def dumps(report) -> str:
    return json.dumps(_jsonable(report), sort_keys=True, indent=2)


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    inputs = {k: v for k, v in vars(args).items() if k not in _CONFIG_KEYS and v is not None}
    report = {"command": args.command, "input": inputs, "version": __version__, "warnings": []}
    code = 0
    try:
        cfg = _config(args)
        report["config"] = cfg
        domain = Domain(cfg["prime"])
        log.info("running %s with prime=%s seed=%s", args.command, cfg["prime"], cfg["seed"])
        result = HANDLERS[args.command](args, cfg, domain, report["warnings"])
        report["result"] = result
    except (InputError, ParseError, ValueError) as exc:
        log.error("%s", exc)
        report["error"] = {"kind": "input", "message": str(exc)}
        code = 2
    except (SingularInput, NotArtinian, NoStabilization) as exc:
        log.error("%s", exc)
        report["error"] = {"kind": type(exc).__name__, "message": str(exc), "dims": getattr(exc, "dims", {})}
        code = 1
    except JacRingError as exc:
        log.error("%s", exc)
        report["error"] = {"kind": type(exc).__name__, "message": str(exc)}
        code = 1

    if code == 0 and args.command == "family-scan" and args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(FamilyScanRow.CSV_COLUMNS)
        for row in report["result"]["rows"]:
            d = row["dims"]
            writer.writerow([row["t"], str(row["smooth"]).lower(), d.get("a0", ""), d.get("mid", ""),
                             d.get("sigma", ""), d.get("sigma+1", ""),
                             *("" if row[k] is None else row[k] for k in ("tjurina_total", "yukawa_rank", "delta"))])
        stdout.write(buf.getvalue())
        for w in report["warnings"]:
            log.warning("%s", w)
    else:
        stdout.write(dumps(report) + "\n")
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

"""Command line entry point: ``paretoest {eval,mse,adjudicate,table}``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

from scipy.special import gammaln

from . import exact_moments as em
from . import special as sp
from .estimators import (EstimatorKind, Tag, Target, mle_alpha, mle_cdf_at, mle_pdf_at, umvue_alpha,
                         umvue_cdf_at, umvue_pdf_at)
from .exceptions import MomentDoesNotExistError, ParetoError, QuadratureAccuracyError
from .model import SampleData
from .montecarlo import PerRepEngine, SimulationConfig, brute_force_moment, paper_config, simulate_table
from .oracle import deviation_report, moment, mse_closed_form, mse_exact_special, mse_via_quadrature

__all__ = ["main", "build_parser", "parse_grid", "fmt17", "ADJUDICATE_HEADER"]

ADJUDICATE_HEADER = ["n", "alpha", "k", "x", "estimator", "target", "closed", "quadrature",
                     "exact_special", "rel_dev", "flag"]

_VALID_ENGINES = {
    "closed": {"mle/alpha", "umvue/alpha", "mle/pdf", "mle/cdf", "umvue/pdf", "umvue/cdf"},
    "quadrature": {"mle/alpha", "umvue/alpha", "mle/pdf", "mle/cdf", "umvue/pdf", "umvue/cdf"},
    "mc": {"mle/alpha", "umvue/alpha", "mle/pdf", "mle/cdf", "umvue/pdf", "umvue/cdf"},
    "bessel": {"mle/pdf", "mle/cdf"},
    "kummer": {"umvue/pdf", "umvue/cdf"},
}


def fmt17(v) -> str:
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def _positive_float(s):
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s!r}") from None
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"must be positive and finite, got {s!r}")
    return v


def _positive_int(s):
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {s!r}")
    return v


def parse_grid(text: str, cast=float) -> list:
    """``"1,2,5"`` or inclusive ``"start:step:end"``."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"range must be start:step:end, got {text!r}")
        start, step, end = (float(p) for p in parts)
        if not step > 0 or end < start:
            raise argparse.ArgumentTypeError(f"bad range {text!r}")
        count = int(math.floor((end - start) / step + 1e-9)) + 1
        return [cast(start + i * step) for i in range(count)]
    try:
        vals = [cast(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad list {text!r}") from None
    if not vals:
        raise argparse.ArgumentTypeError("empty grid")
    return vals


def _read_data(spec: str) -> list[float]:
    if os.path.exists(spec):
        with open(spec) as fh:
            lines = [ln.strip() for ln in fh]
        return [float(ln) for ln in lines if ln]
    return [float(p) for p in spec.replace("\n", ",").split(",") if p.strip()]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="paretoest",
                                description="MLE and UMVUE of the Pareto density and cdf with known scale.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="point estimate from a sample")
    e.add_argument("--data", required=True, help="file with one value per line, or a comma list")
    e.add_argument("--k", type=_positive_float, required=True)
    e.add_argument("--target", choices=[t.value for t in Target], required=True)
    e.add_argument("--estimator", choices=[t.value for t in Tag], required=True)
    e.add_argument("--x", type=float)

    m = sub.add_parser("mse", help="moments and MSE of one estimator")
    m.add_argument("--n", type=_positive_int, required=True)
    m.add_argument("--alpha", type=_positive_float, required=True)
    m.add_argument("--k", type=_positive_float, default=1.0)
    m.add_argument("--x", type=float)
    m.add_argument("--estimator", choices=[t.value for t in Tag], required=True)
    m.add_argument("--target", choices=[t.value for t in Target], required=True)
    m.add_argument("--engine", choices=sorted(_VALID_ENGINES), default="closed")
    m.add_argument("--r", type=_positive_int, help="print E(estimate^r) instead of the MSE report")
    m.add_argument("--reps", type=_positive_int, default=100_000)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--format", choices=["text", "json", "csv"], default="text")

    a = sub.add_parser("adjudicate", help="closed forms against quadrature and special functions")
    a.add_argument("--n", type=_positive_int, required=True)
    a.add_argument("--alpha", type=_positive_float, required=True)
    a.add_argument("--k", type=_positive_float, default=1.0)
    a.add_argument("--x-grid", type=parse_grid, required=True)
    a.add_argument("--mc-reps", type=_positive_int,
                   help="also check each quadrature MSE against brute-force Monte Carlo")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--out", default="-")

    t = sub.add_parser("table", help="random-x MSE tables")
    t.add_argument("--reps", type=_positive_int, default=1000)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--n-grid", type=lambda s: parse_grid(s, lambda v: int(round(float(v)))))
    t.add_argument("--alpha-grid", type=parse_grid)
    t.add_argument("--k-grid", type=parse_grid)
    t.add_argument("--paper-grid", action="store_true",
                   help="n in 4..15 and 20..100 by 5, with the six published (alpha, k) pairs")
    t.add_argument("--engine", choices=[e.value for e in PerRepEngine], default="quadrature")
    t.add_argument("--workers", type=_positive_int, default=1)
    t.add_argument("--format", choices=["csv", "json"], default="csv")
    t.add_argument("--out", default="-")
    t.add_argument("--plot-dir")
    return p


def _open_out(path):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", newline=""), True


def _write_rows(rows: list[dict], header: list[str], fmt: str, path: str) -> None:
    fh, close = _open_out(path)
    try:
        if fmt == "json":
            json.dump(rows, fh, indent=1)
            fh.write("\n")
        else:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            for r in rows:
                w.writerow([fmt17(r[h]) for h in header])
    finally:
        if close:
            fh.close()


def cmd_eval(args, parser) -> int:
    if args.target != "alpha" and args.x is None:
        parser.error("--x is required for --target pdf/cdf")
    try:
        values = _read_data(args.data)
    except (OSError, ValueError) as exc:
        print(f"error: cannot read sample: {exc}", file=sys.stderr)
        return 1
    if not values:
        print("error: empty sample", file=sys.stderr)
        return 1
    s = SampleData.from_values(values, args.k)
    fn = {
        ("mle", "alpha"): lambda: mle_alpha(s),
        ("umvue", "alpha"): lambda: umvue_alpha(s),
        ("mle", "pdf"): lambda: mle_pdf_at(s, args.x),
        ("mle", "cdf"): lambda: mle_cdf_at(s, args.x),
        ("umvue", "pdf"): lambda: umvue_pdf_at(s, args.x),
        ("umvue", "cdf"): lambda: umvue_cdf_at(s, args.x),
    }[(args.estimator, args.target)]
    print(repr(float(fn())))
    return 0


def _closed_rth(kind: EstimatorKind, n, alpha, k, x, r):
    if kind.target is Target.ALPHA:
        if n <= r:
            raise MomentDoesNotExistError(f"E(alpha_est^{r}) diverges for n <= {r}")
        scale = n if kind.tag is Tag.MLE else n - 1
        return math.exp(r * math.log(scale * alpha) + gammaln(n - r) - gammaln(n))
    fn = {
        (Tag.MLE, Target.PDF): em.rth_moment_mle_pdf,
        (Tag.MLE, Target.CDF): em.rth_moment_mle_cdf,
        (Tag.UMVUE, Target.PDF): em.rth_moment_umvue_pdf,
        (Tag.UMVUE, Target.CDF): em.rth_moment_umvue_cdf,
    }[(kind.tag, kind.target)]
    return fn(n, alpha, k, x, r)


def _special_rth(kind, n, alpha, k, x, r, parser):
    if kind.tag is Tag.MLE:
        if kind.target is Target.PDF:
            return sp.exact_mle_moment_bessel(n, alpha, k, x, r)
        return sp.exact_mle_cdf_moment_bessel(n, alpha, k, x, r)
    if r == 1:
        return mse_exact_special(kind, n, alpha, k, x).mean
    if r == 2:
        return mse_exact_special(kind, n, alpha, k, x).second_moment
    parser.error("--engine kummer supports --r 1 or 2 only")


def cmd_mse(args, parser) -> int:
    combo = f"{args.estimator}/{args.target}"
    if combo not in _VALID_ENGINES[args.engine]:
        valid = "; ".join(f"{e}: {', '.join(sorted(c))}" for e, c in sorted(_VALID_ENGINES.items()))
        parser.error(f"--engine {args.engine} does not support {combo}. Valid combinations: {valid}")
    if args.target != "alpha" and args.x is None:
        parser.error("--x is required for --target pdf/cdf")
    kind = EstimatorKind.parse(args.estimator, args.target)
    x = None if args.target == "alpha" else args.x
    n, alpha, k = args.n, args.alpha, args.k
    if args.engine == "mc" and args.reps < 100:
        parser.error("--reps must be >= 100 for the mc engine")

    if args.r is not None:
        se = None
        if args.engine == "closed":
            val = _closed_rth(kind, n, alpha, k, x, args.r)
        elif args.engine == "quadrature":
            val = moment(kind, args.r, n, alpha, k, x).value
        elif args.engine == "mc":
            rep = brute_force_moment(kind, args.r, n, alpha, k, x, args.reps, args.seed)
            val, se = rep.mean, rep.std_error
        else:
            val = _special_rth(kind, n, alpha, k, x, args.r, parser)
        out = {"engine": args.engine, "estimator": args.estimator, "target_kind": args.target,
               "n": n, "alpha": alpha, "k": k, "eval_x": x, "r": args.r, "moment": val, "std_error": se}
    else:
        if args.engine == "closed":
            rep = mse_closed_form(kind, n, alpha, k, x)
        elif args.engine == "quadrature":
            rep = mse_via_quadrature(kind, n, alpha, k, x)
        elif args.engine == "mc":
            rep = brute_force_moment(kind, 1, n, alpha, k, x, args.reps, args.seed)
        else:
            rep = mse_exact_special(kind, n, alpha, k, x)
        out = {"n": n, "alpha": alpha, "k": k, **rep.as_dict()}
        out["flags"] = ";".join(out["flags"])
    if args.format == "json":
        print(json.dumps(out))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(out))
        w.writerow(["" if v is None else fmt17(v) for v in out.values()])
        sys.stdout.write(buf.getvalue())
    else:
        for key, v in out.items():
            if v is None or v == "":
                continue
            print(f"{key:>16}: {v:.6g}" if isinstance(v, float) else f"{key:>16}: {v}")
    return 0


def cmd_adjudicate(args, parser) -> int:
    rows = deviation_report(args.n, args.alpha, args.k, args.x_grid, mc_reps=args.mc_reps, seed=args.seed)
    out = []
    for r in rows:
        out.append({"n": r.n, "alpha": r.alpha, "k": r.k, "x": "" if r.x is None else r.x,
                    "estimator": r.estimator, "target": r.target, "closed": r.closed,
                    "quadrature": r.quadrature, "exact_special": r.exact_special,
                    "rel_dev": r.rel_dev, "flag": r.flag})
    _write_rows(out, ADJUDICATE_HEADER, "csv", args.out)
    if all(not math.isfinite(r.quadrature) for r in rows):
        print("error: every quadrature evaluation failed", file=sys.stderr)
        return 1
    return 0


def _fmt_key(v: float) -> str:
    return f"{v:g}".replace(".", "p")


def cmd_table(args, parser) -> int:
    engine = PerRepEngine(args.engine)
    if args.paper_grid:
        config = paper_config(args.reps, args.seed, engine_for_per_rep_mse=engine)
    else:
        if not (args.n_grid and args.alpha_grid and args.k_grid):
            parser.error("give --paper-grid or all of --n-grid, --alpha-grid, --k-grid")
        try:
            config = SimulationConfig(reps=args.reps, n_grid=tuple(args.n_grid),
                                      alpha_grid=tuple(args.alpha_grid), k_grid=tuple(args.k_grid),
                                      seed=args.seed, engine_for_per_rep_mse=engine)
        except (ValueError, ParetoError) as exc:
            parser.error(str(exc))
    rows = simulate_table(config, workers=args.workers)
    dicts = [r.as_dict() for r in rows]
    _write_rows(dicts, list(rows[0].FIELDS), args.format, args.out)
    if args.plot_dir:
        os.makedirs(args.plot_dir, exist_ok=True)
        for a, k in config.cell_pairs():
            cell = sorted((r for r in rows if r.alpha == a and r.k == k), key=lambda r: r.n)
            for target in ("pdf", "cdf"):
                path = os.path.join(args.plot_dir, f"{target}_alpha{_fmt_key(a)}_k{_fmt_key(k)}.tsv")
                with open(path, "w") as fh:
                    fh.write("n\tmse_umvue\tmse_mle\n")
                    for r in cell:
                        fh.write(f"{r.n}\t{fmt17(getattr(r, f'mse_umvue_{target}'))}\t"
                                 f"{fmt17(getattr(r, f'mse_mle_{target}'))}\n")
    return 0


_COMMANDS = {"eval": cmd_eval, "mse": cmd_mse, "adjudicate": cmd_adjudicate, "table": cmd_table}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, parser)
    except (ParetoError, QuadratureAccuracyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""``niforge`` command line: analyze, synthesize, bode, demo.

Exit codes: 0 holds/feasible, 1 usage, parse or assumption error,
2 fails/infeasible, 3 indeterminate.
"""

import argparse
import io
import json
import os
import sys
import time

import numpy as np

from . import analysis, models, synthesis
from .analysis import Verdict
from .exceptions import AssumptionError, ModelParseError, NIForgeError
from .modelio import load_model, to_jsonable, write_atomic
from .statespace import bode, close_loop, shift

EXIT_OK, EXIT_USAGE, EXIT_FAILS, EXIT_INDETERMINATE = 0, 1, 2, 3
_VERDICT_EXIT = {Verdict.HOLDS: EXIT_OK, Verdict.FAILS: EXIT_FAILS,
                 Verdict.INDETERMINATE: EXIT_INDETERMINATE}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


def default_tol():
    env = os.environ.get("NIFORGE_TOL")
    if env is None:
        return analysis.TOL_NI
    try:
        tol = float(env)
    except ValueError:
        raise UsageError(f"NIFORGE_TOL={env!r} is not a number") from None
    if not np.isfinite(tol) or tol < 0:
        raise UsageError(f"NIFORGE_TOL={env!r} must be finite and >= 0")
    return tol


def _grid(text):
    try:
        wmin, wmax, pts = text.split(",")
        wmin, wmax, pts = float(wmin), float(wmax), int(pts)
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected WMIN,WMAX,POINTS such as 1e-3,1e3,400") from None
    if not (0 < wmin < wmax) or pts < 2:
        raise argparse.ArgumentTypeError("need 0 < WMIN < WMAX and POINTS >= 2")
    return analysis.default_omega_grid(pts, wmin, wmax)


def _float_list(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated numbers") from None


def _poles(lam):
    return [[float(z.real), float(z.imag)] for z in lam]


def _emit(report, out):
    text = json.dumps(to_jsonable(report), indent=2, allow_nan=False) + "\n"
    if out:
        write_atomic(out, text)
    return text


def cmd_analyze(args):
    model = load_model(args.model)
    if model.kind != "statespace":
        raise UsageError("analyze expects a 'statespace' model")
    sys_ = model.system
    if args.shift:
        sys_ = shift(sys_, -args.shift)
    tol = args.tol if args.tol is not None else default_tol()
    grid = args.grid if args.grid is not None else analysis.default_omega_grid()

    ni = analysis.ni_frequency_check(sys_, grid, tol=tol)
    sni = analysis.sni_frequency_check(sys_, grid)
    report = {
        "command": "analyze",
        "model": model.name,
        "shift": args.shift,
        "tolerances": {"ni": tol, "sni": analysis.TOL_SNI,
                       "riccati": analysis.RICCATI_TOL},
        "grid": {"points": int(grid.size), "omega_min": float(grid[grid > 0].min()),
                 "omega_max": float(grid.max())},
        "poles": _poles(sys_.poles),
        "ni": ni.to_dict(),
        "sni": sni.to_dict(),
    }
    verdicts = [ni.verdict]
    if args.orthant:
        if not sys_.is_siso:
            raise UsageError("--orthant requires a SISO model")
        orth = analysis.orthant_ni_check(sys_, grid, args.eps_grid, tol=tol)
        report["orthant"] = orth.to_dict()
        report["orthant"]["eps_grid"] = list(args.eps_grid)
        verdicts.append(orth.verdict)
    try:
        ric = analysis.sni_riccati_check(sys_, grid=grid)
        report["sni_riccati"] = ric.verdict.to_dict()
        report["sni_riccati"].update(
            method=ric.method, residual=ric.residual,
            P=None if ric.P is None else ric.P.tolist())
    except AssumptionError as exc:
        report["sni_riccati"] = {"verdict": None,
                                 "skipped": f"assumption violated: {exc.assumption}"}
    overall = Verdict.combine(*verdicts)
    report["verdict"] = overall.value
    _emit(report, args.out)

    lines = [f"model: {model.name or args.model}",
             f"NI:  {ni.verdict}", f"SNI: {sni.verdict}"]
    if "orthant" in report:
        lines.append(f"orthant: {report['orthant']['verdict']}")
    if report["sni_riccati"].get("verdict"):
        lines.append(f"SNI (Riccati): {report['sni_riccati']['verdict']}")
    for name, v in (("NI", ni), ("SNI", sni)):
        if v.witness is not None:
            w = v.witness
            lines.append(f"{name} witness: sigma={w.sigma:.6g} "
                         f"indicator={w.indicator:.6g}")
    print("\n".join(lines))
    return _VERDICT_EXIT[overall]


def _synthesis_report(model_name, plant, res):
    rep = {
        "command": "synthesize",
        "model": model_name,
        "epsilon": res.epsilon,
        "feasible": res.feasible,
        "margin": res.margin,
        "stable_dim": res.schur.stable_dim,
        "T": res.T.tolist(),
        "S": res.S.tolist(),
        "tolerances": {"feasibility": 1e-9 * (1.0 + float(np.linalg.norm(res.T))),
                       "are": synthesis.ARE_TOL},
    }
    if res.feasible:
        rep.update(K=res.K.ravel().tolist(), P=res.P.tolist(), Pf=res.Pf.tolist(),
                   pf_are_residual=res.pf_residual,
                   closed_loop_poles=_poles(close_loop(plant, res.K).poles))
    if res.report is not None:
        r = res.report
        rep["verification"] = {
            "passed": r.passed,
            "failures": r.failures,
            "rightmost_pole": r.rightmost,
            "rightmost_ok": r.rightmost_ok,
            "rightmost_unique": r.rightmost_unique,
            "are_residual": r.are_residual,
            "orthant": r.ni.to_dict(),
            "phase_ok": r.phase_ok,
            "phase_range_deg": [float(r.bode.phase_deg.min()),
                                float(r.bode.phase_deg.max())],
        }
    return rep


def cmd_synthesize(args):
    model = load_model(args.model)
    if model.kind != "uncertain_plant":
        raise UsageError("synthesize expects an 'uncertain_plant' model")
    res = synthesis.synthesize(model.system, args.epsilon, verify=args.verify)
    rep = _synthesis_report(model.name, model.system, res)
    _emit(rep, args.out)
    if res.feasible:
        print(f"feasible: K = {np.array2string(res.K.ravel(), precision=6)}")
        print("closed-loop poles: " + ", ".join(
            f"{z:.6g}" for z in close_loop(model.system, res.K).poles))
        if res.report is not None:
            print("verification: " + ("passed" if res.report.passed else
                                      "FAILED: " + "; ".join(res.report.failures)))
        return EXIT_OK
    print(f"infeasible: min eig(T - S) = {res.margin:.6g}")
    return EXIT_FAILS


def bode_rows(bd):
    return [(float(w), float(m), float(p))
            for w, m, p in zip(bd.omega, bd.mag_db, bd.phase_deg)]


def bode_csv(bd):
    buf = io.StringIO()
    buf.write("omega,mag_db,phase_deg\n")
    for row in bode_rows(bd):
        buf.write(",".join(repr(x) for x in row) + "\n")
    return buf.getvalue()


def cmd_bode(args):
    model = load_model(args.model)
    if model.kind == "uncertain_plant":
        if args.epsilon is None:
            raise UsageError("an uncertain_plant model needs --epsilon to form "
                             "the synthesized closed loop")
        res = synthesis.synthesize(model.system, args.epsilon)
        if not res.feasible:
            print(f"infeasible synthesis (min eig(T - S) = {res.margin:.6g})",
                  file=sys.stderr)
            return EXIT_FAILS
        sys_ = close_loop(model.system, res.K)
    else:
        sys_ = model.system
    if not sys_.is_siso:
        raise UsageError("bode requires a SISO system")
    if not 0 < args.omega_min < args.omega_max or args.points < 2:
        raise UsageError("need 0 < --omega-min < --omega-max and --points >= 2")
    omega = np.logspace(np.log10(args.omega_min), np.log10(args.omega_max),
                        args.points)
    bd = bode(sys_, omega)
    for s in bd.skipped:
        print(f"warning: omega={s['omega']:g} skipped (pole {s['pole']:.6g})",
              file=sys.stderr)
    if args.format == "csv":
        text = bode_csv(bd)
    else:
        doc = {"columns": ["omega", "mag_db", "phase_deg"],
               "rows": bode_rows(bd),
               "warnings": [f"omega={s['omega']!r} skipped at pole"
                            for s in bd.skipped]}
        text = json.dumps(doc, indent=2, allow_nan=False) + "\n"
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def demo_rows(res, cl_poles, ref=models.REFERENCE_VALUES):
    """``(quantity, reference, computed, tolerance, ok)`` rows."""
    k = res.schur.stable_dim
    T = float(res.T[0, 0])
    S = float(res.S[0, 0])
    rows = [("T", ref["T"], T, 5e-3), ("S", ref["S"], S, 5e-3),
            ("T-S", ref["T-S"], T - S, 5e-3),
            ("Pf[3,3]", ref["Pf"], float(res.Pf[k, k]), 1e-2)]
    for i, kr in enumerate(ref["K"]):
        rows.append((f"K[{i + 1}]", kr, float(res.K[0, i]), 1e-2))
    got = np.sort(cl_poles.real)
    for pr, pc in zip(sorted(ref["poles"]), got):
        rows.append(("pole", pr, float(pc), 5e-2))
    return [(q, r, c, t, abs(r - c) <= t) for q, r, c, t in rows]


def cmd_demo(args):
    plant = models.example_plant()
    eps = models.REFERENCE_VALUES["eps"]
    t0 = time.perf_counter()
    res = synthesis.synthesize(plant, eps, verify=True)
    elapsed = time.perf_counter() - t0
    cl = close_loop(plant, res.K)
    rows = demo_rows(res, cl.poles)

    print(f"example plant, eps = {eps:g}  (synthesis + verification "
          f"{elapsed * 1e3:.1f} ms)")
    print(f"{'quantity':<10}{'reference':>12}{'computed':>14}{'tol':>8}  status")
    for q, r, c, t, ok in rows:
        print(f"{q:<10}{r:>12.4f}{c:>14.4f}{t:>8.0e}  {'ok' if ok else 'MISMATCH'}")
    rep = res.report
    print(f"closed loop NI (orthant samples): {rep.ni.verdict}; phase in "
          f"[{rep.bode.phase_deg.min():.2f}, {rep.bode.phase_deg.max():.2f}] deg")
    print(f"rightmost pole {rep.rightmost:.9f}; closed-loop Riccati residual "
          f"{rep.are_residual:.2e}")

    # the reference gain corresponds to a design on A - eps I
    alt_plant = type(plant)(plant.A - eps * np.eye(plant.n_states),
                            plant.B1, plant.B2, plant.C1)
    alt = synthesis.synthesize(alt_plant, 0.0)
    alt_poles = close_loop(plant, alt.K).poles
    print("design on A - 2I (sign-flipped shift): "
          f"T={alt.T[0, 0]:.4f} S={alt.S[0, 0]:.4f} "
          f"Pf={alt.Pf[-1, -1]:.3f} K={np.array2string(alt.K.ravel(), precision=3)}"
          " -> poles of A + B2 K: "
          + ", ".join(f"{z.real:.3f}" for z in alt_poles))

    report = _synthesis_report("example_plant", plant, res)
    report["command"] = "demo"
    report["comparison"] = [
        {"quantity": q, "reference": r, "computed": c, "tolerance": t, "ok": ok}
        for q, r, c, t, ok in rows]
    report["sign_flipped_design"] = {
        "T": alt.T.tolist(), "S": alt.S.tolist(), "K": alt.K.ravel().tolist(),
        "Pf": alt.Pf.tolist(), "closed_loop_poles": _poles(alt_poles)}
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        _emit(report, os.path.join(args.out_dir, "demo_report.json"))
        write_atomic(os.path.join(args.out_dir, "demo_bode.csv"),
                     bode_csv(rep.bode))
        print(f"wrote {args.out_dir}/demo_report.json and demo_bode.csv")
    return EXIT_OK


def build_parser():
    p = _Parser(prog="niforge",
                description="Negative-imaginary analysis and synthesis.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="certify NI / SNI of a statespace model")
    a.add_argument("model")
    a.add_argument("--grid", type=_grid, default=None,
                   help="WMIN,WMAX,POINTS log grid (omega=0 is added)")
    a.add_argument("--orthant", action="store_true",
                   help="also sample sigma = eps + j omega (SISO only)")
    a.add_argument("--eps-grid", type=_float_list,
                   default=list(analysis.DEFAULT_EPS_GRID))
    a.add_argument("--tol", type=float, default=None,
                   help="NI indicator tolerance (default: $NIFORGE_TOL or 1e-8)")
    a.add_argument("--shift", type=float, default=0.0,
                   help="analyze the perturbed realization A - SHIFT*I")
    a.add_argument("--out", help="write the JSON report here")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("synthesize", help="NI state feedback with degree of "
                       "stability eps")
    s.add_argument("model")
    s.add_argument("--epsilon", type=float, default=0.0)
    s.add_argument("--verify", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_synthesize)

    b = sub.add_parser("bode", help="Bode data as CSV or JSON")
    b.add_argument("model")
    b.add_argument("--epsilon", type=float, default=None,
                   help="synthesize first and use the closed loop "
                   "(uncertain_plant models)")
    b.add_argument("--omega-min", type=float, default=1e-3)
    b.add_argument("--omega-max", type=float, default=1e3)
    b.add_argument("--points", type=int, default=400)
    b.add_argument("--format", choices=("csv", "json"), default="csv")
    b.add_argument("--out")
    b.set_defaults(func=cmd_bode)

    d = sub.add_parser("demo", help="run the example plant end to end")
    d.add_argument("--out-dir", default=None,
                   help="also write demo_report.json and demo_bode.csv here")
    d.set_defaults(func=cmd_demo)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AssumptionError as exc:
        print(f"assumption violated: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ModelParseError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NIForgeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

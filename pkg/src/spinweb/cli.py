"""Command-line surface: sweeps, spectra, the GHZ protocol and N=4 checks.

All commands emit plotting-tool-agnostic data files (CSV or JSON) plus a run
manifest; rendering is left to external tools.  Exit codes: 0 success,
2 usage error, 3 domain error, 4 resource guard.
"""

import os

_threads = os.environ.get("SPINWEB_THREADS")
if _threads:
    # must land in the environment before numpy loads its BLAS
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ.setdefault(_var, _threads)

import argparse
import hashlib
import json
import sys
import tempfile
from datetime import datetime, timezone

import numpy as np

from . import __version__, n4
from .errors import DomainError, ResourceLimitError
from .hamiltonian import CouplingConfig, build_combined
from .spectral import eigendecompose, ground_subspace, track_levels
from .sweep import SweepConfig, run_sweep
from .system import SpinSystem

MAX_N_OUTER = 12

SWEEP_COLUMNS = ["c", "E0", "deg", "C_nn", "C_nnn", "XX_nn", "XX_nnn",
                 "ZZ_nn", "ZZ_nnn", "O_r", "O_s", "O_p"]


def _manifest(command: str, config: dict) -> dict:
    blob = json.dumps(config, sort_keys=True, separators=(",", ":"))
    return {
        "command": command,
        "config": config,
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "input_hash": hashlib.sha256(blob.encode()).hexdigest(),
    }


def _atomic_write(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".spinweb-")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _fmt(x) -> str:
    if x is None:
        return ""
    return repr(float(x))


def _check_n(n: int) -> None:
    if not 2 <= n <= MAX_N_OUTER:
        raise ResourceLimitError(
            f"--n must lie in [2, {MAX_N_OUTER}] (dense-solver guard), got {n}"
        )


def _parse_refs(spec: str):
    refs = []
    ring_eps = 0.01
    for token in filter(None, spec.split(",")):
        if token in ("ring", "star"):
            refs.append(token)
        elif token == "ansatz":
            refs.append("singlet_ansatz")
        elif token.startswith("ring-eps"):
            refs.append("ring_eps")
            if "=" in token:
                ring_eps = float(token.split("=", 1)[1])
        else:
            raise DomainError(f"unknown reference {token!r}")
    return tuple(refs), ring_eps


def _parse_pairs(spec: str, n_outer: int):
    nn, nnn = (1, 2), None
    tokens = [t for t in spec.split(",") if t]
    parsed = []
    for t in tokens:
        if t == "nn":
            parsed.append((1, 2))
        elif t == "nnn":
            parsed.append((1, 3) if n_outer >= 3 else (1, 2))
        else:
            a, b = t.split(":")
            parsed.append((int(a), int(b)))
    if len(parsed) >= 1:
        nn = parsed[0]
    if len(parsed) >= 2:
        nnn = parsed[1]
    return nn, nnn


def _record_row(r) -> dict:
    return {
        "c": r.c, "E0": r.ground_energy, "deg": r.ground_degeneracy,
        "low_energies": list(r.low_energies),
        "C_nn": r.C_nn, "C_nnn": r.C_nnn,
        "XX_nn": r.XX_nn, "XX_nnn": r.XX_nnn,
        "ZZ_nn": r.ZZ_nn, "ZZ_nnn": r.ZZ_nnn,
        "O_r": r.O_r, "O_s": r.O_s, "O_p": r.O_p,
    }


def _crossing_row(x) -> dict:
    return {"c_lo": x.c_lo, "c_hi": x.c_hi,
            "label_from": x.labels[0], "label_to": x.labels[1],
            "min_gap": x.min_gap}


def cmd_sweep(args) -> int:
    _check_n(args.n)
    refs, ring_eps = _parse_refs(args.refs)
    nn, nnn = _parse_pairs(args.pairs, args.n)
    grid = np.linspace(args.c_min, args.c_max, args.c_steps + 1)
    config = SweepConfig(
        n_outer=args.n, J=args.j, c_grid=grid, nn_pair=nn, nnn_pair=nnn,
        references=refs, ring_eps=ring_eps, n_levels=args.levels,
        allow_double_bond=(args.n == 2),
    )
    records = run_sweep(config)
    system = SpinSystem(args.n, has_central=True)
    track = track_levels(system, args.j, grid, n_levels=max(2, args.levels),
                         allow_double_bond=(args.n == 2)) \
        if len(grid) >= 2 else None

    manifest = _manifest("sweep", {
        "n": args.n, "j": args.j, "c_min": args.c_min, "c_max": args.c_max,
        "c_steps": args.c_steps, "pairs": args.pairs, "refs": args.refs,
        "levels": args.levels, "format": args.format,
    })
    crossings = [_crossing_row(x) for x in track.crossings] if track else []

    if args.format == "json":
        payload = {
            "manifest": manifest,
            "records": [_record_row(r) for r in records],
            "crossings": crossings,
            "reports": {},
        }
        _emit(args.out, json.dumps(payload, indent=2) + "\n")
    else:
        has_op = any(r.O_p is not None for r in records)
        cols = [c for c in SWEEP_COLUMNS if has_op or c != "O_p"]
        lines = [",".join(cols)]
        for r in records:
            row = _record_row(r)
            lines.append(",".join(
                _fmt(row[c]) if c not in ("deg",) else str(row[c]) for c in cols))
        _emit(args.out, "\n".join(lines) + "\n")
        if args.out:
            xl = ["c_lo,c_hi,label_from,label_to,min_gap"]
            for x in crossings:
                xl.append(",".join([_fmt(x["c_lo"]), _fmt(x["c_hi"]),
                                    str(x["label_from"]), str(x["label_to"]),
                                    _fmt(x["min_gap"])]))
            _atomic_write(args.out + ".crossings.csv", "\n".join(xl) + "\n")
            _atomic_write(args.out + ".manifest.json",
                          json.dumps(manifest, indent=2) + "\n")
    return 0


def cmd_spectrum(args) -> int:
    _check_n(args.n)
    grid = np.linspace(args.c_min, args.c_max, args.c_steps + 1)
    system = SpinSystem(args.n, has_central=True)
    manifest = _manifest("spectrum", {
        "n": args.n, "j": args.j, "c_min": args.c_min, "c_max": args.c_max,
        "c_steps": args.c_steps, "levels": args.levels, "format": args.format,
    })
    if args.levels < 2:
        # energies only; no continuation, hence no crossing analysis
        records = []
        for c in grid:
            h = build_combined(system, CouplingConfig(J=args.j, c=float(c)),
                               allow_double_bond=(args.n == 2))
            ev = eigendecompose(h).eigenvalues
            records.append({"c": float(c), "energies": [float(ev[0])]})
        payload = {"manifest": manifest, "records": records, "crossings": [],
                   "reports": {"note": "levels < 2: no crossing analysis"}}
    else:
        track = track_levels(system, args.j, grid, n_levels=args.levels,
                             allow_double_bond=(args.n == 2))
        levels = {
            str(label): [{"c": c, "energy": e} for c, e, _ in points]
            for label, points in track.tracked_levels.items()
        }
        payload = {
            "manifest": manifest,
            "records": levels,
            "crossings": [_crossing_row(x) for x in track.crossings],
            "reports": {"flagged_intervals": track.flagged_intervals},
        }
    if args.format == "json":
        _emit(args.out, json.dumps(payload, indent=2) + "\n")
    else:
        lines = ["label,c,energy"]
        if args.levels < 2:
            for r in payload["records"]:
                lines.append(",".join(["0", _fmt(r["c"]), _fmt(r["energies"][0])]))
        else:
            for label, pts in payload["records"].items():
                for p in pts:
                    lines.append(",".join([label, _fmt(p["c"]), _fmt(p["energy"])]))
        _emit(args.out, "\n".join(lines) + "\n")
        if args.out:
            xl = ["c_lo,c_hi,label_from,label_to,min_gap"]
            for x in payload["crossings"]:
                xl.append(",".join([_fmt(x["c_lo"]), _fmt(x["c_hi"]),
                                    str(x["label_from"]), str(x["label_to"]),
                                    _fmt(x["min_gap"])]))
            _atomic_write(args.out + ".crossings.csv", "\n".join(xl) + "\n")
            _atomic_write(args.out + ".manifest.json",
                          json.dumps(manifest, indent=2) + "\n")
    return 0


def _outcome_report(o) -> dict:
    return {
        "outcome": o.outcome,
        "central_result": o.central_result,
        "probability": o.probability,
        "bipartition_entropies": list(o.bipartition_entropies),
        "pairwise_concurrences": list(o.pairwise_concurrences),
    }


def cmd_ghz(args) -> int:
    regions = n4.detect_regions(args.j)
    intermediate = (regions[0][1], regions[1][0])
    star = (regions[1][1], 1.0)
    if args.region == "intermediate":
        region = intermediate
        c = args.c if args.c is not None else 0.5 * (region[0] + region[1])
    else:
        region = star
        c = args.c if args.c is not None else 0.95
    h = build_combined(n4.FULL, CouplingConfig(J=args.j, c=c))
    gs = ground_subspace(eigendecompose(h))
    if args.region == "intermediate":
        outcomes = n4.ghz_protocol(gs, c, args.field_h, J=args.j, region=region)
    else:
        outcomes = n4.star_region_protocol(gs, c, args.field_h, J=args.j,
                                           region=region)
    manifest = _manifest("ghz", {
        "c": c, "j": args.j, "field_h": args.field_h, "region": args.region,
    })
    payload = {
        "manifest": manifest,
        "records": [],
        "crossings": [],
        "reports": {
            "region": args.region,
            "region_bounds": list(region),
            "intermediate_region": list(intermediate),
            "outcomes": [_outcome_report(o) for o in outcomes],
        },
    }
    _emit(args.out, json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_verify_n4(args) -> int:
    checks = []

    for (bit, label) in n4.ACTION_TABLE:
        for which in ("star", "ring"):
            _, ok = n4.verify_table_action(which, bit, label)
            checks.append((f"action_table[{which}, |{bit}>|{label}>]", ok))

    def coeffs_at(c):
        h = build_combined(n4.FULL, CouplingConfig(J=1.0, c=c))
        gs = ground_subspace(eigendecompose(h))
        return gs, n4.extract_coefficients(gs, c)

    _, ring_coeffs = coeffs_at(0.0)
    expected = (1 / np.sqrt(2), -1 / np.sqrt(2), 0.0)
    got = (ring_coeffs.alpha, ring_coeffs.beta, ring_coeffs.gamma)
    checks.append(("coefficients at c=0",
                   max(abs(g - e) for g, e in zip(got, expected)) < 1e-8))

    _, star_coeffs = coeffs_at(1.0)
    expected = (-np.sqrt(1 / 6), -np.sqrt(2 / 6), 1 / np.sqrt(2))
    got = (star_coeffs.alpha, star_coeffs.beta, star_coeffs.gamma)
    checks.append(("coefficients at c=1",
                   max(abs(g - e) for g, e in zip(got, expected)) < 1e-8))

    from .sweep import pair_concurrence
    for c in (0.0, 0.2, 0.4, 0.9, 1.0):
        gs, coeffs = coeffs_at(c)
        c_nn, c_nnn = n4.level_I_concurrences(coeffs)
        p_nn = pair_concurrence(gs.density, n4.FULL, (1, 2))
        p_nnn = pair_concurrence(gs.density, n4.FULL, (1, 3))
        ok = abs(c_nn - p_nn) < 1e-8 and abs(c_nnn - p_nnn) < 1e-8
        checks.append((f"closed form vs pipeline at c={c}", ok))

    failed = [name for name, ok in checks if not ok]
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in checks]
    report = "\n".join(lines) + "\n"
    if args.out:
        _atomic_write(args.out, report)
    else:
        sys.stdout.write(report)
    if failed:
        sys.stderr.write(f"{len(failed)} of {len(checks)} checks failed\n")
        return 1
    return 0


def _emit(out, text: str) -> None:
    if out:
        _atomic_write(out, text)
    else:
        sys.stdout.write(text)


def _add_grid_flags(p):
    p.add_argument("--c-min", type=float, default=0.0)
    p.add_argument("--c-max", type=float, default=1.0)
    p.add_argument("--c-steps", type=int, default=400,
                   help="number of grid intervals (points = steps + 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinweb",
        description="Ground-state entanglement of combined ring/star XX spin networks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="concurrence / correlation / overlap sweep over c")
    p.add_argument("--n", type=int, required=True, help="number of outer spins")
    p.add_argument("--j", type=float, default=1.0)
    _add_grid_flags(p)
    p.add_argument("--pairs", default="nn,nnn",
                   help="'nn,nnn' or explicit pairs like '1:2,1:3'")
    p.add_argument("--refs", default="ring,star",
                   help="comma list of ring, star, ring-eps[=eps], ansatz")
    p.add_argument("--levels", type=int, default=6)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("spectrum", help="tracked energy levels and crossings")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=float, default=1.0)
    _add_grid_flags(p)
    p.add_argument("--levels", type=int, default=4)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("ghz", help="field-plus-measurement protocol report (N=4)")
    p.add_argument("--c", type=float, default=None,
                   help="default: midpoint of the detected intermediate region")
    p.add_argument("--j", type=float, default=1.0)
    p.add_argument("--field-h", type=float, default=1e-3)
    p.add_argument("--region", choices=("intermediate", "star"),
                   default="intermediate")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_ghz)

    p = sub.add_parser("verify-n4", help="operator-action oracle and closed-form checks")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify_n4)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        sys.stderr.write(f"resource guard: {exc}\n")
        return 4
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())

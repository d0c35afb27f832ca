"""Command line: run benchmark scenarios, sweep kernel sizes, self-check oracles."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import replace

import numpy as np

from . import __version__
from .config import load_scenario_config
from .correntropy import complex_correntropy, complex_correntropy_by_quadrature
from .exceptions import ConfigError
from .kernels import gaussian_kernel
from .mccc import batch_fixed_point
from .noise import sample_noise
from .rls import least_squares_weight
from .simulation import monte_carlo

__all__ = ["main"]


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)


def _write_wsnr_csv(path: str, report) -> None:
    lines = ["iteration,wsnr_mccc_db,wsnr_rls_db"]
    mccc = report.mean_series_db["mccc"]
    rls = report.mean_series_db["rls"]
    for i in range(len(mccc)):
        lines.append(f"{i + 1},{_fmt(mccc[i])},{_fmt(rls[i])}")
    _write_text(path, "\n".join(lines) + "\n")


def _write_json(path: str, payload: dict) -> None:
    _write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _manifest(command: str, config, config_path: str, outputs: list[str], started: float) -> dict:
    return {
        "tool": "complexcorr",
        "version": __version__,
        "command": command,
        "seed": config.seed,
        "config_file": str(config_path),
        "config": config.to_dict(),
        "outputs": outputs,
        "duration_seconds": time.perf_counter() - started,
    }


def _resolve_parallel(parallel, trials: int) -> int:
    if parallel is not None:
        if parallel < 1:
            raise ValueError(f"--parallel must be at least 1, got {parallel}")
        return parallel
    return min(trials, os.cpu_count() or 1)


def _load_config(args):
    config = load_scenario_config(args.config)
    if args.seed is not None:
        config = replace(config, seed=args.seed)
    return config


def _cmd_run(args) -> int:
    started = time.perf_counter()
    config = _load_config(args)
    os.makedirs(args.out, exist_ok=True)
    report = monte_carlo(config, n_jobs=_resolve_parallel(args.parallel, config.trials))

    csv_path = os.path.join(args.out, "wsnr_mean.csv")
    report_path = os.path.join(args.out, "report.json")
    _write_wsnr_csv(csv_path, report)
    _write_json(report_path, report.to_dict())
    _write_json(
        os.path.join(args.out, "manifest.json"),
        _manifest("run", config, args.config, ["wsnr_mean.csv", "report.json"], started),
    )
    print(
        f"steady-state WSNR (last {report.steady_window} iterations): "
        f"mccc {report.steady_state_db['mccc']:.2f} dB, "
        f"rls {report.steady_state_db['rls']:.2f} dB, "
        f"margin {report.steady_state_margin_db:+.2f} dB"
    )
    print(f"wrote {csv_path}, {report_path}")
    return 0


def _parse_sigmas(text: str) -> list[tuple[str, float]]:
    tokens = [tok.strip() for tok in text.split(",") if tok.strip()]
    if not tokens:
        raise ValueError("--sigmas must list at least one kernel size")
    sigmas = []
    for tok in tokens:
        try:
            value = float(tok)
        except ValueError:
            raise ValueError(f"--sigmas: cannot parse {tok!r} as a number") from None
        if not np.isfinite(value) or value <= 0:
            raise ValueError(f"--sigmas: kernel size must be positive, got {tok!r}")
        sigmas.append((tok, value))
    return sigmas


def _cmd_sweep(args) -> int:
    started = time.perf_counter()
    sigmas = _parse_sigmas(args.sigmas)  # validated before any run
    config = _load_config(args)
    os.makedirs(args.out, exist_ok=True)
    n_jobs = _resolve_parallel(args.parallel, config.trials)

    outputs = []
    summary = ["sigma,wsnr_mccc_db,wsnr_rls_db"]
    for token, sigma in sigmas:
        sub_config = replace(config, kernel_sigma=sigma)
        report = monte_carlo(sub_config, n_jobs=n_jobs)
        sub_dir = os.path.join(args.out, f"sigma_{token}")
        os.makedirs(sub_dir, exist_ok=True)
        _write_wsnr_csv(os.path.join(sub_dir, "wsnr_mean.csv"), report)
        _write_json(os.path.join(sub_dir, "report.json"), report.to_dict())
        outputs += [f"sigma_{token}/wsnr_mean.csv", f"sigma_{token}/report.json"]
        summary.append(
            f"{token},{_fmt(report.steady_state_db['mccc'])},{_fmt(report.steady_state_db['rls'])}"
        )
        print(
            f"sigma={token}: mccc {report.steady_state_db['mccc']:.2f} dB, "
            f"rls {report.steady_state_db['rls']:.2f} dB"
        )

    _write_text(os.path.join(args.out, "sweep_summary.csv"), "\n".join(summary) + "\n")
    outputs.append("sweep_summary.csv")
    _write_json(
        os.path.join(args.out, "manifest.json"),
        _manifest("sweep", config, args.config, outputs, started),
    )
    print(f"wrote {os.path.join(args.out, 'sweep_summary.csv')}")
    return 0


def _check_kernel_normalization():
    worst = 0.0
    for sigma in (0.5, 1.0, 2.0):
        grid = np.linspace(-8.0 * sigma, 8.0 * sigma, 4097)
        values = gaussian_kernel(grid, sigma)
        integral = float(np.trapezoid(values, grid)) if hasattr(np, "trapezoid") else float(
            np.trapz(values, grid)
        )
        worst = max(worst, abs(integral - 1.0))
    return worst < 1e-8, f"max |integral - 1| = {worst:.3e} over sigma in {{0.5, 1, 2}}"


def _check_integral_equivalence(rng, tol):
    worst = 0.0
    for i in range(5):
        n = int(rng.integers(2, 21))
        c1 = rng.normal(size=n) + 1j * rng.normal(size=n)
        c2 = rng.normal(size=n) + 1j * rng.normal(size=n)
        sigma = (0.5, 1.0, 2.0)[i % 3]
        closed = complex_correntropy(c1, c2, sigma)
        integral = complex_correntropy_by_quadrature(c1, c2, sigma)
        worst = max(worst, abs(closed - integral) / closed)
    return worst < tol, f"max relative error = {worst:.3e} over 5 datasets (tol {tol:g})"


def _check_noiseless_fixed_point(rng):
    w_true = 2.0 + 3.0j
    x = rng.normal(size=64) + 1j * rng.normal(size=64)
    result = batch_fixed_point(x, w_true * x, sigma=0.5, max_iter=20)
    gap = abs(result.weight - w_true)
    return gap < 1e-10, f"|w - w_true| = {gap:.3e} after {result.n_iter} iterations"


def _check_large_sigma_ls(rng):
    from .noise import impulsive_mixture

    w_true = 0.8 - 0.4j
    x = rng.normal(size=200) + 1j * rng.normal(size=200)
    d = w_true * x + sample_noise(impulsive_mixture(), rng, size=200)
    w_mccc = batch_fixed_point(x, d, sigma=100.0).weight
    gap = abs(w_mccc - least_squares_weight(x, d))
    return gap < 1e-3, f"|w_mccc - w_ls| = {gap:.3e} at sigma=100"


def _cmd_oracle_check(args) -> int:
    rng = np.random.default_rng(args.seed)
    checks = [
        ("kernel-normalization", _check_kernel_normalization()),
        ("integral-equivalence", _check_integral_equivalence(rng, args.tol)),
        ("noiseless-fixed-point", _check_noiseless_fixed_point(rng)),
        ("large-sigma-ls", _check_large_sigma_ls(rng)),
    ]
    failures = 0
    for name, (ok, detail) in checks:
        print(f"{'PASS' if ok else 'FAIL'} {name:<24} {detail}")
        failures += 0 if ok else 1
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return 0 if failures == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="complexcorr",
        description="Correntropy-based complex adaptive filtering benchmarks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a benchmark scenario from a config file")
    run.add_argument("--config", required=True, help="scenario config file (INI format)")
    run.add_argument("--out", required=True, help="output directory")
    run.add_argument("--seed", type=int, default=None, help="override the config seed")
    run.add_argument("--parallel", type=int, default=None, help="worker processes (default: trials capped at CPUs)")
    run.set_defaults(func=_cmd_run)

    sweep = sub.add_parser("sweep", help="run the scenario once per kernel size")
    sweep.add_argument("--config", required=True)
    sweep.add_argument("--out", required=True)
    sweep.add_argument("--sigmas", required=True, help="comma-separated kernel sizes, e.g. 0.5,2,10")
    sweep.add_argument("--seed", type=int, default=None)
    sweep.add_argument("--parallel", type=int, default=None)
    sweep.set_defaults(func=_cmd_sweep)

    oracle = sub.add_parser("oracle-check", help="self-check the numerical oracles")
    oracle.add_argument("--seed", type=int, default=0)
    oracle.add_argument("--tol", type=float, default=1e-6, help="tolerance for the integral-equivalence check")
    oracle.set_defaults(func=_cmd_oracle_check)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

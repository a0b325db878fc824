"""Command-line scenario runner.

Every scenario resolves its configuration deterministically (no clocks, no
randomness), writes CSV curves and a JSON report into the output directory,
and prints a short summary. Identical configuration produces byte-identical
files; the report embeds the resolved configuration so a run can be
reproduced from its own output via --config.

Exit codes: 0 success, 2 configuration error, 3 numerical contract violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .boost import BoostMode, PreparationContext, transform
from .detection import (
    DetectorSpec,
    detection_curve,
    ratio_report,
    signaling_discriminator,
)
from .kinematics import (
    BoostParameter,
    FourMomentum,
    wigner_angle,
    wigner_half_angle_sine,
)
from .spin import SPIN_PLUS_X, SPIN_PLUS_Z
from .states import (
    MeasurementSpec,
    build_entangled_pair,
    center_interference_minimum,
    collapse,
)
from .wavefunction import (
    Density,
    GaussianPacketSpec,
    KFactor,
    MomentumGrid,
    YGrid,
    density,
    synthesize_discrete,
    synthesize_gaussian,
)

SCENARIOS = ("angle", "figure1", "figure2", "ratio", "signaling", "paradox")

_UNITS_NOTE = (
    "natural units: hbar = c = m = 1; lengths in reduced Compton wavelengths; "
    "angles in radians; speeds as fractions of c"
)

_NORMALIZATION_TOL = 1e-6
_NO_SIGNALING_TOL = 1e-12


class ConfigError(Exception):
    """Invalid or contradictory scenario configuration."""


class ContractError(Exception):
    """A numerical post-condition failed during a run."""


@dataclass
class ScenarioConfig:
    scenario: str
    gamma_beta: float | None = None
    beta: float | None = None
    gamma_p: float | None = None
    p: float | None = None
    v: float | None = None
    w: float = 1.0
    mode: str = "linear"
    prep: str = "minus_y"
    basis: str = "z"
    outcome: int = -1
    k_factor: str = "sqrt_m_over_p0"
    packet_width: float = 1.0
    grid_points: int | None = None
    half_periods: int = 8
    p_grid_points: int = 4096
    out: str = "out"

    def __post_init__(self) -> None:
        if self.scenario not in SCENARIOS:
            raise ConfigError(f"unknown scenario {self.scenario!r}")
        if self.gamma_beta is not None and self.beta is not None:
            raise ConfigError("give at most one of gamma_beta and beta")
        if sum(x is not None for x in (self.gamma_p, self.p, self.v)) > 1:
            raise ConfigError("give at most one of gamma_p, p and v")
        if self.mode not in ("linear", "physical"):
            raise ConfigError(f"mode must be linear or physical, got {self.mode!r}")
        if self.prep not in ("plus_y", "minus_y", "confined"):
            raise ConfigError(
                f"prep must be plus_y, minus_y or confined, got {self.prep!r}"
            )
        if self.basis not in ("z", "x"):
            raise ConfigError(f"basis must be z or x, got {self.basis!r}")
        if self.outcome not in (+1, -1):
            raise ConfigError(f"outcome must be +1 or -1, got {self.outcome!r}")
        if self.k_factor not in ("unity", "sqrt_m_over_p0"):
            raise ConfigError(
                f"k_factor must be unity or sqrt_m_over_p0, got {self.k_factor!r}"
            )


def _resolve_boost(cfg: ScenarioConfig) -> BoostParameter:
    try:
        if cfg.beta is not None:
            return BoostParameter(cfg.beta)
        if cfg.gamma_beta is not None:
            return BoostParameter.from_gamma(cfg.gamma_beta)
        if cfg.scenario == "figure2":
            return BoostParameter(0.995)
        return BoostParameter.from_gamma(10.0)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _resolve_momentum(cfg: ScenarioConfig) -> FourMomentum:
    try:
        if cfg.p is not None:
            if cfg.p <= 0.0:
                raise ConfigError(f"p must be positive, got {cfg.p!r}")
            return FourMomentum(cfg.p)
        if cfg.v is not None:
            if not 0.0 < cfg.v < 1.0:
                raise ConfigError(f"v must lie in (0, 1), got {cfg.v!r}")
            return FourMomentum.from_speed(cfg.v)
        gamma_p = 1.2 if cfg.gamma_p is None else cfg.gamma_p
        if gamma_p <= 1.0:
            raise ConfigError(f"gamma_p must exceed 1, got {gamma_p!r}")
        return FourMomentum.from_gamma(gamma_p)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _resolve_mode(cfg: ScenarioConfig) -> BoostMode:
    if cfg.mode == "linear":
        return BoostMode("linear")
    return BoostMode("physical", PreparationContext(cfg.prep))


def _resolve_detector(cfg: ScenarioConfig) -> DetectorSpec:
    try:
        return DetectorSpec(cfg.w)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _branch_density(
    momentum: FourMomentum,
    boost: BoostParameter,
    mode: BoostMode,
    basis: str,
    outcome: int,
    grid: YGrid,
) -> Density:
    """Collapse one basis branch, boost particle 2, synthesize its density.

    The origin is calibrated to the interference minimum of the observed
    pattern, which is where the detector's reference point sits by
    construction; this is an exact rigid translation in state space.
    """
    pair = build_entangled_pair(momentum.p)
    _, state = collapse(pair, MeasurementSpec(basis, outcome))
    assert state is not None
    state = transform(state, boost, mode)
    state = center_interference_minimum(state)
    wavefunction = synthesize_discrete(state, grid)
    dens = density(wavefunction)
    if abs(dens.integral() - 1.0) > _NORMALIZATION_TOL:
        raise ContractError(
            f"density integral {dens.integral()!r} deviates from 1"
        )
    return dens


def _standing_grid(cfg: ScenarioConfig, momentum: FourMomentum) -> YGrid:
    n_points = 4097 if cfg.grid_points is None else cfg.grid_points
    return YGrid.standing_wave(momentum.p, cfg.half_periods, n_points)


def _kinematics_block(
    boost: BoostParameter, momentum: FourMomentum | None
) -> dict:
    block = {"beta": boost.beta, "gamma_beta": boost.gamma}
    if momentum is not None:
        block.update(
            {
                "p": momentum.p,
                "gamma_p": momentum.gamma_p,
                "v": momentum.speed,
                "wigner_half_angle_sine": wigner_half_angle_sine(
                    momentum.gamma_p, boost.gamma
                ),
                "wigner_angle": wigner_angle(momentum, boost),
            }
        )
    return block


def _write_csv(path: Path, header: list[str], columns: list[np.ndarray]) -> None:
    lines = [",".join(header)]
    for row in zip(*columns):
        lines.append(",".join(f"{value:.17g}" for value in row))
    with open(path, "w", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")


def _finish(report: dict, out_dir: Path, scenario: str) -> dict:
    report_path = out_dir / f"{scenario}_report.json"
    with open(report_path, "w", newline="\n") as handle:
        handle.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    report["files"].append(report_path.name)
    return report


def _base_report(cfg: ScenarioConfig) -> dict:
    return {
        "tool": "spinboost",
        "tool_version": __version__,
        "units": _UNITS_NOTE,
        "scenario": cfg.scenario,
        "config": asdict(cfg),
        "files": [],
    }


def run_angle(cfg: ScenarioConfig, out_dir: Path) -> dict:
    boost = _resolve_boost(cfg)
    momentum = _resolve_momentum(cfg)
    report = _base_report(cfg)
    report["kinematics"] = _kinematics_block(boost, momentum)
    report["outputs"] = {
        "wigner_angle_positive_momentum": wigner_angle(momentum, boost),
        "wigner_angle_negative_momentum": wigner_angle(
            FourMomentum(-momentum.p), boost
        ),
    }
    return _finish(report, out_dir, cfg.scenario)


def run_figure1(cfg: ScenarioConfig, out_dir: Path) -> dict:
    boost = _resolve_boost(cfg)
    momentum = _resolve_momentum(cfg)
    mode = _resolve_mode(cfg)
    grid = _standing_grid(cfg, momentum)

    dens_psi = _branch_density(momentum, boost, mode, "z", cfg.outcome, grid)
    dens_phi = _branch_density(momentum, boost, mode, "x", cfg.outcome, grid)

    csv_path = out_dir / "figure1.csv"
    _write_csv(
        csv_path,
        ["y_over_compton", "density_phi", "density_psi"],
        [grid.points, dens_phi.values, dens_psi.values],
    )

    peak = float(max(dens_psi.values.max(), dens_phi.values.max()))
    psi_max = float(dens_psi.values.max())
    psi_min = float(dens_psi.values.min())
    report = _base_report(cfg)
    report["kinematics"] = _kinematics_block(boost, momentum)
    report["outputs"] = {
        "visibility_psi": (psi_max - psi_min) / (psi_max + psi_min),
        "min_to_max_psi": psi_min / psi_max,
        "sup_gap_over_peak": float(
            np.max(np.abs(dens_psi.values - dens_phi.values)) / peak
        ),
    }
    report["files"].append(csv_path.name)
    return _finish(report, out_dir, cfg.scenario)


def run_figure2(cfg: ScenarioConfig, out_dir: Path) -> dict:
    boost = _resolve_boost(cfg)
    k_factor = KFactor(cfg.k_factor)
    width = cfg.packet_width
    n_points = 4096 if cfg.grid_points is None else cfg.grid_points
    grid = YGrid(-8.0 * width, 8.0 * width, n_points)
    p_grid = MomentumGrid.for_packet(width, n_points=cfg.p_grid_points)

    wf_x = synthesize_gaussian(
        GaussianPacketSpec(width, SPIN_PLUS_X, k_factor), boost, grid, p_grid
    )
    wf_z = synthesize_gaussian(
        GaussianPacketSpec(width, SPIN_PLUS_Z, k_factor), boost, grid, p_grid
    )
    dens_x = density(wf_x)
    dens_z = density(wf_z)
    for dens in (dens_x, dens_z):
        if abs(dens.integral() - 1.0) > _NORMALIZATION_TOL:
            raise ContractError(
                f"density integral {dens.integral()!r} deviates from 1"
            )

    csv_path = out_dir / "figure2.csv"
    _write_csv(
        csv_path,
        ["y_over_compton", "density_spin_x", "density_spin_z"],
        [grid.points, dens_x.values, dens_z.values],
    )

    report = _base_report(cfg)
    report["kinematics"] = _kinematics_block(boost, None)
    report["outputs"] = {
        "sup_norm_difference": float(np.max(np.abs(dens_x.values - dens_z.values))),
        "parseval_ratio_spin_x": wf_x.meta["parseval_ratio"],
        "parseval_ratio_spin_z": wf_z.meta["parseval_ratio"],
        "range_truncated": wf_x.meta["range_truncated"] or wf_z.meta["range_truncated"],
    }
    report["files"].append(csv_path.name)
    return _finish(report, out_dir, cfg.scenario)


def _paired_densities(
    cfg: ScenarioConfig,
) -> tuple[BoostParameter, FourMomentum, YGrid, Density, Density]:
    boost = _resolve_boost(cfg)
    momentum = _resolve_momentum(cfg)
    mode = _resolve_mode(cfg)
    grid = _standing_grid(cfg, momentum)
    dens_psi = _branch_density(momentum, boost, mode, "z", cfg.outcome, grid)
    dens_phi = _branch_density(momentum, boost, mode, "x", cfg.outcome, grid)
    return boost, momentum, grid, dens_psi, dens_phi


def run_ratio(cfg: ScenarioConfig, out_dir: Path) -> dict:
    boost, momentum, _, dens_psi, dens_phi = _paired_densities(cfg)
    det = _resolve_detector(cfg)
    ratios = ratio_report(dens_psi, dens_phi, det, boost.gamma, momentum.speed)
    report = _base_report(cfg)
    report["kinematics"] = _kinematics_block(boost, momentum)
    report["outputs"] = asdict(ratios)
    return _finish(report, out_dir, cfg.scenario)


def run_signaling(cfg: ScenarioConfig, out_dir: Path) -> dict:
    boost, momentum, grid, dens_psi, dens_phi = _paired_densities(cfg)
    det = _resolve_detector(cfg)
    sig = signaling_discriminator(dens_psi, dens_phi, det)

    centers = grid.points
    csv_path = out_dir / "signaling.csv"
    _write_csv(
        csv_path,
        ["y_over_compton", "detect_prob_psi", "detect_prob_phi"],
        [
            centers,
            detection_curve(dens_psi, det, centers),
            detection_curve(dens_phi, det, centers),
        ],
    )

    report = _base_report(cfg)
    report["kinematics"] = _kinematics_block(boost, momentum)
    report["outputs"] = asdict(sig)
    report["files"].append(csv_path.name)
    return _finish(report, out_dir, cfg.scenario)


def run_paradox(cfg: ScenarioConfig, out_dir: Path) -> dict:
    boost, momentum, _, dens_psi, dens_phi = _paired_densities(cfg)
    det = _resolve_detector(cfg)
    ratios = ratio_report(dens_psi, dens_phi, det, boost.gamma, momentum.speed)
    sig = signaling_discriminator(dens_psi, dens_phi, det)

    pair = build_entangled_pair(momentum.p)
    collapse_probs = {
        f"collapse_probability_{basis}{'+' if outcome > 0 else '-'}": collapse(
            pair, MeasurementSpec(basis, outcome)
        )[0]
        for basis in ("z", "x")
        for outcome in (+1, -1)
    }

    if cfg.mode == "physical" and sig.sup_gap > _NO_SIGNALING_TOL:
        raise ContractError(
            f"physical mode must not signal, but sup gap is {sig.sup_gap!r}"
        )

    report = _base_report(cfg)
    report["kinematics"] = _kinematics_block(boost, momentum)
    report["outputs"] = {
        **collapse_probs,
        **asdict(ratios),
        "signaling_sup": sig.sup_gap,
        "signaling_ratio_gap": sig.ratio_gap,
    }
    return _finish(report, out_dir, cfg.scenario)


_RUNNERS = {
    "angle": run_angle,
    "figure1": run_figure1,
    "figure2": run_figure2,
    "ratio": run_ratio,
    "signaling": run_signaling,
    "paradox": run_paradox,
}


def run_scenario(cfg: ScenarioConfig) -> dict:
    out_dir = Path(cfg.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    return _RUNNERS[cfg.scenario](cfg, out_dir)


def _parse_args(argv: list[str] | None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="spinboost",
        description="Boosted-frame detection statistics for a spin-1/2 "
        "particle in a superposition of counter-propagating momenta.",
    )
    parser.add_argument("scenario", nargs="?", choices=SCENARIOS)
    parser.add_argument("--config", help="JSON config or report file to replay")
    parser.add_argument("--gamma-beta", type=float, dest="gamma_beta")
    parser.add_argument("--beta", type=float)
    parser.add_argument("--gamma-p", type=float, dest="gamma_p")
    parser.add_argument("--p", type=float)
    parser.add_argument("--v", type=float)
    parser.add_argument("--w", type=float, help="detector kernel width")
    parser.add_argument("--mode", choices=("linear", "physical"))
    parser.add_argument("--prep", choices=("plus_y", "minus_y", "confined"))
    parser.add_argument("--basis", choices=("z", "x"))
    parser.add_argument("--outcome", choices=("+1", "-1", "1"))
    parser.add_argument("--k-factor", choices=("unity", "sqrt"), dest="k_factor")
    parser.add_argument("--packet-width", type=float, dest="packet_width")
    parser.add_argument("--grid-points", type=int, dest="grid_points")
    parser.add_argument("--half-periods", type=int, dest="half_periods")
    parser.add_argument("--p-grid-points", type=int, dest="p_grid_points")
    parser.add_argument("--out", help="output directory (default: out)")
    return parser.parse_args(argv)


def _build_config(args: argparse.Namespace) -> ScenarioConfig:
    if args.config is not None:
        with open(args.config) as handle:
            payload = json.load(handle)
        base = payload.get("config", payload)
        if args.scenario is not None and args.scenario != base.get("scenario"):
            raise ConfigError(
                f"scenario {args.scenario!r} conflicts with the config file's "
                f"{base.get('scenario')!r}"
            )
        if args.out is not None:
            base = {**base, "out": args.out}
        try:
            return ScenarioConfig(**base)
        except TypeError as exc:
            raise ConfigError(f"malformed config file: {exc}") from None

    if args.scenario is None:
        raise ConfigError("a scenario name or --config is required")

    overrides = {}
    for name in (
        "gamma_beta",
        "beta",
        "gamma_p",
        "p",
        "v",
        "w",
        "mode",
        "prep",
        "basis",
        "k_factor",
        "packet_width",
        "grid_points",
        "half_periods",
        "p_grid_points",
        "out",
    ):
        value = getattr(args, name)
        if value is not None:
            overrides[name] = value
    if args.outcome is not None:
        overrides["outcome"] = int(args.outcome)
    if overrides.get("k_factor") == "sqrt":
        overrides["k_factor"] = "sqrt_m_over_p0"
    return ScenarioConfig(scenario=args.scenario, **overrides)


def _summarize(report: dict) -> None:
    print(f"scenario: {report['scenario']}  (spinboost {report['tool_version']})")
    print(f"units: {report['units']}")
    for block in ("kinematics", "outputs"):
        for key, value in sorted(report.get(block, {}).items()):
            print(f"{key} = {value}")
    for name in report["files"]:
        print(f"wrote {Path(report['config']['out']) / name}")


def main(argv: list[str] | None = None) -> int:
    try:
        args = _parse_args(argv)
        cfg = _build_config(args)
        report = run_scenario(cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except ContractError as exc:
        print(f"numerical contract violation: {exc}", file=sys.stderr)
        return 3
    _summarize(report)
    return 0


if __name__ == "__main__":
    sys.exit(main())

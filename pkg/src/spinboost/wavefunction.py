"""Position-space synthesis of spin-component wavefunctions.

Discrete two-momentum superpositions are synthesized in closed form on a
uniform y grid; Gaussian momentum wavepackets go through trapezoid
quadrature over a momentum grid, with the per-momentum spin rotation applied
inside the integral. Both paths return a pair of complex spin-component
sample arrays normalized so the total density integrates to one.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .kinematics import BoostParameter, _DEGENERATE_GAMMA
from .spin import Spinor
from .states import MomentumSpinState, common_momentum_magnitude

__all__ = [
    "YGrid",
    "MomentumGrid",
    "KFactor",
    "GaussianPacketSpec",
    "PositionWavefunction",
    "Density",
    "synthesize_discrete",
    "synthesize_gaussian",
    "density",
]

#: Momentum-amplitude ratio at the quadrature range edge above which the
#: range is flagged as too narrow.
EDGE_AMPLITUDE_LIMIT = 1e-8

_SYNTH_CHUNK = 512


@dataclass(frozen=True)
class YGrid:
    """Uniform position grid, inclusive of both endpoints."""

    y_min: float
    y_max: float
    n_points: int

    def __post_init__(self) -> None:
        if self.n_points < 2:
            raise ValueError(f"need at least 2 grid points, got {self.n_points}")
        if not self.y_max > self.y_min:
            raise ValueError(f"empty grid window [{self.y_min}, {self.y_max}]")

    @property
    def spacing(self) -> float:
        return (self.y_max - self.y_min) / (self.n_points - 1)

    @property
    def points(self) -> np.ndarray:
        return np.linspace(self.y_min, self.y_max, self.n_points)

    def trapezoid_weights(self) -> np.ndarray:
        w = np.full(self.n_points, self.spacing)
        w[0] *= 0.5
        w[-1] *= 0.5
        return w

    @classmethod
    def standing_wave(
        cls, p: float, half_periods: int = 8, n_points: int = 4097
    ) -> "YGrid":
        """Window of an integer number of half-periods pi/p, centered on 0.

        The default 4096 intervals make the pattern's zeros, extrema and the
        origin exact grid points whenever ``n_points - 1`` is divisible by
        ``4 * half_periods``, so normalization and extremum lookups are exact.
        """
        if not (math.isfinite(p) and p > 0.0):
            raise ValueError(f"momentum magnitude must be positive, got {p!r}")
        if half_periods < 1:
            raise ValueError(f"need at least one half-period, got {half_periods}")
        half_window = 0.5 * half_periods * math.pi / p
        return cls(-half_window, half_window, n_points)


@dataclass(frozen=True)
class MomentumGrid:
    """Uniform momentum quadrature grid, inclusive of both endpoints."""

    p_min: float
    p_max: float
    n_points: int

    def __post_init__(self) -> None:
        if self.n_points < 2:
            raise ValueError(f"need at least 2 quadrature points, got {self.n_points}")
        if not self.p_max > self.p_min:
            raise ValueError(f"empty momentum window [{self.p_min}, {self.p_max}]")

    @property
    def spacing(self) -> float:
        return (self.p_max - self.p_min) / (self.n_points - 1)

    @property
    def points(self) -> np.ndarray:
        return np.linspace(self.p_min, self.p_max, self.n_points)

    def trapezoid_weights(self) -> np.ndarray:
        w = np.full(self.n_points, self.spacing)
        w[0] *= 0.5
        w[-1] *= 0.5
        return w

    @classmethod
    def for_packet(
        cls, width: float, extent: float = 8.0, n_points: int = 4096
    ) -> "MomentumGrid":
        """Symmetric range covering ``extent`` momentum-amplitude widths."""
        if not (math.isfinite(width) and width > 0.0):
            raise ValueError(f"packet width must be positive, got {width!r}")
        return cls(-extent / width, extent / width, n_points)


class KFactor(enum.Enum):
    """Energy-dependent weight in the position-representation integral,
    encoding the choice of relativistic position operator."""

    UNITY = "unity"
    SQRT_M_OVER_P0 = "sqrt_m_over_p0"


@dataclass(frozen=True)
class GaussianPacketSpec:
    """Gaussian momentum amplitude exp(-p**2 width**2 / 2) with a fixed spin."""

    width: float
    spin: Spinor
    k_factor: KFactor = KFactor.SQRT_M_OVER_P0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.width) and self.width > 0.0):
            raise ValueError(f"packet width must be positive, got {self.width!r}")


@dataclass(frozen=True, eq=False)
class PositionWavefunction:
    """Sampled spin-up/spin-down complex components on a y grid."""

    grid: YGrid
    up: np.ndarray
    down: np.ndarray
    meta: dict = field(default_factory=dict)

    def norm_integral(self) -> float:
        w = self.grid.trapezoid_weights()
        return float(np.sum(w * (np.abs(self.up) ** 2 + np.abs(self.down) ** 2)))


@dataclass(frozen=True, eq=False)
class Density:
    """Sampled position density on a y grid."""

    grid: YGrid
    values: np.ndarray

    def integral(self) -> float:
        return float(np.sum(self.grid.trapezoid_weights() * self.values))


def density(wavefunction: PositionWavefunction) -> Density:
    """Pointwise |up|**2 + |down|**2 of a normalized wavefunction."""
    values = np.abs(wavefunction.up) ** 2 + np.abs(wavefunction.down) ** 2
    return Density(wavefunction.grid, values)


def _normalized(
    grid: YGrid, up: np.ndarray, down: np.ndarray
) -> tuple[np.ndarray, np.ndarray, float]:
    raw = float(np.sum(grid.trapezoid_weights() * (np.abs(up) ** 2 + np.abs(down) ** 2)))
    if raw <= 0.0:
        raise ValueError("wavefunction vanishes on the grid window")
    scale = 1.0 / math.sqrt(raw)
    return up * scale, down * scale, raw


def synthesize_discrete(state: MomentumSpinState, grid: YGrid) -> PositionWavefunction:
    """Closed-form plane-wave synthesis of a discrete superposition.

    All momenta must share one magnitude; then the energy-dependent weight
    of the position representation is a common factor and drops out under
    normalization, so the result is representation-independent.
    """
    try:
        magnitude = common_momentum_magnitude(state)
    except ValueError as exc:
        raise ValueError(
            f"{exc}; the closed form is only representation-independent for a "
            "single momentum magnitude - use synthesize_gaussian-style "
            "quadrature with an explicit K factor instead"
        ) from None
    y = grid.points
    up = np.zeros(grid.n_points, dtype=complex)
    down = np.zeros(grid.n_points, dtype=complex)
    for component in state.components:
        coeff = component.coefficient_vector()
        phases = np.exp(1j * component.momentum.p * y)
        up += coeff[0] * phases
        down += coeff[1] * phases
    up, down, _ = _normalized(grid, up, down)
    return PositionWavefunction(grid, up, down, {"momentum_magnitude": magnitude})


def _half_angle_sine_array(gamma_p: np.ndarray, gamma_beta: float) -> np.ndarray:
    s = np.sqrt(
        (gamma_p - 1.0) * (gamma_beta - 1.0) / (2.0 * (1.0 + gamma_p * gamma_beta))
    )
    s[gamma_p - 1.0 < _DEGENERATE_GAMMA] = 0.0
    if gamma_beta - 1.0 < _DEGENERATE_GAMMA:
        s[:] = 0.0
    return s


def _fourier_synthesis(
    y: np.ndarray, p: np.ndarray, g_up: np.ndarray, g_down: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    # Fixed-size chunks keep the phase matrix small and the summation order
    # deterministic regardless of thread count.
    up = np.zeros(y.size, dtype=complex)
    down = np.zeros(y.size, dtype=complex)
    for start in range(0, p.size, _SYNTH_CHUNK):
        block = slice(start, start + _SYNTH_CHUNK)
        phases = np.exp(1j * np.outer(y, p[block]))
        up += phases @ g_up[block]
        down += phases @ g_down[block]
    return up, down


def synthesize_gaussian(
    spec: GaussianPacketSpec,
    boost: BoostParameter | None = None,
    grid: YGrid | None = None,
    p_grid: MomentumGrid | None = None,
) -> PositionWavefunction:
    """Quadrature synthesis of a Gaussian packet, optionally in a boosted frame.

    Each momentum sample's spinor is rotated by the rotation belonging to
    that momentum (the state is genuinely free, so the per-momentum map is
    the valid one), weighted by the chosen K factor and the Gaussian
    amplitude, and Fourier-summed onto the position grid.

    Parameters
    ----------
    spec : GaussianPacketSpec
        Momentum width, spin and K-factor choice.
    boost : BoostParameter or None
        Frame change perpendicular to the momentum; None means no rotation.
    grid, p_grid : optional
        Position and momentum grids; default to 4096-point windows covering
        8 widths of the packet on both sides.

    Returns
    -------
    PositionWavefunction
        Normalized samples; ``meta`` records the raw position norm, the
        momentum norm (including the 2*pi Fourier factor), their ratio, the
        edge amplitude ratio and a truncation flag.
    """
    if grid is None:
        grid = YGrid(-8.0 * spec.width, 8.0 * spec.width, 4096)
    if p_grid is None:
        p_grid = MomentumGrid.for_packet(spec.width)

    p = p_grid.points
    amplitude = np.exp(-0.5 * (p * spec.width) ** 2)
    edge_ratio = float(max(amplitude[0], amplitude[-1]) / amplitude.max())
    truncated = edge_ratio > EDGE_AMPLITUDE_LIMIT
    if truncated:
        warnings.warn(
            f"momentum range leaves edge amplitude ratio {edge_ratio:.3e}; "
            "widen the quadrature window",
            stacklevel=2,
        )

    if spec.k_factor is KFactor.SQRT_M_OVER_P0:
        k = (1.0 + p**2) ** -0.25
    else:
        k = np.ones_like(p)

    chi_up, chi_down = spec.spin.normalized().vector
    if boost is None or boost.beta == 0.0:
        cos_half = np.ones_like(p)
        sin_half = np.zeros_like(p)
    else:
        gamma_p = np.sqrt(1.0 + p**2)
        half_sine = _half_angle_sine_array(gamma_p, boost.gamma)
        sin_half = np.sign(p) * half_sine
        cos_half = np.sqrt(1.0 - half_sine**2)

    weights = p_grid.trapezoid_weights()
    envelope = weights * k * amplitude
    g_up = envelope * (cos_half * chi_up + 1j * sin_half * chi_down)
    g_down = envelope * (cos_half * chi_down + 1j * sin_half * chi_up)

    up, down = _fourier_synthesis(grid.points, p, g_up, g_down)
    up, down, raw_norm = _normalized(grid, up, down)

    momentum_norm = 2.0 * math.pi * float(
        np.sum(weights * (k * amplitude) ** 2)
    )
    meta = {
        "position_norm_raw": raw_norm,
        "momentum_norm": momentum_norm,
        "parseval_ratio": raw_norm / momentum_norm,
        "edge_amplitude_ratio": edge_ratio,
        "range_truncated": truncated,
    }
    return PositionWavefunction(grid, up, down, meta)

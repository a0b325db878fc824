"""Two-component spinor algebra and the boost-induced spin rotation.

Operators are plain 2x2 complex numpy arrays. Rotation operators are exact
SU(2) elements (unit determinant), so relative phases between spinors are
meaningful; only a global phase on a whole state is unobservable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Spinor",
    "SPIN_PLUS_Z",
    "SPIN_MINUS_Z",
    "SPIN_PLUS_X",
    "SPIN_MINUS_X",
    "pauli",
    "wigner_rotation",
    "apply",
    "eigenspinor",
]


@dataclass(frozen=True)
class Spinor:
    """Amplitudes on the spin-up/spin-down (z) basis."""

    a_up: complex
    a_down: complex

    def __post_init__(self) -> None:
        for a in (self.a_up, self.a_down):
            if not (math.isfinite(complex(a).real) and math.isfinite(complex(a).imag)):
                raise ValueError(f"spinor amplitudes must be finite, got {a!r}")

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.a_up, self.a_down], dtype=complex)

    def norm(self) -> float:
        return math.sqrt(abs(self.a_up) ** 2 + abs(self.a_down) ** 2)

    def normalized(self) -> "Spinor":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero spinor")
        return Spinor(self.a_up / n, self.a_down / n)

    def overlap(self, other: "Spinor") -> complex:
        """Inner product <self|other>."""
        return (
            np.conj(self.a_up) * other.a_up + np.conj(self.a_down) * other.a_down
        )


_INV_SQRT2 = 1.0 / math.sqrt(2.0)

SPIN_PLUS_Z = Spinor(1.0, 0.0)
SPIN_MINUS_Z = Spinor(0.0, 1.0)
SPIN_PLUS_X = Spinor(_INV_SQRT2, _INV_SQRT2)
SPIN_MINUS_X = Spinor(_INV_SQRT2, -_INV_SQRT2)

_PAULI = {
    "0": np.eye(2, dtype=complex),
    "x": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}


def pauli(axis: str | int) -> np.ndarray:
    """Standard Pauli matrix for axis '0' (identity), 'x', 'y' or 'z'."""
    key = str(axis)
    if key not in _PAULI:
        raise ValueError(f"axis must be one of 0, x, y, z, got {axis!r}")
    return _PAULI[key].copy()


def wigner_rotation(angle: float) -> np.ndarray:
    """SU(2) rotation cos(angle/2)*I + i*sin(angle/2)*sigma_x.

    The sign of ``angle`` carries the momentum direction: opposite momenta
    rotate by opposite angles about the common x axis, so
    wigner_rotation(-a) is the adjoint of wigner_rotation(a).
    """
    if not math.isfinite(angle):
        raise ValueError(f"angle must be finite, got {angle!r}")
    half = 0.5 * angle
    c = math.cos(half)
    s = math.sin(half)
    return np.array([[c, 1.0j * s], [1.0j * s, c]], dtype=complex)


def apply(op: np.ndarray, s: Spinor) -> Spinor:
    """Matrix action of a 2x2 operator on a spinor."""
    vec = np.asarray(op, dtype=complex) @ s.vector
    return Spinor(vec[0], vec[1])


def eigenspinor(basis: str, outcome: int) -> Spinor:
    """Eigenspinor of sigma_z or sigma_x with eigenvalue +1 or -1."""
    key = (basis, outcome)
    table = {
        ("z", +1): SPIN_PLUS_Z,
        ("z", -1): SPIN_MINUS_Z,
        ("x", +1): SPIN_PLUS_X,
        ("x", -1): SPIN_MINUS_X,
    }
    if key not in table:
        raise ValueError(f"basis must be 'z' or 'x' and outcome +1 or -1, got {key!r}")
    return table[key]

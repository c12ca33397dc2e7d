"""Exact 2x2 complex spin algebra: Pauli matrices, axis rotations, Pauli decomposition.

A spin matrix is a plain (2, 2) complex ndarray.  All functions return fresh
arrays and never mutate their arguments, so values can be shared freely
across threads.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
IDENTITY = np.eye(2, dtype=complex)

_PAULI = {"x": SIGMA_X, "y": SIGMA_Y, "z": SIGMA_Z, "id": IDENTITY}


class SpinComponents(NamedTuple):
    """Pauli components of a spin matrix, M = s1*id + i*(sx*sigma_x + sy*sigma_y + sz*sigma_z)."""

    s1: complex
    sx: complex
    sy: complex
    sz: complex


def pauli(axis: str) -> np.ndarray:
    """Return sigma_x, sigma_y, sigma_z or the unit matrix for axis in {x, y, z, id}."""
    try:
        return _PAULI[axis].copy()
    except KeyError:
        raise ValueError(f"unknown axis {axis!r}, expected one of {sorted(_PAULI)}") from None


def adjoint(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m).conj().T.copy()


def exp_sigma_z(x: float) -> np.ndarray:
    """exp(i*sigma_z*x) = diag(e^{ix}, e^{-ix})."""
    ph = np.exp(1j * x)
    return np.array([[ph, 0.0], [0.0, np.conj(ph)]], dtype=complex)


def exp_sigma_y(x: float) -> np.ndarray:
    """exp(i*sigma_y*x) = [[cos x, sin x], [-sin x, cos x]]."""
    c, s = np.cos(x), np.sin(x)
    return np.array([[c, s], [-s, c]], dtype=complex)


def decompose(m: np.ndarray) -> SpinComponents:
    """Split M into Pauli components: s1 = tr(M)/2, s_a = tr(sigma_a M)/(2i)."""
    m = np.asarray(m, dtype=complex)
    return SpinComponents(
        s1=np.trace(m) / 2.0,
        sx=np.trace(SIGMA_X @ m) / 2.0j,
        sy=np.trace(SIGMA_Y @ m) / 2.0j,
        sz=np.trace(SIGMA_Z @ m) / 2.0j,
    )


def compose(c: SpinComponents) -> np.ndarray:
    """Inverse of decompose."""
    return c.s1 * IDENTITY + 1j * (c.sx * SIGMA_X + c.sy * SIGMA_Y + c.sz * SIGMA_Z)

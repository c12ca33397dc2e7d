"""Spin-resolved conductance and polarization from S-matrix blocks.

Also carries the independent closed-form expressions for T21 and P21z of the
reflection-symmetric three-terminal device (equal couplings beta = 1), which
stay finite on resonance and serve as the oracle for the generic pipeline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .device_scattering import BlockMatrix, DeviceConfig
from .ring_model import TWO_PI, RingParams, momenta
from .spin_algebra import SpinComponents, decompose, exp_sigma_y, exp_sigma_z

AXES = ("x", "y", "z")

# P_ij,a = 4 Im(s1 conj(s_a) + s_{a-1} conj(s_{a+1})) with (x, y, z) cyclic.
_CYCLIC = {"x": ("z", "y"), "y": ("x", "z"), "z": ("y", "x")}


def conductance(s: BlockMatrix, i: int, j: int) -> float:
    """Conductance from lead j to lead i (0-based), T_ij in [0, 2]."""
    c = decompose(s.block(i, j))
    return 2.0 * (abs(c.s1) ** 2 + abs(c.sx) ** 2 + abs(c.sy) ** 2 + abs(c.sz) ** 2)


def polarization(s: BlockMatrix, i: int, j: int, axis: str) -> float:
    """Net spin along axis in {x, y, z} of the flux from lead j to lead i (0-based)."""
    if axis not in _CYCLIC:
        raise ValueError(f"axis must be one of {AXES}, got {axis!r}")
    c = decompose(s.block(i, j))
    s_axis = getattr(c, "s" + axis)
    prev_axis, next_axis = _CYCLIC[axis]
    s_prev = getattr(c, "s" + prev_axis)
    s_next = getattr(c, "s" + next_axis)
    return 4.0 * float(np.imag(c.s1 * np.conj(s_axis) + s_prev * np.conj(s_next)))


@dataclass(frozen=True, eq=False)
class Observables:
    """All conductances t[i, j] and polarizations p[i, j, axis] of one S-matrix."""

    t: np.ndarray  # (n, n)
    p: np.ndarray  # (n, n, 3), last axis ordered (x, y, z)


def all_observables(s: BlockMatrix) -> Observables:
    n = s.n
    t = np.empty((n, n))
    p = np.empty((n, n, 3))
    for i in range(n):
        for j in range(n):
            t[i, j] = conductance(s, i, j)
            for a, axis in enumerate(AXES):
                p[i, j, a] = polarization(s, i, j, axis)
    return Observables(t, p)


@dataclass(frozen=True)
class SymmetricDevice:
    """Three leads at angles (0, xi, 2pi - xi) with one common coupling strength."""

    xi: float
    alpha: float
    beta: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.xi < math.pi:
            raise ValueError(f"xi must lie in (0, pi), got {self.xi}")
        if not (self.beta > 0.0 and math.isfinite(self.beta)):
            raise ValueError(f"beta must be finite and > 0, got {self.beta}")

    @property
    def ring(self) -> RingParams:
        return RingParams(self.alpha)

    def config(self) -> DeviceConfig:
        return DeviceConfig(
            ring=self.ring,
            leads=((0.0, self.beta), (self.xi, self.beta), (TWO_PI - self.xi, self.beta)),
        )


def closed_form_T21_P21z(lam: float, xi: float, alpha: float) -> tuple[float, float]:
    """Closed-form T21 and P21z for the symmetric device at beta = 1.

    Evaluates four real trigonometric polynomials in the ring momenta, kept
    in expanded term form with no algebraic rearrangement.  The resonant
    denominators are already cancelled, so the expressions are regular for
    every lam > 0, including exactly on resonance.
    """
    if not lam > 0.0:
        raise ValueError(f"lam must be > 0, got {lam}")
    if not 0.0 < xi < math.pi:
        raise ValueError(f"xi must lie in (0, pi), got {xi}")
    k = math.sqrt(lam)
    kp, km = momenta(k, RingParams(alpha))
    ks = kp + km
    kap = -k / (2.0 * (kp + km))
    pi = math.pi
    cos, sin = math.cos, math.sin

    x = (
        -(4.0 * kap**3 + 3.0 * kap) * sin(ks * pi)
        + 4.0 * kap**3 * sin(ks * (2.0 * xi - pi))
        - 8.0 * kap**3 * sin(ks * (xi - pi))
    )
    y = (
        -(6.0 * kap**2 + 0.5) * cos(ks * pi)
        - 0.5 * cos((kp - km) * pi)
        + 2.0 * kap**2 * cos(ks * (2.0 * xi - pi))
        + 4.0 * kap**2 * cos(ks * (xi - pi))
    )
    r = (
        kap**2
        + 4.0 * kap**4
        + 0.5
        * kap**2
        * (
            cos(2.0 * kp * pi)
            + cos(2.0 * km * pi)
            - cos(ks * xi)
            - cos(ks * (xi - 2.0 * pi))
            - cos(kp * (xi - 2.0 * pi) + km * xi)
            - cos(kp * xi + km * (xi - 2.0 * pi))
        )
        + 2.0 * kap**4 * (cos(ks * (xi - 2.0 * pi)) + cos(ks * (3.0 * xi - 2.0 * pi)))
        + 4.0 * kap**4 * (cos(ks * xi) + cos(ks * 2.0 * (xi - pi)))
    )
    q = (
        kap**3
        * (
            cos(2.0 * km * pi)
            - cos(2.0 * kp * pi)
            + cos(2.0 * kp * xi + 2.0 * km * (xi - pi))
            - cos(2.0 * kp * (xi - pi) + 2.0 * km * xi)
        )
        + 2.0 * kap**3 * (cos(kp * (xi - 2.0 * pi) + km * xi) - cos(kp * xi + km * (xi - 2.0 * pi)))
    )

    denom = x * x + y * y
    cos_phi = math.cos(math.atan(alpha))
    return 8.0 * r / denom, 8.0 * cos_phi * q / denom


@dataclass(frozen=True)
class StructureReport:
    """Pauli content of s21 rotated into the frame where it must be diagonal in spin."""

    s1: complex
    sz: complex
    residual_sx: float
    residual_sy: float


def appendix_structure_check(s: BlockMatrix, dev: SymmetricDevice) -> StructureReport:
    """Undo the angular and spin-orbit rotations on the s21 block.

    For the symmetric device the rotated block is s1*id + i*sz*sigma_z, so
    the x and y residuals must vanish; they are reported for auditing.
    """
    half_phi = dev.ring.phi / 2.0
    rotated = exp_sigma_y(half_phi) @ exp_sigma_z(dev.xi / 2.0) @ s.block(1, 0) @ exp_sigma_y(-half_phi)
    c: SpinComponents = decompose(rotated)
    return StructureReport(s1=c.s1, sz=c.sz, residual_sx=abs(c.sx), residual_sy=abs(c.sy))

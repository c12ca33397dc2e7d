"""Scattering of n semi-infinite leads coupled to the ring.

Builds the n x n block Green's matrix, applies the per-lead coupling
strengths and solves the dense 2n x 2n complex system for the scattering
matrix

    S = (ik beta G beta + I)(ik beta G beta - I)^{-1},

where beta is diagonal with each coupling repeated across both spin indices.
Blocks are ordered wire-major, spin-minor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ring_model import TWO_PI, RingParams, green_fn

# Relative pivot threshold below which elimination treats the system as singular.
PIVOT_RTOL = 1e-13


class SingularSystem(Exception):
    """The linear system for the scattering matrix is numerically singular."""


@dataclass(frozen=True)
class DeviceConfig:
    """Ring plus an ordered list of leads, each (attachment angle, coupling strength)."""

    ring: RingParams
    leads: tuple[tuple[float, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "leads", tuple((float(t), float(b)) for t, b in self.leads))
        if len(self.leads) < 1:
            raise ValueError("at least one lead is required")
        for theta, beta in self.leads:
            if not 0.0 <= theta < TWO_PI:
                raise ValueError(f"attachment angle must lie in [0, 2pi), got {theta}")
            if not (beta > 0.0 and math.isfinite(beta)):
                raise ValueError(f"coupling strength must be finite and > 0, got {beta}")
        thetas = [t for t, _ in self.leads]
        if len(set(thetas)) != len(thetas):
            raise ValueError(f"attachment angles must be pairwise distinct, got {thetas}")

    @property
    def n(self) -> int:
        return len(self.leads)

    @property
    def thetas(self) -> np.ndarray:
        return np.array([t for t, _ in self.leads])

    @property
    def betas(self) -> np.ndarray:
        return np.array([b for _, b in self.leads])


@dataclass(frozen=True, eq=False)
class BlockMatrix:
    """A 2n x 2n complex matrix addressed by wire-pair blocks of spin matrices."""

    n: int
    mat: np.ndarray

    def __post_init__(self):
        if self.mat.shape != (2 * self.n, 2 * self.n):
            raise ValueError(f"expected shape {(2 * self.n, 2 * self.n)}, got {self.mat.shape}")

    def block(self, j: int, k: int) -> np.ndarray:
        """The 2x2 spin block for wire pair (j, k), 0-based."""
        return self.mat[2 * j : 2 * j + 2, 2 * k : 2 * k + 2]


def green_block_matrix(cfg: DeviceConfig, lam: float) -> BlockMatrix:
    """Block matrix with block (j, k) = G(theta_j, theta_k; lam); hermitian off resonance."""
    if not lam > 0.0:
        raise ValueError(f"lam must be > 0, got {lam}")
    k = math.sqrt(lam)
    n = cfg.n
    mat = np.empty((2 * n, 2 * n), dtype=complex)
    for j, (theta_j, _) in enumerate(cfg.leads):
        for l, (theta_l, _) in enumerate(cfg.leads):
            mat[2 * j : 2 * j + 2, 2 * l : 2 * l + 2] = green_fn(theta_j, theta_l, k, cfg.ring)
    return BlockMatrix(n, mat)


def solve_linear(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve AX = B by Gaussian elimination with partial pivoting.

    The matrices are tiny (2n x 2n with n <= 8), so plain elimination keeps
    the result bit-stable and lets us police the pivots directly.
    """
    a = np.array(a, dtype=complex)
    b = np.array(b, dtype=complex)
    n = a.shape[0]
    if a.shape != (n, n) or b.shape[0] != n:
        raise ValueError(f"incompatible shapes {a.shape} and {b.shape}")
    scale = np.max(np.abs(a))
    if scale == 0.0:
        raise SingularSystem("coefficient matrix is zero")
    for col in range(n):
        piv = col + int(np.argmax(np.abs(a[col:, col])))
        if abs(a[piv, col]) < PIVOT_RTOL * scale:
            raise SingularSystem(f"pivot {abs(a[piv, col]):.3e} below {PIVOT_RTOL:.0e} * scale")
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            b[[col, piv]] = b[[piv, col]]
        factors = a[col + 1 :, col] / a[col, col]
        a[col + 1 :, col:] -= factors[:, None] * a[col, col:]
        b[col + 1 :] -= factors[:, None] * b[col]
    x = np.zeros_like(b)
    for row in range(n - 1, -1, -1):
        x[row] = (b[row] - a[row, row + 1 :] @ x[row + 1 :]) / a[row, row]
    return x


def scattering_matrix(cfg: DeviceConfig, lam: float) -> BlockMatrix:
    """Full 2n x 2n scattering matrix at energy lam; unitary off resonance."""
    gb = green_block_matrix(cfg, lam)
    k = math.sqrt(lam)
    beta = np.repeat(cfg.betas, 2)
    m = 1j * k * (beta[:, None] * gb.mat * beta[None, :])
    eye = np.eye(2 * cfg.n, dtype=complex)
    # (M + I)(M - I)^{-1} = (M - I)^{-1}(M + I): both factors commute with M.
    return BlockMatrix(cfg.n, solve_linear(m - eye, m + eye))

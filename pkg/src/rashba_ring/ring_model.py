"""Single-ring quantities for the Rashba ring (radius normalized to 1).

Covers the spin-split momenta kappa_+/-, the spin-orbit angle, the resonance
spectrum lambda_{+/-,n}, the degenerate coupling strengths, and the
matrix-valued Green's function of the ring hamiltonian

    H0 = D0^2 - (alpha/2)^2,   D0 = -i d/dtheta + (alpha/2) sigma_r.

Energies are lambda = k^2 > 0 with k = +sqrt(lambda).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spin_algebra import SIGMA_Z, exp_sigma_y, exp_sigma_z

TWO_PI = 2.0 * math.pi

# |cos(kappa_{+/-} pi)| below this means the sample energy sits on a ring
# resonance and the generic pipeline must not divide by it.
RESONANCE_GUARD = 1e-9


class ResonanceProximity(Exception):
    """Sample energy too close to a ring resonance; offset the energy and retry."""


@dataclass(frozen=True)
class RingParams:
    """Ring parameters: alpha is the Rashba coupling strength (dimensionless)."""

    alpha: float

    def __post_init__(self):
        if not (self.alpha >= 0.0 and math.isfinite(self.alpha)):
            raise ValueError(f"alpha must be finite and >= 0, got {self.alpha}")

    @property
    def phi(self) -> float:
        """Spin-orbit mixing angle, tan(phi) = alpha, phi in [0, pi/2)."""
        return math.atan(self.alpha)


@dataclass(frozen=True)
class Resonance:
    """One ring eigenvalue lambda_{branch,n}; a zero of cos(kappa_branch * pi)."""

    branch: str  # "plus" | "minus"
    n: int
    lam: float


def momenta(k: float, params: RingParams) -> tuple[float, float]:
    """Spin-split ring momenta kappa_+/- = sqrt(k^2 + alpha^2/4) +/- sqrt(1/4 + alpha^2/4)."""
    if not k > 0.0:
        raise ValueError(f"k must be > 0, got {k}")
    a2 = params.alpha * params.alpha
    base = math.sqrt(k * k + a2 / 4.0)
    split = math.sqrt(0.25 + a2 / 4.0)
    return base + split, base - split


def eigenvalue(branch: str, n: int, params: RingParams) -> float:
    """Ring eigenvalue lambda_{+/-,n} = n^2 - (1/2 +/- n)(sqrt(1+alpha^2) - 1).

    Index convention: n >= 1 on the plus branch, n >= 0 on the minus branch.
    """
    rho = math.sqrt(1.0 + params.alpha * params.alpha) - 1.0
    if branch == "plus":
        if n < 1:
            raise ValueError(f"plus branch requires n >= 1, got n={n}")
        return n * n - (0.5 + n) * rho
    if branch == "minus":
        if n < 0:
            raise ValueError(f"minus branch requires n >= 0, got n={n}")
        return n * n - (0.5 - n) * rho
    raise ValueError(f"branch must be 'plus' or 'minus', got {branch!r}")


def resonances_in_range(params: RingParams, lambda_min: float, lambda_max: float) -> list[Resonance]:
    """All resonances with lambda in [lambda_min, lambda_max], sorted by energy."""
    if not lambda_min < lambda_max:
        raise ValueError(f"need lambda_min < lambda_max, got {lambda_min} >= {lambda_max}")
    # lambda_{+/-,n} = (n -/+ (s - 1/2))^2 - alpha^2/4 with s = sqrt(1+alpha^2)/2,
    # so the largest index with lambda <= lambda_max is known in closed form.
    a2 = params.alpha * params.alpha
    disc = lambda_max + a2 / 4.0
    found: list[Resonance] = []
    if disc >= 0.0:
        root = math.sqrt(disc)
        shift = (math.sqrt(1.0 + a2) - 1.0) / 2.0
        for branch, n_lo, n_hi in (
            ("plus", 1, math.floor(root + shift)),
            ("minus", 0, math.floor(root - shift)),
        ):
            for n in range(n_lo, n_hi + 2):  # +2: guard against floor rounding
                lam = eigenvalue(branch, n, params)
                if lambda_min <= lam <= lambda_max:
                    found.append(Resonance(branch, n, lam))
    found.sort(key=lambda r: (r.lam, r.branch))
    return found


def degenerate_alpha(m: int) -> float:
    """Coupling strength with sqrt(1+alpha^2) - 1 = m, i.e. alpha = sqrt(m(m+2))."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    return math.sqrt(m * (m + 2.0))


def off_resonance_margin(lam: float, params: RingParams) -> float:
    """min(|cos(kappa_+ pi)|, |cos(kappa_- pi)|) at energy lam; 0 exactly on resonance."""
    if not lam > 0.0:
        raise ValueError(f"lam must be > 0, got {lam}")
    kp, km = momenta(math.sqrt(lam), params)
    return min(abs(math.cos(math.pi * kp)), abs(math.cos(math.pi * km)))


def green_fn(theta: float, eta: float, k: float, params: RingParams) -> np.ndarray:
    """Matrix-valued ring Green's function G(theta, eta; k^2).

    Continuous in theta, with unit jump of the theta-derivative at the source
    and G(theta, eta) = G(eta, theta)^dagger.  The angle difference is reduced
    to d = theta - eta in [0, 2pi), and the leading angular phase is evaluated
    at eta + d rather than the raw theta: with the raw angle the kernel would
    flip sign whenever theta < eta (the half-angle phase is antiperiodic) and
    hermiticity would be lost.

    Raises ResonanceProximity when k^2 sits within the resonance guard.
    """
    kp, km = momenta(k, params)
    cp = math.cos(math.pi * kp)
    cm = math.cos(math.pi * km)
    if min(abs(cp), abs(cm)) < RESONANCE_GUARD:
        raise ResonanceProximity(
            f"lam={k * k!r} is within {RESONANCE_GUARD} of a ring resonance"
        )
    d = (theta - eta) % TWO_PI
    half_phi = params.phi / 2.0
    mid = (exp_sigma_z(kp * (d - math.pi)) / cp - exp_sigma_z(-km * (d - math.pi)) / cm) / (
        2.0j * (kp + km)
    )
    left = exp_sigma_z(-(eta + d) / 2.0) @ exp_sigma_y(-half_phi)
    right = exp_sigma_y(-half_phi) @ exp_sigma_z(eta / 2.0) @ SIGMA_Z
    return left @ mid @ right

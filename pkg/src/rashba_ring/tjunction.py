"""Idealised T-junction of three wires with projection-type boundary conditions.

The junction scatters independently of energy and of spin, so its scattering
matrix is a real 3x3 involution; callers tensor with the 2x2 identity when a
spinful matrix is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class TJunction:
    """Coupling strength between the wire (edge 1) and the two ring arms (edges 2, 3)."""

    beta: float

    def __post_init__(self):
        if not (self.beta > 0.0 and math.isfinite(self.beta)):
            raise ValueError(f"beta must be finite and > 0, got {self.beta}")


def projection(t: TJunction) -> np.ndarray:
    """The rank-1 projection P encoding the boundary conditions; P^2 = P, P^T = P."""
    b = t.beta
    return np.array([[b * b, b, b], [b, 1.0, 1.0], [b, 1.0, 1.0]]) / (b * b + 2.0)


def tjunction_S(t: TJunction) -> np.ndarray:
    """Energy-independent scattering matrix S = 2P - I; symmetric and involutive."""
    return 2.0 * projection(t) - np.eye(3)

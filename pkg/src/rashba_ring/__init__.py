"""Spin-resolved scattering for a 1D Rashba ring with attached semi-infinite leads."""

from .device_scattering import (
    BlockMatrix,
    DeviceConfig,
    SingularSystem,
    green_block_matrix,
    scattering_matrix,
    solve_linear,
)
from .observables import (
    Observables,
    StructureReport,
    SymmetricDevice,
    all_observables,
    appendix_structure_check,
    closed_form_T21_P21z,
    conductance,
    polarization,
)
from .ring_model import (
    RESONANCE_GUARD,
    Resonance,
    ResonanceProximity,
    RingParams,
    degenerate_alpha,
    eigenvalue,
    green_fn,
    momenta,
    off_resonance_margin,
    resonances_in_range,
)
from .spin_algebra import (
    IDENTITY,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    SpinComponents,
    adjoint,
    compose,
    decompose,
    exp_sigma_y,
    exp_sigma_z,
    pauli,
)
from .tjunction import TJunction, projection, tjunction_S

__version__ = "0.1.0"

"""Verification and spectra for the non-Abelian Dirac oscillator.

The hot eigensolver kernels run from a compiled extension when it is built;
``nadosc.kernels.BACKEND`` says which implementation was picked at import.
"""

from .clifford import build_dirac_set, verify_clifford, verify_gamma_set
from .errors import (
    ConfigError,
    ConvergenceError,
    HermiticityError,
    InternalConsistencyError,
    InvalidInputError,
    NadoscError,
    SizeError,
    UnsupportedDimensionError,
)
from .gauge_algebra import build_charges, verify_lie
from .hamiltonian import OscParams, assemble, build_hamiltonian, fock_ops, nonminimal_momentum, spectrum
from .kernels import BACKEND
from .linalg import herm_eigen
from .nonabelian_fields import GaugeParams, fields_report
from .report import CheckReport
from .symmetry import build_angular, commutator_report

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CheckReport",
    "ConfigError",
    "ConvergenceError",
    "GaugeParams",
    "HermiticityError",
    "InternalConsistencyError",
    "InvalidInputError",
    "NadoscError",
    "OscParams",
    "SizeError",
    "UnsupportedDimensionError",
    "assemble",
    "build_angular",
    "build_charges",
    "build_dirac_set",
    "build_hamiltonian",
    "commutator_report",
    "fields_report",
    "fock_ops",
    "herm_eigen",
    "nonminimal_momentum",
    "spectrum",
    "verify_clifford",
    "verify_gamma_set",
    "verify_lie",
]

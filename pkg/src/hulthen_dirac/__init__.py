"""Dirac-Hulthen bound states under exact spin and pseudospin symmetry.

Closed-form spectra and spinor components from a hypergeometric-type
reduction, with an independent shooting solver to check them.
"""

from .errors import HulthenError, NoBoundStateError
from .model import (EnergyPair, bound_energy, duality_map, energy_closed_form,
                    energy_pair, nonrel_energy, select_bound_root)
from .oracle import (Centrifugal, ShootConfig, ShootResult, approximation_error,
                     shoot_pseudospin, shoot_schrodinger, shoot_spin)
from .params import PhysicalParams, reference_params
from .quantum_numbers import (QuantumState, SpectroscopicLabel, SymmetryKind,
                              doublet_partner, orbital_momenta, parse_label)
from .wavefun import RadialFunction, nonrel_radial, spinor

__version__ = "0.1.0"

__all__ = [
    "Centrifugal", "EnergyPair", "HulthenError", "NoBoundStateError", "PhysicalParams",
    "QuantumState", "RadialFunction", "ShootConfig", "ShootResult", "SpectroscopicLabel",
    "SymmetryKind", "approximation_error", "bound_energy", "doublet_partner", "duality_map",
    "energy_closed_form", "energy_pair", "nonrel_energy", "nonrel_radial", "orbital_momenta",
    "parse_label", "reference_params", "select_bound_root", "shoot_pseudospin",
    "shoot_schrodinger", "shoot_spin", "spinor",
]

"""Physical constants of the Dirac-Hulthen model (natural units, fm^-1)."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import InvalidParameterError
from .quantum_numbers import SymmetryKind


@dataclass(frozen=True)
class PhysicalParams:
    """Mass ``mu``, screening ``delta``, Hulthen strength and constant ``C``.

    ``strength`` is the coupling of the varying potential combination: the
    lower-component strength under pseudospin symmetry and the
    upper-component strength under spin symmetry.  ``c_const`` is the value
    of the combination held constant by the symmetry.
    """

    mu: float
    delta: float
    strength: float
    c_const: float
    symmetry: SymmetryKind = SymmetryKind.PSEUDOSPIN

    def __post_init__(self):
        object.__setattr__(self, "symmetry", SymmetryKind.parse(self.symmetry))
        for name in ("mu", "delta", "strength", "c_const"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise InvalidParameterError(f"{name} must be finite")
            object.__setattr__(self, name, value)
        if self.delta <= 0:
            raise InvalidParameterError("delta must be positive")
        if self.mu <= 0:
            raise InvalidParameterError("mu must be positive")

    def with_(self, **changes) -> PhysicalParams:
        return replace(self, **changes)


# constants of the reference pseudospin spectrum
REFERENCE_MU = 5.0
REFERENCE_STRENGTH = 3.4
REFERENCE_C = -4.9
REFERENCE_DELTAS = (0.025, 0.1, 0.175, 0.25)


def reference_params(delta: float) -> PhysicalParams:
    return PhysicalParams(REFERENCE_MU, delta, REFERENCE_STRENGTH, REFERENCE_C,
                          SymmetryKind.PSEUDOSPIN)

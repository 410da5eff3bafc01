"""Closed-form Dirac-Hulthen spectrum under exact spin or pseudospin symmetry.

Radial equation of the dominant component (G for pseudospin, F for spin)
with the Hulthen-square centrifugal term, written in s = exp(-delta r):

    pseudospin:  nu^2 = (mu - E + C) D / delta^2
                 omega^2 = (E^2 - mu^2 - C mu - C E) / delta^2
                 A = omega^2 + nu^2 - lt(lt+1),  B = 2 omega^2 + nu^2
    spin:        nu^2 = (mu + E - C) S / delta^2
                 omega^2 = (E^2 - mu^2 + C mu - C E) / delta^2
                 A = omega^2 - nu^2 - l(l+1),    B = 2 omega^2 - nu^2

and sigma = s(1-s), tau_tilde = 1-s, sigma_tilde = A s^2 - B s + omega^2.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from .errors import (DegenerateQuadraticError, InvalidParameterError,
                     NoBoundStateError, NoRealRootsError)
from .nu import NuProblem
from .params import PhysicalParams
from .quantum_numbers import QuantumState, SymmetryKind, radial_degree

log = logging.getLogger(__name__)

# root of the energy quadratic that carries the bound spectrum, fixed by
# matching all 32 reference entries (see tests/test_model.py)
BOUND_BRANCH = {SymmetryKind.PSEUDOSPIN: "minus", SymmetryKind.SPIN: "plus"}

# |mu -+ E +- C| below this (relative to mu) makes the spinor coupling singular
SINGULAR_TOL = 1e-12


@dataclass(frozen=True)
class NuCoefficients:
    nu_sq: float
    omega_sq: float
    a_coef: float
    b_coef: float


@dataclass(frozen=True)
class AuxCombos:
    """Degree-dependent combinations of the energy quadratic.

    ``u``, ``y``, ``t`` are (1+2n)(l+1)+n^2, 2(n+l+1) and u plus the
    strength term; under spin symmetry they play the role of W, Z, S.
    """

    u: float
    y: float
    t: float


@dataclass(frozen=True)
class EnergyPair:
    """Both roots of the energy quadratic for one (n, l) pair.

    ``theta_sq_*`` is the decay radicand at each root.  ``theta_*`` is the
    signed decay exponent implied by the quantization condition; it squares
    to the radicand and is positive only for normalizable solutions.
    """

    symmetry: SymmetryKind
    n: int
    ell: int
    e_plus: float
    e_minus: float
    theta_plus: float
    theta_minus: float
    theta_sq_plus: float
    theta_sq_minus: float
    valid_plus: bool
    valid_minus: bool
    normalizable_plus: bool
    normalizable_minus: bool

    @property
    def ambiguous(self) -> bool:
        return self.valid_plus and self.valid_minus

    def root(self, branch: str) -> float:
        return self.e_plus if branch == "plus" else self.e_minus

    def theta(self, branch: str) -> float:
        return self.theta_plus if branch == "plus" else self.theta_minus

    def valid(self, branch: str) -> bool:
        return self.valid_plus if branch == "plus" else self.valid_minus

    def normalizable(self, branch: str) -> bool:
        return self.normalizable_plus if branch == "plus" else self.normalizable_minus


def dominant_momentum(state: QuantumState, symmetry: SymmetryKind) -> int:
    """l_tilde under pseudospin symmetry, l under spin symmetry."""
    symmetry = SymmetryKind.parse(symmetry)
    return state.ell_tilde if symmetry is SymmetryKind.PSEUDOSPIN else state.ell


def nu_coefficients(params: PhysicalParams, ell: int, energy: float) -> NuCoefficients:
    mu, d, g, c = params.mu, params.delta, params.strength, params.c_const
    e = float(energy)
    if params.symmetry is SymmetryKind.PSEUDOSPIN:
        nu_sq = (mu - e + c) * g / d**2
        omega_sq = (e * e - mu * mu - c * mu - c * e) / d**2
        a = omega_sq + nu_sq - ell * (ell + 1)
        b = 2.0 * omega_sq + nu_sq
    else:
        nu_sq = (mu + e - c) * g / d**2
        omega_sq = (e * e - mu * mu + c * mu - c * e) / d**2
        a = omega_sq - nu_sq - ell * (ell + 1)
        b = 2.0 * omega_sq - nu_sq
    return NuCoefficients(nu_sq, omega_sq, a, b)


def to_nu_problem(params: PhysicalParams, state: QuantumState,
                  energy: float) -> tuple[NuProblem, NuCoefficients]:
    """Hypergeometric-type polynomials of the dominant-component equation."""
    ell = dominant_momentum(state, params.symmetry)
    co = nu_coefficients(params, ell, energy)
    problem = NuProblem(sigma=(0.0, 1.0, -1.0), tau_tilde=(1.0, -1.0),
                        sigma_tilde=(co.omega_sq, -co.b_coef, co.a_coef))
    return problem, co


def aux_combos(params: PhysicalParams, n: int, ell: int) -> AuxCombos:
    mu, d, g, c = params.mu, params.delta, params.strength, params.c_const
    u = (1 + 2 * n) * (ell + 1) + n * n
    y = 2 * (n + ell + 1)
    if params.symmetry is SymmetryKind.PSEUDOSPIN:
        t = u + (c + mu) * g / d**2
    else:
        t = u + (c - mu) * g / d**2
    return AuxCombos(float(u), float(y), t)


def quadratic_coefficients(params: PhysicalParams, n: int, ell: int) -> tuple[float, float, float]:
    """(a, b, c) of a E^2 + b E + c = 0 for degree ``n``."""
    mu, d, g, c = params.mu, params.delta, params.strength, params.c_const
    aux = aux_combos(params, n, ell)
    shift = mu + c if params.symmetry is SymmetryKind.PSEUDOSPIN else mu - c
    a = g * g + aux.y**2 * d**2
    b = -d**2 * (2.0 * aux.t * g + c * aux.y**2)
    cc = d**4 * aux.t**2 - aux.y**2 * d**2 * mu * shift
    return a, b, cc


def theta_squared(params: PhysicalParams, energy: float) -> float:
    """Decay radicand: theta^2 = -delta^2 omega^2."""
    mu, c, e = params.mu, params.c_const, float(energy)
    if params.symmetry is SymmetryKind.PSEUDOSPIN:
        return c * (mu + e) + mu * mu - e * e
    return c * (e - mu) + mu * mu - e * e


def signed_theta(params: PhysicalParams, n: int, ell: int, energy: float) -> float:
    """Decay exponent fixed by the quantization condition at degree ``n``."""
    aux = aux_combos(params, n, ell)
    d = params.delta
    return (float(energy) * params.strength - d * d * aux.t) / (d * aux.y)


def coupling(params: PhysicalParams, energy: float) -> float:
    """Factor linking the two spinor components: mu - E + C or mu + E - C."""
    if params.symmetry is SymmetryKind.PSEUDOSPIN:
        return params.mu - energy + params.c_const
    return params.mu + energy - params.c_const


def _radicand(params: PhysicalParams, aux: AuxCombos) -> float:
    mu, d, g, c = params.mu, params.delta, params.strength, params.c_const
    y2 = aux.y**2
    if params.symmetry is SymmetryKind.PSEUDOSPIN:
        return (4.0 * d**2 * (g * (c + mu) - d**2 * aux.t) * (g * mu + d**2 * aux.t) * y2
                + d**4 * (c + 2.0 * mu) ** 2 * y2 * y2)
    return (4.0 * d**2 * (g * (c - mu) - d**2 * aux.t) * (-g * mu + d**2 * aux.t) * y2
            + d**4 * (c - 2.0 * mu) ** 2 * y2 * y2)


def energy_pair(params: PhysicalParams, n: int, ell: int) -> EnergyPair:
    """Both energy roots for polynomial degree ``n`` and momentum ``ell``."""
    if n < 0 or ell < 0:
        raise InvalidParameterError("degree and momentum must be nonnegative")
    aux = aux_combos(params, n, ell)
    a, b, c = quadratic_coefficients(params, n, ell)
    if abs(a) < 1e-14 * max(abs(b), abs(c), 1e-300):
        raise DegenerateQuadraticError(
            f"leading coefficient vanishes; linear remnant root {-c / b if b else math.nan}")
    rad = _radicand(params, aux)
    if rad < 0.0:
        raise NoRealRootsError(f"energy quadratic has no real roots (radicand {rad:.3e})")
    root = math.sqrt(rad)
    # cancellation-free pair; the larger root is E+
    q = -0.5 * (b + math.copysign(root, b))
    r1, r2 = (q / a, c / q) if q != 0.0 else (0.0, 0.0)
    e_plus, e_minus = max(r1, r2), min(r1, r2)

    def flags(e):
        th2 = theta_squared(params, e)
        th = signed_theta(params, n, ell, e)
        valid = th2 > 0.0 and abs(coupling(params, e)) > SINGULAR_TOL * params.mu
        return th, th2, valid, valid and th > 0.0

    tp, tp2, vp, np_ = flags(e_plus)
    tm, tm2, vm, nm = flags(e_minus)
    return EnergyPair(params.symmetry, n, ell, e_plus, e_minus, tp, tm, tp2, tm2,
                      vp, vm, np_, nm)


def energy_closed_form(params: PhysicalParams, state: QuantumState) -> EnergyPair:
    n = radial_degree(state, params.symmetry)
    return energy_pair(params, n, dominant_momentum(state, params.symmetry))


def select_bound_root(pair: EnergyPair, params: PhysicalParams) -> float:
    """The root on the calibrated bound branch, if it is admissible."""
    branch = BOUND_BRANCH[params.symmetry]
    if not (pair.valid_plus or pair.valid_minus):
        raise NoBoundStateError("neither root has a positive decay radicand")
    if not pair.valid(branch):
        raise NoBoundStateError(
            f"the {branch} root {pair.root(branch):.9g} is not admissible; "
            "the other root lies on the unbound branch")
    if pair.ambiguous:
        log.info("both roots admissible for n=%d l=%d; returning the %s root",
                 pair.n, pair.ell, branch)
    return pair.root(branch)


def bound_energy(params: PhysicalParams, state: QuantumState) -> float:
    return select_bound_root(energy_closed_form(params, state), params)


def duality_map(params: PhysicalParams,
                state: QuantumState) -> tuple[PhysicalParams, QuantumState]:
    """Map a problem to the opposite symmetry with the negated spectrum.

    strength -> -strength, C -> -C, kappa -> -kappa (which swaps l and
    l_tilde) and the dominant polynomial degree is kept.
    """
    n = radial_degree(state, params.symmetry)
    other = (SymmetryKind.SPIN if params.symmetry is SymmetryKind.PSEUDOSPIN
             else SymmetryKind.PSEUDOSPIN)
    mapped = PhysicalParams(params.mu, params.delta, -params.strength, -params.c_const, other)
    kappa = -state.kappa
    if other is SymmetryKind.PSEUDOSPIN and kappa < 0:
        return mapped, QuantumState(n + 1, kappa)
    return mapped, QuantumState(n, kappa)


def nonrel_energy(mu: float, delta: float, n_r: int, ell: int) -> float:
    """Schrodinger-Hulthen energy with the Hulthen-square centrifugal term
    (unit potential strength delta, C = 0)."""
    if mu <= 0 or delta <= 0:
        raise InvalidParameterError("mu and delta must be positive")
    if n_r < 0 or ell < 0:
        raise InvalidParameterError("n_r and l must be nonnegative")
    num = (1 + 2 * n_r) * (ell + 1) * delta + n_r * n_r * delta - 2.0 * mu
    return -(1.0 / (2.0 * mu)) * (num / (2.0 * (n_r + ell + 1))) ** 2


def nonrel_theta(mu: float, delta: float, n_r: int, ell: int) -> float:
    """Signed decay exponent of the non-relativistic solution; positive
    only for normalizable states."""
    w = (1 + 2 * n_r) * (ell + 1) + n_r * n_r
    return (2.0 * mu - w * delta) / (2.0 * (n_r + ell + 1))

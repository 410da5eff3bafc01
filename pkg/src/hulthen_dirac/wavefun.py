"""Sampled radial spinor components of the Dirac-Hulthen bound states and
the non-relativistic radial function.

The dominant component (G under pseudospin, F under spin symmetry) is

    e^{-theta r} (1 - e^{-delta r})^{l+1} 2F1(-n, n + 2(theta/delta + l + 1);
                                              1 + 2 theta/delta; e^{-delta r})

normalized to unit L2 norm on the grid.  The partner component follows
from the first-order relation of the symmetry limit and inherits the
normalization constant.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import simpson

from .errors import (InvalidParameterError, NoBoundStateError,
                     NormalizationError, SymmetrySingularError)
from .model import (SINGULAR_TOL, bound_energy, coupling, nonrel_energy,
                    nonrel_theta, signed_theta, theta_squared)
from .params import PhysicalParams
from .quantum_numbers import QuantumState, SymmetryKind, radial_degree
from .specfun import hyp2f1_derivative, hyp2f1_terminating, jacobi_p

DEFAULT_POINTS = 4000
DEFAULT_R_MIN = 1e-6


class Component(enum.Enum):
    LOWER_G = "G"
    UPPER_F = "F"
    NONREL_R = "R"


@dataclass(frozen=True)
class RadialGrid:
    r: np.ndarray
    r_min: float
    r_max: float
    rule: str

    def __post_init__(self):
        r = np.asarray(self.r, dtype=float)
        if r.ndim != 1 or r.size < 2:
            raise InvalidParameterError("grid needs at least two points")
        if r[0] <= 0 or np.any(np.diff(r) <= 0):
            raise InvalidParameterError("grid must be positive and strictly increasing")
        object.__setattr__(self, "r", r)


def log_grid(r_min: float, r_max: float, n_points: int = DEFAULT_POINTS) -> RadialGrid:
    return RadialGrid(np.geomspace(r_min, r_max, n_points), r_min, r_max, "log")


def uniform_grid(r_min: float, r_max: float, n_points: int) -> RadialGrid:
    return RadialGrid(np.linspace(r_min, r_max, n_points), r_min, r_max, "uniform")


def default_grid(theta: float, delta: float, n_points: int = DEFAULT_POINTS) -> RadialGrid:
    """Log grid from 1e-6 fm to max(30/theta, 30/delta)."""
    return log_grid(DEFAULT_R_MIN, max(30.0 / theta, 30.0 / delta), n_points)


def count_nodes(values: np.ndarray) -> int:
    """Strict sign changes, ignoring exact zeros."""
    sgn = np.sign(values)
    sgn = sgn[sgn != 0]
    return int(np.count_nonzero(sgn[1:] != sgn[:-1]))


@dataclass(frozen=True)
class RadialFunction:
    grid: RadialGrid
    values: np.ndarray
    component: Component
    node_count: int
    norm: float
    energy: float = math.nan
    theta: float = math.nan
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def r(self) -> np.ndarray:
        return self.grid.r


def _l2(component: Component, r: np.ndarray, values: np.ndarray) -> float:
    f = r * values if component is Component.NONREL_R else values
    return float(simpson(f * f, x=r))


def _make(grid, values, component, energy, theta, **meta) -> RadialFunction:
    values = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(values)):
        raise NormalizationError("sampled function is not finite on the grid")
    return RadialFunction(grid, values, component, count_nodes(values),
                          _l2(component, grid.r, values), energy, theta, dict(meta))


def normalize(f: RadialFunction) -> RadialFunction:
    """Rescale to unit L2 norm (of r R for the non-relativistic function)."""
    if not math.isfinite(f.norm) or f.norm <= 0.0:
        raise NormalizationError(f"cannot normalize a function with norm {f.norm}")
    scale = 1.0 / math.sqrt(f.norm)
    values = f.values * scale
    return RadialFunction(f.grid, values, f.component, f.node_count,
                          _l2(f.component, f.grid.r, values), f.energy, f.theta, dict(f.meta))


@dataclass(frozen=True)
class _Profile:
    n: int
    ell: int
    theta: float
    delta: float

    def _parts(self, r):
        d, th, n, ell = self.delta, self.theta, self.n, self.ell
        s = np.exp(-d * r)
        one_minus = -np.expm1(-d * r)
        b = n + 2.0 * (th / d + ell + 1.0)
        c = 1.0 + 2.0 * th / d
        return s, one_minus, b, c

    def value(self, r):
        s, om, b, c = self._parts(r)
        return np.exp(-self.theta * r) * om ** (self.ell + 1) * hyp2f1_terminating(self.n, b, c, s)

    def derivative(self, r):
        s, om, b, c = self._parts(r)
        d = self.delta
        env = np.exp(-self.theta * r) * om ** (self.ell + 1)
        poly = hyp2f1_terminating(self.n, b, c, s)
        dpoly = hyp2f1_derivative(self.n, b, c, s)
        return env * (poly * ((self.ell + 1) * d * s / om - self.theta) - d * s * dpoly)


def _bound_profile(params: PhysicalParams, n: int, ell: int, energy: float) -> _Profile:
    th2 = theta_squared(params, energy)
    if not th2 > 0.0:
        raise NoBoundStateError(f"E={energy:.9g} is not a bound state (theta^2={th2:.3e})")
    theta = math.sqrt(th2)
    if signed_theta(params, n, ell, energy) <= 0.0:
        raise NoBoundStateError(
            f"E={energy:.9g} solves the quantization condition only with a growing "
            "tail; the state is not normalizable")
    return _Profile(n, ell, theta, params.delta)


def _check_symmetry(params: PhysicalParams, kind: SymmetryKind):
    if params.symmetry is not kind:
        raise InvalidParameterError(f"parameters describe {params.symmetry.value}, "
                                    f"not {kind.value} symmetry")


def _spinor(params, state, energy, grid, kind):
    _check_symmetry(params, kind)
    n = radial_degree(state, kind)
    ell = state.ell_tilde if kind is SymmetryKind.PSEUDOSPIN else state.ell
    if energy is None:
        energy = bound_energy(params, state)
    prof = _bound_profile(params, n, ell, energy)
    if grid is None:
        grid = default_grid(prof.theta, params.delta)
    r = grid.r
    raw = prof.value(r)
    norm = _l2(Component.LOWER_G, r, raw)
    if not math.isfinite(norm) or norm <= 0.0:
        raise NormalizationError(f"dominant component has norm {norm}")
    scale = 1.0 / math.sqrt(norm)
    dominant = kind is SymmetryKind.PSEUDOSPIN and Component.LOWER_G or Component.UPPER_F
    meta = dict(n=n, ell=ell, kappa=state.kappa, symmetry=kind.value)
    dom = _make(grid, raw * scale, dominant, energy, prof.theta, **meta)
    return prof, scale, dom, float(energy)


def _partner(params, state, prof, scale, energy, grid, kind) -> RadialFunction:
    k = coupling(params, energy)
    if abs(k) <= SINGULAR_TOL * params.mu:
        raise SymmetrySingularError(f"coupling factor vanishes at E={energy:.9g}")
    r = grid.r
    sign = -1.0 if kind is SymmetryKind.PSEUDOSPIN else 1.0
    values = scale * (prof.derivative(r) + sign * state.kappa * prof.value(r) / r) / k
    comp = Component.UPPER_F if kind is SymmetryKind.PSEUDOSPIN else Component.LOWER_G
    return _make(grid, values, comp, energy, prof.theta, n=prof.n, ell=prof.ell,
                 kappa=state.kappa, symmetry=kind.value)


def lower_pseudospin(params: PhysicalParams, state: QuantumState, energy: float | None = None,
                     grid: RadialGrid | None = None) -> RadialFunction:
    """Normalized lower component G under pseudospin symmetry.

    ``energy`` defaults to the bound root of ``state``.  Raises
    NoBoundStateError if the energy has no normalizable solution.
    """
    return _spinor(params, state, energy, grid, SymmetryKind.PSEUDOSPIN)[2]


def upper_pseudospin(params: PhysicalParams, state: QuantumState, energy: float | None = None,
                     grid: RadialGrid | None = None) -> RadialFunction:
    """Upper component F = (G' - kappa G / r) / (mu - E + C)."""
    prof, scale, dom, energy = _spinor(params, state, energy, grid, SymmetryKind.PSEUDOSPIN)
    return _partner(params, state, prof, scale, energy, dom.grid, SymmetryKind.PSEUDOSPIN)


def upper_spin(params: PhysicalParams, state: QuantumState, energy: float | None = None,
               grid: RadialGrid | None = None) -> RadialFunction:
    """Normalized upper component F under spin symmetry."""
    return _spinor(params, state, energy, grid, SymmetryKind.SPIN)[2]


def lower_spin(params: PhysicalParams, state: QuantumState, energy: float | None = None,
               grid: RadialGrid | None = None) -> RadialFunction:
    """Lower component G = (F' + kappa F / r) / (mu + E - C)."""
    prof, scale, dom, energy = _spinor(params, state, energy, grid, SymmetryKind.SPIN)
    return _partner(params, state, prof, scale, energy, dom.grid, SymmetryKind.SPIN)


def spinor(params: PhysicalParams, state: QuantumState, energy: float | None = None,
           grid: RadialGrid | None = None) -> tuple[RadialFunction, RadialFunction]:
    """(G, F) on a common grid for either symmetry."""
    kind = params.symmetry
    prof, scale, dom, energy = _spinor(params, state, energy, grid, kind)
    other = _partner(params, state, prof, scale, energy, dom.grid, kind)
    return (dom, other) if kind is SymmetryKind.PSEUDOSPIN else (other, dom)


def nonrel_radial(mu: float, delta: float, n_r: int, ell: int,
                  grid: RadialGrid | None = None) -> RadialFunction:
    """Non-relativistic radial function R(r), normalized so that the
    integral of (r R)^2 is one."""
    energy = nonrel_energy(mu, delta, n_r, ell)
    if not energy < 0.0 or nonrel_theta(mu, delta, n_r, ell) <= 0.0:
        raise NoBoundStateError(f"(n_r={n_r}, l={ell}) is unbound at mu={mu}, delta={delta}")
    theta = math.sqrt(-2.0 * mu * energy)
    if grid is None:
        grid = default_grid(theta, delta)
    r = grid.r
    s = np.exp(-delta * r)
    u = (np.exp(-theta * r) * (-np.expm1(-delta * r)) ** (ell + 1)
         * jacobi_p(n_r, 2.0 * theta / delta, 2.0 * ell + 1.0, 1.0 - 2.0 * s))
    f = _make(grid, u / r, Component.NONREL_R, energy, theta, n=n_r, ell=ell)
    return normalize(f)

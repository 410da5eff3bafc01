"""Shooting solver for the radial equations, independent of the closed form.

Every equation handled here has the form

    u'' = [L c(r) + g h(r) - eps] u,    h = e^{-delta r} / (1 - e^{-delta r})

with c(r) either the Hulthen-square term delta^2 h^2 or the exact 1/r^2,
and eps, g depending on the trial energy.  The regular solution is
integrated outward from a two-term power-series start and matched to an
outer solution:

* decaying tail: integrated inward from far outside the outer turning
  point (bound states);
* growing tail: the convergent power series in s = e^{-delta r} with
  exponent -theta/delta (virtual states, Hulthen-square term only).

Nothing here uses the analytic eigenvalue formulas; brackets may come from
anywhere.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.integrate import solve_ivp, trapezoid
from scipy.optimize import brentq

from .errors import BracketMissError, InvalidParameterError, WrongStateError
from .params import PhysicalParams
from .quantum_numbers import SymmetryKind

# a converged sign change counts as a root only if the mismatch there is this
# small relative to the bracketing values
ROOT_ACCEPT = 1e-4
# looser tolerance for sign scans and node bisection
SCAN_RTOL = 1e-8


class Centrifugal(enum.Enum):
    HULTHEN_SQUARE = "hulthen-square"
    EXACT = "exact"


class Tail(enum.Enum):
    AUTO = "auto"
    DECAYING = "decaying"
    GROWING = "growing"


@dataclass(frozen=True)
class ShootConfig:
    """Integration and search settings.

    ``r_max`` of None places the outer boundary 40 decay lengths beyond the
    outer turning point.  ``bracket`` of None searches the whole window
    where the decay radicand is positive.
    """

    r_min: float = 1e-6
    r_max: float | None = None
    rtol: float = 1e-11
    bracket: tuple[float, float] | None = None
    max_iter: int = 200
    centrifugal: Centrifugal = Centrifugal.HULTHEN_SQUARE
    tail: Tail = Tail.AUTO
    n_scan: int = 16
    n_scan_wide: int = 160

    def __post_init__(self):
        object.__setattr__(self, "centrifugal", Centrifugal(self.centrifugal))
        object.__setattr__(self, "tail", Tail(self.tail))
        if not self.r_min > 0:
            raise InvalidParameterError("r_min must be positive")
        if self.r_max is not None and not self.r_max > self.r_min:
            raise InvalidParameterError("r_max must exceed r_min")
        if self.bracket is not None and not self.bracket[0] < self.bracket[1]:
            raise InvalidParameterError("bracket must satisfy E_lo < E_hi")
        if not 0 < self.rtol < 1e-3:
            raise InvalidParameterError("rtol out of range")


@dataclass(frozen=True)
class ShootResult:
    energy: float
    nodes: int
    tail: Tail
    mismatch: float
    r_match: float
    r_max: float | None
    candidates: tuple[float, ...] = field(default=())

    def __float__(self) -> float:
        return self.energy


@dataclass(frozen=True)
class _Coefs:
    eps: float
    g: float


@dataclass(frozen=True)
class _Equation:
    """Energy-dependent radial equation for a fixed angular momentum."""

    ell: int
    delta: float
    coefs: Callable[[float], _Coefs]
    window: tuple[float, float]
    centrifugal: Centrifugal

    @property
    def big_l(self) -> float:
        return float(self.ell * (self.ell + 1))


def pseudospin_equation(params: PhysicalParams, ell_tilde: int,
                        centrifugal: Centrifugal = Centrifugal.HULTHEN_SQUARE) -> _Equation:
    mu, c, g0 = params.mu, params.c_const, params.strength

    def coefs(e):
        return _Coefs(e * e - mu * mu - c * (mu + e), (mu - e + c) * g0)

    return _Equation(ell_tilde, params.delta, coefs, tuple(sorted((-mu, mu + c))),
                     Centrifugal(centrifugal))


def spin_equation(params: PhysicalParams, ell: int,
                  centrifugal: Centrifugal = Centrifugal.HULTHEN_SQUARE) -> _Equation:
    mu, c, g0 = params.mu, params.c_const, params.strength

    def coefs(e):
        return _Coefs(e * e - mu * mu + c * (mu - e), -(mu + e - c) * g0)

    return _Equation(ell, params.delta, coefs, tuple(sorted((c - mu, mu))),
                     Centrifugal(centrifugal))


def schrodinger_equation(mu: float, delta: float, ell: int,
                         centrifugal: Centrifugal = Centrifugal.HULTHEN_SQUARE) -> _Equation:
    def coefs(e):
        return _Coefs(2.0 * mu * e, -2.0 * mu * delta)

    # the potential is bounded below by the unit Coulomb tail
    return _Equation(ell, delta, coefs, (-0.5 * mu, 0.0), Centrifugal(centrifugal))


def _q_function(eq: _Equation, cf: _Coefs):
    d, big_l, g, eps = eq.delta, eq.big_l, cf.g, cf.eps
    exact = eq.centrifugal is Centrifugal.EXACT

    def q(r):
        em = -np.expm1(-d * r)
        h = np.exp(-d * r) / em
        cent = 1.0 / (r * r) if exact else d * d * h * h
        return big_l * cent + g * h - eps

    return q


def _rhs(eq: _Equation, cf: _Coefs):
    d, big_l, g, eps = eq.delta, eq.big_l, cf.g, cf.eps
    exact = eq.centrifugal is Centrifugal.EXACT
    exp, expm1 = math.exp, math.expm1

    def f(r, y):
        em = -expm1(-d * r)
        h = exp(-d * r) / em
        cent = 1.0 / (r * r) if exact else d * d * h * h
        return (y[1], (big_l * cent + g * h - eps) * y[0])

    return f


def _rhs_many(eq: _Equation, eps: np.ndarray, g: np.ndarray):
    # one stacked system (u_1..u_n, u'_1..u'_n) for a batch of energies
    d, big_l = eq.delta, eq.big_l
    exact = eq.centrifugal is Centrifugal.EXACT
    n = eps.size
    exp, expm1 = math.exp, math.expm1

    def f(r, y):
        em = -expm1(-d * r)
        h = exp(-d * r) / em
        cent = 1.0 / (r * r) if exact else d * d * h * h
        return np.concatenate((y[n:], (big_l * cent + g * h - eps) * y[:n]))

    return f


def _origin_start(eq: _Equation, cf: _Coefs, r0: float) -> list[float]:
    # u ~ r^p (1 + c1 r), stored divided by r0^p
    p = eq.ell + 1
    a = cf.g / eq.delta
    if eq.centrifugal is Centrifugal.HULTHEN_SQUARE:
        a -= eq.big_l * eq.delta
    c1 = a / (2.0 * p)
    return [1.0 + c1 * r0, p / r0 * (1.0 + c1 * r0) + c1]


@dataclass
class _Path:
    """Piecewise solution: each piece starts from a unit-norm state."""

    pieces: list
    end: tuple[float, float]


def _breakpoints(r_a: float, r_b: float, theta: float) -> list[float]:
    # decades near the origin, then pieces a few decay lengths long, so
    # the amplitude stays moderate within each piece
    sign = 1.0 if r_b > r_a else -1.0
    pts = [r_a]
    chunk = max(2.0, 5.0 / max(theta, 1e-12))
    r = r_a
    while sign * (r_b - r) > 0:
        step = 9.0 * r if (sign > 0 and r < 1.0) else chunk
        r = r + sign * step
        if sign * (r - r_b) >= 0 or abs(r - r_b) < 1e-9 * abs(r_b):
            r = r_b
        pts.append(r)
    return pts


def _integrate(f, r_a: float, r_b: float, y0, rtol: float, theta: float,
               dense: bool = False) -> _Path:
    y = np.asarray(y0, dtype=float)
    pieces = []
    pts = _breakpoints(r_a, r_b, theta)
    for a, b in zip(pts[:-1], pts[1:]):
        y = y / math.hypot(y[0], y[1])
        sol = solve_ivp(f, (a, b), y, method="DOP853", rtol=rtol, atol=rtol * 1e-3,
                        dense_output=dense)
        if sol.status != 0:
            raise BracketMissError(f"integration failed: {sol.message}")
        if dense:
            pieces.append(sol)
        y = sol.y[:, -1]
    return _Path(pieces, (float(y[0]), float(y[1])))


def _integrate_many(f, r_a: float, r_b: float, u0: np.ndarray, du0: np.ndarray,
                    rtol: float, theta: float) -> tuple[np.ndarray, np.ndarray]:
    n = u0.size
    u, du = u0.astype(float), du0.astype(float)
    pts = _breakpoints(r_a, r_b, theta)
    for a, b in zip(pts[:-1], pts[1:]):
        nrm = np.hypot(u, du)
        y = np.concatenate((u / nrm, du / nrm))
        sol = solve_ivp(f, (a, b), y, method="DOP853", rtol=rtol, atol=rtol * 1e-3)
        if sol.status != 0:
            raise BracketMissError(f"integration failed: {sol.message}")
        u, du = sol.y[:n, -1], sol.y[n:, -1]
    return u, du


def _sign_changes(path: _Path, refine: int = 8) -> int:
    total = 0
    last = 0.0
    for sol in path.pieces:
        t = sol.t
        pts = np.concatenate([np.linspace(t[i], t[i + 1], refine, endpoint=False)
                              for i in range(len(t) - 1)] + [t[-1:]])
        u = sol.sol(pts)[0]
        sgn = np.sign(u)
        sgn = sgn[sgn != 0]
        if sgn.size == 0:
            continue
        if last != 0.0 and sgn[0] != last:
            total += 1
        total += int(np.count_nonzero(sgn[1:] != sgn[:-1]))
        last = sgn[-1]
    return total


def _growing_series(s: float, c: float, e: float, q: float, big_l: float,
                    max_terms: int = 20000):
    """Series solution s^c sum a_m s^m and its r-derivative over -delta.

    Returns (value, s d/ds value) or (nan, nan) at a resonance.
    """
    a_prev2, a_prev1 = 0.0, 1.0
    tot, dtot = 1.0, c
    sm = 1.0
    for m in range(1, max_terms):
        den = m * (m + 2.0 * c)
        if den == 0.0:
            return math.nan, math.nan
        d1 = (m - 1 + c) ** 2
        d2 = (m - 2 + c) ** 2
        a = (a_prev1 * (2.0 * d1 + 2.0 * e + q) - a_prev2 * (d2 + e - big_l + q)) / den
        sm *= s
        term = a * sm
        tot += term
        dtot += (m + c) * term
        if abs(term) <= 1e-17 * abs(tot) and abs((m + c) * term) <= 1e-17 * abs(dtot) and m > 4:
            break
        a_prev2, a_prev1 = a_prev1, a
    scale = s ** c
    return scale * tot, scale * dtot


def _series_degree(c: float, e: float, q: float, big_l: float, ell: int,
                   max_terms: int = 400, tol: float = 1e-8) -> int | None:
    """Degree n when the outer series is s^c (1-s)^(ell+1) times a degree-n
    polynomial, i.e. when it terminates after ell + 1 + n terms."""
    coef = [1.0]
    a_prev2, a_prev1 = 0.0, 1.0
    for m in range(1, max_terms):
        den = m * (m + 2.0 * c)
        if den == 0.0:
            return None
        d1 = (m - 1 + c) ** 2
        d2 = (m - 2 + c) ** 2
        a = (a_prev1 * (2.0 * d1 + 2.0 * e + q) - a_prev2 * (d2 + e - big_l + q)) / den
        coef.append(a)
        a_prev2, a_prev1 = a_prev1, a
        if m >= 2:
            peak = max(abs(x) for x in coef[:-2])
            if abs(coef[-1]) <= tol * peak and abs(coef[-2]) <= tol * peak:
                return m - 2 - (ell + 1)
    return None


def _series_nodes(s_m: float, c: float, e: float, q: float, big_l: float) -> int:
    vals = [_growing_series(s, c, e, q, big_l)[0] for s in np.linspace(s_m, 1e-6, 200)]
    sgn = np.sign(np.array(vals))
    sgn = sgn[sgn != 0]
    return int(np.count_nonzero(sgn[1:] != sgn[:-1]))


@dataclass(frozen=True)
class _Geometry:
    tail: Tail
    r_match: float
    r_max: float | None


class _Shooter:
    def __init__(self, eq: _Equation, config: ShootConfig):
        self.eq = eq
        self.cfg = config
        self.evaluations = 0

    # geometry -----------------------------------------------------------
    def turning_point(self, energy: float) -> float:
        cf = self.eq.coefs(energy)
        theta = math.sqrt(max(-cf.eps, 1e-300))
        r_far = 60.0 / self.eq.delta + 60.0 / theta
        r = np.geomspace(self.cfg.r_min, r_far, 4000)
        qv = _q_function(self.eq, cf)(r)
        allowed = np.nonzero(qv < 0)[0]
        if allowed.size == 0:
            return float(r[int(np.argmin(qv))])
        i = int(allowed[-1])
        if i + 1 >= r.size:
            return float(r[i])
        qf = _q_function(self.eq, cf)
        return float(brentq(lambda x: qf(x), r[i], r[i + 1]))

    def geometry(self, e_lo: float, e_hi: float, tail: Tail) -> _Geometry:
        mid = 0.5 * (e_lo + e_hi)
        thetas = [math.sqrt(-self.eq.coefs(e).eps) for e in (e_lo, mid, e_hi)
                  if self.eq.coefs(e).eps < 0]
        if not thetas:
            raise BracketMissError("bracket lies outside the window of decaying exponents")
        th_min, th_max = min(thetas), max(thetas)
        if tail is Tail.GROWING:
            th_mid = math.sqrt(max(-self.eq.coefs(mid).eps, 1e-300))
            return _Geometry(tail, min(math.log(2.0) / self.eq.delta, 1.0 / th_mid), None)
        r_m = self.turning_point(mid)
        if self.cfg.r_max is not None:
            r_max = self.cfg.r_max
        else:
            r_max = r_m + min(40.0 / th_min, 600.0 / th_max)
        return _Geometry(tail, r_m, r_max)

    # shooting -----------------------------------------------------------
    def _theta(self, cf: _Coefs) -> float:
        return math.sqrt(max(-cf.eps, 0.0))

    def _outward(self, cf: _Coefs, r_end: float, rtol: float, dense: bool = False) -> _Path:
        f = _rhs(self.eq, cf)
        y0 = _origin_start(self.eq, cf, self.cfg.r_min)
        return _integrate(f, self.cfg.r_min, r_end, y0, rtol, self._theta(cf), dense)

    def _outer(self, cf: _Coefs, geo: _Geometry, rtol: float, dense: bool = False):
        """(v, v') of the outer solution at the matching radius."""
        if geo.tail is Tail.GROWING:
            e = cf.eps / self.eq.delta**2
            q = cf.g / self.eq.delta**2
            c = -math.sqrt(-e)
            s = math.exp(-self.eq.delta * geo.r_match)
            val, sder = _growing_series(s, c, e, q, self.eq.big_l)
            return val, -self.eq.delta * sder, None
        qf = _q_function(self.eq, cf)
        kappa = math.sqrt(max(float(qf(geo.r_max)), 0.0))
        if kappa == 0.0:
            return math.nan, math.nan, None
        path = _integrate(_rhs(self.eq, cf), geo.r_max, geo.r_match, [1.0, -kappa],
                          rtol, self._theta(cf), dense)
        return path.end[0], path.end[1], path

    def mismatch(self, energy: float, geo: _Geometry, rtol: float | None = None) -> float:
        """Normalized Wronskian of the regular and outer solutions."""
        self.evaluations += 1
        rtol = self.cfg.rtol if rtol is None else rtol
        cf = self.eq.coefs(energy)
        if not cf.eps < 0:
            return math.nan
        u, du = self._outward(cf, geo.r_match, rtol).end
        v, dv, _ = self._outer(cf, geo, rtol)
        if not (math.isfinite(v) and math.isfinite(dv)):
            return math.nan
        return (u * dv - du * v) / (math.hypot(u, du) * math.hypot(v, dv))

    def scan(self, energies: np.ndarray, geo: _Geometry, rtol: float) -> np.ndarray:
        """Mismatch at many energies, integrated as a single stacked system."""
        out = np.full(len(energies), math.nan)
        cfs = [self.eq.coefs(e) for e in energies]
        keep = [i for i, cf in enumerate(cfs) if cf.eps < 0]
        if not keep:
            return out
        cfs = [cfs[i] for i in keep]
        self.evaluations += len(cfs)
        eps = np.array([cf.eps for cf in cfs])
        g = np.array([cf.g for cf in cfs])
        theta = float(np.sqrt(-eps).max())
        start = np.array([_origin_start(self.eq, cf, self.cfg.r_min) for cf in cfs])
        f = _rhs_many(self.eq, eps, g)
        u, du = _integrate_many(f, self.cfg.r_min, geo.r_match, start[:, 0], start[:, 1],
                                rtol, theta)
        if geo.tail is Tail.GROWING:
            outer = [self._outer(cf, geo, rtol)[:2] for cf in cfs]
            v = np.array([o[0] for o in outer])
            dv = np.array([o[1] for o in outer])
        else:
            qv = np.array([float(_q_function(self.eq, cf)(geo.r_max)) for cf in cfs])
            kappa = np.sqrt(np.maximum(qv, 0.0))
            v, dv = _integrate_many(f, geo.r_max, geo.r_match, np.ones_like(kappa), -kappa,
                                    rtol, theta)
            v = np.where(kappa > 0, v, math.nan)
        with np.errstate(invalid="ignore", divide="ignore"):
            w = (u * dv - du * v) / (np.hypot(u, du) * np.hypot(v, dv))
        out[keep] = w
        return out

    def nodes(self, energy: float, geo: _Geometry) -> int:
        cf = self.eq.coefs(energy)
        n = _sign_changes(self._outward(cf, geo.r_match, self.cfg.rtol, dense=True))
        if geo.tail is Tail.GROWING:
            e = cf.eps / self.eq.delta**2
            q = cf.g / self.eq.delta**2
            s_m = math.exp(-self.eq.delta * geo.r_match)
            return n + _series_nodes(s_m, -math.sqrt(-e), e, q, self.eq.big_l)
        _, _, inner = self._outer(cf, geo, self.cfg.rtol, dense=True)
        return n + _sign_changes(inner)

    def sturm_count(self, energy: float) -> int:
        """Nodes of the regular solution out to deep in the forbidden region."""
        cf = self.eq.coefs(energy)
        r_end = self.turning_point(energy) + 30.0 / self._theta(cf)
        return _sign_changes(self._outward(cf, r_end, SCAN_RTOL, dense=True))

    def series_degree(self, energy: float) -> int | None:
        cf = self.eq.coefs(energy)
        e = cf.eps / self.eq.delta**2
        q = cf.g / self.eq.delta**2
        return _series_degree(-math.sqrt(-e), e, q, self.eq.big_l, self.eq.ell)

    # root search --------------------------------------------------------
    def roots(self, e_lo: float, e_hi: float, tail: Tail, points: np.ndarray):
        geo = self.geometry(e_lo, e_hi, tail)
        scan_rtol = max(self.cfg.rtol, SCAN_RTOL)
        # the stacked error norm is shared by all energies, so tighten it
        vals = self.scan(points, geo, 0.1 * scan_rtol)
        found = []
        fine = lambda e: self.mismatch(e, geo)
        for i in range(len(points) - 1):
            fa, fb = vals[i], vals[i + 1]
            if not (math.isfinite(fa) and math.isfinite(fb)) or fa * fb > 0:
                continue
            ea, eb = points[i], points[i + 1]
            fa, fb = fine(ea), fine(eb)
            if fa * fb > 0:
                # the sign change sits on a scan point; widen by one cell
                ea, eb = points[max(i - 1, 0)], points[min(i + 2, len(points) - 1)]
                fa, fb = fine(ea), fine(eb)
            if not (math.isfinite(fa) and math.isfinite(fb)) or fa * fb > 0:
                continue
            if fa == 0.0 or fb == 0.0:
                root = ea if fa == 0.0 else eb
            else:
                try:
                    root = brentq(fine, ea, eb, xtol=1e-14 * max(1.0, abs(ea)),
                                  rtol=4 * np.finfo(float).eps, maxiter=self.cfg.max_iter)
                except (ValueError, RuntimeError):
                    continue
            res = fine(root)
            # a true zero, not a jump of the normalized Wronskian
            if math.isfinite(res) and abs(res) <= ROOT_ACCEPT * max(abs(fa), abs(fb)):
                if not any(abs(root - f[0]) <= 1e-12 * max(1.0, abs(root)) for f in found):
                    found.append((root, res))
        return geo, found


def _scan_points(e_lo: float, e_hi: float, n: int, clustered: bool) -> np.ndarray:
    t = np.linspace(0.0, 1.0, n + 1)
    if clustered:
        # cluster toward both window edges where decay exponents vanish
        t = 0.5 * (1.0 - np.cos(np.pi * t))
        t = t[1:-1]
    return e_lo + (e_hi - e_lo) * t


def _solve(eq: _Equation, n_target: int, config: ShootConfig) -> ShootResult:
    if n_target < 0:
        raise InvalidParameterError("node count must be nonnegative")
    sh = _Shooter(eq, config)
    if config.bracket is not None:
        e_lo, e_hi = config.bracket
        points = _scan_points(e_lo, e_hi, config.n_scan, clustered=False)
    else:
        e_lo, e_hi = eq.window
        points = _scan_points(e_lo, e_hi, config.n_scan_wide, clustered=True)
    tails = {Tail.AUTO: [Tail.DECAYING, Tail.GROWING], Tail.DECAYING: [Tail.DECAYING],
             Tail.GROWING: [Tail.GROWING]}[config.tail]
    if eq.centrifugal is Centrifugal.EXACT:
        if config.tail is Tail.GROWING:
            raise InvalidParameterError("growing tails need the Hulthen-square term")
        tails = [Tail.DECAYING]
    problems = []
    for tail in tails:
        try:
            geo, found = sh.roots(e_lo, e_hi, tail, points)
        except BracketMissError as exc:
            problems.append(str(exc))
            continue
        if not found:
            problems.append(f"no {tail.value} root in [{e_lo:.9g}, {e_hi:.9g}]")
            continue
        if tail is Tail.DECAYING:
            counted = [(e, res, sh.nodes(e, geo)) for e, res in found]
            match = [c for c in counted if c[2] == n_target]
            if not match:
                if config.tail is Tail.DECAYING:
                    raise WrongStateError(
                        f"roots {[round(c[0], 9) for c in counted]} have node counts "
                        f"{[c[2] for c in counted]}, wanted {n_target}")
                problems.append(f"decaying roots with node counts {[c[2] for c in counted]}")
                continue
            e, res, nodes = match[0] if len(match) == 1 else min(
                match, key=lambda c: abs(c[0] - 0.5 * (e_lo + e_hi)))
        else:
            # virtual states of every degree crowd the threshold; the outer
            # series terminates for each, and its length fixes the level
            graded = [(e, res, sh.series_degree(e)) for e, res in found]
            match = [g for g in graded if g[2] == n_target]
            if len(match) != 1:
                problems.append(f"growing roots with series degrees {[g[2] for g in graded]}")
                continue
            e, res, _ = match[0]
            nodes = sh.nodes(e, geo)
        return ShootResult(float(e), nodes, tail, float(res), geo.r_match, geo.r_max,
                           tuple(f[0] for f in found))
    raise BracketMissError("; ".join(problems))


def shoot_pseudospin(params: PhysicalParams, n_r: int, ell_tilde: int,
                     config: ShootConfig = ShootConfig()) -> ShootResult:
    """Eigenvalue of the lower-component equation with ``n_r`` nodes.

    ``n_r`` counts the interior nodes of G, i.e. the polynomial degree of
    the analytic solution.
    """
    if params.symmetry is not SymmetryKind.PSEUDOSPIN:
        raise InvalidParameterError("pseudospin parameters required")
    return _solve(pseudospin_equation(params, ell_tilde, config.centrifugal), n_r, config)


def shoot_spin(params: PhysicalParams, n_r: int, ell: int,
               config: ShootConfig = ShootConfig()) -> ShootResult:
    """Eigenvalue of the upper-component equation with ``n_r`` nodes."""
    if params.symmetry is not SymmetryKind.SPIN:
        raise InvalidParameterError("spin parameters required")
    return _solve(spin_equation(params, ell, config.centrifugal), n_r, config)


def shoot_schrodinger(mu: float, delta: float, n_r: int, ell: int,
                      config: ShootConfig = ShootConfig()) -> ShootResult:
    """Schrodinger-Hulthen eigenvalue (strength delta) with ``n_r`` nodes.

    Without a bracket the n_r-th level is isolated by bisection on the node
    count of the regular solution, then refined on the matching mismatch.
    """
    if mu <= 0 or delta <= 0:
        raise InvalidParameterError("mu and delta must be positive")
    eq = schrodinger_equation(mu, delta, ell, config.centrifugal)
    if config.bracket is not None:
        return _solve(eq, n_r, config)
    sh = _Shooter(eq, config)
    lo = eq.window[0] * (1.0 - 1e-9)
    if sh.sturm_count(lo) > n_r:
        raise BracketMissError("window floor already lies above the requested level")
    hi = None
    for k in range(1, 12):
        trial = eq.window[0] * 10.0 ** (-k)
        if sh.sturm_count(trial) > n_r:
            hi = trial
            break
        lo = trial
    if hi is None:
        raise BracketMissError(
            f"no bound level with {n_r} nodes; pass a bracket to look for a virtual state")
    # shrink until the bracket holds exactly level n_r
    for _ in range(config.max_iter):
        if sh.sturm_count(lo) == n_r and sh.sturm_count(hi) == n_r + 1:
            break
        mid = 0.5 * (lo + hi)
        if sh.sturm_count(mid) > n_r:
            hi = mid
        else:
            lo = mid
    return _solve(eq, n_r, ShootConfig(**{**config.__dict__, "bracket": (lo, hi),
                                           "tail": Tail.DECAYING}))


@dataclass(frozen=True)
class ApproximationReport:
    r: np.ndarray
    deviation: np.ndarray
    max_abs: float
    integrated_abs: float
    relative_at_inverse_delta: float


def approximation_error(delta: float, ell: int, r_range: tuple[float, float],
                        n_points: int = 2000) -> ApproximationReport:
    """Deviation l(l+1)[delta^2 e^{-2 delta r}/(1-e^{-delta r})^2 - 1/r^2]."""
    r_lo, r_hi = r_range
    if not 0 < r_lo < r_hi:
        raise InvalidParameterError("r_range must be positive and increasing")
    big_l = ell * (ell + 1)
    r = np.geomspace(r_lo, r_hi, n_points)
    h = np.exp(-delta * r) / -np.expm1(-delta * r)
    dev = big_l * (delta * delta * h * h - 1.0 / (r * r))
    integrated = float(trapezoid(np.abs(dev), r))
    r1 = 1.0 / delta
    h1 = math.exp(-1.0) / -math.expm1(-1.0)
    exact1 = big_l / (r1 * r1)
    rel = 0.0 if big_l == 0 else (big_l * delta * delta * h1 * h1 - exact1) / exact1
    return ApproximationReport(r, dev, float(np.max(np.abs(dev))), integrated, rel)

"""Nikiforov-Uvarov reduction of hypergeometric-type equations.

An equation

    psi'' + (tau_tilde / sigma) psi' + (sigma_tilde / sigma**2) psi = 0

with deg(sigma), deg(sigma_tilde) <= 2 and deg(tau_tilde) <= 1 is reduced
by choosing a linear polynomial ``pi`` such that

    ((sigma' - tau_tilde) / 2)**2 - sigma_tilde + k sigma

is a perfect square.  Polynomials are stored as ascending coefficient
tuples and all arithmetic is real.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (DegenerateProblemError, NumericalDegeneracyError,
                     SelectionAmbiguityError, UnsupportedSigmaError)

# relative tolerance for the perfect-square test
SQUARE_TOL = 1e-9


def _pad(coef, length: int) -> tuple[float, ...]:
    coef = tuple(float(c) for c in coef)
    if len(coef) > length:
        if any(c != 0.0 for c in coef[length:]):
            raise ValueError(f"polynomial degree exceeds {length - 1}")
        coef = coef[:length]
    return coef + (0.0,) * (length - len(coef))


@dataclass(frozen=True)
class NuProblem:
    sigma: tuple[float, float, float]
    tau_tilde: tuple[float, float]
    sigma_tilde: tuple[float, float, float]

    def __post_init__(self):
        object.__setattr__(self, "sigma", _pad(self.sigma, 3))
        object.__setattr__(self, "tau_tilde", _pad(self.tau_tilde, 2))
        object.__setattr__(self, "sigma_tilde", _pad(self.sigma_tilde, 3))
        if not any(self.sigma):
            raise ValueError("sigma must not vanish identically")
        if not all(math.isfinite(c) for c in self.sigma + self.tau_tilde + self.sigma_tilde):
            raise ValueError("polynomial coefficients must be finite")


@dataclass(frozen=True)
class NuBranch:
    k: float
    pi: tuple[float, float]
    tau: tuple[float, float]
    lam: float

    @property
    def tau_prime(self) -> float:
        return self.tau[1]


@dataclass(frozen=True)
class PowerForm:
    """The function s**a * (1 - s)**b."""

    a: float
    b: float

    def __call__(self, s):
        s = np.asarray(s, dtype=float)
        return s ** self.a * (1.0 - s) ** self.b


def _half_shift(p: NuProblem) -> tuple[float, float]:
    # (sigma' - tau_tilde) / 2
    s0, s1, s2 = p.sigma
    return (s1 - p.tau_tilde[0]) / 2.0, (2.0 * s2 - p.tau_tilde[1]) / 2.0


def _under_root(p: NuProblem, k: float) -> tuple[float, float, float]:
    h0, h1 = _half_shift(p)
    t0, t1, t2 = p.sigma_tilde
    s0, s1, s2 = p.sigma
    return (h0 * h0 - t0 + k * s0,
            2.0 * h0 * h1 - t1 + k * s1,
            h1 * h1 - t2 + k * s2)


def k_candidates(problem: NuProblem) -> list[float]:
    """Real values of k for which the expression under the root is a square."""
    a0, a1, a2 = _under_root(problem, 0.0)
    s0, s1, s2 = problem.sigma
    # discriminant q1^2 - 4 q2 q0 as a quadratic in k
    qa = s1 * s1 - 4.0 * s2 * s0
    qb = 2.0 * a1 * s1 - 4.0 * (a2 * s0 + a0 * s2)
    qc = a1 * a1 - 4.0 * a2 * a0
    scale = max(abs(qa), abs(qb), abs(qc), 1e-300)
    tiny = 1e-14 * scale
    if abs(qa) <= tiny and abs(qb) <= tiny:
        raise DegenerateProblemError("k-equation has vanishing k^2 and k coefficients")
    if abs(qa) <= tiny:
        return [-qc / qb]
    disc = qb * qb - 4.0 * qa * qc
    if disc < 0.0:
        if disc >= -1e-12 * max(qb * qb, abs(4.0 * qa * qc)):
            disc = 0.0
        else:
            return []
    root = math.sqrt(disc)
    # stable pairing of the two roots
    q = -0.5 * (qb + math.copysign(root, qb))
    if q == 0.0:
        return [0.0, 0.0]
    return sorted([q / qa, qc / q])


def _term_sizes(p: NuProblem, k: float) -> tuple[float, float, float]:
    # magnitudes of the terms summed in _under_root, for rounding bounds
    h0, h1 = _half_shift(p)
    t0, t1, t2 = p.sigma_tilde
    s0, s1, s2 = p.sigma
    return (h0 * h0 + abs(t0) + abs(k * s0),
            2.0 * abs(h0 * h1) + abs(t1) + abs(k * s1),
            h1 * h1 + abs(t2) + abs(k * s2))


def _square_root_poly(q0: float, q1: float, q2: float,
                      sizes: tuple[float, float, float] = (0.0, 0.0, 0.0)) -> tuple[float, float]:
    """Linear p(s) with p**2 = q0 + q1 s + q2 s**2 and leading coefficient >= 0.

    ``sizes`` bounds the terms each coefficient was summed from; the
    rounding error they imply is added to the relative tolerance.
    """
    m0, m1, m2 = sizes
    ulp = 64.0 * np.finfo(float).eps
    scale = max(abs(q0), abs(q1), abs(q2), 1e-300)
    disc = q1 * q1 - 4.0 * q2 * q0
    tol = (SQUARE_TOL * max(q1 * q1, abs(4.0 * q2 * q0), scale * scale * 1e-30)
           + ulp * (2.0 * abs(q1) * m1 + 4.0 * (abs(q2) * m0 + abs(q0) * m2)))
    if abs(disc) > tol:
        raise NumericalDegeneracyError(
            f"expression is not a perfect square (discriminant {disc:.3e})")
    if q2 < -(SQUARE_TOL * scale + ulp * m2) or q0 < -(SQUARE_TOL * scale + ulp * m0):
        raise NumericalDegeneracyError("square root of the expression is not real")
    q0, q2 = max(q0, 0.0), max(q2, 0.0)
    if q2 >= q0:
        p1 = math.sqrt(q2)
        p0 = q1 / (2.0 * p1) if p1 > 0.0 else 0.0
    else:
        p0 = math.copysign(math.sqrt(q0), q1)
        p1 = q1 / (2.0 * p0)
    return p0, p1


def branches(problem: NuProblem, k: float) -> list[NuBranch]:
    """The two sign choices of pi at a given k."""
    q0, q1, q2 = _under_root(problem, k)
    p0, p1 = _square_root_poly(q0, q1, q2, _term_sizes(problem, k))
    h0, h1 = _half_shift(problem)
    out = []
    for sign in (1.0, -1.0):
        pi = (h0 + sign * p0, h1 + sign * p1)
        tau = (problem.tau_tilde[0] + 2.0 * pi[0], problem.tau_tilde[1] + 2.0 * pi[1])
        out.append(NuBranch(k=float(k), pi=pi, tau=tau, lam=float(k) + pi[1]))
    return out


def all_branches(problem: NuProblem) -> list[NuBranch]:
    out = []
    for k in k_candidates(problem):
        out.extend(branches(problem, k))
    return out


def _same_branch(a: NuBranch, b: NuBranch) -> bool:
    scale = max(1.0, abs(a.k), abs(a.pi[0]), abs(a.pi[1]))
    return (abs(a.k - b.k) <= 1e-12 * scale and abs(a.pi[0] - b.pi[0]) <= 1e-12 * scale
            and abs(a.pi[1] - b.pi[1]) <= 1e-12 * scale)


def select_branch(candidates: list[NuBranch]) -> NuBranch:
    """Pick the admissible branch: negative tau', the most negative when
    several qualify.

    For the Hulthen problems two branches usually have tau' < 0; they
    differ in the sign of the exponent at s = 0, and the more negative
    tau' belongs to the non-negative (decaying) exponent.
    """
    if not candidates:
        raise SelectionAmbiguityError("no branches to select from")
    neg = sorted((b for b in candidates if b.tau_prime < 0.0), key=lambda b: b.tau_prime)
    if not neg:
        raise SelectionAmbiguityError("no branch has tau' < 0", candidates)
    if len(neg) > 1 and not _same_branch(neg[0], neg[1]):
        gap = neg[1].tau_prime - neg[0].tau_prime
        if gap <= 1e-12 * max(1.0, abs(neg[0].tau_prime)):
            raise SelectionAmbiguityError("several distinct branches share the smallest tau'",
                                          candidates)
    return neg[0]


def lambda_n(branch: NuBranch, sigma, n: int) -> float:
    """lambda_n = -n tau' - n(n-1)/2 sigma''."""
    sigma = _pad(sigma, 3)
    return -n * branch.tau_prime - n * (n - 1) * sigma[2]


def _is_unit_sigma(sigma) -> bool:
    s0, s1, s2 = sigma
    return abs(s0) <= 1e-12 and abs(s1 - 1.0) <= 1e-12 and abs(s2 + 1.0) <= 1e-12


def _mirror(sel: NuBranch, candidates: list[NuBranch]) -> NuBranch | None:
    # same exponent at s = 1, opposite exponent at s = 0
    c0 = sel.pi[0]
    d1 = sel.pi[0] + sel.pi[1]
    scale = max(1.0, abs(c0), abs(d1))
    best = None
    for b in candidates:
        if b is sel:
            continue
        if abs(b.pi[0] + c0) <= 1e-9 * scale and abs(b.pi[0] + b.pi[1] - d1) <= 1e-9 * scale:
            best = b
    return best


def eigen_residual(problem: NuProblem, n: int, signed: bool = False) -> float:
    """Residual lambda - lambda_n of the eigenvalue condition.

    With ``signed=True`` this is the residual of the selected branch, which
    vanishes only for normalizable solutions.  By default the sign of the
    exponent at s = 0 is left free: the residual of the selected branch and
    of its mirror branch (same behaviour at s = 1, opposite exponent at
    s = 0) are compared and the smaller one is returned.  It vanishes at
    every root of the squared quantization condition.
    """
    cand = all_branches(problem)
    sel = select_branch(cand)
    res = sel.lam - lambda_n(sel, problem.sigma, n)
    if signed or not _is_unit_sigma(problem.sigma):
        return res
    mirror = _mirror(sel, cand)
    if mirror is None:
        return res
    res_m = mirror.lam - lambda_n(mirror, problem.sigma, n)
    return res if abs(res) <= abs(res_m) else res_m


def weight_and_phi(branch: NuBranch, problem: NuProblem) -> tuple[PowerForm, PowerForm]:
    """Power forms of the weight rho and the factor phi for sigma = s(1-s).

    rho solves (sigma rho)' = tau rho and phi solves phi'/phi = pi/sigma.
    """
    if not _is_unit_sigma(problem.sigma):
        raise UnsupportedSigmaError(f"sigma {problem.sigma} is not s(1-s)")
    tau0, tau1 = branch.tau
    pi0, pi1 = branch.pi
    rho = PowerForm(tau0 - 1.0, -(tau0 + tau1) - 1.0)
    phi = PowerForm(pi0, -(pi0 + pi1))
    return rho, phi

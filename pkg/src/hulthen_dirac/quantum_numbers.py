"""Quantum-number algebra for Dirac states: (n_r, kappa), orbital and
pseudo-orbital momenta, and spectroscopic labels such as ``1s_1/2``.

A :class:`QuantumState` always carries the radial number that appears in
its printed label.  Members of a pseudospin doublet therefore differ by one
in ``n_r``: ``1s_1/2`` and ``0d_3/2`` share the pseudo-orbital momentum 1.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import InvalidParameterError, LabelError

# spectroscopic letters for l = 0..12 ("j" is skipped by convention)
LETTERS = "spdfghiklmnoq"

_LABEL_RE = re.compile(r"^\s*(\d+)([a-z])_(\d+)/2\s*$")


class SymmetryKind(enum.Enum):
    PSEUDOSPIN = "pseudospin"
    SPIN = "spin"

    @classmethod
    def parse(cls, text: str | SymmetryKind) -> SymmetryKind:
        if isinstance(text, cls):
            return text
        try:
            return cls(str(text).strip().lower())
        except ValueError:
            raise InvalidParameterError(f"unknown symmetry {text!r}") from None


def orbital_momenta(kappa: int) -> tuple[int, int]:
    """Return ``(l, l_tilde)`` for a relativistic quantum number ``kappa``."""
    kappa = int(kappa)
    if kappa == 0:
        raise InvalidParameterError("kappa must be nonzero")
    if kappa > 0:
        return kappa, kappa - 1
    return -kappa - 1, -kappa


@dataclass(frozen=True)
class QuantumState:
    n_r: int
    kappa: int

    def __post_init__(self):
        if int(self.n_r) != self.n_r or self.n_r < 0:
            raise InvalidParameterError(f"n_r must be a nonnegative integer, got {self.n_r!r}")
        if int(self.kappa) != self.kappa or self.kappa == 0:
            raise InvalidParameterError(f"kappa must be a nonzero integer, got {self.kappa!r}")
        object.__setattr__(self, "n_r", int(self.n_r))
        object.__setattr__(self, "kappa", int(self.kappa))

    @property
    def ell(self) -> int:
        return orbital_momenta(self.kappa)[0]

    @property
    def ell_tilde(self) -> int:
        return orbital_momenta(self.kappa)[1]

    @property
    def two_j(self) -> int:
        return 2 * abs(self.kappa) - 1

    @property
    def label(self) -> SpectroscopicLabel:
        return SpectroscopicLabel(self.n_r, _letter(self.ell), self.two_j)

    def __str__(self) -> str:
        return str(self.label)


@dataclass(frozen=True)
class SpectroscopicLabel:
    n_r: int
    letter: str
    two_j: int

    def __post_init__(self):
        if self.n_r < 0:
            raise LabelError("radial number must be nonnegative")
        if self.letter not in LETTERS:
            raise LabelError(f"unknown orbital letter {self.letter!r}")
        ell = LETTERS.index(self.letter)
        if self.two_j < 1 or self.two_j % 2 == 0 or abs(self.two_j - 2 * ell) != 1:
            raise LabelError(f"inconsistent j={self.two_j}/2 for l={ell}")

    @property
    def ell(self) -> int:
        return LETTERS.index(self.letter)

    def __str__(self) -> str:
        return f"{self.n_r}{self.letter}_{self.two_j}/2"


def _letter(ell: int) -> str:
    if not 0 <= ell < len(LETTERS):
        raise InvalidParameterError(f"no spectroscopic letter for l={ell}")
    return LETTERS[ell]


def render(state: QuantumState) -> str:
    return str(state.label)


def parse_label(text: str) -> QuantumState:
    """Parse a label like ``"1g_9/2"`` into a :class:`QuantumState`."""
    m = _LABEL_RE.match(text)
    if m is None:
        raise LabelError(f"malformed label {text!r}")
    n_r, letter, two_j = int(m.group(1)), m.group(2), int(m.group(3))
    lab = SpectroscopicLabel(n_r, letter, two_j)
    # j = l + 1/2 is the aligned case with negative kappa
    if two_j == 2 * lab.ell + 1:
        kappa = -(two_j + 1) // 2
    else:
        kappa = (two_j + 1) // 2
    return QuantumState(n_r, kappa)


def pseudospin_doublet(n_r: int, ell_tilde: int) -> tuple[QuantumState, QuantumState]:
    """Both members of the pseudospin doublet numbered ``(n_r, ell_tilde)``.

    The aligned member (kappa < 0) carries ``n_r`` and the partner with
    kappa > 0 carries ``n_r - 1``; both share the lower-component
    polynomial degree ``n_r - 1``.
    """
    if n_r < 1:
        raise InvalidParameterError("a pseudospin doublet needs n_r >= 1")
    if ell_tilde < 1:
        raise InvalidParameterError("a pseudospin doublet needs l_tilde >= 1")
    return QuantumState(n_r, -ell_tilde), QuantumState(n_r - 1, ell_tilde + 1)


def spin_doublet(n_r: int, ell: int) -> tuple[QuantumState, QuantumState]:
    """The spin doublet ``(n_r, l, j = l +- 1/2)``, aligned member first."""
    if ell < 1:
        raise InvalidParameterError("a spin doublet needs l >= 1")
    return QuantumState(n_r, -(ell + 1)), QuantumState(n_r, ell)


def radial_degree(state: QuantumState, symmetry: SymmetryKind) -> int:
    """Polynomial degree (node count) of the dominant radial component.

    Under pseudospin symmetry the lower component of the aligned member
    ``n_r l_{l+1/2}`` has ``n_r - 1`` nodes, which is what makes it
    degenerate with ``(n_r - 1) (l+2)_{l+3/2}``.  Aligned states with
    ``n_r = 0`` have no partner and no pseudospin-symmetric solution.
    """
    symmetry = SymmetryKind.parse(symmetry)
    if symmetry is SymmetryKind.SPIN:
        return state.n_r
    if state.kappa < 0:
        if state.n_r == 0:
            raise InvalidParameterError(
                f"{state} has no pseudospin partner (intruder state)")
        return state.n_r - 1
    return state.n_r


def state_for_degree(n: int, kappa: int, symmetry: SymmetryKind) -> QuantumState:
    """Inverse of :func:`radial_degree`."""
    symmetry = SymmetryKind.parse(symmetry)
    if n < 0:
        raise InvalidParameterError("degree must be nonnegative")
    if symmetry is SymmetryKind.PSEUDOSPIN and kappa < 0:
        return QuantumState(n + 1, kappa)
    return QuantumState(n, kappa)


def doublet_partner(state: QuantumState,
                    symmetry: SymmetryKind) -> tuple[SpectroscopicLabel, SpectroscopicLabel]:
    """Labels of the degenerate pair that contains ``state``."""
    symmetry = SymmetryKind.parse(symmetry)
    if symmetry is SymmetryKind.PSEUDOSPIN:
        n = radial_degree(state, symmetry)
        pair = pseudospin_doublet(n + 1, state.ell_tilde)
    else:
        pair = spin_doublet(state.n_r, state.ell)
    return pair[0].label, pair[1].label

"""Published reference energies (fm^-1) of the pseudospin-symmetric
Hulthen problem at mu = 5, strength = 3.4, C = -4.9.

Keys are ``(l_tilde, n_r, delta)`` where ``n_r`` numbers the doublet
``(n_r l_{l+1/2}, (n_r-1) (l+2)_{l+3/2})``.  Values are printed to six or
seven significant figures.
"""

from __future__ import annotations

REFERENCE_SPECTRUM: dict[tuple[int, int, float], float] = {
    (1, 1, 0.025): 0.0963638, (1, 1, 0.1): 0.0425738,
    (1, 1, 0.175): -0.0710009, (1, 1, 0.25): -0.2346580,
    (1, 2, 0.025): 0.0928939, (1, 2, 0.1): -0.0103694,
    (1, 2, 0.175): -0.2174930, (1, 2, 0.25): -0.4920870,
    (2, 1, 0.025): 0.0912282, (2, 1, 0.1): -0.0363590,
    (2, 1, 0.175): -0.2930130, (2, 1, 0.25): -0.6351320,
    (2, 2, 0.025): 0.0863238, (2, 2, 0.1): -0.1078600,
    (2, 2, 0.175): -0.4732160, (2, 2, 0.25): -0.9131390,
    (3, 1, 0.025): 0.0839128, (3, 1, 0.1): -0.1447100,
    (3, 1, 0.175): -0.5760950, (3, 1, 0.25): -1.0984500,
    (3, 2, 0.025): 0.0775818, (3, 2, 0.1): -0.2316110,
    (3, 2, 0.175): -0.7705370, (3, 2, 0.25): -1.3540100,
    (4, 1, 0.025): 0.0744360, (4, 1, 0.1): -0.2784550,
    (4, 1, 0.175): -0.8953110, (4, 1, 0.25): -1.5671200,
    (4, 2, 0.025): 0.0666955, (4, 2, 0.1): -0.3771030,
    (4, 2, 0.175): -1.0870200, (4, 2, 0.25): -1.7758200,
}

# agreement required by the regression command
REFERENCE_TOLERANCE = 5e-7


def reference_entries() -> list[tuple[int, int, float, float]]:
    """Entries ordered by (l_tilde, n_r, delta)."""
    return [(lt, n, d, e) for (lt, n, d), e in sorted(REFERENCE_SPECTRUM.items())]


def printed_digits_match(computed: float, printed: float, sig: int = 6) -> bool:
    """True when ``computed`` rounds to ``printed`` at ``sig`` significant figures."""
    return float(f"{computed:.{sig - 1}e}") == float(f"{printed:.{sig - 1}e}")

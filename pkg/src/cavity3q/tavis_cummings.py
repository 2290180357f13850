"""Resonant atom-field block unitaries and the closed-form three-qubit state.

Two ground-state atoms sit in cavity c1 and one in cavity c2, all coupled
resonantly with equal strength g to their local field mode.  In the
interaction picture the dynamics factors into photon-number blocks: a 3x3
block for the symmetric two-atom ladder in c1 and a 2x2 block in c2.  With
``tau = g * t`` those blocks have trigonometric closed forms, and summing
them against the injected-field weights yields the 8x8 reduced density
matrix of the three atomic qubits directly, with no Hilbert-space evolution.

Computational basis order throughout: |000>, |100>, |010>, |110>, |001>,
|101>, |011>, |111>, where the first two slots are the c1 atoms (A1, A2)
and the third is the c2 atom (B); the flat index is i1 + 2*i2 + 4*i3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .fock_field import FieldConfig, binomial_amplitude_row, squeezed_weight

__all__ = [
    "ThreeQubitDensityMatrix",
    "PATTERN_MASK",
    "pattern_violations",
    "two_atom_unitary",
    "one_atom_unitary",
    "closed_form_rho",
    "diagonal_probabilities",
]


def two_atom_unitary(n: int, tau: float) -> np.ndarray:
    """Evolution block for two ground-state atoms with ``n`` photons in c1.

    Basis: the symmetric ladder {|gg, n>, |(ge+eg)/sqrt2, n-1>, |ee, n-2>}.
    The block couplings are A_n = sqrt(2(n-1)), B_n = sqrt(2n) and the Rabi
    rate f_n = sqrt(2(2n-1)) = sqrt(A_n^2 + B_n^2).  For n = 1 the top rung
    is absent and the block is 2x2; for n = 0 nothing moves.
    """
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise ValueError(f"photon number must be a non-negative integer, got {n!r}")
    if n == 0:
        return np.eye(1, dtype=complex)
    if n == 1:
        c = math.cos(math.sqrt(2.0) * tau)
        s = math.sin(math.sqrt(2.0) * tau)
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    a = math.sqrt(2.0 * (n - 1))
    b = math.sqrt(2.0 * n)
    f2 = a * a + b * b
    f = math.sqrt(f2)
    c = math.cos(f * tau)
    s = math.sin(f * tau)
    return np.array(
        [
            [(b * b * c + a * a) / f2, -1j * b * s / f, a * b * (c - 1.0) / f2],
            [-1j * b * s / f, c, -1j * a * s / f],
            [a * b * (c - 1.0) / f2, -1j * a * s / f, (a * a * c + b * b) / f2],
        ],
        dtype=complex,
    )


def one_atom_unitary(m: int, tau: float) -> np.ndarray:
    """Jaynes-Cummings block for one ground-state atom with ``m`` photons.

    Basis {|g, m>, |e, m-1>}; both off-diagonal entries are -i sin(sqrt(m) tau),
    as produced by exp(-i H tau) with the same positive coupling used for the
    two-atom block.  m = 0 is the trivial one-dimensional identity.
    """
    if not isinstance(m, (int, np.integer)) or m < 0:
        raise ValueError(f"photon number must be a non-negative integer, got {m!r}")
    if m == 0:
        return np.eye(1, dtype=complex)
    c = math.cos(math.sqrt(m) * tau)
    s = math.sin(math.sqrt(m) * tau)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


@dataclass(frozen=True)
class ThreeQubitDensityMatrix:
    """8x8 reduced state of (A1, A2, B) plus the parameters that produced it.

    The matrix is Hermitian and positive semidefinite with trace
    ``1 - truncation deficit``; it is intentionally not renormalised so that
    truncation problems stay visible.
    """

    matrix: np.ndarray
    tau: float
    s: float
    theta: float
    n_max: int

    def trace(self) -> float:
        return float(np.real(np.trace(self.matrix)))


def _build_pattern_mask() -> np.ndarray:
    mask = np.zeros((8, 8), dtype=bool)
    for i in (0, 3, 4, 7):
        mask[i, i] = True
    for block in ((1, 2), (5, 6)):
        for i in block:
            for j in block:
                mask[i, j] = True
    for i, j in ((0, 5), (0, 6), (1, 7), (2, 7)):
        mask[i, j] = True
        mask[j, i] = True
    return mask


# Entries that can be nonzero in the reduced state: populations of the
# symmetric sector, the |000><101|-type coherences and the
# |100><111|-type coherences.  Everything else vanishes because each field
# component conserves photon number plus atomic excitation.
PATTERN_MASK = _build_pattern_mask()
PATTERN_MASK.setflags(write=False)


def pattern_violations(matrix: np.ndarray, tol: float = 1e-10) -> list[tuple[int, int, complex]]:
    """Entries outside the allowed zero pattern whose magnitude exceeds ``tol``."""
    out = []
    for i in range(8):
        for j in range(8):
            if not PATTERN_MASK[i, j] and abs(matrix[i, j]) > tol:
                out.append((i, j, complex(matrix[i, j])))
    return out


def _compensated_add(total: np.ndarray, carry: np.ndarray, delta: np.ndarray) -> None:
    """Neumaier update of ``total`` (+ ``carry``) by ``delta``, elementwise."""
    fresh = total + delta
    big = np.abs(total) >= np.abs(delta)
    carry += np.where(big, (total - fresh) + delta, (delta - fresh) + total)
    total[...] = fresh


@lru_cache(maxsize=32)
def _weight_tables(config: FieldConfig) -> tuple[np.ndarray, np.ndarray]:
    """Field weights regrouped by surviving photon numbers.

    ``W0[q, p]`` collects every diagonal-band weight whose c1/c2 cavities hold
    q = n - k and p = n - l photons; ``W1[q, p]`` does the same for the
    m = n + 1 coherence band.  Grouping is exact algebra; accumulation runs in
    ascending n with compensated summation.
    """
    size = config.n_max + 1
    w0 = np.zeros((size, size))
    c0 = np.zeros((size, size))
    w1 = np.zeros((size, size))
    c1 = np.zeros((size, size))
    for n in range(size):
        amps = binomial_amplitude_row(n, config.theta)
        norm0 = squeezed_weight(n, config.s) ** 2
        if norm0 != 0.0:
            rev_sq = (amps * amps)[::-1]
            _compensated_add(
                w0[: n + 1, : n + 1], c0[: n + 1, : n + 1], norm0 * np.outer(rev_sq, rev_sq)
            )
        if n + 1 < size:
            norm1 = squeezed_weight(n, config.s) * squeezed_weight(n + 1, config.s)
            if norm1 != 0.0:
                amps_next = binomial_amplitude_row(n + 1, config.theta)
                rev_pair = (amps * amps_next[: n + 1])[::-1]
                _compensated_add(
                    w1[: n + 1, : n + 1], c1[: n + 1, : n + 1], norm1 * np.outer(rev_pair, rev_pair)
                )
    w0 += c0
    w1 += c1
    w0.setflags(write=False)
    w1.setflags(write=False)
    return w0, w1


def _pair_block_amplitudes(tau: float, count: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Two-atom block amplitudes against photon number q = 0..count-1.

    Returns (stay, one_up, two_up): the amplitudes for the symmetric pair to
    absorb zero, one or two photons out of q.  The generic expressions
    reference sqrt(2(2q-1)), which only exists for q >= 1, so the empty-cavity
    entries (stay = 1, others 0) are set directly; at q = 1 the two-photon
    rung vanishes through its sqrt(q(q-1)) factor.
    """
    q = np.arange(count, dtype=float)
    stay = np.ones(count)
    one_up = np.zeros(count)
    two_up = np.zeros(count)
    if count > 1:
        qq = q[1:]
        f = np.sqrt(2.0 * (2.0 * qq - 1.0))
        cos_f = np.cos(f * tau)
        sin_f = np.sin(f * tau)
        denom = 2.0 * qq - 1.0
        stay[1:] = ((qq - 1.0) + qq * cos_f) / denom
        one_up[1:] = np.sqrt(qq) * sin_f / np.sqrt(denom)
        two_up[1:] = np.sqrt(qq * (qq - 1.0)) * (cos_f - 1.0) / denom
    return stay, one_up, two_up


def _fsum(values: np.ndarray) -> float:
    return math.fsum(values.ravel().tolist())


def closed_form_rho(tau: float, config: FieldConfig) -> ThreeQubitDensityMatrix:
    """Analytic 8x8 reduced state of the three qubits at interaction time tau.

    Populations come from the diagonal field band, the two surviving
    coherences from the m = n + 1 band.  With the exp(-i H tau) convention in
    both cavities the |000><101|-type coherence is minus the product of the
    four real block amplitudes; the |100><111|-type coherence is plus.
    """
    if tau < 0.0:
        raise ValueError(f"tau must be >= 0, got {tau}")
    w0, w1 = _weight_tables(config)
    size = config.n_max + 1

    # one extra slot so the shifted (q+1, p+1) bra factors of the coherence
    # band stay in range
    stay, one_up, two_up = _pair_block_amplitudes(tau, size + 1)
    root = np.sqrt(np.arange(size + 1, dtype=float))
    cos_b = np.cos(root * tau)
    sin_b = np.sin(root * tau)

    stay0, one0, two0 = stay[:size], one_up[:size], two_up[:size]
    cos0, sin0 = cos_b[:size], sin_b[:size]
    sin_up = sin_b[1:]

    r11 = _fsum(w0 * np.outer(stay0**2, cos0**2))
    r22 = _fsum(w0 * np.outer(one0**2, cos0**2))
    r33 = _fsum(w0 * np.outer(two0**2, cos0**2))
    r44 = _fsum(w0 * np.outer(stay0**2, sin0**2))
    r55 = _fsum(w0 * np.outer(one0**2, sin0**2))
    r66 = _fsum(w0 * np.outer(two0**2, sin0**2))
    r15 = -_fsum(w1 * np.outer(stay0 * one_up[1:], cos0 * sin_up))
    r26 = _fsum(w1 * np.outer(one0 * two_up[1:], cos0 * sin_up))

    m = np.zeros((8, 8), dtype=complex)
    m[0, 0] = r11
    m[3, 3] = r33
    m[4, 4] = r44
    m[7, 7] = r66
    for i in (1, 2):
        for j in (1, 2):
            m[i, j] = 0.5 * r22
    for i in (5, 6):
        for j in (5, 6):
            m[i, j] = 0.5 * r55
    coh15 = r15 / math.sqrt(2.0)
    coh26 = r26 / math.sqrt(2.0)
    for j in (5, 6):
        m[0, j] = coh15
        m[j, 0] = coh15
    for i in (1, 2):
        m[i, 7] = coh26
        m[7, i] = coh26
    return ThreeQubitDensityMatrix(m, float(tau), config.s, config.theta, config.n_max)


def diagonal_probabilities(rho: ThreeQubitDensityMatrix | np.ndarray) -> np.ndarray:
    """The eight basis-state occupation probabilities, in basis order."""
    matrix = getattr(rho, "matrix", rho)
    return np.real(np.diag(matrix)).copy()

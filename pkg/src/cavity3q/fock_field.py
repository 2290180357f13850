"""Weights of a two-mode squeezed field injected into a pair of cavities.

A two-mode squeezed vacuum with squeeze parameter ``s`` feeds two cavities,
one mode each, through beam splitters of mixing angle ``theta`` (reflection
coefficient ``cos(theta/2)``).  Tracing out the reflected beams leaves the
cavity pair in a mixed Fock-basis state in which each term

    |n-k, n-l><m-k, m-l|,   0 <= k, l <= min(n, m)

carries the real weight ``(tanh s)^(n+m) / cosh^2(s) * G_kl^nm(theta)``,
where ``G_kl^nm`` is a product of four binomial beam-splitter amplitudes and
``k``, ``l`` count photons lost to the reflected ports.  Only ``|n-m| <= 1``
terms survive the field trace of the reduced atomic dynamics, so enumeration
is organised by that band index.

Everything here is a pure function of its inputs.  Term iteration follows a
fixed (n, then k, then l) order so downstream sums are reproducible bit for
bit across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

__all__ = [
    "FieldConfig",
    "FieldTermWeight",
    "binomial_amplitude",
    "binomial_amplitude_row",
    "field_weight",
    "squeezed_weight",
    "enumerate_field_terms",
    "truncation_deficit",
]

# cos(theta/2) or sin(theta/2) below this is treated as an exact zero so the
# full-transmission (theta = pi) and full-reflection (theta = 0) selection
# rules hold exactly instead of leaving ~1e-17 residues under large binomials.
_HALF_ANGLE_SNAP = 1e-15


def _log_factorial(n: int) -> float:
    return math.lgamma(n + 1)


def _half_angle(theta: float) -> tuple[float, float]:
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    cos_half = math.cos(0.5 * theta)
    sin_half = math.sin(0.5 * theta)
    if abs(cos_half) < _HALF_ANGLE_SNAP:
        cos_half = 0.0
    if abs(sin_half) < _HALF_ANGLE_SNAP:
        sin_half = 0.0
    return cos_half, sin_half


@dataclass(frozen=True)
class FieldConfig:
    """Squeezed-field parameters and the Fock-space truncation.

    ``s`` is the squeeze parameter (>= 0), ``theta`` the beam-splitter angle
    in radians (0 = full reflection, pi = full transmission into the cavity)
    and ``n_max`` the largest squeezed-pair photon number kept in all sums.
    The truncated state is deliberately not renormalised; see
    `truncation_deficit` for the norm that is dropped.
    """

    s: float
    theta: float
    n_max: int

    def __post_init__(self) -> None:
        if self.s < 0.0:
            raise ValueError(f"squeeze parameter must be >= 0, got {self.s}")
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if not isinstance(self.n_max, (int, np.integer)) or self.n_max < 0:
            raise ValueError(f"n_max must be a non-negative integer, got {self.n_max!r}")


class FieldTermWeight(NamedTuple):
    """One term of the injected-field mixture: indices and its real weight."""

    n: int
    m: int
    k: int
    l: int
    weight: float


def binomial_amplitude(n: int, k: int, theta: float) -> float:
    """Amplitude ``sqrt(n!/(k!(n-k)!)) cos^k(theta/2) sin^(n-k)(theta/2)``.

    This is the beam-splitter amplitude for keeping ``k`` of ``n`` photons in
    the reflected port.  Evaluated in log space so it stays finite and
    accurate up to n ~ 160.
    """
    if not (isinstance(n, (int, np.integer)) and isinstance(k, (int, np.integer))):
        raise ValueError("indices must be integers")
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    cos_half, sin_half = _half_angle(theta)
    if k == 0:
        return sin_half**n
    if k == n:
        return cos_half**n
    if cos_half == 0.0 or sin_half == 0.0:
        return 0.0
    log_amp = (
        0.5 * (_log_factorial(n) - _log_factorial(k) - _log_factorial(n - k))
        + k * math.log(cos_half)
        + (n - k) * math.log(sin_half)
    )
    return math.exp(log_amp)


def binomial_amplitude_row(n: int, theta: float) -> np.ndarray:
    """All amplitudes for fixed ``n`` as an array indexed by ``k = 0..n``."""
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    cos_half, sin_half = _half_angle(theta)
    row = np.zeros(n + 1)
    if cos_half == 0.0:
        row[0] = sin_half**n
        return row
    if sin_half == 0.0:
        row[n] = cos_half**n
        return row
    k = np.arange(n + 1)
    log_fact = np.array([_log_factorial(i) for i in range(n + 1)])
    log_amp = (
        0.5 * (log_fact[n] - log_fact - log_fact[::-1])
        + k * math.log(cos_half)
        + (n - k) * math.log(sin_half)
    )
    np.exp(log_amp, out=row)
    return row


def field_weight(n: int, m: int, k: int, l: int, theta: float) -> float:
    """Four-amplitude product ``C_k^n C_k^m C_l^n C_l^m`` for one field term."""
    if k < 0 or l < 0 or k > min(n, m) or l > min(n, m):
        raise ValueError(f"need 0 <= k, l <= min(n, m), got n={n}, m={m}, k={k}, l={l}")
    return (
        binomial_amplitude(n, k, theta)
        * binomial_amplitude(m, k, theta)
        * binomial_amplitude(n, l, theta)
        * binomial_amplitude(m, l, theta)
    )


def squeezed_weight(n: int, s: float) -> float:
    """Amplitude ``(tanh s)^n / cosh(s)`` of the |n, n> squeezed-pair component."""
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    if s < 0.0:
        raise ValueError(f"squeeze parameter must be >= 0, got {s}")
    return math.tanh(s) ** n / math.cosh(s)


def enumerate_field_terms(config: FieldConfig, band: int) -> Iterator[FieldTermWeight]:
    """Yield the injected-field terms with ``m = n + band`` and nonzero weight.

    ``band`` selects ``|n - m|``; only 0 and 1 contribute to the reduced
    three-qubit state.  Only the upper family ``m = n + band`` is emitted:
    the mirrored ``m = n - band`` terms carry identical weights (the weight is
    symmetric under n <-> m) and consumers restore them through Hermitian
    completion.  Terms whose weight is exactly zero (full transmission kills
    every k > 0, zero squeezing kills every n > 0) are skipped.  Order is
    ascending n, then k, then l.
    """
    if band not in (0, 1):
        raise ValueError(f"band must be 0 or 1, got {band}")
    for n in range(config.n_max - band + 1):
        m = n + band
        norm = squeezed_weight(n, config.s) * squeezed_weight(m, config.s)
        if norm == 0.0:
            continue
        amps_n = binomial_amplitude_row(n, config.theta)
        amps_m = amps_n if band == 0 else binomial_amplitude_row(m, config.theta)
        pair = amps_n * amps_m[: n + 1]
        for k in range(n + 1):
            ck = pair[k]
            if ck == 0.0:
                continue
            for l in range(n + 1):
                w = norm * ck * pair[l]
                if w != 0.0:
                    yield FieldTermWeight(n, m, k, l, float(w))


def truncation_deficit(config: FieldConfig) -> float:
    """Norm lost by truncating the squeezed-pair sum at ``n_max``.

    Equals ``1 - sum_{n=0}^{n_max} (tanh s)^{2n} / cosh^2(s)``.  The tail is
    geometric, so this is computed in closed form as ``tanh(s)^(2 n_max + 2)``,
    which avoids the cancellation of subtracting a partial sum from 1.
    """
    t = math.tanh(config.s)
    return t ** (2 * config.n_max + 2)

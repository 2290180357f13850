"""Entanglement diagnostics for the three-qubit cavity state.

Provides the partial transposes (global, K-way restricted, and selective
two-qubit variants), the negativities built on them, the analytic pure-state
decomposition of the reduced state, the decomposition-based negativities that
flag bound entanglement, and the auxiliary measures (linear entropy, W-state
fidelity, Bell-sector weight).

All functions are pure and accept either a bare 8x8 ndarray or a
`ThreeQubitDensityMatrix`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .tavis_cummings import PATTERN_MASK, pattern_violations

__all__ = [
    "QubitLabel",
    "SELECTIVE_SPECS",
    "NEGATIVE_EIGENVALUE_CUTOFF",
    "PureStateDecomposition",
    "NegativityReport",
    "partial_transpose_global",
    "partial_transpose_kway",
    "selective_partial_transpose",
    "negative_eigenpairs",
    "negative_eigensum",
    "global_negativity",
    "analytic_negativity_b",
    "partial_kway_negativity",
    "decompose",
    "psdg_negativity",
    "psd_partial_negativity",
    "partial_trace",
    "linear_entropy",
    "w1_fidelity",
    "bell_projection_probability",
    "negativity_report",
    "W1_STATE",
]

# Eigenvalues in (-cutoff, 0) are treated as zero: 8x8 Hermitian solves carry
# O(1e-14) noise and the gate inequalities of the analytic negativity become
# fragile near equality.
NEGATIVE_EIGENVALUE_CUTOFF = 1e-12

_HERMITICITY_TOL = 1e-9
_PATTERN_TOL = 1e-8


class QubitLabel(Enum):
    """The three qubits, valued by their bit position in the flat basis index."""

    A1 = 0
    A2 = 1
    B = 2


# Selective two-qubit transposes: key -> (transposed qubit, partner qubit).
# "B-BA1" transposes B on exactly those elements where the B and A1 indices
# both change and A2 is a spectator, and so on.
SELECTIVE_SPECS: dict[str, tuple[QubitLabel, QubitLabel]] = {
    "B-BA1": (QubitLabel.B, QubitLabel.A1),
    "B-BA2": (QubitLabel.B, QubitLabel.A2),
    "A1-A1A2": (QubitLabel.A1, QubitLabel.A2),
    "A1-A1B": (QubitLabel.A1, QubitLabel.B),
}

_ROW, _COL = np.indices((8, 8))
_XOR = _ROW ^ _COL
_DIFF_COUNT = ((_XOR >> 0) & 1) + ((_XOR >> 1) & 1) + ((_XOR >> 2) & 1)

# Index maps implementing "swap bit b between row and column".
_SWAP_ROW = {}
_SWAP_COL = {}
for _b in range(3):
    _delta = (((_ROW >> _b) ^ (_COL >> _b)) & 1) << _b
    _SWAP_ROW[_b] = _ROW ^ _delta
    _SWAP_COL[_b] = _COL ^ _delta

_SQRT2 = math.sqrt(2.0)

_BASIS = np.eye(8, dtype=complex)
_SYM_GROUND = (_BASIS[1] + _BASIS[2]) / _SQRT2  # (|100> + |010>) / sqrt2
_SYM_EXCITED = (_BASIS[5] + _BASIS[6]) / _SQRT2  # (|101> + |011>) / sqrt2
_ASYM_GROUND = (_BASIS[1] - _BASIS[2]) / _SQRT2
_ASYM_EXCITED = (_BASIS[5] - _BASIS[6]) / _SQRT2

W1_STATE = (_BASIS[0] + _BASIS[5] + _BASIS[6]) / math.sqrt(3.0)
W1_STATE.setflags(write=False)


def _as_matrix(rho) -> np.ndarray:
    m = getattr(rho, "matrix", rho)
    m = np.asarray(m)
    if m.shape != (8, 8):
        raise ValueError(f"expected an 8x8 matrix, got shape {m.shape}")
    return m


def partial_transpose_global(rho, p: QubitLabel) -> np.ndarray:
    """Full partial transpose with respect to qubit ``p``."""
    m = _as_matrix(rho)
    b = p.value
    return m[_SWAP_ROW[b], _SWAP_COL[b]].copy()


def partial_transpose_kway(rho, p: QubitLabel, k: int) -> np.ndarray:
    """Transpose qubit ``p`` only on elements whose indices differ in exactly ``k`` slots."""
    if k not in (2, 3):
        raise ValueError(f"k must be 2 or 3, got {k}")
    m = _as_matrix(rho)
    b = p.value
    return np.where(_DIFF_COUNT == k, m[_SWAP_ROW[b], _SWAP_COL[b]], m)


def selective_partial_transpose(rho, spec: str) -> np.ndarray:
    """Two-way transpose restricted to one qubit pair, spectator untouched.

    ``spec`` is one of "B-BA1", "B-BA2", "A1-A1A2", "A1-A1B": the first label
    is the qubit being transposed, the pair names which two indices must both
    change for an element to be transposed.
    """
    if spec not in SELECTIVE_SPECS:
        raise ValueError(f"unknown selective transpose {spec!r}; options: {sorted(SELECTIVE_SPECS)}")
    p, q = SELECTIVE_SPECS[spec]
    m = _as_matrix(rho)
    b = p.value
    pair_mask = _XOR == ((1 << p.value) | (1 << q.value))
    return np.where(pair_mask, m[_SWAP_ROW[b], _SWAP_COL[b]], m)


def negative_eigenpairs(
    matrix, cutoff: float = NEGATIVE_EIGENVALUE_CUTOFF
) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues below ``-cutoff`` of a Hermitian matrix, with eigenvectors.

    Raises if the input is not Hermitian to 1e-9.  Returns the negative
    eigenvalues (ascending) and the matching eigenvectors as columns.
    """
    m = np.asarray(getattr(matrix, "matrix", matrix))
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if np.abs(m - m.conj().T).max() > _HERMITICITY_TOL:
        raise ValueError("input matrix is not Hermitian")
    vals, vecs = np.linalg.eigh((m + m.conj().T) / 2.0)
    keep = vals < -cutoff
    return vals[keep], vecs[:, keep]


def negative_eigensum(matrix: np.ndarray, cutoff: float = NEGATIVE_EIGENVALUE_CUTOFF) -> float:
    """Negativity of a Hermitian matrix: -2 times the sum of its negative eigenvalues."""
    vals, _ = negative_eigenpairs(matrix, cutoff)
    return -2.0 * math.fsum(vals.tolist())


def global_negativity(rho, p: QubitLabel) -> float:
    """Negativity of the global partial transpose with respect to qubit ``p``."""
    return negative_eigensum(partial_transpose_global(rho, p))


def _pattern_elements(m: np.ndarray, tol: float = _PATTERN_TOL) -> dict[str, float]:
    """Extract the eight independent real elements of the structured state.

    Validates the zero pattern, the symmetric-block equalities and realness;
    raises ValueError on violation.
    """
    bad = pattern_violations(m, tol)
    if bad:
        i, j, v = bad[0]
        raise ValueError(f"state does not have the expected zero pattern: entry [{i},{j}] = {v}")
    if np.abs(np.imag(m[PATTERN_MASK])).max() > tol:
        raise ValueError("state pattern requires real matrix elements")
    r22_entries = [m[1, 1], m[2, 2], m[1, 2], m[2, 1]]
    r55_entries = [m[5, 5], m[6, 6], m[5, 6], m[6, 5]]
    if (np.ptp(np.real(r22_entries)) > tol) or (np.ptp(np.real(r55_entries)) > tol):
        raise ValueError("state pattern requires equal entries across the symmetric blocks")
    return {
        "r11": float(np.real(m[0, 0])),
        "r22": float(np.real(m[1, 1] + m[2, 2] + m[1, 2] + m[2, 1])) / 2.0,
        "r33": float(np.real(m[3, 3])),
        "r44": float(np.real(m[4, 4])),
        "r55": float(np.real(m[5, 5] + m[6, 6] + m[5, 6] + m[6, 5])) / 2.0,
        "r66": float(np.real(m[7, 7])),
        "r15": float(np.real(m[0, 5] + m[0, 6])) / _SQRT2,
        "r26": float(np.real(m[1, 7] + m[2, 7])) / _SQRT2,
    }


def analytic_negativity_b(rho, cutoff: float = NEGATIVE_EIGENVALUE_CUTOFF) -> float:
    """Negativity with respect to B from the state's structure, no eigensolver.

    The partial transpose splits into two 2x2 blocks whose lower eigenvalues

        lam1 = (r33 + r55)/2 - sqrt((r33 - r55)^2 + 4 r26^2)/2
        lam2 = (r22 + r44)/2 - sqrt((r22 - r44)^2 + 4 r15^2)/2

    contribute -2*lam only while strictly negative (each gate is one block's
    discriminant inequality); all other eigenvalues are populations.
    """
    e = _pattern_elements(_as_matrix(rho))
    lam1 = 0.5 * (e["r33"] + e["r55"]) - 0.5 * math.hypot(e["r33"] - e["r55"], 2.0 * e["r26"])
    lam2 = 0.5 * (e["r22"] + e["r44"]) - 0.5 * math.hypot(e["r22"] - e["r44"], 2.0 * e["r15"])
    total = 0.0
    if lam1 < -cutoff:
        total += lam1
    if lam2 < -cutoff:
        total += lam2
    return -2.0 * total


def _projected_sum(matrix: np.ndarray, vectors: np.ndarray) -> float:
    """Sum of <v| matrix |v> over the columns of ``vectors`` (real part)."""
    if vectors.shape[1] == 0:
        return 0.0
    vals = np.einsum("ik,ij,jk->k", vectors.conj(), matrix, vectors)
    return math.fsum(np.real(vals).tolist())


def partial_kway_negativity(rho, p: QubitLabel, k: int) -> float:
    """Contribution of the k-way transpose to the global negativity for qubit ``p``.

    Projects the k-way transposed matrix (k = 2 or 3) onto the negative
    eigenvectors of the *global* transpose; k = 0 projects the state itself,
    giving the subtraction term of the split
    ``N_G = E_3 + E_2 - E_0``.
    """
    if k not in (0, 2, 3):
        raise ValueError(f"k must be 0, 2 or 3, got {k}")
    m = _as_matrix(rho)
    _, vecs = negative_eigenpairs(partial_transpose_global(m, p))
    target = m if k == 0 else partial_transpose_kway(m, p, k)
    return -2.0 * _projected_sum(target, vecs)


@dataclass(frozen=True)
class PureStateDecomposition:
    """Spectral decomposition of the reduced state into weighted pure states."""

    probabilities: np.ndarray
    vectors: np.ndarray  # unit columns, aligned with probabilities

    def __iter__(self):
        return iter(zip(self.probabilities, self.vectors.T))

    def __len__(self) -> int:
        return len(self.probabilities)

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * self.probabilities) @ self.vectors.conj().T


def _fix_phase(vec: np.ndarray) -> np.ndarray:
    """Deterministic phase: the largest-magnitude component is real positive."""
    idx = int(np.argmax(np.abs(vec)))
    pivot = vec[idx]
    if pivot == 0:
        return vec
    return vec * (abs(pivot) / pivot)


def _two_level_pairs(
    d_first: float, d_second: float, off: float, cutoff: float
) -> list[tuple[float, tuple[float, float]]]:
    """Eigenpairs of [[d_first, off], [off, d_second]], smaller eigenvalue first.

    With a negligible off-diagonal the basis vectors are returned unrotated
    (first basis vector first when also degenerate), which keeps the
    decomposition deterministic where the pair is degenerate.
    """
    if abs(off) < cutoff:
        if abs(d_first - d_second) < cutoff or d_first <= d_second:
            return [(d_first, (1.0, 0.0)), (d_second, (0.0, 1.0))]
        return [(d_second, (0.0, 1.0)), (d_first, (1.0, 0.0))]
    half_gap = 0.5 * math.hypot(d_first - d_second, 2.0 * off)
    mean = 0.5 * (d_first + d_second)
    pairs = []
    for lam in (mean - half_gap, mean + half_gap):
        # pick the better-conditioned of the two eigenvector formulas
        v_a = (off, lam - d_first)
        v_b = (lam - d_second, off)
        v = v_a if math.hypot(*v_a) >= math.hypot(*v_b) else v_b
        norm = math.hypot(*v)
        v = (v[0] / norm, v[1] / norm)
        if abs(v[0]) < abs(v[1]):
            sign = 1.0 if v[1] > 0 else -1.0
        else:
            sign = 1.0 if v[0] > 0 else -1.0
        pairs.append((lam, (sign * v[0], sign * v[1])))
    return pairs


def _generic_decomposition(m: np.ndarray) -> PureStateDecomposition:
    """Fallback: plain Hermitian eigendecomposition, ascending, fixed phases."""
    vals, vecs = np.linalg.eigh((m + m.conj().T) / 2.0)
    cols = [_fix_phase(vecs[:, i]) for i in range(vecs.shape[1])]
    probs = np.clip(vals, 0.0, None)
    return PureStateDecomposition(probs, np.column_stack(cols))


def decompose(rho, cutoff: float = NEGATIVE_EIGENVALUE_CUTOFF) -> PureStateDecomposition:
    """Pure-state decomposition of the structured reduced state.

    The state is block diagonal in the basis {|000>, sym|1>}, {sym|0>, |111>},
    |110>, |001> plus the two antisymmetric null directions, so six analytic
    eigenpairs (plus two zero-weight completions) suffice.  States without
    the expected zero pattern fall back to a generic eigendecomposition with
    eigenvalues ascending and phases fixed.
    """
    m = _as_matrix(rho)
    try:
        e = _pattern_elements(m)
    except ValueError:
        return _generic_decomposition(m)

    entries: list[tuple[float, np.ndarray]] = []
    for lam, (x, y) in _two_level_pairs(e["r11"], e["r55"], e["r15"], cutoff):
        entries.append((lam, x * _BASIS[0] + y * _SYM_EXCITED))
    for lam, (x, y) in _two_level_pairs(e["r22"], e["r66"], e["r26"], cutoff):
        entries.append((lam, x * _SYM_GROUND + y * _BASIS[7]))
    entries.append((e["r33"], _BASIS[3].copy()))
    entries.append((e["r44"], _BASIS[4].copy()))
    entries.append((0.0, _ASYM_GROUND.copy()))
    entries.append((0.0, _ASYM_EXCITED.copy()))

    probs = np.array([max(p, 0.0) for p, _ in entries])
    vectors = np.column_stack([_fix_phase(v) for _, v in entries])
    return PureStateDecomposition(probs, vectors)


def psdg_negativity(rho, p: QubitLabel) -> float:
    """Decomposition-weighted negativity ``sum_i p_i N_G^p(phi_i)``.

    Not an entanglement monotone, but an upper bound on the convex-roof
    negativity, so a nonzero value while the global negativity vanishes
    flags bound entanglement.
    """
    m = _as_matrix(rho)
    terms = []
    for prob, vec in decompose(m):
        if prob <= 0.0:
            continue
        pure = np.outer(vec, vec.conj())
        terms.append(prob * global_negativity(pure, p))
    return math.fsum(terms)


def psd_partial_negativity(rho, spec: str) -> float:
    """Pairwise share of the decomposition negativity via a selective transpose.

    For each decomposition state, the selectively transposed matrix is
    projected on the negative eigenvectors of that state's own two-way
    transpose with respect to the qubit named first in ``spec``; the -2 weight
    makes the pair of shares add up to the decomposition negativity.
    """
    if spec not in SELECTIVE_SPECS:
        raise ValueError(f"unknown selective transpose {spec!r}; options: {sorted(SELECTIVE_SPECS)}")
    p, _ = SELECTIVE_SPECS[spec]
    m = _as_matrix(rho)
    terms = []
    for prob, vec in decompose(m):
        if prob <= 0.0:
            continue
        pure = np.outer(vec, vec.conj())
        _, vecs = negative_eigenpairs(partial_transpose_kway(pure, p, 2))
        if vecs.shape[1] == 0:
            continue
        terms.append(prob * _projected_sum(selective_partial_transpose(pure, spec), vecs))
    return -2.0 * math.fsum(terms)


def partial_trace(rho, keep) -> np.ndarray:
    """Reduced density matrix over the given subset of qubits.

    ``keep`` is an iterable of QubitLabel.  Kept qubits retain their relative
    order (A1 fastest, B slowest) in the returned matrix.
    """
    keep_set = {QubitLabel(q) for q in keep}
    if not keep_set:
        raise ValueError("keep must name at least one qubit")
    m = _as_matrix(rho)
    # axes of the (2,2,2, 2,2,2) view: (B, A2, A1) x (B, A2, A1)
    tensor = m.reshape(2, 2, 2, 2, 2, 2)
    remaining = [QubitLabel.B, QubitLabel.A2, QubitLabel.A1]
    for q in (QubitLabel.B, QubitLabel.A2, QubitLabel.A1):
        if q in keep_set:
            continue
        axis = remaining.index(q)
        tensor = np.trace(tensor, axis1=axis, axis2=axis + tensor.ndim // 2)
        remaining.remove(q)
    dim = 2 ** len(keep_set)
    return tensor.reshape(dim, dim)


def linear_entropy(rho_reduced: np.ndarray) -> float:
    """Mixedness measure ``d/(d-1) (1 - tr rho^2)``: 0 pure, 1 maximally mixed."""
    m = np.asarray(rho_reduced)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("linear entropy needs a square matrix")
    d = m.shape[0]
    if d < 2:
        raise ValueError("linear entropy needs dimension >= 2")
    purity = float(np.real(np.trace(m @ m)))
    return (d / (d - 1.0)) * (1.0 - purity)


def w1_fidelity(rho) -> float:
    """Overlap with the W state (|000> + |101> + |011>)/sqrt(3)."""
    m = _as_matrix(rho)
    return float(np.real(W1_STATE.conj() @ m @ W1_STATE))


def bell_projection_probability(rho) -> float:
    """Weight of the {|000>, (|101>+|011>)/sqrt2} sector.

    This is the probability of the two decomposition states in which the c1
    pair, conditioned on finding B excited, is projected into the symmetric
    Bell state.
    """
    m = _as_matrix(rho)
    sym = float(np.real(_SYM_EXCITED.conj() @ m @ _SYM_EXCITED))
    return float(np.real(m[0, 0])) + sym


@dataclass(frozen=True)
class NegativityReport:
    """Every diagnostic evaluated at one (tau, s, theta) point."""

    n_g: dict[QubitLabel, float]
    n_g_b_analytic: float
    e_3: dict[QubitLabel, float]
    e_2: dict[QubitLabel, float]
    e_0: dict[QubitLabel, float]
    n_psdg: dict[QubitLabel, float]
    e_psd: dict[str, float]
    linear_entropy_b: float
    w1_fidelity: float
    bell_projection: float


def negativity_report(rho) -> NegativityReport:
    """Evaluate the full diagnostic suite, sharing the decomposition work."""
    m = _as_matrix(rho)

    n_g: dict[QubitLabel, float] = {}
    e_3: dict[QubitLabel, float] = {}
    e_2: dict[QubitLabel, float] = {}
    e_0: dict[QubitLabel, float] = {}
    for p in QubitLabel:
        vals, vecs = negative_eigenpairs(partial_transpose_global(m, p))
        n_g[p] = -2.0 * math.fsum(vals.tolist())
        e_3[p] = -2.0 * _projected_sum(partial_transpose_kway(m, p, 3), vecs)
        e_2[p] = -2.0 * _projected_sum(partial_transpose_kway(m, p, 2), vecs)
        e_0[p] = -2.0 * _projected_sum(m, vecs)

    decomposition = decompose(m)
    psdg_terms: dict[QubitLabel, list[float]] = {p: [] for p in QubitLabel}
    psd_terms: dict[str, list[float]] = {spec: [] for spec in SELECTIVE_SPECS}
    for prob, vec in decomposition:
        if prob <= 0.0:
            continue
        pure = np.outer(vec, vec.conj())
        for p in QubitLabel:
            psdg_terms[p].append(prob * global_negativity(pure, p))
        neg_vecs = {
            p: negative_eigenpairs(partial_transpose_kway(pure, p, 2))[1]
            for p in (QubitLabel.B, QubitLabel.A1)
        }
        for spec, (p, _) in SELECTIVE_SPECS.items():
            basis = neg_vecs[p]
            if basis.shape[1]:
                psd_terms[spec].append(
                    prob * _projected_sum(selective_partial_transpose(pure, spec), basis)
                )

    return NegativityReport(
        n_g=n_g,
        n_g_b_analytic=analytic_negativity_b(m),
        e_3=e_3,
        e_2=e_2,
        e_0=e_0,
        n_psdg={p: math.fsum(terms) for p, terms in psdg_terms.items()},
        e_psd={spec: -2.0 * math.fsum(terms) for spec, terms in psd_terms.items()},
        linear_entropy_b=linear_entropy(partial_trace(m, {QubitLabel.B})),
        w1_fidelity=w1_fidelity(m),
        bell_projection=bell_projection_probability(m),
    )

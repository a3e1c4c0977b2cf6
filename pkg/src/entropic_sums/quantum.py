"""Density operators, Ky Fan norms, quantum partial entropic sums, and partial fidelities.

All matrix functions go through Hermitian eigendecomposition; nothing here uses
series expansions. Decomposition failures surface as ``numpy.linalg.LinAlgError``.
"""

from __future__ import annotations

import numpy as np

from .classical import JointDistribution, ProbVector, partial_sum
from .entropy import AlphaLike

#: Hermiticity / unit-trace construction tolerance for density operators.
HERMITIAN_TOL = 1e-9
#: How far below zero an eigenvalue may sit before a matrix stops being PSD.
PSD_TOL = 1e-9
#: Largest commutator entry still counted as "commuting".
COMMUTATOR_TOL = 1e-9
#: Minimal separation for spectra products to count as nondegenerate.
SPECTRUM_GAP_TOL = 1e-8
#: Tolerance on the completeness (sum to identity) of POVM elements.
POVM_TOL = 1e-8
#: Eigenvalues below this are eigensolver noise on a unit-trace matrix and are
#: zeroed: entropy terms of order below 1 amplify a spurious 1e-16 residue to
#: residue**alpha, which would make exact projectors come out visibly nonzero.
EIGENVALUE_NOISE_FLOOR = 1e-13


def _as_matrix(x) -> np.ndarray:
    m = np.array(x, dtype=complex, copy=True)
    if m.ndim != 2 or m.size == 0:
        raise ValueError("expected a nonempty 2-d matrix")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    return m


class DensityOperator:
    """d x d complex Hermitian, positive semidefinite, unit-trace matrix."""

    def __init__(self, matrix):
        m = _as_matrix(matrix)
        if m.shape[0] != m.shape[1]:
            raise ValueError(f"density operator must be square, got shape {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL:
            raise ValueError("matrix is not Hermitian within tolerance")
        if abs(m.trace() - 1.0) > HERMITIAN_TOL:
            raise ValueError(f"trace must be 1, got {m.trace()}")
        if np.linalg.eigvalsh(m).min() < -PSD_TOL:
            raise ValueError("matrix has a negative eigenvalue beyond tolerance")
        m.flags.writeable = False
        self._matrix = m

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    def __repr__(self) -> str:
        return f"DensityOperator(dim={self.dim})"


class PureEnsemble:
    """Weighted collection of normalized pure states, stored as rows of kets."""

    def __init__(self, weights, states):
        self.weights = weights if isinstance(weights, ProbVector) else ProbVector(weights)
        st = np.array(states, dtype=complex, copy=True)
        if st.ndim != 2:
            raise ValueError("states must be a (n_states, dim) array of kets")
        if st.shape[0] != self.weights.dim:
            raise ValueError("need exactly one state per weight")
        norms = np.linalg.norm(st, axis=1)
        if np.max(np.abs(norms - 1.0)) > HERMITIAN_TOL:
            raise ValueError("every state must have unit norm")
        st.flags.writeable = False
        self.states = st

    @property
    def n_states(self) -> int:
        return self.states.shape[0]

    @property
    def dim(self) -> int:
        return self.states.shape[1]


class RankOnePOVM:
    """Rank-one measurement elements built from (not necessarily normalized) vectors.

    The outer products of the vectors must sum to the identity within
    ``POVM_TOL``.
    """

    def __init__(self, vectors):
        v = np.array(vectors, dtype=complex, copy=True)
        if v.ndim != 2 or v.size == 0:
            raise ValueError("POVM vectors must form a (n_outcomes, dim) array")
        frame = np.einsum("ja,jb->ab", v, v.conj())
        if np.max(np.abs(frame - np.eye(v.shape[1]))) > POVM_TOL:
            raise ValueError("POVM elements do not sum to the identity within tolerance")
        v.flags.writeable = False
        self.vectors = v

    @property
    def n_outcomes(self) -> int:
        return self.vectors.shape[0]

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]


def _check_k(k: int, top: int) -> int:
    if int(k) != k or not 1 <= k <= top:
        raise ValueError(f"k must be an integer in [1, {top}], got {k!r}")
    return int(k)


def eigenvalues_descending(rho: DensityOperator) -> ProbVector:
    """Spectrum of a density operator as a probability vector, largest first.

    Eigenvalues are clamped to [0, 1], zeroed below the solver-noise floor,
    and renormalized, so numerical residue never leaks into downstream
    entropy terms.
    """
    vals = np.linalg.eigvalsh(rho.matrix)[::-1]
    vals = np.clip(vals, 0.0, 1.0)
    vals[vals < EIGENVALUE_NOISE_FLOOR] = 0.0
    return ProbVector(vals / vals.sum())


def singular_values_descending(x) -> np.ndarray:
    """Singular values of an arbitrary matrix in decreasing order."""
    return np.linalg.svd(_as_matrix(x), compute_uv=False)


def ky_fan_norm(x, k: int) -> float:
    """Sum of the k largest singular values of a matrix.

    A norm for every fixed k: k = 1 is the operator norm, k = min(dim) the
    trace norm. For normal matrices the singular values are the absolute
    eigenvalues.
    """
    s = singular_values_descending(x)
    k = _check_k(k, s.size)
    return float(s[:k].sum())


def quantum_partial_sum(rho: DensityOperator, k: int, alpha: AlphaLike) -> float:
    """Sum of the k largest eigenvalue entropy terms of a density operator.

    Zero exactly when the state is a projector. Equals the classical partial
    sum applied to the spectrum, which is how it is computed.
    """
    return partial_sum(eigenvalues_descending(rho), k, alpha)


def ky_fan_distance(rho: DensityOperator, sigma: DensityOperator, k: int) -> float:
    """Ky Fan k-norm of the difference of two density operators."""
    if rho.dim != sigma.dim:
        raise ValueError(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    return ky_fan_norm(rho.matrix - sigma.matrix, k)


def tensor_product(rho: DensityOperator, omega: DensityOperator) -> DensityOperator:
    """Kronecker product state; its spectrum is the set of pairwise spectral products."""
    return DensityOperator(np.kron(rho.matrix, omega.matrix))


def partial_trace(rho_joint: DensityOperator, dims: tuple[int, int], keep: str = "A") -> DensityOperator:
    """Reduce a bipartite state to one factor.

    ``dims = (d_a, d_b)`` must factor the joint dimension; indexing is
    row-major with subsystem A as the slow index. ``keep`` selects the
    surviving factor, "A" or "B".
    """
    d_a, d_b = int(dims[0]), int(dims[1])
    if d_a < 1 or d_b < 1 or rho_joint.dim != d_a * d_b:
        raise ValueError(f"dims {dims} do not factor dimension {rho_joint.dim}")
    r = rho_joint.matrix.reshape(d_a, d_b, d_a, d_b)
    if keep == "A":
        reduced = np.einsum("imjm->ij", r)
    elif keep == "B":
        reduced = np.einsum("imin->mn", r)
    else:
        raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
    return DensityOperator(reduced)


def product_monotonicity_preconditions(rho_joint: DensityOperator, dims: tuple[int, int]) -> tuple[bool, bool]:
    """Hypotheses under which reduced-state partial sums are dominated by the joint state's.

    Returns ``(commuting, products_distinct)``: whether the joint state
    commutes with the product of its marginals, and whether the pairwise
    products of the marginal spectra are separated by more than
    ``SPECTRUM_GAP_TOL``. Exact degeneracy is meaningless in floating point,
    hence the gap criterion.
    """
    rho_a = partial_trace(rho_joint, dims, keep="A")
    rho_b = partial_trace(rho_joint, dims, keep="B")
    prod = np.kron(rho_a.matrix, rho_b.matrix)
    m = rho_joint.matrix
    commuting = bool(np.max(np.abs(m @ prod - prod @ m)) <= COMMUTATOR_TOL)
    a_vals = eigenvalues_descending(rho_a).values
    b_vals = eigenvalues_descending(rho_b).values
    products = np.sort(np.multiply.outer(a_vals, b_vals).ravel())
    if products.size > 1:
        products_distinct = bool(np.min(np.diff(products)) > SPECTRUM_GAP_TOL)
    else:
        products_distinct = True
    return commuting, products_distinct


def psd_sqrt(rho: DensityOperator) -> np.ndarray:
    """Unique positive square root, via Hermitian eigendecomposition."""
    vals, vecs = np.linalg.eigh(rho.matrix)
    vals = np.clip(vals, 0.0, None)
    return (vecs * np.sqrt(vals)) @ vecs.conj().T


def partial_fidelity(rho: DensityOperator, sigma: DensityOperator, k: int) -> float:
    """Tail sum of the decreasing singular values of sqrt(rho) sqrt(sigma).

    Sums the values from index k+1 through d, so k = 0 gives the full sum
    (the square root of the Uhlmann fidelity) and k = d gives 0. Nonincreasing
    in k.
    """
    if rho.dim != sigma.dim:
        raise ValueError(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    if int(k) != k or not 0 <= k <= rho.dim:
        raise ValueError(f"k must be an integer in [0, {rho.dim}], got {k!r}")
    s = singular_values_descending(psd_sqrt(rho) @ psd_sqrt(sigma))
    return float(s[int(k):].sum())


def density_from_ensemble(ensemble: PureEnsemble) -> DensityOperator:
    """Mix the ensemble's pure states with its weights."""
    w = ensemble.weights.values
    st = ensemble.states
    return DensityOperator(np.einsum("i,ia,ib->ab", w, st, st.conj()))


def povm_joint_probs(ensemble: PureEnsemble, povm: RankOnePOVM) -> JointDistribution:
    """Joint input/outcome probabilities ``weight_i * |<w_j|psi_i>|**2``.

    Completeness of the POVM makes the grid normalized, and the row marginals
    recover the ensemble weights.
    """
    if ensemble.dim != povm.dim:
        raise ValueError(f"dimension mismatch: states in dim {ensemble.dim}, POVM in dim {povm.dim}")
    amps = ensemble.states @ povm.vectors.conj().T
    probs = ensemble.weights.values[:, None] * np.abs(amps) ** 2
    return JointDistribution(probs / probs.sum())


def schmidt_pure_state(theta: float) -> DensityOperator:
    """Two-qubit pure state cos(theta)|00> + sin(theta)|11> as a density operator."""
    vec = np.zeros(4, dtype=complex)
    vec[0] = np.cos(theta)
    vec[3] = np.sin(theta)
    return DensityOperator(np.outer(vec, vec.conj()))

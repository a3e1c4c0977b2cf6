"""Probability vectors, top-k gauge sums, and classical partial entropic sums."""

from __future__ import annotations

import numpy as np

from .entropy import AlphaLike, as_alpha, entropy_term, entropy_term_argmax, q_log

#: Construction tolerance for simplex membership. Entries no lower than
#: -SIMPLEX_TOL are clamped to zero and the vector is renormalized, so
#: file-sourced distributions with rounding noise remain constructible.
SIMPLEX_TOL = 1e-9


class ProbVector:
    """Finite probability distribution on m points.

    Entries are clamped to be nonnegative and the vector is renormalized;
    inputs outside ``SIMPLEX_TOL`` of the simplex are rejected.
    """

    def __init__(self, values):
        arr = np.array(values, dtype=float, copy=True)
        if arr.ndim == 0:
            arr = arr.reshape(1)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("a probability vector must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(arr)):
            raise ValueError("probabilities must be finite")
        if np.any(arr < -SIMPLEX_TOL):
            raise ValueError("negative probability beyond tolerance")
        arr = np.clip(arr, 0.0, None)
        total = arr.sum()
        if abs(total - 1.0) > SIMPLEX_TOL:
            raise ValueError(f"probabilities sum to {total}, not 1")
        if abs(total - 1.0) > 1e-14:
            # dividing by a total that is already 1 to machine precision would
            # only inject rounding noise and break exact permutation symmetry
            arr = arr / total
        else:
            arr = np.minimum(arr, 1.0)
        arr.flags.writeable = False
        self._values = arr

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def dim(self) -> int:
        return self._values.size

    def __len__(self) -> int:
        return self._values.size

    def __repr__(self) -> str:
        return f"ProbVector({self._values.tolist()!r})"


class JointDistribution:
    """Joint probability grid with the same simplex conditions on the flat grid."""

    def __init__(self, values):
        arr = np.array(values, dtype=float, copy=True)
        if arr.ndim != 2 or arr.size == 0:
            raise ValueError("a joint distribution must be a nonempty 2-d grid")
        if not np.all(np.isfinite(arr)):
            raise ValueError("probabilities must be finite")
        if np.any(arr < -SIMPLEX_TOL):
            raise ValueError("negative probability beyond tolerance")
        arr = np.clip(arr, 0.0, None)
        total = arr.sum()
        if abs(total - 1.0) > SIMPLEX_TOL:
            raise ValueError(f"probabilities sum to {total}, not 1")
        if abs(total - 1.0) > 1e-14:
            arr = arr / total
        else:
            arr = np.minimum(arr, 1.0)
        arr.flags.writeable = False
        self._values = arr

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def rows(self) -> int:
        return self._values.shape[0]

    @property
    def cols(self) -> int:
        return self._values.shape[1]

    def flattened(self) -> ProbVector:
        """The grid read as a single distribution on rows * cols points."""
        return ProbVector(self._values.ravel())


def _as_prob(p) -> ProbVector:
    return p if isinstance(p, ProbVector) else ProbVector(p)


def _check_k(k: int, m: int) -> int:
    if int(k) != k or not 1 <= k <= m:
        raise ValueError(f"k must be an integer in [1, {m}], got {k!r}")
    return int(k)


def sum_largest_abs(x, k: int) -> float:
    """Sum of the k largest absolute values of a vector (the Ky Fan vector gauge).

    With k equal to the length this is the l1 norm; k = 1 gives the max norm.
    """
    arr = np.asarray(x, dtype=float).ravel()
    k = _check_k(k, arr.size)
    mags = np.sort(np.abs(arr))
    return float(mags[arr.size - k:].sum())


def partial_sum(p, k: int, alpha: AlphaLike) -> float:
    """Sum of the k largest per-entry entropy terms of a probability vector.

    At k = m this is the full entropy of order alpha. The k largest entropy
    terms are selected, not the terms of the k largest probabilities: the term
    function peaks strictly inside (0, 1), so the two orderings differ.
    """
    p = _as_prob(p)
    k = _check_k(k, p.dim)
    terms = np.sort(entropy_term(p.values, alpha))
    return float(terms[p.dim - k:].sum())


def kolmogorov_distance(p, q) -> float:
    """Half the l1 distance between two equal-length probability vectors."""
    p, q = _as_prob(p), _as_prob(q)
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")
    return 0.5 * float(np.abs(p.values - q.values).sum())


def partial_distance(p, q, k: int) -> float:
    """Sum of the k largest absolute coordinate differences of two distributions.

    Nondecreasing in k; at k = m it equals twice the Kolmogorov distance.
    """
    p, q = _as_prob(p), _as_prob(q)
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")
    return sum_largest_abs(p.values - q.values, k)


def marginal(r: JointDistribution, which: str) -> ProbVector:
    """Marginal distribution of the row index ("rows") or the column index ("columns")."""
    if which == "rows":
        return ProbVector(r.values.sum(axis=1))
    if which == "columns":
        return ProbVector(r.values.sum(axis=0))
    raise ValueError(f"axis selector must be 'rows' or 'columns', got {which!r}")


def max_partial_bounds(k: int, alpha: AlphaLike) -> tuple[float, float, float]:
    """Bracket for the maximum k-th partial sum over any simplex.

    Returns ``(lower, upper, relative_error_cap)``. For k = 1 both bracket
    ends carry the exact one-term maximum and the cap is 0; for k >= 2 the
    bracket is ``(q_log(k), q_log(k+1))`` with relative error capped by
    ``1/(k**alpha * q_log(k+1))``.
    """
    a = as_alpha(alpha)
    if int(k) != k or k < 1:
        raise ValueError("k must be a positive integer")
    if k == 1:
        exact = entropy_term(entropy_term_argmax(a), a)
        return exact, exact, 0.0
    lower = q_log(float(k), a)
    upper = q_log(float(k + 1), a)
    return lower, upper, 1.0 / (k ** a.value * upper)


def instability_example(eps: float) -> tuple[float, float, float]:
    """Top-term and total-entropy deviations near the two-point uniform distribution.

    For the pair ((1-eps)/2, (1+eps)/2) against (1/2, 1/2) at order 1, returns
    ``(delta1, delta2, delta1/delta2)`` where delta1 is the change of the
    largest entropy term and delta2 the change of the total entropy. The ratio
    grows like (1 - log 2)/eps, so the top term is unstable relative to the
    total.
    """
    eps = float(eps)
    if not 0.0 < eps < 1.0:
        raise ValueError("eps must lie strictly between 0 and 1")
    log1m = np.log1p(-eps)
    log1p_ = np.log1p(eps)
    delta1 = (-(1.0 - eps) * log1m - eps * np.log(2.0)) / 2.0
    delta2 = ((1.0 + eps) * log1p_ + (1.0 - eps) * log1m) / 2.0
    return float(delta1), float(delta2), float(delta1 / delta2)

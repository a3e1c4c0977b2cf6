"""Random instance generators and the simplex partial-sum maximizer.

All generators take a ``numpy.random.Generator`` (the package standardizes on
NumPy's seedable PCG64 streams) so sweeps are reproducible bit for bit.
"""

from __future__ import annotations

import numpy as np

from .classical import ProbVector
from .entropy import AlphaLike, as_alpha, entropy_term
from .quantum import DensityOperator, PureEnsemble, RankOnePOVM, ky_fan_norm


def sample_simplex(m: int, rng: np.random.Generator) -> ProbVector:
    """Uniform draw from the m-point simplex via normalized exponentials."""
    if int(m) != m or m < 1:
        raise ValueError("m must be a positive integer")
    g = rng.exponential(size=int(m))
    return ProbVector(g / g.sum())


def sample_density(d: int, rng: np.random.Generator) -> DensityOperator:
    """Random density operator from a square complex Gaussian matrix G: G G*/tr."""
    if int(d) != d or d < 1:
        raise ValueError("d must be a positive integer")
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    m = g @ g.conj().T
    return DensityOperator(m / m.trace())


def sample_state_vector(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random normalized ket of dimension d."""
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def sample_ensemble(d: int, n_states: int, rng: np.random.Generator) -> PureEnsemble:
    """Random weights on random normalized pure states."""
    weights = sample_simplex(n_states, rng)
    states = np.array([sample_state_vector(d, rng) for _ in range(n_states)])
    return PureEnsemble(weights, states)


def sample_povm(d: int, n_outcomes: int, rng: np.random.Generator) -> RankOnePOVM:
    """Rank-one POVM from random vectors, normalized by their frame operator.

    Draws n_outcomes >= d Gaussian vectors v_j and returns S**(-1/2) v_j where
    S is the sum of their outer products, which makes the elements complete by
    construction.
    """
    if n_outcomes < d:
        raise ValueError("completeness needs at least d outcomes")
    v = rng.standard_normal((n_outcomes, d)) + 1j * rng.standard_normal((n_outcomes, d))
    frame = np.einsum("ja,jb->ab", v, v.conj())
    vals, vecs = np.linalg.eigh(frame)
    inv_half = (vecs * vals ** -0.5) @ vecs.conj().T
    return RankOnePOVM(v @ inv_half.T)


def basis_povm(d: int) -> RankOnePOVM:
    """Projective measurement onto the computational basis."""
    return RankOnePOVM(np.eye(d))


def sample_near(obj, epsilon: float, rng: np.random.Generator):
    """Mix the input with an independent fresh sample so the full distance
    (l1 for distributions, trace norm for density operators) stays within epsilon.

    Mixing keeps the result inside the simplex or the PSD cone by construction;
    epsilon = 0 returns the input and a large epsilon recovers the fresh sample.
    """
    eps = float(epsilon)
    if eps < 0.0:
        raise ValueError("epsilon must be nonnegative")
    if isinstance(obj, ProbVector):
        fresh = sample_simplex(obj.dim, rng)
        dist = float(np.abs(fresh.values - obj.values).sum())
        t = 1.0 if dist <= eps else eps / dist
        return ProbVector(obj.values + t * (fresh.values - obj.values))
    if isinstance(obj, DensityOperator):
        fresh = sample_density(obj.dim, rng)
        diff = fresh.matrix - obj.matrix
        dist = ky_fan_norm(diff, obj.dim)
        t = 1.0 if dist <= eps else eps / dist
        return DensityOperator(obj.matrix + t * diff)
    raise TypeError("expected a ProbVector or a DensityOperator")


def maximize_partial_sum(m: int, k: int, alpha: AlphaLike, restarts: int = 100,
                         seed: int = 0, max_steps: int = 2000) -> tuple[float, ProbVector]:
    """Random-restart hill climb for the maximal k-th partial sum over the m-simplex.

    Moves mass between random coordinate pairs (which preserves the simplex
    exactly) with a shrinking step, restarting from fresh uniform draws on
    independent substreams of the seed. Returns the best value and its vector.
    Heuristic only: no global-optimality guarantee.
    """
    a = as_alpha(alpha)
    if int(m) != m or m < 1:
        raise ValueError("m must be a positive integer")
    if int(k) != k or not 1 <= k <= m:
        raise ValueError(f"k must be an integer in [1, {m}]")
    if restarts < 1:
        raise ValueError("restarts must be >= 1")

    def value(vec: np.ndarray) -> float:
        terms = np.sort(entropy_term(vec, a))
        return float(terms[m - k:].sum())

    best_val = -1.0
    best_vec: np.ndarray | None = None
    for restart in range(restarts):
        rng = np.random.default_rng([int(seed), restart])
        p = rng.exponential(size=m)
        p /= p.sum()
        val = value(p)
        step = 0.5
        steps = 0
        while step > 1e-7 and steps < max_steps:
            improved = False
            for _ in range(6 * m):
                steps += 1
                i, j = rng.integers(m), rng.integers(m)
                if i == j:
                    continue
                t = step * rng.random() * p[j]
                q = p.copy()
                q[j] -= t
                q[i] += t
                v = value(q)
                if v > val:
                    p, val = q, v
                    improved = True
                if steps >= max_steps:
                    break
            if not improved:
                step *= 0.5
        if val > best_val:
            best_val = val
            best_vec = p
    return best_val, ProbVector(best_vec)

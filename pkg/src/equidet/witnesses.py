"""Worked-example generators, special-linear transforms, and seeded random
search for configurations with nonzero system determinant.

Everything random is driven by explicit 64-bit seeds through
``random.Random``; identical arguments always reproduce identical output,
and parallel trial evaluation returns exactly the sequential result.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from itertools import combinations

from .combinat import subsets_colex
from .detmap import det_sr
from .exact import Matrix, kernel_basis
from .tensors import CoefficientSystem, ForceSystem, VectorConfiguration


def _cross(u, w):
    return (
        u[1] * w[2] - u[2] * w[1],
        u[2] * w[0] - u[0] * w[2],
        u[0] * w[1] - u[1] * w[0],
    )


def cross_product_forces(points) -> ForceSystem:
    """Triple-interaction forces in 3-space from particle positions:
    F at (i, j, k) is (p_j - p_i) x (p_k - p_i)."""
    points = [tuple(p) for p in points]
    if any(len(p) != 3 for p in points):
        raise ValueError("cross-product forces need points in 3-space")
    q = len(points)
    if q < 3:
        raise ValueError(f"need at least 3 points, got {q}")
    canonical = {}
    for key in subsets_colex(q, 3):
        i, j, k = key
        pi, pj, pk = points[i - 1], points[j - 1], points[k - 1]
        u = tuple(a - b for a, b in zip(pj, pi))
        w = tuple(a - b for a, b in zip(pk, pi))
        canonical[key] = _cross(u, w)
    return ForceSystem(3, 3, q, canonical)


def _wedge(u, w, pairs):
    return tuple(u[a - 1] * w[b - 1] - u[b - 1] * w[a - 1] for a, b in pairs)


def wedge_forces(s: int, vectors) -> ForceSystem:
    """Triple-interaction forces valued in the C(s,2)-dimensional space of
    wedge products: F at (i, j, k) is vi^vj + vj^vk + vk^vi, written in the
    colex-ordered basis of coordinate pairs."""
    if s < 3:
        raise ValueError(f"need source dimension >= 3, got {s}")
    d = comb(s, 2)
    q = 3 * d
    vectors = [tuple(v) for v in vectors]
    if len(vectors) != q:
        raise ValueError(f"need exactly 3*C({s},2) = {q} vectors, got {len(vectors)}")
    if any(len(v) != s for v in vectors):
        raise ValueError(f"vectors must have length {s}")
    pairs = subsets_colex(s, 2)
    canonical = {}
    for key in subsets_colex(q, 3):
        i, j, k = key
        vi, vj, vk = vectors[i - 1], vectors[j - 1], vectors[k - 1]
        parts = (_wedge(vi, vj, pairs), _wedge(vj, vk, pairs), _wedge(vk, vi, pairs))
        canonical[key] = tuple(sum(col) for col in zip(*parts))
    return ForceSystem(3, d, q, canonical)


def difference_configuration(points) -> VectorConfiguration:
    """Pair configuration v at (i, j) = p_j - p_i from exactly 2d points in d-space."""
    points = [tuple(p) for p in points]
    if not points:
        raise ValueError("no points given")
    d = len(points[0])
    if any(len(p) != d for p in points):
        raise ValueError("points must all have the same dimension")
    if len(points) != 2 * d:
        raise ValueError(f"need exactly 2d = {2 * d} points, got {len(points)}")
    entries = {}
    for key in subsets_colex(2 * d, 2):
        i, j = key
        entries[key] = tuple(a - b for a, b in zip(points[j - 1], points[i - 1]))
    return VectorConfiguration(2, d, 2 * d, entries)


def affine_dependence_lambda(vectors):
    """Exact weights, not all zero and with at least three nonzero, summing to
    zero and combining the vectors to zero.

    Solves the homogeneous (s+1) x q system by exact kernel computation, then
    retries small deterministic combinations of kernel basis vectors until at
    least three coordinates are nonzero.
    """
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise ValueError("no vectors given")
    s = len(vectors[0])
    q = len(vectors)
    if any(len(v) != s for v in vectors):
        raise ValueError("vectors must all have the same dimension")
    rows = [[vectors[i][c] for i in range(q)] for c in range(s)]
    rows.append([1] * q)
    basis = kernel_basis(Matrix(rows))
    # basis vectors use distinct free coordinates, so any sum of three of them
    # already has three nonzeros; smaller kernels fall back to pair sums
    for size in (1, 2, 3):
        for combo in combinations(range(len(basis)), size):
            cand = [sum(basis[b][i] for b in combo) for i in range(q)]
            if sum(1 for x in cand if x != 0) >= 3:
                return [Fraction(x) for x in cand]
    raise ValueError("no weight vector with three nonzero coordinates exists for these vectors")


def random_unimodular(d: int, seed: int) -> Matrix:
    """Deterministic integer matrix with determinant exactly 1: a product of
    a bounded number of random elementary shears."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if d == 1:
        return Matrix([[1]])
    rng = random.Random(seed)
    g = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    for _ in range(2 * d + 2):
        i, j = rng.sample(range(d), 2)
        c = rng.choice((-3, -2, -1, 1, 2, 3))
        g[i] = [a + c * b for a, b in zip(g[i], g[j])]
    return Matrix(g)


def sl_transform(v: VectorConfiguration, g: Matrix) -> VectorConfiguration:
    """Apply a d x d matrix to every stored vector of a configuration."""
    if g.rows != v.d or g.cols != v.d:
        raise ValueError(f"transform must be {v.d}x{v.d}, got {g.rows}x{g.cols}")
    entries = {key: tuple(g.mul_vec(list(vec))) for key, vec in v.entries.items()}
    return VectorConfiguration(v.r, v.d, v.q, entries)


def random_configuration(r: int, d: int, bound: int, rng, q=None) -> VectorConfiguration:
    """Configuration with every slot an integer vector uniform in [-bound, bound]."""
    if q is None:
        q = r * d
    entries = {
        key: tuple(rng.randint(-bound, bound) for _ in range(d))
        for key in subsets_colex(q, r)
    }
    return VectorConfiguration(r, d, q, entries)


def random_force_system(r: int, d: int, q: int, bound: int, rng) -> ForceSystem:
    """Force system with random integer canonical entries in [-bound, bound]."""
    canonical = {
        key: tuple(rng.randint(-bound, bound) for _ in range(d))
        for key in subsets_colex(q, r)
    }
    return ForceSystem(r, d, q, canonical)


def random_coefficients(r: int, q: int, bound: int, rng) -> CoefficientSystem:
    """Coefficient family with random integer canonical values in [-bound, bound]."""
    canonical = {key: rng.randint(-bound, bound) for key in subsets_colex(q, r)}
    return CoefficientSystem(r, q, canonical)


@dataclass(frozen=True)
class WitnessReport:
    r: int
    d: int
    trials: int
    nonzero_count: int
    first_witness: VectorConfiguration | None
    seed: int


def _witness_trial(args):
    r, d, bound, child_seed = args
    cfg = random_configuration(r, d, bound, random.Random(child_seed))
    return det_sr(cfg) != 0, cfg


def witness_search(r: int, d: int, trials: int, bound: int, seed: int, parallel: bool = False) -> WitnessReport:
    """Evaluate the system determinant on ``trials`` random integer
    configurations and report how many were nonzero.

    Each trial draws from its own child seed derived from ``seed``, so the
    report is identical whether trials run sequentially or in parallel, and
    the first witness is always the lowest-index nonzero trial.
    """
    if trials < 1:
        raise ValueError(f"need trials >= 1, got {trials}")
    if bound < 1:
        raise ValueError(f"need bound >= 1, got {bound}")
    rng = random.Random(seed)
    jobs = [(r, d, bound, rng.getrandbits(64)) for _ in range(trials)]
    if parallel:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_witness_trial, jobs))
    else:
        results = [_witness_trial(job) for job in jobs]
    nonzero_count = sum(1 for hit, _ in results if hit)
    first_witness = next((cfg for hit, cfg in results if hit), None)
    return WitnessReport(
        r=r,
        d=d,
        trials=trials,
        nonzero_count=nonzero_count,
        first_witness=first_witness,
        seed=seed,
    )

"""Building and deciding the q-particle rescaling problem.

For a force system on q particles there is one d-row vector equation per
(r-1)-subset M of {1..q}: the unknown attached to M + {i} multiplies the
force value read at the written order M + (i,).  The solver always works
with the full system, so its correctness never leans on the redundancy
structure; the reduced system (equations avoiding particle q) is built
alongside and their agreement is checked, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import insert_position, subsets_colex
from .detmap import det_sr
from .exact import Matrix, kernel_basis, rank_exact
from .tensors import CoefficientSystem, ForceSystem


@dataclass(frozen=True)
class EquilibriumSystem:
    r: int
    d: int
    q: int
    full_matrix: Matrix
    reduced_matrix: Matrix
    row_labels: tuple  # ((r-1)-tuple, coordinate) for the full matrix
    col_labels: tuple  # r-tuples


def build_equilibrium_system(f: ForceSystem) -> EquilibriumSystem:
    """All per-tuple force-balance equations for ``f``, full and reduced."""
    r, d, q = f.r, f.d, f.q
    col_labels = subsets_colex(q, r)
    col_index = {t: j for j, t in enumerate(col_labels)}
    eq_tuples = subsets_colex(q, r - 1)
    row_labels = tuple((m, coord) for m in eq_tuples for coord in range(1, d + 1))
    data = [[0] * len(col_labels) for _ in row_labels]
    for block, m in enumerate(eq_tuples):
        members = set(m)
        base = block * d
        for i in range(1, q + 1):
            if i in members:
                continue
            vec = f.get(m + (i,))
            j = col_index[tuple(sorted(m + (i,)))]
            for coord in range(d):
                data[base + coord][j] = vec[coord]
    reduced = [
        data[block * d + coord]
        for block, m in enumerate(eq_tuples)
        if q not in m
        for coord in range(d)
    ]
    return EquilibriumSystem(
        r=r,
        d=d,
        q=q,
        full_matrix=Matrix(data),
        reduced_matrix=Matrix(reduced),
        row_labels=row_labels,
        col_labels=col_labels,
    )


def solve_nontrivial(f: ForceSystem):
    """A nonzero symmetric coefficient family solving every equation exactly,
    or None when only the trivial rescaling works."""
    system = build_equilibrium_system(f)
    basis = kernel_basis(system.full_matrix)
    if not basis:
        return None
    vec = basis[0]
    canonical = {t: x for t, x in zip(system.col_labels, vec) if x}
    return CoefficientSystem(f.r, f.q, canonical)


def residual(f: ForceSystem, lam: CoefficientSystem) -> Fraction:
    """Largest absolute coordinate over all equations evaluated at ``lam``;
    exactly zero iff ``lam`` solves the system."""
    if lam.r != f.r or lam.q != f.q:
        raise ValueError(
            f"arity mismatch: coefficients are (r={lam.r}, q={lam.q}), forces are (r={f.r}, q={f.q})"
        )
    worst = Fraction(0)
    for m in subsets_colex(f.q, f.r - 1):
        total = [Fraction(0)] * f.d
        members = set(m)
        for i in range(1, f.q + 1):
            if i in members:
                continue
            c = lam.get(m + (i,))
            if not c:
                continue
            vec = f.get(m + (i,))
            for coord in range(f.d):
                total[coord] += c * vec[coord]
        for x in total:
            if abs(x) > worst:
                worst = abs(x)
    return Fraction(worst)


def row_dependence_holds(f: ForceSystem) -> bool:
    """Structural redundancy of the equation rows themselves.

    For every (r-2)-subset N, the combination of row blocks
    sum over i of (-1) ** (r - 1 - p) * rows(sorted(N + {i}))  (p the slot of
    i in the sorted tuple) is the zero row, for any force system.  This is
    what justifies dropping the equations that mention particle q.
    """
    system = build_equilibrium_system(f)
    r, d, q = f.r, f.d, f.q
    if r < 2:
        return True
    eq_tuples = subsets_colex(q, r - 1)
    block_index = {m: b for b, m in enumerate(eq_tuples)}
    ncols = len(system.col_labels)
    rows = system.full_matrix.data
    for anchor in subsets_colex(q, r - 2):
        acc = [[0] * ncols for _ in range(d)]
        members = set(anchor)
        for i in range(1, q + 1):
            if i in members:
                continue
            sign = -1 if (r - 1 - insert_position(anchor, i)) & 1 else 1
            base = block_index[tuple(sorted(anchor + (i,)))] * d
            for coord in range(d):
                row = rows[base + coord]
                target = acc[coord]
                for j in range(ncols):
                    target[j] += sign * row[j]
        if any(x != 0 for row in acc for x in row):
            return False
    return True


@dataclass(frozen=True)
class ConsistencyReport:
    det_value: Fraction
    kernel_dim: int
    consistent: bool
    reduced_matches_full: bool


def theorem_consistency(f: ForceSystem) -> ConsistencyReport:
    """Cross-check the determinant criterion against direct kernel computation.

    Requires q = r*d.  ``consistent`` records whether (determinant == 0)
    coincides with the full system having a nontrivial kernel;
    ``reduced_matches_full`` whether dropping the particle-q equations
    changed nothing (equal ranks and every reduced-kernel vector solving the
    full system).
    """
    if f.q != f.r * f.d:
        raise ValueError(f"criterion needs q = r*d, got q={f.q} with r={f.r}, d={f.d}")
    system = build_equilibrium_system(f)
    det_value = det_sr(f.to_configuration())
    kernel = kernel_basis(system.full_matrix)
    consistent = (det_value == 0) == (len(kernel) > 0)
    reduced_ok = rank_exact(system.full_matrix) == rank_exact(system.reduced_matrix)
    if reduced_ok:
        for vec in kernel_basis(system.reduced_matrix):
            if any(x != 0 for x in system.full_matrix.mul_vec(vec)):
                reduced_ok = False
                break
    return ConsistencyReport(
        det_value=det_value,
        kernel_dim=len(kernel),
        consistent=consistent,
        reduced_matches_full=reduced_ok,
    )

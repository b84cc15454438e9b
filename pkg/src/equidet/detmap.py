"""The square interaction system and its exact determinant.

A configuration on q = r*d particles yields one d-row vector equation per
(r-1)-subset M of {1..q-1}: the unknown attached to tuple M + {i} enters
with sign (-1) ** (i + p), where p is the 1-based slot i takes inside the
sorted tuple.  Equations whose tuple contains q are redundant (see
:func:`check_dependence_relations`) and are dropped, which makes the matrix
square: d * C(q-1, r-1) = C(q, r).  The determinant of that matrix is the
configuration invariant computed by :func:`det_sr`; it is linear in every
slot and vanishes whenever all r-subsets of some (r+1) particles share one
vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import insert_position, subsets_colex
from .exact import Matrix, det_exact
from .tensors import CoefficientSystem, ForceSystem, VectorConfiguration


@dataclass(frozen=True)
class SystemMatrix:
    """Square system with labeled rows ((r-1)-tuple, coordinate) and columns (r-tuples)."""

    matrix: Matrix
    row_labels: tuple
    col_labels: tuple


def term_sign(equation_tuple, i: int) -> int:
    """Sign of the tuple-(M + {i}) term inside equation M."""
    return -1 if (i + insert_position(equation_tuple, i)) & 1 else 1


def build_system_matrix(v: VectorConfiguration) -> SystemMatrix:
    """Assemble the square system for a configuration with q = r*d."""
    r, d, q = v.r, v.d, v.q
    if q != r * d:
        raise ValueError(f"square system needs q = r*d, got q={q} with r={r}, d={d}")
    col_labels = subsets_colex(q, r)
    col_index = {t: j for j, t in enumerate(col_labels)}
    eq_tuples = subsets_colex(q - 1, r - 1)
    row_labels = tuple((m, coord) for m in eq_tuples for coord in range(1, d + 1))
    data = [[0] * len(col_labels) for _ in row_labels]
    for block, m in enumerate(eq_tuples):
        members = set(m)
        base = block * d
        for i in range(1, q + 1):
            if i in members:
                continue
            key = tuple(sorted(m + (i,)))
            vec = v.get(key)
            j = col_index[key]
            if term_sign(m, i) > 0:
                for coord in range(d):
                    data[base + coord][j] = vec[coord]
            else:
                for coord in range(d):
                    data[base + coord][j] = -vec[coord]
    return SystemMatrix(Matrix(data), row_labels, col_labels)


def det_sr(v: VectorConfiguration) -> Fraction:
    """Exact determinant of the square system built from ``v``."""
    return det_exact(build_system_matrix(v).matrix)


def equation_value(v: VectorConfiguration, lam: CoefficientSystem, equation_tuple):
    """Left-hand side of the equation for one (r-1)-tuple, as a d-vector."""
    total = [Fraction(0)] * v.d
    members = set(equation_tuple)
    for i in range(1, v.q + 1):
        if i in members:
            continue
        key = tuple(sorted(equation_tuple + (i,)))
        c = lam.get(key)
        if not c:
            continue
        c = c if term_sign(equation_tuple, i) > 0 else -c
        vec = v.get(key)
        for coord in range(v.d):
            total[coord] += c * vec[coord]
    return total


def _configuration_relations_hold(v: VectorConfiguration, lam: CoefficientSystem) -> bool:
    # For each (r-2)-subset N, the signed sum over j of the equations for
    # N + {j} cancels term by term: tuple N + {j, i} appears once via j and
    # once via i, with opposite signs.
    r, d, q = v.r, v.d, v.q
    for anchor in subsets_colex(q, r - 2):
        total = [Fraction(0)] * d
        members = set(anchor)
        for j in range(1, q + 1):
            if j in members:
                continue
            rel_sign = -1 if (j + insert_position(anchor, j)) & 1 else 1
            eq = tuple(sorted(anchor + (j,)))
            value = equation_value(v, lam, eq)
            for coord in range(d):
                total[coord] += rel_sign * value[coord]
        if any(total):
            return False
    return True


def _force_relations_hold(f: ForceSystem, lam: CoefficientSystem) -> bool:
    # Anchored at each (r-2)-subset N: summing, over i, the equation written
    # in the order N + (i,) makes every term cancel against its (i, j)-swap,
    # because the forces are antisymmetric and the coefficients symmetric.
    r, d, q = f.r, f.d, f.q
    for anchor in subsets_colex(q, r - 2):
        total = [Fraction(0)] * d
        members = set(anchor)
        for i in range(1, q + 1):
            if i in members:
                continue
            for j in range(1, q + 1):
                if j in members or j == i:
                    continue
                idx = anchor + (i, j)
                c = lam.get(idx)
                if not c:
                    continue
                vec = f.get(idx)
                for coord in range(d):
                    total[coord] += c * vec[coord]
        if any(total):
            return False
    return True


def check_dependence_relations(v, lam: CoefficientSystem) -> bool:
    """True iff every redundancy identity among the equations evaluates to the
    exact zero vector at (v, lam).

    Accepts a :class:`VectorConfiguration` (signed-tuple equations) or a
    :class:`ForceSystem` (raw antisymmetric equations).  The identities hold
    for every input; a False return means the sign conventions were broken.
    """
    if lam.r != v.r or lam.q != v.q:
        raise ValueError(
            f"arity mismatch: coefficients are (r={lam.r}, q={lam.q}), input is (r={v.r}, q={v.q})"
        )
    if v.r < 2:
        return True
    if isinstance(v, ForceSystem):
        return _force_relations_hold(v, lam)
    return _configuration_relations_hold(v, lam)

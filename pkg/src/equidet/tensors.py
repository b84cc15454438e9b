"""Force, coefficient, and configuration tensors indexed by sorted tuples.

Canonical values are stored on strictly increasing index tuples only; the
accessors supply full antisymmetry (forces) or full symmetry (coefficients),
so those invariants are structural rather than duplicated in storage.
Absent tuples read as zero.  Instances are treated as immutable after
construction.
"""

from __future__ import annotations

from fractions import Fraction

from .combinat import check_sorted_tuple


def _sort_with_sign(idx):
    """Sort an index sequence; return (sorted tuple, sign), sign 0 on repeats."""
    idx = tuple(idx)
    inversions = 0
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] == idx[j]:
                return tuple(sorted(idx)), 0
            if idx[i] > idx[j]:
                inversions += 1
    return tuple(sorted(idx)), (-1 if inversions & 1 else 1)


def _check_index_sequence(idx, r, q):
    idx = tuple(idx)
    if len(idx) != r:
        raise ValueError(f"expected {r} indices, got {idx}")
    for i in idx:
        if not 1 <= i <= q:
            raise ValueError(f"index {i} outside 1..{q}")
    return idx


class VectorConfiguration:
    """A d-vector for every sorted r-tuple over {1..q}; zero slots are implicit."""

    def __init__(self, r: int, d: int, q: int, entries=None):
        if r < 1 or d < 1 or q < r:
            raise ValueError(f"need r >= 1, d >= 1, q >= r, got r={r}, d={d}, q={q}")
        self.r = r
        self.d = d
        self.q = q
        self.entries = {}
        for key, vec in (entries or {}).items():
            key = check_sorted_tuple(key, q)
            if len(key) != r:
                raise ValueError(f"key {key} does not have arity {r}")
            vec = tuple(vec)
            if len(vec) != d:
                raise ValueError(f"vector for {key} has length {len(vec)}, expected {d}")
            if any(x != 0 for x in vec):
                self.entries[key] = vec

    def get(self, key):
        key = check_sorted_tuple(key, self.q)
        if len(key) != self.r:
            raise ValueError(f"key {key} does not have arity {self.r}")
        return self.entries.get(key, (Fraction(0),) * self.d)

    def with_slot(self, key, vec):
        """Copy of this configuration with one slot replaced."""
        new = dict(self.entries)
        new[tuple(key)] = tuple(vec)
        return VectorConfiguration(self.r, self.d, self.q, new)

    def __eq__(self, other):
        if not isinstance(other, VectorConfiguration):
            return NotImplemented
        return (
            (self.r, self.d, self.q) == (other.r, other.d, other.q)
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"VectorConfiguration(r={self.r}, d={self.d}, q={self.q}, {len(self.entries)} nonzero slots)"


class ForceSystem:
    """Fully antisymmetric family of d-vectors indexed by r-tuples over {1..q}."""

    def __init__(self, r: int, d: int, q: int, canonical=None):
        if r < 1 or d < 1 or q < r:
            raise ValueError(f"need r >= 1, d >= 1, q >= r, got r={r}, d={d}, q={q}")
        self.r = r
        self.d = d
        self.q = q
        self.canonical = {}
        for key, vec in (canonical or {}).items():
            key = check_sorted_tuple(key, q)
            if len(key) != r:
                raise ValueError(f"key {key} does not have arity {r}")
            vec = tuple(vec)
            if len(vec) != d:
                raise ValueError(f"vector for {key} has length {len(vec)}, expected {d}")
            if any(x != 0 for x in vec):
                self.canonical[key] = vec

    def get(self, idx):
        """Value at an arbitrary index sequence: zero on repeats, else the
        canonical entry times the sign of the sorting permutation."""
        idx = _check_index_sequence(idx, self.r, self.q)
        key, sign = _sort_with_sign(idx)
        if sign == 0:
            return (Fraction(0),) * self.d
        vec = self.canonical.get(key)
        if vec is None:
            return (Fraction(0),) * self.d
        if sign > 0:
            return vec
        return tuple(-x for x in vec)

    def to_configuration(self) -> VectorConfiguration:
        """Reindex as a configuration: each sorted tuple T is scaled by
        (-1) ** (sum(T) + r - 1).

        Per-slot sign flips never change whether the system determinant
        vanishes (the map is linear in every slot), so this fixed convention
        is safe; it makes the equilibrium equations and the square-system
        rows agree up to one overall sign per row block.
        """
        entries = {}
        for key, vec in self.canonical.items():
            if (sum(key) + self.r - 1) & 1:
                entries[key] = tuple(-x for x in vec)
            else:
                entries[key] = vec
        return VectorConfiguration(self.r, self.d, self.q, entries)

    def __eq__(self, other):
        if not isinstance(other, ForceSystem):
            return NotImplemented
        return (
            (self.r, self.d, self.q) == (other.r, other.d, other.q)
            and self.canonical == other.canonical
        )

    def __repr__(self):
        return f"ForceSystem(r={self.r}, d={self.d}, q={self.q}, {len(self.canonical)} nonzero tuples)"


class CoefficientSystem:
    """Fully symmetric scalar family indexed by r-tuples over {1..q}."""

    def __init__(self, r: int, q: int, canonical=None):
        if r < 1 or q < r:
            raise ValueError(f"need r >= 1, q >= r, got r={r}, q={q}")
        self.r = r
        self.q = q
        self.canonical = {}
        for key, value in (canonical or {}).items():
            key = check_sorted_tuple(key, q)
            if len(key) != r:
                raise ValueError(f"key {key} does not have arity {r}")
            if value != 0:
                self.canonical[key] = value

    def get(self, idx):
        """Value at any ordering of distinct indices; repeats are rejected."""
        idx = _check_index_sequence(idx, self.r, self.q)
        key, sign = _sort_with_sign(idx)
        if sign == 0:
            raise ValueError(f"repeated index in {idx}")
        return self.canonical.get(key, Fraction(0))

    def is_trivial(self) -> bool:
        return not self.canonical

    def __eq__(self, other):
        if not isinstance(other, CoefficientSystem):
            return NotImplemented
        return (self.r, self.q) == (other.r, other.q) and self.canonical == other.canonical

    def __repr__(self):
        return f"CoefficientSystem(r={self.r}, q={self.q}, {len(self.canonical)} nonzero tuples)"

"""Permutations, group closure and orbit computation."""

from __future__ import annotations

from collections import Counter
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components


class DegreeMismatch(ValueError):
    pass


class SizeExceeded(RuntimeError):
    pass


class CycleStructure(Counter):
    """Map from cycle length to the number of cycles of that length."""

    @property
    def degree(self) -> int:
        return sum(length * count for length, count in self.items())

    @property
    def num_cycles(self) -> int:
        return sum(self.values())

    def key(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((k, v) for k, v in self.items() if v))

    def __hash__(self):
        return hash(self.key())


class Perm:
    """A permutation of ``{0, ..., m-1}``; ``images[i]`` is the image of ``i``.

    Composition follows the right-action convention: ``a * b`` applies ``a``
    first, then ``b``.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        self.images = tuple(images)
        if check and sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")
        self._hash = hash(self.images)

    @classmethod
    def identity(cls, m: int) -> Perm:
        return cls(range(m), check=False)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Perm) -> Perm:
        return compose(self, other)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Perm({list(self.images)})"

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def inverse(self) -> Perm:
        return inverse(self)

    def cycle_structure(self) -> CycleStructure:
        return cycle_structure(self)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.images[i]
            out.append(tuple(cyc))
        return out


def compose(a: Perm, b: Perm) -> Perm:
    """``a`` followed by ``b``."""
    if a.degree != b.degree:
        raise DegreeMismatch(f"degrees {a.degree} and {b.degree} differ")
    bi = b.images
    return Perm([bi[x] for x in a.images], check=False)


def inverse(a: Perm) -> Perm:
    out = [0] * a.degree
    for i, x in enumerate(a.images):
        out[x] = i
    return Perm(out, check=False)


def cycle_structure(a: Perm) -> CycleStructure:
    return CycleStructure(len(c) for c in a.cycles())


class PermGroup:
    """A permutation group given by generators, with its elements in BFS order."""

    def __init__(self, generators: Sequence[Perm], elements: list[Perm]):
        self.generators = list(generators)
        self.elements = elements
        self.degree = elements[0].degree

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: Perm):
        return g in self._set

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def _set(self):
        try:
            return self.__dict__["_elset"]
        except KeyError:
            s = self.__dict__["_elset"] = frozenset(self.elements)
            return s

    def cycle_structure_counts(self) -> Counter:
        """Frequencies of the cycle structures of the elements."""
        return Counter(cycle_structure(g) for g in self.elements)


def generate_group(generators: Sequence[Perm], max_size: int = 10**6) -> PermGroup:
    """Breadth-first closure of ``generators`` under composition."""
    if not generators:
        raise ValueError("need at least one generator")
    m = generators[0].degree
    for g in generators:
        if g.degree != m:
            raise DegreeMismatch(f"generator degrees {m} and {g.degree} differ")
    ident = Perm.identity(m)
    elements = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    elements.append(y)
                    nxt.append(y)
                    if len(elements) > max_size:
                        raise SizeExceeded(f"group closure exceeds {max_size} elements")
        frontier = nxt
    return PermGroup(generators, elements)


def orbit_labels(images: Sequence[np.ndarray], size: int) -> tuple[int, np.ndarray]:
    """Label the orbits of the group generated by index maps on ``range(size)``.

    Each entry of ``images`` is an integer array ``a`` with ``a[i]`` the image
    of state ``i``.  Returns ``(count, labels)`` where orbits are numbered in
    increasing order of their smallest state.
    """
    if size == 0:
        return 0, np.zeros(0, dtype=np.int64)
    src = np.arange(size, dtype=np.int64)
    rows = [src] + [src for _ in images]
    cols = [src] + [np.asarray(a, dtype=np.int64) for a in images]
    for a in cols[1:]:
        if a.shape != (size,):
            raise DegreeMismatch(f"action map of shape {a.shape} on {size} states")
    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(size, size))
    count, labels = connected_components(graph, directed=True, connection="weak")
    # renumber so that labels follow the first occurrence (= smallest member)
    _, first = np.unique(labels, return_index=True)
    order = np.argsort(first)
    relabel = np.empty(count, dtype=np.int64)
    relabel[order] = np.arange(count)
    return count, relabel[labels]


def orbits_of_indices(images: Sequence[np.ndarray], size: int) -> list[np.ndarray]:
    """Orbits of states ``0..size-1`` as sorted index arrays, ordered by minimum."""
    count, labels = orbit_labels(images, size)
    order = np.argsort(labels, kind="stable")
    bounds = np.cumsum(np.bincount(labels, minlength=count))[:-1]
    return np.split(order, bounds)


def orbits(
    actions: Sequence[Callable[[Hashable], Hashable]],
    states: Sequence[Hashable],
) -> list[list[Hashable]]:
    """Orbits of ``states`` under the group generated by ``actions``.

    The position of a state in ``states`` is its encoding: each orbit is
    listed in encoding order, its first member being the representative, and
    orbits are sorted by representative.
    """
    index = {s: i for i, s in enumerate(states)}
    images = [np.fromiter((index[act(s)] for s in states), dtype=np.int64, count=len(states))
              for act in actions]
    return [[states[i] for i in orb] for orb in orbits_of_indices(images, len(states))]

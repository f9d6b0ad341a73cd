"""Instance model for sigma-class hypergraphs and their colourings.

A hypergraph ``H(n, r, q | sigma)`` has ``n`` classes of ``q`` vertices each.
``sigma`` is a partition of ``r``; an r-subset of the vertices is an edge
exactly when its non-zero class-intersection sizes, sorted, equal ``sigma``.

Edges are never materialized here.  Everything downstream works on *edge
shapes* (which classes participate, and which part size lands on which
class) together with per-class colour profiles: whether an edge can violate
a colour-count constraint depends only on those two pieces of data.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import comb
from typing import Iterator, Mapping, Sequence

from .errors import DimensionMismatchError, InvalidPartitionError

__all__ = [
    "Sigma",
    "HypergraphSpec",
    "ClassProfile",
    "Colouring",
    "build_sigma",
    "profile_of",
    "edge_shapes",
    "part_arrangements",
    "count_edges",
    "canonical_colouring",
    "colouring_to_json",
    "colouring_from_json",
]


@dataclass(frozen=True)
class Sigma:
    """A partition of ``r`` stored with its derived statistics.

    ``parts`` is non-increasing; ``s`` is the number of parts, ``delta_max``
    the largest part and ``delta_min`` the smallest.
    """

    parts: tuple[int, ...]
    r: int
    s: int
    delta_max: int
    delta_min: int

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def build_sigma(parts: Sequence[int]) -> Sigma:
    """Build a :class:`Sigma` from part sizes, sorting them non-increasing.

    Raises :class:`InvalidPartitionError` on an empty list or a part < 1.
    """
    if not parts:
        raise InvalidPartitionError("partition must have at least one part")
    if any(not isinstance(p, int) or p < 1 for p in parts):
        raise InvalidPartitionError(f"parts must be positive integers: {parts!r}")
    ordered = tuple(sorted(parts, reverse=True))
    return Sigma(
        parts=ordered,
        r=sum(ordered),
        s=len(ordered),
        delta_max=ordered[0],
        delta_min=ordered[-1],
    )


@dataclass(frozen=True)
class HypergraphSpec:
    """An instance ``H(n, r, q | sigma)`` together with the colour window.

    ``alpha`` and ``beta`` bound the number of distinct colours every edge
    must carry: ``alpha <= |colours(edge)| <= beta``.
    """

    n: int
    q: int
    sigma: Sigma
    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.q < 1:
            raise ValueError(f"need n >= 1 and q >= 1, got n={self.n}, q={self.q}")
        if self.alpha < 2:
            raise ValueError(f"alpha must be >= 2, got {self.alpha}")
        if self.beta < self.alpha:
            raise ValueError(f"beta must be >= alpha, got ({self.alpha},{self.beta})")

    @property
    def r(self) -> int:
        return self.sigma.r

    @property
    def num_vertices(self) -> int:
        return self.n * self.q

    @property
    def has_edges(self) -> bool:
        """Edges exist iff every part fits in a class and enough classes exist."""
        return self.q >= self.sigma.delta_max and self.n >= self.sigma.s

    def __str__(self) -> str:
        return (
            f"H(n={self.n},r={self.r},q={self.q}|sigma={self.sigma}),"
            f"alpha={self.alpha},beta={self.beta}"
        )


@dataclass(frozen=True)
class ClassProfile:
    """Colour multiplicities within one class: the sufficient statistic.

    ``counts`` maps each colour present in the class to its multiplicity
    (>= 1); ``total`` is the class size ``q``.
    """

    counts: Mapping[int, int]
    total: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", dict(self.counts))
        if any(m < 1 for m in self.counts.values()):
            raise ValueError("profile multiplicities must be >= 1")
        if sum(self.counts.values()) != self.total:
            raise ValueError("profile multiplicities must sum to the class size")

    def key(self) -> tuple[tuple[int, int], ...]:
        """Hashable form: (colour, multiplicity) pairs sorted by colour."""
        return tuple(sorted(self.counts.items()))

    @property
    def num_colours(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class Colouring:
    """An assignment of colours to all vertices, one tuple per class.

    Vertices within a class are interchangeable, so each class is stored
    sorted by colour.  Colours are small non-negative integers.
    """

    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.classes:
            raise ValueError("a colouring needs at least one class")
        q = len(self.classes[0])
        if q == 0 or any(len(cls) != q for cls in self.classes):
            raise ValueError("all classes must hold the same positive vertex count")
        for cls in self.classes:
            if any(not isinstance(c, int) or isinstance(c, bool) or c < 0
                   for c in cls):
                raise ValueError("colours must be non-negative integers")
        object.__setattr__(
            self, "classes", tuple(tuple(sorted(cls)) for cls in self.classes)
        )

    @property
    def n(self) -> int:
        return len(self.classes)

    @property
    def q(self) -> int:
        return len(self.classes[0])

    @property
    def colour_count(self) -> int:
        return len(self.colours_used())

    def colours_used(self) -> frozenset[int]:
        return frozenset(c for cls in self.classes for c in cls)

    def canonical(self) -> "Colouring":
        return canonical_colouring(self)


def profile_of(colouring: Colouring, class_index: int) -> ClassProfile:
    """Colour multiplicities of one class of ``colouring``."""
    if not 0 <= class_index < colouring.n:
        raise IndexError(f"class index {class_index} out of range 0..{colouring.n - 1}")
    counts: dict[int, int] = {}
    for c in colouring.classes[class_index]:
        counts[c] = counts.get(c, 0) + 1
    return ClassProfile(counts=counts, total=colouring.q)


def part_arrangements(sigma: Sigma) -> tuple[tuple[int, ...], ...]:
    """Distinct orderings of sigma's parts (equal parts collapse to one)."""
    return tuple(sorted(set(itertools.permutations(sigma.parts)), reverse=True))


def edge_shapes(
    spec: HypergraphSpec,
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Yield every edge shape of ``spec``: (class tuple, aligned part sizes).

    A shape is an unordered choice of ``s`` distinct classes plus one
    inequivalent way of assigning sigma's part sizes to them; arrangements
    that only permute equal part sizes appear once.  Empty when the
    hypergraph has no edges.
    """
    if not spec.has_edges:
        return
    arrangements = part_arrangements(spec.sigma)
    for class_tuple in itertools.combinations(range(spec.n), spec.sigma.s):
        for parts in arrangements:
            yield class_tuple, parts


def count_edges(spec: HypergraphSpec) -> int:
    """Number of distinct edges, summed shape by shape as binomial products."""
    total = 0
    for _classes, parts in edge_shapes(spec):
        prod = 1
        for a in parts:
            prod *= comb(spec.q, a)
        total += prod
    return total


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------
#
# The symmetry group is: permute classes, permute colours, permute vertices
# within a class.  The canonical representative renumbers colours by first
# appearance scanning classes in order (vertices within a class sorted by
# renumbered colour) and picks the class order making the resulting tuple of
# class tuples lexicographically least.  Computed by a prefix search that
# only ever extends lex-least prefixes, branching on genuine ties.


def _class_key_options(
    content: tuple[int, ...],
    mapping: dict[int, int],
    relevant: frozenset[int],
) -> tuple[tuple[int, ...], list[dict[int, int]]]:
    """Canonical renumberings of one class under a partial colour map.

    Colours already in ``mapping`` keep their image.  Unseen colours receive
    consecutive fresh identifiers; to make the sorted class tuple least,
    fresh identifiers go to higher-multiplicity colours first.  The tuple is
    the same for every tie order, so it is returned once; the mappings
    differ, but only assignments to colours in ``relevant`` (colours that
    recur in classes still to be placed) can influence later choices, so tie
    branching is confined to those.
    """
    counts: dict[int, int] = {}
    for c in content:
        counts[c] = counts.get(c, 0) + 1
    by_mult: dict[int, list[int]] = {}
    for c in counts:
        if c not in mapping:
            by_mult.setdefault(counts[c], []).append(c)

    group_options: list[list[tuple[int, ...]]] = []
    for mult in sorted(by_mult, reverse=True):
        group = sorted(by_mult[mult])
        rel = [c for c in group if c in relevant]
        non = [c for c in group if c not in relevant]
        size = len(group)
        opts: list[tuple[int, ...]] = []
        for positions in itertools.combinations(range(size), len(rel)):
            for perm in itertools.permutations(rel):
                slots: list[int | None] = [None] * size
                for p, c in zip(positions, perm):
                    slots[p] = c
                fill = iter(non)
                order = tuple(c if c is not None else next(fill) for c in slots)
                opts.append(order)
        group_options.append(opts)

    mappings: list[dict[int, int]] = []
    for combo in itertools.product(*group_options):
        m = dict(mapping)
        nxt = len(m)
        for order in combo:
            for c in order:
                m[c] = nxt
                nxt += 1
        mappings.append(m)
    key = tuple(sorted(mappings[0][c] for c in content))
    return key, mappings


def canonical_colouring(colouring: Colouring) -> Colouring:
    """Canonical representative of ``colouring`` under all three symmetries.

    Idempotent, and equal for any two colourings that differ only by a
    colour permutation, a class permutation, or within-class reordering.
    """
    contents = list(colouring.classes)
    n = len(contents)
    best: list[tuple[int, ...]] = []

    def extend(remaining: tuple[int, ...], mapping: dict[int, int],
               prefix: list[tuple[int, ...]]) -> None:
        nonlocal best
        if not remaining:
            if not best or prefix < best:
                best = list(prefix)
            return
        candidates = []
        for idx in remaining:
            future: set[int] = set()
            for j in remaining:
                if j != idx:
                    future.update(contents[j])
            key, mappings = _class_key_options(
                contents[idx], mapping, frozenset(future)
            )
            candidates.append((key, idx, mappings, future))
        least = min(key for key, _, _, _ in candidates)
        taken: set[tuple] = set()
        for key, idx, mappings, future in candidates:
            if key != least:
                continue
            for m in mappings:
                sig = (
                    contents[idx],
                    tuple(sorted((c, v) for c, v in m.items() if c in future)),
                )
                if sig in taken:
                    continue
                taken.add(sig)
                rest = tuple(j for j in remaining if j != idx)
                prefix.append(key)
                extend(rest, m, prefix)
                prefix.pop()

    extend(tuple(range(n)), {}, [])
    return Colouring(classes=tuple(best))


# ---------------------------------------------------------------------------
# JSON colouring format
# ---------------------------------------------------------------------------
#
# {"n": <int>, "q": <int>, "classes": [[colour, ...], ...]}
# The writer emits classes sorted within class, keys in the order above,
# no whitespace variance: writing what the reader produced is bit-exact.


def colouring_to_json(colouring: Colouring) -> str:
    payload = {
        "n": colouring.n,
        "q": colouring.q,
        "classes": [list(cls) for cls in colouring.classes],
    }
    return json.dumps(payload, separators=(", ", ": "))


def colouring_from_json(text: str) -> Colouring:
    data = json.loads(text)
    if not isinstance(data, dict) or not {"n", "q", "classes"} <= set(data):
        raise DimensionMismatchError("colouring JSON needs fields n, q, classes")
    classes = data["classes"]
    if not isinstance(classes, list) or len(classes) != data["n"]:
        raise DimensionMismatchError("field 'classes' must list n classes")
    if any(not isinstance(cls, list) or len(cls) != data["q"] for cls in classes):
        raise DimensionMismatchError("every class must list q colours")
    return Colouring(classes=tuple(tuple(cls) for cls in classes))

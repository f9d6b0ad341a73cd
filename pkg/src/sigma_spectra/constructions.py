"""Constructive colourings and recolouring walks.

Each public function either builds a colouring with a promised property or
transforms one valid colouring into another, so that every constructive
feasibility claim made by the closed forms is realised by executable code.
Walk steps are validated as they are produced; a step that breaks validity
is a :class:`TheoremViolationError`, never silently dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Colouring, HypergraphSpec, canonical_colouring
from .engine import k_colourable
from .errors import InfeasibleError, NotApplicableError, TheoremViolationError
from .formulas import MonoDistribution, mono_zone, mono_zone_lower_bound
from .validator import is_valid

__all__ = [
    "RecolourStep",
    "WalkStep",
    "mono_distribution",
    "mono_colouring",
    "layered_colouring",
    "beta_colouring",
    "recolour_whole_class",
    "recolour_merge_two_unique",
    "split_to_fixed",
    "spectrum_walk",
    "spectrum_walk_steps",
]


@dataclass(frozen=True)
class RecolourStep:
    """One local recolouring move.

    ``class_index`` is None only for ``engine-fallback`` entries, where the
    next colouring came from the search engine rather than a local move.
    """

    class_index: int | None
    kind: str  # whole-class-to-new | merge-two-unique-to-new | split-to-fixed | engine-fallback
    colours_before: tuple[int, ...]
    colours_after: tuple[int, ...]


@dataclass(frozen=True)
class WalkStep:
    step: RecolourStep
    colouring: Colouring  # canonical snapshot after the step
    colour_count: int
    valid: bool


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def mono_distribution(spec: HypergraphSpec, k: int) -> MonoDistribution:
    """Class counts per colour for a valid all-monochromatic k-colouring.

    Deterministic: as many colours as possible cover ``floor((s-1)/(alpha-1))``
    classes; when that underfills, the leading colours take one extra class
    each (never more than the head slack allows).
    """
    zone = mono_zone(spec)
    if zone is None or k not in zone:
        raise InfeasibleError(f"k={k} is not in the monochromatic zone {zone}")
    n = spec.n
    if not spec.has_edges:
        unit = n
        overflow = 0
    else:
        s = spec.sigma.s
        unit = (s - 1) // (spec.alpha - 1)
        overflow = max(0, n - k * unit)
    if overflow > 0:
        counts = (unit + 1,) * overflow + (unit,) * (k - overflow)
        return MonoDistribution(counts=counts)
    counts = []
    remaining = n
    for i in range(k):
        take = min(unit, remaining - (k - 1 - i))
        counts.append(take)
        remaining -= take
    return MonoDistribution(counts=tuple(counts))


def mono_colouring(spec: HypergraphSpec, k: int) -> Colouring:
    """A valid colouring with exactly ``k`` colours, every class solid.

    Colour i covers ``counts[i]`` consecutive classes, lowest indices first.
    """
    dist = mono_distribution(spec, k)
    classes = []
    for colour, count in enumerate(dist.counts):
        classes.extend([(colour,) * spec.q] * count)
    return canonical_colouring(Colouring(classes=tuple(classes)))


def layered_colouring(spec: HypergraphSpec, k_target: int) -> Colouring:
    """Distinct per-class palettes of ``floor(beta/s)`` colours, plus up to
    ``beta mod s`` fresh singleton vertices, hitting ``k_target`` colours.

    Valid whenever ``alpha <= s <= beta``: an edge meets at least one colour
    per class (palettes are disjoint, so at least s >= alpha) and at most
    ``k`` per class plus every fresh singleton (at most k*s + (beta - k*s)).
    """
    s = spec.sigma.s
    if not spec.alpha <= s <= spec.beta:
        raise NotApplicableError(
            f"needs alpha <= s <= beta, got ({spec.alpha},{s},{spec.beta})"
        )
    k = spec.beta // s
    base_total = spec.n * k
    extras = k_target - base_total
    if extras < 0 or extras > spec.beta - k * s:
        raise InfeasibleError(
            f"k_target={k_target} outside [{base_total}, "
            f"{base_total + spec.beta - k * s}]"
        )
    if spec.q < k:
        raise InfeasibleError(f"q={spec.q} cannot hold {k} distinct colours")
    if extras > 0 and spec.q == k:
        raise InfeasibleError("no colour is repeated, cannot free a vertex")

    base, rem = divmod(spec.q, k)
    classes = []
    for i in range(spec.n):
        palette = range(i * k, (i + 1) * k)
        cls: list[int] = []
        for j, colour in enumerate(palette):
            cls.extend([colour] * (base + 1 if j < rem else base))
        classes.append(cls)
    for j in range(extras):
        # replace one vertex of class j's most repeated colour
        counts: dict[int, int] = {}
        for c in classes[j]:
            counts[c] = counts.get(c, 0) + 1
        donor = max(counts, key=lambda c: (counts[c], -c))
        classes[j][classes[j].index(donor)] = base_total + j
    return canonical_colouring(
        Colouring(classes=tuple(tuple(cls) for cls in classes))
    )


def beta_colouring(spec: HypergraphSpec) -> Colouring:
    """The balanced beta-colouring of a gap-recipe class size.

    Every class carries the same ``beta`` colours; within a class,
    ``(Delta-1) - (alpha-1)*floor((Delta-1)/(alpha-1))`` colours repeat one
    extra time, so any ``alpha - 1`` colours cover at most ``Delta - 1``
    vertices and no edge can drop below ``alpha`` colours.  Needs
    ``Delta >= alpha`` and the recipe's exact class size
    ``q = (beta-alpha+1)*floor((Delta-1)/(alpha-1)) + Delta - 1``.
    """
    delta = spec.sigma.delta_max
    if delta < spec.alpha:
        raise NotApplicableError(
            f"needs largest part >= alpha, got {delta} < {spec.alpha}"
        )
    unit = (delta - 1) // (spec.alpha - 1)
    q_expected = (spec.beta - spec.alpha + 1) * unit + delta - 1
    if spec.q != q_expected:
        raise InfeasibleError(
            f"q={spec.q} does not match the balanced construction ({q_expected})"
        )
    heavy = (delta - 1) - (spec.alpha - 1) * unit
    cls: list[int] = []
    for colour in range(spec.beta):
        cls.extend([colour] * (unit + 1 if colour < heavy else unit))
    classes = tuple(tuple(cls) for _ in range(spec.n))
    return canonical_colouring(Colouring(classes=classes))


# ---------------------------------------------------------------------------
# recolouring moves
# ---------------------------------------------------------------------------


def _classes_of_colour(colouring: Colouring) -> dict[int, set[int]]:
    where: dict[int, set[int]] = {}
    for i, cls in enumerate(colouring.classes):
        for c in cls:
            where.setdefault(c, set()).add(i)
    return where


def _fresh_colour(colouring: Colouring) -> int:
    return max(colouring.colours_used()) + 1


def _replace_class(colouring: Colouring, index: int,
                   new_class: tuple[int, ...]) -> Colouring:
    classes = list(colouring.classes)
    classes[index] = new_class
    return Colouring(classes=tuple(classes))


def recolour_whole_class(colouring: Colouring, class_index: int) -> Colouring:
    """Repaint one whole class with a colour used nowhere else.

    Keeps validity for any window with ``s >= 2`` and smallest part at least
    ``r - beta + 1``; canonicalised on return.
    """
    raw = _recolour_whole_class_raw(colouring, class_index)
    return canonical_colouring(raw)


def _recolour_whole_class_raw(colouring: Colouring, class_index: int) -> Colouring:
    z = _fresh_colour(colouring)
    return _replace_class(colouring, class_index, (z,) * colouring.q)


def recolour_merge_two_unique(
    colouring: Colouring, class_index: int, x: int, y: int
) -> Colouring:
    """Merge two colours private to one class into a single fresh colour.

    Drops the colour count by exactly one; canonicalised on return.
    """
    raw = _recolour_merge_raw(colouring, class_index, x, y)
    return canonical_colouring(raw)


def _recolour_merge_raw(
    colouring: Colouring, class_index: int, x: int, y: int
) -> Colouring:
    if x == y:
        raise InfeasibleError("x and y must be two different colours")
    where = _classes_of_colour(colouring)
    for colour in (x, y):
        if where.get(colour) != {class_index}:
            raise InfeasibleError(
                f"colour {colour} must appear in class {class_index} and nowhere else"
            )
    z = _fresh_colour(colouring)
    new_class = tuple(
        z if c in (x, y) else c for c in colouring.classes[class_index]
    )
    return _replace_class(colouring, class_index, new_class)


def split_to_fixed(
    colouring: Colouring, class_index: int, source: int, target: int
) -> Colouring:
    """Fold one private colour of a class into another of its private
    colours (the class's fixed colour in a layered descent).

    Both colours must be confined to the class; for a window with alpha = 2
    the result stays valid because other classes still contribute a second
    colour and no edge gains any colour.  Canonicalised on return.
    """
    raw = _split_to_fixed_raw(colouring, class_index, source, target)
    return canonical_colouring(raw)


def _split_to_fixed_raw(
    colouring: Colouring, class_index: int, source: int, target: int
) -> Colouring:
    if source == target:
        raise InfeasibleError("source and target must differ")
    where = _classes_of_colour(colouring)
    for colour in (source, target):
        if where.get(colour) != {class_index}:
            raise InfeasibleError(
                f"colour {colour} must appear in class {class_index} and nowhere else"
            )
    new_class = tuple(
        target if c == source else c for c in colouring.classes[class_index]
    )
    return _replace_class(colouring, class_index, new_class)


# ---------------------------------------------------------------------------
# walks
# ---------------------------------------------------------------------------


def _check_walk_spec(spec: HypergraphSpec) -> None:
    s = spec.sigma.s
    if spec.alpha != 2:
        raise NotApplicableError("walks are defined for alpha = 2")
    if not 2 <= s <= spec.beta:
        raise NotApplicableError(f"needs 2 <= s <= beta, got s={s}, beta={spec.beta}")
    if spec.sigma.delta_min < spec.r - spec.beta + 1:
        raise NotApplicableError(
            f"needs smallest part >= r - beta + 1 ="
            f" {spec.r - spec.beta + 1}, got {spec.sigma.delta_min}"
        )


def _private_map(colouring: Colouring) -> list[list[int]]:
    """Per class: sorted colours appearing in that class and nowhere else."""
    where = _classes_of_colour(colouring)
    out: list[list[int]] = [[] for _ in colouring.classes]
    for colour, owners in where.items():
        if len(owners) == 1:
            out[next(iter(owners))].append(colour)
    for lst in out:
        lst.sort()
    return out


def _validated(spec: HypergraphSpec, colouring: Colouring, what: str) -> None:
    if not is_valid(spec, colouring):
        raise TheoremViolationError(
            f"{what} produced an invalid colouring; the no-gap analysis "
            f"rules this out for {spec}"
        )


def spectrum_walk_steps(
    spec: HypergraphSpec,
    start: Colouring,
    direction: str,
    node_budget: int | None = None,
) -> list[WalkStep]:
    """Full step trace of a recolouring walk, keep-count moves included.

    Walking ``down`` reaches n+1 colours; walking ``up`` reaches one colour
    below the monochromatic zone.  Greedy local moves are tried first; when
    none applies the engine supplies the adjacent colouring and the step is
    recorded as ``engine-fallback``.
    """
    if direction not in ("up", "down"):
        raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")
    _check_walk_spec(spec)
    if not is_valid(spec, start):
        raise InfeasibleError("start colouring is not valid for this window")

    target = (
        spec.n + 1
        if direction == "down"
        else mono_zone_lower_bound(spec) - 1
    )
    current = start
    steps: list[WalkStep] = []

    def record(kind: str, class_index: int | None, before: tuple[int, ...],
               after_raw: Colouring) -> None:
        nonlocal current
        _validated(spec, after_raw, f"{kind} on class {class_index}")
        after_cls = (
            after_raw.classes[class_index] if class_index is not None else ()
        )
        step = RecolourStep(
            class_index=class_index,
            kind=kind,
            colours_before=before,
            colours_after=tuple(sorted(set(after_cls))),
        )
        current = after_raw
        steps.append(
            WalkStep(
                step=step,
                colouring=canonical_colouring(after_raw),
                colour_count=after_raw.colour_count,
                valid=True,
            )
        )

    guard = 0
    while (current.colour_count > target if direction == "down"
           else current.colour_count < target):
        guard += 1
        if guard > 4 * spec.n * spec.num_vertices:
            raise TheoremViolationError("walk failed to make progress")
        privates = _private_map(current)
        non_mono = [
            i for i, cls in enumerate(current.classes) if len(set(cls)) > 1
        ]
        moved = False
        if direction == "down":
            for i in non_mono:
                palette = sorted(set(current.classes[i]))
                if len(privates[i]) >= 2:
                    if len(privates[i]) == len(palette):
                        raw = _split_to_fixed_raw(
                            current, i, palette[-1], palette[0]
                        )
                        record("split-to-fixed",
                               i, tuple(palette), raw)
                    else:
                        x, y = privates[i][0], privates[i][1]
                        raw = _recolour_merge_raw(current, i, x, y)
                        record("merge-two-unique-to-new", i, tuple(palette), raw)
                    moved = True
                    break
            if not moved:
                for i in non_mono:
                    if len(privates[i]) == 1:
                        palette = sorted(set(current.classes[i]))
                        raw = _recolour_whole_class_raw(current, i)
                        record("whole-class-to-new", i, tuple(palette), raw)
                        moved = True
                        break
        else:
            for i in non_mono:
                if not privates[i]:
                    palette = sorted(set(current.classes[i]))
                    raw = _recolour_whole_class_raw(current, i)
                    record("whole-class-to-new", i, tuple(palette), raw)
                    moved = True
                    break
            if not moved:
                for i in non_mono:
                    if len(privates[i]) == 1:
                        palette = sorted(set(current.classes[i]))
                        raw = _recolour_whole_class_raw(current, i)
                        record("whole-class-to-new", i, tuple(palette), raw)
                        moved = True
                        break
        if not moved:
            step_to = (
                current.colour_count - 1
                if direction == "down"
                else current.colour_count + 1
            )
            fallback = k_colourable(spec, step_to, node_budget)
            if fallback is None:
                raise TheoremViolationError(
                    f"walk stuck at {current.colour_count} colours and "
                    f"k={step_to} is infeasible; contradicts the no-gap law"
                )
            record("engine-fallback", None, (), fallback)
    return steps


def spectrum_walk(
    spec: HypergraphSpec,
    start: Colouring,
    direction: str,
    node_budget: int | None = None,
) -> list[Colouring]:
    """Snapshots of a walk at each new colour count, start included.

    Consecutive entries differ by exactly one in colour count.
    """
    steps = spectrum_walk_steps(spec, start, direction, node_budget)
    out = [canonical_colouring(start)]
    count = start.colour_count
    for ws in steps:
        if ws.colour_count != count:
            out.append(ws.colouring)
            count = ws.colour_count
    return out

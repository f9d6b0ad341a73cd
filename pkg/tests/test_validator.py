"""Edge colour ranges, validity decisions and violation witnesses."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from sigma_spectra import (
    ClassProfile,
    Colouring,
    DimensionMismatchError,
    HypergraphSpec,
    InfeasibleShapeError,
    build_sigma,
    edge_colour_range,
    find_violation,
    is_valid,
    selection_achieving,
)


def prof(counts):
    return ClassProfile(counts=counts, total=sum(counts.values()))


def literal_range(profiles, parts):
    """Independent oracle: enumerate every vertex pick per class."""
    per_class = []
    for p, a in zip(profiles, parts):
        vertices = [c for c, m in sorted(p.counts.items()) for _ in range(m)]
        sets = {
            frozenset(vertices[i] for i in pick)
            for pick in itertools.combinations(range(len(vertices)), a)
        }
        per_class.append(sets)
    unions = [
        len(frozenset().union(*choice))
        for choice in itertools.product(*per_class)
    ]
    return min(unions), max(unions)


class TestEdgeColourRange:
    def test_both_classes_monochromatic(self):
        assert edge_colour_range([prof({1: 6}), prof({1: 6})], [6, 6]) == (1, 1)

    def test_three_colours_twice_each(self):
        p = prof({1: 2, 2: 2, 3: 2})
        assert edge_colour_range([p, p], [6, 6]) == (3, 3)

    def test_shared_plus_private(self):
        a, b = prof({1: 1, 2: 1}), prof({1: 1, 3: 1})
        assert edge_colour_range([a, b], [2, 2]) == (3, 3)

    def test_partial_selection_range(self):
        # frozen from the literal oracle: picks are {1},{1,2} x {2},{2,3}
        a, b = prof({1: 3, 2: 1}), prof({2: 3, 3: 1})
        assert edge_colour_range([a, b], [2, 2]) == (2, 3)
        assert literal_range([a, b], [2, 2]) == (2, 3)

    def test_part_exceeding_class_size(self):
        with pytest.raises(InfeasibleShapeError):
            edge_colour_range([prof({0: 2})], [3])

    def test_misaligned_or_empty_arguments(self):
        with pytest.raises(ValueError):
            edge_colour_range([prof({0: 2})], [1, 1])
        with pytest.raises(ValueError):
            edge_colour_range([], [])
        with pytest.raises(ValueError):
            edge_colour_range([prof({0: 2})], [0])

    def test_single_class_shape(self):
        assert edge_colour_range([prof({0: 2, 1: 1, 2: 1})], [3]) == (2, 3)

    @given(st.data())
    @settings(max_examples=120, deadline=None)
    def test_matches_literal_oracle(self, data):
        s = data.draw(st.integers(1, 3))
        profiles, parts = [], []
        for _ in range(s):
            ncol = data.draw(st.integers(1, 4))
            colours = data.draw(
                st.lists(st.integers(0, 6), min_size=ncol, max_size=ncol,
                         unique=True)
            )
            mults = data.draw(
                st.lists(st.integers(1, 3), min_size=ncol, max_size=ncol)
            )
            p = prof(dict(zip(colours, mults)))
            profiles.append(p)
            parts.append(data.draw(st.integers(1, p.total)))
        assert edge_colour_range(profiles, parts) == literal_range(profiles, parts)

    def test_permutation_invariance(self):
        profiles = [prof({0: 2, 1: 1}), prof({1: 2}), prof({2: 1, 3: 2})]
        parts = [2, 1, 3]
        base = edge_colour_range(profiles, parts)
        for order in itertools.permutations(range(3)):
            shuffled = edge_colour_range(
                [profiles[i] for i in order], [parts[i] for i in order]
            )
            assert shuffled == base

    def test_whole_class_parts_pin_the_union(self):
        a, b = prof({0: 2, 1: 2}), prof({1: 3, 2: 1})
        lo, hi = edge_colour_range([a, b], [4, 4])
        union = len(set(a.counts) | set(b.counts))
        assert lo == hi == union

    def test_bounds_sandwich(self):
        a, b = prof({0: 3, 1: 1}), prof({0: 1, 2: 2, 3: 1})
        lo, hi = edge_colour_range([a, b], [2, 3])
        assert 1 <= lo <= hi <= 5


class TestSelectionAchieving:
    def test_realises_min_and_max(self):
        profiles = [prof({1: 3, 2: 1}), prof({2: 3, 3: 1})]
        parts = (2, 2)
        for target in (2, 3):
            choice = selection_achieving(profiles, parts, target)
            distinct = set()
            for c_map, p, a in zip(choice, profiles, parts):
                assert sum(c_map.values()) == a
                for colour, m in c_map.items():
                    assert 1 <= m <= p.counts[colour]
                distinct |= set(c_map)
            assert len(distinct) == target

    def test_unreachable_target(self):
        with pytest.raises(ValueError):
            selection_achieving([prof({0: 2})], (2,), 5)


def a2_colouring(n):
    """Every class gets a shared colour 0 plus its own colour."""
    return Colouring(classes=tuple((0, j + 1) for j in range(n)))


class TestIsValid:
    def test_balanced_three_colour_classes(self):
        spec = HypergraphSpec(n=7, q=6, sigma=build_sigma([6, 6]), alpha=3, beta=3)
        cls = (0, 0, 1, 1, 2, 2)
        assert is_valid(spec, Colouring(classes=(cls,) * 7))

    def test_shared_plus_private_pattern(self):
        spec = HypergraphSpec(n=5, q=2, sigma=build_sigma([2, 2]), alpha=3, beta=3)
        assert is_valid(spec, a2_colouring(5))

    def test_monochromatic_everything_fails(self):
        spec = HypergraphSpec(n=2, q=2, sigma=build_sigma([2, 2]), alpha=2, beta=3)
        assert not is_valid(spec, Colouring(classes=((0, 0), (0, 0))))

    def test_vacuous_without_edges(self):
        spec = HypergraphSpec(n=1, q=2, sigma=build_sigma([2, 2]), alpha=2, beta=2)
        assert is_valid(spec, Colouring(classes=((0, 0),)))

    def test_dimension_mismatch(self):
        spec = HypergraphSpec(n=2, q=2, sigma=build_sigma([1, 1]), alpha=2, beta=2)
        with pytest.raises(DimensionMismatchError):
            is_valid(spec, Colouring(classes=((0, 0, 1), (1, 1, 0))))


class TestFindViolation:
    def test_monochromatic_witness(self):
        spec = HypergraphSpec(n=2, q=2, sigma=build_sigma([2, 2]), alpha=2, beta=3)
        w = find_violation(spec, Colouring(classes=((0, 0), (0, 0))))
        assert w is not None
        assert w.distinct_colours == 1
        assert w.class_tuple == (0, 1)
        assert all(sum(c.values()) == p for c, p in
                   zip(w.per_class_choice, w.part_assignment))

    def test_too_many_colours_witness(self):
        spec = HypergraphSpec(n=7, q=6, sigma=build_sigma([6, 6]), alpha=3, beta=3)
        classes = ((0, 1, 2, 3, 3, 3),) + ((4, 4, 4, 4, 4, 4),) * 6
        w = find_violation(spec, Colouring(classes=classes))
        assert w is not None
        assert w.distinct_colours >= 4

    def test_none_for_valid(self):
        spec = HypergraphSpec(n=5, q=2, sigma=build_sigma([2, 2]), alpha=3, beta=3)
        assert find_violation(spec, a2_colouring(5)) is None

    def test_witness_choice_is_realisable(self):
        spec = HypergraphSpec(n=3, q=3, sigma=build_sigma([2, 1]), alpha=2, beta=2)
        colouring = Colouring(classes=((0, 1, 2), (0, 1, 2), (0, 0, 0)))
        w = find_violation(spec, colouring)
        assert w is not None
        from sigma_spectra import profile_of
        for cls_idx, part, chosen in zip(
            w.class_tuple, w.part_assignment, w.per_class_choice
        ):
            p = profile_of(colouring, cls_idx)
            assert sum(chosen.values()) == part
            for colour, m in chosen.items():
                assert m <= p.counts[colour]
        union = set()
        for chosen in w.per_class_choice:
            union |= set(chosen)
        assert len(union) == w.distinct_colours
        assert (w.distinct_colours < spec.alpha
                or w.distinct_colours > spec.beta)


def literal_is_valid(spec, colouring):
    """Independent validity check via materialised edges."""
    flat = [c for cls in colouring.classes for c in cls]
    for combo in itertools.combinations(range(spec.n * spec.q), spec.r):
        counts = {}
        for v in combo:
            counts[v // spec.q] = counts.get(v // spec.q, 0) + 1
        if tuple(sorted(counts.values(), reverse=True)) != spec.sigma.parts:
            continue
        distinct = len({flat[v] for v in combo})
        if distinct < spec.alpha or distinct > spec.beta:
            return False
    return True


class TestOracleEquivalence:
    @given(st.data())
    @settings(max_examples=80, deadline=None)
    def test_agrees_with_literal_edge_enumeration(self, data):
        parts = data.draw(st.sampled_from(
            [(1, 1), (2, 1), (2, 2), (3, 1), (1, 1, 1), (2, 1, 1), (3,)]
        ))
        sigma = build_sigma(list(parts))
        n = data.draw(st.integers(1, 4))
        q = data.draw(st.integers(1, 3))
        if n * q > 12:
            q = 12 // n
        if q < 1:
            q = 1
        alpha = data.draw(st.integers(2, 3))
        beta = data.draw(st.integers(alpha, max(alpha, sigma.r)))
        spec = HypergraphSpec(n=n, q=q, sigma=sigma, alpha=alpha, beta=beta)
        classes = tuple(
            tuple(data.draw(st.integers(0, 3)) for _ in range(q))
            for _ in range(n)
        )
        colouring = Colouring(classes=classes)
        assert is_valid(spec, colouring) == literal_is_valid(spec, colouring)

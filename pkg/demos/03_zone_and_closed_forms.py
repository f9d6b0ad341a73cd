"""The monochromatic zone and the closed-form machinery behind it.

With every class painted a single colour, an edge sees exactly the colours
of its s classes.  Two partition bounds answer how far such colourings
stretch: the most classes b colours can cover, and the fewest colours
covering n classes, both under the cap "any alpha-1 colours span at most
s-1 classes".  The zone interval follows, and the search engine confirms
it point by point.
"""

from sigma_spectra import (
    HypergraphSpec,
    build_sigma,
    extended_interval,
    is_valid,
    max_sum_capped_head,
    min_parts_capped_head,
    mono_colouring,
    mono_zone,
    spectrum,
    uncolourable_condition,
    zone_only_condition,
)

print("most classes coverable by b colours (alpha=2, s=3):")
for b in range(2, 7):
    print(f"  b={b}: {max_sum_capped_head(2, b, 3)}")

print("fewest colours covering n classes (alpha=2, s=3):")
for n in (4, 6, 9, 12):
    print(f"  n={n}: {min_parts_capped_head(2, 3, n)}")

spec = HypergraphSpec(n=6, q=3, sigma=build_sigma([1, 1, 1]), alpha=2, beta=3)
zone = mono_zone(spec)
print(f"\n{spec}")
print(f"monochromatic zone: [{zone.lo}, {zone.hi}]")
for k in zone:
    c = mono_colouring(spec, k)
    assert is_valid(spec, c) and c.colour_count == k
print("every zone point realised by a solid colouring and validated")

ext = extended_interval(spec)
print(f"stretched feasible interval: [{ext.lo}, {ext.hi}]")
result = spectrum(spec)
assert set(ext) <= set(result.feasible_k)
print(f"engine spectrum: {list(result.feasible_k)} (contains the interval)")

# threshold predicates
tight = HypergraphSpec(n=4, q=3, sigma=build_sigma([2, 1]), alpha=2, beta=2)
print(f"\n{tight}: spectrum collapses to the zone? "
      f"{zone_only_condition(tight)}")
print(f"engine: {list(spectrum(tight).feasible_k)}, zone {mono_zone(tight)}")

dead = HypergraphSpec(n=3, q=4, sigma=build_sigma([2, 2]), alpha=3, beta=3)
print(f"\n{dead}: past the non-colourability threshold? "
      f"{uncolourable_condition(dead)}")
print(f"engine finds feasible k: {list(spectrum(dead).feasible_k)}")

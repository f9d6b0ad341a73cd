"""Checking colourings against the per-edge colour window.

A colouring is valid for a window (alpha, beta) when every edge carries
between alpha and beta distinct colours.  Validity is decided per edge
shape from class profiles alone; when it fails, a concrete violating
selection is produced.
"""

from sigma_spectra import (
    Colouring,
    HypergraphSpec,
    build_sigma,
    edge_colour_range,
    find_violation,
    is_valid,
    profile_of,
)

spec = HypergraphSpec(n=5, q=2, sigma=build_sigma([2, 2]), alpha=3, beta=3)
print(spec)

# the classic shared-plus-private pattern: colour 0 everywhere, one private
# colour per class; every pair of classes then shows exactly 3 colours
good = Colouring(classes=tuple((0, j + 1) for j in range(5)))
print(f"\nshared+private colouring, {good.colour_count} colours:",
      "valid" if is_valid(spec, good) else "invalid")

# per-shape ranges explain why
p0, p1 = profile_of(good, 0), profile_of(good, 1)
lo, hi = edge_colour_range([p0, p1], [2, 2])
print(f"classes 0,1 profiles {dict(p0.counts)} {dict(p1.counts)}: "
      f"any edge over them carries between {lo} and {hi} colours")

# now break it: give two classes the same private colour
bad = Colouring(classes=((0, 1), (0, 1), (0, 2), (0, 3), (0, 4)))
print(f"\nrepeating a private colour: "
      f"{'valid' if is_valid(spec, bad) else 'invalid'}")
witness = find_violation(spec, bad)
print(f"witness: classes {witness.class_tuple}, parts "
      f"{witness.part_assignment}, picks {witness.per_class_choice} "
      f"-> {witness.distinct_colours} colours (needs 3..3)")

# a monochromatic colouring fails on the other side
mono = Colouring(classes=((0, 0),) * 5)
w = find_violation(spec, mono)
print(f"\nall one colour: witness shows {w.distinct_colours} colour(s)")

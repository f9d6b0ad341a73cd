"""Building sigma-class hypergraphs and looking at their edge structure.

An instance H(n, r, q | sigma) never stores edges: an edge is any r-subset
whose non-zero class-intersection sizes realise the partition sigma, and
everything downstream quantifies over *edge shapes* instead.  This script
builds a few instances, lists their shapes, and cross-checks the binomial
edge count against literal enumeration.
"""

from sigma_spectra import (
    HypergraphSpec,
    build_sigma,
    count_edges,
    edge_shapes,
    enumerate_edges,
)

sigma = build_sigma([2, 1])
print(f"sigma = {sigma}: r={sigma.r}, parts={sigma.s}, "
      f"largest={sigma.delta_max}, smallest={sigma.delta_min}")

spec = HypergraphSpec(n=3, q=2, sigma=sigma, alpha=2, beta=3)
print(f"\n{spec}")
print(f"vertices: {spec.num_vertices}, has edges: {spec.has_edges}")

print("\nedge shapes (class tuple, part placed on each class):")
for classes, parts in edge_shapes(spec):
    print(f"  classes {classes} carry parts {parts}")

n_formula = count_edges(spec)
n_literal = len(enumerate_edges(spec))
print(f"\nedge count via shapes: {n_formula}, via literal enumeration: "
      f"{n_literal}")
assert n_formula == n_literal

# equal parts collapse to a single arrangement
wide = HypergraphSpec(n=4, q=6, sigma=build_sigma([6, 6]), alpha=3, beta=3)
shapes = list(edge_shapes(wide))
print(f"\n{wide}")
print(f"equal parts: {len(shapes)} shapes for 6 class pairs "
      f"(one arrangement each), {count_edges(wide)} edges in total")

# and an instance with no edges at all: q smaller than the largest part
empty = HypergraphSpec(n=4, q=1, sigma=build_sigma([2, 1]), alpha=2, beta=2)
print(f"\n{empty}: has edges: {empty.has_edges}, "
      f"count: {count_edges(empty)}")

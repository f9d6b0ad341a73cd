"""Full spectra, and how gaps appear and disappear.

Three stories:
  * a window whose spectrum is a single point (no gap, no zone),
  * a window with a genuine gap and no monochromatic zone,
  * the balanced construction that manufactures gaps on demand whenever
    the smallest part of sigma is small enough relative to beta.
"""

from sigma_spectra import (
    HypergraphSpec,
    beta_colouring,
    build_sigma,
    decide_k,
    gap_instance_params,
    is_valid,
    mono_zone,
    spectrum,
)

# a one-point spectrum: only n+1 colours work
point = HypergraphSpec(n=5, q=2, sigma=build_sigma([2, 2]), alpha=3, beta=3)
res = spectrum(point)
print(f"{point}\n  spectrum {list(res.feasible_k)}, gaps "
      f"{[(g.lo, g.hi) for g in res.gaps]}")

# a gap without any monochromatic zone; only three exact decisions are
# needed to exhibit it (the full run over all 42 k takes about a minute)
big = HypergraphSpec(n=7, q=6, sigma=build_sigma([6, 6]), alpha=3, beta=3)
print(f"\n{big}  (zone: {mono_zone(big)})")
for k in (3, 4, 8):
    d = decide_k(big, k, node_budget=50_000_000)
    print(f"  k={k}: {d.verdict} ({d.nodes} nodes)")
print("  3 and 8 feasible with 4 infeasible: the spectrum has a gap")

# manufacturing a gap: pick the window and sigma, get q and n
sigma = build_sigma([2, 2])
q, n_min = gap_instance_params(2, 2, sigma)
gap = HypergraphSpec(n=n_min, q=q, sigma=sigma, alpha=2, beta=2)
print(f"\ngap recipe for window (2,2), sigma {sigma}: q={q}, n={n_min}")
built = beta_colouring(gap)
print(f"balanced colouring uses {built.colour_count} colours, valid: "
      f"{is_valid(gap, built)}")
res = spectrum(gap)
print(f"engine spectrum: {list(res.feasible_k)}, gaps "
      f"{[(g.lo, g.hi) for g in res.gaps]}")
print(f"zone {mono_zone(gap)} sits above the gap")

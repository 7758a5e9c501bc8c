"""Three classic random-graph ensembles next to their analytic laws:
uniform attachment, small worlds, and preferential attachment.

Run with:  python demos/06_random_ensembles.py
"""

import numpy as np

from graphphys import (
    DegreeDistribution,
    adjacency_matrix,
    barabasi_albert,
    ba_theory,
    clustering,
    connected_components,
    er_theory,
    erdos_renyi,
    fit_power_law,
    ks_statistic,
    semicircle_cdf,
    split_seed,
    watts_strogatz,
    ws_theory,
)

# --- independent-edge graphs ---------------------------------------------
n, p = 1000, 0.01
theory = er_theory(n, p)
seeds = split_seed(42, 30)
samples = [erdos_renyi(n, p, seed=s) for s in seeds]
mean_degree = np.mean([g.degree_sequence().mean() for g in samples])
mean_clustering = np.mean([clustering(g).average for g in samples])
print(f"independent-edge graphs, n={n}, p={p} ({theory.regime} regime):")
print(f"  mean degree    {mean_degree:.3f}  (theory {theory.mean_degree:.3f})")
print(f"  clustering     {mean_clustering:.4f}   (theory {theory.clustering:.4f})")
print(f"  giant component fraction predicted {theory.giant_fraction:.4f}, "
      f"observed {max(len(c) for c in connected_components(samples[0])) / n:.4f}")

# The bulk eigenvalue density follows the semicircle law.
g = erdos_renyi(2000, p, seed=split_seed(4, 1)[0])
lams = np.sort(np.linalg.eigvalsh(adjacency_matrix(g)))
stat = ks_statistic(lams[:-1], lambda x: semicircle_cdf(x, 2000, p))
print(f"  eigenvalue bulk vs semicircle law: KS distance {stat:.4f}")

# --- small worlds ---------------------------------------------------------
print("\nring lattice with shortcuts, n=200, k=6:")
wst = ws_theory(200, 6)
ring = watts_strogatz(200, 6, 0.0, seed=7)
print(f"  p=0: clustering {clustering(ring).average:.4f} "
      f"(closed form {wst.clustering_ring:.4f})")
for p_rewire in (0.05, 0.3, 1.0):
    g = watts_strogatz(200, 6, p_rewire, seed=7)
    predicted = wst.clustering_after_rewiring(p_rewire)
    print(f"  p={p_rewire:.2f}: clustering {clustering(g).average:.4f} "
          f"(decay estimate {predicted:.4f})")

# --- preferential attachment ---------------------------------------------
print("\npreferential attachment, n=30000, d=2:")
pooled = []
for s in split_seed(11, 5):
    pooled.extend(barabasi_albert(30000, 2, seed=s).degree_sequence())
dist = DegreeDistribution.from_degrees(pooled)
fit = fit_power_law(dist, k_min=4, k_max=120)
bat = ba_theory(30000, 2)
print(f"  cumulative-tail slope {fit.slope:.3f} -> degree exponent "
      f"{fit.gamma:.3f} (theory {bat.degree_exponent:.1f})")
print(f"  stationary law at k=10: {bat.degree_probability(10):.5f}, "
      f"measured {dist.pdf[list(dist.k).index(10)]:.5f}")

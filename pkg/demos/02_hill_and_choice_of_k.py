"""
Hill's estimator and the choice of k
====================================

On exact Pareto data, using more of the tail only helps. On data that is only
asymptotically power-law (Student-t, symmetric stable), a small k avoids the
body of the distribution.
"""

import numpy as np

import tailindex as ti

x = ti.generate_pareto(100_000, 1.5, 5.0, rng=3)
for k in (100, 1_000, 10_000, 50_000, 99_999):
    print(f"Pareto  k={k:>6}: {ti.alpha_hills(x, k).shape:.4f}")

###############################################################################
# k may also be a threshold: the smallest observation above it becomes the
# reference point.
print(ti.alpha_hills(x, 50.0, value=True))

###############################################################################
# k = N is the MLE; the result carries a note saying so.
print(ti.alpha_hills(x, len(x)).warnings)

###############################################################################
# Student-t with 3 degrees of freedom has tail index 3. Both tails are
# symmetric, so we work with magnitudes.
t3 = np.abs(ti.generate_student_t(100_000, 3, rng=4))
stable = np.abs(ti.generate_stable_symmetric(100_000, 1.5, rng=4))
for k in (500, 1_000, 10_000, 75_000):
    print(f"k={k:>6}  t(3): {ti.alpha_hills(t3, k).shape:.3f}   stable(1.5): {ti.alpha_hills(stable, k).shape:.3f}")

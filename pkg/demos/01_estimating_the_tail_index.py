"""
Estimating the tail index of Pareto data
========================================

Draw a Pareto sample and compare the closed-form estimators on it.
"""

import numpy as np

import tailindex as ti

# 100,000 draws with shape alpha = 1.2 and scale xmin = 3
x = ti.generate_pareto(100_000, 1.2, 3.0, rng=1234)
print("first values:", np.round(x[:6], 6))

###############################################################################
# All estimators except Hill in one call. Every row reports the sample
# minimum as its scale.
for row in ti.generate_all_estimates(x):
    print(f"{row.label:<30} {row.shape:10.6f} {row.scale:10.6f}")

###############################################################################
# The MLE can also be bias-corrected, or returned with a confidence interval.
print(ti.alpha_mle(x, biased=False))
r = ti.alpha_mle(x, significance=0.05)
print(f"95% interval: [{r.lower_bound:.6f}, {r.upper_bound:.6f}]")

###############################################################################
# For alpha <= 1 the mean is infinite and the method of moments drifts to 1,
# with a warning. Always cross-check it against another estimator.
heavy = ti.generate_pareto(10**6, 0.5, 2.0, rng=7)
print("MoM:", ti.alpha_moment(heavy).shape, " MLE:", ti.alpha_mle(heavy).shape)

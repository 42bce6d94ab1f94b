"""
Is it Pareto?
=============

Log-transformed Pareto data is exponential, so a QQ plot against exponential
quantiles is a straight line with slope 1/alpha, and an exponentiality test
on ln(x / xmin) serves as a goodness-of-fit test.
"""

import numpy as np

import tailindex as ti

rng = np.random.default_rng(1234)
pareto = ti.generate_pareto(100_000, 1.2, 3.0, rng=rng)
expo = rng.exponential(1 / 5, 100_000)

qq = ti.pareto_qq_data(pareto)
print("Pareto QQ slope:", qq.fitted_slope, "-> alpha ~", 1 / qq.fitted_slope)
print("max |residual|  Pareto:", np.abs(qq.residuals()).max(),
      " exponential:", np.abs(ti.pareto_qq_data(expo).residuals()).max())

###############################################################################
# The CSV form is ready for any plotting tool.
print(ti.pareto_qq_data(pareto[:5]).to_csv())

###############################################################################
# Goodness of fit: large p for Pareto data, essentially zero otherwise.
print(ti.pareto_gof_test(pareto))
print(ti.pareto_gof_test(expo))
print(ti.pareto_gof_test(np.abs(rng.standard_normal(1000))))

###############################################################################
# A matplotlib rendering, if it is installed.
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None
if plt is not None:
    plt.plot(qq.theoretical, qq.empirical, ".", ms=2)
    plt.plot(qq.theoretical, qq.fitted_intercept + qq.fitted_slope * qq.theoretical, "r-")
    plt.xlabel("standard exponential quantile")
    plt.ylabel("ln x")
    plt.savefig("pareto_qq.png", dpi=100)

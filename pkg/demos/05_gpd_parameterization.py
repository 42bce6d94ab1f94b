"""
Pareto as a generalized Pareto distribution
===========================================

A GPD with shape xi > 0 and location mu = sigma / xi is a Pareto with
alpha = 1 / xi and xmin = mu. A fitted xi therefore gives a tail index.
"""

import numpy as np
from scipy import integrate

import tailindex as ti

gpd = ti.pareto_to_gpd(ti.ParetoParams(alpha=2.0, xmin=3.0))
print(gpd)
print(ti.gpd_to_pareto(gpd))

x = np.geomspace(3, 3e4, 5)
print(ti.gpd_pdf(x, gpd))
print(ti.pareto_pdf(x, ti.ParetoParams(2.0, 3.0)))
print("integral:", integrate.quad(lambda v: ti.gpd_pdf(v, gpd), 3, np.inf)[0])

###############################################################################
# Sampling through the GPD parameters gives exactly the Pareto stream.
a = ti.generate_gpd(5, gpd, rng=7)
b = ti.generate_pareto(5, 2.0, 3.0, rng=7)
print(a, b, np.array_equal(a, b))

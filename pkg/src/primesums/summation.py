"""Error-compensated prefix sums.

``np.cumsum`` on a 1-d array adds sequentially, so the rounding error of
every step can be recovered exactly with a vectorised TwoSum and
accumulated separately (the prefix analogue of Ogita-Rump-Oishi ``Sum2``).
"""

import numpy as np


def two_sum(a, b):
    """Error-free transformation: ``a + b == s + e`` exactly."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def compensated_cumsum(values, start=0.0):
    """Prefix sums ``start + x[0] + ... + x[i]`` accurate to about one rounding."""
    x = np.asarray(values, dtype=np.float64)
    if x.size == 0:
        return x.copy()
    naive = np.cumsum(np.concatenate(([float(start)], x)))
    _, err = two_sum(naive[:-1], x)
    return naive[1:] + np.cumsum(err)

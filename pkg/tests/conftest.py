import numpy as np

from circulant4 import CirculantCoeffs


def random_admissible(rng, low=0.05, high=5.0):
    """Random coefficient triple satisfying the strict chain 0 < B < C < A."""
    while True:
        b, c, a = np.sort(rng.uniform(low, high, size=3))
        if 0 < b < c < a:
            return CirculantCoeffs(a, b, c)

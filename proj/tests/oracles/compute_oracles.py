"""Independent oracles for the frozen expected values in the C++ test suite.

Run with `python3 tests/oracles/compute_oracles.py`; nothing here imports the
C++ library, so the values it prints can be compared against it.
"""
import itertools
import math

import mpmath
from scipy.special import ellipe


def perimeter(p, q):
    # 4 * a * E(e^2) with a the major semi-axis.
    a, b = max(p, q), min(p, q)
    return 4.0 * a * ellipe(1.0 - (b / a) ** 2)


def spectrum_size(d, mu):
    bound = 2 * math.pi * (d + 1) + 1
    keys = set()
    nmax = int(bound / math.pi) + 1
    for n1, n2, n3 in itertools.product(range(nmax + 1), repeat=3):
        total = n1 + n2 + n3
        if total == 0 or total % 2:
            continue
        value = total * math.pi + mu * (n2 + 2 * n3)
        if value <= bound:
            keys.add((total, n2 + 2 * n3))
    return len(keys)


def offdiag_jacobian():
    # d/da of the perimeter with semi-axes (a^-1/2, 1) at a = 1.
    mpmath.mp.dps = 30
    f = lambda a: mpmath.quad(
        lambda t: mpmath.sqrt(mpmath.sin(t) ** 2 / a + mpmath.cos(t) ** 2),
        [0, 2 * mpmath.pi])
    return mpmath.diff(f, 1)


if __name__ == "__main__":
    print("perimeter(1, 1/2) =", repr(perimeter(1.0, 0.5)))
    print("perimeter(1/sqrt2 pair) total =", repr(2 * 2 * math.pi / math.sqrt(2)))
    print("latitude pi/3 length =", repr(2 * math.pi * math.sin(math.pi / 3)))
    for d, mu in [(0, 0.1), (1, 0.05), (2, 1e-3), (3, 0.01)]:
        print(f"|R|(d={d}, mu={mu}) =", spectrum_size(d, mu))
    print("J* =", offdiag_jacobian(), " -pi/2 =", -mpmath.pi / 2)

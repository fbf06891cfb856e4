"""Independent reference implementations used only by the tests.

Each one computes the same quantity as library code by a different route,
so agreement is evidence rather than tautology.
"""

from __future__ import annotations

import random
from fractions import Fraction


def odd_partitions_brute(n: int, largest: int | None = None):
    """All partitions of n into odd parts, as non-increasing tuples."""
    if largest is None:
        largest = n if n % 2 else n - 1
    if n == 0:
        yield ()
        return
    for p in range(min(largest, n), 0, -1):
        if p % 2 == 0:
            continue
        for rest in odd_partitions_brute(n - p, p):
            yield (p,) + rest


def G_coefficient_signed(n: int) -> int:
    """a(n) from the signed-partition expansion of 1/((q; q^4)(-q^3; q^4)).

    1/(1 + q^m) = sum_j (-1)^j q^(jm), so a(n) counts partitions of n into
    odd parts, each weighted by (-1)^(number of parts that are 3 mod 4).
    """
    total = 0
    for p in odd_partitions_brute(n):
        k = sum(1 for part in p if part % 4 == 3)
        total += -1 if k % 2 else 1
    return total


def _block_ids(parts) -> list[int]:
    ids = []
    for b, size in enumerate(parts):
        ids += [b] * size
    return ids


def seaweed_index_linear_algebra(top, bottom, seed: int = 1, prime: int = (1 << 61) - 1) -> int:
    """Index of the seaweed subalgebra of gl(n) for compositions top, bottom.

    The algebra is spanned by e_ij with block_top(i) <= block_top(j) and
    block_bottom(i) >= block_bottom(j).  Its index is dim minus the rank of
    the Kirillov form f([e_a, e_b]) at a random functional f; the rank is
    taken modulo a large prime, so it is generic with overwhelming probability.
    """
    n = sum(top)
    bt, bb = _block_ids(top), _block_ids(bottom)
    basis = [(i, j) for i in range(n) for j in range(n) if bt[i] <= bt[j] and bb[i] >= bb[j]]
    rng = random.Random(seed)
    f = {(i, j): rng.randrange(1, prime) for i in range(n) for j in range(n)}

    def bracket(a, b):
        # [e_ij, e_kl] = d_jk e_il - d_li e_kj, evaluated by f
        (i, j), (k, l) = a, b
        v = 0
        if j == k:
            v += f[(i, l)]
        if l == i:
            v -= f[(k, j)]
        return v % prime

    M = [[bracket(a, b) for b in basis] for a in basis]
    return len(basis) - _rank_mod(M, prime)


def _rank_mod(M, p: int) -> int:
    M = [row[:] for row in M]
    rank = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], p - 2, p)
        M[rank] = [x * inv % p for x in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][c]:
                m = M[r][c]
                M[r] = [(x - m * y) % p for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


def bernoulli_from_generating_function(n: int) -> Fraction:
    """B_n from x/(e^x - 1) by exact power-series inversion (B_1 = -1/2)."""
    # (e^x - 1)/x = sum_k x^k/(k+1)!, invert the series
    import math
    d = [Fraction(1, math.factorial(k + 1)) for k in range(n + 1)]
    inv = [Fraction(0)] * (n + 1)
    inv[0] = Fraction(1)
    for k in range(1, n + 1):
        inv[k] = -sum(d[j] * inv[k - j] for j in range(1, k + 1))
    return inv[n] * math.factorial(n)

"""Helpers shared between test modules."""


def random_feasible_multiplicities(n, rng):
    """Draw M_1..M_n with sum 2^n and M_k <= 2^k, uniformly-ish."""
    remaining = 1 << n
    mults = [0] * n
    for k in range(n, 1, -1):
        below = (1 << k) - 2  # capacity of classes 1..k-1
        lo = max(0, remaining - below)
        hi = min(1 << k, remaining)
        mults[k - 1] = rng.randint(lo, hi)
        remaining -= mults[k - 1]
    mults[0] = remaining
    assert 0 <= mults[0] <= 2
    return mults


def random_bits(rng, length):
    if length == 0:
        return ""
    return format(rng.getrandbits(length), f"0{length}b")

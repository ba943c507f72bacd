"""Counting runs of consecutive prime powers without enumerating them.

The count (with multiplicity) is the number of pairs b < t with
f[t] - f[b] <= x.  Because f is strictly increasing, the admissible
ends for each start b form a contiguous range, and the largest
admissible end never decreases as b grows.  A single pointer t
therefore sweeps the array once and the whole count costs O(pi) after
the prefix array exists.
"""

from bisect import bisect_right
from typing import NamedTuple

from .prefix import PowerPrefixSums


class CountReport(NamedTuple):
    x: int
    k: int
    count: int  # runs of length >= 1 with sum <= x, with multiplicity
    max_run_length: int  # longest run starting at the first prime
    prime_count: int  # primes with p^k <= x


def max_run_length(ps: PowerPrefixSums) -> int:
    """Largest m with p_1^k + ... + p_m^k <= x."""
    return bisect_right(ps.f, ps.x) - 1


def count_sums(ps: PowerPrefixSums) -> CountReport:
    f = ps.f
    x = ps.x
    n_primes = len(ps.primes)
    t = max_run_length(ps)
    longest = t
    total = 0
    for b in range(n_primes):
        # t only moves forward: the largest valid end is nondecreasing
        # in b, and for t < b the window is empty, so the pointer
        # catches up on its own.  Contribution per b is max(t - b, 0),
        # and t >= b always holds after the while loop since f[b+1]
        # - f[b] = p^k <= x for every sieved prime.
        cap = x + f[b]
        while t < n_primes and f[t + 1] <= cap:
            t += 1
        total += t - b
    return CountReport(
        x=x, k=ps.k, count=total, max_run_length=longest, prime_count=n_primes
    )

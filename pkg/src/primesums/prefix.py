"""Prefix sums of k-th powers of primes.

With primes p_1 < p_2 < ... the array f satisfies f[0] = 0 and
f[i] = p_1^k + ... + p_i^k, so every sum of consecutive prime powers
p_{b+1}^k + ... + p_t^k is the difference f[t] - f[b].  Everything
downstream (enumeration, counting, duplicate detection) works on those
differences.
"""

from dataclasses import dataclass

from .arith import UINT128_MAX, check_uint128, checked_pow, integer_kth_root
from .sieve import DEFAULT_BUDGET_BYTES, PrimeList, primes_up_to

K_MIN = 2
K_MAX = 64


def check_power(k: int) -> int:
    if not K_MIN <= k <= K_MAX:
        raise ValueError(f"power k must be in {K_MIN}..{K_MAX}, got {k}")
    return k


@dataclass(frozen=True)
class PowerPrefixSums:
    """Primes whose k-th power fits under x, with running power sums.

    f has len(primes) + 1 entries: f[0] = 0 and f[i] - f[i-1] is the
    k-th power of the i-th prime, so f is strictly increasing.
    """

    x: int
    k: int
    primes: PrimeList
    f: list

    def __len__(self) -> int:
        return len(self.primes)

    def window_sum(self, b: int, t: int) -> int:
        """Sum of k-th powers of primes b+1 .. t (0-based indices into f)."""
        return self.f[t] - self.f[b]


def build_from_primes(primes, k: int, x: int) -> PowerPrefixSums:
    """Prefix sums over an explicit ascending prime sequence.

    Raises OverflowError naming the offending index if any running
    total leaves the 128-bit range.
    """
    check_power(k)
    prime_values = list(primes)
    f = [0] * (len(prime_values) + 1)
    total = 0
    for i, p in enumerate(prime_values):
        total += checked_pow(p, k)
        if total > UINT128_MAX:
            raise OverflowError(
                f"prefix sum through prime index {i} (p={p}) exceeds"
                f" 128 bits; reduce x"
            )
        f[i + 1] = total
    limit = prime_values[-1] if prime_values else 0
    return PowerPrefixSums(
        x=x, k=k, primes=PrimeList(limit=limit, primes=prime_values), f=f
    )


def build(x: int, k: int, budget_bytes: int = DEFAULT_BUDGET_BYTES) -> PowerPrefixSums:
    """Prefix sums covering every prime whose k-th power is <= x.

    Only primes p <= floor(x^(1/k)) can appear in a sum bounded by x, so
    the sieve stops there.
    """
    check_power(k)
    check_uint128(x, "x")
    root = integer_kth_root(x, k)
    plist = primes_up_to(root, budget_bytes)
    ps = build_from_primes(plist.primes, k, x)
    return PowerPrefixSums(x=x, k=k, primes=plist, f=ps.f)

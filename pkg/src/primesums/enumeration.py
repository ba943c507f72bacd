"""Streaming enumeration of consecutive prime-power sums.

Every n <= x of the form p_{b+1}^k + ... + p_t^k is emitted exactly
once per witness (b, t), ordered by start index and then length: the
outer loop walks b, the inner loop extends t until the window exceeds
x.  The stream is a generator, so a billion representations never need
to sit in memory at once.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, NamedTuple, Optional

from .prefix import PowerPrefixSums, build
from .sieve import DEFAULT_BUDGET_BYTES


class Representation(NamedTuple):
    """One witness that n is a sum of consecutive prime k-th powers.

    start_index is the 0-based position b of the first prime in the
    run, so the run covers primes[b : b + length] and
    n = f[b + length] - f[b].
    """

    n: int
    k: int
    start_index: int
    length: int
    start_prime: int


def enumerate_sums(
    ps: PowerPrefixSums, start: int = 0, stop: Optional[int] = None
) -> Iterator[Representation]:
    """Yield every representation with n <= x, b ascending, length ascending.

    start/stop restrict the range of start indices; the default covers
    every prime.  Closing the generator early is safe.
    """
    f = ps.f
    primes = ps.primes.primes
    x = ps.x
    k = ps.k
    n_primes = len(primes)
    if stop is None or stop > n_primes:
        stop = n_primes
    for b in range(start, stop):
        fb = f[b]
        cap = x + fb
        p = primes[b]
        for t in range(b + 1, n_primes + 1):
            ft = f[t]
            if ft > cap:
                break
            yield Representation(ft - fb, k, b, t - b, p)


def _chunk_list(ps: PowerPrefixSums, span) -> list:
    return list(enumerate_sums(ps, span[0], span[1]))


def enumerate_chunked(
    ps: PowerPrefixSums, workers: int
) -> Iterator[Representation]:
    """Same stream as enumerate_sums, produced by concurrent workers.

    The start-index range is split into contiguous chunks enumerated
    independently against the shared immutable prefix array, then
    concatenated in chunk order, so output is identical to the
    sequential stream for any worker count.
    """
    n_primes = len(ps.primes)
    if workers <= 1 or n_primes == 0:
        yield from enumerate_sums(ps)
        return
    chunk = (n_primes + workers - 1) // workers
    spans = [(lo, min(lo + chunk, n_primes)) for lo in range(0, n_primes, chunk)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for fut in [pool.submit(_chunk_list, ps, span) for span in spans]:
            yield from fut.result()


def length_histogram(ps: PowerPrefixSums) -> dict:
    """Map run length m to the number of representations of that length.

    Only lengths with a nonzero count appear.  Uses the same two-pointer
    sweep as counting: a start b with largest valid end t contributes
    one representation of every length 1..t-b, recorded in a difference
    array so the sweep stays linear in pi + max length.
    """
    f = ps.f
    x = ps.x
    n_primes = len(ps.primes)
    t = 0
    while t < n_primes and f[t + 1] <= x:
        t += 1
    longest = t
    diff = [0] * (longest + 2)
    for b in range(n_primes):
        cap = x + f[b]
        while t < n_primes and f[t + 1] <= cap:
            t += 1
        run = t - b
        if run > 0:
            diff[1] += 1
            diff[run + 1] -= 1
    hist = {}
    acc = 0
    for m in range(1, longest + 1):
        acc += diff[m]
        if acc > 0:
            hist[m] = acc
    return hist


def smallest_elements(
    k: int, count: int, budget_bytes: int = DEFAULT_BUDGET_BYTES
) -> list:
    """The count smallest distinct representable values, ascending.

    Doubles the search bound until enough distinct values are found;
    any bound x captures every representable n <= x, so the first
    count values of the sorted distinct set are final.
    """
    if count < 1:
        return []
    x = 1 << (k + 4)
    while True:
        ps = build(x, k, budget_bytes)
        seen = {rep.n for rep in enumerate_sums(ps)}
        if len(seen) >= count:
            return sorted(seen)[:count]
        x <<= 4

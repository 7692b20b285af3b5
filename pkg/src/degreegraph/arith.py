"""Prime sieving, trial-division factorization and prime-power tests.

Every integer handled here must fit in a signed 64-bit word; larger inputs
are rejected rather than silently handled with big-int arithmetic, so the
behaviour matches the documented limits of the rest of the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator

import numpy as np

MAX_INPUT = 2**63 - 1
# q**2 - 1 stays below MAX_INPUT for every q up to this bound.
MAX_SQUARABLE_Q = 3 * 10**9

_SEGMENT = 1 << 18


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization: ``(prime, exponent)`` pairs, primes ascending."""

    pairs: tuple[tuple[int, int], ...]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def value(self) -> int:
        n = 1
        for p, e in self.pairs:
            n *= p**e
        return n


def _simple_sieve(limit: int) -> np.ndarray:
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime)


def _segments(lo: int, hi: int) -> Iterator[np.ndarray]:
    """Primes in ``[lo, hi]``, one sieved segment at a time."""
    base = _simple_sieve(isqrt(hi)).tolist()
    while lo <= hi:
        top = min(lo + _SEGMENT, hi + 1)
        flags = np.ones(top - lo, dtype=bool)
        for p in base:
            if p * p >= top:
                break
            start = max(p * p, -(-lo // p) * p)
            flags[start - lo :: p] = False
        found = np.flatnonzero(flags) + lo
        yield found[found >= 2]
        lo = top


def sieve_primes(limit: int) -> list[int]:
    """Return all primes ``<= limit`` in ascending order.

    Segmented sieve of Eratosthenes: only the base primes up to
    ``sqrt(limit)`` and one segment of flags are held in memory at a time.
    A ``limit`` below 2 gives an empty list.
    """
    if limit < 2:
        return []
    if limit <= _SEGMENT:
        return _simple_sieve(limit).tolist()
    return np.concatenate(list(_segments(2, limit))).tolist()


def smallest_prime_factors(limit: int) -> np.ndarray:
    """Table ``spf`` with ``spf[n]`` the least prime factor of ``n`` for ``2 <= n <= limit``.

    Entries 0 and 1 are 0. Memory is four bytes per entry.
    """
    if limit > np.iinfo(np.uint32).max:
        raise ValueError(f"spf table limit {limit} exceeds uint32 range")
    spf = np.zeros(max(limit, 1) + 1, dtype=np.uint32)
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    unset = np.flatnonzero(spf == 0)
    unset = unset[unset >= 2]
    spf[unset] = unset
    return spf


_BASE_LIMIT = 1 << 20
_BASE_PRIMES = sieve_primes(_BASE_LIMIT)
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime_64(n: int) -> bool:
    # Miller-Rabin with these bases is exact for n < 3.3e24
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _trial_divisors(bound: int) -> Iterator[int]:
    yield from _BASE_PRIMES
    if bound > _BASE_LIMIT:
        for seg in _segments(_BASE_LIMIT + 1, bound):
            yield from seg.tolist()


def _check_input(n: int) -> None:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if n > MAX_INPUT:
        raise ValueError(f"{n} exceeds the supported maximum 2**63 - 1")


def factorize(n: int) -> Factorization:
    """Factor ``n`` by trial division over sieved primes up to ``sqrt(n)``.

    Once the divisors pass 2**20 the cofactor is tested for primality (again
    after every factor found), so a large prime factor ends the search.
    """
    _check_input(n)
    pairs = []
    rem = n
    tested = False
    for p in _trial_divisors(isqrt(n)):
        if p * p > rem:
            break
        if p > _BASE_LIMIT and not tested:
            if _is_prime_64(rem):
                break
            tested = True
        if rem % p == 0:
            tested = False
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            pairs.append((p, e))
    if rem > 1:
        pairs.append((rem, 1))
    return Factorization(tuple(pairs))


def prime_divisors(n: int) -> frozenset[int]:
    """The set of distinct primes dividing ``n`` (empty for 1)."""
    return frozenset(factorize(n).primes)


def prime_power_decompose(q: int) -> tuple[int, int] | None:
    """Return ``(u, alpha)`` with ``q == u**alpha`` for a prime ``u``, else ``None``."""
    if q < 2:
        raise ValueError(f"prime power test needs q >= 2, got {q}")
    f = factorize(q)
    if len(f) != 1:
        return None
    return f.pairs[0]


def is_prime(n: int) -> bool:
    return _is_prime_64(n)


def prime_powers(lo: int, hi: int) -> list[int]:
    """All prime powers ``u**alpha`` (alpha >= 1) in ``[lo, hi]``, ascending."""
    out = []
    for u in sieve_primes(hi):
        q = u
        while q <= hi:
            if q >= lo:
                out.append(q)
            q *= u
    out.sort()
    return out

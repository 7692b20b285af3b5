"""Character degree sets of PSL(2, q), SL(2, q) and direct products."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .arith import MAX_INPUT, MAX_SQUARABLE_Q, prime_power_decompose

DegreeSet = tuple[int, ...]


class DegreeOverflowError(OverflowError):
    """A product of degrees does not fit in a signed 64-bit integer."""


@dataclass(frozen=True, order=True)
class PrimePowerQ:
    """Field size ``q = u**alpha`` with ``q >= 4``."""

    u: int
    alpha: int

    def __post_init__(self) -> None:
        if self.alpha < 1 or prime_power_decompose(self.u) != (self.u, 1):
            raise ValueError(f"{self.u}**{self.alpha} is not a prime power")
        if self.q < 4:
            raise ValueError(f"field size must be at least 4, got {self.q}")
        if self.q > MAX_SQUARABLE_Q:
            raise ValueError(f"field size {self.q} exceeds {MAX_SQUARABLE_Q}")

    @property
    def q(self) -> int:
        return self.u**self.alpha

    @classmethod
    def of(cls, q: int | PrimePowerQ) -> PrimePowerQ:
        if isinstance(q, PrimePowerQ):
            return q
        if q < 4:
            raise ValueError(f"field size must be at least 4, got {q}")
        if q > MAX_SQUARABLE_Q:
            raise ValueError(f"field size {q} exceeds {MAX_SQUARABLE_Q}")
        dec = prime_power_decompose(q)
        if dec is None:
            raise ValueError(f"{q} is not a prime power")
        return cls(*dec)


def degree_set(values: Iterable[int]) -> DegreeSet:
    """Normalize ``values`` to a sorted, duplicate-free degree set containing 1."""
    out = sorted(set(values))
    if not out or out[0] != 1:
        raise ValueError("a degree set must contain 1")
    if out[-1] > MAX_INPUT:
        raise DegreeOverflowError(f"degree {out[-1]} exceeds 2**63 - 1")
    return tuple(out)


def cd_psl2(q: int | PrimePowerQ) -> DegreeSet:
    """Irreducible character degrees of PSL(2, q)."""
    pq = PrimePowerQ.of(q)
    n = pq.q
    if n == 5:
        return (1, 3, 4, 5)
    if pq.u == 2:
        return (1, n - 1, n, n + 1)
    eps = 1 if ((n - 1) // 2) % 2 == 0 else -1
    return degree_set((1, n - 1, n, n + 1, (n + eps) // 2))


def cd_sl2(q: int | PrimePowerQ) -> DegreeSet:
    """Irreducible character degrees of SL(2, q).

    For even q the group coincides with PSL(2, q). For odd q > 5 both half
    degrees ``(q - 1)/2`` and ``(q + 1)/2`` occur.
    """
    pq = PrimePowerQ.of(q)
    n = pq.q
    if n == 5:
        return (1, 2, 3, 4, 5, 6)
    if pq.u == 2:
        return cd_psl2(pq)
    return degree_set((1, n - 1, n, n + 1, (n - 1) // 2, (n + 1) // 2))


def cd_group(group: str, q: int | PrimePowerQ) -> DegreeSet:
    if group == "psl2":
        return cd_psl2(q)
    if group == "sl2":
        return cd_sl2(q)
    raise ValueError(f"unknown group family {group!r}")


def product_degree_set(a: Iterable[int], b: Iterable[int]) -> DegreeSet:
    """Degree set of a direct product: all pairwise products, deduplicated."""
    a = tuple(a)
    b = tuple(b)
    if a and b and max(a) * max(b) > MAX_INPUT:
        raise DegreeOverflowError(
            f"product {max(a)} * {max(b)} exceeds 2**63 - 1"
        )
    return degree_set(x * y for x in a for y in b)

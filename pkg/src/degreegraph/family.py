"""Families of PSL(2, q) factors whose direct product beats ``|V| <= 2w + 1``.

A *candidate* is a prime power ``q = u**alpha`` with ``u > 3`` such that
``q - 1`` and ``q + 1`` each have exactly one prime divisor outside
``{2, 3}``. Its three private primes ``u, p_minus, p_plus`` form a triangle
in the complement of the degree graph. Candidates whose private primes are
pairwise disjoint can be multiplied together; the product of ``n`` of them
has ``3n + 2`` vertices and clique number ``n + 2``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .arith import factorize, prime_power_decompose, smallest_prime_factors
from .chardeg import PrimePowerQ, cd_psl2
from .graph import AnyGraph, build_graph, join_many, join_product, max_clique

log = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 32
DEFAULT_EXACT_CAP = 128
# published size of a compatible family; greedy first-fit over primes below 10**7 gives it
REFERENCE_FAMILY_SIZE = 15615
SHARED = frozenset({2, 3})


class IncompatibleFamilyError(ValueError):
    def __init__(self, first: Signature, second: Signature) -> None:
        self.pair = (first, second)
        shared = sorted(first.private & second.private)
        super().__init__(
            f"q={first.q} and q={second.q} share primes {shared}"
        )


class FamilyValidityError(AssertionError):
    """Computed vertex count or clique number disagrees with ``3n+2`` / ``n+2``."""


class PackingCapError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Signature:
    field_size: PrimePowerQ
    p_minus: int
    p_plus: int

    @property
    def q(self) -> int:
        return self.field_size.q

    @property
    def u(self) -> int:
        return self.field_size.u

    @property
    def alpha(self) -> int:
        return self.field_size.alpha

    @property
    def private(self) -> frozenset[int]:
        return frozenset((self.u, self.p_minus, self.p_plus))

    @property
    def support(self) -> frozenset[int]:
        return SHARED | self.private

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "u": self.u,
            "alpha": self.alpha,
            "p_minus": self.p_minus,
            "p_plus": self.p_plus,
        }


def _lone_prime(n: int) -> int | None:
    rest = [p for p in factorize(n).primes if p > 3]
    return rest[0] if len(rest) == 1 else None


def candidate_signature(q: int) -> Signature | None:
    """Signature of ``q`` if it qualifies as a family member, else ``None``."""
    if q < 4:
        return None
    dec = prime_power_decompose(q)
    if dec is None or dec[0] <= 3:
        return None
    p_minus = _lone_prime(q - 1)
    p_plus = _lone_prime(q + 1)
    if p_minus is None or p_plus is None:
        return None
    return Signature(PrimePowerQ(*dec), p_minus, p_plus)


def _strip_23(values: np.ndarray) -> np.ndarray:
    out = values.copy()
    for p in (2, 3):
        while True:
            hit = out % p == 0
            if not hit.any():
                break
            out[hit] //= p
    return out


def find_candidates(limit: int, include_prime_powers: bool = False) -> list[Signature]:
    """All candidates ``q <= limit`` in ascending order.

    With ``include_prime_powers`` false only primes are scanned. The scan
    uses a least-prime-factor table up to ``limit + 1`` (4 bytes per entry).
    """
    if limit < 5:
        return []
    spf = smallest_prime_factors(limit + 1).astype(np.int64)
    idx = np.arange(limit + 2, dtype=np.int64)
    idx[0] = 1
    core = _strip_23(idx)
    lead = spf[core]
    # core is a power of one prime > 3 exactly when stripping its least prime leaves 1
    rem = core.copy()
    divisor = np.where(core > 1, lead, core + 1)
    while True:
        hit = (rem > 1) & (rem % divisor == 0)
        if not hit.any():
            break
        rem[hit] //= divisor[hit]
    single = (core > 1) & (rem == 1)

    qs = np.arange(5, limit + 1)
    qs = qs[(spf[qs] == qs) & single[qs - 1] & single[qs + 1]]
    sigs = [
        Signature(PrimePowerQ(int(q), 1), int(lead[q - 1]), int(lead[q + 1]))
        for q in qs.tolist()
    ]
    if include_prime_powers:
        u = 5
        while u * u <= limit:
            if spf[u] == u:
                q = u * u
                while q <= limit:
                    sig = candidate_signature(q)
                    if sig is not None:
                        sigs.append(sig)
                    q *= u
            u += 1
        sigs.sort(key=lambda s: s.q)
    return sigs


def compatible(a: Signature, b: Signature) -> bool:
    """True when the supports of ``a`` and ``b`` meet exactly in ``{2, 3}``."""
    return a.private.isdisjoint(b.private)


def pack_greedy(candidates: Iterable[Signature]) -> list[Signature]:
    """First-fit packing in ascending ``q``; a candidate is kept if none of its private primes is used."""
    used: set[int] = set()
    kept = []
    for sig in sorted(candidates, key=lambda s: s.q):
        if used.isdisjoint(sig.private):
            used |= sig.private
            kept.append(sig)
    return kept


def pack_exact(candidates: Sequence[Signature], cap: int = DEFAULT_EXACT_CAP) -> list[Signature]:
    """A maximum pairwise-compatible subset, via maximum independent set on the conflict graph.

    Raises :class:`PackingCapError` for more than ``cap`` candidates.
    """
    from .graph import DegreeGraph, maximum_independent_set

    cands = sorted(set(candidates), key=lambda s: s.q)
    if len(cands) > cap:
        raise PackingCapError(f"{len(cands)} candidates exceed the exact-packing cap {cap}")
    by_prime: dict[int, list[int]] = {}
    for i, sig in enumerate(cands):
        for p in sig.private:
            by_prime.setdefault(p, []).append(i)
    edges = {
        (a, b)
        for members in by_prime.values()
        for k, a in enumerate(members)
        for b in members[k + 1 :]
    }
    conflicts = DegreeGraph.from_edges(range(len(cands)), edges)
    chosen = maximum_independent_set(conflicts)
    return [cands[i] for i in sorted(chosen)]


def check_family(family: Sequence[Signature]) -> None:
    """Raise :class:`IncompatibleFamilyError` naming the first clashing pair."""
    owner: dict[int, Signature] = {}
    for sig in family:
        for p in sorted(sig.private):
            if p in owner:
                raise IncompatibleFamilyError(owner[p], sig)
        for p in sig.private:
            owner[p] = sig


def build_gpi_graph(family: Sequence[Signature], threshold: int = DEFAULT_THRESHOLD) -> AnyGraph:
    """Degree graph of the direct product of PSL(2, q_i) over ``family``.

    Families larger than ``threshold`` are returned as a
    :class:`~degreegraph.graph.JoinGraph`.
    """
    if not family:
        raise ValueError("family must be non-empty")
    check_family(family)
    factors = [build_graph(cd_psl2(sig.field_size)) for sig in family]
    if len(factors) > threshold:
        return join_many(factors)
    g = factors[0]
    for h in factors[1:]:
        g = join_product(g, h)
    return g


@dataclass(frozen=True)
class FamilyReport:
    n: int
    vertex_count: int
    clique_number: int
    family: tuple[Signature, ...] = field(repr=False)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.vertex_count, self.clique_number)

    @property
    def bound_2w1_holds(self) -> bool:
        return self.vertex_count <= 2 * self.clique_number + 1

    @property
    def bound_3w4_holds(self) -> bool:
        return self.vertex_count <= 3 * self.clique_number - 4

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "vertices": self.vertex_count,
            "omega": self.clique_number,
            "ratio": {"num": self.ratio.numerator, "den": self.ratio.denominator},
            "ineq_2w_plus_1": self.bound_2w1_holds,
            "ineq_3w_minus_4": self.bound_3w4_holds,
            "family": [s.to_dict() for s in self.family],
        }


def family_report(family: Sequence[Signature], threshold: int = DEFAULT_THRESHOLD) -> FamilyReport:
    g = build_gpi_graph(family, threshold)
    n = len(family)
    omega, _ = max_clique(g)
    if len(g.vertices) != 3 * n + 2 or omega != n + 2:
        raise FamilyValidityError(
            f"n={n}: got |V|={len(g.vertices)}, omega={omega}; "
            f"expected {3 * n + 2} and {n + 2}"
        )
    log.debug("family of %d factors: |V|=%d omega=%d", n, len(g.vertices), omega)
    return FamilyReport(n, len(g.vertices), omega, tuple(family))


def signatures_for(qs: Iterable[int]) -> list[Signature]:
    """Signatures for explicit field sizes; raises ``ValueError`` on any non-candidate."""
    out = []
    for q in qs:
        sig = candidate_signature(q)
        if sig is None:
            raise ValueError(f"q={q} is not a valid family member")
        out.append(sig)
    return out

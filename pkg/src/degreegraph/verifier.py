"""Checks of the vertex-count bound and of the shape of Delta(PSL(2, q))."""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import prime_divisors, prime_powers
from .chardeg import PrimePowerQ, cd_psl2, cd_sl2
from .graph import AnyGraph, build_graph, connected_components, is_clique, max_clique


def theorem_a_bound(omega: int) -> int:
    """Largest vertex count allowed for clique number ``omega``: ``max(2w+1, 3w-4)``."""
    if omega < 0:
        raise ValueError(f"clique number must be non-negative, got {omega}")
    return max(2 * omega + 1, 3 * omega - 4)


@dataclass(frozen=True)
class BoundReport:
    vertex_count: int
    clique_number: int

    @property
    def bound_value(self) -> int:
        return theorem_a_bound(self.clique_number)

    @property
    def holds(self) -> bool:
        return self.vertex_count <= self.bound_value

    @property
    def ineq1_holds(self) -> bool:
        return self.vertex_count <= 2 * self.clique_number + 1

    def to_dict(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "omega": self.clique_number,
            "bound": self.bound_value,
            "holds": self.holds,
            "ineq_2w_plus_1": self.ineq1_holds,
        }


def check_bound(g: AnyGraph) -> BoundReport:
    omega, _ = max_clique(g)
    return BoundReport(len(g.vertices), omega)


class StructureViolation(AssertionError):
    def __init__(self, q: int, clause: str) -> None:
        self.q = q
        self.clause = clause
        super().__init__(f"q={q}: {clause}")


@dataclass(frozen=True)
class StructureReport:
    q: int
    components: tuple[frozenset[int], ...]
    pi_plus: frozenset[int]
    pi_minus: frozenset[int]


def check_psl2_structure(q: int | PrimePowerQ) -> StructureReport:
    """Verify the component and clique structure of Delta(PSL(2, q)).

    Raises :class:`StructureViolation` naming the first clause that fails.
    """
    pq = PrimePowerQ.of(q)
    n, u = pq.q, pq.u
    g = build_graph(cd_psl2(pq))
    comps = connected_components(g)
    plus, minus = prime_divisors(n + 1), prime_divisors(n - 1)

    def require(ok: bool, clause: str) -> None:
        if not ok:
            raise StructureViolation(n, clause)

    if n == 5:
        require(g.vertices == (2, 3, 5), "q=5: vertex set is {2,3,5}")
        require(g.edge_count() == 0, "q=5: graph is edgeless")
    elif u == 2:
        expected = {frozenset({u}), plus, minus}
        require(len(comps) == 3, "u=2: exactly three components")
        require(set(comps) == expected, "u=2: components are {u}, pi(q+1), pi(q-1)")
        for c in comps:
            require(is_clique(g, sorted(c)), "u=2: every component is complete")
    else:
        require(
            set(g.vertices) == {u} | prime_divisors(n * n - 1),
            "u odd: vertex set is {u} union pi(q^2-1)",
        )
        require(len(comps) == 2, "u odd: exactly two components")
        require(
            set(comps) == {frozenset({u}), plus | minus},
            "u odd: components are {u} and pi(q+1) union pi(q-1)",
        )
        require(is_clique(g, sorted(plus)), "u odd: pi(q+1) induces a complete graph")
        require(is_clique(g, sorted(minus)), "u odd: pi(q-1) induces a complete graph")
        require(
            not any(g.has_edge(a, b) for a in plus - {2} for b in minus - {2}),
            "u odd: no edge between pi(q+1)-{2} and pi(q-1)-{2}",
        )
        require(
            all(g.has_edge(2, v) for v in (plus | minus) - {2}),
            "u odd: 2 is adjacent to every other vertex of pi(q^2-1)",
        )
    return StructureReport(n, tuple(comps), plus, minus)


@dataclass
class ScanSummary:
    limit: int
    checked: int = 0
    failures: list[tuple[int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "limit": self.limit,
            "checked": self.checked,
            "failures": [{"q": q, "clause": c} for q, c in sorted(self.failures)],
        }


def scan_psl2(limit: int) -> ScanSummary:
    """Run the structure check and the bound check on every prime power ``4 <= q <= limit``.

    The bound is checked for PSL(2, q) and, when it differs, for SL(2, q).
    """
    summary = ScanSummary(limit)
    for q in prime_powers(4, limit):
        summary.checked += 1
        try:
            check_psl2_structure(q)
        except StructureViolation as exc:
            summary.failures.append((q, exc.clause))
        groups = {cd_psl2(q), cd_sl2(q)}
        for degrees in sorted(groups):
            if not check_bound(build_graph(degrees)).holds:
                summary.failures.append((q, "vertex count exceeds max(2w+1, 3w-4)"))
    return summary

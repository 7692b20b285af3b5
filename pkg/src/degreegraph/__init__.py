"""Character degree graphs of PSL(2,q), SL(2,q) and their direct products."""

from .arith import factorize, prime_divisors, prime_power_decompose, sieve_primes
from .chardeg import PrimePowerQ, cd_psl2, cd_sl2, product_degree_set
from .family import (
    Signature,
    candidate_signature,
    compatible,
    family_report,
    find_candidates,
    pack_exact,
    pack_greedy,
    build_gpi_graph,
)
from .graph import (
    DegreeGraph,
    JoinGraph,
    build_graph,
    complement,
    connected_components,
    is_bipartite,
    join_product,
    max_clique,
    two_clique_cover,
)
from .verifier import check_bound, check_psl2_structure, scan_psl2, theorem_a_bound

__version__ = "0.1.0"

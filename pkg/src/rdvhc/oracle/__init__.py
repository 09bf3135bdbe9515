from .generators import GenSpec, enumerate_small_instances, gen_bipartite, planted_cycle
from .naive import brute_force_hamiltonian, brute_force_maximal_cliques
from .solver import SolverResult, find_hamiltonian_cycle

__all__ = [
    "GenSpec",
    "SolverResult",
    "brute_force_hamiltonian",
    "brute_force_maximal_cliques",
    "enumerate_small_instances",
    "find_hamiltonian_cycle",
    "gen_bipartite",
    "planted_cycle",
]

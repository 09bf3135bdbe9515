"""Hamiltonian Cycle on bipartite max-degree-3 graphs reduced to rooted directed path graphs."""
from .cyclemap import JBlock, find_j_blocks, lift_cycle, project_cycle
from .errors import (GenerationError, InvalidProjection, ParseError, ResourceExhausted,
                     StructureViolation, ValidationError)
from .graph import Cycle, Graph, canonical_cycle, is_hamiltonian_cycle, maximal_cliques
from .rdv import (CliqueTree, DirectedPathFamily, RootedDirectedTree, VerificationReport,
                  intersection_graph, is_directed_path, paths_from_clique_tree, verify_rdp_clique_tree)
from .reduction import (BipartiteInstance, NormalizationOutcome, ReducedInstance, build_clique_tree,
                        normalize, reduce)

__version__ = "0.1.0"

from pcpforge.reductions.common import DEFAULT_CAP_STATES, DEFAULT_SAMPLES, MODES, MonteCarloEstimate
from pcpforge.reductions.proofs import ProofAssignment, long_code_proofs, random_proofs
from pcpforge.reductions.proofs import constant_proofs, ones_fraction
from pcpforge.reductions.hypergraph import HypergraphInstance, build_hypergraph, yes_two_coloring
from pcpforge.reductions.hypergraph import independent_set_violations, violations_by_enumeration
from pcpforge.reductions.hypergraph import monochromatic_weight, good_vertex_fraction, as_subset
from pcpforge.reductions.e3sat import CnfInstance, e3sat_acceptance, export_e3sat_cnf
from pcpforge.reductions.e3sat import assignment_from_proofs, variable_offsets
from pcpforge.reductions.set_splitting import SetSplitInstance, fourss_rejection, fourss_rejection_terms
from pcpforge.reductions.set_splitting import rho4_benchmark, export_4ss_instance, partition_from_proofs
from pcpforge.reductions.bruteforce import max_solution_bruteforce

REDUCTIONS_MAP = {
    "hypergraph": build_hypergraph,
    "e3sat": export_e3sat_cnf,
    "4ss": export_4ss_instance,
}

__all__ = [
    "DEFAULT_CAP_STATES", "DEFAULT_SAMPLES", "MODES", "MonteCarloEstimate",
    "ProofAssignment", "long_code_proofs", "random_proofs", "constant_proofs", "ones_fraction",
    "HypergraphInstance", "build_hypergraph", "yes_two_coloring", "independent_set_violations",
    "violations_by_enumeration", "monochromatic_weight", "good_vertex_fraction", "as_subset",
    "CnfInstance", "e3sat_acceptance", "export_e3sat_cnf", "assignment_from_proofs", "variable_offsets",
    "SetSplitInstance", "fourss_rejection", "fourss_rejection_terms", "rho4_benchmark",
    "export_4ss_instance", "partition_from_proofs",
    "max_solution_bruteforce",
    "REDUCTIONS_MAP",
]

from pcpforge.distributions.blocks import FLIP, COPY, INDEPENDENT, KINDS
from pcpforge.distributions.blocks import Branch, Block, Configuration, BlockFactoredDistribution
from pcpforge.distributions.blocks import hypergraph_joint, e3sat_joint, fourss_joint, JOINTS_MAP
from pcpforge.distributions.blocks import pair_rule_marginal, block_value, block_values, char_expectation
from pcpforge.distributions.blocks import char_expectation_hypergraph, char_expectation_e3sat
from pcpforge.distributions.blocks import char_expectation_4ss
from pcpforge.distributions.oracle import ORACLE_CAP, block_outcomes, full_support, joint_index
from pcpforge.distributions.oracle import support_character_table, coordinate_marginals
from pcpforge.distributions.oracle import equal_pattern_probability
from pcpforge.distributions.correlation import pair_correlation
from pcpforge.distributions.sampler import QuadQuery, TripleQuery, sample, sample_many
from pcpforge.distributions.sampler import empirical_tv, sampler_tv
from pcpforge.distributions.rho import RhoCorrelatedSpace, rho_correlated, uniform_measures

CHAR_EXPECTATIONS_MAP = {
    "hypergraph": char_expectation_hypergraph,
    "e3sat": char_expectation_e3sat,
    "fourss": char_expectation_4ss,
}

__all__ = [
    "FLIP", "COPY", "INDEPENDENT", "KINDS",
    "Branch", "Block", "Configuration", "BlockFactoredDistribution",
    "hypergraph_joint", "e3sat_joint", "fourss_joint", "JOINTS_MAP",
    "pair_rule_marginal", "block_value", "block_values", "char_expectation",
    "char_expectation_hypergraph", "char_expectation_e3sat", "char_expectation_4ss",
    "CHAR_EXPECTATIONS_MAP",
    "ORACLE_CAP", "block_outcomes", "full_support", "joint_index",
    "support_character_table", "coordinate_marginals", "equal_pattern_probability",
    "pair_correlation",
    "QuadQuery", "TripleQuery", "sample", "sample_many", "empirical_tv", "sampler_tv",
    "RhoCorrelatedSpace", "rho_correlated", "uniform_measures",
]

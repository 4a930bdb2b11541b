from pcpforge.label_cover.game import LabelCoverInstance, Labeling
from pcpforge.label_cover.game import value, satisfied_edges, is_biregular
from pcpforge.label_cover.game import expected_random_right_value
from pcpforge.label_cover.generators import generate_planted, from_3sat_base_game
from pcpforge.label_cover.generators import parallel_repetition, lift_labeling
from pcpforge.label_cover.solvers import optimum_bruteforce, projection_expansion_stats

GENERATORS_MAP = {
    "planted": generate_planted,
    "3sat-base": from_3sat_base_game,
    "repeat": parallel_repetition,
}

__all__ = [
    "LabelCoverInstance", "Labeling",
    "value", "satisfied_edges", "is_biregular", "expected_random_right_value",
    "generate_planted", "from_3sat_base_game", "parallel_repetition", "lift_labeling",
    "optimum_bruteforce", "projection_expansion_stats",
    "GENERATORS_MAP",
]

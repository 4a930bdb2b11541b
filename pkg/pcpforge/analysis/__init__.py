from pcpforge.analysis.gamma import GammaReport, SELF_KINDS, pi_image, pi_odd, gamma_closed_form, gamma
from pcpforge.analysis.gamma import pair_coefficient, self_correlation, direct_self_correlation, cross_weight
from pcpforge.analysis.lemmas import CheckResult, RtReport, C1
from pcpforge.analysis.lemmas import p_measure, p_measure_blockwise, p_measure_total
from pcpforge.analysis.lemmas import lemma_bb1_check, lemma_rt_bound, lemma_lowerbd_check
from pcpforge.analysis.lemmas import lemma_4ss_xx_check, lemma_4ss_xx_neighborhood
from pcpforge.analysis.lemmas import fourss_table_check, fourss_spectral_bound_check
from pcpforge.analysis.mixing import mixing_exponent, mixing_bound_check
from pcpforge.analysis.decoding import VARIANTS, DecodingOutcome, Decoder
from pcpforge.analysis.decoding import decode_labeling, expected_decoded_value
from pcpforge.analysis.schedule import ScheduleReport, SCHEDULES_MAP, parameter_schedule
from pcpforge.analysis.schedule import e3sat_schedule, hypergraph_schedule, fourss_schedule

__all__ = [
    "GammaReport", "SELF_KINDS", "pi_image", "pi_odd", "gamma_closed_form", "gamma",
    "pair_coefficient", "self_correlation", "direct_self_correlation", "cross_weight",
    "CheckResult", "RtReport", "C1",
    "p_measure", "p_measure_blockwise", "p_measure_total",
    "lemma_bb1_check", "lemma_rt_bound", "lemma_lowerbd_check",
    "lemma_4ss_xx_check", "lemma_4ss_xx_neighborhood",
    "fourss_table_check", "fourss_spectral_bound_check",
    "mixing_exponent", "mixing_bound_check",
    "VARIANTS", "DecodingOutcome", "Decoder", "decode_labeling", "expected_decoded_value",
    "ScheduleReport", "SCHEDULES_MAP", "parameter_schedule",
    "e3sat_schedule", "hypergraph_schedule", "fourss_schedule",
]

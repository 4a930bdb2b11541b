""" lemma-check suites run by `pcpforge check`

Each suite maps its trials over the worker pool (ordered, so reports do not
depend on the worker count) and returns report records. Trial t of suite s
draws from the stream (seed, "check", s, t).
"""
import itertools
from fractions import Fraction
from decimal import Decimal
from functools import partial


from pcpforge.utils.errors import PcpError
from pcpforge.utils.exp_utils import pmap
from pcpforge.utils.misc import fraction_str, dec_str, digest, parse_fraction, submasks
from pcpforge.utils.rng import make_rng, random_fraction_weights
from pcpforge.boolean_fourier import wht, naive_wht, parseval, random_table, constant_table
from pcpforge.label_cover import generate_planted
from pcpforge.distributions import (
    hypergraph_joint, e3sat_joint, fourss_joint, support_character_table, joint_index,
    CHAR_EXPECTATIONS_MAP, sampler_tv, rho_correlated,
)
from pcpforge.reductions import (
    ProofAssignment, long_code_proofs, random_proofs, build_hypergraph, yes_two_coloring,
    monochromatic_weight, e3sat_acceptance, fourss_rejection,
)
from pcpforge.analysis import (
    gamma, pi_image, p_measure, p_measure_blockwise, p_measure_total, lemma_bb1_check, lemma_rt_bound,
    lemma_lowerbd_check, lemma_4ss_xx_check, fourss_table_check, fourss_spectral_bound_check,
    mixing_bound_check, decode_labeling, expected_decoded_value,
)


def num(value):
    """ report form of a number: exact rationals as p/q, decimals with 30 digits """
    if value is None:
        return None
    if isinstance(value, Decimal):
        return dec_str(value)
    if isinstance(value, (Fraction, int)):
        return fraction_str(value)
    return repr(float(value))


def record(check, inputs, lhs, rhs, passed, **extra):
    rec = {"check": check, "inputs_digest": digest(inputs), "lhs": num(lhs), "rhs": num(rhs),
           "passed": bool(passed)}
    rec.update(extra)
    return rec


def _rng(seed, suite, trial):
    return make_rng(seed, "check", suite, trial)


def _projection(rng, k, m):
    return [int(p) for p in rng.integers(0, k, size=m)]


def _dims(rng, max_k, max_m):
    m = int(rng.integers(1, max_m + 1))
    k = int(rng.integers(1, min(m, max_k) + 1))
    return k, m


def _eps_of(p, trial):
    choices = [parse_fraction(e) for e in p["eps"]]
    return choices[trial % len(choices)]


#####################################################################################
### Fourier closed forms
#####################################################################################

def gamma_trial(trial, seed, p):
    rng = _rng(seed, "gamma", trial)
    k, m = _dims(rng, p["max_k"], p["max_m"])
    pi = _projection(rng, k, m)
    reports = [gamma(pi, alpha, k=k) for alpha in range(1 << m)]
    failures = sum(1 for r in reports if r.closed_form != r.brute_force)
    return [record("gamma", {"pi": pi, "k": k}, failures, 0, failures == 0, masks=1 << m)]


def _oracle_cases(p):
    cases = []
    for m in range(1, p["max_m"] + 1):
        for k in range(1, min(m, p["max_k"]) + 1):
            cases.append(("hypergraph", k, m, None))
            for e in p["eps"]:
                cases.append(("e3sat", k, m, e))
                cases.append(("fourss", k, m, e))
    return cases


def char_oracle_trial(trial, seed, p):
    cases = _oracle_cases(p)
    kind, k, m, eps = cases[trial % len(cases)]
    rng = _rng(seed, "char_oracles", trial)
    pi_vu, pi_wu = _projection(rng, k, m), _projection(rng, k, m)
    if kind == "hypergraph":
        dist = hypergraph_joint(pi_vu, pi_wu, k=k)
    elif kind == "e3sat":
        dist = e3sat_joint(pi_vu, eps, k=k)
    else:
        dist = fourss_joint(pi_vu, pi_wu, eps, k=k)
    nums, den = support_character_table(dist, cap=p["oracle_cap"])
    expectation = CHAR_EXPECTATIONS_MAP[kind]
    if kind == "e3sat":
        ranges = (range(1 << dist.x_dim), range(1 << dist.y_dim), range(1 << dist.y_dim))
    else:
        ranges = (range(1 << dist.x_dim),) * 2 + (range(1 << dist.y_dim),) * 2
    failures, total = 0, 0
    for masks in itertools.product(*ranges):
        total += 1
        if expectation(dist, *masks) != Fraction(int(nums[joint_index(dist, masks)]), den):
            failures += 1
    inputs = {"kind": kind, "k": k, "pi_vu": pi_vu, "pi_wu": pi_wu, "eps": num(eps)}
    return [record("char_oracles", inputs, failures, 0, failures == 0, kind=kind, masks=total)]


def parseval_trial(trial, seed, p):
    rng = _rng(seed, "parseval", trial)
    dim = int(rng.integers(0, p["max_dim"] + 1))
    mode = ("pm1", "indicator")[trial % 2]
    table = random_table(dim, rng, mode=mode)
    spec = wht(table)
    lhs = parseval(spec)
    rhs = Fraction(1) if mode == "pm1" else table.mean()
    passed = lhs == rhs
    if dim <= p["naive_dim"]:
        passed = passed and spec.coefficients() == naive_wht(table)
    return [record("parseval", {"dim": dim, "mode": mode, "table": table.to_dict()}, lhs, rhs, passed)]


#####################################################################################
### lemma inequalities
#####################################################################################

def mixing_trial(trial, seed, p):
    rng = _rng(seed, "mixing", trial)
    n = int(rng.integers(1, p["max_coords"] + 1))
    sizes = [int(s) for s in rng.integers(1, p["max_alphabet"] + 1, size=n)]
    measures = [random_fraction_weights(rng, s, p["atom_denominator"]) for s in sizes]
    rhos = [parse_fraction(r) for r in p["rhos"]]
    space = rho_correlated(measures, rhos[trial % len(rhos)])
    sets = []
    for _ in range(2):
        member = rng.random(space.shape) < 0.5
        member.flat[int(rng.integers(0, member.size))] = True
        sets.append(member)
    res = mixing_bound_check(space, sets[0], sets[1])
    inputs = {"measures": [[num(q) for q in mu] for mu in measures], "rho": num(space.rho),
              "A": sets[0].astype(int).tolist(), "B": sets[1].astype(int).tolist()}
    return [record("mixing", inputs, res.lhs, res.rhs, res.passed)]


def p_measure_trial(trial, seed, p):
    rng = _rng(seed, "p_measure", trial)
    k, m = _dims(rng, p["max_k"], p["max_m"])
    pi = _projection(rng, k, m)
    beta = int(rng.integers(1, 1 << m))
    eps = _eps_of(p, trial)
    total = p_measure_total(pi, beta, eps)
    blockwise = all(p_measure(pi, beta, a, eps) == p_measure_blockwise(pi, beta, a, eps)
                    for a in submasks(pi_image(pi, beta)))
    inputs = {"pi": pi, "beta": beta, "eps": num(eps)}
    return [record("p_measure", inputs, total, 1, total == 1 and blockwise)]


def bb1_trial(trial, seed, p):
    rng = _rng(seed, "bb1", trial)
    k, m = _dims(rng, p["max_m"], p["max_m"])
    eps = _eps_of(p, trial)
    table = random_table(m, rng, folded=True)
    pi = _projection(rng, k, m)
    res = lemma_bb1_check(table, pi, eps)
    inputs = {"pi": pi, "eps": num(eps), "B": table.to_dict()}
    return [record("bb1", inputs, abs(res.lhs), res.rhs, res.passed)]


def rt_trial(trial, seed, p):
    rng = _rng(seed, "rt", trial)
    k, m = _dims(rng, p["max_k"], p["max_m"])
    R, T = p["RT"][trial % len(p["RT"])]
    eps = parse_fraction(p["eps"])
    pi = _projection(rng, k, m)
    A, B = random_table(k, rng, folded=True), random_table(m, rng, folded=True)
    res = lemma_rt_bound(A, B, pi, eps, R, T)
    inputs = {"pi": pi, "eps": num(eps), "R": R, "T": T, "A": A.to_dict(), "B": B.to_dict()}
    return [record("rt", inputs, res.lhs, res.rhs, res.passed)]


def lowerbd_trial(trial, seed, p):
    rng = _rng(seed, "lowerbd", trial)
    k, m = _dims(rng, p["max_k"], p["max_m"])
    table = random_table(m, rng, mode="indicator")
    if table.mean() == 0:
        table = constant_table(m, 1, mode="indicator")
    pi = _projection(rng, k, m)
    res = lemma_lowerbd_check(table, pi)
    return [record("lowerbd", {"pi": pi, "A": table.to_dict()}, res.lhs, res.rhs, res.passed)]


def fourss_xx_trial(trial, seed, p):
    rng = _rng(seed, "fourss_xx", trial)
    k, m = _dims(rng, p["max_k"], p["max_m"])
    eps = _eps_of(p, trial)
    table = random_table(m, rng, mode=("pm1", "indicator")[trial % 2])
    pi = _projection(rng, k, m)
    res = lemma_4ss_xx_check(table, pi, eps)
    inputs = {"pi": pi, "eps": num(eps), "A": table.to_dict()}
    return [record("fourss_xx", inputs, res.lhs, res.rhs, res.passed)]


def fourss_bound_trial(trial, seed, p):
    rng = _rng(seed, "fourss_bound", trial)
    k, m = _dims(rng, p["max_k"], p["max_m"])
    eps = _eps_of(p, trial)
    pi_vu, pi_wu = _projection(rng, k, m), _projection(rng, k, m)
    alpha, beta = int(rng.integers(0, 1 << m)), int(rng.integers(0, 1 << m))
    res = fourss_spectral_bound_check(pi_vu, pi_wu, alpha, beta, eps, k=k)
    inputs = {"pi_vu": pi_vu, "pi_wu": pi_wu, "alpha": alpha, "beta": beta, "eps": num(eps)}
    return [record("fourss_bound", inputs, res.lhs, res.rhs, res.passed)]


#####################################################################################
### verifiers and decoding
#####################################################################################

def _planted(trial, seed, p):
    rng = _rng(seed, "planted", trial)
    v = int(rng.integers(1, p["max_v"] + 1))
    u = int(rng.integers(1, p["max_u"] + 1))
    degree = int(rng.integers(max(1, -(-v // u)), v + 1))
    m = int(rng.integers(1, p["max_m"] + 1))
    k = int(rng.integers(1, min(m, p["max_k"]) + 1))
    inst_seed = int(rng.integers(0, 1 << 31))
    lc, lab = generate_planted(u, v, degree, k, m, seed=inst_seed)
    return lc, lab, {"u": u, "v": v, "degree": degree, "k": k, "m": m, "seed": inst_seed}


def completeness_trial(trial, seed, p, cap, samples):
    lc, lab, inputs = _planted(trial, seed, p)
    eps = parse_fraction(p["eps"])
    proofs = long_code_proofs(lc, lab)
    h = build_hypergraph(lc, cap)
    mono = monochromatic_weight(h, yes_two_coloring(lc, lab), mode="auto", samples=samples,
                                seed=seed)
    mono_value = getattr(mono, "value", mono)
    acceptance = e3sat_acceptance(lc, proofs, eps, mode="exact", cap=cap)
    rejection = fourss_rejection(lc, proofs, eps, mode="exact", cap=cap)
    inputs = dict(inputs, eps=num(eps))
    return [
        record("completeness_hypergraph", inputs, mono_value, 0, mono_value == 0),
        record("completeness_e3sat", inputs, acceptance, 1, acceptance == 1),
        record("completeness_4ss", inputs, rejection, 0, rejection == 0),
    ]


def decoding_trial(trial, seed, p):
    lc, lab, inputs = _planted(trial, seed, p)
    proofs = long_code_proofs(lc, lab)
    right = list(proofs.right)
    right[0] = constant_table(lc.m)
    corrupted = ProofAssignment(proofs.left, right)
    out = []
    for variant in ("hypergraph", "e3sat", "fourss"):
        dec = decode_labeling(lc, proofs, trial, variant)
        ok = dec.labeling == lab and dec.satisfied_fraction == 1
        out.append(record("decoding_" + variant, inputs, dec.satisfied_fraction, 1, ok))
        lowered = expected_decoded_value(lc, corrupted, variant)
        out.append(record("decoding_corrupted_" + variant, inputs, lowered, 1, lowered < 1))
    return out


def baseline_suite(seed, p, workers):
    lc, _ = generate_planted(p["u"], p["v"], 1, p["k"], p["k"], seed=p["instance_seed"], bijective=True)
    eps = parse_fraction(p["eps"])
    values = pmap(partial(_baseline_value, lc=lc, eps=eps, seed=seed), range(p["trials"]), workers)
    mean = sum(values, Fraction(0)) / len(values)
    tolerance = parse_fraction(p["tolerance"])
    inputs = {"instance": lc.digest(), "eps": num(eps), "trials": p["trials"]}
    return [record("baseline", inputs, mean, Fraction(7, 8), abs(mean - Fraction(7, 8)) <= tolerance,
                   tolerance=num(tolerance))]


def _baseline_value(trial, lc, eps, seed):
    proofs = random_proofs(lc, seed=int(_rng(seed, "baseline", trial).integers(0, 1 << 31)), folded=True)
    return e3sat_acceptance(lc, proofs, eps)


def sampler_suite(seed, p, workers):
    eps = parse_fraction(p["eps"])
    dists = {
        "hypergraph": hypergraph_joint([0, 1], [1, 0]),
        "e3sat": e3sat_joint([0, 1, 1], eps),
        "fourss": fourss_joint([0, 0], [0, 1], eps),
    }
    out = []
    for kind, dist in dists.items():
        tv = sampler_tv(dist, p["samples"], seed, cap=p["oracle_cap"], workers=workers)
        inputs = {"kind": kind, "samples": p["samples"], "eps": num(eps)}
        out.append(record("sampler_tv", inputs, tv, p["tolerance"], tv < p["tolerance"], kind=kind))
    rho = parse_fraction(p["rho"])
    space = rho_correlated([[Fraction(1, 3), Fraction(2, 3)], [Fraction(1, 3)] * 3], rho)
    tv = space.sampler_tv(p["samples"], seed, ("check", "sampler"))
    inputs = {"kind": space.kind, "samples": p["samples"], "rho": num(rho), "shape": list(space.shape)}
    out.append(record("sampler_tv", inputs, tv, p["tolerance"], tv < p["tolerance"], kind=space.kind))
    return out


def fourss_tables_suite(seed, p, workers):
    out = []
    for size in range(1, p["max_block"] + 1):
        for e in p["eps"]:
            cases, failures = fourss_table_check(size, e)
            out.append(record("fourss_tables", {"size": size, "eps": e}, len(failures), 0, not failures,
                              cases=cases))
    return out


#####################################################################################
### registry
#####################################################################################

TRIAL_SUITES = {
    "gamma": gamma_trial,
    "char_oracles": char_oracle_trial,
    "parseval": parseval_trial,
    "mixing": mixing_trial,
    "p_measure": p_measure_trial,
    "bb1": bb1_trial,
    "rt": rt_trial,
    "lowerbd": lowerbd_trial,
    "fourss_xx": fourss_xx_trial,
    "fourss_bound": fourss_bound_trial,
    "decoding": decoding_trial,
}

WHOLE_SUITES = {
    "fourss_tables": fourss_tables_suite,
    "baseline": baseline_suite,
    "sampler": sampler_suite,
}

SUITE_ORDER = ("gamma", "char_oracles", "parseval", "mixing", "p_measure", "bb1", "rt", "lowerbd",
               "fourss_xx", "fourss_tables", "fourss_bound", "baseline", "sampler", "completeness",
               "decoding")


def _guarded(fn, name, trial, *args):
    """ a trial that raises becomes a failed record rather than aborting the suite """
    try:
        return fn(trial, *args)
    except PcpError as e:
        return [record(name, {"trial": trial}, None, None, False, error=e.to_record())]


def run_suite(name, params, seed, workers=1, cap=None, samples=None):
    """ records of one suite, in trial order """
    params = dict(params)
    if name in WHOLE_SUITES:
        return WHOLE_SUITES[name](seed, params, workers)
    if name == "completeness":
        parts = pmap(partial(_completeness_guarded, seed=seed, p=params, cap=cap, samples=samples),
                     range(params["instances"]), workers)
    else:
        count = params.get("trials", params.get("instances"))
        parts = pmap(partial(_trial_guarded, name=name, seed=seed, p=params), range(count), workers)
    return [rec for part in parts for rec in part]


def _trial_guarded(trial, name, seed, p):
    return _guarded(TRIAL_SUITES[name], name, trial, seed, p)


def _completeness_guarded(trial, seed, p, cap, samples):
    return _guarded(completeness_trial, "completeness", trial, seed, p, cap, samples)

""" pcpforge command-line entry point

    pcpforge gen planted --u 3 --v 4 --k 3 --m 6 --seed 1 > lc.json
    pcpforge reduce e3sat --eps 1/4 --in lc.json > red.json
    pcpforge eval --proofs longcode --in red.json
    pcpforge check --seed 1 --trials default --out report.jsonl
    pcpforge params --variant e3sat --eps 1/100 --c0 1

gen and reduce write a bundle document to --out (stdout by default) so the
subcommands pipe into each other; eval, check, decode and params write json
line reports. Exit status is 0 iff every reported check passed.
"""
import os
import sys
import json
import logging
import time
from fractions import Fraction

from pcpforge.utils.errors import PcpError, ConfigError, InputError, SizeError
from pcpforge.utils.exp_utils import (
    read_file, read_json, write_text, load_config, set_print_logger, ReportLogger, time_str,
)
from pcpforge.utils.misc import fraction_str, digest
from pcpforge.label_cover import (
    LabelCoverInstance, Labeling, generate_planted, from_3sat_base_game,
    parallel_repetition, lift_labeling,
)
from pcpforge.reductions import (
    ProofAssignment, MonteCarloEstimate, long_code_proofs, random_proofs, constant_proofs,
    build_hypergraph, independent_set_violations, monochromatic_weight,
    e3sat_acceptance, export_e3sat_cnf, fourss_rejection, export_4ss_instance,
)
from pcpforge.analysis import Decoder, parameter_schedule
from pcpforge.cli.config import parse_args, validate_config, suite_config_path
from pcpforge.cli.suites import SUITE_ORDER, run_suite, num

BUNDLE_SCHEMA = "pcpforge.bundle.v1"

logger = logging.getLogger("pcpforge")


#####################################################################################
### bundles
#####################################################################################

def make_bundle(lc, labeling=None, generator=None, reduction=None):
    return {
        "schema": BUNDLE_SCHEMA,
        "instance": lc.to_dict(),
        "instance_digest": lc.digest(),
        "labeling": None if labeling is None else labeling.to_dict(),
        "generator": generator,
        "reduction": reduction,
    }


def load_bundle(path):
    """ bundle document -> (bundle dict, LabelCoverInstance, Labeling or None) """
    bundle = read_json(path)
    if not isinstance(bundle, dict) or bundle.get("schema") != BUNDLE_SCHEMA:
        raise InputError("input is not a {} document".format(BUNDLE_SCHEMA))
    lc = LabelCoverInstance.from_dict(bundle["instance"])
    labeling = None
    if bundle.get("labeling") is not None:
        labeling = Labeling.from_dict(bundle["labeling"])
        labeling.check(lc)
    return bundle, lc, labeling


def write_bundle(path, bundle):
    write_text(path, json.dumps(bundle, sort_keys=True) + "\n")


def build_proofs(kind, lc, labeling, seed):
    """ proofs flag -> ProofAssignment """
    if kind == "longcode":
        if labeling is None:
            raise InputError("--proofs longcode needs a bundle carrying a labeling")
        return long_code_proofs(lc, labeling)
    if kind == "random":
        return random_proofs(lc, seed)
    if kind == "folded":
        return random_proofs(lc, seed, folded=True)
    if kind == "constant":
        return constant_proofs(lc)
    proofs = ProofAssignment.from_dict(read_json(kind))
    return proofs.check(lc)


#####################################################################################
### subcommands
#####################################################################################

def run_gen(cfg):
    if cfg.target == "planted":
        lc, labeling = generate_planted(cfg.u, cfg.v, cfg.degree, cfg.k, cfg.m,
                                        seed=cfg.seed, bijective=cfg.bijective)
        generator = {"kind": "planted", "u": cfg.u, "v": cfg.v, "degree": cfg.degree,
                     "k": cfg.k, "m": cfg.m, "seed": cfg.seed, "bijective": cfg.bijective}
    elif cfg.target == "3sat-base":
        cnf = read_file(cfg.cnf)
        if cnf is None:
            raise InputError("cannot read cnf file {!r}".format(cfg.cnf))
        lc, labeling = from_3sat_base_game(cnf), None
        generator = {"kind": "3sat-base", "cnf": os.path.basename(cfg.cnf)}
    else:
        _, base, base_labeling = load_bundle(cfg.input)
        lc = parallel_repetition(base, cfg.r, cfg.cap_states)
        labeling = None if base_labeling is None else lift_labeling(base_labeling, base, cfg.r)
        generator = {"kind": "repeat", "r": cfg.r, "base_digest": base.digest()}
    logger.info("generated {} (|E|={}, k={}, m={})".format(cfg.target, lc.n_edges, lc.k, lc.m))
    write_bundle(cfg.out, make_bundle(lc, labeling, generator))
    return 0


def _export(target, lc, eps, cap):
    if target == "hypergraph":
        return build_hypergraph(lc, cap).to_text()
    if target == "e3sat":
        return export_e3sat_cnf(lc, eps, cap).to_text()
    return export_4ss_instance(lc, eps, cap).to_text()


def run_reduce(cfg):
    """ attach the reduction; the export is materialized when asked for or when it fits the cap """
    bundle, lc, labeling = load_bundle(cfg.input)
    eps = None if cfg.target == "hypergraph" else cfg.eps
    try:
        text = _export(cfg.target, lc, eps, cfg.cap_states)
    except SizeError:
        if cfg.export is not None:
            raise
        logger.info("export of {} exceeds the cap, keeping the reduction symbolic".format(cfg.target))
        text = None
    if text is not None and cfg.export is not None:
        write_text(cfg.export, text)
    bundle["reduction"] = {
        "kind": cfg.target,
        "eps": None if eps is None else fraction_str(eps),
        "export_digest": None if text is None else digest(text),
    }
    write_bundle(cfg.out, bundle)
    return 0


def _matches(result, expect):
    """ exact results must equal, estimates must lie within four standard errors """
    if expect is None:
        return True
    if isinstance(result, MonteCarloEstimate):
        return abs(result.value - float(expect)) <= 4 * result.stderr + 1e-12
    return Fraction(result) == expect


def _result_fields(result):
    if isinstance(result, MonteCarloEstimate):
        return {"value": result.value, "stderr": result.stderr, "samples": result.samples}
    return {"value": num(result), "stderr": None, "samples": None}


def run_eval(cfg, report):
    bundle, lc, labeling = load_bundle(cfg.input)
    reduction = bundle.get("reduction")
    if not reduction:
        raise InputError("bundle carries no reduction, run `pcpforge reduce` first")
    kind = reduction["kind"]
    proofs = build_proofs(cfg.proofs, lc, labeling, cfg.seed)
    opts = dict(mode=cfg.mode, samples=cfg.samples, seed=cfg.seed, workers=cfg.workers)
    extra = {}
    if kind == "e3sat":
        quantity = "acceptance"
        result = e3sat_acceptance(lc, proofs, reduction["eps"], cap=cfg.cap_states, **opts)
    elif kind == "4ss":
        quantity = "rejection"
        result = fourss_rejection(lc, proofs, reduction["eps"], cap=cfg.cap_states, **opts)
    else:
        quantity = "violations"
        h = build_hypergraph(lc, cfg.cap_states)
        member = [x for row in proofs.indicators("right") for x in row]
        result = independent_set_violations(h, [bool(x) for x in member], **opts)
        mono = monochromatic_weight(h, [1 - x for x in member], **opts)
        extra["monochromatic"] = _result_fields(mono)
    inputs = digest({"instance": bundle["instance_digest"], "proofs": proofs.digest(),
                     "reduction": reduction})
    fields = _result_fields(result)
    report.record("eval", inputs, fields["value"], num(cfg.expect), _matches(result, cfg.expect),
                  reduction=kind, quantity=quantity, stderr=fields["stderr"],
                  samples=fields["samples"], **extra)
    logger.info("{} {} = {}".format(kind, quantity, fields["value"]))


def run_check(cfg, report):
    path = suite_config_path(cfg)
    config = load_config(path, cfg.overwrite)
    suites = config.get("suites") or {}
    names = list(cfg.suites) if cfg.suites else [n for n in SUITE_ORDER if n in suites]
    unknown = [n for n in names if n not in SUITE_ORDER or n not in suites]
    if unknown:
        raise ConfigError(["--suites: {!r} is not configured in {}".format(n, path) for n in unknown])
    for name in names:
        start = time.time()
        records = run_suite(name, suites[name], cfg.seed, cfg.workers, cfg.cap_states, cfg.samples)
        for rec in records:
            report.record(**rec)
        failed = sum(1 for rec in records if not rec["passed"])
        logger.info("{:<16} {:>6} records, {:>4} failed ({})".format(
            name, len(records), failed, time_str(time.time() - start)))


def run_decode(cfg, report):
    bundle, lc, labeling = load_bundle(cfg.input)
    proofs = build_proofs(cfg.proofs, lc, labeling, cfg.seed)
    decoder = Decoder(lc, proofs, cfg.variant, cfg.table_mode)
    inputs = digest({"instance": bundle["instance_digest"], "proofs": proofs.digest(),
                     "variant": cfg.variant, "table_mode": cfg.table_mode})
    fractions = []
    for index in range(cfg.runs):
        outcome = decoder.decode(cfg.seed, index)
        fractions.append(outcome.satisfied_fraction)
        report.record("decode", inputs, num(outcome.satisfied_fraction), None, True,
                      run=index, labeling=outcome.labeling.to_dict(),
                      abstain_left=sum(outcome.abstain_left),
                      abstain_right=sum(outcome.abstain_right))
    expected = decoder.expected_value()
    mean = sum(fractions, Fraction(0)) / len(fractions)
    report.record("decode_expected", inputs, num(mean), num(expected), True,
                  runs=cfg.runs, variant=cfg.variant)
    logger.info("decoded {} runs: mean {} expected {}".format(cfg.runs, float(mean), float(expected)))


def run_params(cfg, report):
    value_ = cfg.eps if cfg.variant == "e3sat" else cfg.delta
    sched = parameter_schedule(cfg.variant, value_, cfg.c0, cfg.c_prime)
    inputs = digest({"variant": cfg.variant, "value": fraction_str(value_),
                     "c0": fraction_str(cfg.c0),
                     "c_prime": None if cfg.c_prime is None else fraction_str(cfg.c_prime)})
    report.record("params", inputs, sched.R, sched.T, True,
                  variant=sched.variant, R=sched.R, T=sched.T, eps=num(sched.eps),
                  delta=num(sched.delta), c0=num(sched.c0), c_prime=num(sched.c_prime),
                  predicted_value=num(sched.predicted_value))
    logger.info("{}: R={} T={}".format(sched.variant, sched.R, sched.T))


DOCUMENT_COMMANDS_MAP = {
    "gen": run_gen,
    "reduce": run_reduce,
}

REPORT_COMMANDS_MAP = {
    "eval": run_eval,
    "check": run_check,
    "decode": run_decode,
    "params": run_params,
}


#####################################################################################
### dispatch
#####################################################################################

def run(cfg):
    """ RunConfig -> exit status """
    if cfg.subcommand in DOCUMENT_COMMANDS_MAP:
        return DOCUMENT_COMMANDS_MAP[cfg.subcommand](cfg)
    report = ReportLogger(report_path=cfg.out, log_dir=cfg.log_dir)
    try:
        REPORT_COMMANDS_MAP[cfg.subcommand](cfg, report)
        summary = report.summary()
    finally:
        report.close()
    return 0 if summary["pass"] else 1


def main(argv=None):
    args = parse_args(argv)
    log_dir = getattr(args, "log_dir", None)
    set_print_logger("pcpforge", os.path.join(log_dir, "console.log") if log_dir else None)
    try:
        cfg = validate_config(args)
        return run(cfg)
    except PcpError as e:
        sys.stdout.write(json.dumps(e.to_record(), sort_keys=True) + "\n")
        sys.stdout.flush()
        logger.error("{}: {}".format(e.kind, e))
        return 2 if isinstance(e, ConfigError) else 1


if __name__ == '__main__':
    sys.exit(main())

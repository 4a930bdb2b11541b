""" command-line flags and their validation into a RunConfig namespace """
import os
import sys
import argparse
from fractions import Fraction

import pcpforge.utils.bunch as bunch
from pcpforge.utils.errors import ConfigError, InputError
from pcpforge.utils.misc import parse_fraction, fraction_str

ENV_CAP_STATES = "PCPFORGE_CAP_STATES"
DEFAULT_CAP_STATES = 1 << 24
DEFAULT_SAMPLES = 1000000
SEED_LIMIT = 1 << 64

SUBCOMMANDS = ("gen", "reduce", "eval", "check", "decode", "params")
DEFAULT_SUBCOMMAND = "check"
GEN_KINDS = ("planted", "3sat-base", "repeat")
REDUCE_KINDS = ("hypergraph", "e3sat", "4ss")
PROOF_KINDS = ("longcode", "random", "folded", "constant")
VARIANTS = ("hypergraph", "e3sat", "fourss")
TRIALS = ("default", "quick")
MODES = ("exact", "sample", "auto")

CONFIGS_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "configs")


#####################################################################################
### arguments
#####################################################################################

def _common(parser):
    parser.add_argument("--seed", type=str, default="0",
                        help="64-bit seed every random stream derives from")
    parser.add_argument("--eps", type=str, default=None, help="noise rate p/q in (0, 1)")
    parser.add_argument("--delta", type=str, default=None, help="density p/q in (0, 1]")
    parser.add_argument("--mode", type=str, default="auto",
                        help="exact, sample, or auto (exact when within caps, else sample)")
    parser.add_argument("--samples", "--n", dest="samples", type=str, default=str(DEFAULT_SAMPLES),
                        help="Monte Carlo sample count")
    parser.add_argument("--cap-states", dest="cap_states", type=str, default=None,
                        help="enumeration cap (env {} when unset)".format(ENV_CAP_STATES))
    parser.add_argument("--in", dest="input", type=str, default=None,
                        help="input bundle, '-' or unset reads stdin")
    parser.add_argument("--out", type=str, default=None,
                        help="output path, '-' or unset writes stdout")
    parser.add_argument("--workers", type=str, default="1", help="process pool size")
    parser.add_argument("--log-dir", dest="log_dir", type=str, default=None,
                        help="directory for cmd.txt, per-check logs and the console log")


def build_parser():
    parser = argparse.ArgumentParser("pcpforge")
    sub = parser.add_subparsers(dest="subcommand")

    p = sub.add_parser("gen", help="generate a Label Cover instance bundle")
    p.add_argument("target", type=str, help="|".join(GEN_KINDS))
    p.add_argument("--u", type=str, default="3", help="left vertices")
    p.add_argument("--v", type=str, default="4", help="right vertices")
    p.add_argument("--degree", type=str, default="2", help="neighbors per left vertex")
    p.add_argument("--k", type=str, default="2", help="left labels")
    p.add_argument("--m", type=str, default="3", help="right labels")
    p.add_argument("--bijective", default=False, action="store_true")
    p.add_argument("--cnf", type=str, default=None, help="3-CNF file, one clause per line")
    p.add_argument("--r", type=str, default="2", help="repetition count")
    _common(p)

    p = sub.add_parser("reduce", help="attach a reduction to a bundle")
    p.add_argument("target", type=str, help="|".join(REDUCE_KINDS))
    p.add_argument("--export", type=str, default=None,
                        help="also write the hypergraph / wcnf / 4-set text export here")
    _common(p)

    p = sub.add_parser("eval", help="evaluate proofs against the bundle's reduction")
    p.add_argument("--proofs", type=str, default="longcode",
                   help="|".join(PROOF_KINDS) + " or a proofs json file")
    p.add_argument("--expect", type=str, default=None, help="exact value p/q the result must equal")
    _common(p)

    p = sub.add_parser("check", help="run the lemma-check suites")
    p.add_argument("--trials", type=str, default="default", help="|".join(TRIALS))
    p.add_argument("--config", type=str, default=None, help="suite config yaml, overrides --trials")
    p.add_argument("--suites", type=str, nargs="+", default=None, help="subset of suites to run")
    p.add_argument("--overwrite", type=str, nargs="+", default=None,
                   help="overwrite config entries with format: nested.name-type-value ...")
    _common(p)

    p = sub.add_parser("decode", help="decode proofs into a labeling")
    p.add_argument("--variant", type=str, default="hypergraph", help="|".join(VARIANTS))
    p.add_argument("--proofs", type=str, default="longcode",
                   help="|".join(PROOF_KINDS) + " or a proofs json file")
    p.add_argument("--table-mode", dest="table_mode", type=str, default="pm1", help="pm1|indicator")
    p.add_argument("--runs", type=str, default="1", help="number of seeded decodes")
    _common(p)

    p = sub.add_parser("params", help="parameter schedule of a reduction")
    p.add_argument("--variant", type=str, default="e3sat", help="|".join(VARIANTS))
    p.add_argument("--c0", type=str, default="1")
    p.add_argument("--c-prime", dest="c_prime", type=str, default=None)
    _common(p)
    return parser


def parse_args(argv=None):
    """ bare flags or an empty command line run the default subcommand """
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or (argv[0].startswith("-") and argv[0] not in ("-h", "--help")):
        argv.insert(0, DEFAULT_SUBCOMMAND)
    return build_parser().parse_args(argv)


#####################################################################################
### validation
#####################################################################################

class _Problems(object):
    """ collects every offending flag before raising """
    def __init__(self):
        self.items = []

    def integer(self, name, text, low=None, high=None):
        try:
            value = int(text)
        except (TypeError, ValueError):
            self.items.append("--{}: not an integer: {!r}".format(name, text))
            return None
        if (low is not None and value < low) or (high is not None and value >= high):
            self.items.append("--{}: {} out of range".format(name, value))
            return None
        return value

    def rational(self, name, text, low, high, closed_high=False):
        if text is None:
            return None
        try:
            value = parse_fraction(text)
        except InputError as e:
            self.items.append("--{}: {}".format(name, e))
            return None
        inside = low < value <= high if closed_high else low < value < high
        if not inside:
            self.items.append("--{}: {} outside ({}, {}{}".format(
                name, text, low, high, "]" if closed_high else ")"))
            return None
        return value

    def choice(self, name, value, choices):
        if value not in choices:
            self.items.append("--{}: {!r} not one of {}".format(name, value, ", ".join(choices)))
            return None
        return value

    def path(self, name, path):
        if path is not None and path != "-" and not os.path.exists(path):
            self.items.append("--{}: no such file {!r}".format(name, path))
        return path


def validate_config(args, environ=None):
    """ argparse namespace (or dict) plus environment -> RunConfig Bunch

    Every offending flag is reported in one ConfigError.
    """
    raw = dict(vars(args)) if isinstance(args, argparse.Namespace) else dict(args)
    environ = os.environ if environ is None else environ
    probs = _Problems()
    cfg = bunch.Bunch()

    cfg.subcommand = probs.choice("subcommand", raw.get("subcommand"), SUBCOMMANDS)
    cfg.seed = probs.integer("seed", raw.get("seed", "0"), 0, SEED_LIMIT)
    cfg.eps = probs.rational("eps", raw.get("eps"), 0, 1)
    cfg.delta = probs.rational("delta", raw.get("delta"), 0, 1, closed_high=True)
    cfg.mode = probs.choice("mode", raw.get("mode", "auto"), MODES)
    cfg.samples = probs.integer("samples", raw.get("samples", DEFAULT_SAMPLES), 1)
    cfg.workers = probs.integer("workers", raw.get("workers", "1"), 1)
    cap = raw.get("cap_states")
    if cap is None:
        cap = environ.get(ENV_CAP_STATES, DEFAULT_CAP_STATES)
    cfg.cap_states = probs.integer("cap-states", cap, 1)
    cfg.input = probs.path("in", raw.get("input"))
    cfg.out = raw.get("out")
    cfg.log_dir = raw.get("log_dir")

    sub = cfg.subcommand
    if sub == "gen":
        cfg.target = probs.choice("target", raw.get("target"), GEN_KINDS)
        for name in ("u", "v", "degree", "k", "m", "r"):
            cfg[name] = probs.integer(name, raw.get(name), 1)
        cfg.bijective = bool(raw.get("bijective", False))
        cfg.cnf = probs.path("cnf", raw.get("cnf"))
        if cfg.target == "3sat-base" and cfg.cnf is None:
            probs.items.append("--cnf: required for gen 3sat-base")
    elif sub == "reduce":
        cfg.target = probs.choice("target", raw.get("target"), REDUCE_KINDS)
        cfg.export = raw.get("export")
        if cfg.target in ("e3sat", "4ss") and cfg.eps is None:
            probs.items.append("--eps: required for reduce {}".format(cfg.target))
    elif sub in ("eval", "decode"):
        proofs = raw.get("proofs", "longcode")
        cfg.proofs = proofs if proofs in PROOF_KINDS else probs.path("proofs", proofs)
        if sub == "eval":
            cfg.expect = None if raw.get("expect") is None else probs.rational(
                "expect", raw.get("expect"), -1, 1, closed_high=True)
        else:
            cfg.variant = probs.choice("variant", raw.get("variant", "hypergraph"), VARIANTS)
            cfg.table_mode = probs.choice("table-mode", raw.get("table_mode", "pm1"), ("pm1", "indicator"))
            cfg.runs = probs.integer("runs", raw.get("runs", "1"), 1)
    elif sub == "check":
        cfg.trials = probs.choice("trials", raw.get("trials", "default"), TRIALS)
        cfg.config = probs.path("config", raw.get("config"))
        cfg.suites = list(raw["suites"]) if raw.get("suites") else None
        cfg.overwrite = list(raw["overwrite"]) if raw.get("overwrite") else None
    elif sub == "params":
        cfg.variant = probs.choice("variant", raw.get("variant", "e3sat"), VARIANTS)
        cfg.c0 = probs.rational("c0", raw.get("c0", "1"), 0, float("inf"))
        cfg.c_prime = probs.rational("c-prime", raw.get("c_prime"), 0, float("inf"))
        value = cfg.eps if cfg.variant == "e3sat" else cfg.delta
        if value is None:
            probs.items.append("--{}: required for params --variant {}".format(
                "eps" if cfg.variant == "e3sat" else "delta", cfg.variant))

    if probs.items:
        raise ConfigError(probs.items)
    return cfg


def suite_config_path(cfg):
    if cfg.get("config"):
        return cfg.config
    return os.path.join(CONFIGS_DIR, "check_{}.yaml".format(cfg.trials))


#####################################################################################
### serialization
#####################################################################################

def _flag_value(value):
    if isinstance(value, Fraction):
        return fraction_str(value)
    return str(value)


_COMMON_FLAGS = (
    ("seed", "--seed", 0), ("eps", "--eps", None), ("delta", "--delta", None),
    ("mode", "--mode", "auto"), ("samples", "--samples", DEFAULT_SAMPLES),
    ("cap_states", "--cap-states", None), ("input", "--in", None), ("out", "--out", None),
    ("workers", "--workers", 1), ("log_dir", "--log-dir", None),
)

_SUB_FLAGS = {
    "gen": (("u", "--u"), ("v", "--v"), ("degree", "--degree"), ("k", "--k"), ("m", "--m"),
            ("cnf", "--cnf"), ("r", "--r")),
    "reduce": (("export", "--export"),),
    "eval": (("proofs", "--proofs"), ("expect", "--expect")),
    "check": (("trials", "--trials"), ("config", "--config")),
    "decode": (("variant", "--variant"), ("proofs", "--proofs"), ("table_mode", "--table-mode"),
               ("runs", "--runs")),
    "params": (("variant", "--variant"), ("c0", "--c0"), ("c_prime", "--c-prime")),
}


def to_flags(cfg):
    """ RunConfig -> argv list; validate_config(parse_args(to_flags(cfg))) == cfg

    The cap is always written out so the environment cannot change it on re-parse.
    """
    argv = [cfg.subcommand]
    if "target" in cfg:
        argv.append(cfg.target)
    for key, flag, default in _COMMON_FLAGS:
        value = cfg.get(key)
        if value is not None and (key == "cap_states" or value != default):
            argv += [flag, _flag_value(value)]
    for key, flag in _SUB_FLAGS.get(cfg.subcommand, ()):
        if cfg.get(key) is not None:
            argv += [flag, _flag_value(cfg[key])]
    if cfg.get("bijective"):
        argv.append("--bijective")
    for key, flag in (("suites", "--suites"), ("overwrite", "--overwrite")):
        if cfg.get(key):
            argv += [flag] + list(cfg[key])
    return argv

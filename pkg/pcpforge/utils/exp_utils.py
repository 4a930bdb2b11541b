import os
import sys
import json
import logging
import multiprocessing

import yaml
import termcolor as tc
from dict_deep import deep_set

import pcpforge.utils.bunch as bunch
from pcpforge.utils.errors import ConfigError, InputError

#####################################################################################
### files and configs
#####################################################################################

def mkdirs(*paths):
    for path in paths:
        if path and not os.path.exists(path):
            os.makedirs(path)


def eval_token(token):
    """ convert string token to int, float or str """
    if token.isnumeric():
        return int(token)
    try:
        return float(token)
    except ValueError:
        return token


def read_file(file_path, sep=","):
    """ read a file (json, yaml, csv, txt)
    """
    if file_path is None or len(file_path) < 1 or not os.path.exists(file_path):
        return None
    with open(file_path, "r") as f:
        if file_path.endswith(".json"):
            return json.load(f)
        if file_path.endswith((".yaml", ".yml")):
            return yaml.safe_load(f)
        sep = sep if file_path.endswith(".csv") else None
        data = []
        for line in f.readlines():
            line_post = [eval_token(t) for t in line.strip().split(sep)]
            # if only single item in line
            if len(line_post) == 1:
                line_post = line_post[0]
            if line_post != [] and line_post != "":
                data.append(line_post)
    return data


def overwrite_config(line, config):
    """ overwrite entries of a config dict in place
    overwrite string format (flat hierarchy): ['nested_name-nested_type-value', ...]
    nested_name: a.b.c; nested_type: int, float, bool, str or list.type
    """
    if line is None or len(line) == 0:
        return config
    casts = {"int": int, "float": float, "str": str}
    problems = []
    for item in line:
        try:
            cname, ctype, cval = [e.strip() for e in item.strip().split("-", 2)]
            types = ctype.split(".")
            base_type = types[-1]
            if base_type == "bool":
                cast = lambda s: s.strip().lower() not in ("false", "0", "no")
            else:
                cast = casts[base_type]
            if len(types) > 1:  # list of basic types
                val = [cast(e.strip()) for e in cval.strip("[]").split(",") if e.strip()]
                if types[0] == "tuple":
                    val = tuple(val)
            else:
                val = cast(cval)
        except (KeyError, ValueError):
            problems.append("--overwrite {!r}: expected name-type-value".format(item))
            continue
        deep_set(config, cname, val)
    if problems:
        raise ConfigError(problems)
    return config


def load_config(file_path, overwrite=None):
    """ yaml/json config file -> Bunch namespace """
    config = read_file(file_path)
    if config is None:
        raise ConfigError("config file {!r} not found".format(file_path))
    if not isinstance(config, dict):
        raise ConfigError("config file {!r} is not a mapping".format(file_path))
    config = overwrite_config(overwrite, config)
    return bunch.bunchify(config)


def read_json(file_path):
    """ json document from a path, or stdin for None / "-" """
    try:
        if file_path is None or file_path == "-":
            return json.load(sys.stdin)
        with open(file_path, "r") as f:
            return json.load(f)
    except (OSError, ValueError) as e:
        raise InputError("cannot read json from {}: {}".format(file_path or "stdin", e))


def write_text(file_path, text):
    """ write to a path, or stdout for None / "-" """
    if file_path is None or file_path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    mkdirs(os.path.dirname(os.path.abspath(file_path)))
    with open(file_path, "w") as f:
        f.write(text)


#####################################################################################
### parallel
#####################################################################################

def pmap(fn, items, workers=1):
    """ ordered map, over a process pool when workers > 1 """
    items = list(items)
    if workers is None or workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with multiprocessing.Pool(min(workers, len(items))) as pool:
        return pool.map(fn, items)


#####################################################################################
### logging
#####################################################################################

def set_print_logger(logger_name, log_file=None, level=logging.INFO):
    """ print logger to std_err and (optionally) a log file
    """
    logger = logging.getLogger(logger_name)
    formatter = logging.Formatter('%(asctime)s : %(message)s')
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    # log to file
    if log_file is not None:
        mkdirs(os.path.dirname(os.path.abspath(log_file)))
        fileHandler = logging.FileHandler(log_file, mode='w')
        fileHandler.setFormatter(formatter)
        logger.addHandler(fileHandler)
    # log to std err, stdout is reserved for pipeline documents
    streamHandler = logging.StreamHandler(sys.stderr)
    streamHandler.setFormatter(formatter)
    logger.addHandler(streamHandler)
    logger.setLevel(level)
    return logger


class Logger(object):
    """ run directory holding cmd.txt and one `<name>.log` csv (index,value) per check """
    def __init__(self, log_dir):
        self.log_dir = log_dir
        mkdirs(log_dir)
        with open(os.path.join(log_dir, "cmd.txt"), "w") as f:
            f.write(" ".join(sys.argv) + "\n")
        self.names = set()

    def path(self, name):
        return os.path.join(self.log_dir, "{}.log".format(name))

    def log(self, name, value, index):
        fresh = name not in self.names
        with open(self.path(name), "w" if fresh else "a") as f:
            if fresh:
                f.write("index,{}\n".format(name))
            f.write("{},{}\n".format(index, value))
        self.names.add(name)


class ReportLogger(object):
    """ Streams check records as json lines and keeps the pass/fail tally.

    - records are {check, inputs_digest, lhs, rhs, pass}, keys sorted, no timestamps,
      so identical runs give byte-identical report files
    - `log_dir` (optional) additionally gets cmd.txt and per-check scalar logs
    - the console summary goes through the print logger
    """
    def __init__(self, report_path=None, log_dir=None, logger_name="pcpforge", stream=None):
        self.report_path = report_path
        self.logger = logging.getLogger(logger_name)
        self.scalar_logger = Logger(log_dir) if log_dir else None
        if report_path is not None and report_path != "-":
            mkdirs(os.path.dirname(os.path.abspath(report_path)))
            self.stream = open(report_path, "w")
            self.owns_stream = True
        else:
            self.stream = stream if stream is not None else sys.stdout
            self.owns_stream = False
        self.counts = {}
        self.failures = 0

    def write(self, record):
        self.stream.write(json.dumps(record, sort_keys=True) + "\n")

    def record(self, check, inputs_digest, lhs, rhs, passed, **extra):
        rec = {
            "check": check,
            "inputs_digest": inputs_digest,
            "lhs": lhs,
            "rhs": rhs,
            "pass": bool(passed),
        }
        rec.update(extra)
        self.write(rec)
        total, failed = self.counts.get(check, (0, 0))
        self.counts[check] = (total + 1, failed + (0 if passed else 1))
        if not passed:
            self.failures += 1
            self.logger.info(tc.colored("FAIL {} [{}] lhs={} rhs={}".format(
                check, inputs_digest, lhs, rhs), "red"))
        if self.scalar_logger is not None:
            self.scalar_logger.log(check, int(bool(passed)), total)
        return rec

    def summary(self):
        """ terminating record of a run """
        checks = {k: {"total": t, "failed": f} for k, (t, f) in sorted(self.counts.items())}
        rec = {"check": "summary", "checks": checks, "failures": self.failures,
               "pass": self.failures == 0}
        self.write(rec)
        for k, v in checks.items():
            color = "green" if v["failed"] == 0 else "red"
            self.logger.info(tc.colored("{:<24} {:>6} run, {:>4} failed".format(
                k, v["total"], v["failed"]), color))
        return rec

    def close(self):
        if self.owns_stream:
            self.stream.close()
        else:
            self.stream.flush()


#####################################################################################
### timing
#####################################################################################

def time_str(s):
    """ seconds -> "1 hours, 2 minutes, 5 seconds" """
    parts = []
    s = int(s)
    for unit, size in (("days", 86400), ("hours", 3600), ("minutes", 60)):
        n, s = divmod(s, size)
        if n:
            parts.append("{:d} {}".format(n, unit))
    parts.append("{:d} seconds".format(s))
    return ", ".join(parts)

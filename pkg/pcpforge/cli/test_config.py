import os
from fractions import Fraction

import pytest

from pcpforge.utils.errors import ConfigError
from pcpforge.cli.config import (
    parse_args, validate_config, to_flags, suite_config_path, ENV_CAP_STATES, DEFAULT_CAP_STATES,
)


def _cfg(argv, environ=None):
    return validate_config(parse_args(argv), environ={} if environ is None else environ)


def test_defaults():
    cfg = _cfg(["check"])
    assert cfg.subcommand == "check"
    assert cfg.seed == 0
    assert cfg.mode == "auto"
    assert cfg.samples == 1000000
    assert cfg.cap_states == DEFAULT_CAP_STATES
    assert cfg.workers == 1
    assert cfg.trials == "default"
    assert cfg.suites is None
    assert os.path.exists(suite_config_path(cfg))


def test_eps_outside_unit_interval():
    with pytest.raises(ConfigError) as e:
        _cfg(["eval", "--eps", "3/2"])
    assert any(p.startswith("--eps") for p in e.value.problems)


def test_every_problem_is_reported():
    with pytest.raises(ConfigError) as e:
        _cfg(["eval", "--eps", "2", "--seed", "-1", "--mode", "fast"])
    assert len(e.value.problems) == 3


def test_flags_round_trip():
    cfg = _cfg(["eval", "--eps", "1/4", "--mode", "sample", "--n", "1000000"])
    assert cfg.eps == Fraction(1, 4)
    assert cfg.samples == 1000000
    again = _cfg(to_flags(cfg), environ={ENV_CAP_STATES: "5"})
    assert again == cfg


def test_cap_from_environment():
    assert _cfg(["check"], {ENV_CAP_STATES: "4096"}).cap_states == 4096
    assert _cfg(["check", "--cap-states", "64"], {ENV_CAP_STATES: "4096"}).cap_states == 64
    with pytest.raises(ConfigError):
        _cfg(["check"], {ENV_CAP_STATES: "lots"})


def test_subcommand_requirements():
    with pytest.raises(ConfigError):
        _cfg(["gen", "3sat-base"])
    with pytest.raises(ConfigError):
        _cfg(["reduce", "e3sat"])
    with pytest.raises(ConfigError):
        _cfg(["params", "--variant", "fourss"])
    with pytest.raises(ConfigError):
        _cfg(["gen", "planted", "--k", "0"])
    with pytest.raises(ConfigError):
        _cfg(["check", "--seed", str(1 << 64)])
    cfg = _cfg(["params", "--variant", "hypergraph", "--delta", "1", "--c-prime", "1"])
    assert cfg.delta == 1 and cfg.c_prime == 1


def test_empty_command_line_runs_check():
    cfg = _cfg([])
    assert cfg.subcommand == "check"
    assert cfg.trials == "default"
    assert cfg.seed == 0
    assert cfg.cap_states == DEFAULT_CAP_STATES
    assert os.path.exists(suite_config_path(cfg))
    flagged = _cfg(["--seed", "5", "--trials", "quick"])
    assert flagged.subcommand == "check"
    assert flagged.seed == 5
    assert flagged.trials == "quick"

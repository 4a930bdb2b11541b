from pcpforge.cli.config import parse_args, validate_config, to_flags, suite_config_path
from pcpforge.cli.suites import SUITE_ORDER, run_suite
from pcpforge.cli.run_pcp import run, main

__all__ = [
    "parse_args", "validate_config", "to_flags", "suite_config_path",
    "SUITE_ORDER", "run_suite",
    "run", "main",
]

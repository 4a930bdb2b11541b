""" exception hierarchy shared by every pcpforge module

    PcpError
    ├── ConfigError         bad flags, config files or infeasible generator parameters
    ├── InputError          malformed instances, tables, masks or files
    ├── SizeError           an enumeration or table would exceed its configured cap
    ├── PreconditionError   an operation's precondition does not hold (e.g. unfolded proofs)
    └── ModeError           table mode does not support the operation
"""


class PcpError(Exception):
    """ base class, `kind` is what the cli reports """
    kind = "error"

    def to_record(self):
        return {"check": "error", "kind": self.kind, "message": str(self)}


class ConfigError(PcpError):
    kind = "config"

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super(ConfigError, self).__init__("; ".join(self.problems))


class InputError(PcpError):
    kind = "input"


class SizeError(PcpError):
    kind = "size"


class PreconditionError(PcpError):
    kind = "precondition"


class ModeError(PcpError):
    kind = "mode"


def check_cap(needed, cap, what):
    """ raise SizeError if `needed` states exceed `cap` """
    if needed > cap:
        raise SizeError("{} needs {} states, cap is {}".format(what, needed, cap))

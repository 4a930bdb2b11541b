""" parameter schedules (R, T, eps) of the three reductions

Logarithms are natural. Values are evaluated in 256-bit decimal arithmetic and
rounded up to integers; the predicted soundness values are reports only.
"""
from collections import namedtuple
from decimal import ROUND_CEILING

from pcpforge.utils.errors import InputError
from pcpforge.utils.misc import parse_fraction, to_decimal, dec_pow, DECIMAL_CONTEXT
from pcpforge.analysis.lemmas import C1

ScheduleReport = namedtuple("ScheduleReport", [
    "variant", "R", "T", "eps", "delta", "c0", "c_prime", "predicted_value"])

D = DECIMAL_CONTEXT


def _ceil(value):
    return int(value.to_integral_value(rounding=ROUND_CEILING, context=D))


def _positive(name, value):
    value = parse_fraction(value)
    if value <= 0:
        raise InputError("{} must be positive, got {}".format(name, value))
    return value


def _log_rate(scale, eps, c0):
    """ (scale / eps * ln(1 / eps))^(1 / c0) """
    base = D.multiply(D.divide(scale, to_decimal(eps)), D.ln(to_decimal(1 / eps)))
    return dec_pow(base, D.divide(1, to_decimal(c0)))


def e3sat_schedule(eps, c0=1):
    eps, c0 = parse_fraction(eps), _positive("c0", c0)
    if not 0 < eps < 1:
        raise InputError("eps must lie in (0, 1), got {}".format(eps))
    R = _ceil(_log_rate(4, eps, c0))
    T = _ceil(dec_pow(R, c0))
    predicted = D.divide(D.multiply(36, to_decimal(eps * eps)), R)
    return ScheduleReport("e3sat", R, T, eps, None, c0, None, predicted)


def hypergraph_schedule(delta, c0=1, c_prime=None):
    """ R = 8 / (delta/2)^(c'/c0), c' defaults to 2 + 2 c1 """
    delta, c0 = parse_fraction(delta), _positive("c0", c0)
    if not 0 < delta <= 1:
        raise InputError("delta must lie in (0, 1], got {}".format(delta))
    c_prime = D.add(2, D.multiply(2, C1)) if c_prime is None else to_decimal(_positive("c'", c_prime))
    half = to_decimal(delta / 2)
    R = _ceil(D.divide(8, dec_pow(half, D.divide(c_prime, to_decimal(c0)))))
    exponent = D.add(c_prime, D.divide(D.multiply(2, c_prime), to_decimal(c0)))
    predicted = D.divide(dec_pow(half, exponent), 256)
    return ScheduleReport("hypergraph", R, None, None, delta, c0, c_prime, predicted)


def fourss_schedule(delta, c0=1):
    """ eps = delta, R = (2/eps ln(1/eps))^(1/c0), T = R^c0 """
    delta, c0 = parse_fraction(delta), _positive("c0", c0)
    if not 0 < delta < 1:
        raise InputError("delta must lie in (0, 1), got {}".format(delta))
    R = _ceil(_log_rate(2, delta, c0))
    T = _ceil(dec_pow(R, c0))
    predicted = D.divide(D.multiply(10, to_decimal(delta)), R * R)
    return ScheduleReport("fourss", R, T, delta, delta, c0, None, predicted)


SCHEDULES_MAP = {
    "hypergraph": hypergraph_schedule,
    "e3sat": e3sat_schedule,
    "fourss": fourss_schedule,
}


def parameter_schedule(variant, value, c0=1, c_prime=None):
    """ dispatch on variant; `value` is eps for e3sat and delta otherwise """
    if variant not in SCHEDULES_MAP:
        raise InputError("unknown variant {!r}".format(variant))
    if variant == "hypergraph":
        return hypergraph_schedule(value, c0, c_prime)
    if c_prime is not None:
        raise InputError("c' only applies to the hypergraph schedule")
    return SCHEDULES_MAP[variant](value, c0)

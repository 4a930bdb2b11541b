""" lower bound on Pr[X in A, Y in B] for rho-correlated product spaces """
from pcpforge.utils.errors import PreconditionError
from pcpforge.utils.misc import parse_fraction, to_decimal, dec_sqrt, dec_pow, DECIMAL_CONTEXT, SLACK
from pcpforge.distributions import RhoCorrelatedSpace
from pcpforge.analysis.lemmas import CheckResult


def mixing_exponent(rho):
    """ (2 - sqrt(rho)) / (1 - sqrt(rho)) """
    rho = parse_fraction(rho)
    if not 0 <= rho < 1:
        raise PreconditionError("rho must lie in [0, 1), got {}".format(rho))
    root = dec_sqrt(rho)
    return DECIMAL_CONTEXT.divide(DECIMAL_CONTEXT.subtract(2, root), DECIMAL_CONTEXT.subtract(1, root))


def mixing_bound_check(space, subset_a, subset_b, rho=None):
    """ Pr[X in A, Y in B] >= delta^((2 - sqrt(rho)) / (1 - sqrt(rho))), delta = min(mu(A), mu(B))

    Arguments:
        space: a RhoCorrelatedSpace, or per-coordinate measures together with `rho`
        subset_a, subset_b: boolean arrays over the space or iterables of points
        rho: overrides the space's correlation when given
    """
    if not isinstance(space, RhoCorrelatedSpace):
        if rho is None:
            raise PreconditionError("rho is required when passing bare measures")
        space = RhoCorrelatedSpace(space, rho)
    elif rho is not None and parse_fraction(rho) != space.rho:
        space = RhoCorrelatedSpace(space.measures, rho)
    exponent = mixing_exponent(space.rho)
    mu_a, mu_b = space.measure(subset_a), space.measure(subset_b)
    if mu_a == 0 or mu_b == 0:
        raise PreconditionError("both sets must be non-empty")
    lhs = space.prob_pair(subset_a, subset_b)
    rhs = dec_pow(min(mu_a, mu_b), exponent)
    return CheckResult(lhs, rhs, to_decimal(lhs) >= DECIMAL_CONTEXT.subtract(rhs, SLACK))

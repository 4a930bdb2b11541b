import itertools

from pcpforge.utils.errors import ConfigError, InputError, check_cap
from pcpforge.utils.rng import make_rng
from pcpforge.label_cover.game import LabelCoverInstance, Labeling

DEFAULT_CAP_STATES = 1 << 24


#####################################################################################
### planted YES instances
#####################################################################################

def generate_planted(u_count, v_count, degree, k, m, seed=0, bijective=False):
    """ random projection game with a planted perfect labeling

    Each u gets `degree` distinct neighbors, laid out cyclically over a random
    ordering of V so that every v is covered. Labels are uniform; every projection
    maps l_v to l_u and is otherwise uniform (a uniform bijection when `bijective`).

    Returns:
        (LabelCoverInstance, Labeling) with value 1
    """
    problems = []
    if min(u_count, v_count, degree, k, m) < 1:
        problems.append("u_count, v_count, degree, k, m must all be positive")
    if k > m:
        problems.append("k={} exceeds m={}".format(k, m))
    if degree > v_count:
        problems.append("degree={} exceeds v_count={}".format(degree, v_count))
    if degree * u_count < v_count:
        problems.append("degree*u_count={} cannot cover v_count={}".format(degree * u_count, v_count))
    if bijective and k != m:
        problems.append("bijective projections need k == m")
    if problems:
        raise ConfigError(problems)

    rng = make_rng(seed, "planted", u_count, v_count, degree, k, m, int(bijective))
    order = [int(v) for v in rng.permutation(v_count)]
    left = [int(l) for l in rng.integers(0, k, size=u_count)]
    right = [int(l) for l in rng.integers(0, m, size=v_count)]

    edges, projections = [], []
    for u in range(u_count):
        for j in range(degree):
            v = order[(u * degree + j) % v_count]
            if bijective:
                rest_right = [b for b in range(m) if b != right[v]]
                rest_left = [a for a in range(k) if a != left[u]]
                perm = [rest_left[int(i)] for i in rng.permutation(len(rest_left))]
                pi = [0] * m
                pi[right[v]] = left[u]
                for b, a in zip(rest_right, perm):
                    pi[b] = a
            else:
                pi = [int(a) for a in rng.integers(0, k, size=m)]
                pi[right[v]] = left[u]
            edges.append((u, v))
            projections.append(pi)
    inst = LabelCoverInstance(u_count, v_count, edges, k, m, projections)
    return inst, Labeling(left, right)


#####################################################################################
### clause-variable game
#####################################################################################

def parse_cnf(cnf):
    """ list of 3-literal clauses (nonzero ints, DIMACS style) -> normalized tuples

    DIMACS lines are accepted as read: `c` comments and the `p cnf` header are
    skipped, a trailing 0 terminator is dropped, a `%` line ends the input.
    """
    clauses = []
    for clause in cnf:
        if not isinstance(clause, (list, tuple)):
            clause = [clause]
        head = str(clause[0]) if len(clause) else ""
        if head in ("c", "p"):
            continue
        if head == "%":
            break
        try:
            clause = tuple(int(l) for l in clause)
            if len(clause) > 1 and clause[-1] == 0:
                clause = clause[:-1]
        except (TypeError, ValueError):
            raise InputError("clause {!r} is not a list of integer literals".format(clause))
        if len(clause) != 3 or 0 in clause:
            raise InputError("clause {!r} must have exactly 3 nonzero literals".format(clause))
        if len(set(abs(l) for l in clause)) != 3:
            raise InputError("clause {!r} must use 3 distinct variables".format(clause))
        clauses.append(clause)
    if not clauses:
        raise InputError("cnf has no variables")
    return clauses


def from_3sat_base_game(cnf):
    """ clause-variable projection game of a 3-CNF

    U = variables (k = 2, label 1 = True, label 2 = False), V = clauses with
    m = 7 labels, the satisfying assignments of the clause's three variables
    in the order of itertools.product([True, False], repeat=3). The edge between
    a clause and its p-th variable projects an assignment to that variable's value.
    """
    clauses = parse_cnf(cnf)
    variables = sorted(set(abs(l) for c in clauses for l in c))
    var_index = {x: i for i, x in enumerate(variables)}

    edges, projections = [], []
    for c, clause in enumerate(clauses):
        sat = [a for a in itertools.product([True, False], repeat=3)
               if any(val == (lit > 0) for val, lit in zip(a, clause))]
        for p, lit in enumerate(clause):
            edges.append((var_index[abs(lit)], c))
            projections.append([0 if a[p] else 1 for a in sat])
    return LabelCoverInstance(len(variables), len(clauses), edges, 2, 7, projections)


#####################################################################################
### parallel repetition
#####################################################################################

def _encode(digits, base):
    """ mixed tuple -> index, first digit most significant """
    out = 0
    for d in digits:
        out = out * base + d
    return out


def parallel_repetition(inst, r, cap=DEFAULT_CAP_STATES):
    """ r-fold product game

    Vertices are r-tuples (U^r, V^r), edges are r-tuples of edges, labels are
    r-tuples encoded base k (left) and base m (right), and the product projection
    acts coordinate-wise.
    """
    if r < 1:
        raise ConfigError("repetition count must be positive, got {}".format(r))
    check_cap(inst.k ** r, cap, "left label set")
    check_cap(inst.m ** r, cap, "right label set")
    check_cap(inst.n_edges ** r * inst.m ** r, cap, "product projections")
    if r == 1:
        return LabelCoverInstance(inst.u_count, inst.v_count, inst.edges, inst.k, inst.m,
                                  inst.projections)

    right_tuples = list(itertools.product(range(inst.m), repeat=r))
    edges, projections = [], []
    for combo in itertools.product(range(inst.n_edges), repeat=r):
        u = _encode([inst.edges[e][0] for e in combo], inst.u_count)
        v = _encode([inst.edges[e][1] for e in combo], inst.v_count)
        pis = [inst.projections[e] for e in combo]
        edges.append((u, v))
        projections.append([_encode([pi[b] for pi, b in zip(pis, labels)], inst.k)
                            for labels in right_tuples])
    return LabelCoverInstance(inst.u_count ** r, inst.v_count ** r, edges,
                              inst.k ** r, inst.m ** r, projections)


def lift_labeling(labeling, inst, r):
    """ labeling of the r-fold product induced coordinate-wise by a base labeling """
    labeling.check(inst)
    left = [_encode([labeling.left[u] for u in us], inst.k)
            for us in itertools.product(range(inst.u_count), repeat=r)]
    right = [_encode([labeling.right[v] for v in vs], inst.m)
             for vs in itertools.product(range(inst.v_count), repeat=r)]
    return Labeling(left, right)

####################################################################################################
# nflab/horn/rules.py
# The builtin rule families: alpha (complete-clause splitting), beta (complement of a meet), gamma
# (submeets forcing bottom), n-adjunction, and substitution instances of n-adjunction.

import pyrsistent as pyr
import re, itertools, pimms

from ..util  import (BadParameter, UnknownName)
from .terms  import (var, meet, join, neg, bottom)
from .core   import Implication

rule_variables = ('x', 'y', 'z', 'u', 'v', 'w')

def variable_names(k):
    '''
    variable_names(k) yields the tuple of the first k rule variable names: x, y, z, u, v, w for
      k <= 6 and x1, x2, ... otherwise.
    '''
    if k <= len(rule_variables): return rule_variables[:k]
    return tuple(['x%d' % (i+1) for i in range(k)])
def _fresh(k):
    # names for k variables followed by one fresh variable
    vs = variable_names(k + 1)
    return (vs[:k], vs[k])

def _int(n, what, lo):
    if not pimms.is_int(n) or n < lo: raise BadParameter('%s must be an integer >= %d' % (what, lo))
    return int(n)

def clause_count(n):
    '''
    clause_count(n) yields the least k >= 1 with 2^k >= n: the number of variables of alpha(n).
    '''
    k = 1
    while 2**k < n: k += 1
    return k
def complete_clauses(k):
    '''
    complete_clauses(k) yields the 2^k complete conjunctive clauses over the first k rule variables
      in binary counting order of their sign patterns: the first variable carries the most
      significant sign and a 0 sign keeps the variable positive (so x & y precedes x & ~y).
    '''
    vs = [var(x) for x in variable_names(k)]
    res = []
    for p in range(2**k):
        lits = [neg(v) if (p >> (k - 1 - j)) & 1 else v for (j,v) in enumerate(vs)]
        res.append(meet(*lits))
    return tuple(res)

def alpha(n):
    '''
    alpha(n) yields the rule pi_1, ..., pi_n |- pi_{n+1} | ... | pi_{2^k} over the complete clauses
      of the least k with 2^k >= n; when n = 2^k the conclusion is a fresh variable. alpha(1) is
      x |- y and alpha(2) is x, ~x |- y.
    '''
    n = _int(n, 'alpha parameter', 1)
    if n == 1: return Implication((), [var('x')], var('y'), 'boolean')
    k = clause_count(n)
    pis = complete_clauses(k)
    concl = var(_fresh(k)[1]) if n == 2**k else join(*pis[n:])
    return Implication((), pis[:n], concl, 'boolean')

def beta(k):
    '''
    beta(k) yields the rule x1, ..., xk, ~(x1 & ... & xk) |- y; beta(0) is x |- x.
    '''
    k = _int(k, 'beta parameter', 0)
    if k == 0: return Implication((), [var('x')], var('x'), 'boolean')
    (vs, y) = _fresh(k)
    xs = [var(x) for x in vs]
    return Implication((), xs + [neg(meet(*xs))], var(y), 'boolean')

def gamma(n, k):
    '''
    gamma(n, k) yields the rule whose premises are the meets of the non-empty subsets of at most n
      members of D_k = {x1, ..., xk, ~(x1 & ... & xk)}, listed by size and then in index order, and
      whose conclusion is 0. Requires k >= n >= 1.
    '''
    n = _int(n, 'gamma degree', 1)
    k = _int(k, 'gamma size', 1)
    if k < n: raise BadParameter('gamma(n, k) requires k >= n')
    xs = [var(x) for x in variable_names(k)]
    delta = xs + [neg(meet(*xs))]
    prems = [meet(*[delta[i] for i in c])
             for j in range(1, n + 1) for c in itertools.combinations(range(len(delta)), j)]
    return Implication((), prems, bottom, 'boolean')

def adjunction(n):
    '''
    adjunction(n) yields the n-adjunction rule { meet of all xj with j != i : i = 1..n+1 } |-
      x1 & ... & x(n+1), the defining implication of n-filters.
    '''
    n = _int(n, 'adjunction degree', 1)
    xs = [var(x) for x in variable_names(n + 1)]
    prems = [meet(*[x for (j,x) in enumerate(xs) if j != i]) for i in range(n, -1, -1)]
    return Implication((), prems, meet(*xs), 'semilattice')

def subst_adjunction(*groups):
    '''
    subst_adjunction(g1, g2, ...) yields the substitution instance of n-adjunction, n + 1 being the
      sum of the group sizes, in which the variables of each group with at least two members are
      each replaced by their meet with a fresh variable shared by that group. For example
      subst_adjunction(2) is x & z, y & z |- x & y & z.
    '''
    if len(groups) == 1 and not pimms.is_int(groups[0]): groups = tuple(groups[0])
    groups = [_int(g, 'group size', 1) for g in groups]
    total = sum(groups)
    if total < 2: raise BadParameter('substitution instances need at least two variables')
    shared = len([g for g in groups if g >= 2])
    names = variable_names(total + shared)
    xs = [var(x) for x in names[:total]]
    zs = iter([var(z) for z in names[total:]])
    subst = []
    for g in groups:
        z = next(zs) if g >= 2 else None
        for _ in range(g): subst.append(z)
    def _submeet(skip):
        keep = [j for j in range(total) if j != skip]
        zs = []
        for j in keep:
            if subst[j] is not None and subst[j] not in zs: zs.append(subst[j])
        return meet(*([xs[j] for j in keep] + zs))
    prems = [_submeet(i) for i in range(total - 1, -1, -1)]
    return Implication((), prems, _submeet(None), 'semilattice')

rule_families = pyr.pmap({'alpha':            alpha,
                          'beta':             beta,
                          'gamma':            gamma,
                          'adjunction':       adjunction,
                          'subst_adjunction': subst_adjunction})
'''
rule_families is a persistent map of the builtin rule family names to their constructors.
'''

_family_rx = re.compile(r'^\s*([A-Za-z_]+)\s*\(\s*([0-9,\s]*)\s*\)\s*$')

def builtin_rule(family, *args):
    '''
    builtin_rule(family, args...) yields the named builtin rule, e.g. builtin_rule('alpha', 2) or
      builtin_rule('gamma(1,1)'). The families are alpha(n), beta(k), gamma(n,k), adjunction(n),
      and subst_adjunction(g1,g2,...).

    Raises UnknownName for unknown families and BadParameter for bad parameters.
    '''
    if not pimms.is_str(family): raise UnknownName('rule families are named by strings')
    mt = _family_rx.match(family)
    if mt is not None:
        if args: raise BadParameter('parameters given twice for %s' % family)
        family = mt.group(1)
        args = tuple([int(u) for u in mt.group(2).split(',') if u.strip()])
    f = rule_families.get(family.strip().lower(), None)
    if f is None: raise UnknownName('unrecognized rule family: %s' % family)
    try: return f(*args)
    except TypeError: raise BadParameter('wrong number of parameters for %s' % family)

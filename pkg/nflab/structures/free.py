####################################################################################################
# nflab/structures/free.py
# Finite free algebras: distributive lattices (monotone Boolean functions), Boolean algebras
# (powersets of complete conjunctive clauses), and (unital) meet semilattices.

import numpy      as np
import warnings, logging, functools, pimms

from ..util  import (config, check_size, bits, popcount, BadParameter, SizeCap)
from ..order import (FinitePoset, boolean_lattice)

variable_names = ('x', 'y', 'z', 'w')
'''
variable_names is the tuple of generator names used for free algebras on at most four generators;
larger free algebras use x1, x2, ...
'''

def generator_names(k):
    '''
    generator_names(k) yields the tuple of the k generator names of a free algebra.
    '''
    return variable_names[:k] if k <= len(variable_names) else \
           tuple(['x%d' % (i+1) for i in range(k)])

def _dnf_name(table, k, gens):
    # name a monotone truth table by the disjunction of its minimal true points
    pts = [p for p in range(2**k) if (table >> p) & 1]
    mins = [p for p in pts if not any(q != p and (q & p) == q for q in pts)]
    mins.sort(key=lambda p:(popcount(p), bits(p)))
    terms = ['&'.join([gens[i] for i in bits(p)]) if p else '1' for p in mins]
    return '|'.join(terms)

def _generators(k):
    # truth table of the i'th variable: the points (bit-sets of true variables) containing i
    return [sum(1 << p for p in range(2**k) if (p >> i) & 1) for i in range(k)]

def _close(tables, ops):
    elems = set(tables)
    frontier = list(elems)
    while frontier:
        new = []
        cur = list(elems)
        for a in frontier:
            for b in cur:
                for op in ops:
                    c = (a & b) if op == 'meet' else (a | b)
                    if c not in elems:
                        elems.add(c)
                        new.append(c)
        frontier = new
        check_size(len(elems), what='free algebra')
    return elems

def _table_poset(tables, k, gens, kind):
    tables = sorted(tables, key=lambda t:(popcount(t), t))
    arr = np.array([[(a & b) == a for b in tables] for a in tables], dtype=np.bool_)
    names = tuple([_dnf_name(t, k, gens) for t in tables])
    pos = {t:i for (i,t) in enumerate(tables)}
    gi = tuple([pos[t] for t in _generators(k)])
    return FinitePoset(names, arr, meta_data={'free': kind, 'generators': gi, 'variables': gens})

@functools.lru_cache(maxsize=64)
def free_algebra(signature, k):
    '''
    free_algebra(signature, k) yields the finite free algebra of the named signature on k generators
      as a FinitePoset whose meta-data holds 'generators' (the tuple of generator indices),
      'variables' (the generator names), and 'free' (the signature).

    The supported signatures are:
      * 'distributive': the free distributive lattice FD(k) (without bounds) realized as the
        non-constant monotone Boolean functions of k variables; elements are named by their
        disjunctive normal forms, e.g. 'x|y&z'. The sizes for k = 1..4 are 1, 4, 18, 166.
      * 'lattice': for k <= 2 the free lattice coincides with FD(k); larger k raise BadParameter.
      * 'boolean': the free Boolean algebra FB(k), the powerset of the 2^k complete conjunctive
        clauses; element i is the set of clauses with bit p of i set, where clause p makes the
        variables in bit-set p true and the others false. A warning is issued when the algebra has
        more than config['free_boolean_warn'] elements.
      * 'unital_semilattice': the free unital meet semilattice FM(k), the 2^k meets of subsets of
        the generators (the empty meet is the top, named '1') ordered by reverse inclusion.
      * 'semilattice': the 2^k - 1 meets of non-empty subsets of the generators.

    Raises SizeCap if the algebra would exceed config['size_cap'] elements.
    '''
    if not pimms.is_int(k) or k < 0: raise BadParameter('free algebras require k >= 0')
    gens = generator_names(k)
    if signature == 'boolean':
        if 2**k > 30: raise SizeCap('free Boolean algebra on %d generators is too large' % k)
        check_size(2**(2**k), what='free Boolean algebra')
        if 2**(2**k) > config['free_boolean_warn']:
            warnings.warn('free Boolean algebra on %d generators has %d elements'
                          % (k, 2**(2**k)))
        b = boolean_lattice(2**k)
        return b.with_meta(free='boolean', generators=tuple(_generators(k)), variables=gens)
    if signature == 'lattice':
        if k > 2: raise BadParameter('free lattices on more than 2 generators are infinite')
        signature = 'distributive'
    if k == 0: raise BadParameter('free %s algebras require k >= 1' % signature)
    if signature == 'distributive':
        p = _table_poset(_close(_generators(k), ('meet', 'join')), k, gens, 'distributive')
    elif signature in ('semilattice', 'unital_semilattice'):
        ts = _close(_generators(k), ('meet',))
        if signature == 'unital_semilattice': ts.add(2**(2**k) - 1)
        p = _table_poset(ts, k, gens, signature)
    else: raise BadParameter('no free algebra for signature %s' % (signature,))
    logging.debug('nflab: free %s algebra on %d generators has %d elements',
                  signature, k, p.size)
    return p

def free_generators(p):
    '''
    free_generators(p) yields the tuple of generator indices of the free algebra p.
    '''
    g = p.meta('generators')
    if g is None: raise ValueError('poset is not a free algebra')
    return g

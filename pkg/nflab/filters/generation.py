####################################################################################################
# nflab/filters/generation.py
# Generation of n-filters: the admissible-set operator, its fixpoint, the prime-cover shortcut for
# distributive lattices, the exhaustive oracle, and the lattice of all n-filters.

import itertools, functools, logging

from ..util  import (config, bits, infinity, to_degree, check_size,
                     NotMeetSemilattice, NotDistributive, SizeCap)
from ..order import (Upset, poset, iter_upset_masks)
from .core   import (to_algebra, to_mask, is_n_filter)

def _minimal(p, vals):
    # only the minimal elements of a set of meets constrain further choices (upsets are monotone)
    vals = set(vals)
    return frozenset([v for v in vals
                      if not any(w != v and p.leq[w,v] for w in vals)])

def _admissible_meets(p, umask, n):
    '''
    _admissible_meets(p, umask, n) yields the bit-set of meets of all admissible sets: non-empty
      finite X contained in the upset umask such that every subset of X with at most n elements has
      its meet in umask.
    '''
    mr = p.meet_rows
    up = p.up_masks
    us = bits(umask)
    def _in(v): return (umask >> v) & 1
    # a state is (meet of X, minimal meets of the subsets of X of size <= j, for j < n)
    start = [(x, tuple([frozenset([x])]*(n-1))) for x in us]
    seen = set(start)
    stack = list(start)
    reached = 0
    while stack:
        (m, levels) = stack.pop()
        reached |= 1 << m
        for x in us:
            if (up[m] >> x) & 1: continue
            row = mr[x]
            if n > 1 and not all(_in(row[v]) for v in levels[-1]): continue
            new = []
            prev = frozenset([])
            for lvl in levels:
                new.append(_minimal(p, set(lvl) | {x} | {row[v] for v in prev}))
                prev = lvl
            st = (row[m], tuple(new))
            if st not in seen:
                seen.add(st)
                stack.append(st)
    return reached

def generation_step(s, u, n):
    '''
    generation_step(s, u, n) yields the Upset obtained from the upset u of the meet semilattice s by
      one application of the admissible-set operator: the upward closure of the meets of all
      non-empty finite X contained in u such that every subset of X with at most n elements has its
      meet in u. On a distributive semilattice this is already the n-filter generated by u.
    '''
    p = to_algebra(s)
    if not p.is_meet_semilattice:
        raise NotMeetSemilattice('n-filter generation requires a meet semilattice')
    umask = to_mask(p, u)
    n = to_degree(n)
    if umask == 0 or n == infinity: return Upset(p, umask)
    if n == 0: return Upset(p, p.full)
    return Upset(p, p.up_closure(_admissible_meets(p, umask, n)))

def join_irreducibles(s):
    '''
    join_irreducibles(l) yields the tuple of indices of the join-irreducible elements of the finite
      lattice l: the elements with exactly one lower cover.
    '''
    p = to_algebra(s)
    lower = [0]*p.size
    for (i,j) in p.covers: lower[j] += 1
    return tuple([i for i in range(p.size) if lower[i] == 1])

def _prime_cover_generate(p, umask, n):
    # The prime n-filters of a finite distributive lattice are the unions of at most n principal
    # filters at join-irreducibles (or the total filter); the generated n-filter is the
    # intersection of those that contain the upset.
    up = p.up_masks
    jis = join_irreducibles(p)
    res = p.full
    for k in range(0, min(n, len(jis)) + 1):
        for combo in itertools.combinations(jis, k):
            cover = 0
            for j in combo: cover |= up[j]
            if (umask & ~cover) == 0: res &= cover
    return res

generation_methods = ('auto', 'one-step', 'fixpoint', 'primes', 'oracle')

def generate_n_filter(s, u, n, method='auto'):
    '''
    generate_n_filter(s, u, n) yields the n-filter generated by the upset u of the meet semilattice
      s: the least n-filter containing u.

    The optional argument method (default: 'auto') selects the algorithm:
      * 'one-step' applies the admissible-set operator once; this is exact on distributive
        semilattices only.
      * 'fixpoint' iterates the admissible-set operator until it is stable; exact on all finite
        meet semilattices.
      * 'primes' intersects the unions of at most n principal filters at join-irreducibles that
        contain u; exact on distributive lattices only.
      * 'oracle' intersects all n-filters containing u by exhaustive enumeration.
      * 'auto' uses 'primes' on distributive lattices, 'one-step' on other distributive
        semilattices, and 'fixpoint' otherwise.

    Raises NotMeetSemilattice if s is not a meet semilattice.
    '''
    p = to_algebra(s)
    if not p.is_meet_semilattice:
        raise NotMeetSemilattice('n-filter generation requires a meet semilattice')
    umask = to_mask(p, u)
    n = to_degree(n)
    if method not in generation_methods: raise ValueError('unrecognized method: %s' % method)
    if method == 'auto':
        method = 'primes'   if p.is_distributive             else \
                 'one-step' if p.is_distributive_semilattice else \
                 'fixpoint'
    if method == 'oracle': return generate_n_filter_oracle(p, Upset(p, umask), n)
    if umask == 0 or n == infinity: return Upset(p, umask)
    if n == 0: return Upset(p, p.full)
    if method == 'primes':
        if not p.is_distributive:
            raise NotDistributive('prime-cover generation requires a distributive lattice')
        return Upset(p, _prime_cover_generate(p, umask, n))
    if method == 'one-step': return generation_step(p, Upset(p, umask), n)
    steps = 0
    while True:
        nxt = p.up_closure(_admissible_meets(p, umask, n))
        steps += 1
        if nxt == umask: break
        umask = nxt
    logging.debug('nflab: n-filter generation reached its fixpoint after %d steps', steps)
    return Upset(p, umask)
def fg(s, u, n):
    '''
    fg(s, u, n) is an alias for generate_n_filter(s, u, n).
    '''
    return generate_n_filter(s, u, n)

@functools.lru_cache(maxsize=256)
def _n_filter_masks(p, n):
    check_size(p.size, 'enumeration_cap', 'n-filter enumeration carrier')
    return tuple([m for m in iter_upset_masks(p) if is_n_filter(p, Upset(p, m), n)])

def enumerate_n_filters(s, n):
    '''
    enumerate_n_filters(s, n) yields the tuple of all n-filters (as Upsets) of the finite poset s,
      sorted by size and then by member indices. Raises SizeCap if s has more than
      config['enumeration_cap'] elements.
    '''
    p = to_algebra(s)
    return tuple([Upset(p, m) for m in _n_filter_masks(p, to_degree(n))])
def n_filter_masks(s, n):
    '''
    n_filter_masks(s, n) yields the tuple of integer bit-sets of the n-filters of s, in the order
      used by enumerate_n_filters.
    '''
    return _n_filter_masks(to_algebra(s), to_degree(n))

def generate_n_filter_oracle(s, u, n):
    '''
    generate_n_filter_oracle(s, u, n) yields the intersection of all n-filters of the finite poset s
      that contain the upset u, found by exhaustive enumeration of the upsets of s. This is the
      definitional ground truth for generate_n_filter.

    Raises SizeCap if s has more than config['oracle_cap'] elements.
    '''
    p = to_algebra(s)
    check_size(p.size, 'oracle_cap', 'oracle carrier')
    umask = to_mask(p, u)
    res = p.full
    for m in _n_filter_masks(p, to_degree(n)):
        if (umask & ~m) == 0: res &= m
    return Upset(p, res)

def filter_lattice(s, n):
    '''
    filter_lattice(s, n) yields the FinitePoset of all n-filters of s ordered by inclusion. Each
      element is named by the braced, comma-separated list of its members, e.g. '{}' or '{a,b}'.
    '''
    p = to_algebra(s)
    ms = n_filter_masks(p, n)
    names = ['{' + ','.join(p.names(m)) + '}' for m in ms]
    pairs = [(a, b) for (a,ma) in enumerate(ms) for (b,mb) in enumerate(ms)
             if a != b and (ma & ~mb) == 0]
    return poset(names, pairs)

####################################################################################################
# nflab/filters/primes.py
# Prime upsets, m-prime elements and m-prime n-filters, prime decomposition, and separation.

import itertools, logging, pimms

from ..util  import (bits, infinity, to_degree,
                     NotMeetSemilattice, NotAnNFilter, NoDecomposition, NotPrime, NotDisjoint,
                     NotIdeal, NotDistributive)
from ..order import (Upset, is_upset, meet_mask)
from .core       import (to_algebra, to_mask, is_n_filter, is_n_ideal, min_filter_degree,
                         filter_cover_clique)
from .generation import (generate_n_filter, n_filter_masks)

####################################################################################################
# Primeness

def is_directed_down_mask(p, dmask):
    '''
    is_directed_down_mask(p, mask) yields True if the bit-set mask is a downset of the poset p in
      which every two members have a common upper bound inside the set; the empty set counts as
      directed.
    '''
    if not p.is_down_mask(dmask): return False
    ds = bits(dmask)
    for (k,a) in enumerate(ds):
        for b in ds[k+1:]:
            if not (p.up_masks[a] & p.up_masks[b] & dmask): return False
    return True
def is_ideal(s, d):
    '''
    is_ideal(s, d) yields True if the collection d of elements (names or indices) of s is an ideal:
      a directed downset. The empty set is accepted as an ideal.
    '''
    p = to_algebra(s)
    return is_directed_down_mask(p, p.mask(d))

def is_prime_upset(s, f):
    '''
    is_prime_upset(s, f) yields True if the upset f of s is prime. On join semilattices this checks
      that a ∨ b in f implies a in f or b in f for all pairs; on other posets it checks that the
      complement of f is an ideal (a directed downset).
    '''
    p = to_algebra(s)
    fmask = to_mask(p, f)
    if not p.is_join_semilattice: return is_directed_down_mask(p, p.full & ~fmask)
    jr = p.join_rows
    out = bits(p.full & ~fmask)
    for (k,a) in enumerate(out):
        for b in out[k:]:
            if (fmask >> jr[a][b]) & 1: return False
    return True

def is_m_prime_element(s, x, m):
    '''
    is_m_prime_element(s, x, m) yields True if the element x of the meet semilattice s is meet
      m-prime: whenever the meet of a finite set Y lies below x, so does the meet of some subset of
      Y with at most m elements. Only the (m+1)-element sets Y need to be checked.
    '''
    p = to_algebra(s)
    if not p.is_meet_semilattice: raise NotMeetSemilattice('m-primeness requires meets')
    m = to_degree(m)
    if m == infinity: return True
    if m < 1: raise ValueError('m-primeness requires m >= 1')
    x = p.index_of(x)
    below = p.down_masks[x]
    for ys in itertools.combinations(range(p.size), m + 1):
        if not (below >> meet_mask(p, sum(1 << y for y in ys))) & 1: continue
        if not any((below >> meet_mask(p, sum(1 << y for y in zs))) & 1
                   for zs in itertools.combinations(ys, m)):
            return False
    return True

def m_prime_n_filter_witness(s, f, m, n):
    '''
    m_prime_n_filter_witness(s, f, m, n) yields None if the n-filter f of s is a meet m-prime
      element of the lattice of n-filters of s, and otherwise a tuple of m+1 n-filters (as Upsets)
      whose intersection lies inside f while no m of them have their intersection inside f.

    Raises NotAnNFilter if f is not an n-filter.
    '''
    p = to_algebra(s)
    fmask = to_mask(p, f)
    n = to_degree(n)
    m = to_degree(m)
    if not is_n_filter(p, Upset(p, fmask), n):
        raise NotAnNFilter('upset is not a %s-filter' % (n,))
    if m == infinity: return None
    cands = [g for g in n_filter_masks(p, n) if (g & ~fmask) != 0]
    for ys in itertools.combinations(cands, m + 1):
        meet = p.full
        for g in ys: meet &= g
        if meet & ~fmask: continue
        ok = False
        for zs in itertools.combinations(ys, m):
            zm = p.full
            for g in zs: zm &= g
            if not (zm & ~fmask):
                ok = True
                break
        if not ok: return tuple([Upset(p, g) for g in ys])
    return None
def is_m_prime_n_filter(s, f, m, n):
    '''
    is_m_prime_n_filter(s, f, m, n) yields True if the n-filter f of the finite poset s is a meet
      m-prime element of the lattice of all n-filters of s (ordered by inclusion, with meets given
      by intersection). Raises NotAnNFilter if f is not an n-filter.
    '''
    return m_prime_n_filter_witness(s, f, m, n) is None

def prime_filters(s):
    '''
    prime_filters(l) yields the tuple of all prime filters of the finite lattice l as Upsets,
      including the empty and the total filter.
    '''
    p = to_algebra(s)
    return tuple([Upset(p, g) for g in n_filter_masks(p, 1) if is_prime_upset(p, Upset(p, g))])
def is_m_prime_filter(s, f, m):
    '''
    is_m_prime_filter(s, f, m) yields True if f is a filter of s whose complement is an m-ideal.
    '''
    p = to_algebra(s)
    fmask = to_mask(p, f)
    if not is_n_filter(p, Upset(p, fmask), 1): return False
    return is_n_ideal(p, bits(p.full & ~fmask), m)

def is_union_of_prime_filters(s, f, k):
    '''
    is_union_of_prime_filters(s, f, k) yields True if the upset f of the finite lattice s is the
      union of at most k prime filters.
    '''
    p = to_algebra(s)
    fmask = to_mask(p, f)
    if fmask == 0: return True
    parts = [g for g in n_filter_masks(p, 1)
             if g != 0 and (g & ~fmask) == 0 and is_prime_upset(p, Upset(p, g))]
    for j in range(1, k + 1):
        for combo in itertools.combinations(parts, j):
            u = 0
            for g in combo: u |= g
            if u == fmask: return True
    return False

####################################################################################################
# Decomposition

@pimms.immutable
class PrimeDecomposition(object):
    '''
    PrimeDecomposition(upset, parts) represents the decomposition of the given upset into the
    tuple of prime filters parts (Upset objects on the same poset) whose union is the upset.
    '''
    def __init__(self, upset, parts):
        self.upset = upset
        self.parts = parts
    @pimms.param
    def upset(u):
        '''
        decomp.upset is the decomposed Upset.
        '''
        if not is_upset(u): raise ValueError('PrimeDecomposition requires an Upset')
        return u
    @pimms.param
    def parts(ps):
        '''
        decomp.parts is the tuple of prime filters whose union is the decomposed upset.
        '''
        ps = tuple(ps)
        if not all(is_upset(u) for u in ps): raise ValueError('parts must be Upsets')
        return ps
    @pimms.require
    def parts_cover_upset(upset, parts):
        '''
        The union of the parts must be the decomposed upset.
        '''
        u = 0
        for g in parts:
            if g.poset != upset.poset: raise ValueError('parts live on a different poset')
            u |= g.mask
        if u != upset.mask: raise NoDecomposition('parts do not cover the upset')
        return True
    @pimms.value
    def count(parts):
        '''
        decomp.count is the number of parts.
        '''
        return len(parts)
    def __len__(self): return self.count
    def __iter__(self): return iter(self.parts)
    def __getitem__(self, k): return self.parts[k]
    def __repr__(self): return 'PrimeDecomposition(%s)' % (list(self.parts),)

def decompose_prime_n_filter(s, f):
    '''
    decompose_prime_n_filter(l, f) yields the PrimeDecomposition of the prime n-filter f of the
      distributive lattice l into exactly n = min_filter_degree(l, f) prime filters. Witnesses
      b_1 ... b_n of f with pairwise meets outside f are extended, each in ascending element order,
      to maximal filters inside f; the result is verified before it is returned. The empty upset
      decomposes into no parts and the total upset into itself.

    Raises NotAnUpset, NotPrime if f is not a prime upset, and NoDecomposition if l is not
    distributive or the verification fails.
    '''
    p = to_algebra(s)
    fmask = to_mask(p, f)
    u = Upset(p, fmask)
    if not p.is_distributive:
        raise NoDecomposition('prime decomposition requires a distributive lattice')
    if not is_prime_upset(p, u): raise NotPrime('upset %s is not prime' % (list(u.names),))
    if fmask == 0: return PrimeDecomposition(u, ())
    if fmask == p.full: return PrimeDecomposition(u, (u,))
    n = min_filter_degree(p, u)
    wits = filter_cover_clique(p, u)
    if len(wits) != n:
        raise NoDecomposition('expected %d pairwise-incompatible witnesses, found %d'
                              % (n, len(wits)))
    mr = p.meet_rows
    parts = []
    for b in wits:
        g = b
        for x in range(p.size):
            gx = mr[g][x]
            if (fmask >> gx) & 1: g = gx
        parts.append(Upset(p, p.up_masks[g]))
    union = 0
    for g in parts: union |= g.mask
    if union != fmask or not all(is_prime_upset(p, g) for g in parts):
        raise NoDecomposition('greedy extension did not yield prime filters covering the upset')
    logging.debug('nflab: decomposed %s into %d prime filters', list(u.names), n)
    return PrimeDecomposition(u, parts)

####################################################################################################
# Separation

def separate_prime_n_filter(s, f, i, n):
    '''
    separate_prime_n_filter(l, f, i, n) yields a prime n-filter of the distributive lattice l that
      contains the n-filter f and is disjoint from the ideal i (a collection of element names or
      indices). Elements are considered in ascending index order and each is added, together with
      the n-filter it generates, whenever the result stays disjoint from i; the resulting maximal
      n-filter is verified to be prime before it is returned.

    Raises NotDistributive, NotAnNFilter, NotIdeal, and NotDisjoint when the preconditions fail.
    '''
    p = to_algebra(s)
    if not p.is_distributive:
        raise NotDistributive('separation requires a distributive lattice')
    n = to_degree(n)
    fmask = to_mask(p, f)
    if not is_n_filter(p, Upset(p, fmask), n):
        raise NotAnNFilter('upset is not a %s-filter' % (n,))
    imask = p.mask(i)
    if not is_directed_down_mask(p, imask):
        raise NotIdeal('set %s is not an ideal' % (p.names(imask),))
    if fmask & imask:
        raise NotDisjoint('filter and ideal share %s' % (p.names(fmask & imask),))
    g = fmask
    for x in range(p.size):
        if (g >> x) & 1: continue
        h = generate_n_filter(p, Upset(p, g | p.up_masks[x]), n).mask
        if not (h & imask): g = h
    res = Upset(p, g)
    if not (is_n_filter(p, res, n) and is_prime_upset(p, res)) or (g & imask):
        raise NotPrime('maximal %s-filter disjoint from the ideal is not prime' % (n,))
    return res

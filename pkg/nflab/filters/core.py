####################################################################################################
# nflab/filters/core.py
# The n-filter predicates: restricted (semilattice) and full (poset) checks, n-ideals, and degrees.

import pyrsistent as pyr

from ..util  import (config, bits, popcount, infinity, to_degree, check_size,
                     NotMeetSemilattice)
from ..order import (is_poset, to_upset, dual_poset, Upset)

def to_algebra(s):
    '''
    to_algebra(s) yields the FinitePoset underlying s, which may be a FinitePoset or any object with
      an algebra member (such as a Structure).
    '''
    if is_poset(s): return s
    a = getattr(s, 'algebra', None)
    if is_poset(a): return a
    raise ValueError('expected a FinitePoset or a structure, got %s' % (type(s),))
def to_mask(s, f):
    '''
    to_mask(s, f) yields the bit-set of the upset f of the poset s; f may be an Upset or a
      collection of names or indices. Raises NotAnUpset if f is not upward closed.
    '''
    return to_upset(to_algebra(s), f).mask

####################################################################################################
# Witness searches

def _restricted_witness(p, fmask, n):
    # Look for n+1 distinct members of F whose n-fold submeets are all in F but whose full meet is
    # not; every subset of a partial choice must already have its meet in F.
    mr = p.meet_rows
    fs = bits(fmask)
    def _in(v): return (fmask >> v) & 1
    def _rec(start, chosen, levels):
        k = len(chosen)
        for t in range(start, len(fs)):
            x = fs[t]
            row = mr[x]
            if k == n:
                if all(_in(row[m]) for lvl in levels[1:n] for m in lvl) and \
                   not _in(row[next(iter(levels[n]))]):
                    return chosen + (x,)
                continue
            new = [None, levels[1] | {x}] if k > 0 else [None, {x}]
            for j in range(2, k + 2): new.append(levels[j] | {row[m] for m in levels[j-1]}
                                                 if j <= k else {row[m] for m in levels[j-1]})
            if not all(_in(v) for lvl in new[2:] for v in lvl): continue
            res = _rec(t + 1, chosen + (x,), new)
            if res is not None: return res
        return None
    return _rec(0, (), [None])

def _poset_witness(p, fmask, n):
    # Look for an antichain X in F with more than n members, such that every subset of at most n
    # members has a lower bound in F but X itself does not.
    fs = bits(fmask)
    (up, dn) = (p.up_masks, p.down_masks)
    def _rec(start, chosen, cmask, lbs):
        k = len(chosen)
        for t in range(start, len(fs)):
            x = fs[t]
            if (up[x] | dn[x]) & cmask: continue
            new = [lbs[0] & dn[x]]
            ok = True
            for j in range(1, min(k + 1, n) + 1):
                exts = [m & dn[x] for m in lbs[j-1]] if j > 1 else [dn[x]]
                if not all(m & fmask for m in exts):
                    ok = False
                    break
                new.append((lbs[j] if j < len(lbs) else []) + exts)
            if not ok: continue
            if k + 1 > n and not (new[0] & fmask): return chosen + (x,)
            res = _rec(t + 1, chosen + (x,), cmask | (1 << x), new)
            if res is not None: return res
        return None
    return _rec(0, (), 0, [p.full])

def n_filter_witness(s, f, n, method='auto'):
    '''
    n_filter_witness(s, f, n) yields None if the upset f of s is an n-filter and otherwise yields a
      tuple of element names that violates the definition: a set X of members of f whose subsets
      of at most n elements have lower bounds in f (or meets in f) but whose full meet does not.
      For n == 0 the witness of a non-empty, non-total upset is the empty tuple.

    The optional argument method (default: 'auto') may be 'restricted' to use the check of only the
    (n+1)-element subsets (valid on meet semilattices), 'full' to use the definition over all
    finite subsets via common lower bounds (valid on any poset with at most config['poset_path_cap']
    elements), or 'auto' to use 'restricted' on meet semilattices and 'full' otherwise.

    Raises NotAnUpset if f is not an upset of s.
    '''
    p = to_algebra(s)
    fmask = to_mask(p, f)
    n = to_degree(n)
    if method == 'auto': method = 'restricted' if p.is_meet_semilattice else 'full'
    if method == 'restricted':
        if not p.is_meet_semilattice:
            raise NotMeetSemilattice('restricted n-filter check requires a meet semilattice')
    elif method == 'full':
        check_size(p.size, 'poset_path_cap', 'poset-path carrier')
    else: raise ValueError('unrecognized n-filter method: %s' % method)
    if n == 0: return None if fmask == 0 or fmask == p.full else ()
    if n == infinity or n >= popcount(fmask): return None
    w = _restricted_witness(p, fmask, n) if method == 'restricted' else \
        _poset_witness(p, fmask, n)
    return None if w is None else tuple(p.names(w))
def is_n_filter(s, f, n, method='auto'):
    '''
    is_n_filter(s, f, n) yields True if the upset f of the poset s is an n-filter and False
      otherwise. The degree n may be any non-negative integer or infinity: 0-filters are the empty
      and the total upsets and every upset is an infinity-filter.

    See n_filter_witness for the optional argument method; raises NotAnUpset if f is not an upset.
    '''
    return n_filter_witness(s, f, n, method=method) is None
def is_filter(s, f):
    '''
    is_filter(s, f) is equivalent to is_n_filter(s, f, 1).
    '''
    return is_n_filter(s, f, 1)
def is_n_ideal(s, d, n, method='auto'):
    '''
    is_n_ideal(s, d, n) yields True if the downset d of s is an n-ideal, i.e., an n-filter on the
      order dual of s.
    '''
    return is_n_filter(dual_poset(to_algebra(s)), d, n, method=method)

def min_filter_degree(s, f):
    '''
    min_filter_degree(s, f) yields the least n such that the upset f of the finite poset s is an
      n-filter; this is 0 for the empty and total upsets and never exceeds the size of f.
    '''
    p = to_algebra(s)
    fmask = to_mask(p, f)
    if fmask == 0 or fmask == p.full: return 0
    for n in range(1, popcount(fmask) + 1):
        if is_n_filter(p, Upset(p, fmask), n): return n
    return popcount(fmask)

####################################################################################################
# Unions of filters

def incompatibility_graph(s, f):
    '''
    incompatibility_graph(s, f) yields a persistent map from each member of the upset f of the
      meet semilattice s to the bit-set of the members whose meet with it lies outside of f.
    '''
    p = to_algebra(s)
    fmask = to_mask(p, f)
    if not p.is_meet_semilattice: raise NotMeetSemilattice('meets are required')
    mr = p.meet_rows
    res = {}
    for a in bits(fmask):
        res[a] = sum(1 << b for b in bits(fmask) if not (fmask >> mr[a][b]) & 1)
    return pyr.pmap(res)
def filter_cover_clique(s, f):
    '''
    filter_cover_clique(s, f) yields a largest tuple of indices of members of the upset f whose
      pairwise meets all lie outside of f, choosing the lexicographically first among those of
      maximum size.
    '''
    g = incompatibility_graph(s, f)
    best = [()]
    def _rec(chosen, cands):
        if len(chosen) > len(best[0]): best[0] = chosen
        if len(chosen) + popcount(cands) <= len(best[0]): return
        for v in bits(cands):
            cands &= ~(1 << v)
            _rec(chosen + (v,), cands & g[v])
    _rec((), to_mask(s, f))
    return best[0]
def filter_cover_number(s, f):
    '''
    filter_cover_number(s, f) yields the least k such that among any k+1 members of the upset f of
      the meet semilattice s there are two whose meet lies in f; f is a union of at most k filters
      if and only if k is at least this number.
    '''
    return len(filter_cover_clique(s, f))
def is_union_of_filters(s, f, k):
    '''
    is_union_of_filters(s, f, k) yields True if the upset f of the meet semilattice s is a union of
      at most k filters.
    '''
    return filter_cover_number(s, f) <= k

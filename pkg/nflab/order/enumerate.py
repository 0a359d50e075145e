####################################################################################################
# nflab/order/enumerate.py
# Enumeration of finite posets, lattices, and semilattices up to isomorphism, and of the upsets of a
# given poset.

import numpy      as np
import functools, logging

from ..util import (check_size, bits, popcount)
from .core  import (FinitePoset, boolean_lattice)

####################################################################################################
# Canonical forms

def _refine(leq, colors):
    '''
    _refine(leq, colors) yields the stable colour refinement of the given integer colouring of the
      order matrix leq: elements keep the same colour only if they have the same colour multiset
      among their strict lower and upper covers of the relation.
    '''
    n = len(colors)
    strict = leq & ~np.eye(n, dtype=np.bool_)
    down = [np.where(strict[:,i])[0] for i in range(n)]
    up   = [np.where(strict[i,:])[0] for i in range(n)]
    ncol = len(set(colors))
    while True:
        sigs = [(colors[i],
                 tuple(sorted(colors[j] for j in down[i])),
                 tuple(sorted(colors[j] for j in up[i])))
                for i in range(n)]
        table = {s:k for (k,s) in enumerate(sorted(set(sigs)))}
        colors = [table[s] for s in sigs]
        if len(table) == ncol: return colors
        ncol = len(table)

def _leaf_key(leq, marks, perm):
    perm = np.asarray(perm, dtype=np.int64)
    key = np.packbits(leq[np.ix_(perm, perm)]).tobytes()
    if marks is not None: key += np.packbits(marks[perm]).tobytes()
    return key

def _canonical_search(leq, marks, colors):
    n = len(colors)
    colors = _refine(leq, colors)
    if len(set(colors)) == n:
        perm = sorted(range(n), key=lambda i:colors[i])
        return (_leaf_key(leq, marks, perm), tuple(perm))
    # individualize each member of the first non-singleton colour class in turn
    counts = {}
    for c in colors: counts[c] = counts.get(c, 0) + 1
    target = min(c for (c,k) in counts.items() if k > 1)
    best = None
    for x in [i for i in range(n) if colors[i] == target]:
        cols = [2*c + (0 if i == x else 1) if c == target else 2*c for (i,c) in enumerate(colors)]
        res = _canonical_search(leq, marks, cols)
        if best is None or res[0] < best[0]: best = res
    return best

def canonical_permutation(p, designated=None):
    '''
    canonical_permutation(p) yields a tuple perm such that relabelling the FinitePoset p so that
      element perm[k] becomes element k yields the canonical isomorph of p. Isomorphic posets have
      identical canonical isomorphs.
    canonical_permutation(p, mask) additionally respects the designated subset given by the
      integer bit-set mask.
    '''
    n = p.size
    if n == 0: return ()
    marks = None if designated is None else \
            np.array([(designated >> i) & 1 for i in range(n)], dtype=np.bool_)
    init = [(popcount(p.down_masks[i]), popcount(p.up_masks[i]),
             0 if marks is None else int(marks[i]))
            for i in range(n)]
    table = {s:k for (k,s) in enumerate(sorted(set(init)))}
    return _canonical_search(p.leq, marks, [table[s] for s in init])[1]

def canonical_form(p, designated=None):
    '''
    canonical_form(p) yields a bytes object that identifies the FinitePoset p up to isomorphism:
      two posets have equal canonical forms if and only if they are isomorphic. The form is the
      lexicographically minimal order matrix found by colour refinement followed by
      individualization of the remaining symmetric elements.
    canonical_form(p, mask) yields the canonical form of the poset with the designated subset given
      by the integer bit-set mask (so that structures may be compared up to isomorphism).
    '''
    perm = canonical_permutation(p, designated)
    n = p.size
    marks = None if designated is None else \
            np.array([(designated >> i) & 1 for i in range(n)], dtype=np.bool_)
    return bytes([n % 256, n // 256]) + _leaf_key(p.leq, marks, perm)

def relabel(p, perm, names=None):
    '''
    relabel(p, perm) yields the FinitePoset whose k'th element is the element perm[k] of p.
    relabel(p, perm, names) additionally renames the elements to the given names.
    '''
    perm = np.asarray(perm, dtype=np.int64)
    if names is None: names = [p.elements[i] for i in perm]
    return FinitePoset(tuple(names), p.leq[np.ix_(perm, perm)])

####################################################################################################
# Posets and lattices

def _presentable(leq):
    '''
    _presentable(leq) yields the FinitePoset with the order matrix leq re-indexed into a linear
      extension (sorted by the size of the principal downsets) and with elements named '0', '1'...
    '''
    n = leq.shape[0]
    order = sorted(range(n), key=lambda i:(int(np.sum(leq[:,i])), i))
    order = np.asarray(order, dtype=np.int64)
    return FinitePoset(tuple([str(k) for k in range(n)]), leq[np.ix_(order, order)])

@functools.lru_cache(maxsize=None)
def _posets_of_size(n):
    if n == 0: return (np.zeros((0,0), dtype=np.bool_),)
    res = {}
    for leq in _posets_of_size(n - 1):
        p = FinitePoset(tuple([str(k) for k in range(n-1)]), leq)
        # the new element is maximal and lies above exactly the members of a downset
        for dmask in _iter_down_masks(p):
            new = np.zeros((n,n), dtype=np.bool_)
            new[:-1,:-1] = leq
            new[n-1,n-1] = True
            for i in bits(dmask): new[i,n-1] = True
            q = FinitePoset(tuple([str(k) for k in range(n)]), new)
            key = canonical_form(q)
            if key not in res: res[key] = new
    logging.debug('nflab: enumerated %d posets of size %d', len(res), n)
    return tuple([res[k] for k in sorted(res.keys())])

def _iter_down_masks(p):
    for m in iter_upset_masks(_dual(p)): yield m
def _dual(p): return FinitePoset(p.elements, p.leq.T)

def iter_posets(max_size, min_size=1):
    '''
    iter_posets(max_size) yields each poset with between 1 and max_size elements exactly once up to
      isomorphism, ordered by size. Elements are named '0', '1'... in a linear-extension order.

    The optional argument min_size (default: 1) gives the smallest size to enumerate.
    '''
    check_size(max_size, 'enumeration_cap', 'enumeration size')
    for n in range(min_size, max_size + 1):
        for leq in _posets_of_size(n): yield _presentable(leq)

@functools.lru_cache(maxsize=None)
def _lattices_of_size(n):
    if n == 1: return (np.ones((1,1), dtype=np.bool_),)
    res = []
    for inner in _posets_of_size(n - 2):
        k = n - 2
        leq = np.zeros((n,n), dtype=np.bool_)
        leq[1:k+1,1:k+1] = inner
        leq[0,:] = True
        leq[:,n-1] = True
        p = FinitePoset(tuple([str(u) for u in range(n)]), leq)
        if p.is_lattice: res.append(leq)
    return tuple(res)

def iter_lattices(max_size, min_size=1):
    '''
    iter_lattices(max_size) yields each lattice with between 1 and max_size elements exactly once
      up to isomorphism, ordered by size. The lattices of size n are obtained by bounding the
      posets of size n-2, so distinct posets yield distinct lattices.
    '''
    check_size(max_size, 'enumeration_cap', 'enumeration size')
    for n in range(max(min_size, 1), max_size + 1):
        for leq in _lattices_of_size(n): yield _presentable(leq)

def iter_distributive_lattices(max_size, min_size=1):
    '''
    iter_distributive_lattices(max_size) yields each distributive lattice with at most max_size
      elements exactly once up to isomorphism.
    '''
    for l in iter_lattices(max_size, min_size):
        if l.is_distributive: yield l

def iter_meet_semilattices(max_size, min_size=1):
    '''
    iter_meet_semilattices(max_size) yields each meet semilattice with at most max_size elements
      exactly once up to isomorphism. A finite meet semilattice with a top appended is a lattice, so
      these are the lattices with one more element with their top removed.
    '''
    for n in range(max(min_size, 1), max_size + 1):
        for leq in _lattices_of_size(n + 1):
            yield _presentable(np.array(leq[:-1,:-1]))

def iter_distributive_semilattices(max_size, min_size=1):
    '''
    iter_distributive_semilattices(max_size) yields each distributive meet semilattice with at most
      max_size elements exactly once up to isomorphism.
    '''
    for s in iter_meet_semilattices(max_size, min_size):
        if s.is_distributive_semilattice: yield s

def iter_boolean_lattices(max_size, min_size=1):
    '''
    iter_boolean_lattices(max_size) yields the Boolean lattices B_0, B_1, ... with at most max_size
      elements.
    '''
    k = 0
    while 2**k <= max_size:
        if 2**k >= min_size: yield boolean_lattice(k)
        k += 1

####################################################################################################
# Upsets

def iter_upset_masks(p):
    '''
    iter_upset_masks(p) yields the integer bit-set of each upset of the FinitePoset p, sorted by
      size and then by member indices.
    '''
    check_size(p.size, 'enumeration_cap', 'upset enumeration carrier')
    order = tuple(reversed(p.rank_order))
    strict = [p.up_masks[i] & ~(1 << i) for i in range(p.size)]
    res = []
    def _rec(k, mask):
        if k == len(order):
            res.append(mask)
            return
        x = order[k]
        _rec(k + 1, mask)
        if (strict[x] & ~mask) == 0: _rec(k + 1, mask | (1 << x))
    _rec(0, 0)
    res.sort(key=lambda m:(popcount(m), bits(m)))
    return iter(res)

def iter_upsets(p):
    '''
    iter_upsets(p) yields each Upset of the FinitePoset p in a deterministic order: by size, then
      by the tuple of member indices.
    '''
    from .core import Upset
    for m in iter_upset_masks(p): yield Upset(p, m)

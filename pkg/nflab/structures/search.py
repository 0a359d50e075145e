####################################################################################################
# nflab/structures/search.py
# Backtracking search for homomorphisms, strict homomorphisms, embeddings, and isomorphisms.

import functools, logging

from ..util  import (popcount, SignatureMismatch)
from ..order import (is_poset, is_signature, signature_operations)
from .core   import (Structure, Homomorphism, is_structure, common_signature)

def _constraints(a, ops):
    # For each source index x, the pairs (y, z) with op(y, z) = x, and for neg the y with neg y = x;
    # these are checked once x and both arguments are assigned.
    n = a.size
    res = [[] for _ in range(n)]
    for op in ('meet', 'join'):
        if op not in ops: continue
        t = a.meet_rows if op == 'meet' else a.join_rows
        for y in range(n):
            for z in range(y + 1, n):
                res[t[y][z]].append((op, y, z))
    if 'neg' in ops:
        for y in range(n): res[int(a.neg_table[y])].append(('neg', y, y))
    return res

def _search(a, b, signature, fmask=None, gmask=None, injective=False):
    '''
    _search(a, b, sig) yields, as tuples of target indices, every map from the FinitePoset a to the
      FinitePoset b that preserves the order and the operations of the signature sig. Source
      elements are assigned in a.rank_order and candidate images are tried in b.rank_order, so the
      maps are produced in a fixed order.

    If fmask and gmask are given, the map must be strict: x in fmask iff its image is in gmask. If
    injective is True, the map must be an order embedding: x <= y iff f(x) <= f(y).
    '''
    ops = signature_operations[signature]
    (n, m) = (a.size, b.size)
    if n == 0:
        yield ()
        return
    if m == 0 or (injective and m < n): return
    order = a.rank_order
    cands = b.rank_order
    cons = _constraints(a, ops)
    (aleq, bleq) = (a.leq, b.leq)
    (amr, ajr) = (a.meet_rows, a.join_rows)
    (bmr, bjr) = (b.meet_rows, b.join_rows)
    bneg = b.neg_table if 'neg' in ops else None
    fixed = {}
    if 'top' in ops: fixed[a.top] = b.top
    if 'bottom' in ops: fixed[a.bottom] = b.bottom
    f = [-1]*n
    used = [False]*m
    def _ok(x, c):
        if fmask is not None and ((fmask >> x) & 1) != ((gmask >> c) & 1): return False
        if injective and used[c]: return False
        if x in fixed and fixed[x] != c: return False
        for y in range(n):
            fy = f[y]
            if fy < 0: continue
            if aleq[y,x] and not bleq[fy,c]: return False
            if aleq[x,y] and not bleq[c,fy]: return False
            if injective and (bleq[fy,c] and not aleq[y,x] or bleq[c,fy] and not aleq[x,y]):
                return False
            if 'meet' in ops:
                k = amr[x][y]
                if f[k] >= 0 and f[k] != bmr[c][fy]: return False
            if 'join' in ops:
                k = ajr[x][y]
                if f[k] >= 0 and f[k] != bjr[c][fy]: return False
        for (op, y, z) in cons[x]:
            (fy, fz) = (f[y], f[z])
            if fy < 0 or fz < 0: continue
            if   op == 'meet' and bmr[fy][fz] != c: return False
            elif op == 'join' and bjr[fy][fz] != c: return False
            elif op == 'neg'  and int(bneg[fy])  != c: return False
        if bneg is not None:
            k = int(a.neg_table[x])
            if f[k] >= 0 and f[k] != int(bneg[c]): return False
        return True
    def _rec(k):
        if k == n:
            yield tuple(f)
            return
        x = order[k]
        for c in cands:
            if not _ok(x, c): continue
            f[x] = c
            used[c] = True
            for res in _rec(k + 1): yield res
            f[x] = -1
            used[c] = False
    for res in _rec(0): yield res

def _resolve_signature(a, b, signature):
    sig = common_signature(a, b) if signature is None else signature
    if not is_signature(sig): raise ValueError('unrecognized signature: %s' % (sig,))
    for s in (a, b):
        if not s.algebra.supports(sig):
            raise SignatureMismatch('structure does not support the %s signature' % sig)
    return sig

def _as_structure(s, sig):
    if is_structure(s): return s
    if is_poset(s): return Structure(s, (), sig if sig not in ('boolean', 'unital_semilattice')
                                     else ('distributive' if sig == 'boolean' else 'semilattice'))
    raise ValueError('expected a Structure or a FinitePoset, got %s' % (type(s),))

def iter_homs(a, b, signature=None):
    '''
    iter_homs(a, b) yields every algebra homomorphism from a to b as a tuple of target indices, one
      per source element; a and b may be Structures or FinitePosets, and their designated sets are
      ignored. The optional signature (default: the common signature of a and b) names the
      operations to preserve.
    '''
    if is_poset(a) and is_poset(b):
        sig = signature if signature is not None else common_signature(a.signature, b.signature)
        for s in (a, b):
            if not s.supports(sig):
                raise SignatureMismatch('algebra does not support the %s signature' % sig)
        return _search(a, b, sig)
    a = _as_structure(a, signature)
    b = _as_structure(b, signature)
    return _search(a.algebra, b.algebra, _resolve_signature(a, b, signature))

def iter_strict_homs(a, b, signature=None):
    '''
    iter_strict_homs(a, b) yields every strict Homomorphism from the Structure a to the Structure b
      (F = h^-1[G]) in the deterministic search order.
    '''
    sig = _resolve_signature(a, b, signature)
    for f in _search(a.algebra, b.algebra, sig, a.mask, b.mask):
        yield Homomorphism(a, b, f, sig)

@functools.lru_cache(maxsize=1024)
def _first(a, b, sig, injective):
    for f in _search(a.algebra, b.algebra, sig, a.mask, b.mask, injective=injective): return f
    return None

def find_strict_hom(a, b, signature=None):
    '''
    find_strict_hom(a, b) yields the first strict Homomorphism from the Structure a to the Structure
      b in the deterministic search order, or None if there is none. The search preserves the
      operations of the common signature of a and b (or of the given signature).

    Raises SignatureMismatch if a given signature is not supported by both structures.
    '''
    sig = _resolve_signature(a, b, signature)
    f = _first(a, b, sig, False)
    return None if f is None else Homomorphism(a, b, f, sig)
def find_embedding(a, b, signature=None):
    '''
    find_embedding(a, b) yields the first strict Homomorphism from the Structure a into the
      Structure b that is an order embedding (x <= y iff h(x) <= h(y)), or None if a does not embed
      into b.
    '''
    sig = _resolve_signature(a, b, signature)
    if a.size > b.size: return None
    f = _first(a, b, sig, True)
    if f is None: return None
    logging.debug('nflab: embedding of %d-element structure found', a.size)
    return Homomorphism(a, b, f, sig)
def embeds(a, b, signature=None):
    '''
    embeds(a, b) yields True if the Structure a embeds into the Structure b.
    '''
    return find_embedding(a, b, signature) is not None

def is_isomorphic(a, b, signature=None):
    '''
    is_isomorphic(a, b) yields True if the Structures a and b are isomorphic: they have the same
      size and each embeds into the other.
    '''
    if a.size != b.size or popcount(a.mask) != popcount(b.mask): return False
    if a == b: return True
    return embeds(a, b, signature) and embeds(b, a, signature)

def homs_into(a, b, signature=None):
    '''
    homs_into(a, b) yields the sorted tuple of distinct preimage bit-sets h^-1[G] over all algebra
      homomorphisms h from the algebra of a into the algebra of the Structure b with designated
      set G.
    '''
    alg = a.algebra if is_structure(a) else a
    sig = common_signature(a.signature, b.signature) if signature is None else signature
    res = set([])
    g = b.mask
    for f in iter_homs(alg, b.algebra, sig):
        m = 0
        for (i,j) in enumerate(f):
            if (g >> j) & 1: m |= 1 << i
        res.add(m)
    return tuple(sorted(res))

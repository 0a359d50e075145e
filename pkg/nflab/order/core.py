####################################################################################################
# nflab/order/core.py
# Finite posets, the algebraic signatures they support, upsets, and subposet witnesses.

import numpy      as np
import pyrsistent as pyr
import json, pimms

from ..util import (ObjectWithMetaData, check_size, to_mask, bits, popcount, full_mask,
                    DuplicateElement, CycleDetected, UnknownElementName, MalformedDocument,
                    NoMeet, EmptyWithoutTop, NotAnUpset)

# The operations carried by each signature; the names double as the structure signature tags.
signature_operations = pyr.pmap({
    'poset':              (),
    'semilattice':        ('meet',),
    'unital_semilattice': ('meet', 'top'),
    'lattice':            ('meet', 'join'),
    'distributive':       ('meet', 'join'),
    'boolean':            ('meet', 'join', 'neg', 'bottom', 'top')})
'''
nflab.order.core.signature_operations is a persistent map of the signature names understood by
nflab to the tuple of operations each signature carries.
'''
signatures = ('poset', 'semilattice', 'unital_semilattice', 'lattice', 'distributive', 'boolean')

def is_signature(s):
    '''
    is_signature(s) yields True if s is the name of a signature understood by nflab.
    '''
    return pimms.is_str(s) and s in signature_operations
def common_signature(*sigs):
    '''
    common_signature(s1, s2...) yields the strongest signature whose operations are carried by all
      of the given signatures (the common reduct); distributive is kept only when every argument
      is distributive or Boolean.
    '''
    if len(sigs) == 1 and not pimms.is_str(sigs[0]): sigs = tuple(sigs[0])
    if len(sigs) == 0: raise ValueError('common_signature requires at least one signature')
    for s in sigs:
        if not is_signature(s): raise ValueError('unrecognized signature: %s' % (s,))
    ops = set(signature_operations[sigs[0]])
    for s in sigs[1:]: ops &= set(signature_operations[s])
    if 'neg' in ops: return 'boolean'
    if 'join' in ops:
        dist = all(s in ('distributive', 'boolean') for s in sigs)
        return 'distributive' if dist else 'lattice'
    if 'top' in ops: return 'unital_semilattice'
    if 'meet' in ops: return 'semilattice'
    return 'poset'

####################################################################################################
# AlgebraKind

@pimms.immutable
class AlgebraKind(object):
    '''
    AlgebraKind(kind) represents the strongest algebraic signature that a finite poset supports;
    kind must be one of AlgebraKind.kinds. The option is_distributive_semilattice records whether
    the poset is a distributive meet semilattice (x ∧ y ≤ z implies z = x' ∧ y' for some x' ≥ x and
    y' ≥ y).
    '''
    kinds = ('Poset', 'JoinSemilattice', 'MeetSemilattice', 'UnitalMeetSemilattice', 'Lattice',
             'DistributiveLattice', 'BooleanAlgebra')
    _implications = pyr.pmap(
        {'Poset':                 ('Poset',),
         'JoinSemilattice':       ('Poset', 'JoinSemilattice'),
         'MeetSemilattice':       ('Poset', 'MeetSemilattice'),
         'UnitalMeetSemilattice': ('Poset', 'MeetSemilattice', 'UnitalMeetSemilattice'),
         'Lattice':               ('Poset', 'JoinSemilattice', 'MeetSemilattice',
                                   'UnitalMeetSemilattice', 'Lattice'),
         'DistributiveLattice':   ('Poset', 'JoinSemilattice', 'MeetSemilattice',
                                   'UnitalMeetSemilattice', 'Lattice', 'DistributiveLattice')})
    def __init__(self, kind, is_distributive_semilattice=False):
        self.kind = kind
        self.is_distributive_semilattice = is_distributive_semilattice
    @pimms.param
    def kind(k):
        '''
        kind.kind is the name of the strongest signature of the algebra kind.
        '''
        if k not in AlgebraKind.kinds: raise ValueError('unrecognized algebra kind: %s' % (k,))
        return k
    @pimms.option(False)
    def is_distributive_semilattice(d):
        '''
        kind.is_distributive_semilattice is True if the poset is a distributive meet semilattice.
        '''
        return bool(d)
    @pimms.require
    def distributive_lattices_are_distributive_semilattices(kind, is_distributive_semilattice):
        '''
        Distributive lattices are always distributive semilattices.
        '''
        if kind in ('DistributiveLattice', 'BooleanAlgebra') and not is_distributive_semilattice:
            raise ValueError('distributive lattices are distributive semilattices')
        return True
    @pimms.value
    def implied(kind):
        '''
        kind.implied is the tuple of all kinds implied by the given kind (including itself).
        '''
        if kind == 'BooleanAlgebra': return AlgebraKind.kinds
        return AlgebraKind._implications[kind]
    def implies(self, k):
        '''
        kind.implies(k) yields True if the algebra kind implies the kind named k.
        '''
        if k not in AlgebraKind.kinds: raise ValueError('unrecognized algebra kind: %s' % (k,))
        return k in self.implied
    def __repr__(self):
        return 'AlgebraKind(%s%s)' % (self.kind,
                                      ', distributive semilattice'
                                      if self.is_distributive_semilattice else '')
    def __eq__(self, other):
        return (isinstance(other, AlgebraKind) and other.kind == self.kind and
                other.is_distributive_semilattice == self.is_distributive_semilattice)
    def __ne__(self, other): return not (self == other)
    def __hash__(self): return hash((self.kind, self.is_distributive_semilattice))

####################################################################################################
# FinitePoset

def _closure(rel):
    '''
    _closure(rel) yields the reflexive-transitive closure of the boolean matrix rel.
    '''
    n = rel.shape[0]
    r = np.array(rel, dtype=np.bool_) | np.eye(n, dtype=np.bool_)
    while True:
        ri = r.astype(np.int64)
        rr = r | (np.dot(ri, ri) > 0)
        if np.array_equal(rr, r): return r
        r = rr

@pimms.immutable
class FinitePoset(ObjectWithMetaData):
    '''
    FinitePoset(elements, leq) represents a finite partially ordered set whose carrier is the
    ordered tuple of distinct element names, elements, and whose order relation is the full boolean
    matrix leq, with leq[i,j] True iff elements[i] <= elements[j].

    Elements are referred to by index everywhere inside nflab; subsets of the carrier are encoded as
    integer bit-sets. All derived data (covers, heights, meet and join tables, the algebra kind) are
    computed lazily and cached.
    '''
    def __init__(self, elements, leq, meta_data=None):
        ObjectWithMetaData.__init__(self, meta_data=meta_data)
        self.elements = elements
        self.leq = leq

    @pimms.param
    def elements(els):
        '''
        poset.elements is the tuple of element names of the poset, in index order.
        '''
        if pimms.is_str(els): raise MalformedDocument('elements must be a list of names')
        els = tuple(els)
        seen = set([])
        for e in els:
            if not pimms.is_str(e) or len(e) == 0:
                raise MalformedDocument('element names must be non-empty strings: %r' % (e,))
            if e in seen: raise DuplicateElement('element %s given more than once' % e)
            seen.add(e)
        check_size(len(els))
        return els
    @pimms.param
    def leq(m):
        '''
        poset.leq is the read-only boolean matrix of the order relation.
        '''
        m = np.array(m, dtype=np.bool_)
        if len(m.shape) != 2 or m.shape[0] != m.shape[1]:
            raise MalformedDocument('order relation must be a square matrix')
        return pimms.imm_array(m)
    @pimms.require
    def validate_order(elements, leq):
        '''
        The order relation must be a reflexive, antisymmetric, and transitive relation on the
        carrier.
        '''
        n = len(elements)
        if leq.shape != (n,n): raise MalformedDocument('order relation does not match carrier')
        if n == 0: return True
        if not np.all(np.diag(leq)): raise MalformedDocument('order relation is not reflexive')
        both = leq & leq.T
        both[np.diag_indices(n)] = False
        if np.any(both):
            (i,j) = [int(u[0]) for u in np.where(both)]
            raise CycleDetected('elements %s and %s are below each other' % (elements[i],
                                                                              elements[j]))
        li = leq.astype(np.int64)
        if np.any((np.dot(li, li) > 0) & ~leq):
            raise MalformedDocument('order relation is not transitive')
        return True

    @pimms.value
    def size(elements):
        '''
        poset.size is the number of elements in the poset.
        '''
        return len(elements)
    @pimms.value
    def index(elements):
        '''
        poset.index is a persistent map of element names to element indices.
        '''
        return pyr.pmap({e:i for (i,e) in enumerate(elements)})
    @pimms.value
    def up_masks(leq):
        '''
        poset.up_masks is a tuple whose i'th entry is the bit-set of elements above element i.
        '''
        return tuple([to_mask(np.where(row)[0]) for row in leq])
    @pimms.value
    def down_masks(leq):
        '''
        poset.down_masks is a tuple whose i'th entry is the bit-set of elements below element i.
        '''
        return tuple([to_mask(np.where(col)[0]) for col in leq.T])
    @pimms.value
    def down_index(down_masks):
        '''
        poset.down_index is a persistent map from principal-downset bit-sets to element indices.
        '''
        return pyr.pmap({m:i for (i,m) in enumerate(down_masks)})
    @pimms.value
    def up_index(up_masks):
        '''
        poset.up_index is a persistent map from principal-upset bit-sets to element indices.
        '''
        return pyr.pmap({m:i for (i,m) in enumerate(up_masks)})
    @pimms.value
    def covers(leq, up_masks, down_masks):
        '''
        poset.covers is the tuple of (lower, upper) index pairs of the covering relation, sorted.
        '''
        res = []
        for (i,u) in enumerate(up_masks):
            strict = u & ~(1 << i)
            for j in bits(strict):
                # j covers i iff nothing lies strictly between them
                if (strict & down_masks[j] & ~(1 << j)) == 0: res.append((i,j))
        return tuple(sorted(res))
    @pimms.value
    def heights(down_masks, covers):
        '''
        poset.heights is the tuple of element heights: the length of the longest chain below each
          element (minimal elements have height 0).
        '''
        n = len(down_masks)
        order = sorted(range(n), key=lambda i:popcount(down_masks[i]))
        below = [[] for _ in range(n)]
        for (i,j) in covers: below[j].append(i)
        h = [0]*n
        for i in order:
            if below[i]: h[i] = 1 + max(h[j] for j in below[i])
        return tuple(h)
    @pimms.value
    def rank_order(heights):
        '''
        poset.rank_order is the tuple of element indices sorted by (height, index); it is a linear
          extension of the order.
        '''
        return tuple(sorted(range(len(heights)), key=lambda i:(heights[i], i)))
    @pimms.value
    def bottom(down_masks):
        '''
        poset.bottom is the index of the least element or None if there is none.
        '''
        n = len(down_masks)
        return next((i for (i,m) in enumerate(down_masks) if m == 1 << i and n > 0
                     and all((d >> i) & 1 for d in down_masks)), None)
    @pimms.value
    def top(up_masks):
        '''
        poset.top is the index of the greatest element or None if there is none.
        '''
        return next((i for (i,m) in enumerate(up_masks)
                     if m == 1 << i and all((u >> i) & 1 for u in up_masks)), None)
    @pimms.value
    def minimal(down_masks):
        '''
        poset.minimal is the tuple of minimal elements.
        '''
        return tuple([i for (i,m) in enumerate(down_masks) if m == 1 << i])
    @pimms.value
    def maximal(up_masks):
        '''
        poset.maximal is the tuple of maximal elements.
        '''
        return tuple([i for (i,m) in enumerate(up_masks) if m == 1 << i])
    @pimms.value
    def meet_table(down_masks, down_index):
        '''
        poset.meet_table is an integer matrix whose (i,j) entry is the index of the meet of i and j,
          or -1 where the two elements have no greatest lower bound.
        '''
        n = len(down_masks)
        t = np.full((n,n), -1, dtype=np.int64)
        for i in range(n):
            di = down_masks[i]
            for j in range(i, n):
                k = down_index.get(di & down_masks[j], -1)
                t[i,j] = k
                t[j,i] = k
        return pimms.imm_array(t)
    @pimms.value
    def join_table(up_masks, up_index):
        '''
        poset.join_table is an integer matrix whose (i,j) entry is the index of the join of i and j,
          or -1 where the two elements have no least upper bound.
        '''
        n = len(up_masks)
        t = np.full((n,n), -1, dtype=np.int64)
        for i in range(n):
            ui = up_masks[i]
            for j in range(i, n):
                k = up_index.get(ui & up_masks[j], -1)
                t[i,j] = k
                t[j,i] = k
        return pimms.imm_array(t)
    @pimms.value
    def meet_rows(meet_table):
        '''
        poset.meet_rows is the meet table as a tuple of tuples of python ints.
        '''
        return tuple([tuple([int(u) for u in row]) for row in meet_table])
    @pimms.value
    def join_rows(join_table):
        '''
        poset.join_rows is the join table as a tuple of tuples of python ints.
        '''
        return tuple([tuple([int(u) for u in row]) for row in join_table])
    @pimms.value
    def is_meet_semilattice(meet_table, size):
        '''
        poset.is_meet_semilattice is True if every pair of elements has a meet.
        '''
        return size > 0 and bool(np.all(meet_table >= 0))
    @pimms.value
    def is_join_semilattice(join_table, size):
        '''
        poset.is_join_semilattice is True if every pair of elements has a join.
        '''
        return size > 0 and bool(np.all(join_table >= 0))
    @pimms.value
    def is_lattice(is_meet_semilattice, is_join_semilattice):
        '''
        poset.is_lattice is True if the poset is a (necessarily bounded) lattice.
        '''
        return is_meet_semilattice and is_join_semilattice
    @pimms.value
    def is_distributive(is_lattice, meet_table, join_table):
        '''
        poset.is_distributive is True if the poset is a lattice satisfying the distributive law
          x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) for all triples.
        '''
        if not is_lattice: return False
        (m, j) = (meet_table, join_table)
        for x in range(m.shape[0]):
            lhs = m[x][j]
            rhs = j[m[x][:,None], m[x][None,:]]
            if not np.array_equal(lhs, rhs): return False
        return True
    @pimms.value
    def neg_table(is_distributive, meet_table, join_table, bottom, top):
        '''
        poset.neg_table is the complement table of a Boolean algebra as a read-only integer vector,
          or None if the poset is not a Boolean algebra.
        '''
        if not is_distributive: return None
        n = meet_table.shape[0]
        neg = np.full(n, -1, dtype=np.int64)
        for x in range(n):
            c = np.where((meet_table[x] == bottom) & (join_table[x] == top))[0]
            if len(c) == 0: return None
            neg[x] = c[0]
        return pimms.imm_array(neg)
    @pimms.value
    def is_boolean(neg_table):
        '''
        poset.is_boolean is True if the poset is a Boolean algebra.
        '''
        return neg_table is not None
    @pimms.value
    def is_distributive_semilattice(is_meet_semilattice, is_distributive, meet_rows,
                                    up_masks, down_masks):
        '''
        poset.is_distributive_semilattice is True if the poset is a meet semilattice in which
          x ∧ y ≤ z implies that z = x' ∧ y' for some x' ≥ x and y' ≥ y.
        '''
        if not is_meet_semilattice: return False
        if is_distributive: return True
        return distributive_semilattice_witness(meet_rows, up_masks, down_masks) is None
    @pimms.value
    def kind(size, is_meet_semilattice, is_join_semilattice, is_distributive, is_boolean,
             is_distributive_semilattice, top):
        '''
        poset.kind is the AlgebraKind object describing the strongest signature of the poset.
        '''
        if size == 0:                                 k = 'Poset'
        elif is_meet_semilattice and is_join_semilattice:
            if is_boolean:                            k = 'BooleanAlgebra'
            elif is_distributive:                     k = 'DistributiveLattice'
            else:                                     k = 'Lattice'
        elif is_meet_semilattice:
            k = 'MeetSemilattice' if top is None else 'UnitalMeetSemilattice'
        elif is_join_semilattice:                     k = 'JoinSemilattice'
        else:                                         k = 'Poset'
        return AlgebraKind(k, is_distributive_semilattice)
    @pimms.value
    def signature(kind):
        '''
        poset.signature is the name of the strongest structure signature the poset supports.
        '''
        return {'Poset':'poset', 'JoinSemilattice':'poset', 'MeetSemilattice':'semilattice',
                'UnitalMeetSemilattice':'unital_semilattice', 'Lattice':'lattice',
                'DistributiveLattice':'distributive', 'BooleanAlgebra':'boolean'}[kind.kind]
    @pimms.value
    def key(elements, leq):
        '''
        poset.key is a hashable value that identifies the poset up to equality.
        '''
        return (elements, np.packbits(leq).tobytes())

    def __len__(self): return self.size
    def __hash__(self): return hash(self.key)
    def __eq__(self, other):
        return isinstance(other, FinitePoset) and self.key == other.key
    def __ne__(self, other): return not (self == other)
    def __repr__(self):
        return 'FinitePoset(<%d elements>, %s)' % (self.size, self.kind.kind)
    def supports(self, signature):
        '''
        poset.supports(sig) yields True if the poset carries every operation of the named
          signature.
        '''
        if not is_signature(signature): raise ValueError('unrecognized signature: %s' % signature)
        if signature == 'poset':              return True
        if signature == 'semilattice':        return self.is_meet_semilattice
        if signature == 'unital_semilattice': return self.is_meet_semilattice and \
                                                     self.top is not None
        if signature == 'lattice':            return self.is_lattice
        if signature == 'distributive':       return self.is_distributive
        return self.is_boolean
    def name(self, i):
        '''
        poset.name(i) yields the name of the element with index i.
        '''
        return self.elements[i]
    def names(self, ii):
        '''
        poset.names(ii) yields the list of names of the elements with the given indices; ii may
          also be an integer bit-set.
        '''
        if pimms.is_int(ii): ii = bits(ii)
        return [self.elements[i] for i in ii]
    def index_of(self, x):
        '''
        poset.index_of(x) yields the index of the element x, which may be a name or an index.
        '''
        if pimms.is_str(x):
            i = self.index.get(x, None)
            if i is None: raise UnknownElementName('unknown element: %s' % x)
            return i
        if pimms.is_int(x) and not isinstance(x, bool) and 0 <= x < self.size: return int(x)
        raise UnknownElementName('unknown element: %r' % (x,))
    def indices(self, xs):
        '''
        poset.indices(xs) yields the sorted tuple of indices of the elements in xs, which may be
          names or indices.
        '''
        if pimms.is_str(xs): xs = [xs]
        return tuple(sorted(set([self.index_of(x) for x in xs])))
    def mask(self, xs):
        '''
        poset.mask(xs) yields the bit-set of the elements in xs (names or indices).
        '''
        return to_mask(self.indices(xs))
    def le(self, a, b):
        '''
        poset.le(a, b) yields True if a <= b; a and b may be names or indices.
        '''
        return bool(self.leq[self.index_of(a), self.index_of(b)])
    def meet(self, a, b):
        '''
        poset.meet(a, b) yields the index of the meet of a and b; raises NoMeet if there is none.
        '''
        k = self.meet_rows[self.index_of(a)][self.index_of(b)]
        if k < 0: raise NoMeet('elements %s and %s have no meet' % (a, b))
        return k
    def join(self, a, b):
        '''
        poset.join(a, b) yields the index of the join of a and b; raises NoMeet if there is none.
        '''
        k = self.join_rows[self.index_of(a)][self.index_of(b)]
        if k < 0: raise NoMeet('elements %s and %s have no join' % (a, b))
        return k
    def up_closure(self, mask):
        '''
        poset.up_closure(mask) yields the bit-set of the upset generated by the given bit-set.
        '''
        res = 0
        for i in bits(mask): res |= self.up_masks[i]
        return res
    def down_closure(self, mask):
        '''
        poset.down_closure(mask) yields the bit-set of the downset generated by the given bit-set.
        '''
        res = 0
        for i in bits(mask): res |= self.down_masks[i]
        return res
    def is_up_mask(self, mask):
        '''
        poset.is_up_mask(mask) yields True if the given bit-set is upward closed.
        '''
        return self.up_closure(mask) == mask
    def is_down_mask(self, mask):
        '''
        poset.is_down_mask(mask) yields True if the given bit-set is downward closed.
        '''
        return self.down_closure(mask) == mask
    @property
    def full(self):
        '''
        poset.full is the bit-set of the whole carrier.
        '''
        return full_mask(self.size)

def is_poset(p):
    '''
    is_poset(p) yields True if p is a FinitePoset object and False otherwise.
    '''
    return isinstance(p, FinitePoset)

def distributive_semilattice_witness(meet_rows, up_masks, down_masks):
    '''
    distributive_semilattice_witness(meet_rows, up_masks, down_masks) yields a triple (x, y, z) of
      indices with x ∧ y ≤ z for which no x' ≥ x and y' ≥ y have x' ∧ y' = z, or None if the meet
      semilattice described by the arguments is distributive.
    '''
    n = len(meet_rows)
    for z in range(n):
        uz = up_masks[z]
        # pairs[a] is the set of b >= z with a ∧ b = z, for each a >= z
        pairs = {}
        for a in bits(uz):
            row = meet_rows[a]
            pairs[a] = to_mask([b for b in bits(uz) if row[b] == z])
        for x in range(n):
            s = 0
            for a in bits(up_masks[x] & uz): s |= pairs[a]
            reach = 0
            for b in bits(s): reach |= down_masks[b]
            row = meet_rows[x]
            dz = down_masks[z]
            for y in range(n):
                if (dz >> row[y]) & 1 and not (reach >> y) & 1: return (x, y, z)
    return None

####################################################################################################
# Constructors

def poset(elements, pairs=(), meta_data=None):
    '''
    poset(elements, pairs) yields the FinitePoset whose carrier is the given sequence of element
      names and whose order is the reflexive-transitive closure of the given (lower, upper) pairs;
      pairs may use names or indices.

    Raises DuplicateElement, UnknownElementName, or CycleDetected when the input is not a poset.
    '''
    if pimms.is_str(elements): raise MalformedDocument('elements must be a list of names')
    elements = tuple(elements)
    n = len(elements)
    idx = {}
    for (i,e) in enumerate(elements):
        if e in idx: raise DuplicateElement('element %s given more than once' % (e,))
        idx[e] = i
    check_size(n)
    rel = np.zeros((n,n), dtype=np.bool_)
    def _lookup(x):
        if pimms.is_str(x):
            if x not in idx: raise UnknownElementName('unknown element: %s' % x)
            return idx[x]
        if pimms.is_int(x) and 0 <= x < n: return int(x)
        raise UnknownElementName('unknown element: %r' % (x,))
    for pr in pairs:
        if pimms.is_str(pr) or len(pr) != 2:
            raise MalformedDocument('order pairs must be [lower, upper] pairs: %r' % (pr,))
        rel[_lookup(pr[0]), _lookup(pr[1])] = True
    return FinitePoset(elements, _closure(rel) if n > 0 else rel, meta_data=meta_data)
def from_leq(elements, leq, meta_data=None):
    '''
    from_leq(elements, leq) yields the FinitePoset with the given element names and the given full
      order matrix (which is validated but not closed).
    '''
    return FinitePoset(elements, leq, meta_data=meta_data)

def parse_poset(doc):
    '''
    parse_poset(doc) yields the FinitePoset described by the given JSON document, which may be a
      string of JSON text or an already-decoded mapping. The document must have an "elements" list
      and may give the order by "covers" and/or "le" lists of [lower, upper] pairs.

    Raises MalformedDocument, DuplicateElement, UnknownElementName, or CycleDetected.
    '''
    if pimms.is_str(doc):
        try: doc = json.loads(doc)
        except Exception as e: raise MalformedDocument('could not parse JSON: %s' % e)
    if not pimms.is_map(doc): raise MalformedDocument('poset document must be a JSON object')
    if 'elements' not in doc: raise MalformedDocument('poset document has no "elements" list')
    els = doc['elements']
    if not isinstance(els, (list, tuple)):
        raise MalformedDocument('"elements" must be a list of names')
    pairs = []
    for k in ('covers', 'le'):
        ps = doc.get(k, [])
        if not isinstance(ps, (list, tuple)): raise MalformedDocument('"%s" must be a list' % k)
        for pr in ps:
            if not isinstance(pr, (list, tuple)) or len(pr) != 2:
                raise MalformedDocument('"%s" entries must be [lower, upper] pairs' % k)
            if not all(pimms.is_str(u) for u in pr):
                raise MalformedDocument('"%s" entries must name elements' % k)
            pairs.append(tuple(pr))
    return poset(els, pairs)
def poset_to_json(p):
    '''
    poset_to_json(p) yields the canonical JSON-friendly dictionary describing the poset p:
      {"elements": [...], "covers": [[lo, hi], ...]} with covers sorted by index.
    '''
    return {'elements': list(p.elements),
            'covers':   [[p.elements[i], p.elements[j]] for (i,j) in p.covers]}
def serialize_poset(p):
    '''
    serialize_poset(p) yields the canonical JSON text of the poset p.
    '''
    return json.dumps(poset_to_json(p), sort_keys=True)

def boolean_lattice(n):
    '''
    boolean_lattice(n) yields the Boolean lattice B_n of all subsets of n atoms. Element i is named
      by the n-bit binary string of i (so atoms are the strings with a single 1 and index order is
      binary counting); B_0 is the one-element lattice whose element is named '0'.
    '''
    if not pimms.is_int(n) or n < 0: raise ValueError('boolean_lattice requires n >= 0')
    check_size(2**n)
    if n == 0: return FinitePoset(('0',), np.ones((1,1), dtype=np.bool_))
    idx = np.arange(2**n)
    leq = (idx[:,None] & idx[None,:]) == idx[:,None]
    return FinitePoset(tuple([format(i, '0%db' % n) for i in idx]), leq)
def chain(n):
    '''
    chain(n) yields the n-element chain with elements named '0', '1', ... in increasing order.
    '''
    if not pimms.is_int(n) or n < 1: raise ValueError('chain requires n >= 1')
    check_size(n)
    idx = np.arange(n)
    return FinitePoset(tuple([str(i) for i in idx]), idx[:,None] <= idx[None,:])
def dual_poset(p):
    '''
    dual_poset(p) yields the order dual of the poset p: same elements, reversed order.
    '''
    return FinitePoset(p.elements, p.leq.T)
def subposet(p, selected):
    '''
    subposet(p, selected) yields the subposet of p induced by the given elements (names, indices,
      or a bit-set), listed in index order.
    '''
    ii = bits(selected) if pimms.is_int(selected) else p.indices(selected)
    ii = np.asarray(ii, dtype=np.int64)
    return FinitePoset(tuple([p.elements[i] for i in ii]), p.leq[np.ix_(ii, ii)])

####################################################################################################
# Upsets

@pimms.immutable
class Upset(object):
    '''
    Upset(poset, mask) represents the upward-closed subset of the given FinitePoset whose members
    are the set bits of the integer mask. Construction raises NotAnUpset if the set is not upward
    closed; see also to_upset and upward_closure.
    '''
    def __init__(self, poset, mask):
        self.poset = poset
        self.mask = mask
    @pimms.param
    def poset(p):
        '''
        upset.poset is the FinitePoset on which the upset lives.
        '''
        if not is_poset(p): raise ValueError('Upset requires a FinitePoset')
        return p
    @pimms.param
    def mask(m):
        '''
        upset.mask is the integer bit-set of the members of the upset.
        '''
        if not pimms.is_int(m) or m < 0: raise ValueError('upset mask must be a non-negative int')
        return int(m)
    @pimms.require
    def validate_upset(poset, mask):
        '''
        Upsets must be subsets of the carrier that are upward closed.
        '''
        if mask >> poset.size: raise NotAnUpset('upset mask has bits outside of the carrier')
        if not poset.is_up_mask(mask):
            miss = bits(poset.up_closure(mask) & ~mask)
            raise NotAnUpset('set is not upward closed; missing %s' % (poset.names(miss),))
        return True
    @pimms.value
    def indices(mask):
        '''
        upset.indices is the tuple of member indices in ascending order.
        '''
        return bits(mask)
    @pimms.value
    def names(poset, indices):
        '''
        upset.names is the tuple of member names in index order.
        '''
        return tuple(poset.names(indices))
    @pimms.value
    def count(indices):
        '''
        upset.count is the number of members of the upset.
        '''
        return len(indices)
    @pimms.value
    def is_empty(mask):
        '''
        upset.is_empty is True if the upset has no members.
        '''
        return mask == 0
    @pimms.value
    def is_total(poset, mask):
        '''
        upset.is_total is True if the upset is the whole carrier.
        '''
        return mask == poset.full
    @pimms.value
    def complement(poset, mask):
        '''
        upset.complement is the bit-set of the elements not in the upset (a downset).
        '''
        return poset.full & ~mask
    def __len__(self): return self.count
    def __iter__(self): return iter(self.names)
    def __contains__(self, x):
        try: i = self.poset.index_of(x)
        except Exception: return False
        return bool((self.mask >> i) & 1)
    def __eq__(self, other):
        return isinstance(other, Upset) and self.mask == other.mask and self.poset == other.poset
    def __ne__(self, other): return not (self == other)
    def __hash__(self): return hash((self.poset.key, self.mask))
    def __repr__(self): return 'Upset(%s)' % (list(self.names),)
    def __or__(self, other):  return Upset(self.poset, self.mask | _mask_of(self.poset, other))
    def __and__(self, other): return Upset(self.poset, self.mask & _mask_of(self.poset, other))
    def issubset(self, other):
        '''
        upset.issubset(other) yields True if every member of upset is a member of other.
        '''
        return (self.mask & ~_mask_of(self.poset, other)) == 0

def _mask_of(p, u):
    if isinstance(u, Upset):
        if u.poset != p: raise ValueError('upsets live on different posets')
        return u.mask
    return p.mask(u)
def is_upset(u):
    '''
    is_upset(u) yields True if u is an Upset object and False otherwise.
    '''
    return isinstance(u, Upset)
def to_upset(p, u):
    '''
    to_upset(p, u) yields an Upset of the poset p: u may be an Upset of p, an integer bit-set, or a
      collection of element names or indices. Raises NotAnUpset if the members are not upward closed.
    '''
    if isinstance(u, Upset):
        if u.poset != p: raise ValueError('upset belongs to a different poset')
        return u
    if pimms.is_int(u): return Upset(p, int(u))
    return Upset(p, p.mask(u))
def upward_closure(p, xs):
    '''
    upward_closure(p, xs) yields the least Upset of the poset p that contains the elements xs
      (names or indices); the empty collection yields the empty upset.
    '''
    return Upset(p, p.up_closure(p.mask(xs)))
def total_upset(p):
    '''
    total_upset(p) yields the Upset of all elements of p.
    '''
    return Upset(p, p.full)
def empty_upset(p):
    '''
    empty_upset(p) yields the empty Upset of p.
    '''
    return Upset(p, 0)

####################################################################################################
# Meets and classification

def classify_algebra(p):
    '''
    classify_algebra(p) yields the AlgebraKind of the FinitePoset p: the strongest signature among
      Poset, MeetSemilattice, JoinSemilattice, UnitalMeetSemilattice, Lattice, DistributiveLattice
      and BooleanAlgebra that p supports, together with the flag is_distributive_semilattice.
    '''
    return p.kind

def meet_mask(p, mask):
    '''
    meet_mask(p, mask) yields the index of the greatest lower bound of the bit-set mask in the
      poset p; the empty set yields the top. Raises NoMeet or EmptyWithoutTop.
    '''
    if mask == 0:
        if p.top is None: raise EmptyWithoutTop('the empty meet requires a top element')
        return p.top
    common = p.full
    for i in bits(mask): common &= p.down_masks[i]
    k = p.down_index.get(common, None)
    if k is None: raise NoMeet('the elements %s have no meet' % (p.names(mask),))
    return k
def meet_of_set(p, xs):
    '''
    meet_of_set(p, xs) yields the name of the greatest lower bound of the elements xs (names or
      indices) in the poset p. The empty collection yields the top element.

    Raises NoMeet if the elements have no greatest lower bound and EmptyWithoutTop if xs is empty
    and p has no top.
    '''
    return p.elements[meet_mask(p, p.mask(xs))]

def is_m5_n5_free(p):
    '''
    is_m5_n5_free(l) yields True if the lattice l has no sublattice isomorphic to the five-element
      diamond M5 or the five-element pentagon N5; by the M5/N5 theorem this holds exactly when l is
      distributive, which makes this an independent check of the distributive-law test.
    '''
    if not p.is_lattice: raise ValueError('is_m5_n5_free requires a lattice')
    (m, j, n) = (p.meet_rows, p.join_rows, p.size)
    for a in range(n):
        for b in range(n):
            if b == a or p.leq[a,b] or p.leq[b,a]: continue
            (mab, jab) = (m[a][b], j[a][b])
            for c in range(n):
                if c == a or c == b: continue
                # pentagon: a < c, b incomparable with c, and {a,c} agree on meets/joins with b
                if p.leq[a,c] and m[c][b] == mab and j[c][b] == jab: return False
                # diamond: three pairwise-incomparable elements with common meets and joins
                if (not p.leq[a,c] and not p.leq[c,a] and not p.leq[b,c] and not p.leq[c,b] and
                    m[a][c] == mab and m[b][c] == mab and j[a][c] == jab and j[b][c] == jab):
                    return False
    return True

####################################################################################################
# Subposet witnesses

@pimms.immutable
class SubposetWitness(object):
    '''
    SubposetWitness(ambient, selected) represents the subposet of the FinitePoset ambient induced by
    the given selected elements (names, indices, or a bit-set).
    '''
    def __init__(self, ambient, selected):
        self.ambient = ambient
        self.selected = selected
    @pimms.param
    def ambient(p):
        '''
        witness.ambient is the ambient FinitePoset.
        '''
        if not is_poset(p): raise ValueError('SubposetWitness requires a FinitePoset')
        return p
    @pimms.param
    def selected(s):
        '''
        witness.selected is the selection as given (names, indices, or a bit-set).
        '''
        return s if pimms.is_int(s) else tuple(s)
    @pimms.value
    def mask(ambient, selected):
        '''
        witness.mask is the bit-set of the selected elements.
        '''
        if pimms.is_int(selected):
            if selected >> ambient.size: raise UnknownElementName('selection exceeds the carrier')
            return int(selected)
        return ambient.mask(selected)
    @pimms.value
    def indices(mask):
        '''
        witness.indices is the tuple of selected indices in ascending order.
        '''
        return bits(mask)
    @pimms.value
    def subposet(ambient, mask):
        '''
        witness.subposet is the induced FinitePoset.
        '''
        return subposet(ambient, mask)

def is_ideal_subposet_witness(w):
    '''
    is_ideal_subposet_witness(w) yields None if the subposet witness w is an ideal subposet and
      otherwise a triple (x, y, u) of ambient indices with x, y selected, x, y <= u, and no selected
      z with x, y <= z <= u.
    '''
    p = w.ambient
    sel = w.mask
    for x in w.indices:
        for y in w.indices:
            if y < x: continue
            common = p.up_masks[x] & p.up_masks[y]
            for u in bits(common):
                if (common & p.down_masks[u] & sel) == 0: return (x, y, u)
    return None
def is_ideal_subposet(w):
    '''
    is_ideal_subposet(w) yields True if the SubposetWitness w is an ideal subposet of its ambient
      poset: for all selected x, y and every ambient u with x, y <= u there is a selected z with
      x, y <= z <= u.
    '''
    if w.mask == 0: raise ValueError('is_ideal_subposet requires a non-empty selection')
    return is_ideal_subposet_witness(w) is None

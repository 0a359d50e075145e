####################################################################################################
# nflab/structures/core.py
# Structures <A, F> (an algebra with a designated upset), homomorphisms between them, products,
# restrictions, congruences, quotients, and strict images.

import numpy      as np
import json, itertools, functools, pimms

from ..util  import (ObjectWithMetaData, check_size, bits,
                     MalformedDocument, SignatureMismatch, NotSurjective, NotStrict,
                     NotSubalgebra, BadParameter)
from ..order import (FinitePoset, Upset, SubposetWitness, is_poset, to_upset, is_signature,
                     signature_operations, common_signature as _common_ops_signature,
                     parse_poset, poset_to_json, subposet)

####################################################################################################
# Structures

nonempty_signatures = ('boolean', 'unital_semilattice')
'''
nonempty_signatures is the tuple of signatures whose structures must have a non-empty designated
set.
'''

def default_signature(algebra, mask=None):
    '''
    default_signature(algebra) yields the strongest signature supported by the given FinitePoset.
    default_signature(algebra, mask) yields the strongest signature that supports the given
      designated bit-set; signatures that require a non-empty designated set are weakened to their
      reducts (boolean to distributive, unital semilattice to semilattice) when mask is empty.
    '''
    sig = algebra.signature
    if mask == 0 and sig in nonempty_signatures:
        sig = 'distributive' if sig == 'boolean' else 'semilattice'
    return sig

@pimms.immutable
class Structure(ObjectWithMetaData):
    '''
    Structure(algebra, designated) represents the pair <A, F> of the finite algebra A (a
    FinitePoset together with the operations of a signature) and the designated upset F, which may
    be given as an Upset or as a collection of element names or indices.

    The optional argument signature (default: None) names the algebraic signature of the
    structure; by default the strongest signature the algebra supports is used (see
    default_signature). Boolean and unital-semilattice structures must have a non-empty
    designated set.
    '''
    def __init__(self, algebra, designated, signature=None, meta_data=None):
        ObjectWithMetaData.__init__(self, meta_data=meta_data)
        self.algebra = algebra
        self.designated = designated
        if signature is None:
            mask = designated.mask if isinstance(designated, Upset) else \
                   designated      if pimms.is_int(designated) else \
                   algebra.mask(designated)
            signature = default_signature(algebra, mask)
        self.signature = signature
    @pimms.param
    def algebra(a):
        '''
        structure.algebra is the FinitePoset underlying the structure.
        '''
        if not is_poset(a): raise ValueError('structure algebra must be a FinitePoset')
        return a
    @pimms.param
    def designated(d):
        '''
        structure.designated is the designated set as given to the constructor.
        '''
        if isinstance(d, Upset) or pimms.is_int(d): return d
        return tuple(d)
    @pimms.param
    def signature(s):
        '''
        structure.signature is the name of the structure's algebraic signature.
        '''
        if not is_signature(s): raise ValueError('unrecognized signature: %s' % (s,))
        return s
    @pimms.require
    def validate_structure(algebra, designated, signature):
        '''
        The algebra must support the signature and the designated set must be an upset, non-empty
        for the Boolean and unital-semilattice signatures.
        '''
        if not algebra.supports(signature):
            raise SignatureMismatch('algebra (%s) does not support the %s signature'
                                    % (algebra.kind.kind, signature))
        u = Upset(algebra, designated) if pimms.is_int(designated) else \
            to_upset(algebra, designated)
        if signature in nonempty_signatures and u.mask == 0:
            raise BadParameter('%s structures require a non-empty designated set' % signature)
        return True
    @pimms.value
    def upset(algebra, designated):
        '''
        structure.upset is the designated set as an Upset object.
        '''
        if pimms.is_int(designated): return Upset(algebra, designated)
        return to_upset(algebra, designated)
    @pimms.value
    def mask(upset):
        '''
        structure.mask is the integer bit-set of the designated set.
        '''
        return upset.mask
    @pimms.value
    def names(upset):
        '''
        structure.names is the tuple of names of the designated elements.
        '''
        return upset.names
    @pimms.value
    def operations(signature):
        '''
        structure.operations is the tuple of operation names carried by the structure's signature.
        '''
        return signature_operations[signature]
    @pimms.value
    def nonempty_required(signature):
        '''
        structure.nonempty_required is True if the structure's signature requires a non-empty
          designated set.
        '''
        return signature in nonempty_signatures
    @pimms.value
    def size(algebra):
        '''
        structure.size is the number of elements of the structure's algebra.
        '''
        return algebra.size
    @pimms.value
    def key(algebra, mask, signature):
        '''
        structure.key is a hashable value identifying the structure up to equality.
        '''
        return (algebra.key, mask, signature)
    def __len__(self): return self.size
    def __hash__(self): return hash(self.key)
    def __eq__(self, other): return isinstance(other, Structure) and self.key == other.key
    def __ne__(self, other): return not (self == other)
    def __repr__(self):
        return 'Structure(<%d elements, %s>, %s)' % (self.size, self.signature, list(self.names))
    def with_signature(self, signature):
        '''
        structure.with_signature(sig) yields the same structure viewed in the given signature.
        '''
        if signature == self.signature: return self
        return Structure(self.algebra, self.mask, signature, meta_data=self.meta_data)
    def with_upset(self, designated):
        '''
        structure.with_upset(u) yields the structure with the same algebra and signature but with
          the designated set u.
        '''
        return Structure(self.algebra, designated, self.signature, meta_data=self.meta_data)

def is_structure(s):
    '''
    is_structure(s) yields True if s is a Structure object and False otherwise.
    '''
    return isinstance(s, Structure)
def to_structure(s, designated=None, signature=None):
    '''
    to_structure(s) yields s if s is a Structure; if s is a FinitePoset, yields the structure on s
      whose designated set is the given designated collection (default: empty).
    '''
    if is_structure(s):
        if signature is not None: return s.with_signature(signature)
        return s
    if is_poset(s): return Structure(s, () if designated is None else designated, signature)
    raise ValueError('cannot interpret %s as a structure' % (type(s),))

def common_signature(*ss):
    '''
    common_signature(s1, s2...) yields the strongest signature shared by the given structures (or
      signature names): the intersection of their operation sets.
    '''
    if len(ss) == 1 and not is_structure(ss[0]) and not pimms.is_str(ss[0]): ss = tuple(ss[0])
    return _common_ops_signature([s.signature if is_structure(s) else s for s in ss])

####################################################################################################
# Structure JSON

def structure_to_json(s):
    '''
    structure_to_json(s) yields the canonical JSON-friendly dictionary describing the structure s:
      the poset fields plus "upset" (the designated names in index order) and "signature".
    '''
    d = poset_to_json(s.algebra)
    d['upset'] = list(s.names)
    d['signature'] = s.signature
    return d
def serialize_structure(s):
    '''
    serialize_structure(s) yields the canonical JSON text of the structure s.
    '''
    return json.dumps(structure_to_json(s), sort_keys=True)
def parse_structure(doc):
    '''
    parse_structure(doc) yields the Structure described by the given JSON document (text or a
      decoded mapping): a poset document with an optional "upset" list (default: empty) and an
      optional "signature" name (default: the strongest signature the poset supports).
    '''
    if pimms.is_str(doc):
        try: doc = json.loads(doc)
        except Exception as e: raise MalformedDocument('could not parse JSON: %s' % e)
    if not pimms.is_map(doc): raise MalformedDocument('structure document must be a JSON object')
    p = parse_poset(doc)
    ups = doc.get('upset', [])
    if not isinstance(ups, (list, tuple)) or not all(pimms.is_str(u) for u in ups):
        raise MalformedDocument('"upset" must be a list of element names')
    sig = doc.get('signature', None)
    if sig is not None and not is_signature(sig):
        raise MalformedDocument('unrecognized signature: %s' % (sig,))
    return Structure(p, ups, sig)

####################################################################################################
# Homomorphisms

def homomorphism_violation(a, b, mapping, signature):
    '''
    homomorphism_violation(a, b, mapping, signature) yields None if the index map mapping from the
      FinitePoset a to the FinitePoset b preserves the order and every operation of the named
      signature, and otherwise yields a string describing the first violated operation.
    '''
    f = np.asarray(mapping, dtype=np.int64)
    if f.shape != (a.size,): return 'map has the wrong length'
    if a.size == 0: return None
    if np.any(f < 0) or np.any(f >= b.size): return 'map leaves the target carrier'
    ops = signature_operations[signature]
    if np.any(a.leq & ~b.leq[np.ix_(f, f)]): return 'order'
    if 'meet' in ops and not np.array_equal(f[a.meet_table], b.meet_table[np.ix_(f, f)]):
        return 'meet'
    if 'join' in ops and not np.array_equal(f[a.join_table], b.join_table[np.ix_(f, f)]):
        return 'join'
    if 'neg' in ops and not np.array_equal(f[a.neg_table], b.neg_table[f]): return 'neg'
    if 'top' in ops and f[a.top] != b.top: return 'top'
    if 'bottom' in ops and f[a.bottom] != b.bottom: return 'bottom'
    return None
def is_homomorphism(a, b, mapping, signature):
    '''
    is_homomorphism(a, b, mapping, signature) yields True if the index map is a homomorphism of the
      named signature from the FinitePoset a to the FinitePoset b.
    '''
    return homomorphism_violation(a, b, mapping, signature) is None

def preimage_mask(mapping, mask):
    '''
    preimage_mask(mapping, mask) yields the bit-set of source indices whose image under the index
      map lies in the target bit-set mask.
    '''
    res = 0
    for (i,j) in enumerate(mapping):
        if (mask >> j) & 1: res |= 1 << i
    return res
def image_mask(mapping, mask=None):
    '''
    image_mask(mapping) yields the bit-set of the image of the index map.
    image_mask(mapping, mask) yields the bit-set of the image of the source bit-set mask.
    '''
    res = 0
    for (i,j) in enumerate(mapping):
        if mask is None or (mask >> i) & 1: res |= 1 << j
    return res

@pimms.immutable
class Homomorphism(object):
    '''
    Homomorphism(source, target, mapping) represents the homomorphism of structures from the
    Structure source to the Structure target given by the tuple mapping of target indices, one per
    source element. The map must preserve every operation of the signature, which by default is
    the common signature of source and target.
    '''
    def __init__(self, source, target, mapping, signature=None):
        self.source = source
        self.target = target
        self.mapping = mapping
        if signature is None: signature = common_signature(source, target)
        self.signature = signature
    @pimms.param
    def source(s):
        '''
        hom.source is the source Structure.
        '''
        if not is_structure(s): raise ValueError('homomorphism source must be a Structure')
        return s
    @pimms.param
    def target(t):
        '''
        hom.target is the target Structure.
        '''
        if not is_structure(t): raise ValueError('homomorphism target must be a Structure')
        return t
    @pimms.param
    def mapping(m):
        '''
        hom.mapping is the tuple of target indices of the source elements.
        '''
        return tuple([int(u) for u in m])
    @pimms.param
    def signature(s):
        '''
        hom.signature is the name of the signature whose operations the map preserves.
        '''
        if not is_signature(s): raise ValueError('unrecognized signature: %s' % (s,))
        return s
    @pimms.require
    def preserves_operations(source, target, mapping, signature):
        '''
        The map must be a homomorphism of the declared signature.
        '''
        for x in (source, target):
            if not x.algebra.supports(signature):
                raise SignatureMismatch('structure does not support the %s signature' % signature)
        err = homomorphism_violation(source.algebra, target.algebra, mapping, signature)
        if err is not None: raise SignatureMismatch('map does not preserve %s' % err)
        return True
    @pimms.value
    def preimage(mapping, target):
        '''
        hom.preimage is the bit-set of source elements mapped into the target's designated set.
        '''
        return preimage_mask(mapping, target.mask)
    @pimms.value
    def strict(preimage, source):
        '''
        hom.strict is True if the source's designated set is the preimage of the target's.
        '''
        return preimage == source.mask
    @pimms.value
    def image(mapping):
        '''
        hom.image is the bit-set of the image of the map.
        '''
        return image_mask(mapping)
    @pimms.value
    def surjective(image, target):
        '''
        hom.surjective is True if every target element is the image of some source element.
        '''
        return image == target.algebra.full
    @pimms.value
    def injective(mapping):
        '''
        hom.injective is True if no two source elements share an image.
        '''
        return len(set(mapping)) == len(mapping)
    def __call__(self, x):
        '''
        hom(x) yields the name of the image of the source element x (a name or an index).
        '''
        return self.target.algebra.elements[self.mapping[self.source.algebra.index_of(x)]]
    def __repr__(self):
        return 'Homomorphism(%s%s)' % (self.to_json()['map'], ', strict' if self.strict else '')
    def __eq__(self, other):
        return isinstance(other, Homomorphism) and self.mapping == other.mapping and \
            self.source == other.source and self.target == other.target
    def __ne__(self, other): return not (self == other)
    def __hash__(self): return hash((self.source.key, self.target.key, self.mapping))
    def to_json(self):
        '''
        hom.to_json() yields the JSON-friendly dictionary {"map": {src: dst...}, "strict": bool}.
        '''
        (a, b) = (self.source.algebra, self.target.algebra)
        return {'map': {a.elements[i]: b.elements[j] for (i,j) in enumerate(self.mapping)},
                'strict': bool(self.strict)}

def is_homomorphism_object(h):
    '''
    is_homomorphism_object(h) yields True if h is a Homomorphism object and False otherwise.
    '''
    return isinstance(h, Homomorphism)

####################################################################################################
# Products

def _product_names(algs):
    names = [a.elements for a in algs]
    binary = all(all(set(e) <= set('01') for e in es) for es in names)
    res = []
    for tup in itertools.product(*names):
        res.append(''.join(tup) if binary else '(' + ','.join(tup) + ')')
    return tuple(res)
def product_poset(algs):
    '''
    product_poset(algs) yields the FinitePoset that is the direct product of the given FinitePosets
      ordered componentwise. Element k is the tuple in itertools.product order (the last factor
      varies fastest); names are concatenated when every factor element is named by a binary
      string and written as '(x,y,...)' otherwise.
    '''
    algs = tuple(algs)
    if len(algs) == 0: raise ValueError('product requires at least one factor')
    check_size(int(np.prod([a.size for a in algs])), what='product carrier')
    leq = np.ones((1,1), dtype=np.bool_)
    for a in algs:
        (n, m) = (leq.shape[0], a.size)
        leq = (leq[:,None,:,None] & a.leq[None,:,None,:]).reshape(n*m, n*m)
    return FinitePoset(_product_names(algs), leq)
def _product_masks(parts):
    # the designated set of each factor pulled back along its projection
    sizes = [s.size for s in parts]
    total = int(np.prod(sizes))
    res = []
    for (k,s) in enumerate(parts):
        inner = int(np.prod(sizes[k+1:]))
        m = 0
        for idx in range(total):
            if (s.mask >> ((idx // inner) % sizes[k])) & 1: m |= 1 << idx
        res.append(m)
    return res

def _product(parts, dual):
    parts = tuple(parts)
    if len(parts) == 0: raise ValueError('product requires at least one factor')
    for s in parts:
        if not is_structure(s): raise ValueError('products are formed from Structures')
    if len(parts) == 1: return parts[0]
    sig = common_signature(parts)
    alg = product_poset([s.algebra for s in parts])
    masks = _product_masks(parts)
    res = 0 if dual else alg.full
    for m in masks: res = (res | m) if dual else (res & m)
    if sig in nonempty_signatures and res == 0: sig = default_signature(alg, 0)
    return Structure(alg, res, sig)
def direct_product(parts):
    '''
    direct_product(parts) yields the direct product of the given Structures: the componentwise
      product algebra whose designated set is the intersection of the projection preimages of the
      designated sets. The signature is the common signature of the parts.
    '''
    return _product(parts, False)
def dual_product(parts):
    '''
    dual_product(parts) yields the dual (direct) product of the given Structures: the componentwise
      product algebra whose designated set is the union of the projection preimages of the
      designated sets.
    '''
    return _product(parts, True)
def direct_power(s, k):
    '''
    direct_power(s, k) yields the direct product of k copies of the structure s.
    '''
    return direct_product([s]*k)
def dual_power(s, k):
    '''
    dual_power(s, k) yields the dual product of k copies of the structure s.
    '''
    return dual_product([s]*k)

def complement_structure(s):
    '''
    complement_structure(s) yields the structure on the order dual of the algebra of s whose
      designated set is the complement of the designated set of s (an upset of the dual). Direct
      and dual products are exchanged by this operation.
    '''
    from ..order import dual_poset
    d = dual_poset(s.algebra)
    comp = d.full & ~s.mask
    return Structure(d, comp, common_signature(s.signature, default_signature(d, comp)))

def tupled_hom(homs, dual=False):
    '''
    tupled_hom(homs) yields the Homomorphism from <A, F1 ∩ ... ∩ Fk> into the direct product of the
      targets of the given homomorphisms hi: <A, Fi> -> <Bi, Gi> (which share the algebra A); the
      map sends x to the tuple of the hi(x).
    tupled_hom(homs, True) yields the map into the dual product, with source <A, F1 ∪ ... ∪ Fk>.
    '''
    homs = tuple(homs)
    alg = homs[0].source.algebra
    for h in homs:
        if h.source.algebra != alg: raise ValueError('tupled homomorphisms must share a source')
    targets = [h.target for h in homs]
    prod = (dual_product if dual else direct_product)(targets)
    src = 0 if dual else alg.full
    for h in homs: src = (src | h.source.mask) if dual else (src & h.source.mask)
    sizes = [t.size for t in targets]
    mapping = []
    for x in range(alg.size):
        idx = 0
        for (h,sz) in zip(homs, sizes): idx = idx*sz + h.mapping[x]
        mapping.append(idx)
    sig = common_signature(prod.signature, homs[0].signature)
    if sig in nonempty_signatures and src == 0: sig = default_signature(alg, 0)
    return Homomorphism(Structure(alg, src, sig), prod.with_signature(sig), mapping, sig)

####################################################################################################
# Substructures

def is_subalgebra_mask(alg, mask, signature):
    '''
    is_subalgebra_mask(alg, mask, signature) yields True if the bit-set mask is non-empty and closed
      under every operation (and contains every constant) of the named signature.
    '''
    if mask == 0: return False
    ops = signature_operations[signature]
    sel = bits(mask)
    for op in ('meet', 'join'):
        if op not in ops: continue
        t = alg.meet_rows if op == 'meet' else alg.join_rows
        for a in sel:
            for b in sel:
                if not (mask >> t[a][b]) & 1: return False
    if 'neg' in ops and not all((mask >> int(alg.neg_table[a])) & 1 for a in sel): return False
    if 'top' in ops and not (mask >> alg.top) & 1: return False
    if 'bottom' in ops and not (mask >> alg.bottom) & 1: return False
    return True

def restrict_structure(s, w, signature=None):
    '''
    restrict_structure(s, w) yields the substructure of the Structure s induced by the
      SubposetWitness w (or by a collection of element names or indices): the induced algebra with
      the restriction of the designated set.

    The optional argument signature (default: the signature of s) gives the signature in which the
    selected set must be a subalgebra; raises NotSubalgebra if it is not.
    '''
    alg = s.algebra
    if not isinstance(w, SubposetWitness): w = SubposetWitness(alg, w)
    if w.ambient != alg: raise ValueError('subposet witness belongs to a different poset')
    sig = s.signature if signature is None else signature
    if not is_signature(sig): raise ValueError('unrecognized signature: %s' % (sig,))
    if not is_subalgebra_mask(alg, w.mask, sig):
        raise NotSubalgebra('%s is not a %s subalgebra' % (alg.names(w.mask), sig))
    sub = w.subposet
    des = [k for (k,i) in enumerate(w.indices) if (s.mask >> i) & 1]
    if sig in nonempty_signatures and not des:
        raise NotSubalgebra('restriction has an empty designated set')
    return Structure(sub, des, sig)

def generated_mask(alg, mask, signature):
    '''
    generated_mask(alg, mask, signature) yields the bit-set of the subalgebra of alg generated by
      the bit-set mask in the named signature.
    '''
    ops = signature_operations[signature]
    if 'top' in ops: mask |= 1 << alg.top
    if 'bottom' in ops: mask |= 1 << alg.bottom
    while True:
        new = mask
        sel = bits(mask)
        for a in sel:
            if 'neg' in ops: new |= 1 << int(alg.neg_table[a])
            for b in sel:
                if 'meet' in ops: new |= 1 << alg.meet_rows[a][b]
                if 'join' in ops: new |= 1 << alg.join_rows[a][b]
        if new == mask: return mask
        mask = new
def substructure_generated(s, elements, signature=None):
    '''
    substructure_generated(s, xs) yields the substructure of the Structure s on the subalgebra
      generated by the elements xs (names or indices).
    '''
    sig = s.signature if signature is None else signature
    m = generated_mask(s.algebra, s.algebra.mask(elements), sig)
    return restrict_structure(s, SubposetWitness(s.algebra, m), sig)

def inclusion_hom(s, w):
    '''
    inclusion_hom(s, w) yields the embedding of restrict_structure(s, w) into s.
    '''
    if not isinstance(w, SubposetWitness): w = SubposetWitness(s.algebra, w)
    sub = restrict_structure(s, w)
    return Homomorphism(sub, s, w.indices, s.signature)

####################################################################################################
# Strict images, congruences, and quotients

def strict_image(h):
    '''
    strict_image(h) yields the strict homomorphic image of the source of the Homomorphism h: the
      target algebra with the image of the designated set. Raises NotSurjective if h is not onto
      and NotStrict if h is not strict.
    '''
    if not h.surjective: raise NotSurjective('homomorphism is not surjective')
    if not h.strict: raise NotStrict('homomorphism is not strict')
    img = image_mask(h.mapping, h.source.mask)
    return Structure(h.target.algebra, img, h.signature)

def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x
def congruence(alg, pairs, signature):
    '''
    congruence(alg, pairs, signature) yields the least congruence of the FinitePoset alg, in the
      named signature, that identifies each of the given pairs of elements (names or indices). The
      congruence is a tuple of class labels: entry i is the least index in the class of i.
    '''
    ops = signature_operations[signature]
    if 'meet' not in ops: raise SignatureMismatch('congruences require a meet operation')
    n = alg.size
    tables = [alg.meet_rows] + ([alg.join_rows] if 'join' in ops else [])
    neg = alg.neg_table if 'neg' in ops else None
    parent = list(range(n))
    work = [(alg.index_of(a), alg.index_of(b)) for (a,b) in pairs]
    while work:
        (a, b) = work.pop()
        (ra, rb) = (_find(parent, a), _find(parent, b))
        if ra == rb: continue
        parent[max(ra, rb)] = min(ra, rb)
        for t in tables:
            for z in range(n): work.append((t[a][z], t[b][z]))
        if neg is not None: work.append((int(neg[a]), int(neg[b])))
    return tuple([_find(parent, i) for i in range(n)])
def _join_congruences(alg, c1, c2, signature):
    return congruence(alg, [(i, c) for (i,c) in enumerate(c1) if i != c] +
                           [(i, c) for (i,c) in enumerate(c2) if i != c], signature)
@functools.lru_cache(maxsize=256)
def _congruences(alg, signature):
    n = alg.size
    ident = tuple(range(n))
    principal = set([])
    for a in range(n):
        for b in range(a + 1, n): principal.add(congruence(alg, [(a, b)], signature))
    seen = set([ident])
    frontier = [ident]
    while frontier:
        nxt = []
        for c in frontier:
            for p in principal:
                j = _join_congruences(alg, c, p, signature)
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        frontier = nxt
    return tuple(sorted(seen, key=lambda c:(-len(set(c)), c)))
def iter_congruences(alg, signature):
    '''
    iter_congruences(alg, signature) yields every congruence of the finite algebra alg in the named
      signature, as tuples of class labels, sorted by decreasing number of classes and then by
      labels; the identity congruence comes first.
    '''
    return iter(_congruences(alg, signature))

def is_saturated(partition, mask):
    '''
    is_saturated(partition, mask) yields True if the bit-set mask is a union of classes of the
      partition given as a tuple of class labels.
    '''
    for (i,c) in enumerate(partition):
        if ((mask >> i) & 1) != ((mask >> c) & 1): return False
    return True
def quotient(s, partition):
    '''
    quotient(s, theta) yields the pair (q, h) of the quotient Structure of s by the congruence theta
      (a tuple of class labels, as yielded by congruence) and the strict surjective Homomorphism
      h from s onto q. Classes are ordered by [a] <= [b] iff a ∧ b ~ a and named after their least
      member. Raises NotStrict if the designated set of s is not a union of classes.
    '''
    alg = s.algebra
    partition = tuple(partition)
    if len(partition) != alg.size: raise ValueError('partition does not match the carrier')
    if 'meet' not in s.operations: raise SignatureMismatch('quotients require a meet operation')
    if not is_saturated(partition, s.mask):
        raise NotStrict('designated set is not a union of congruence classes')
    reps = sorted(set(partition))
    pos = {r:k for (k,r) in enumerate(reps)}
    mr = alg.meet_rows
    k = len(reps)
    leq = np.zeros((k,k), dtype=np.bool_)
    for (x,a) in enumerate(reps):
        for (y,b) in enumerate(reps):
            leq[x,y] = partition[mr[a][b]] == a
    q = FinitePoset(tuple([alg.elements[r] for r in reps]), leq)
    des = [pos[r] for r in reps if (s.mask >> r) & 1]
    qs = Structure(q, des, s.signature)
    h = Homomorphism(s, qs, [pos[c] for c in partition], s.signature)
    return (qs, h)
def strict_quotients(s):
    '''
    strict_quotients(s) yields, for each congruence of the algebra of s whose classes saturate the
      designated set, the pair (quotient structure, quotient homomorphism); these are, up to
      isomorphism, all strict homomorphic images of s.
    '''
    for c in iter_congruences(s.algebra, s.signature):
        if is_saturated(c, s.mask): yield quotient(s, c)

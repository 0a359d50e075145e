####################################################################################################
# nflab/classes/core.py
# Membership in the filter and logical classes generated by finite structures, the splitting
# dichotomy for Boolean filter classes, and the product-class criterion.

import warnings, logging, functools, pimms

from ..util       import (SizeCap, BadParameter, SignatureMismatch, DichotomyViolated)
from ..order      import (signature_operations, Upset)
from ..filters    import (is_n_filter, generate_n_filter)
from ..structures import (Structure, is_structure, common_signature, homs_into, find_embedding,
                          generated_mask, free_algebra, free_generators, direct_product, nabla)
from ..horn       import (alpha, gamma, holds_in)

closures = ('filter_class', 'logical_class')

@pimms.immutable
class FilterClassSpec(object):
    '''
    FilterClassSpec(generators) represents the filter class generated by the given non-empty
    collection of finite Structures: the least class containing them that is closed under
    substructures, direct products, and strict homomorphic preimages.

    The optional argument closure (default: 'filter_class') may be 'logical_class' to close the
    class under strict homomorphic images as well. The optional signature (default: the common
    signature of the generators) names the signature the class is taken in.
    '''
    def __init__(self, generators, closure='filter_class', signature=None):
        self.generators = generators
        self.closure = closure
        self.signature = signature
    @pimms.param
    def generators(gs):
        '''
        spec.generators is the tuple of generating Structures.
        '''
        if is_structure(gs): gs = (gs,)
        gs = tuple(gs)
        if len(gs) == 0: raise ValueError('a class needs at least one generator')
        if not all(is_structure(g) for g in gs): raise ValueError('generators must be Structures')
        return gs
    @pimms.option('filter_class')
    def closure(c):
        '''
        spec.closure is either 'filter_class' or 'logical_class'.
        '''
        if c not in closures: raise ValueError('unrecognized closure: %s' % (c,))
        return c
    @pimms.option(None)
    def signature(s):
        '''
        spec.signature is the declared signature of the class, or None for the generators' common
          signature.
        '''
        if s is not None and s not in signature_operations:
            raise ValueError('unrecognized signature: %s' % (s,))
        return s
    @pimms.value
    def class_signature(generators, signature):
        '''
        spec.class_signature is the signature in which homomorphisms into the generators are taken.
        '''
        sig = common_signature(generators) if signature is None else signature
        for g in generators:
            if not g.algebra.supports(sig):
                raise SignatureMismatch('generator does not support the %s signature' % sig)
        return sig
    def with_closure(self, closure):
        '''
        spec.with_closure(c) yields a copy of spec whose closure is c.
        '''
        return self.copy(closure=closure)
    def __contains__(self, s): return class_membership(self, s)
    def __repr__(self):
        return 'FilterClassSpec(<%d generators>, %s, %s)' % (len(self.generators), self.closure,
                                                            self.class_signature)

def is_class_spec(c):
    '''
    is_class_spec(c) yields True if c is a FilterClassSpec object and False otherwise.
    '''
    return isinstance(c, FilterClassSpec)
def to_class_spec(c, closure='filter_class', signature=None):
    '''
    to_class_spec(c) yields c if c is a FilterClassSpec and otherwise the class generated by the
      Structure or collection of Structures c.
    '''
    if is_class_spec(c): return c
    return FilterClassSpec(c, closure=closure, signature=signature)

@functools.lru_cache(maxsize=1024)
def _preimages(alg, g, sig):
    return homs_into(alg, g, sig)

def preimage_closure(c, a):
    '''
    preimage_closure(c, a) yields the bit-set of the intersection of all preimages h^-1[G] that
      contain the designated set of the Structure a, over every homomorphism h from the algebra of a
      into the algebra of a generator <B, G> of the class c. The intersection of no preimages is
      the whole carrier.
    '''
    c = to_class_spec(c)
    sig = c.class_signature
    if not a.algebra.supports(sig):
        raise SignatureMismatch('structure does not support the %s signature' % sig)
    f = a.mask
    res = a.algebra.full
    for g in c.generators:
        for m in _preimages(a.algebra, g, sig):
            if (f & ~m) == 0: res &= m
    return res

def _filter_membership(c, a):
    return preimage_closure(c, a) == a.mask

def generating_set(alg, signature):
    '''
    generating_set(alg, signature) yields a tuple of element indices that generates the finite
      algebra alg in the named signature, chosen greedily in rank order.
    '''
    gens = []
    cur = generated_mask(alg, 0, signature)
    for x in alg.rank_order:
        if cur == alg.full: break
        if (cur >> x) & 1: continue
        gens.append(x)
        cur = generated_mask(alg, sum(1 << g for g in gens), signature)
    return tuple(gens)

def free_cover(a, signature):
    '''
    free_cover(a, signature) yields the pair (free, mapping) of the free algebra on a generating set
      of the algebra of the Structure a and the surjective homomorphism from it onto that algebra
      (as a tuple of target indices) that sends the free generators to the generating set.

    Raises SizeCap or BadParameter when the free algebra cannot be built.
    '''
    alg = a.algebra
    gens = generating_set(alg, signature)
    free = free_algebra(signature, max(len(gens), 1))
    fg = free_generators(free)
    ops = signature_operations[signature]
    if gens: h = {fg[i]: g for (i,g) in enumerate(gens)}
    else:    h = {fg[0]: alg.rank_order[0]}
    if 'top' in ops: h[free.top] = alg.top
    if 'bottom' in ops: h[free.bottom] = alg.bottom
    tables = [(free.meet_rows, alg.meet_rows)] if 'meet' in ops else []
    if 'join' in ops: tables.append((free.join_rows, alg.join_rows))
    changed = True
    while changed:
        changed = False
        known = list(h.items())
        for (x, hx) in known:
            if 'neg' in ops:
                z = int(free.neg_table[x])
                if z not in h:
                    h[z] = int(alg.neg_table[hx])
                    changed = True
            for (y, hy) in known:
                for (ft, at) in tables:
                    z = ft[x][y]
                    if z not in h:
                        h[z] = at[hx][hy]
                        changed = True
    return (free, tuple([h[i] for i in range(free.size)]))

def class_membership(c, a):
    '''
    class_membership(c, a) yields True if the finite Structure a belongs to the class described by
      the FilterClassSpec c (or to the filter class generated by the Structures c).

    For a finite structure and finite generators, membership in the filter class holds iff the
    designated set of a equals the intersection of all homomorphic preimages of the generators'
    designated sets that contain it. For logical classes a k-generated structure belongs to the
    class iff the preimage of its designated set in the free algebra on k generators (under the
    map onto a) belongs to the filter class; over Boolean algebras the two closures agree on finite
    structures. When the free algebra is too large or does not exist, the filter-class answer is
    returned with a warning.

    Raises SignatureMismatch if a does not carry the class's signature.
    '''
    c = to_class_spec(c)
    if _filter_membership(c, a): return True
    sig = c.class_signature
    if c.closure == 'filter_class' or sig == 'boolean': return False
    try: (free, h) = free_cover(a, sig)
    except (SizeCap, BadParameter) as e:
        warnings.warn('logical-class membership decided as filter-class membership: %s' % e)
        return False
    pre = sum(1 << i for (i,j) in enumerate(h) if (a.mask >> j) & 1)
    base = 'semilattice' if sig == 'unital_semilattice' and pre == 0 else sig
    res = _filter_membership(c, Structure(free, pre, base))
    logging.debug('nflab: free cover on %d elements decides logical membership: %s',
                  free.size, res)
    return res

####################################################################################################
# Splitting

branches = ('EmbedsBranch', 'AlphaBranch')

def _boolean_view(a):
    if not a.algebra.is_boolean: raise SignatureMismatch('expected a Boolean algebra')
    return a.with_signature('boolean') if a.mask != 0 else a

def splitting_evidence(a, n):
    '''
    splitting_evidence(a, n) yields the pair (branch, evidence) for the Boolean structure a: either
      ('EmbedsBranch', h) where h embeds nabla(n) into a, or ('AlphaBranch', None) when the rule
      alpha(n) holds in a.

    Raises DichotomyViolated if both or neither of the two alternatives hold.
    '''
    a = _boolean_view(a)
    if not pimms.is_int(n) or n < 1: raise BadParameter('splitting requires n >= 1')
    n = int(n)
    h = find_embedding(nabla(n), a) if a.mask != 0 else None
    holds = True if a.mask == 0 else holds_in(a, alpha(n))
    if h is not None and not holds: return ('EmbedsBranch', h)
    if h is None and holds: return ('AlphaBranch', None)
    raise DichotomyViolated('nabla(%d) %s and alpha(%d) %s'
                            % (n, 'embeds' if h is not None else 'does not embed',
                               n, 'holds' if holds else 'fails'))
def splitting_check(a, n):
    '''
    splitting_check(a, n) yields 'EmbedsBranch' if nabla(n) embeds into the Boolean structure a and
      'AlphaBranch' if the rule alpha(n) holds in a; exactly one of the two must be the case, and
      DichotomyViolated is raised otherwise.
    '''
    return splitting_evidence(a, n)[0]

####################################################################################################
# The class generated by nabla(m) x nabla(n)

def product_generator(m, n):
    '''
    product_generator(m, n) yields the structure nabla(m) x nabla(n).
    '''
    return direct_product([nabla(m), nabla(n)])

def _check_mn(m, n):
    if not pimms.is_int(m) or not pimms.is_int(n) or not (m > n >= 1):
        raise BadParameter('product classes require m > n >= 1')

def product_class_check(a, m, n):
    '''
    product_class_check(a, m, n) yields True if the Boolean structure a belongs to the filter class
      generated by nabla(m) x nabla(n), for m > n >= 1: its designated set must be a non-empty
      m-filter that is either total or contained in a non-total n-filter (the n-filter it
      generates is not total).

    Raises BadParameter unless m > n >= 1.
    '''
    _check_mn(m, n)
    alg = a.algebra
    if not alg.is_boolean: raise SignatureMismatch('product classes are classes of Boolean algebras')
    f = a.mask
    if f == 0: return False
    if not is_n_filter(alg, Upset(alg, f), m): return False
    if f == alg.full: return True
    return generate_n_filter(alg, Upset(alg, f), n).mask != alg.full

def atom_count(alg):
    '''
    atom_count(alg) yields the number of elements of height 1 in the finite lattice alg.
    '''
    return len([i for i in range(alg.size) if alg.heights[i] == 1])

def gamma_criterion(a, m, n, bound=None):
    '''
    gamma_criterion(a, m, n) yields True if the designated set of the Boolean structure a is a
      non-empty m-filter and every rule gamma(n, j) for n <= j <= bound holds in a; bound defaults
      to the number of atoms of the algebra.
    '''
    _check_mn(m, n)
    a = _boolean_view(a)
    alg = a.algebra
    if a.mask == 0: return False
    if not is_n_filter(alg, Upset(alg, a.mask), m): return False
    if bound is None: bound = atom_count(alg)
    for j in range(n, max(n, bound) + 1):
        if not holds_in(a, gamma(n, j)): return False
    return True

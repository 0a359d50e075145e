####################################################################################################
# nflab/util/core.py
# This file contains the error types, bit-set helpers, and the meta-data object base that are used
# throughout nflab.

import numpy      as np
import pyrsistent as pyr
import pimms

from .conf import config

####################################################################################################
# Errors

class NFLabError(ValueError):
    '''
    NFLabError is the base class of all errors raised deliberately by nflab. It is a ValueError so
    that callers catching ValueError (the error type used for bad arguments everywhere in nflab)
    also catch these.
    '''
    pass
class DuplicateElement(NFLabError):
    '''DuplicateElement is raised when a poset document names an element twice.'''
    pass
class CycleDetected(NFLabError):
    '''CycleDetected is raised when the given order pairs violate antisymmetry.'''
    pass
class UnknownElementName(NFLabError):
    '''UnknownElementName is raised when a name does not refer to an element of the carrier.'''
    pass
class MalformedDocument(NFLabError):
    '''MalformedDocument is raised when a JSON document does not match the nflab schema.'''
    pass
class SizeCap(NFLabError):
    '''SizeCap is raised when an operation would exceed one of the configured size caps.'''
    pass
class NoMeet(NFLabError):
    '''NoMeet is raised when a requested greatest lower bound does not exist.'''
    pass
class EmptyWithoutTop(NFLabError):
    '''EmptyWithoutTop is raised when the meet of the empty set is requested without a top.'''
    pass
class NotAnUpset(NFLabError):
    '''NotAnUpset is raised when a designated set is not upward closed.'''
    pass
class NotMeetSemilattice(NFLabError):
    '''NotMeetSemilattice is raised when an operation requires all binary meets.'''
    pass
class NotAnNFilter(NFLabError):
    '''NotAnNFilter is raised when an upset given as an n-filter is not one.'''
    pass
NotNFilter = NotAnNFilter
class NoDecomposition(NFLabError):
    '''NoDecomposition is raised when an upset cannot be split into prime filters.'''
    pass
class NotPrime(NFLabError):
    '''NotPrime is raised when an upset required to be prime is not.'''
    pass
class NotDisjoint(NFLabError):
    '''NotDisjoint is raised when a filter and an ideal that must be disjoint intersect.'''
    pass
class NotIdeal(NFLabError):
    '''NotIdeal is raised when a set required to be an ideal is not a directed downset.'''
    pass
class NotDistributive(NFLabError):
    '''NotDistributive is raised when an operation requires a distributive lattice.'''
    pass
class SignatureMismatch(NFLabError):
    '''SignatureMismatch is raised when algebras or rules do not share the needed operations.'''
    pass
class NotSurjective(NFLabError):
    '''NotSurjective is raised when a homomorphism required to be onto is not.'''
    pass
class NotStrict(NFLabError):
    '''NotStrict is raised when a homomorphism required to be strict is not.'''
    pass
class NotSubalgebra(NFLabError):
    '''NotSubalgebra is raised when a subset is not closed under the signature's operations.'''
    pass
class BadParameter(NFLabError):
    '''BadParameter is raised when a numeric parameter lies outside of its allowed range.'''
    pass
class RuleSyntaxError(NFLabError):
    '''
    RuleSyntaxError is raised when rule text cannot be parsed; its position attribute gives the
    0-based character offset at which parsing failed.
    '''
    def __init__(self, message, position=None):
        if position is not None: message = '%s (at position %d)' % (message, position)
        NFLabError.__init__(self, message)
        self.position = position
class TooManyVariables(NFLabError):
    '''TooManyVariables is raised when a rule has too many variables for free-algebra entailment.'''
    pass
class NotAFilterImplication(NFLabError):
    '''NotAFilterImplication is raised when a rule's conclusion is an equation, not a term.'''
    pass
class DichotomyViolated(NFLabError):
    '''DichotomyViolated is raised when two results that must exclude each other do not.'''
    pass
class UnknownSuite(NFLabError):
    '''UnknownSuite is raised when a theorem suite name is not registered.'''
    pass
class UnknownName(NFLabError):
    '''UnknownName is raised when a gallery or rule-family name is not registered.'''
    pass

def check_size(n, cap='size_cap', what='carrier'):
    '''
    check_size(n) raises a SizeCap error if n exceeds config['size_cap'] and yields n otherwise.
    check_size(n, cap) uses the config item with the given name instead of 'size_cap'.

    The optional argument what (default: 'carrier') is used in the error message.
    '''
    lim = config[cap]
    if n > lim: raise SizeCap('%s of size %d exceeds the %s of %d' % (what, n, cap, lim))
    return n

####################################################################################################
# Bit-sets
# Subsets of a carrier are encoded as python ints: bit i is set iff element i is a member.

def to_mask(ii):
    '''
    to_mask(indices) yields the integer bit-set whose set bits are the given indices.
    '''
    m = 0
    for i in ii: m |= (1 << int(i))
    return m
def bits(mask):
    '''
    bits(mask) yields a tuple of the indices of the set bits in the given integer, in ascending
      order.
    '''
    res = []
    i = 0
    while mask:
        if mask & 1: res.append(i)
        mask >>= 1
        i += 1
    return tuple(res)
def popcount(mask):
    '''
    popcount(mask) yields the number of set bits in the given non-negative integer.
    '''
    return bin(mask).count('1')
def full_mask(n):
    '''
    full_mask(n) yields the bit-set containing all of 0 .. n-1.
    '''
    return (1 << n) - 1
def mask_to_array(mask, n):
    '''
    mask_to_array(mask, n) yields a boolean numpy vector of length n that is True exactly at the
      set bits of mask.
    '''
    return np.array([bool((mask >> i) & 1) for i in range(n)], dtype=np.bool_)
def array_to_mask(arr):
    '''
    array_to_mask(a) yields the bit-set of the indices at which the boolean vector a is True.
    '''
    return to_mask(np.where(np.asarray(arr))[0])

####################################################################################################
# Degrees
# The degree of an n-filter is a non-negative integer or infinity (an arbitrary upset).

infinity = np.inf

def is_degree(n):
    '''
    is_degree(n) yields True if n is a non-negative integer or infinity and False otherwise.
    '''
    if n is infinity or (isinstance(n, float) and np.isinf(n) and n > 0): return True
    return pimms.is_int(n) and not isinstance(n, bool) and n >= 0
def to_degree(n):
    '''
    to_degree(n) yields n as a degree: a non-negative int or the value infinity. Strings such as
      '3', 'inf', 'infinity', and 'oo' are understood.
    '''
    if pimms.is_str(n):
        s = n.strip().lower()
        if s in ('inf', 'infinity', 'oo', '∞'): return infinity
        try: n = int(s)
        except Exception: raise BadParameter('could not interpret degree: %s' % n)
    if isinstance(n, float):
        if np.isinf(n) and n > 0: return infinity
        if n == int(n): n = int(n)
    if not is_degree(n): raise BadParameter('degree must be a non-negative int or infinity: %s' % n)
    return infinity if n is infinity else int(n)
def degree_str(n):
    '''
    degree_str(n) yields the JSON-friendly representation of degree n: an int or 'inf'.
    '''
    return 'inf' if n == infinity else int(n)

####################################################################################################
# Meta-data

@pimms.immutable
class ObjectWithMetaData(object):
    '''
    ObjectWithMetaData is a class that stores a few useful utilities and the param meta_data, all of
    which assist in tracking a persistent map of meta-data with an object.
    '''
    def __init__(self, meta_data=None):
        if meta_data is None:
            self.meta_data = pyr.m()
        else:
            self.meta_data = meta_data
    @pimms.option(pyr.m())
    def meta_data(md):
        '''
        obj.meta_data is a persistent map of meta-data provided to the given object, obj.
        '''
        if md is None: return pyr.m()
        return md if pimms.is_pmap(md) else pyr.pmap(md)
    def meta(self, name):
        '''
        obj.meta(x) is equivalent to obj.meta_data.get(name, None).
        '''
        return self.meta_data.get(name, None)
    def with_meta(self, *args, **kwargs):
        '''
        obj.with_meta(...) collapses the given arguments with pimms.merge into the object's current
        meta_data map and yields a new object with the new meta-data.
        '''
        md = pimms.merge(self.meta_data, *(args + (kwargs,)))
        if md is self.meta_data: return self
        else: return self.copy(meta_data=md)

####################################################################################################
# nflab/structures/gallery.py
# Named canonical structures: the nabla structures, their products, height structures, the
# counterexample lattices, and small standard algebras.

import pyrsistent as pyr
import re, pimms

from ..util  import (check_size, popcount, BadParameter, UnknownName)
from ..order import (poset, boolean_lattice, chain as chain_poset)
from .core   import (Structure, direct_power, dual_power)
from .free   import free_algebra

def nabla(n):
    '''
    nabla(n) yields the structure <B_n, nabla_n> whose designated set is the upset of non-zero
      elements of the Boolean lattice with n atoms. nabla(0) is the one-element lattice with an
      empty designated set, over the distributive signature.
    '''
    if not pimms.is_int(n) or n < 0: raise BadParameter('nabla requires n >= 0')
    b = boolean_lattice(n)
    if n == 0: return Structure(b, (), 'distributive')
    return Structure(b, b.full & ~1, 'boolean')

def dBA(n, m):
    '''
    dBA(n, m) yields the direct m-th power of the dual n-th power of nabla(1); its designated set is
      a prime n-filter that is an m-prime element among the n-filters.
    '''
    if not pimms.is_int(n) or not pimms.is_int(m) or n < 1 or m < 1:
        raise BadParameter('dBA requires n, m >= 1')
    check_size(2**(n*m), what='dBA carrier')
    return direct_power(dual_power(nabla(1), n), m)

def height(d, m):
    '''
    height(d, m) yields the structure <B_{d+m}, H> where H is the upset of all elements with more
      than m atoms below them; H is a d-filter whose complement is an (m+1)-ideal.
    '''
    if not pimms.is_int(d) or not pimms.is_int(m) or d < 1 or m < 0:
        raise BadParameter('height requires d >= 1 and m >= 0')
    b = boolean_lattice(d + m)
    return Structure(b, sum(1 << i for i in range(b.size) if popcount(i) > m), 'boolean')

fig2_elements = ('bot', 'a', 'b', 'a1', 'a2', 'a3', 'b1', 'b2', 'b3',
                 'a12', 'a13', 'a23', 'b12', 'b13', 'b23')
fig2_covers = (('bot', 'a'), ('bot', 'b'),
               ('a', 'a1'), ('a', 'a2'), ('a', 'a3'), ('b', 'b1'), ('b', 'b2'), ('b', 'b3'),
               ('a', 'b1'),
               ('a1', 'a12'), ('a2', 'a12'), ('a1', 'a13'), ('a3', 'a13'),
               ('a2', 'a23'), ('a3', 'a23'),
               ('b1', 'b12'), ('b2', 'b12'), ('b1', 'b13'), ('b3', 'b13'),
               ('b2', 'b23'), ('b3', 'b23'))
fig2_upset = ('a1', 'a2', 'a3', 'a12', 'a13', 'a23', 'b2', 'b3', 'b12', 'b13', 'b23')

def fig2():
    '''
    fig2() yields the fifteen-element meet semilattice with two blocks (a below a1, a2, a3 below
      a12, a13, a23 and likewise for b) and the extra relation a <= b1, together with the upset
      U = {a1, a2, a3, a12, a13, a23, b2, b3, b12, b13, b23}. One application of the 2-adjunction
      operator adds a and b1 to U; only the fixpoint adds b.
    '''
    return Structure(poset(fig2_elements, fig2_covers), fig2_upset, 'semilattice')
def fig2_top():
    '''
    fig2_top() yields fig2() with a top element appended: a finite lattice on which one step of
      n-filter generation is still not enough.
    '''
    els = fig2_elements + ('top',)
    covs = fig2_covers + tuple([(x, 'top') for x in ('a12', 'a13', 'a23', 'b12', 'b13', 'b23')])
    return Structure(poset(els, covs), fig2_upset + ('top',), 'lattice')

def M5():
    '''
    M5() yields the five-element diamond 0 < a, b, c < 1 with the upset of non-zero elements: a
      prime 2-filter that is not a union of two prime filters.
    '''
    p = poset(('0', 'a', 'b', 'c', '1'),
              [('0', x) for x in 'abc'] + [(x, '1') for x in 'abc'])
    return Structure(p, ('a', 'b', 'c', '1'), 'lattice')
def N5():
    '''
    N5() yields the five-element pentagon 0 < a < b < 1, 0 < c < 1 with the upset generated by the
      coatoms b and c: a prime union of two filters that is not a union of prime filters.
    '''
    p = poset(('0', 'a', 'b', 'c', '1'),
              [('0', 'a'), ('a', 'b'), ('b', '1'), ('0', 'c'), ('c', '1')])
    return Structure(p, ('b', 'c', '1'), 'lattice')

def fig3_left():
    '''
    fig3_left() yields dBA(2, 2): the direct square of the dual square of nabla(1).
    '''
    return dBA(2, 2)
def fig3_right():
    '''
    fig3_right() yields the dual square of the direct square of nabla(1): a 2-filter on B_4 whose
      complement is a 2-ideal but which is not 2-prime among the 2-filters.
    '''
    return dual_power(direct_power(nabla(1), 2), 2)

def fd(k):
    '''
    fd(k) yields the structure on the free distributive lattice FD(k) whose designated set contains
      every element strictly above the bottom x1 & ... & xk.
    '''
    p = free_algebra('distributive', k)
    return Structure(p, p.full & ~(1 << p.bottom), 'distributive')
def chain(k):
    '''
    chain(k) yields the k-element chain with its top element designated.
    '''
    p = chain_poset(k)
    return Structure(p, (p.top,), 'distributive')
def boolean(k):
    '''
    boolean(k) yields the structure <B_k, {1}> (the direct k-th power of nabla(1)).
    '''
    b = boolean_lattice(k)
    return Structure(b, (b.top,), 'boolean')

gallery = pyr.pmap({'nabla':      nabla,
                    'dba':        dBA,
                    'height':     height,
                    'fig2':       fig2,
                    'fig2_top':   fig2_top,
                    'm5':         M5,
                    'n5':         N5,
                    'fig3_left':  fig3_left,
                    'fig3_right': fig3_right,
                    'fd':         fd,
                    'chain':      chain,
                    'boolean':    boolean})
'''
gallery is a persistent map of the names of the canonical structures (lower-case) to the functions
that construct them; the functions take the structure's integer parameters.
'''
gallery_parameters = pyr.pmap({'nabla': ('n',), 'dba': ('n', 'm'), 'height': ('d', 'm'),
                               'fd': ('k',), 'chain': ('k',), 'boolean': ('k',)})
'''
gallery_parameters maps each parameterized gallery name to the tuple of its parameter names.
'''

_name_rx = re.compile(r'^\s*([A-Za-z0-9_]+)\s*(?:\(\s*([0-9,\s]*)\s*\))?\s*$')

def canonical(name, *args):
    '''
    canonical(name, args...) yields the canonical structure with the given gallery name and
      integer parameters, e.g. canonical('nabla', 2) or canonical('dBA', 2, 2). The name may also
      carry its parameters, as in canonical('height(2,1)'). Names are case-insensitive.

    Raises UnknownName for unregistered names and BadParameter for bad parameters.
    '''
    if not pimms.is_str(name): raise UnknownName('gallery names must be strings')
    mt = _name_rx.match(name)
    if mt is None: raise UnknownName('unrecognized gallery name: %s' % name)
    key = mt.group(1).lower()
    if mt.group(2) is not None:
        if args: raise BadParameter('parameters given twice for %s' % key)
        args = tuple([int(u) for u in mt.group(2).split(',') if u.strip()])
    f = gallery.get(key, None)
    if f is None: raise UnknownName('unrecognized gallery name: %s' % key)
    need = len(gallery_parameters.get(key, ()))
    if len(args) != need:
        raise BadParameter('%s takes %d parameter(s), %d given' % (key, need, len(args)))
    return f(*[int(a) for a in args])

countermodel_gallery = ('nabla(0)', 'nabla(1)', 'nabla(2)', 'nabla(3)', 'nabla(4)',
                        'height(1,1)', 'height(2,1)', 'height(1,2)', 'height(2,2)',
                        'dBA(2,1)', 'dBA(1,2)', 'dBA(2,2)', 'fig3_right',
                        'boolean(1)', 'boolean(2)', 'boolean(3)',
                        'chain(2)', 'chain(3)', 'fd(2)', 'fd(3)',
                        'M5', 'N5', 'fig2_top', 'fig2')
'''
countermodel_gallery is the ordered tuple of gallery names searched by the 'gallery' countermodel
mode.
'''

def iter_gallery():
    '''
    iter_gallery() yields (name, structure) pairs for every structure of countermodel_gallery, in
      order.
    '''
    for name in countermodel_gallery: yield (name, canonical(name))

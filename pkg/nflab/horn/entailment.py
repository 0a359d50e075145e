####################################################################################################
# nflab/horn/entailment.py
# Entailment of filter implications relative to the classes DL_n, BA_n, SL_n, and uSL_n, decided by
# n-filter generation in the (quotiented) free algebra on the rule's variables.

import numpy      as np
import pyrsistent as pyr
import re, logging, pimms

from ..util       import (infinity, to_degree, degree_str, BadParameter, SignatureMismatch,
                          TooManyVariables, NotAFilterImplication, UnknownName)
from ..order      import (signature_operations, Upset)
from ..filters    import generate_n_filter
from ..structures import (Structure, free_algebra, free_generators, congruence, quotient)
from .core        import to_implication
from .terms       import evaluate

class_families = pyr.pmap({'dl':  'distributive',
                           'ba':  'boolean',
                           'sl':  'semilattice',
                           'usl': 'unital_semilattice'})
'''
class_families maps the (lower-case) names of the filter class families to the signature of their
algebras: DL (distributive lattices), BA (Boolean algebras), SL (meet semilattices), and uSL (unital
meet semilattices).
'''
class_names = pyr.pmap({v:k.upper() if k != 'usl' else 'uSL' for (k,v) in class_families.items()})

max_entailment_variables = 3
'''
max_entailment_variables is the largest number of rule variables for which entails_class builds a
free algebra.
'''

_class_rx = re.compile(r'^\s*([A-Za-z]+)\s*(?:\(\s*([^)]*)\s*\)|_?([0-9]+|inf|oo|∞))?\s*$')

def parse_class(name, n=None):
    '''
    parse_class(name) yields the pair (signature, degree) for a class name such as 'DL(2)',
      'BA(inf)', 'uSL(1)', or 'SL_3'. parse_class(family, n) accepts the family and degree
      separately.

    Raises UnknownName for unknown families.
    '''
    if not pimms.is_str(name): raise UnknownName('class names must be strings')
    mt = _class_rx.match(name)
    if mt is None: raise UnknownName('unrecognized class: %s' % name)
    fam = mt.group(1).lower()
    arg = mt.group(2) if mt.group(2) is not None else mt.group(3)
    if arg is not None:
        if n is not None: raise BadParameter('degree given twice for %s' % name)
        n = arg
    if fam not in class_families: raise UnknownName('unrecognized class family: %s' % fam)
    if n is None: raise BadParameter('class %s requires a degree' % name)
    return (class_families[fam], to_degree(n))

def class_label(signature, n):
    '''
    class_label(signature, n) yields the printed name of the class, e.g. 'DL(2)' or 'BA(inf)'.
    '''
    return '%s(%s)' % (class_names[signature], degree_str(n))

def free_model(r, signature):
    '''
    free_model(r, signature) yields the pair (algebra, values) for the filter
      implication r interpreted in the free algebra of the named signature on the rule's variables,
      quotiented by the congruence generated by the rule's equations: values maps each term of the
      rule to its element index in the quotient.

    Raises TooManyVariables if the rule has more than max_entailment_variables variables.
    '''
    vs = r.variables
    if len(vs) > max_entailment_variables:
        raise TooManyVariables('rule has %d variables; at most %d are supported'
                               % (len(vs), max_entailment_variables))
    k = max(len(vs), 1)
    alg = free_algebra(signature, k)
    gens = free_generators(alg)
    env = {v: np.array([gens[i]], dtype=np.int64) for (i,v) in enumerate(vs)}
    vals = {t: int(evaluate(t, alg, env, 1)[0]) for t in r.terms}
    if r.equations:
        theta = congruence(alg, [(vals[t], vals[u]) for (t,u) in r.equations], signature)
        base = 'distributive' if signature == 'boolean' else \
               'semilattice'  if signature == 'unital_semilattice' else signature
        (q, h) = quotient(Structure(alg, 0, base), theta)
        vals = {t: h.mapping[i] for (t,i) in vals.items()}
        alg = q.algebra
    return (alg, vals)

def entails_class(r, cls, n=None):
    '''
    entails_class(r, cls) yields True if the filter implication r (an Implication or rule text)
      holds in every structure of the class cls, given as a name like 'DL(2)', 'BA(inf)', 'SL(1)',
      or 'uSL(3)' (or as a family name with the degree n given separately).

    The decision interprets the rule in the free algebra on its variables, quotiented by the
    congruence its equations generate, and tests whether the conclusion lies in the n-filter
    generated by the premises. For the BA and uSL classes, whose designated sets are non-empty, the
    top element is added to the premises; for DL and SL, a rule without premises is entailed only
    if its conclusion is forced by the empty upset (never).

    Raises NotAFilterImplication if the conclusion is an equation, SignatureMismatch if the rule
    uses operations that the class's signature lacks, and TooManyVariables for rules with more
    than three variables.
    '''
    r = to_implication(r)
    (sig, n) = parse_class(cls, n)
    if not r.is_filter_implication:
        raise NotAFilterImplication('entailment is decided for filter implications only')
    missing = set(r.operations) - set(signature_operations[sig])
    if missing:
        raise SignatureMismatch('rule uses %s, which %s lacks'
                                % (', '.join(sorted(missing)), class_label(sig, n)))
    (alg, vals) = free_model(r, sig)
    u = 0
    for p in r.premises: u |= 1 << vals[p]
    if sig in ('boolean', 'unital_semilattice'): u |= 1 << alg.top
    u = alg.up_closure(u)
    g = u if n == infinity else generate_n_filter(alg, Upset(alg, u), n).mask
    res = bool((g >> vals[r.conclusion]) & 1)
    logging.debug('nflab: %s %s %s', class_label(sig, n), '|=' if res else '|/=', r.text)
    return res

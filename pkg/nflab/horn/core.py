####################################################################################################
# nflab/horn/core.py
# Filter implications E, Γ |- φ: construction, parsing, printing, JSON, model checking over all
# valuations, and countermodel search.

import numpy      as np
import pyrsistent as pyr
import json, logging, pimms

from ..util       import (config, MalformedDocument, SignatureMismatch,
                          BadParameter, SizeCap)
from ..order      import (signature_operations, iter_lattices, iter_distributive_lattices,
                          iter_meet_semilattices, iter_boolean_lattices, iter_upset_masks)
from ..structures import (Structure, iter_gallery)
from ..filters    import is_n_filter
from .terms       import (Term, is_term, to_term, term_to_json, term_from_json,
                          evaluate, _Parser)

def _item_text(it):
    return (it[0].text + ' = ' + it[1].text) if isinstance(it, tuple) else it.text

def operations_signature(ops):
    '''
    operations_signature(ops) yields the weakest signature whose operations include every
      operation in ops (a collection of 'meet', 'join', 'neg', 'top', 'bottom').
    '''
    ops = set(ops)
    if ops & set(['neg', 'bottom']): return 'boolean'
    if 'join' in ops: return 'lattice' if 'top' not in ops else 'boolean'
    if 'top' in ops: return 'unital_semilattice'
    if 'meet' in ops: return 'semilattice'
    return 'poset'

@pimms.immutable
class Implication(object):
    '''
    Implication(equations, premises, conclusion) represents the finitary Horn rule E, Γ |- φ whose
    equations E are pairs of Terms, whose premises Γ are Terms (read as "is designated"), and whose
    conclusion is a Term (a filter implication) or a pair of Terms (an equation).

    The optional signature (default: the weakest signature carrying the operations of the rule)
    names the signature the rule is stated in.
    '''
    def __init__(self, equations=(), premises=(), conclusion=None, signature=None):
        self.equations = equations
        self.premises = premises
        self.conclusion = conclusion
        self.signature = signature
    @pimms.param
    def equations(es):
        '''
        rule.equations is the tuple of (Term, Term) pairs of the rule.
        '''
        res = []
        for e in es:
            if len(e) != 2: raise ValueError('equations must be pairs of terms')
            res.append((to_term(e[0]), to_term(e[1])))
        return tuple(res)
    @pimms.param
    def premises(ps):
        '''
        rule.premises is the tuple of premise Terms of the rule.
        '''
        return tuple([to_term(p) for p in ps])
    @pimms.param
    def conclusion(c):
        '''
        rule.conclusion is the conclusion Term of the rule or a (Term, Term) equation.
        '''
        if c is None: raise ValueError('implications require a conclusion')
        if isinstance(c, (tuple, list)):
            if len(c) != 2: raise ValueError('equational conclusions must be pairs of terms')
            return (to_term(c[0]), to_term(c[1]))
        return to_term(c)
    @pimms.option(None)
    def signature(s):
        '''
        rule.signature is the declared signature of the rule or None to infer it.
        '''
        if s is not None and s not in signature_operations:
            raise ValueError('unrecognized signature: %s' % (s,))
        return s
    @pimms.value
    def terms(equations, premises, conclusion):
        '''
        rule.terms is the tuple of all terms of the rule in reading order.
        '''
        res = []
        for (t,u) in equations: res.extend([t, u])
        res.extend(premises)
        res.extend(conclusion if isinstance(conclusion, tuple) else [conclusion])
        return tuple(res)
    @pimms.value
    def variables(terms):
        '''
        rule.variables is the tuple of the rule's distinct variables in order of first appearance.
        '''
        seen = []
        for t in terms:
            for v in t.variables:
                if v not in seen: seen.append(v)
        return tuple(seen)
    @pimms.value
    def operations(terms):
        '''
        rule.operations is the frozenset of signature operations used by the rule.
        '''
        res = frozenset([])
        for t in terms: res = res | t.operations
        return res
    @pimms.value
    def effective_signature(signature, operations):
        '''
        rule.effective_signature is the declared signature, or the weakest signature carrying the
          rule's operations if none was declared.
        '''
        if signature is not None:
            if not operations <= set(signature_operations[signature]):
                raise SignatureMismatch('rule uses operations outside the %s signature' % signature)
            return signature
        return operations_signature(operations)
    @pimms.value
    def is_filter_implication(conclusion):
        '''
        rule.is_filter_implication is True if the conclusion is a term (designatedness atom).
        '''
        return is_term(conclusion)
    @pimms.value
    def equality_free(equations, is_filter_implication):
        '''
        rule.equality_free is True if the rule has no equations and its conclusion is a term.
        '''
        return len(equations) == 0 and is_filter_implication
    @pimms.value
    def text(equations, premises, conclusion):
        '''
        rule.text is the canonical printed form of the rule.
        '''
        items = [_item_text(e) for e in equations] + [p.text for p in premises]
        lhs = ', '.join(items)
        return (lhs + ' |- ' if lhs else '|- ') + _item_text(conclusion)
    def __str__(self): return self.text
    def __repr__(self): return 'Implication(%r)' % (self.text,)
    def __eq__(self, other):
        return isinstance(other, Implication) and self.text == other.text and \
            self.effective_signature == other.effective_signature
    def __ne__(self, other): return not (self == other)
    def __hash__(self): return hash((self.text, self.effective_signature))

def is_implication(r):
    '''
    is_implication(r) yields True if r is an Implication object and False otherwise.
    '''
    return isinstance(r, Implication)

def parse_implication(text, signature=None):
    '''
    parse_implication(text) yields the Implication parsed from the given rule text, for example
      'x & y, y & z, z & x |- x & y & z' or 'x = y & z, x |- z'. Premise items are separated by
      commas, '|-' separates the conclusion, and an item of the form 't = u' is an equation.

    Raises RuleSyntaxError with the 0-based position of the failure.
    '''
    (items, concl) = _Parser(text).rule()
    eqs = [it for it in items if isinstance(it, tuple)]
    prems = [it for it in items if not isinstance(it, tuple)]
    return Implication(eqs, prems, concl, signature)
def to_implication(r):
    '''
    to_implication(r) yields r if r is an Implication, parses r if it is a string, and decodes it if
      it is a JSON AST mapping.
    '''
    if is_implication(r): return r
    if pimms.is_str(r): return parse_implication(r)
    if pimms.is_map(r): return implication_from_json(r)
    raise ValueError('cannot interpret %s as an implication' % (type(r),))

def implication_to_json(r):
    '''
    implication_to_json(r) yields the JSON-friendly AST of the rule r: {"equations": [[t, u]...],
      "premises": [...], "conclusion": t or [t, u], "signature": name, "text": canonical text}.
    '''
    c = r.conclusion
    return {'equations':  [[term_to_json(t), term_to_json(u)] for (t,u) in r.equations],
            'premises':   [term_to_json(p) for p in r.premises],
            'conclusion': [term_to_json(c[0]), term_to_json(c[1])] if isinstance(c, tuple) else \
                          term_to_json(c),
            'signature':  r.effective_signature,
            'text':       r.text}
def implication_from_json(d):
    '''
    implication_from_json(d) yields the Implication described by the JSON AST d; if d only has a
      "text" (or "rule") entry, the text is parsed instead.
    '''
    if pimms.is_str(d):
        try: d = json.loads(d)
        except Exception as e: raise MalformedDocument('could not parse JSON: %s' % e)
    if not pimms.is_map(d): raise MalformedDocument('rule documents must be JSON objects')
    if 'conclusion' not in d:
        txt = d.get('text', d.get('rule', None))
        if not pimms.is_str(txt): raise MalformedDocument('rule document has no conclusion')
        return parse_implication(txt, d.get('signature', None))
    c = d['conclusion']
    c = (term_from_json(c[0]), term_from_json(c[1])) if isinstance(c, list) else term_from_json(c)
    eqs = [(term_from_json(e[0]), term_from_json(e[1])) for e in d.get('equations', [])]
    return Implication(eqs, [term_from_json(p) for p in d.get('premises', [])], c,
                       d.get('signature', None))

####################################################################################################
# Model checking

def check_compatible(s, r):
    '''
    check_compatible(s, r) raises SignatureMismatch unless the structure s carries every operation
      used by the rule r.
    '''
    missing = set(r.operations) - set(signature_operations[s.signature])
    if missing:
        raise SignatureMismatch('rule uses %s, which the %s signature lacks'
                                % (', '.join(sorted(missing)), s.signature))
    return True

def _valuations(n, v, start, stop):
    # mixed-radix digits of the valuation numbers start..stop-1; the first variable is the most
    # significant digit
    idx = np.arange(start, stop, dtype=np.int64)
    res = []
    for j in range(v):
        res.append((idx // (n ** (v - 1 - j))) % n)
    return res

def counterexample(s, r):
    '''
    counterexample(s, r) yields None if the rule r holds in the structure s and otherwise the first
      failing valuation, in mixed-radix order over element indices with the first variable most
      significant, as a persistent map from variable names to element names.

    Raises SignatureMismatch if the structure does not carry the rule's operations.
    '''
    r = to_implication(r)
    check_compatible(s, r)
    alg = s.algebra
    (n, v) = (alg.size, len(r.variables))
    if n == 0: return None
    total = n ** v
    chunk = config['valuation_chunk']
    des = np.array([bool((s.mask >> i) & 1) for i in range(n)], dtype=np.bool_)
    for start in range(0, total, chunk):
        stop = min(total, start + chunk)
        env = dict(zip(r.variables, _valuations(n, v, start, stop)))
        count = stop - start
        ok = np.ones(count, dtype=np.bool_)
        for (t,u) in r.equations:
            ok &= evaluate(t, alg, env, count) == evaluate(u, alg, env, count)
        for p in r.premises:
            if not ok.any(): break
            ok &= des[evaluate(p, alg, env, count)]
        if not ok.any(): continue
        c = r.conclusion
        if isinstance(c, tuple): concl = evaluate(c[0], alg, env, count) == \
                                         evaluate(c[1], alg, env, count)
        else:                    concl = des[evaluate(c, alg, env, count)]
        fail = np.where(ok & ~concl)[0]
        if len(fail) > 0:
            k = int(fail[0])
            return pyr.pmap({x: alg.elements[int(env[x][k])] for x in r.variables})
    return None
def holds_in(s, r):
    '''
    holds_in(s, r) yields True if the rule r (an Implication or rule text) holds in the structure s
      under every valuation of its variables: whenever every equation holds and every premise is
      designated, the conclusion is designated (or, for an equational conclusion, holds).
    '''
    return counterexample(s, r) is None
def check_rule(s, r):
    '''
    check_rule(s, r) yields the JSON-friendly report {"holds": bool, "witness": {var: element}}
      of evaluating the rule r in the structure s; the witness is null when the rule holds.
    '''
    w = counterexample(s, r)
    return {'holds': w is None, 'witness': None if w is None else dict(w)}

####################################################################################################
# Countermodel search

countermodel_modes = ('gallery', 'lattices', 'distributive', 'semilattices', 'boolean')

_mode_iterators = pyr.pmap({'lattices':     (iter_lattices,              'lattice'),
                             'distributive': (iter_distributive_lattices, 'distributive'),
                             'semilattices': (iter_meet_semilattices,     'semilattice'),
                             'boolean':      (iter_boolean_lattices,      'boolean')})

def _candidate_structures(mode, max_size, degree):
    if mode == 'gallery':
        for (name, s) in iter_gallery(): yield (name, s)
        return
    (it, sig) = _mode_iterators[mode]
    for p in it(max_size):
        for m in iter_upset_masks(p):
            if degree is not None and not is_n_filter(p, m, degree): continue
            yield (None, Structure(p, m, 'distributive' if sig == 'boolean' and m == 0 else sig))

def find_countermodel(r, mode='gallery', max_size=8, degree=None):
    '''
    find_countermodel(r) yields the first (structure, valuation) pair in which the rule r fails, or
      None if there is none among the searched structures.

    The optional argument mode (default: 'gallery') selects the structures searched:
      * 'gallery': the canonical structures of countermodel_gallery, in order;
      * 'lattices', 'distributive', 'semilattices', 'boolean': every (distributive) lattice, meet
        semilattice, or Boolean lattice with at most max_size elements (default: 8), up to
        isomorphism, with every upset in turn.
    Structures whose signature lacks an operation of the rule are skipped. If degree is given, only
    upsets that are degree-filters are considered.

    Raises SizeCap if max_size exceeds 16 for an exhaustive search.
    '''
    r = to_implication(r)
    if mode not in countermodel_modes: raise BadParameter('unrecognized search mode: %s' % mode)
    if mode != 'gallery' and max_size > 16:
        raise SizeCap('exhaustive countermodel search is limited to 16 elements')
    ops = set(r.operations)
    checked = 0
    for (name, s) in _candidate_structures(mode, max_size, degree):
        if not ops <= set(signature_operations[s.signature]): continue
        checked += 1
        w = counterexample(s, r)
        if w is not None:
            logging.info('nflab: countermodel found after %d structures', checked)
            return (s, w)
    logging.info('nflab: no countermodel among %d structures', checked)
    return None

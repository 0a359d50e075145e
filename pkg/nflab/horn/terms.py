####################################################################################################
# nflab/horn/terms.py
# Terms over meet, join, negation, and the constants, with a tokenizer, a recursive-descent parser,
# a printer, a JSON AST, and vectorized evaluation into finite algebras.

import numpy      as np
import pyrsistent as pyr
import re, pimms

from ..util import (RuleSyntaxError, MalformedDocument, SignatureMismatch)

term_operations = pyr.pmap({'var': 0, 'top': 0, 'bottom': 0, 'neg': 1, 'meet': 2, 'join': 2})
'''
term_operations maps each term operation to its minimal number of arguments; meet and join are
n-ary (at least two arguments).
'''

@pimms.immutable
class Term(object):
    '''
    Term(op, args) represents a term whose head is the operation op: 'var' (args is the 1-tuple of
    the variable name), 'top' or 'bottom' (no args), 'neg' (one Term), or 'meet'/'join' (two or
    more Terms, flattened so that no argument has the same head).
    '''
    def __init__(self, op, args=()):
        self.op = op
        self.args = args
    @pimms.param
    def op(o):
        '''
        term.op is the name of the head operation of the term.
        '''
        if o not in term_operations: raise ValueError('unrecognized term operation: %s' % (o,))
        return o
    @pimms.param
    def args(a):
        '''
        term.args is the tuple of arguments of the term's head operation.
        '''
        return tuple(a)
    @pimms.require
    def validate_arity(op, args):
        '''
        Variables carry exactly one name, constants no arguments, negation one term, and meets and
        joins at least two terms.
        '''
        if op == 'var':
            if len(args) != 1 or not pimms.is_str(args[0]): raise ValueError('bad variable term')
        elif op in ('top', 'bottom'):
            if len(args) != 0: raise ValueError('constants take no arguments')
        else:
            k = term_operations[op]
            if (op == 'neg' and len(args) != 1) or len(args) < k:
                raise ValueError('%s takes %s%d argument(s)' % (op, 'at least ' if k == 2 else '', k))
            if not all(isinstance(t, Term) for t in args):
                raise ValueError('term arguments must be Terms')
        return True
    @pimms.value
    def variables(op, args):
        '''
        term.variables is the tuple of the distinct variable names of the term in order of first
          appearance (left to right).
        '''
        if op == 'var': return args
        seen = []
        for t in args:
            for v in t.variables:
                if v not in seen: seen.append(v)
        return tuple(seen)
    @pimms.value
    def operations(op, args):
        '''
        term.operations is the frozenset of signature operations that occur in the term.
        '''
        res = set([]) if op == 'var' else set([op])
        for t in args:
            if isinstance(t, Term): res |= t.operations
        return frozenset(res)
    @pimms.value
    def text(op, args):
        '''
        term.text is the canonical printed form of the term.
        '''
        return _print(op, args)
    def __str__(self): return self.text
    def __repr__(self): return 'Term(%r)' % (self.text,)
    def __eq__(self, other):
        return isinstance(other, Term) and self.op == other.op and self.args == other.args
    def __ne__(self, other): return not (self == other)
    def __hash__(self): return hash((self.op, self.args))
    def __and__(self, other): return meet(self, other)
    def __or__(self, other): return join(self, other)
    def __invert__(self): return neg(self)

def is_term(t):
    '''
    is_term(t) yields True if t is a Term object and False otherwise.
    '''
    return isinstance(t, Term)

def var(name):
    '''
    var(name) yields the variable term with the given name.
    '''
    return Term('var', (name,))
def _flat(op, ts):
    res = []
    for t in ts:
        t = to_term(t)
        if t.op == op: res.extend(t.args)
        else: res.append(t)
    return res
def meet(*ts):
    '''
    meet(t1, t2...) yields the meet of the given terms; a single term is returned unchanged and the
      empty meet is the constant top.
    '''
    ts = _flat('meet', ts)
    if len(ts) == 0: return top
    return ts[0] if len(ts) == 1 else Term('meet', ts)
def join(*ts):
    '''
    join(t1, t2...) yields the join of the given terms; a single term is returned unchanged and the
      empty join is the constant bottom.
    '''
    ts = _flat('join', ts)
    if len(ts) == 0: return bottom
    return ts[0] if len(ts) == 1 else Term('join', ts)
def neg(t):
    '''
    neg(t) yields the negation of the term t.
    '''
    return Term('neg', (to_term(t),))
top = Term('top')
bottom = Term('bottom')

def to_term(t):
    '''
    to_term(t) yields t if t is a Term and otherwise parses the string t as a term.
    '''
    if is_term(t): return t
    if pimms.is_str(t): return parse_term(t)
    raise ValueError('cannot interpret %s as a term' % (type(t),))

####################################################################################################
# Printing

_precedence = {'join': 1, 'meet': 2, 'neg': 3, 'var': 4, 'top': 4, 'bottom': 4}
def _print(op, args):
    if op == 'var': return args[0]
    if op == 'top': return '1'
    if op == 'bottom': return '0'
    if op == 'neg':
        (t,) = args
        s = t.text
        return '~' + (s if _precedence[t.op] >= 3 else '(' + s + ')')
    sep = ' & ' if op == 'meet' else ' | '
    p = _precedence[op]
    return sep.join([t.text if _precedence[t.op] > p else '(' + t.text + ')' for t in args])

####################################################################################################
# Tokenizer and parser

# '|-' must be matched before '|'; the unicode operators are accepted as aliases
_token_rx = re.compile(r'\s*(?:(?P<turnstile>\|-|⊢)|(?P<join>\||∨)|(?P<meet>&|∧)|(?P<neg>~|¬)'
                       r'|(?P<lparen>\()|(?P<rparen>\))|(?P<comma>,)|(?P<eq>=)'
                       r'|(?P<const>[01](?![A-Za-z0-9_]))|(?P<ident>[A-Za-z_][A-Za-z0-9_]*))')

def tokenize(text):
    '''
    tokenize(text) yields the list of (kind, value, position) tokens of the given rule or term text,
      ending with an ('end', None, len(text)) token. Raises RuleSyntaxError at the first character
      that starts no token.
    '''
    toks = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace(): pos += 1
        if pos >= n: break
        mt = _token_rx.match(text, pos)
        if mt is None or mt.end() == pos or mt.lastgroup is None:
            raise RuleSyntaxError('unexpected character %r' % text[pos], pos)
        start = mt.start(mt.lastgroup)
        toks.append((mt.lastgroup, mt.group(mt.lastgroup), start))
        pos = mt.end()
    toks.append(('end', None, n))
    return toks

class _Parser(object):
    # recursive descent over: rule := items? '|-' item ; item := term ('=' term)? ;
    # term := meet ('|' meet)* ; meet := unary ('&' unary)* ; unary := '~' unary | atom ;
    # atom := ident | 0 | 1 | '(' term ')'
    def __init__(self, text):
        self.toks = tokenize(text)
        self.k = 0
    def peek(self): return self.toks[self.k]
    def take(self, kind=None):
        t = self.toks[self.k]
        if kind is not None and t[0] != kind:
            raise RuleSyntaxError('expected %s but found %s' % (kind, _describe(t)), t[2])
        self.k += 1
        return t
    def term(self):
        ts = [self.meet()]
        while self.peek()[0] == 'join':
            self.take()
            ts.append(self.meet())
        return join(*ts)
    def meet(self):
        ts = [self.unary()]
        while self.peek()[0] == 'meet':
            self.take()
            ts.append(self.unary())
        return meet(*ts)
    def unary(self):
        if self.peek()[0] == 'neg':
            self.take()
            return neg(self.unary())
        return self.atom()
    def atom(self):
        t = self.peek()
        if t[0] == 'ident':
            self.take()
            return var(t[1])
        if t[0] == 'const':
            self.take()
            return top if t[1] == '1' else bottom
        if t[0] == 'lparen':
            self.take()
            res = self.term()
            self.take('rparen')
            return res
        raise RuleSyntaxError('expected a term but found %s' % _describe(t), t[2])
    def item(self):
        t = self.term()
        if self.peek()[0] == 'eq':
            self.take()
            return (t, self.term())
        return t
    def rule(self):
        items = []
        if self.peek()[0] != 'turnstile':
            items.append(self.item())
            while self.peek()[0] == 'comma':
                self.take()
                items.append(self.item())
        self.take('turnstile')
        concl = self.item()
        self.take('end')
        return (items, concl)
def _describe(tok):
    return 'end of input' if tok[0] == 'end' else repr(tok[1])

def parse_term(text):
    '''
    parse_term(text) yields the Term parsed from the given text. The operators are '&' (meet), '|'
      (join), and '~' (negation), binding in the order ~ > & > |; the constants are 0 and 1.
      Raises RuleSyntaxError with the 0-based position of the failure.
    '''
    p = _Parser(text)
    t = p.term()
    p.take('end')
    return t

####################################################################################################
# JSON AST

def term_to_json(t):
    '''
    term_to_json(t) yields the JSON-friendly AST of the term t: {"var": name}, {"const": 0 or 1},
      or {"op": "meet"|"join"|"neg", "args": [...]}.
    '''
    if t.op == 'var': return {'var': t.args[0]}
    if t.op == 'top': return {'const': 1}
    if t.op == 'bottom': return {'const': 0}
    return {'op': t.op, 'args': [term_to_json(u) for u in t.args]}
def term_from_json(d):
    '''
    term_from_json(d) yields the Term described by the JSON AST d (see term_to_json).
    '''
    if not pimms.is_map(d): raise MalformedDocument('term AST nodes must be JSON objects')
    if 'var' in d:
        if not pimms.is_str(d['var']): raise MalformedDocument('variable names must be strings')
        return var(d['var'])
    if 'const' in d:
        if d['const'] not in (0, 1): raise MalformedDocument('constants must be 0 or 1')
        return top if d['const'] == 1 else bottom
    op = d.get('op', None)
    args = d.get('args', [])
    if op not in ('meet', 'join', 'neg') or not isinstance(args, (list, tuple)):
        raise MalformedDocument('malformed term AST node: %s' % (d,))
    args = [term_from_json(a) for a in args]
    if op == 'neg':
        if len(args) != 1: raise MalformedDocument('negation takes one argument')
        return neg(args[0])
    return meet(*args) if op == 'meet' else join(*args)

####################################################################################################
# Evaluation

def evaluate(t, alg, env, count=None):
    '''
    evaluate(t, alg, env) yields the numpy integer array of element indices of the FinitePoset alg
      obtained by evaluating the term t under the valuations env, a mapping of variable names to
      equal-length integer arrays of element indices. The optional count gives the number of
      valuations for terms without variables.

    Raises SignatureMismatch if alg lacks an operation the term uses.
    '''
    if t.op == 'var':
        if t.args[0] not in env: raise ValueError('unbound variable: %s' % t.args[0])
        return env[t.args[0]]
    if count is None:
        count = len(next(iter(env.values()))) if env else 1
    if t.op in ('top', 'bottom'):
        c = alg.top if t.op == 'top' else alg.bottom
        if c is None: raise SignatureMismatch('algebra has no %s element' % t.op)
        return np.full(count, c, dtype=np.int64)
    vals = [evaluate(u, alg, env, count) for u in t.args]
    if t.op == 'neg':
        if alg.neg_table is None: raise SignatureMismatch('algebra has no negation')
        return alg.neg_table[vals[0]]
    tbl = alg.meet_table if t.op == 'meet' else alg.join_table
    res = vals[0]
    for v in vals[1:]:
        res = tbl[res, v]
        if np.any(res < 0): raise SignatureMismatch('algebra lacks a %s' % t.op)
    return res

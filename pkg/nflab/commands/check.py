####################################################################################################
# nflab/commands/check.py
# The check subcommand: evaluates an order-theoretic predicate on a structure.

from __future__ import print_function

import pyrsistent as pyr

from ..order   import (SubposetWitness, is_ideal_subposet_witness, to_upset)
from ..filters import (n_filter_witness, is_n_ideal, is_filter, is_prime_upset,
                       m_prime_n_filter_witness, is_m_prime_filter, is_union_of_filters,
                       is_union_of_prime_filters, min_filter_degree, filter_cover_number, is_ideal)
from ..util    import (BadParameter, UnknownName, to_degree, degree_str)
from .core     import (command_parser, run_command, read_structure, option_names,
                       emit, exit_true, exit_false)

info = \
   '''
   Syntax: nflab check <predicate> --structure=<structure> [options]
   <predicate> is one of the following:
     * n-filter            the designated set is an n-filter (requires --n)
     * n-ideal             the --set elements form an n-ideal (requires --n and --set)
     * filter              the designated set is a filter
     * prime               the designated set is a prime upset
     * m-prime-n-filter    the designated set is an m-prime n-filter (requires --m and --n)
     * m-prime-filter      the designated set is a filter whose complement is an m-ideal
     * union-of-filters    the designated set is a union of at most k filters (requires --k)
     * union-of-prime-filters
                           the designated set is a union of at most k prime filters
     * ideal               the --set elements form an ideal
     * meet-semilattice, lattice, distributive, distributive-semilattice, boolean
                           the carrier has the named kind
     * ideal-subposet      the --set elements induce an ideal subposet of the carrier
     * degree              always succeeds; reports the least n for which the designated set is
                           an n-filter and the filter cover number
   <structure> is a JSON structure file, '-' for a JSON document on stdin, or a gallery name such
   as nabla(2).

   The exit code is 0 if the predicate holds, 1 if it does not, and 2 for usage or input errors.
   The JSON report on stdout carries the result and, where one exists, a violating witness.

   The following options may be given:
     * -h|--help       Prints this message.
     * -v|--verbose    Prints progress notes to stderr.
     * --text          Prints the report as text instead of JSON.
     * --structure=<s> The structure to examine.
     * --n=<n>, --m=<m>, --k=<k>
                       The integer parameters of the predicate; --n also accepts inf.
     * --set=<a,b...>  A comma-separated list of element names.
     * --method=<name> The n-filter check to use: auto (default), restricted, or full.
   '''
_check_parser = command_parser([
    [None, 'structure', 'structure', None],
    [None, 'n',         'n',         None],
    [None, 'm',         'm',         None],
    [None, 'k',         'k',         None],
    [None, 'set',       'set',       None],
    [None, 'method',    'method',    'auto']])

def _need(opts, name):
    if opts.get(name, None) is None: raise BadParameter('this predicate requires --%s' % name)
    return opts[name]

def _nfilter(s, opts):
    n = to_degree(str(_need(opts, 'n')))
    w = n_filter_witness(s.algebra, s.upset, n, method=str(opts['method']))
    return (w is None, None if w is None else list(w))
def _nideal(s, opts):
    n = to_degree(str(_need(opts, 'n')))
    d = option_names(_need(opts, 'set'))
    return (is_n_ideal(s.algebra, d, n, method=str(opts['method'])), None)
def _filter(s, opts):
    return (is_filter(s.algebra, s.upset), None)
def _prime(s, opts):
    return (is_prime_upset(s.algebra, s.upset), None)
def _mprime(s, opts):
    m = to_degree(str(_need(opts, 'm')))
    n = to_degree(str(_need(opts, 'n')))
    if n_filter_witness(s.algebra, s.upset, n) is not None: return (False, None)
    w = m_prime_n_filter_witness(s.algebra, s.upset, m, n)
    return (w is None, None if w is None else [list(u.names) for u in w])
def _mprime_filter(s, opts):
    m = to_degree(str(_need(opts, 'm')))
    return (is_m_prime_filter(s.algebra, s.upset, m), None)
def _union(s, opts):
    return (is_union_of_filters(s.algebra, s.upset, int(_need(opts, 'k'))), None)
def _prime_union(s, opts):
    return (is_union_of_prime_filters(s.algebra, s.upset, int(_need(opts, 'k'))), None)
def _ideal(s, opts):
    return (is_ideal(s.algebra, option_names(_need(opts, 'set'))), None)
def _kind(attr):
    return lambda s, opts: (bool(getattr(s.algebra, attr)), None)
def _ideal_subposet(s, opts):
    w = SubposetWitness(s.algebra, option_names(_need(opts, 'set')))
    if w.mask == 0: raise BadParameter('ideal-subposet requires a non-empty --set')
    v = is_ideal_subposet_witness(w)
    return (v is None, None if v is None else list(s.algebra.names(v)))
def _degree(s, opts):
    p = s.algebra
    u = to_upset(p, s.mask)
    res = {'degree': degree_str(min_filter_degree(p, u))}
    if p.is_meet_semilattice: res['cover_number'] = degree_str(filter_cover_number(p, u))
    return (True, res)

predicates = pyr.pmap({'n-filter':                 _nfilter,
                       'n-ideal':                  _nideal,
                       'filter':                   _filter,
                       'prime':                    _prime,
                       'm-prime-n-filter':         _mprime,
                       'm-prime-filter':           _mprime_filter,
                       'union-of-filters':         _union,
                       'union-of-prime-filters':   _prime_union,
                       'ideal':                    _ideal,
                       'meet-semilattice':         _kind('is_meet_semilattice'),
                       'lattice':                  _kind('is_lattice'),
                       'distributive':             _kind('is_distributive'),
                       'distributive-semilattice': _kind('is_distributive_semilattice'),
                       'boolean':                  _kind('is_boolean'),
                       'ideal-subposet':           _ideal_subposet,
                       'degree':                   _degree})
'''
predicates is a persistent map of the predicate names understood by the check subcommand to
functions f(structure, opts) that yield the pair (result, witness).
'''

def _check(args, opts, worklog, stdout):
    if len(args) != 1: raise BadParameter('check requires exactly one predicate name')
    name = args[0]
    f = predicates.get(name, None)
    if f is None: raise UnknownName('unrecognized predicate: %s' % name)
    s = read_structure(opts.get('structure', None))
    worklog('Checking %s on a structure with %d elements...' % (name, s.size))
    (res, wit) = f(s, opts)
    report = {'predicate': name, 'result': bool(res)}
    if wit is not None: report['witness'] = wit
    emit(report, opts, stdout)
    return exit_true if res else exit_false

def main(args, stdout=None, stderr=None):
    '''
    main(args) runs the check subcommand with the given command-line arguments and yields the exit
      code.
    '''
    return run_command(_check, _check_parser, info, args, stdout=stdout, stderr=stderr)

####################################################################################################
# nflab/commands/rule.py
# The rule subcommand: model checking, countermodel search, class entailment, and the builtin rule
# families.

from __future__ import print_function

import pyrsistent as pyr

from ..horn import (check_rule, find_countermodel, countermodel_modes, entails_class,
                    parse_class, class_label, builtin_rule)
from ..util import (BadParameter, UnknownName, to_degree)
from .core  import (command_parser, run_command, read_structure, read_rule, option_int, emit,
                    exit_true, exit_false)

info = \
   '''
   Syntax: nflab rule <action> [options]
   <action> is one of the following:
     * holds --rule=<text> --structure=<structure>
       Evaluates the rule in the structure; the exit code is 0 if it holds and 1 if it fails, in
       which case the first failing valuation is reported as the witness.
     * countermodel --rule=<text> [--mode=<mode>] [--max-size=<k>] [--degree=<n>]
       Searches for a structure in which the rule fails; mode is one of gallery (default),
       lattices, distributive, semilattices, or boolean, and the exhaustive modes search carriers
       with at most max-size (default: 8) elements, optionally only designated sets that are
       degree-filters. The exit code is 0 if a countermodel was found and 1 otherwise.
     * entails --rule=<text> --class=<class>
       Decides whether the filter implication holds in every structure of the class, given as
       DL(n), BA(n), SL(n), or uSL(n) with n an integer or inf; the exit code is 0 if it does and 1
       if it does not.
     * builtin <family> <parameters...>
       Writes the builtin rule, e.g. 'builtin alpha 2' or 'builtin gamma 1 2'. The families are
       alpha(n), beta(k), gamma(n,k), adjunction(n), and subst_adjunction(g1,g2,...).
   Rules are written as 'e1 = e2, p1, p2 |- c' where terms use &, |, ~, 1, and 0 for meet, join,
   negation, top, and bottom; --rule-file=<file> reads the rule from a .rule or .json file.

   The following options may be given:
     * -h|--help       Prints this message.
     * -v|--verbose    Prints progress notes to stderr.
     * --text          Prints the result as text instead of JSON.
   '''
_rule_parser = command_parser([
    [None, 'rule',      'rule',      None],
    [None, 'rule-file', 'rule_file', None],
    [None, 'structure', 'structure', None],
    [None, 'mode',      'mode',      'gallery'],
    [None, 'max-size',  'max_size',  8],
    [None, 'degree',    'degree',    None],
    [None, 'class',     'class',     None]])

def _holds(args, opts, worklog, stdout):
    r = read_rule(opts)
    s = read_structure(opts.get('structure', None))
    worklog('Evaluating %s over %d^%d valuations...' % (r.text, s.size, len(r.variables)))
    report = check_rule(s, r)
    report['rule'] = r.text
    emit(report, opts, stdout)
    return exit_true if report['holds'] else exit_false

def _countermodel(args, opts, worklog, stdout):
    r = read_rule(opts)
    mode = str(opts.get('mode', 'gallery'))
    if mode not in countermodel_modes: raise BadParameter('unrecognized search mode: %s' % mode)
    deg = opts.get('degree', None)
    deg = None if deg is None else to_degree(str(deg))
    worklog('Searching the %s structures for a countermodel to %s...' % (mode, r.text))
    res = find_countermodel(r, mode=mode, max_size=option_int(opts, 'max_size', 8), degree=deg)
    if res is None: report = {'found': False, 'rule': r.text}
    else: report = {'found': True, 'rule': r.text, 'structure': res[0], 'witness': dict(res[1])}
    emit(report, opts, stdout)
    return exit_true if res is not None else exit_false

def _entails(args, opts, worklog, stdout):
    r = read_rule(opts)
    if opts.get('class', None) is None: raise BadParameter('entails requires --class')
    (sig, n) = parse_class(str(opts['class']))
    label = class_label(sig, n)
    worklog('Deciding whether %s entails %s...' % (label, r.text))
    res = entails_class(r, label)
    emit({'class': label, 'entailed': bool(res), 'rule': r.text}, opts, stdout)
    return exit_true if res else exit_false

def _builtin(args, opts, worklog, stdout):
    if len(args) == 0: raise BadParameter('builtin requires a rule family')
    try: params = [int(u) for u in args[1:]]
    except ValueError: raise BadParameter('rule parameters must be integers: %s' % (args[1:],))
    emit(builtin_rule(args[0], *params), opts, stdout)
    return exit_true

actions = pyr.pmap({'holds':        _holds,
                    'countermodel': _countermodel,
                    'entails':      _entails,
                    'builtin':      _builtin})
'''
actions is a persistent map of the rule subcommand's action names to their implementations.
'''

def _rule(args, opts, worklog, stdout):
    if len(args) == 0: raise BadParameter('rule requires an action: %s' % ', '.join(actions.keys()))
    f = actions.get(args[0], None)
    if f is None: raise UnknownName('unrecognized rule action: %s' % args[0])
    if args[0] != 'builtin' and len(args) > 1:
        raise BadParameter('unexpected arguments: %s' % (args[1:],))
    return f(args[1:], opts, worklog, stdout)

def main(args, stdout=None, stderr=None):
    '''
    main(args) runs the rule subcommand with the given command-line arguments and yields the exit
      code.
    '''
    return run_command(_rule, _rule_parser, info, args, stdout=stdout, stderr=stderr)

####################################################################################################
# nflab/commands/classes.py
# The class subcommand: filter-class membership, the splitting check, and the product-class test.

from __future__ import print_function

import pyrsistent as pyr

from ..classes import (FilterClassSpec, class_membership, splitting_evidence,
                       product_class_check, gamma_criterion, closures)
from ..util    import (BadParameter, UnknownName, DichotomyViolated)
from .core     import (command_parser, run_command, read_structure, option_names, option_int,
                       emit, exit_true, exit_false)

info = \
   '''
   Syntax: nflab class <action> --structure=<structure> [options]
   <action> is one of the following:
     * member --generators=<g1,g2...> [--closure=<closure>] [--signature=<sig>]
       Decides whether the structure belongs to the class generated by the given structures
       (gallery names or JSON structure files, separated by commas). The closure is filter_class
       (default: closure under substructures, products, and strict preimages) or logical_class
       (closure under strict images as well).
     * split --n=<n>
       For a Boolean structure, reports which side of the splitting dichotomy holds: either
       nabla(n) embeds into the structure (the embedding is reported) or the rule alpha(n) holds.
       The exit code is 1 if neither or both hold.
     * product-class --m=<m> --n=<n> [--gamma]
       Decides whether the Boolean structure belongs to the filter class generated by
       nabla(m) x nabla(n), for m > n >= 1. With --gamma, the answer of the criterion through the
       gamma rules is reported as well.
   <structure> is a JSON structure file, '-' for a JSON document on stdin, or a gallery name.
   The exit code is 0 for a positive answer and 1 for a negative one.

   The following options may be given:
     * -h|--help       Prints this message.
     * -v|--verbose    Prints progress notes to stderr.
     * --text          Prints the result as text instead of JSON.
   '''
_class_parser = command_parser([
    (None, 'gamma',      'gamma',      False),
    [None, 'structure',  'structure',  None],
    [None, 'generators', 'generators', None],
    [None, 'closure',    'closure',    'filter_class'],
    [None, 'signature',  'signature',  None],
    [None, 'n',          'n',          None],
    [None, 'm',          'm',          None]])

def _member(s, opts, worklog, stdout):
    gens = option_names(opts.get('generators', None))
    if not gens: raise BadParameter('member requires --generators')
    closure = str(opts.get('closure', 'filter_class'))
    if closure not in closures: raise BadParameter('unrecognized closure: %s' % closure)
    sig = opts.get('signature', None)
    c = FilterClassSpec([read_structure(g) for g in gens], closure=closure,
                        signature=None if sig is None else str(sig))
    worklog('Deciding membership in the %s generated by %d structure(s)...'
            % (closure.replace('_', ' '), len(gens)))
    res = class_membership(c, s)
    emit({'member': bool(res), 'closure': closure, 'signature': c.class_signature,
          'generators': list(gens)},
         opts, stdout)
    return exit_true if res else exit_false

def _split(s, opts, worklog, stdout):
    n = option_int(opts, 'n', None)
    if n is None: raise BadParameter('split requires --n')
    try: (branch, h) = splitting_evidence(s, n)
    except DichotomyViolated as e:
        emit({'n': n, 'violated': str(e)}, opts, stdout)
        return exit_false
    worklog('The structure falls on the %s side for n = %d.' % (branch, n))
    emit({'n': n, 'branch': branch, 'embedding': h}, opts, stdout)
    return exit_true

def _product_class(s, opts, worklog, stdout):
    (m, n) = (option_int(opts, 'm', None), option_int(opts, 'n', None))
    if m is None or n is None: raise BadParameter('product-class requires --m and --n')
    res = product_class_check(s, m, n)
    report = {'m': m, 'n': n, 'member': bool(res)}
    if opts.get('gamma', False): report['gamma'] = bool(gamma_criterion(s, m, n))
    emit(report, opts, stdout)
    return exit_true if res else exit_false

actions = pyr.pmap({'member':        _member,
                    'split':         _split,
                    'product-class': _product_class})
'''
actions is a persistent map of the class subcommand's action names to their implementations.
'''

def _class(args, opts, worklog, stdout):
    if len(args) != 1: raise BadParameter('class requires one action: %s' % ', '.join(actions.keys()))
    f = actions.get(args[0], None)
    if f is None: raise UnknownName('unrecognized class action: %s' % args[0])
    s = read_structure(opts.get('structure', None))
    return f(s, opts, worklog, stdout)

def main(args, stdout=None, stderr=None):
    '''
    main(args) runs the class subcommand with the given command-line arguments and yields the exit
      code.
    '''
    return run_command(_class, _class_parser, info, args, stdout=stdout, stderr=stderr)

####################################################################################################
# nflab/commands/generate.py
# The generate subcommand: the n-filter generated by a set of elements.

from __future__ import print_function

from ..order      import (upward_closure)
from ..structures import (to_structure)
from ..filters    import (generate_n_filter, generation_step, generation_methods)
from ..util       import (BadParameter, to_degree)
from .core        import (command_parser, run_command, read_structure, option_names, emit, emit_dot,
                          exit_true)

info = \
   '''
   Syntax: nflab generate --structure=<structure> --n=<n> [options]
   Computes the n-filter generated by the designated set of <structure> (or by the upward closure
   of the --set elements) and writes the structure whose designated set is the generated n-filter.
   <structure> is a JSON structure file, '-' for a JSON document on stdin, or a gallery name.

   The following options may be given:
     * -h|--help       Prints this message.
     * -v|--verbose    Prints progress notes to stderr.
     * --text          Prints the result as text instead of JSON.
     * --dot           Prints the Hasse diagram of the result in DOT format, with the generating
                       set outlined.
     * --n=<n>         The degree n (an integer or inf).
     * --set=<a,b...>  The generating elements; by default the designated set is used.
     * --method=<name> One of auto (default), one-step, fixpoint, primes, or oracle.
     * --step          Applies the admissible-set operator once instead of generating.
   '''
_generate_parser = command_parser([
    (None, 'dot',       'dot',       False),
    (None, 'step',      'step',      False),
    [None, 'structure', 'structure', None],
    [None, 'n',         'n',         None],
    [None, 'set',       'set',       None],
    [None, 'method',    'method',    'auto']])

def _generate(args, opts, worklog, stdout):
    if args: raise BadParameter('generate takes no positional arguments')
    if opts.get('n', None) is None: raise BadParameter('generate requires --n')
    s = read_structure(opts.get('structure', None))
    n = to_degree(str(opts['n']))
    p = s.algebra
    u = s.upset if opts.get('set', None) is None else upward_closure(p, option_names(opts['set']))
    method = str(opts['method'])
    if method not in generation_methods: raise BadParameter('unrecognized method: %s' % method)
    if opts.get('step', False):
        worklog('Applying one generation step (n = %s)...' % (n,))
        g = generation_step(p, u, n)
    else:
        worklog('Generating the %s-filter by the %s method...' % (n, method))
        g = generate_n_filter(p, u, n, method=method)
    res = s.with_upset(g.mask) if g.mask != 0 or not s.nonempty_required else to_structure(p)
    worklog('The generated set has %d of %d elements.' % (len(g.names), p.size))
    if opts.get('dot', False): emit_dot(res, highlight=u.names, stdout=stdout)
    else: emit(res, opts, stdout)
    return exit_true

def main(args, stdout=None, stderr=None):
    '''
    main(args) runs the generate subcommand with the given command-line arguments and yields the
      exit code.
    '''
    return run_command(_generate, _generate_parser, info, args, stdout=stdout, stderr=stderr)

####################################################################################################
# nflab/commands/primes.py
# The decompose and separate subcommands: prime decompositions and prime n-filter separation.

from __future__ import print_function

from ..filters import (decompose_prime_n_filter, separate_prime_n_filter, min_filter_degree)
from ..util    import (BadParameter, to_degree)
from .core     import (command_parser, run_command, read_structure, option_names, emit, exit_true)

decompose_info = \
   '''
   Syntax: nflab decompose --structure=<structure>
   Decomposes the designated set of <structure>, a prime n-filter of a finite distributive lattice,
   into exactly n prime filters and writes {"degree": n, "parts": [[names]...]}.
   <structure> is a JSON structure file, '-' for a JSON document on stdin, or a gallery name.
   The exit code is 2 if the designated set is not prime or the carrier is not distributive.

   The following options may be given:
     * -h|--help       Prints this message.
     * -v|--verbose    Prints progress notes to stderr.
     * --text          Prints the result as text instead of JSON.
   '''
_decompose_parser = command_parser([[None, 'structure', 'structure', None]])

def _decompose(args, opts, worklog, stdout):
    if args: raise BadParameter('decompose takes no positional arguments')
    s = read_structure(opts.get('structure', None))
    d = decompose_prime_n_filter(s.algebra, s.upset)
    worklog('Decomposed the designated set into %d prime filters.' % d.count)
    emit({'degree': min_filter_degree(s.algebra, s.upset),
          'parts':  [list(u.names) for u in d.parts]},
         opts, stdout)
    return exit_true

def decompose_main(args, stdout=None, stderr=None):
    '''
    decompose_main(args) runs the decompose subcommand and yields the exit code.
    '''
    return run_command(_decompose, _decompose_parser, decompose_info, args,
                       stdout=stdout, stderr=stderr)

separate_info = \
   '''
   Syntax: nflab separate --structure=<structure> --n=<n> --ideal=<a,b...>
   Finds a prime n-filter of the finite distributive lattice of <structure> that contains the
   designated set (which must be an n-filter) and is disjoint from the ideal given by --ideal, and
   writes the structure whose designated set is that prime n-filter.
   The exit code is 2 if the preconditions fail (the carrier is not distributive, the designated
   set is not an n-filter, the ideal is not an ideal, or the two intersect).

   The following options may be given:
     * -h|--help       Prints this message.
     * -v|--verbose    Prints progress notes to stderr.
     * --text          Prints the result as text instead of JSON.
     * --n=<n>         The degree n.
     * --ideal=<a,b..> The elements of the ideal; an empty value denotes the empty ideal.
   '''
_separate_parser = command_parser([
    [None, 'structure', 'structure', None],
    [None, 'n',         'n',         None],
    [None, 'ideal',     'ideal',     '']])

def _separate(args, opts, worklog, stdout):
    if args: raise BadParameter('separate takes no positional arguments')
    if opts.get('n', None) is None: raise BadParameter('separate requires --n')
    s = read_structure(opts.get('structure', None))
    n = to_degree(str(opts['n']))
    ideal = option_names(opts.get('ideal', ''))
    worklog('Separating from an ideal of %d elements...' % len(ideal))
    g = separate_prime_n_filter(s.algebra, s.upset, ideal, n)
    emit(s.with_upset(g.mask), opts, stdout)
    return exit_true

def separate_main(args, stdout=None, stderr=None):
    '''
    separate_main(args) runs the separate subcommand and yields the exit code.
    '''
    return run_command(_separate, _separate_parser, separate_info, args,
                       stdout=stdout, stderr=stderr)

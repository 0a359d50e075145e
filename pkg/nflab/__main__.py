####################################################################################################
# nflab/__main__.py
# The main function, if nflab is invoked directly as command.

import sys

from nflab.commands import (commands)

usage = \
   '''
   Syntax: nflab <command> [options]
   The following commands are available; use nflab <command> --help for details:
     * check        evaluate an order-theoretic predicate on a structure
     * generate     compute the n-filter generated by a set of elements
     * decompose    decompose a prime n-filter into n prime filters
     * separate     separate an n-filter from an ideal by a prime n-filter
     * hom, embed   search for (strict) homomorphisms and embeddings
     * product, dualproduct
                    form direct and dual products of structures
     * rule         evaluate, refute, and decide filter implications
     * class        decide membership in filter classes and check the splitting dichotomy
     * verify       run the theorem suites
     * gallery      print a canonical structure
     * export-dot   print the Hasse diagram of a structure in DOT format
   '''

def main(argv):
    '''
    main(argv) runs the nflab command named by argv[0] with the remaining arguments and yields its
      exit code; unknown commands yield the exit code 2.
    '''
    if len(argv) < 1 or argv[0] in ('-h', '--help', 'help'):
        sys.stdout.write(usage + '\n')
        return 0 if len(argv) > 0 else 2
    if argv[0] not in commands:
        sys.stderr.write('The given command \'' + argv[0] + '\' not recognized.\n')
        return 2
    return commands[argv[0]](argv[1:])

def run():
    '''
    run() is the console entry point: it runs main on the process arguments and exits with its
      exit code.
    '''
    sys.exit(main(sys.argv[1:]))

# Run the main function
if __name__ == '__main__': run()

####################################################################################################
# nflab/commands/homs.py
# The hom, embed, product, and dualproduct subcommands.

from __future__ import print_function

import itertools

from ..structures import (Homomorphism, iter_homs, iter_strict_homs, find_strict_hom,
                          find_embedding, direct_product, dual_product, common_signature)
from ..util       import (BadParameter)
from .core        import (command_parser, run_command, read_structure, option_int, emit,
                          exit_true, exit_false)

hom_info = \
   '''
   Syntax: nflab hom --source=<structure> --target=<structure> [options]
   Searches for homomorphisms from the source structure to the target structure and writes
   {"found": bool, "homomorphisms": [{"map": {...}, "strict": bool}...]}. By default only strict
   homomorphisms (whose source designated set is the preimage of the target's) are searched and
   the first one found is reported.
   Each structure is a JSON structure file, '-' for a JSON document on stdin, or a gallery name.
   The exit code is 0 if a homomorphism was found and 1 otherwise.

   The following options may be given:
     * -h|--help          Prints this message.
     * -v|--verbose       Prints progress notes to stderr.
     * --text             Prints the result as text instead of JSON.
     * --any              Searches all algebra homomorphisms instead of strict ones only.
     * --all              Reports every homomorphism found rather than the first.
     * --limit=<k>        Reports at most k homomorphisms (with --all).
     * --signature=<sig>  The signature whose operations are preserved; by default the common
                          signature of source and target.
   '''
_hom_parser = command_parser([
    (None, 'any',       'any',       False),
    (None, 'all',       'all',       False),
    [None, 'source',    'source',    None],
    [None, 'target',    'target',    None],
    [None, 'limit',     'limit',     None],
    [None, 'signature', 'signature', None]])

def _pair(opts):
    if opts.get('source', None) is None or opts.get('target', None) is None:
        raise BadParameter('both --source and --target are required')
    if opts.get('source') == '-' and opts.get('target') == '-':
        raise BadParameter('only one structure may be read from stdin')
    return (read_structure(opts['source']), read_structure(opts['target']))

def _hom(args, opts, worklog, stdout):
    if args: raise BadParameter('hom takes no positional arguments')
    (a, b) = _pair(opts)
    sig = opts.get('signature', None)
    sig = common_signature(a, b) if sig is None else str(sig)
    limit = option_int(opts, 'limit', None) if opts.get('all', False) else 1
    if opts.get('any', False):
        homs = (Homomorphism(a, b, f, sig) for f in iter_homs(a, b, sig))
    elif limit == 1:
        h = find_strict_hom(a, b, sig)
        homs = () if h is None else (h,)
    else: homs = iter_strict_homs(a, b, sig)
    homs = list(itertools.islice(homs, limit))
    worklog('Found %d homomorphism(s) in the %s signature.' % (len(homs), sig))
    emit({'found': len(homs) > 0, 'signature': sig, 'homomorphisms': homs}, opts, stdout)
    return exit_true if homs else exit_false

def hom_main(args, stdout=None, stderr=None):
    '''
    hom_main(args) runs the hom subcommand and yields the exit code.
    '''
    return run_command(_hom, _hom_parser, hom_info, args, stdout=stdout, stderr=stderr)

embed_info = \
   '''
   Syntax: nflab embed --source=<structure> --target=<structure> [options]
   Searches for an embedding (an injective strict homomorphism) of the source structure into the
   target structure and writes {"found": bool, "embedding": {"map": {...}, "strict": true}}.
   The exit code is 0 if the source embeds into the target and 1 otherwise.

   The following options may be given:
     * -h|--help          Prints this message.
     * -v|--verbose       Prints progress notes to stderr.
     * --text             Prints the result as text instead of JSON.
     * --signature=<sig>  The signature whose operations are preserved.
   '''
_embed_parser = command_parser([
    [None, 'source',    'source',    None],
    [None, 'target',    'target',    None],
    [None, 'signature', 'signature', None]])

def _embed(args, opts, worklog, stdout):
    if args: raise BadParameter('embed takes no positional arguments')
    (a, b) = _pair(opts)
    sig = opts.get('signature', None)
    h = find_embedding(a, b, None if sig is None else str(sig))
    worklog('The source %s into the target.' % ('embeds' if h is not None else 'does not embed'))
    emit({'found': h is not None, 'embedding': h}, opts, stdout)
    return exit_true if h is not None else exit_false

def embed_main(args, stdout=None, stderr=None):
    '''
    embed_main(args) runs the embed subcommand and yields the exit code.
    '''
    return run_command(_embed, _embed_parser, embed_info, args, stdout=stdout, stderr=stderr)

product_info = \
   '''
   Syntax: nflab product <structure> <structure>...
          nflab dualproduct <structure> <structure>...
   Writes the direct product (designated set: the intersection of the projection preimages) or
   the dual product (designated set: their union) of the given structures. Elements of the
   product are named by their tuples of component names. Each structure is a JSON structure file,
   '-' for a JSON document on stdin, or a gallery name.

   The following options may be given:
     * -h|--help       Prints this message.
     * -v|--verbose    Prints progress notes to stderr.
     * --text          Prints the result as text instead of JSON.
     * --power=<k>     With a single structure, writes its k-th power.
   '''
_product_parser = command_parser([[None, 'power', 'power', None]])

def _product_body(dual):
    def _body(args, opts, worklog, stdout):
        if len(args) == 0: raise BadParameter('at least one structure is required')
        if args.count('-') > 1: raise BadParameter('only one structure may be read from stdin')
        parts = [read_structure(u) for u in args]
        k = option_int(opts, 'power', None)
        if k is not None:
            if len(parts) != 1: raise BadParameter('--power requires a single structure')
            if k < 1: raise BadParameter('--power must be at least 1')
            parts = parts * k
        worklog('Forming the %s product of %d structures...'
                % ('dual' if dual else 'direct', len(parts)))
        emit(dual_product(parts) if dual else direct_product(parts), opts, stdout)
        return exit_true
    return _body

def product_main(args, stdout=None, stderr=None):
    '''
    product_main(args) runs the product subcommand and yields the exit code.
    '''
    return run_command(_product_body(False), _product_parser, product_info, args,
                       stdout=stdout, stderr=stderr)
def dualproduct_main(args, stdout=None, stderr=None):
    '''
    dualproduct_main(args) runs the dualproduct subcommand and yields the exit code.
    '''
    return run_command(_product_body(True), _product_parser, product_info, args,
                       stdout=stdout, stderr=stderr)

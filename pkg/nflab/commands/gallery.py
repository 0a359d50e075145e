####################################################################################################
# nflab/commands/gallery.py
# The gallery and export-dot subcommands.

from __future__ import print_function

from ..structures import (canonical, gallery, gallery_parameters)
from ..io         import (save_dot)
from ..util       import (BadParameter)
from .core        import (command_parser, run_command, read_structure, option_names, option_int,
                          emit, emit_dot, exit_true)

gallery_info = \
   '''
   Syntax: nflab gallery <name> [options]
   Writes the canonical JSON document of the named gallery structure. The parameterized names take
   their parameters either as options or inline:
     * nabla --n=<n>              nabla(n): the non-zero elements of the Boolean lattice B_n
     * dba --n=<n> --m=<m>        dBA(n,m): the m-th power of the n-th dual power of nabla(1)
     * height --d=<d> --m=<m>     height(d,m): the elements of B_(d+m) of height above m
     * fd --k=<k>                 fd(k): the free distributive lattice on k generators, non-bottom
     * chain --k=<k>              chain(k): the k-element chain with its top designated
     * boolean --k=<k>            boolean(k): the Boolean lattice B_k with its top designated
   and the fixed names fig2, fig2_top, m5, n5, fig3_left, and fig3_right. Inline parameters are
   written as in nabla(3) or height(2,1).

   The following options may be given:
     * -h|--help       Prints this message.
     * -v|--verbose    Prints progress notes to stderr.
     * --text          Prints the structure as text instead of JSON.
     * --dot           Prints the Hasse diagram in DOT format instead of JSON.
     * --list          Lists the gallery names with their parameters and exits.
   '''
_gallery_parser = command_parser([
    (None, 'dot',  'dot',  False),
    (None, 'list', 'list', False),
    [None, 'n',    'n',    None],
    [None, 'm',    'm',    None],
    [None, 'd',    'd',    None],
    [None, 'k',    'k',    None]])

def _gallery(args, opts, worklog, stdout):
    if opts.get('list', False):
        emit({name: list(gallery_parameters.get(name, ())) for name in gallery.keys()},
             opts, stdout)
        return exit_true
    if len(args) != 1: raise BadParameter('gallery requires exactly one structure name')
    name = args[0]
    params = gallery_parameters.get(name.lower(), ())
    vals = [option_int(opts, u, None) for u in params]
    if '(' in name or not params: s = canonical(name)
    elif any(v is None for v in vals):
        raise BadParameter('%s requires the options %s'
                           % (name, ', '.join(['--' + u for u in params])))
    else: s = canonical(name, *vals)
    worklog('Gallery structure %s has %d elements.' % (name, s.size))
    if opts.get('dot', False): emit_dot(s, stdout=stdout)
    else: emit(s, opts, stdout)
    return exit_true

def gallery_main(args, stdout=None, stderr=None):
    '''
    gallery_main(args) runs the gallery subcommand and yields the exit code.
    '''
    return run_command(_gallery, _gallery_parser, gallery_info, args, stdout=stdout, stderr=stderr)

export_dot_info = \
   '''
   Syntax: nflab export-dot --structure=<structure> [options]
   Writes the Hasse diagram of the structure in DOT format, drawn bottom-to-top, with the
   designated elements filled. <structure> is a JSON structure file, '-' for a JSON document on
   stdin, or a gallery name.

   The following options may be given:
     * -h|--help          Prints this message.
     * -v|--verbose       Prints progress notes to stderr.
     * --highlight=<a,b>  Outlines the given elements in red.
     * --output=<file>    Writes the diagram to the given file instead of stdout.
   '''
_export_dot_parser = command_parser([
    [None, 'structure', 'structure', None],
    [None, 'highlight', 'highlight', None],
    [None, 'output',    'output',    None]])

def _export_dot(args, opts, worklog, stdout):
    if args: raise BadParameter('export-dot takes no positional arguments')
    s = read_structure(opts.get('structure', None))
    hl = option_names(opts.get('highlight', None)) or None
    out = opts.get('output', None)
    if out is None: emit_dot(s, highlight=hl, stdout=stdout)
    else:
        save_dot(str(out), s, highlight=hl)
        worklog('Wrote %s.' % out)
    return exit_true

def export_dot_main(args, stdout=None, stderr=None):
    '''
    export_dot_main(args) runs the export-dot subcommand and yields the exit code.
    '''
    return run_command(_export_dot, _export_dot_parser, export_dot_info, args,
                       stdout=stdout, stderr=stderr)

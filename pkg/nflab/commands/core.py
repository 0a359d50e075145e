####################################################################################################
# nflab/commands/core.py
# Shared plumbing for the nflab command-line subcommands: option parsing, structure and rule
# arguments, output, and exit codes.

from __future__ import print_function

import os, sys, six, json, pimms

from ..util       import (NFLabError, MalformedDocument, config, degree_str)
from ..order      import (is_poset)
from ..structures import (is_structure, to_structure, canonical, parse_structure)
from ..horn       import (is_implication, parse_implication)
from ..io         import (load, normalize, export_dot)

common_instructions = [
    # Flags
    ('h',  'help',    'help',    False),
    ('v',  'verbose', 'verbose', False),
    (None, 'text',    'text',    False),
    # Options
    [None, 'jobs',    'jobs',    None]]
'''
common_instructions is the list of argv_parser instructions accepted by every subcommand.
'''

exit_true  = 0
exit_false = 1
exit_error = 2

def command_parser(instructions):
    '''
    command_parser(instructions) yields a pimms argv parser for the given option instructions plus
      the common_instructions. The parser also accepts '--opt value' for any option that takes a
      value, in addition to '--opt=value'.
    '''
    instructions = list(common_instructions) + list(instructions)
    valued = set(['--' + u[1] for u in instructions if isinstance(u, list) and u[1] is not None])
    parser = pimms.argv_parser(instructions)
    def _parse(argv):
        argv = normalize_argv(argv, valued)
        return parser(argv)
    return _parse

def normalize_argv(argv, valued):
    '''
    normalize_argv(argv, valued) yields a copy of the argument list argv in which every option
      '--opt' that is in the set valued and is followed by a separate value token is rewritten as
      '--opt=value'. Tokens after a lone '--' are left untouched.
    '''
    res = []
    argv = list(argv)
    k = 0
    while k < len(argv):
        a = argv[k]
        if a == '--':
            res.extend(argv[k:])
            break
        if a in valued and k + 1 < len(argv):
            res.append(a + '=' + argv[k+1])
            k += 2
        else:
            res.append(a)
            k += 1
    return res

def calc_worklog(stdout=Ellipsis, stderr=Ellipsis, verbose=False):
    '''
    calc_worklog(verbose) yields the worklog used by the subcommands; progress notes go to stderr
      (by default) so that stdout carries only the command's payload.
    '''
    if stdout is Ellipsis: stdout = sys.stderr
    if stderr is Ellipsis: stderr = sys.stderr
    try: cols = int(os.environ['COLUMNS'])
    except Exception: cols = 80
    return pimms.worklog(columns=cols, stdout=stdout, stderr=stderr, verbose=verbose)

def apply_options(opts):
    '''
    apply_options(opts) applies the common options (currently --jobs) to the nflab configuration.
    '''
    jobs = opts.get('jobs', None)
    if jobs is not None: config['jobs'] = int(jobs)

def option_int(opts, name, default=None):
    '''
    option_int(opts, name) yields the named option as an int, or default if it was not given.
    '''
    v = opts.get(name, None)
    if v is None: return default
    try: return int(v)
    except Exception: raise NFLabError('option --%s requires an integer: %s' % (name, v))

def option_names(v):
    '''
    option_names(v) yields the tuple of element names given by the option value v, a
      comma-separated string (or a list already split by the option parser).
    '''
    if v is None: return ()
    if isinstance(v, (list, tuple)): return tuple([str(u) for u in v])
    v = str(v).strip()
    if v == '': return ()
    return tuple([u.strip() for u in v.split(',')])

def read_structure(arg, stdin=None):
    '''
    read_structure(arg) yields the Structure named by the command-line argument arg: '-' reads a
      JSON document from stdin, an existing path is loaded through nflab.io.load, and anything else
      is looked up as a gallery name such as 'nabla(2)'.
    '''
    if arg is None: raise MalformedDocument('a structure argument is required')
    if is_structure(arg): return arg
    if arg == '-':
        if stdin is None: stdin = sys.stdin
        return parse_structure(stdin.read())
    if os.path.isfile(arg):
        s = load(arg)
        if is_poset(s): return to_structure(s)
        if not is_structure(s): raise MalformedDocument('%s does not describe a structure' % arg)
        return s
    return canonical(arg)

def read_rule(opts):
    '''
    read_rule(opts) yields the Implication given by the --rule (text) or --rule-file option.
    '''
    if opts.get('rule', None) is not None: return parse_implication(str(opts['rule']))
    if opts.get('rule_file', None) is not None:
        r = load(opts['rule_file'])
        if not is_implication(r):
            raise MalformedDocument('%s does not describe a rule' % opts['rule_file'])
        return r
    raise MalformedDocument('a rule is required (--rule or --rule-file)')

def _text(obj, indent=''):
    if isinstance(obj, dict):
        lines = []
        for k in sorted(obj.keys()):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                lines.append('%s%s:' % (indent, k))
                lines.append(_text(v, indent + '  '))
            else: lines.append('%s%s: %s' % (indent, k, json.dumps(v, sort_keys=True)))
        return '\n'.join(lines)
    elif isinstance(obj, list):
        return '\n'.join(['%s- %s' % (indent, json.dumps(u, sort_keys=True)) for u in obj])
    else: return indent + str(obj)

def _jsonable(obj):
    if isinstance(obj, dict): return {str(k): _jsonable(v) for (k,v) in six.iteritems(obj)}
    if isinstance(obj, list): return [_jsonable(u) for u in obj]
    if isinstance(obj, float): return degree_str(obj)
    return obj

def emit(obj, opts, stdout=None):
    '''
    emit(obj, opts) writes the payload obj to stdout: sorted-key JSON by default, or indented
      key/value lines when the --text flag was given. Structures, rules, and homomorphisms are
      written as their canonical JSON documents.
    '''
    if stdout is None: stdout = sys.stdout
    obj = _jsonable(normalize(obj))
    if opts.get('text', False): stdout.write(_text(obj) + '\n')
    else:                       stdout.write(json.dumps(obj, sort_keys=True) + '\n')
    stdout.flush()

def emit_dot(s, highlight=None, stdout=None):
    '''
    emit_dot(s) writes the DOT text of the Hasse diagram of the structure s to stdout.
    '''
    if stdout is None: stdout = sys.stdout
    txt = export_dot(s, highlight=highlight)
    stdout.write(txt if txt.endswith('\n') else txt + '\n')
    stdout.flush()

def run_command(body, parser, info, argv, stdout=None, stderr=None):
    '''
    run_command(body, parser, info, argv) parses argv with parser and calls body(args, opts,
      worklog, stdout), whose return value is the exit code. --help prints the info text. Any
      nflab error, ValueError, or IOError is reported on stderr and yields the exit code 2.
    '''
    if stdout is None: stdout = sys.stdout
    if stderr is None: stderr = sys.stderr
    try:
        (args, opts) = parser(argv)
    except Exception as e:
        stderr.write('nflab: %s\n' % e)
        return exit_error
    if opts.get('help', False):
        stdout.write(info)
        stdout.write('\n')
        return exit_true
    wl = calc_worklog(stdout=stderr, stderr=stderr, verbose=opts.get('verbose', False))
    try:
        apply_options(opts)
        return body(list(args), opts, wl, stdout)
    except (NFLabError, ValueError, KeyError, IOError, OSError) as e:
        stderr.write('nflab: %s: %s\n' % (type(e).__name__, e))
        return exit_error

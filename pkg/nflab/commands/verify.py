####################################################################################################
# nflab/commands/verify.py
# The verify subcommand: runs the named theorem suites.

from __future__ import print_function

import time

from ..classes import (suites, suite_names, run_theorem_suite, suite_passed)
from ..util    import (BadParameter, UnknownSuite)
from .core     import (command_parser, run_command, option_int, emit, exit_true, exit_false)

info = \
   '''
   Syntax: nflab verify <suite>... [options]
   Runs the given theorem suites (or every non-experimental suite, if the only argument is all)
   and writes their reports: {"suite", "bound", "checked", "failures", "experimental", "passed",
   "seconds"} for a single suite, and {"passed": bool, "reports": [...]} for several. The exit
   code is 0 if every suite passed and 1 if any failure was found. Reports of experimental suites
   are marked as such and are not verifications.

   The following options may be given:
     * -h|--help         Prints this message.
     * -v|--verbose      Prints progress notes to stderr.
     * --text            Prints the report as text instead of JSON.
     * --list            Lists the registered suites with their default bounds and exits.
     * --max-size=<k>    Caps the size of the carriers each suite enumerates; by default each
                         suite uses its own bound.
     * --jobs=<k>        Shards each suite's candidates over k worker processes.
   '''
_verify_parser = command_parser([
    (None, 'list',     'list',     False),
    [None, 'max-size', 'max_size', None]])

def _verify(args, opts, worklog, stdout):
    if opts.get('list', False):
        emit({name: {'bound': suites[name].default_bound,
                     'experimental': suites[name].experimental}
              for name in suite_names},
             opts, stdout)
        return exit_true
    if len(args) == 0: raise BadParameter('verify requires at least one suite name (or all)')
    if args == ['all']: names = [u for u in suite_names if not suites[u].experimental]
    else: names = args
    for name in names:
        if name not in suites: raise UnknownSuite('unknown theorem suite: %s' % name)
    bound = option_int(opts, 'max_size', None)
    reports = []
    for name in names:
        worklog('Running suite %s...' % name)
        t0 = time.time()
        rep = run_theorem_suite(name, size_bound=bound)
        rep['seconds'] = round(time.time() - t0, 3)
        rep['passed'] = suite_passed(rep)
        worklog.indent()('%d candidates, %d failures (%.1f s)'
                         % (rep['checked'], len(rep['failures']), rep['seconds']))
        reports.append(rep)
    passed = all(r['passed'] for r in reports)
    if len(reports) == 1: emit(reports[0], opts, stdout)
    else: emit({'passed': passed, 'reports': reports}, opts, stdout)
    return exit_true if passed else exit_false

def main(args, stdout=None, stderr=None):
    '''
    main(args) runs the verify subcommand with the given command-line arguments and yields the exit
      code.
    '''
    return run_command(_verify, _verify_parser, info, args, stdout=stdout, stderr=stderr)

####################################################################################################
# nflab/test/test_commands.py
# Tests of the nflab command-line subcommands: exit codes and reports.

import unittest, logging, os, json, shutil, tempfile, six

from nflab.structures import (nabla, boolean, structure_to_json)
from nflab.io         import save
from nflab.commands   import commands
from nflab.__main__   import main as nflab_main
from . import lattices as fx

class TestCommands(unittest.TestCase):
    '''
    The TestCommands class tests the nflab.commands package through the subcommand mains.
    '''

    def run_command(self, name, *argv):
        '''
        run_command(name, args...) runs the named subcommand and yields the tuple (exit code,
          stdout text, stderr text).
        '''
        (out, err) = (six.StringIO(), six.StringIO())
        code = commands[name](list(argv), stdout=out, stderr=err)
        return (code, out.getvalue(), err.getvalue())
    def run_json(self, name, *argv):
        (code, out, err) = self.run_command(name, *argv)
        return (code, json.loads(out))

    def test_check(self):
        '''
        test_check() checks the predicates of the check subcommand and their exit codes.
        '''
        logging.info('nflab: Testing the check command...')
        (code, rep) = self.run_json('check', 'n-filter', '--structure=nabla(2)', '--n=2')
        self.assertEqual(code, 0)
        self.assertEqual(rep, {'predicate': 'n-filter', 'result': True})
        (code, rep) = self.run_json('check', 'n-filter', '--structure', 'nabla(2)', '--n', '1')
        self.assertEqual(code, 1)
        self.assertFalse(rep['result'])
        self.assertTrue('witness' in rep)
        (code, rep) = self.run_json('check', 'degree', '--structure=nabla(2)')
        self.assertEqual(code, 0)
        self.assertEqual(rep['witness'], {'degree': 2, 'cover_number': 2})
        (code, rep) = self.run_json('check', 'boolean', '--structure=m5')
        self.assertEqual(code, 1)
        # usage and input errors
        (code, out, err) = self.run_command('check', 'nope', '--structure=nabla(2)')
        self.assertEqual(code, 2)
        self.assertEqual(out, '')
        self.assertTrue(err.startswith('nflab:'))
        self.assertEqual(self.run_command('check', 'n-filter', '--structure=nabla(2)')[0], 2)
        self.assertEqual(self.run_command('check', 'filter', '--structure=nope(2)')[0], 2)
        self.assertEqual(self.run_command('check', 'filter')[0], 2)
        # --help prints the syntax
        (code, out, err) = self.run_command('check', '--help')
        self.assertEqual(code, 0)
        self.assertTrue('Syntax: nflab check' in out)

    def test_structure_files(self):
        '''
        test_structure_files() checks that structures are read from JSON files.
        '''
        tmpdir = tempfile.mkdtemp(prefix='nflab-test-')
        try:
            fl = save(os.path.join(tmpdir, 'nabla2.json'), nabla(2))
            (code, rep) = self.run_json('check', 'n-filter', '--structure=' + fl, '--n=2')
            self.assertEqual(code, 0)
            fl = os.path.join(tmpdir, 'vee.json')
            with open(fl, 'wt') as f: json.dump(fx.vee, f)
            (code, rep) = self.run_json('check', 'meet-semilattice', '--structure=' + fl)
            self.assertEqual(code, 0)
            self.assertTrue(rep['result'])
        finally: shutil.rmtree(tmpdir, ignore_errors=True)

    def test_generate(self):
        '''
        test_generate() checks the generate subcommand.
        '''
        (code, rep) = self.run_json('generate', '--structure=nabla(2)', '--n=1')
        self.assertEqual(code, 0)
        self.assertEqual(rep['upset'], ['00', '01', '10', '11'])
        (code, rep) = self.run_json('generate', '--structure=nabla(2)', '--n=2')
        self.assertEqual(rep['upset'], ['01', '10', '11'])
        (code, out, err) = self.run_command('generate', '--structure=nabla(2)', '--n=1', '--dot')
        self.assertTrue(out.startswith('digraph'))
        self.assertEqual(self.run_command('generate', '--structure=nabla(2)')[0], 2)
        self.assertEqual(self.run_command('generate', '--structure=nabla(2)', '--n=1',
                                          '--method=magic')[0], 2)

    def test_primes(self):
        '''
        test_primes() checks the decompose subcommand.
        '''
        (code, rep) = self.run_json('decompose', '--structure=nabla(2)')
        self.assertEqual(code, 0)
        self.assertEqual(sorted(rep['parts']), [['01', '11'], ['10', '11']])

    def test_homs(self):
        '''
        test_homs() checks the hom, embed, product, and dualproduct subcommands.
        '''
        (code, rep) = self.run_json('hom', '--source=nabla(1)', '--target=nabla(2)')
        self.assertEqual(code, 0)
        self.assertTrue(rep['found'])
        self.assertEqual(rep['homomorphisms'], [{'map': {'0': '00', '1': '11'}, 'strict': True}])
        (code, rep) = self.run_json('embed', '--source=nabla(3)', '--target=nabla(2)')
        self.assertEqual(code, 1)
        self.assertEqual(rep, {'found': False, 'embedding': None})
        (code, rep) = self.run_json('product', 'nabla(1)', 'nabla(1)')
        self.assertEqual(code, 0)
        self.assertEqual(rep, structure_to_json(boolean(2)))
        (code, rep) = self.run_json('dualproduct', 'nabla(1)', '--power=2')
        self.assertEqual(rep, structure_to_json(nabla(2)))
        self.assertEqual(self.run_command('hom', '--source=nabla(1)')[0], 2)
        self.assertEqual(self.run_command('product', 'nabla(1)', 'nabla(1)', '--power=2')[0], 2)

    def test_rule(self):
        '''
        test_rule() checks the actions of the rule subcommand.
        '''
        logging.info('nflab: Testing the rule command...')
        (code, rep) = self.run_json('rule', 'holds', '--rule=' + fx.alpha2_text,
                                    '--structure=nabla(2)')
        self.assertEqual(code, 1)
        self.assertEqual(rep, {'holds': False, 'witness': {'x': '01', 'y': '00'},
                               'rule': fx.alpha2_text})
        (code, rep) = self.run_json('rule', 'holds', '--rule=' + fx.alpha2_text,
                                    '--structure=nabla(1)')
        self.assertEqual(code, 0)
        self.assertIsNone(rep['witness'])
        (code, rep) = self.run_json('rule', 'countermodel', '--rule=' + fx.alpha2_text)
        self.assertEqual(code, 0)
        self.assertEqual(rep['structure'], structure_to_json(nabla(2)))
        (code, rep) = self.run_json('rule', 'countermodel', '--rule=x & y |- x')
        self.assertEqual(code, 1)
        self.assertFalse(rep['found'])
        (code, rep) = self.run_json('rule', 'entails', '--rule=' + fx.adjunction1_text,
                                    '--class=DL(1)')
        self.assertEqual(code, 0)
        self.assertEqual(rep['class'], 'DL(1)')
        (code, rep) = self.run_json('rule', 'entails', '--rule=' + fx.adjunction1_text,
                                    '--class=DL(2)')
        self.assertEqual(code, 1)
        (code, rep) = self.run_json('rule', 'builtin', 'alpha', '2')
        self.assertEqual(code, 0)
        self.assertEqual(rep['text'], fx.alpha2_text)
        (code, out, err) = self.run_command('rule', 'holds', '--rule=x, |- y',
                                            '--structure=nabla(1)')
        self.assertEqual(code, 2)
        self.assertTrue('RuleSyntaxError' in err)
        self.assertEqual(self.run_command('rule', 'fly')[0], 2)
        self.assertEqual(self.run_command('rule', 'builtin', 'alpha', 'two')[0], 2)

    def test_class(self):
        '''
        test_class() checks the actions of the class subcommand.
        '''
        (code, rep) = self.run_json('class', 'member', '--structure=boolean(2)',
                                    '--generators=nabla(1)')
        self.assertEqual(code, 0)
        self.assertTrue(rep['member'])
        (code, rep) = self.run_json('class', 'split', '--structure=nabla(3)', '--n=2')
        self.assertEqual(code, 0)
        self.assertEqual(rep['branch'], 'EmbedsBranch')
        self.assertTrue(rep['embedding']['strict'])
        (code, rep) = self.run_json('class', 'split', '--structure=nabla(1)', '--n=2')
        self.assertEqual(rep['branch'], 'AlphaBranch')
        self.assertIsNone(rep['embedding'])
        (code, rep) = self.run_json('class', 'product-class', '--structure=nabla(2)', '--m=2',
                                    '--n=1', '--gamma')
        self.assertEqual(code, 1)
        self.assertEqual(rep, {'m': 2, 'n': 1, 'member': False, 'gamma': False})
        self.assertEqual(self.run_command('class', 'split', '--structure=m5', '--n=1')[0], 2)

    def test_verify(self):
        '''
        test_verify() checks the verify subcommand on the counterexample gallery.
        '''
        logging.info('nflab: Testing the verify command...')
        (code, rep) = self.run_json('verify', 'counterexample-gallery')
        self.assertEqual(code, 0)
        self.assertTrue(rep['passed'])
        self.assertEqual(rep['failures'], [])
        (code, rep) = self.run_json('verify', '--list')
        self.assertEqual(len(rep), 15)
        self.assertTrue(rep['adjunction-substitution']['experimental'])
        self.assertEqual(self.run_command('verify', 'nope')[0], 2)
        self.assertEqual(self.run_command('verify')[0], 2)

    def test_gallery(self):
        '''
        test_gallery() checks the gallery and export-dot subcommands.
        '''
        (code, rep) = self.run_json('gallery', 'nabla', '--n=2')
        self.assertEqual(code, 0)
        self.assertEqual(rep, structure_to_json(nabla(2)))
        (code, rep) = self.run_json('gallery', 'nabla(2)')
        self.assertEqual(rep, structure_to_json(nabla(2)))
        (code, out, err) = self.run_command('gallery', 'nabla(2)', '--text')
        self.assertTrue('signature: "boolean"' in out)
        self.assertEqual(self.run_command('gallery', 'nabla')[0], 2)
        (code, rep) = self.run_json('gallery', '--list')
        self.assertEqual(rep['height'], ['d', 'm'])
        (code, out, err) = self.run_command('export-dot', '--structure=nabla(2)',
                                            '--highlight=01')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('digraph'))
        self.assertTrue('red' in out)

    def test_main(self):
        '''
        test_main() checks the dispatch of the nflab command.
        '''
        self.assertEqual(nflab_main([]), 2)
        self.assertEqual(nflab_main(['nope']), 2)
        self.assertEqual(nflab_main(['--help']), 0)
        self.assertEqual(nflab_main(['check', 'lattice', '--structure=m5']), 0)

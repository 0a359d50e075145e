####################################################################################################
# nflab/test/test_io.py
# Tests of the load/save registries, JSON documents, rule files, DOT export, and the configuration.

import unittest, logging, os, json, shutil, tempfile, warnings

from unittest import mock

from nflab.util       import (config, MalformedDocument)
from nflab.order      import (parse_poset, boolean_lattice)
from nflab.structures import (nabla, boolean)
from nflab.horn       import (parse_implication, alpha)
from nflab.io         import (load, save, importers, exporters, guess_import_format,
                              guess_export_format, normalize, denormalize, export_dot, to_dot)
from . import lattices as fx

class TestIO(unittest.TestCase):
    '''
    The TestIO class tests the nflab.io package.
    '''

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp(prefix='nflab-test-')
    def tearDown(self):
        shutil.rmtree(self.tmpdir, ignore_errors=True)
    def path(self, name):
        return os.path.join(self.tmpdir, name)

    def test_registry(self):
        '''
        test_registry() checks that the importers and exporters deduce formats from file names.
        '''
        for fmt in ('json', 'rule'): self.assertTrue(fmt in importers)
        for fmt in ('json', 'rule', 'dot'): self.assertTrue(fmt in exporters)
        self.assertEqual(guess_import_format('a/b/c.json'), 'json')
        self.assertEqual(guess_import_format('c.JSON.gz'), 'json')
        self.assertEqual(guess_import_format('x.rule'), 'rule')
        self.assertIsNone(guess_import_format(self.path('nothing.xyz')))
        self.assertEqual(guess_export_format('out.gv', nabla(1)), 'dot')
        self.assertEqual(guess_export_format('out.json.gz', nabla(1)), 'json')
        with self.assertRaises(MalformedDocument): load(self.path('nothing.xyz'))
        with self.assertRaises(ValueError): save(self.path('nothing.xyz'), nabla(1))

    def test_json(self):
        '''
        test_json() checks that structures and posets survive a trip through JSON files.
        '''
        logging.info('nflab: Testing JSON documents...')
        s = nabla(2)
        fl = save(self.path('nabla2.json'), s)
        self.assertEqual(load(fl), s)
        self.assertEqual(load(fl).meta_data['source_filename'], fl)
        fl = save(self.path('nabla2.json.gz'), s)
        self.assertEqual(load(fl), s)
        p = parse_poset(fx.m5)
        fl = save(self.path('m5.json'), p)
        self.assertEqual(load(fl), p)
        # raw documents are available when interpretation is switched off
        raw = load(self.path('nabla2.json'), to=None)
        self.assertEqual(raw['upset'], ['01', '10', '11'])
        self.assertEqual(raw['signature'], 'boolean')
        with open(self.path('broken.json'), 'wt') as f: f.write('{"elements": [')
        with self.assertRaises(MalformedDocument): load(self.path('broken.json'))

    def test_normalize(self):
        '''
        test_normalize() checks the conversion of nflab objects to and from JSON documents.
        '''
        d = normalize({'a': boolean(1), 'b': [alpha(1)], 'c': 3})
        self.assertEqual(d['a']['upset'], ['1'])
        self.assertEqual(d['b'][0]['text'], 'x |- y')
        self.assertEqual(d['c'], 3)
        self.assertEqual(denormalize(normalize(nabla(2))), nabla(2))
        self.assertEqual(denormalize(normalize(boolean_lattice(2))), boolean_lattice(2))
        self.assertEqual(denormalize(normalize(alpha(2))), alpha(2))
        self.assertEqual(denormalize({'x': 1}), {'x': 1})

    def test_rules(self):
        '''
        test_rules() checks rule files, including comments and line continuation.
        '''
        r = parse_implication(fx.alpha2_text)
        fl = save(self.path('alpha2.rule'), r)
        self.assertEqual(load(fl), r)
        with open(self.path('adj.rule'), 'wt') as f:
            f.write('# the 1-adjunction rule\n\nx, y\n  |- x & y\n')
        self.assertEqual(load(self.path('adj.rule')), parse_implication(fx.adjunction1_text))
        fl = save(self.path('alpha2.json'), r)
        self.assertEqual(load(fl), r)

    def test_dot(self):
        '''
        test_dot() checks the DOT export of Hasse diagrams.
        '''
        logging.info('nflab: Testing DOT export...')
        s = nabla(2)
        txt = export_dot(s)
        self.assertTrue(txt.startswith('digraph'))
        for el in ('00', '01', '10', '11'): self.assertTrue('"%s"' % el in txt)
        self.assertTrue('rankdir=BT' in txt)
        self.assertEqual(txt.count('->'), 4)
        self.assertEqual(txt.count('filled'), 3)
        self.assertEqual(export_dot(boolean_lattice(2)).count('filled'), 0)
        self.assertTrue('red' in export_dot(s, highlight=['01']))
        self.assertEqual(len(to_dot(s).get_nodes()), 4)
        fl = save(self.path('nabla2.dot'), s)
        with open(fl, 'rt') as f: self.assertEqual(f.read(), txt)

    def test_config(self):
        '''
        test_config() checks that configuration items are read from the environment and the rc-file
          and that invalid values fall back to the defaults.
        '''
        config.reset()
        try:
            self.assertEqual(config['size_cap'], 4096)
            self.assertTrue('jobs' in config)
            with mock.patch.dict(os.environ, {'NFLAB_ORACLE_CAP': '12'}):
                config.reset('oracle_cap')
                self.assertEqual(config['oracle_cap'], 12)
            rc = self.path('nflabrc.json')
            with open(rc, 'wt') as f: json.dump({'enumeration_cap': 10}, f)
            with mock.patch.dict(os.environ, {'NFLABRC': rc, 'NFLAB_JOBS': '"many"'}):
                config.reset()
                self.assertEqual(config['enumeration_cap'], 10)
                with warnings.catch_warnings(record=True) as ws:
                    warnings.simplefilter('always')
                    self.assertEqual(config['jobs'], 1)
                self.assertEqual(len(ws), 1)
            config['jobs'] = 3
            self.assertEqual(config['jobs'], 3)
            with self.assertRaises(ValueError): config['jobs'] = 0
            with self.assertRaises(KeyError): config['nope']
        finally: config.reset()

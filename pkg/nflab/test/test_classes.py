####################################################################################################
# nflab/test/test_classes.py
# Tests of filter-class membership, the splitting dichotomy, the product-class criterion, and the
# theorem suites.

import unittest, logging

from nflab.util       import (SignatureMismatch, BadParameter, UnknownSuite)
from nflab.order      import boolean_lattice
from nflab.structures import (Structure, is_homomorphism, nabla, height, boolean, M5)
from nflab.classes    import (FilterClassSpec, class_membership, preimage_closure, generating_set,
                              free_cover, splitting_evidence, splitting_check, product_generator,
                              product_class_check, gamma_criterion, atom_count, suites,
                              suite_names, run_theorem_suite, suite_passed)

class TestClasses(unittest.TestCase):
    '''
    The TestClasses class tests the nflab.classes package.
    '''

    def test_membership(self):
        '''
        test_membership() checks filter-class membership through preimage closure.
        '''
        logging.info('nflab: Testing filter-class membership...')
        c1 = FilterClassSpec([nabla(1)])
        c2 = FilterClassSpec(nabla(2))
        self.assertEqual(c1.class_signature, 'boolean')
        self.assertTrue(class_membership(c1, boolean(2)))
        self.assertFalse(class_membership(c1, nabla(2)))
        self.assertTrue(nabla(2) in c2)
        self.assertTrue(height(2, 1) in c2)
        self.assertFalse(nabla(3) in c2)
        s = height(2, 1)
        self.assertEqual(preimage_closure(c2, s), s.mask)
        self.assertEqual(preimage_closure(c1, s), s.algebra.full)
        # over Boolean algebras the logical class adds nothing on finite structures
        l1 = c1.with_closure('logical_class')
        self.assertEqual(l1.closure, 'logical_class')
        self.assertFalse(class_membership(l1, nabla(2)))
        self.assertTrue(class_membership(l1, boolean(3)))
        with self.assertRaises(SignatureMismatch): class_membership(c1, M5())
        with self.assertRaises(ValueError): FilterClassSpec([])

    def test_free_cover(self):
        '''
        test_free_cover() checks generating sets and the free cover of a small lattice.
        '''
        b = boolean_lattice(2)
        self.assertEqual(generating_set(b, 'boolean'), (1,))
        s = Structure(b, ['11'], 'distributive')
        (free, h) = free_cover(s, 'distributive')
        self.assertEqual(set(h), set(range(4)))
        self.assertTrue(is_homomorphism(free, b, h, 'distributive'))
        self.assertEqual(atom_count(boolean_lattice(3)), 3)

    def test_splitting(self):
        '''
        test_splitting() checks the dichotomy: nabla(n) embeds or alpha(n) holds.
        '''
        logging.info('nflab: Testing the splitting dichotomy...')
        (branch, h) = splitting_evidence(nabla(3), 2)
        self.assertEqual(branch, 'EmbedsBranch')
        self.assertTrue(h.injective)
        self.assertTrue(h.strict)
        self.assertEqual(splitting_evidence(nabla(1), 2), ('AlphaBranch', None))
        self.assertEqual(splitting_check(boolean(2), 2), 'AlphaBranch')
        self.assertEqual(splitting_check(height(2, 1), 2), 'AlphaBranch')
        self.assertEqual(splitting_check(nabla(2), 2), 'EmbedsBranch')
        with self.assertRaises(SignatureMismatch): splitting_check(M5(), 1)
        with self.assertRaises(BadParameter): splitting_check(nabla(2), 0)

    def test_product_class(self):
        '''
        test_product_class() checks the class generated by nabla(m) x nabla(n) against membership
          and the gamma criterion.
        '''
        logging.info('nflab: Testing the product-class criterion...')
        g = product_generator(2, 1)
        self.assertEqual(g.size, 8)
        self.assertEqual(g.names, ('011', '101', '111'))
        cases = [(g, True), (nabla(2), False), (boolean(2), True), (nabla(3), False),
                 (height(2, 1), False), (nabla(1), True)]
        spec = FilterClassSpec([g])
        for (s, expected) in cases:
            self.assertEqual(product_class_check(s, 2, 1), expected)
            self.assertEqual(gamma_criterion(s, 2, 1), expected)
            self.assertEqual(class_membership(spec, s), expected)
        with self.assertRaises(BadParameter): product_class_check(g, 1, 2)
        with self.assertRaises(BadParameter): gamma_criterion(g, 1, 1)

    def test_registry(self):
        '''
        test_registry() checks the registry of theorem suites.
        '''
        self.assertEqual(len(suite_names), 15)
        self.assertTrue(suites['adjunction-substitution'].experimental)
        self.assertFalse(suites['separation'].experimental)
        self.assertEqual(suites['counterexample-gallery'].default_bound, 1)
        with self.assertRaises(UnknownSuite): run_theorem_suite('nope')
        self.assertFalse(suite_passed({'failures': [{'check': 'x'}]}))

    def test_suites(self):
        '''
        test_suites() runs the cheaper theorem suites at reduced bounds and checks that they pass.
        '''
        logging.info('nflab: Running theorem suites at reduced bounds...')
        runs = [('counterexample-gallery', None), ('definition-equivalence', 4),
                ('generation', 5), ('prime-nfilter-characterization', 5), ('separation', 5),
                ('m-prime-characterization', 4), ('strict-image', 4), ('gamma', 8),
                ('logical-class', 4), ('entailment', 2), ('height-beta-grid', None),
                ('construction-laws', 4), ('nfilter-class-generation', 5)]
        for (name, bound) in runs:
            rep = run_theorem_suite(name, size_bound=bound)
            self.assertEqual(rep['suite'], name)
            self.assertTrue(rep['checked'] > 0)
            self.assertEqual(rep['failures'], [], name)
            self.assertTrue(suite_passed(rep))
            self.assertFalse(rep['experimental'])
        rep = run_theorem_suite('adjunction-substitution', size_bound=4)
        self.assertTrue(rep['experimental'])
        self.assertTrue(rep['checked'] > 0)
        self.assertEqual(rep['failures'], [])

    def test_sharded_suite(self):
        '''
        test_sharded_suite() checks that sharding a suite over worker processes gives the same
          report as a serial run.
        '''
        serial = run_theorem_suite('splitting', size_bound=4, jobs=1)
        sharded = run_theorem_suite('splitting', size_bound=4, jobs=2)
        self.assertEqual(serial, sharded)
        self.assertEqual(serial['checked'], 2)
        self.assertTrue(suite_passed(serial))

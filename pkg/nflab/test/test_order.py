####################################################################################################
# nflab/test/test_order.py
# Tests of finite posets, their classification, upsets, and enumeration.

import unittest, logging
import numpy as np

from hypothesis import (given, settings, strategies as st)

from nflab.util  import (DuplicateElement, CycleDetected, UnknownElementName, NotAnUpset, NoMeet,
                         EmptyWithoutTop, MalformedDocument)
from nflab.order import (parse_poset, serialize_poset, poset_to_json, boolean_lattice, chain,
                         dual_poset, subposet, to_upset, upward_closure, meet_of_set,
                         is_m5_n5_free, SubposetWitness, is_ideal_subposet, canonical_form,
                         relabel, iter_posets, iter_lattices, iter_distributive_lattices,
                         iter_meet_semilattices, iter_distributive_semilattices,
                         iter_boolean_lattices, iter_upsets, iter_upset_masks, common_signature)
from . import lattices as fx

class TestOrder(unittest.TestCase):
    '''
    The TestOrder class tests the nflab.order package.
    '''

    def test_parse(self):
        '''
        test_parse() checks that poset documents parse and that malformed ones are refused with
          the right errors.
        '''
        logging.info('nflab: Testing poset parsing...')
        p = parse_poset(fx.m5)
        self.assertEqual(p.size, 5)
        self.assertEqual(p.elements, ('0', 'a', 'b', 'c', '1'))
        self.assertTrue(p.le('0', '1'))
        self.assertFalse(p.le('a', 'b'))
        with self.assertRaises(CycleDetected):       parse_poset(fx.cyclic)
        with self.assertRaises(DuplicateElement):    parse_poset(fx.duplicate)
        with self.assertRaises(UnknownElementName):  parse_poset(fx.unknown)
        with self.assertRaises(MalformedDocument):   parse_poset('{"covers": []}')
        with self.assertRaises(MalformedDocument):   parse_poset('not json')
        # the canonical serialization parses back to the same poset
        self.assertEqual(parse_poset(serialize_poset(p)), p)
        self.assertEqual(poset_to_json(p)['covers'][0], ['0', 'a'])

    def test_classification(self):
        '''
        test_classification() checks the algebra kinds of the fixture posets.
        '''
        logging.info('nflab: Testing algebra classification...')
        self.assertEqual(boolean_lattice(2).kind.kind, 'BooleanAlgebra')
        self.assertEqual(chain(3).kind.kind, 'DistributiveLattice')
        self.assertEqual(parse_poset(fx.m5).kind.kind, 'Lattice')
        self.assertEqual(parse_poset(fx.n5).kind.kind, 'Lattice')
        self.assertEqual(parse_poset(fx.vee).kind.kind, 'MeetSemilattice')
        self.assertEqual(parse_poset(fx.bowtie).kind.kind, 'Poset')
        self.assertTrue(chain(3).is_distributive_semilattice)
        # a finite distributive meet semilattice is directed upward, so the vee is not one
        self.assertFalse(parse_poset(fx.vee).is_distributive_semilattice)
        self.assertFalse(parse_poset(fx.nondist).is_distributive_semilattice)
        self.assertTrue(parse_poset(fx.nondist).is_meet_semilattice)
        # signatures
        self.assertEqual(boolean_lattice(3).signature, 'boolean')
        self.assertEqual(parse_poset(fx.vee).signature, 'semilattice')
        self.assertEqual(common_signature('boolean', 'lattice'), 'lattice')
        self.assertEqual(common_signature('boolean', 'distributive'), 'distributive')
        self.assertEqual(common_signature('unital_semilattice', 'lattice'), 'semilattice')
        self.assertEqual(common_signature('poset', 'boolean'), 'poset')

    def test_m5_n5(self):
        '''
        test_m5_n5() checks that the M5/N5 sublattice test agrees with the distributive law on all
          lattices with at most 7 elements.
        '''
        logging.info('nflab: Testing the M5/N5 distributivity oracle...')
        for l in iter_lattices(7):
            self.assertEqual(l.is_distributive, is_m5_n5_free(l))

    def test_meets(self):
        '''
        test_meets() checks meets of sets, including the empty meet.
        '''
        p = parse_poset(fx.m5)
        self.assertEqual(meet_of_set(p, ['a', 'b']), '0')
        self.assertEqual(meet_of_set(p, ['a', '1']), 'a')
        self.assertEqual(meet_of_set(p, []), '1')
        q = parse_poset(fx.bowtie)
        with self.assertRaises(NoMeet): meet_of_set(q, ['c', 'd'])
        with self.assertRaises(EmptyWithoutTop): meet_of_set(parse_poset(fx.vee), [])

    def test_upsets(self):
        '''
        test_upsets() checks upset construction, closure, and enumeration.
        '''
        logging.info('nflab: Testing upsets...')
        b = boolean_lattice(2)
        with self.assertRaises(NotAnUpset): to_upset(b, ['01'])
        u = upward_closure(b, ['01'])
        self.assertEqual(u.names, ('01', '11'))
        self.assertTrue('11' in u)
        self.assertFalse('10' in u)
        self.assertEqual(len(list(iter_upsets(b))), 6)
        self.assertEqual(len(list(iter_upsets(boolean_lattice(3)))), 20)
        self.assertEqual(len(list(iter_upsets(chain(4)))), 5)
        # upsets are listed by size
        sizes = [bin(m).count('1') for m in iter_upset_masks(boolean_lattice(3))]
        self.assertEqual(sizes, sorted(sizes))

    def test_enumeration(self):
        '''
        test_enumeration() checks the numbers of posets, lattices, distributive lattices, and meet
          semilattices up to isomorphism against the known sequences.
        '''
        logging.info('nflab: Testing enumeration counts...')
        def _count(it, n): return [len([p for p in it(n) if p.size == k]) for k in range(1, n+1)]
        self.assertEqual(_count(iter_posets, 5), [1, 2, 5, 16, 63])
        self.assertEqual(_count(iter_lattices, 7), [1, 1, 1, 2, 5, 15, 53])
        self.assertEqual(_count(iter_distributive_lattices, 8), [1, 1, 1, 2, 3, 5, 8, 15])
        self.assertEqual(_count(iter_meet_semilattices, 5), [1, 1, 2, 5, 15])
        self.assertEqual([p.size for p in iter_boolean_lattices(8)], [1, 2, 4, 8])
        for s in iter_distributive_semilattices(6):
            self.assertTrue(s.is_meet_semilattice)
            self.assertTrue(s.is_distributive_semilattice)
            self.assertTrue(s.is_distributive)
        # no two enumerated lattices are isomorphic
        keys = [canonical_form(l) for l in iter_lattices(6)]
        self.assertEqual(len(keys), len(set(keys)))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0, max_value=7), st.randoms(use_true_random=False))
    def test_canonical_form(self, k, rng):
        '''
        test_canonical_form() checks that relabelling a lattice preserves its canonical form.
        '''
        ls = list(iter_lattices(6))
        l = ls[k % len(ls)]
        perm = list(range(l.size))
        rng.shuffle(perm)
        self.assertEqual(canonical_form(l), canonical_form(relabel(l, perm)))

    def test_duals_and_subposets(self):
        '''
        test_duals_and_subposets() checks order duals, induced subposets, and ideal subposets.
        '''
        p = parse_poset(fx.n5)
        d = dual_poset(p)
        self.assertTrue(d.le('1', '0'))
        self.assertEqual(dual_poset(d), p)
        q = subposet(p, ['0', 'a', 'c'])
        self.assertEqual(q.elements, ('0', 'a', 'c'))
        self.assertEqual(q.kind.kind, 'MeetSemilattice')
        # every principal downset is an ideal subposet; {a, c} is not, since a, c <= 1 but nothing
        # selected lies above both
        self.assertTrue(is_ideal_subposet(SubposetWitness(p, ['0', 'a', 'b'])))
        self.assertFalse(is_ideal_subposet(SubposetWitness(p, ['a', 'c'])))
        self.assertTrue(np.array_equal(d.leq, p.leq.T))

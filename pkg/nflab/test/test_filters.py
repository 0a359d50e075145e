####################################################################################################
# nflab/test/test_filters.py
# Tests of n-filters: the predicates, generation, primeness, decomposition, and separation.

import unittest, logging

from hypothesis import (given, settings, strategies as st)

from nflab.util       import (infinity, bits, NotAnUpset, NotMeetSemilattice, NotPrime,
                              NoDecomposition, NotAnNFilter, NotIdeal, NotDisjoint, NotDistributive)
from nflab.order      import (Upset, boolean_lattice, parse_poset, subposet, iter_upsets,
                              iter_upset_masks)
from nflab.filters    import (n_filter_witness, is_n_filter, is_filter, is_n_ideal,
                              min_filter_degree, filter_cover_number, is_union_of_filters,
                              generation_step, generate_n_filter, generate_n_filter_oracle,
                              enumerate_n_filters, filter_lattice, join_irreducibles,
                              is_prime_upset, is_m_prime_element, is_m_prime_n_filter,
                              m_prime_n_filter_witness, prime_filters, is_m_prime_filter,
                              is_union_of_prime_filters, decompose_prime_n_filter,
                              separate_prime_n_filter)
from nflab.structures import (nabla, height, dBA, fig2, fig2_top, M5, N5, fig3_right)
from . import lattices as fx

class TestFilters(unittest.TestCase):
    '''
    The TestFilters class tests the nflab.filters package.
    '''

    def test_nabla_degrees(self):
        '''
        test_nabla_degrees() checks that nabla(n) is an n-filter but not an (n-1)-filter.
        '''
        logging.info('nflab: Testing the degrees of the nabla structures...')
        for n in range(1, 5):
            s = nabla(n)
            self.assertTrue(is_n_filter(s, s.upset, n))
            self.assertEqual(min_filter_degree(s, s.upset), n)
            if n > 1:
                self.assertFalse(is_n_filter(s, s.upset, n - 1))
                w = n_filter_witness(s, s.upset, n - 1)
                self.assertEqual(len(w), n)
        # degree 0 admits only the empty and the total upsets; infinity admits all of them
        b = boolean_lattice(2)
        self.assertTrue(is_n_filter(b, [], 0))
        self.assertTrue(is_n_filter(b, b.elements, 0))
        self.assertFalse(is_n_filter(b, ['11'], 0))
        for u in iter_upsets(b): self.assertTrue(is_n_filter(b, u, infinity))
        with self.assertRaises(NotAnUpset): is_n_filter(b, ['01'], 1)

    def test_height(self):
        '''
        test_height() checks the height structures: height(2,1) is a 2-filter that is not a filter.
        '''
        s = height(2, 1)
        self.assertEqual(s.names, ('011', '101', '110', '111'))
        self.assertTrue(is_n_filter(s, s.upset, 2))
        self.assertFalse(is_filter(s, s.upset))
        self.assertEqual(len(n_filter_witness(s, s.upset, 1)), 2)
        for (d,m) in [(1, 1), (1, 2), (2, 2), (3, 1)]:
            h = height(d, m)
            self.assertTrue(is_n_filter(h, h.upset, d))
        # the n-ideal test works on the order dual
        b = boolean_lattice(2)
        self.assertTrue(is_n_ideal(b, ['00'], 1))
        self.assertFalse(is_n_ideal(b, ['00', '01', '10'], 1))
        self.assertTrue(is_n_ideal(b, ['00', '01', '10'], 2))

    def test_poset_filters(self):
        '''
        test_poset_filters() checks the full n-filter definition on posets without meets.
        '''
        p = parse_poset(fx.bowtie)
        # c and d have the lower bounds a and b, but no lower bound inside {c, d}
        self.assertFalse(is_n_filter(p, ['c', 'd'], 1))
        self.assertTrue(is_n_filter(p, ['c', 'd'], 2))
        self.assertTrue(is_n_filter(p, ['a', 'c', 'd'], 1))
        with self.assertRaises(NotMeetSemilattice):
            is_n_filter(p, ['c', 'd'], 1, method='restricted')
        with self.assertRaises(NotMeetSemilattice): generate_n_filter(p, ['c'], 1)

    def test_unions_of_filters(self):
        '''
        test_unions_of_filters() checks the filter cover numbers of the M5 and N5 upsets.
        '''
        (m5, n5) = (M5(), N5())
        self.assertEqual(filter_cover_number(m5, m5.upset), 3)
        self.assertTrue(is_union_of_filters(m5, m5.upset, 3))
        self.assertFalse(is_union_of_filters(m5, m5.upset, 2))
        self.assertTrue(is_union_of_filters(n5, n5.upset, 2))
        self.assertFalse(is_union_of_filters(n5, n5.upset, 1))
        v = parse_poset(fx.vee)
        self.assertTrue(is_union_of_filters(v, ['a', 'b'], 2))

    def test_generation(self):
        '''
        test_generation() checks every generation method against the exhaustive oracle on B_3.
        '''
        logging.info('nflab: Testing n-filter generation on B_3...')
        b = boolean_lattice(3)
        self.assertEqual(len(join_irreducibles(b)), 3)
        for u in iter_upsets(b):
            for n in (1, 2, 3):
                g = generate_n_filter_oracle(b, u, n)
                self.assertTrue(is_n_filter(b, g, n))
                self.assertEqual(g.mask & u.mask, u.mask)
                for method in ('primes', 'one-step', 'fixpoint', 'auto'):
                    self.assertEqual(generate_n_filter(b, u, n, method=method), g)
        # the 2-filter generated by the atoms 001 and 010 is their union of principal filters
        g = generate_n_filter(b, ['001', '010', '011', '101', '110', '111'], 2)
        self.assertEqual(g.names, ('001', '010', '011', '101', '110', '111'))
        self.assertEqual(generate_n_filter(b, ['001', '010', '011', '101', '110', '111'], 1).mask,
                         b.full)
        self.assertEqual(generate_n_filter(b, [], 1).mask, 0)
        self.assertEqual(generate_n_filter(b, ['111'], 0).mask, b.full)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=167), st.integers(min_value=1, max_value=4))
    def test_generation_b4(self, k, n):
        '''
        test_generation_b4() checks that the prime-cover and one-step methods agree with the
          fixpoint on randomly chosen upsets of B_4.
        '''
        b = boolean_lattice(4)
        masks = list(iter_upset_masks(b))
        self.assertEqual(len(masks), 168)
        u = Upset(b, masks[k])
        g = generate_n_filter(b, u, n, method='fixpoint')
        self.assertTrue(is_n_filter(b, g, n))
        self.assertEqual(generate_n_filter(b, u, n, method='primes'), g)
        self.assertEqual(generate_n_filter(b, u, n, method='one-step'), g)

    @settings(max_examples=10000, deadline=None)
    @given(st.integers(min_value=0, max_value=255), st.integers(min_value=0, max_value=255),
           st.integers(min_value=0, max_value=7), st.booleans())
    def test_construction_laws(self, x, y, a, by_join):
        '''
        test_construction_laws() checks on random upsets f, g of B_3 that f | g is an (m+n)-filter
          when f is an m-filter and g an n-filter, and that n-filters stay n-filters under preimages
          along x -> x & a (or x -> x | a) and under restriction to the principal ideal below a.
        '''
        b = boolean_lattice(3)
        (f, g) = (b.up_closure(x), b.up_closure(y))
        (m, n) = (min_filter_degree(b, Upset(b, f)), min_filter_degree(b, Upset(b, g)))
        self.assertTrue(is_n_filter(b, Upset(b, f | g), m + n))
        ops = b.join_rows if by_join else b.meet_rows
        pre = sum(1 << z for z in range(b.size) if (f >> ops[z][a]) & 1)
        self.assertTrue(is_n_filter(b, Upset(b, pre), m))
        sel = b.down_masks[a]
        q = subposet(b, sel)
        r = sum(1 << k for (k,z) in enumerate(bits(sel)) if (f >> z) & 1)
        self.assertTrue(is_n_filter(q, Upset(q, r), m))

    def test_one_step_is_not_enough(self):
        '''
        test_one_step_is_not_enough() checks that a single admissible-set step does not generate
          the 2-filter on the non-distributive fig2 semilattice, while the fixpoint does.
        '''
        logging.info('nflab: Testing generation on fig2...')
        s = fig2()
        step = generation_step(s, s.upset, 2)
        self.assertTrue('a' in step)
        self.assertTrue('b1' in step)
        self.assertFalse('b' in step)
        g = generate_n_filter(s, s.upset, 2)
        self.assertTrue('b' in g)
        self.assertFalse('bot' in g)
        self.assertEqual(g, generate_n_filter_oracle(s, s.upset, 2))
        t = fig2_top()
        gt = generate_n_filter(t, t.upset, 2, method='fixpoint')
        self.assertTrue('b' in gt)
        self.assertFalse('b' in generate_n_filter(t, t.upset, 2, method='one-step'))

    def test_enumeration(self):
        '''
        test_enumeration() checks the enumeration of n-filters and the lattice of filters.
        '''
        b = boolean_lattice(2)
        self.assertEqual(len(enumerate_n_filters(b, 1)), 5)
        self.assertEqual(len(enumerate_n_filters(b, 2)), 6)
        sizes = [u.count for u in enumerate_n_filters(boolean_lattice(3), 2)]
        self.assertEqual(sizes, sorted(sizes))
        fl = filter_lattice(b, 1)
        self.assertEqual(fl.size, 5)
        self.assertTrue(fl.is_lattice)
        self.assertTrue('{}' in fl.elements)
        self.assertTrue('{01,11}' in fl.elements)

    def test_primes(self):
        '''
        test_primes() checks prime upsets, m-prime elements, and unions of prime filters.
        '''
        logging.info('nflab: Testing primeness...')
        b = boolean_lattice(2)
        self.assertEqual(len(prime_filters(b)), 4)
        self.assertTrue(is_prime_upset(b, ['01', '10', '11']))
        self.assertFalse(is_prime_upset(b, ['11']))
        self.assertTrue(is_m_prime_element(b, '01', 1))
        self.assertFalse(is_m_prime_element(b, '00', 1))
        self.assertTrue(is_m_prime_element(b, '00', 2))
        self.assertTrue(is_m_prime_filter(b, ['11'], 2))
        self.assertFalse(is_m_prime_filter(b, ['11'], 1))
        # M5: a prime 2-filter that is not a union of prime filters
        m5 = M5()
        self.assertTrue(is_prime_upset(m5, m5.upset))
        self.assertTrue(is_n_filter(m5, m5.upset, 2))
        self.assertFalse(is_union_of_prime_filters(m5, m5.upset, 3))
        # N5: a prime union of two filters that is not a union of prime filters
        n5 = N5()
        self.assertTrue(is_prime_upset(n5, n5.upset))
        self.assertFalse(is_union_of_prime_filters(n5, n5.upset, 2))
        # nabla(2) is the union of its two prime filters
        s = nabla(2)
        self.assertTrue(is_union_of_prime_filters(s, s.upset, 2))
        self.assertFalse(is_union_of_prime_filters(s, s.upset, 1))

    def test_m_prime_n_filters(self):
        '''
        test_m_prime_n_filters() checks meet-primeness among the n-filters.
        '''
        logging.info('nflab: Testing m-prime n-filters...')
        s = dBA(2, 1)
        self.assertTrue(is_m_prime_n_filter(s, s.upset, 1, 2))
        t = fig3_right()
        self.assertTrue(is_n_filter(t, t.upset, 2))
        self.assertFalse(is_m_prime_n_filter(t, t.upset, 2, 2))
        w = m_prime_n_filter_witness(t, t.upset, 2, 2)
        self.assertEqual(len(w), 3)
        h = height(2, 1)
        with self.assertRaises(NotAnNFilter): is_m_prime_n_filter(h, h.upset, 1, 1)

    def test_decompose(self):
        '''
        test_decompose() checks the decomposition of prime n-filters into prime filters.
        '''
        logging.info('nflab: Testing prime decomposition...')
        s = nabla(2)
        d = decompose_prime_n_filter(s, s.upset)
        self.assertEqual(d.count, 2)
        self.assertEqual(sorted([u.names for u in d.parts]), [('01', '11'), ('10', '11')])
        t = nabla(3)
        d = decompose_prime_n_filter(t, t.upset)
        self.assertEqual(len(d), 3)
        union = 0
        for u in d:
            self.assertTrue(is_filter(t, u))
            self.assertTrue(is_prime_upset(t, u))
            union |= u.mask
        self.assertEqual(union, t.mask)
        b = boolean_lattice(2)
        self.assertEqual(decompose_prime_n_filter(b, []).count, 0)
        self.assertEqual(decompose_prime_n_filter(b, b.elements).count, 1)
        h = height(2, 1)
        with self.assertRaises(NotPrime): decompose_prime_n_filter(h, h.upset)
        m5 = M5()
        with self.assertRaises(NoDecomposition): decompose_prime_n_filter(m5, m5.upset)

    def test_separate(self):
        '''
        test_separate() checks the separation of an n-filter from a disjoint ideal by a prime
          n-filter.
        '''
        logging.info('nflab: Testing prime n-filter separation...')
        h = height(2, 1)
        b = h.algebra
        g = separate_prime_n_filter(b, h.upset, ['000'], 2)
        self.assertEqual(g.mask & h.mask, h.mask)
        self.assertFalse('000' in g)
        self.assertTrue(is_n_filter(b, g, 2))
        self.assertTrue(is_prime_upset(b, g))
        with self.assertRaises(NotIdeal):
            separate_prime_n_filter(b, h.upset, ['001', '010'], 2)
        with self.assertRaises(NotDisjoint):
            separate_prime_n_filter(b, h.upset, ['000', '001', '010', '011'], 2)
        with self.assertRaises(NotAnNFilter):
            separate_prime_n_filter(b, h.upset, ['000'], 1)
        m5 = M5()
        with self.assertRaises(NotDistributive):
            separate_prime_n_filter(m5, m5.upset, ['0'], 2)

####################################################################################################
# nflab/test/test_structures.py
# Tests of structures, homomorphisms, products, quotients, the gallery, and free algebras.

import unittest, logging

from nflab.util       import (config, SignatureMismatch, NotSubalgebra, NotStrict, BadParameter,
                              UnknownName, MalformedDocument, SizeCap)
from nflab.order      import (boolean_lattice, chain)
from nflab.structures import (Structure, Homomorphism, parse_structure, serialize_structure,
                              structure_to_json, to_structure, direct_product, dual_product,
                              direct_power, dual_power, complement_structure, tupled_hom,
                              restrict_structure, substructure_generated, generated_mask,
                              inclusion_hom, strict_image, congruence, iter_congruences,
                              quotient, strict_quotients, iter_homs, iter_strict_homs,
                              find_strict_hom, find_embedding, embeds, is_isomorphic, homs_into,
                              free_algebra, free_generators, canonical, gallery,
                              countermodel_gallery, iter_gallery,
                              nabla, dBA, height, fd, M5, boolean, fig3_left)
from . import lattices as fx

class TestStructures(unittest.TestCase):
    '''
    The TestStructures class tests the nflab.structures package.
    '''

    def test_structure_documents(self):
        '''
        test_structure_documents() checks parsing and serialization of structure documents.
        '''
        logging.info('nflab: Testing structure documents...')
        s = parse_structure(fx.b2_nabla)
        self.assertEqual(s, nabla(2))
        self.assertEqual(s.signature, 'boolean')
        self.assertEqual(parse_structure(serialize_structure(s)), s)
        self.assertEqual(structure_to_json(s)['upset'], ['01', '10', '11'])
        # the signature defaults to the strongest one the poset supports
        self.assertEqual(parse_structure(fx.n5).signature, 'lattice')
        self.assertEqual(parse_structure(fx.vee).signature, 'semilattice')
        with self.assertRaises(MalformedDocument):
            parse_structure(dict(fx.b2_nabla, signature='group'))
        with self.assertRaises(MalformedDocument):
            parse_structure(dict(fx.b2_nabla, upset='11'))
        # Boolean structures need a designated element
        with self.assertRaises(BadParameter): parse_structure(dict(fx.b2_nabla, upset=[]))
        self.assertEqual(to_structure(boolean_lattice(2)).signature, 'distributive')
        with self.assertRaises(SignatureMismatch):
            Structure(parse_structure(fx.n5).algebra, ['1'], 'distributive')

    def test_products(self):
        '''
        test_products() checks direct and dual products and their exchange under complements.
        '''
        logging.info('nflab: Testing products...')
        n1 = nabla(1)
        self.assertEqual(direct_power(n1, 2), boolean(2))
        self.assertEqual(dual_power(n1, 2), nabla(2))
        self.assertEqual(direct_product([n1, n1, n1]).names, ('111',))
        self.assertEqual(dual_product([n1, nabla(2)]).size, 8)
        self.assertEqual(len(dual_product([n1, nabla(2)]).names), 7)
        self.assertEqual(dBA(2, 2).size, 16)
        self.assertEqual(fig3_left(), dBA(2, 2))
        # the complement lives on the order dual and is an involution
        c = complement_structure(nabla(2))
        self.assertEqual(c.names, ('00',))
        self.assertEqual(complement_structure(c), nabla(2))
        # mixed signatures fall back to the common one
        self.assertEqual(direct_product([n1, M5()]).signature, 'lattice')

    def test_homomorphisms(self):
        '''
        test_homomorphisms() checks homomorphism objects, strictness, and the searches.
        '''
        logging.info('nflab: Testing homomorphism search...')
        (n1, n2) = (nabla(1), nabla(2))
        h = Homomorphism(n1, n2, [0, 3])
        self.assertTrue(h.strict)
        self.assertTrue(h.injective)
        self.assertFalse(h.surjective)
        self.assertEqual(h('1'), '11')
        self.assertEqual(h.to_json(), {'map': {'0': '00', '1': '11'}, 'strict': True})
        with self.assertRaises(SignatureMismatch): Homomorphism(n1, n2, [0, 1])
        # the two Boolean homomorphisms from B_2 onto B_1 are the projections
        homs = list(iter_homs(boolean_lattice(2), boolean_lattice(1), 'boolean'))
        self.assertEqual(len(homs), 2)
        self.assertEqual(homs_into(boolean_lattice(2), n1), (10, 12))
        # neither projection is strict for nabla(2)
        self.assertIsNone(find_strict_hom(n2, n1))
        self.assertEqual(list(iter_strict_homs(n2, n1)), [])
        self.assertEqual(find_embedding(n1, n2), h)
        self.assertTrue(embeds(n2, nabla(3)))
        self.assertFalse(embeds(nabla(3), n2))
        # as posets, B_2 maps injectively and monotonically onto the 4-chain but does not embed
        (bp, cp) = (Structure(boolean_lattice(2), (), 'poset'), Structure(chain(4), (), 'poset'))
        self.assertIsNotNone(find_strict_hom(bp, cp))
        self.assertIsNone(find_embedding(bp, cp))
        self.assertTrue(embeds(Structure(chain(3), (), 'poset'), bp))
        self.assertTrue(is_isomorphic(direct_power(n1, 2), boolean(2)))
        self.assertFalse(is_isomorphic(n2, boolean(2)))
        # tupling two copies of the identity yields the diagonal
        ident = Homomorphism(n1, n1, [0, 1])
        t = tupled_hom([ident, ident])
        self.assertEqual(t.mapping, (0, 3))
        self.assertTrue(t.strict)
        self.assertEqual(tupled_hom([ident, ident], dual=True).target, nabla(2))

    def test_substructures(self):
        '''
        test_substructures() checks subalgebra restriction and generation.
        '''
        s = nabla(2)
        r = restrict_structure(s, ['00', '11'])
        self.assertEqual(r.size, 2)
        self.assertEqual(r.names, ('11',))
        with self.assertRaises(NotSubalgebra): restrict_structure(s, ['00', '01'])
        self.assertEqual(substructure_generated(s, ['01']).size, 4)
        b = boolean_lattice(3)
        self.assertEqual(bin(generated_mask(b, b.mask(['001']), 'boolean')).count('1'), 4)
        self.assertEqual(bin(generated_mask(b, b.mask(['001']), 'lattice')).count('1'), 1)
        i = inclusion_hom(s, ['00', '11'])
        self.assertTrue(i.strict)
        self.assertTrue(i.injective)

    def test_quotients(self):
        '''
        test_quotients() checks congruences, quotients, and strict images.
        '''
        logging.info('nflab: Testing congruences and quotients...')
        b = boolean_lattice(2)
        cs = list(iter_congruences(b, 'boolean'))
        self.assertEqual(len(cs), 4)
        self.assertEqual(cs[0], (0, 1, 2, 3))
        self.assertEqual(cs[-1], (0, 0, 0, 0))
        self.assertEqual(congruence(b, [('00', '01')], 'boolean'), (0, 0, 2, 2))
        # nabla(2) has no proper strict quotient
        self.assertEqual(len(list(strict_quotients(nabla(2)))), 1)
        with self.assertRaises(NotStrict):
            quotient(nabla(2), congruence(b, [('00', '01')], 'boolean'))
        s = Structure(b, ['10', '11'], 'boolean')
        qs = list(strict_quotients(s))
        self.assertEqual(len(qs), 2)
        (q, h) = qs[-1]
        self.assertEqual(q.size, 2)
        self.assertTrue(h.strict)
        self.assertTrue(h.surjective)
        self.assertTrue(is_isomorphic(q, nabla(1)))
        self.assertEqual(strict_image(h), q)

    def test_gallery(self):
        '''
        test_gallery() checks the gallery names, parameters, and a few structures.
        '''
        self.assertEqual(canonical('nabla(2)'), nabla(2))
        self.assertEqual(canonical('NABLA', 2), nabla(2))
        self.assertEqual(canonical('height(2,1)'), height(2, 1))
        self.assertEqual(canonical('m5'), M5())
        self.assertEqual(nabla(0).size, 1)
        self.assertEqual(nabla(0).mask, 0)
        self.assertEqual(fd(2).size, 4)
        self.assertEqual(len(fd(2).names), 3)
        self.assertEqual(canonical('chain', 3).names, ('2',))
        with self.assertRaises(UnknownName): canonical('nope')
        with self.assertRaises(BadParameter): canonical('nabla')
        with self.assertRaises(BadParameter): canonical('nabla(2)', 3)
        with self.assertRaises(BadParameter): canonical('height', 0, 1)
        self.assertTrue('dba' in gallery)
        names = [name for (name, s) in iter_gallery()]
        self.assertEqual(tuple(names), countermodel_gallery)

    def test_free_algebras(self):
        '''
        test_free_algebras() checks the sizes and generators of the finite free algebras.
        '''
        logging.info('nflab: Testing free algebras...')
        self.assertEqual([free_algebra('distributive', k).size for k in range(1, 5)],
                         [1, 4, 18, 166])
        self.assertTrue(free_algebra('distributive', 3).is_distributive)
        self.assertEqual(free_algebra('semilattice', 3).size, 7)
        self.assertEqual(free_algebra('unital_semilattice', 3).size, 8)
        self.assertEqual(free_algebra('boolean', 2).size, 16)
        self.assertEqual(free_algebra('lattice', 2), free_algebra('distributive', 2))
        p = free_algebra('distributive', 2)
        self.assertEqual(tuple([p.elements[g] for g in free_generators(p)]), ('x', 'y'))
        self.assertEqual(p.elements, ('x&y', 'x', 'y', 'x|y'))
        with self.assertRaises(BadParameter): free_algebra('lattice', 3)
        with self.assertRaises(SizeCap): free_algebra('boolean', 4)
        self.assertEqual(config['size_cap'], 4096)

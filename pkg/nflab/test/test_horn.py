####################################################################################################
# nflab/test/test_horn.py
# Tests of terms, filter implications, model checking, the rule families, and entailment.

import unittest, logging

from nflab.util       import (infinity, RuleSyntaxError, SignatureMismatch, BadParameter,
                              UnknownName, SizeCap, TooManyVariables, NotAFilterImplication)
from nflab.order      import (boolean_lattice, iter_upset_masks)
from nflab.structures import (Structure, iter_strict_homs, nabla, M5, boolean)
from nflab.horn       import (Implication, var, meet, join, neg, top, parse_term, tokenize,
                              term_to_json, term_from_json, parse_implication, implication_to_json,
                              implication_from_json, holds_in, check_rule, counterexample,
                              find_countermodel, builtin_rule, alpha, beta, gamma, adjunction,
                              subst_adjunction, clause_count, complete_clauses, parse_class,
                              class_label, entails_class)
from . import lattices as fx

class TestHorn(unittest.TestCase):
    '''
    The TestHorn class tests the nflab.horn package.
    '''

    def test_terms(self):
        '''
        test_terms() checks term construction, printing, and parsing.
        '''
        logging.info('nflab: Testing terms...')
        (x, y, z) = (var('x'), var('y'), var('z'))
        self.assertEqual(parse_term('x & y'), x & y)
        self.assertEqual(parse_term('x & (y & z)'), meet(x, y, z))
        self.assertEqual(parse_term('~(x | y) & z').text, '~(x | y) & z')
        self.assertEqual(parse_term('x | y & z').text, 'x | y & z')
        self.assertEqual(parse_term('(x | y) & z').text, '(x | y) & z')
        self.assertEqual(parse_term('x ∧ ¬y'), x & ~y)
        self.assertEqual(parse_term('1'), top)
        self.assertEqual(meet(), top)
        self.assertEqual(join(x), x)
        self.assertEqual(parse_term('~x | y').variables, ('x', 'y'))
        self.assertEqual(neg(x).operations, frozenset(['neg']))
        self.assertEqual(term_from_json(term_to_json(parse_term('~(x & 0) | y'))),
                         parse_term('~(x & 0) | y'))
        self.assertEqual(tokenize('x |- y')[1][0], 'turnstile')

    def test_parse_rules(self):
        '''
        test_parse_rules() checks rule parsing, signatures, and syntax errors with positions.
        '''
        r = parse_implication('x & y, y & z, z & x |- x & y & z')
        self.assertEqual(r.text, 'x & y, y & z, z & x |- x & y & z')
        self.assertEqual(r.variables, ('x', 'y', 'z'))
        self.assertEqual(r.effective_signature, 'semilattice')
        self.assertTrue(r.equality_free)
        a = parse_implication(fx.alpha2_text)
        self.assertEqual(a.effective_signature, 'boolean')
        self.assertEqual(a.text, fx.alpha2_text)
        e = parse_implication('x = y & z, x |- z')
        self.assertEqual(len(e.equations), 1)
        self.assertFalse(e.equality_free)
        self.assertFalse(parse_implication('x |- x = y').is_filter_implication)
        self.assertEqual(parse_implication('|- 1').premises, ())
        self.assertEqual(implication_from_json(implication_to_json(e)), e)
        self.assertEqual(implication_from_json({'text': fx.adjunction1_text}),
                         parse_implication(fx.adjunction1_text))
        with self.assertRaises(SignatureMismatch):
            parse_implication('x |- ~y', 'lattice').effective_signature
        for (text, pos) in [('x, |- y', 3), ('x |-', 4), ('x $ y', 2), ('x & y', 5)]:
            with self.assertRaises(RuleSyntaxError) as cm: parse_implication(text)
            self.assertEqual(cm.exception.position, pos)

    def test_model_checking(self):
        '''
        test_model_checking() checks alpha(2) and 1-adjunction in nabla(1) and nabla(2).
        '''
        logging.info('nflab: Testing model checking...')
        (n1, n2) = (nabla(1), nabla(2))
        self.assertTrue(holds_in(n1, fx.alpha2_text))
        self.assertFalse(holds_in(n2, fx.alpha2_text))
        self.assertEqual(dict(counterexample(n2, fx.alpha2_text)), {'x': '01', 'y': '00'})
        self.assertTrue(holds_in(n1, fx.adjunction1_text))
        self.assertEqual(check_rule(n2, fx.adjunction1_text),
                         {'holds': False, 'witness': {'x': '01', 'y': '10'}})
        self.assertEqual(check_rule(n1, fx.adjunction1_text), {'holds': True, 'witness': None})
        # every n-filter satisfies n-adjunction
        for n in range(1, 4):
            self.assertTrue(holds_in(nabla(n), adjunction(n)))
            if n > 1: self.assertFalse(holds_in(nabla(n), adjunction(n - 1)))
        # equations and equational conclusions
        self.assertTrue(holds_in(M5(), 'x = y & z, x |- z'))
        self.assertFalse(holds_in(n1, 'x |- x = y'))
        self.assertTrue(holds_in(boolean(2), '|- 1'))
        with self.assertRaises(SignatureMismatch): holds_in(M5(), fx.alpha2_text)

    def test_rule_families(self):
        '''
        test_rule_families() checks the texts of the builtin rule families.
        '''
        self.assertEqual(alpha(1).text, 'x |- y')
        self.assertEqual(alpha(2).text, fx.alpha2_text)
        self.assertEqual(alpha(3).text, 'x & y, x & ~y, ~x & y |- ~x & ~y')
        self.assertEqual(alpha(4).text, 'x & y, x & ~y, ~x & y, ~x & ~y |- z')
        self.assertEqual(beta(2).text, 'x, y, ~(x & y) |- z')
        self.assertEqual(gamma(1, 1).text, 'x, ~x |- 0')
        self.assertEqual(adjunction(1).text, fx.adjunction1_text)
        self.assertEqual(adjunction(2).text, 'x & y, x & z, y & z |- x & y & z')
        self.assertEqual(subst_adjunction(2).text, 'x & z, y & z |- x & y & z')
        self.assertEqual(clause_count(5), 3)
        self.assertEqual(len(complete_clauses(3)), 8)
        self.assertEqual(builtin_rule('alpha(2)'), alpha(2))
        self.assertEqual(builtin_rule('gamma', 2, 3), gamma(2, 3))
        with self.assertRaises(UnknownName):  builtin_rule('delta(1)')
        with self.assertRaises(BadParameter): builtin_rule('alpha(0)')
        with self.assertRaises(BadParameter): builtin_rule('gamma(2,1)')
        with self.assertRaises(BadParameter): builtin_rule('adjunction', 1, 2)

    def test_countermodels(self):
        '''
        test_countermodels() checks the countermodel search over the gallery and the enumerations.
        '''
        logging.info('nflab: Testing countermodel search...')
        (s, w) = find_countermodel(alpha(2))
        self.assertEqual(s, nabla(2))
        self.assertEqual(dict(w), {'x': '01', 'y': '00'})
        res = find_countermodel(adjunction(1), 'distributive', 4)
        self.assertIsNotNone(res)
        self.assertFalse(holds_in(res[0], adjunction(1)))
        self.assertIsNone(find_countermodel(adjunction(1), 'distributive', 4, degree=1))
        self.assertIsNone(find_countermodel('x & y |- x'))
        with self.assertRaises(BadParameter): find_countermodel(alpha(2), 'nope')
        with self.assertRaises(SizeCap): find_countermodel(alpha(2), 'boolean', 17)

    def test_entailment(self):
        '''
        test_entailment() checks entailment relative to the n-filter classes.
        '''
        logging.info('nflab: Testing class entailment...')
        self.assertEqual(parse_class('DL(2)'), ('distributive', 2))
        self.assertEqual(parse_class('BA(inf)'), ('boolean', infinity))
        self.assertEqual(parse_class('SL_3'), ('semilattice', 3))
        self.assertEqual(parse_class('uSL', 1), ('unital_semilattice', 1))
        self.assertEqual(class_label('boolean', infinity), 'BA(inf)')
        self.assertEqual(class_label('unital_semilattice', 2), 'uSL(2)')
        with self.assertRaises(UnknownName): parse_class('XY(2)')
        self.assertTrue(entails_class(fx.adjunction1_text, 'DL(1)'))
        self.assertFalse(entails_class(fx.adjunction1_text, 'DL(2)'))
        self.assertTrue(entails_class(fx.adjunction1_text, 'SL(1)'))
        self.assertFalse(entails_class(fx.adjunction1_text, 'uSL(2)'))
        self.assertTrue(entails_class(fx.alpha2_text, 'BA(1)'))
        self.assertFalse(entails_class(fx.alpha2_text, 'BA(2)'))
        self.assertFalse(entails_class('x |- y', 'BA(inf)'))
        self.assertTrue(entails_class('x = y & z, x |- z', 'DL(1)'))
        self.assertTrue(entails_class(adjunction(2), 'DL(2)'))
        with self.assertRaises(NotAFilterImplication): entails_class('x |- x = y', 'DL(1)')
        with self.assertRaises(SignatureMismatch): entails_class(fx.alpha2_text, 'DL(1)')
        with self.assertRaises(TooManyVariables): entails_class(adjunction(3), 'DL(3)')

    def test_preimage_preservation(self):
        '''
        test_preimage_preservation() checks that a rule holding in a structure also holds in every
          structure that maps onto it by a strict surjective homomorphism.
        '''
        logging.info('nflab: Testing rule preservation under strict preimages...')
        rules = [alpha(1), alpha(2), beta(1), gamma(1, 1), adjunction(1),
                 parse_implication('x |- x | y')]
        ss = [Structure(boolean_lattice(k), m, 'boolean')
              for k in (1, 2, 3) for m in iter_upset_masks(boolean_lattice(k)) if m]
        checked = 0
        for a in ss:
            for b in ss:
                if b.size > a.size: continue
                for h in iter_strict_homs(a, b):
                    if not h.surjective: continue
                    checked += 1
                    for r in rules:
                        if holds_in(b, r): self.assertTrue(holds_in(a, r), r.text)
        self.assertTrue(checked > 0)

    def test_single_premise(self):
        '''
        test_single_premise() checks that a rule is entailed by DL(inf) exactly when one of its
          premises alone entails the conclusion, and that the small distributive lattices agree.
        '''
        cases = [('x, y |- x & y', False), ('x, y |- x | z', True), ('x & y, z |- y', True),
                 ('x, y |- (x & y) | z', False), ('x, y & z |- z', True),
                 ('x | y, x & z |- x', True), ('x, y |- z', False), ('x | y, z |- x | z', True)]
        for (text, expected) in cases:
            r = parse_implication(text)
            self.assertEqual(len(r.premises), 2)
            singles = [Implication(r.equations, [g], r.conclusion) for g in r.premises]
            self.assertEqual(entails_class(r, 'DL(inf)'), expected, text)
            self.assertEqual(any(entails_class(s, 'DL(inf)') for s in singles), expected, text)
            self.assertEqual(find_countermodel(r, 'distributive', 4) is None, expected, text)

    def test_class_monotonicity(self):
        '''
        test_class_monotonicity() checks that a rule entailed by a class of n-filters is entailed by
          every class of m-filters with m <= n.
        '''
        dl = [adjunction(1), adjunction(2), parse_implication('x, y |- x | z'),
              parse_implication('x, y |- (x & y) | z')]
        ba = [alpha(1), alpha(2), alpha(3), beta(1), gamma(1, 1), gamma(2, 2)]
        for (fam, rules) in (('DL', dl), ('BA', ba)):
            for r in rules:
                es = [entails_class(r, '%s(%s)' % (fam, n)) for n in (1, 2, 3, 'inf')]
                self.assertEqual(es, sorted(es, reverse=True), r.text)
        self.assertEqual([entails_class(adjunction(2), 'DL(%d)' % n) for n in (1, 2, 3)],
                         [True, True, False])

####################################################################################################
# nflab/horn/__init__.py
# Terms, filter implications, model checking, builtin rule families, and entailment.

'''
The nflab.horn package contains the term language and its parser, the Implication type with model
checking and countermodel search, the builtin rule families, and class entailment through free
algebras.
'''

from .terms       import (Term, is_term, to_term, var, meet, join, neg, top, bottom,
                          tokenize, parse_term, term_to_json, term_from_json, evaluate)
from .core        import (Implication, is_implication, to_implication, parse_implication,
                          implication_to_json, implication_from_json, operations_signature,
                          check_compatible, counterexample, holds_in, check_rule,
                          countermodel_modes, find_countermodel)
from .rules       import (rule_families, builtin_rule, alpha, beta, gamma, adjunction,
                          subst_adjunction, complete_clauses, clause_count, variable_names)
from .entailment  import (class_families, parse_class, class_label, free_model, entails_class,
                          max_entailment_variables)

####################################################################################################
# nflab/classes/__init__.py
# Filter-class membership, splitting checks, and the theorem suites.

'''
The nflab.classes package decides membership in the filter and logical classes generated by finite
structures, checks the splitting dichotomy and the product-class criterion for Boolean structures,
and runs the named theorem suites.
'''

from .core   import (FilterClassSpec, is_class_spec, to_class_spec, closures, preimage_closure,
                     class_membership, generating_set, free_cover, branches, splitting_evidence,
                     splitting_check, product_generator, product_class_check, gamma_criterion,
                     atom_count)
from .suites import (TheoremSuite, suites, suite_names, run_theorem_suite, suite_passed)

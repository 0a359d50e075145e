####################################################################################################
# nflab/util/__init__.py
# This file defines the general tools that are available as part of nflab.

from .conf     import (config, loadrc, to_positive_int)
from .core     import (ObjectWithMetaData, check_size,
                       to_mask, bits, popcount, full_mask, mask_to_array, array_to_mask,
                       infinity, is_degree, to_degree, degree_str,
                       NFLabError, DuplicateElement, CycleDetected, UnknownElementName,
                       MalformedDocument, SizeCap, NoMeet, EmptyWithoutTop, NotAnUpset,
                       NotMeetSemilattice, NotAnNFilter, NotNFilter, NoDecomposition, NotPrime,
                       NotDisjoint, NotIdeal, NotDistributive, SignatureMismatch, NotSurjective,
                       NotStrict, NotSubalgebra, BadParameter, RuleSyntaxError, TooManyVariables,
                       NotAFilterImplication, DichotomyViolated, UnknownSuite, UnknownName)

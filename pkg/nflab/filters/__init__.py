####################################################################################################
# nflab/filters/__init__.py
# n-filters on finite posets and semilattices.

'''
The nflab.filters package contains the n-filter predicates, n-filter generation and enumeration,
primeness tests, prime decomposition, and prime n-filter separation.
'''

from .core       import (to_algebra, n_filter_witness, is_n_filter, is_filter, is_n_ideal,
                         min_filter_degree, incompatibility_graph, filter_cover_clique,
                         filter_cover_number, is_union_of_filters)
from .generation import (generation_step, generate_n_filter, fg, generate_n_filter_oracle,
                         generation_methods, join_irreducibles, enumerate_n_filters,
                         n_filter_masks, filter_lattice)
from .primes     import (is_ideal, is_directed_down_mask, is_prime_upset, is_m_prime_element,
                         m_prime_n_filter_witness, is_m_prime_n_filter, prime_filters,
                         is_m_prime_filter, is_union_of_prime_filters,
                         PrimeDecomposition, decompose_prime_n_filter, separate_prime_n_filter)

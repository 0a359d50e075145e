####################################################################################################
# nflab/order/__init__.py
# Finite posets, their algebraic signatures, upsets, and enumeration.

'''
The nflab.order package contains the FinitePoset type and the functions for classifying, building,
parsing, and enumerating finite posets and their upsets.
'''

from .core      import (FinitePoset, AlgebraKind, Upset, SubposetWitness,
                        is_poset, is_upset, to_upset, upward_closure, total_upset, empty_upset,
                        signature_operations, signatures, is_signature, common_signature,
                        poset, from_leq, parse_poset, poset_to_json, serialize_poset,
                        boolean_lattice, chain, dual_poset, subposet,
                        classify_algebra, meet_mask, meet_of_set, is_m5_n5_free,
                        distributive_semilattice_witness,
                        is_ideal_subposet, is_ideal_subposet_witness)
from .enumerate import (canonical_form, canonical_permutation, relabel,
                        iter_posets, iter_lattices, iter_distributive_lattices,
                        iter_meet_semilattices, iter_distributive_semilattices,
                        iter_boolean_lattices, iter_upsets, iter_upset_masks)

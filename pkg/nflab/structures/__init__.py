####################################################################################################
# nflab/structures/__init__.py
# Structures <A, F>, homomorphisms, products, quotients, the gallery, and free algebras.

'''
The nflab.structures package contains the Structure and Homomorphism types, direct and dual
products, substructures, congruences and strict images, the homomorphism and embedding searches,
the gallery of canonical structures, and the finite free algebras.
'''

from .core    import (Structure, Homomorphism, is_structure, to_structure, is_homomorphism_object,
                      nonempty_signatures, default_signature, common_signature,
                      structure_to_json, serialize_structure, parse_structure,
                      homomorphism_violation, is_homomorphism, preimage_mask, image_mask,
                      product_poset, direct_product, dual_product, direct_power, dual_power,
                      complement_structure, tupled_hom,
                      is_subalgebra_mask, restrict_structure, generated_mask,
                      substructure_generated, inclusion_hom,
                      strict_image, congruence, iter_congruences, is_saturated, quotient,
                      strict_quotients)
from .search  import (iter_homs, iter_strict_homs, find_strict_hom, find_embedding, embeds,
                      is_isomorphic, homs_into)
from .free    import (free_algebra, free_generators, generator_names)
from .gallery import (canonical, gallery, gallery_parameters, countermodel_gallery, iter_gallery,
                      nabla, dBA, height, boolean, fig2, fig2_top, M5, N5, fig3_left, fig3_right,
                      fd)

####################################################################################################
# nflab/__init__.py

'''Tools for exploring n-filters on finite semilattices, distributive lattices, and Boolean
algebras, and the filter classes and filter implications they determine.'''

submodules = ('nflab.util.conf',
              'nflab.util.core',
              'nflab.util',
              'nflab.order.core',
              'nflab.order.enumerate',
              'nflab.order',
              'nflab.filters.core',
              'nflab.filters.generation',
              'nflab.filters.primes',
              'nflab.filters',
              'nflab.structures.core',
              'nflab.structures.search',
              'nflab.structures.free',
              'nflab.structures.gallery',
              'nflab.structures',
              'nflab.horn.terms',
              'nflab.horn.core',
              'nflab.horn.rules',
              'nflab.horn.entailment',
              'nflab.horn',
              'nflab.io.core',
              'nflab.io',
              'nflab.classes.core',
              'nflab.classes.suites',
              'nflab.classes',
              'nflab.commands.core',
              'nflab.commands.check',
              'nflab.commands.generate',
              'nflab.commands.primes',
              'nflab.commands.homs',
              'nflab.commands.rule',
              'nflab.commands.classes',
              'nflab.commands.verify',
              'nflab.commands.gallery',
              'nflab.commands')
'''nflab.submodules is a tuple of all the sub-modules of nflab in a loadable order.'''

def reload_nflab():
    '''
    reload_nflab() reloads all of the modules of nflab and returns the reloaded nflab module. This
    is similar to reload(nflab) except that it reloads all the nflab submodules prior to reloading
    nflab.

    Example:
      import nflab as nf
      # ... some nonsense that breaks the library ...
      nf = nf.reload_nflab()
    '''
    import sys, six
    if not six.PY2:
        try:    from importlib import reload
        except: from imp import reload
    for mdl in submodules:
        if mdl in sys.modules:
            sys.modules[mdl] = reload(sys.modules[mdl])
    return reload(sys.modules['nflab'])

from   .util       import (config, infinity, to_degree, NFLabError)
from   .order      import (FinitePoset, Upset, poset, from_leq, parse_poset, serialize_poset,
                           boolean_lattice, chain, dual_poset, to_upset, is_poset, is_upset,
                           iter_posets, iter_lattices, iter_distributive_lattices,
                           iter_meet_semilattices, iter_distributive_semilattices, iter_upsets)
from   .filters    import (is_n_filter, n_filter_witness, is_n_ideal, generate_n_filter, fg,
                           generate_n_filter_oracle, is_prime_upset, is_m_prime_n_filter,
                           decompose_prime_n_filter, separate_prime_n_filter, filter_lattice)
from   .structures import (Structure, Homomorphism, is_structure, to_structure, parse_structure,
                           serialize_structure, direct_product, dual_product, find_strict_hom,
                           find_embedding, iter_homs, iter_strict_homs, canonical, nabla, dBA,
                           height, free_algebra, strict_image, quotient)
from   .horn       import (Implication, parse_implication, holds_in, check_rule,
                           find_countermodel, entails_class, builtin_rule, alpha, beta, gamma)
from   .classes    import (FilterClassSpec, class_membership, splitting_check,
                           product_class_check, run_theorem_suite, suite_names)
from   .io         import (load, save)
from . import util
from . import order
from . import filters
from . import structures
from . import horn
from . import classes
from . import io

# Version information...
__version__ = '0.1.0'

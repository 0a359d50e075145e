####################################################################################################
# nflab/commands/__init__.py
# The subcommands that can be run when nflab is invoked as a command.

'''
The nflab.commands package contains the implementations of the nflab command-line subcommands.
Each is a function main(args) that yields an exit code: 0 when the computed predicate holds (or the
suite passed), 1 when it does not, and 2 for usage and input errors.
'''

import pyrsistent as _pyr

from . import check    as _chk
from . import generate as _gen
from . import primes   as _prm
from . import homs     as _hom
from . import rule     as _rul
from . import classes  as _cls
from . import verify   as _ver
from . import gallery  as _gal

# The commands that can be run by main:
commands = _pyr.pmap({'check':       _chk.main,
                      'generate':    _gen.main,
                      'decompose':   _prm.decompose_main,
                      'separate':    _prm.separate_main,
                      'hom':         _hom.hom_main,
                      'embed':       _hom.embed_main,
                      'product':     _hom.product_main,
                      'dualproduct': _hom.dualproduct_main,
                      'rule':        _rul.main,
                      'class':       _cls.main,
                      'verify':      _ver.main,
                      'gallery':     _gal.gallery_main,
                      'export-dot':  _gal.export_dot_main})

__all__ = ['commands']

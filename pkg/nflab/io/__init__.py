####################################################################################################
# nflab/io/__init__.py

'''
nflab.io is a namespace that contains tools for loading and saving nflab objects: structure and
poset documents (JSON), rules (.rule text files), and Hasse diagrams (DOT).
'''

from .core import (load, save, importer, exporter, forget_importer, forget_exporter,
                   importers, exporters, guess_import_format, guess_export_format,
                   normalize, denormalize, load_json, save_json, load_rule, save_rule,
                   to_dot, export_dot, save_dot)

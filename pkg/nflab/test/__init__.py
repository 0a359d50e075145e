####################################################################################################
# nflab/test/__init__.py
# Tests for the nflab library.

'''
The nflab.test package contains the unit tests of the nflab library; run them with
python -m unittest nflab.test (or with pytest).
'''

import unittest, logging

logging.getLogger().setLevel(logging.INFO)

from .test_order      import TestOrder
from .test_filters    import TestFilters
from .test_structures import TestStructures
from .test_horn       import TestHorn
from .test_classes    import TestClasses
from .test_io         import TestIO
from .test_commands   import TestCommands

if __name__ == '__main__':
    unittest.main()

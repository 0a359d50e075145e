####################################################################################################
# nflab/test/lattices.py
# Small posets, lattices, and structures used by the nflab tests, written as JSON documents.

# <B_2, nabla_2>: the four-element Boolean lattice with its non-zero elements designated.
b2_nabla = {'elements':  ['00', '01', '10', '11'],
            'covers':    [['00', '01'], ['00', '10'], ['01', '11'], ['10', '11']],
            'upset':     ['01', '10', '11'],
            'signature': 'boolean'}

# The same carrier with only the top designated (a filter).
b2_top = {'elements':  ['00', '01', '10', '11'],
          'covers':    [['00', '01'], ['00', '10'], ['01', '11'], ['10', '11']],
          'upset':     ['11'],
          'signature': 'boolean'}

# The five-element diamond with its non-zero elements designated.
m5 = {'elements': ['0', 'a', 'b', 'c', '1'],
      'covers':   [['0', 'a'], ['0', 'b'], ['0', 'c'], ['a', '1'], ['b', '1'], ['c', '1']],
      'upset':    ['a', 'b', 'c', '1']}

# The five-element pentagon 0 < a < b < 1, 0 < c < 1 with the coatoms generating the upset.
n5 = {'elements': ['0', 'a', 'b', 'c', '1'],
      'covers':   [['0', 'a'], ['a', 'b'], ['b', '1'], ['0', 'c'], ['c', '1']],
      'upset':    ['b', 'c', '1']}

# The three-element meet semilattice 0 < a, 0 < b (no top, hence not distributive); the upset
# {a, b} is a union of two filters but not a filter.
vee = {'elements': ['0', 'a', 'b'],
       'covers':   [['0', 'a'], ['0', 'b']],
       'upset':    ['a', 'b']}

# A poset that is not a meet semilattice: two minimal elements below two maximal elements.
bowtie = {'elements': ['a', 'b', 'c', 'd'],
          'covers':   [['a', 'c'], ['a', 'd'], ['b', 'c'], ['b', 'd']]}

# A meet semilattice that is not distributive: 0 < a < c, 0 < b < c, 0 < d with a, b, d atoms and
# c above a and b only; a & b = 0 <= d while d is no meet of elements above a and b.
nondist = {'elements': ['0', 'a', 'b', 'c', 'd'],
           'covers':   [['0', 'a'], ['0', 'b'], ['0', 'd'], ['a', 'c'], ['b', 'c']]}

# Malformed documents.
cyclic = {'elements': ['a', 'b'], 'covers': [['a', 'b'], ['b', 'a']]}
duplicate = {'elements': ['a', 'a'], 'covers': []}
unknown = {'elements': ['a', 'b'], 'covers': [['a', 'c']]}

# Rules as text.
alpha2_text = 'x, ~x |- y'
adjunction1_text = 'x, y |- x & y'

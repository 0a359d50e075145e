####################################################################################################
# nflab/classes/suites.py
# Named theorem suites: exhaustive small-model checks of the n-filter, structure, rule, and class
# results, sharded over worker processes and reported as JSON-friendly dictionaries.

import pyrsistent as pyr
import itertools, functools, logging, json, pimms

from concurrent.futures import ProcessPoolExecutor

from ..util       import (config, bits, NFLabError, UnknownSuite,
                          DichotomyViolated, NoDecomposition)
from ..order      import (Upset, SubposetWitness, poset_to_json, parse_poset, boolean_lattice,
                          subposet, is_ideal_subposet,
                          iter_meet_semilattices, iter_distributive_semilattices,
                          iter_distributive_lattices, iter_upset_masks)
from ..filters    import (n_filter_witness, is_n_filter, is_n_ideal, min_filter_degree,
                          is_union_of_filters, generation_step, generate_n_filter,
                          generate_n_filter_oracle, n_filter_masks, filter_lattice,
                          is_prime_upset, is_m_prime_n_filter, is_m_prime_filter,
                          is_union_of_prime_filters, decompose_prime_n_filter,
                          separate_prime_n_filter)
from ..structures import (Structure, canonical, nabla, dBA, height, find_strict_hom,
                          find_embedding, homs_into, iter_homs, strict_quotients, product_poset,
                          is_subalgebra_mask, iter_gallery)
from ..horn       import (alpha, beta, gamma, adjunction, subst_adjunction, holds_in,
                          entails_class, parse_implication, find_countermodel)
from .core        import (FilterClassSpec, class_membership, splitting_check, product_generator,
                          product_class_check, gamma_criterion)

####################################################################################################
# Candidate payloads
# Candidates are plain dictionaries so that they can be shipped to worker processes.

def _poset_payload(p, **kw):
    kw['poset'] = poset_to_json(p)
    return kw
@functools.lru_cache(maxsize=64)
def _cached_poset(key):
    return parse_poset(key)
def _payload_poset(d):
    return _cached_poset(json.dumps(d['poset'], sort_keys=True))
def _fail(check, **detail):
    return {'check': check, 'detail': detail}
def _names(p, mask): return list(p.names(mask))

def _upsets(p, nonempty=False):
    return [m for m in iter_upset_masks(p) if m or not nonempty]

####################################################################################################
# definition-equivalence

def _defeq_candidates(bound):
    for p in iter_meet_semilattices(bound): yield _poset_payload(p)
def _defeq_check(d):
    p = _payload_poset(d)
    res = []
    for m in _upsets(p):
        u = Upset(p, m)
        for n in range(1, p.size + 1):
            r = n_filter_witness(p, u, n, method='restricted') is None
            f = n_filter_witness(p, u, n, method='full') is None
            if r != f: res.append(_fail('restricted-vs-full', upset=_names(p, m), n=n,
                                        restricted=r, full=f))
    return res

####################################################################################################
# generation

def _generation_candidates(bound):
    yield {'gallery': 'fig2'}
    for p in iter_distributive_semilattices(bound): yield _poset_payload(p)
def _generation_check(d):
    if 'gallery' in d:
        s = canonical(d['gallery'])
        (p, u) = (s.algebra, s.upset)
        one = generation_step(p, u, 2).mask
        fix = generate_n_filter(p, u, 2, method='fixpoint').mask
        orc = generate_n_filter_oracle(p, u, 2).mask
        res = []
        if one == fix: res.append(_fail('one-step-equals-fixpoint', upset=_names(p, one)))
        if fix != orc: res.append(_fail('fixpoint-vs-oracle', fixpoint=_names(p, fix),
                                        oracle=_names(p, orc)))
        for x in ('a', 'b'):
            if not (fix >> p.index_of(x)) & 1: res.append(_fail('missing-generated', element=x))
        return res
    p = _payload_poset(d)
    res = []
    for m in _upsets(p):
        u = Upset(p, m)
        for n in (1, 2, 3):
            g = generate_n_filter(p, u, n).mask
            o = generate_n_filter_oracle(p, u, n).mask
            if g != o: res.append(_fail('generated-vs-oracle', upset=_names(p, m), n=n,
                                        generated=_names(p, g), oracle=_names(p, o)))
    return res

####################################################################################################
# prime-nfilter-characterization

def _pchar_candidates(bound):
    for p in iter_distributive_lattices(bound): yield _poset_payload(p, lattice=True)
    for p in iter_distributive_semilattices(min(bound, 7)):
        if not p.is_lattice: yield _poset_payload(p, lattice=False)
def _pchar_check(d):
    p = _payload_poset(d)
    res = []
    for m in _upsets(p):
        u = Upset(p, m)
        prime = is_prime_upset(p, u)
        for n in (1, 2, 3):
            a = prime and is_n_filter(p, u, n)
            b = prime and is_union_of_filters(p, u, n)
            c = is_union_of_prime_filters(p, u, n)
            vals = [a, b, c]
            if d['lattice']:
                s = Structure(p, m, 'distributive')
                vals.append(find_strict_hom(s, nabla(n), 'distributive') is not None)
            if len(set(vals)) != 1:
                res.append(_fail('characterization', upset=_names(p, m), n=n, values=vals))
    return res

####################################################################################################
# counterexample-gallery

_gallery_cases = ('m5', 'n5', 'fig3_right')
def _cgal_candidates(bound):
    for c in _gallery_cases: yield {'case': c}
def _cgal_check(d):
    case = d['case']
    res = []
    if case == 'm5':
        s = canonical('M5')
        (p, u) = (s.algebra, s.upset)
        if not (is_prime_upset(p, u) and is_n_filter(p, u, 2)):
            res.append(_fail('m5-prime-2-filter'))
        try:
            decompose_prime_n_filter(p, u)
            res.append(_fail('m5-decomposed'))
        except NoDecomposition: pass
        if find_strict_hom(s, nabla(2)) is not None: res.append(_fail('m5-hom-to-nabla2'))
    elif case == 'n5':
        s = canonical('N5')
        (p, u) = (s.algebra, s.upset)
        if not (is_prime_upset(p, u) and is_union_of_filters(p, u, 2)):
            res.append(_fail('n5-prime-union-of-2-filters'))
        if find_strict_hom(s, nabla(2)) is not None: res.append(_fail('n5-hom-to-nabla2'))
    else:
        s = canonical('fig3_right')
        (p, u) = (s.algebra, s.upset)
        if not is_n_filter(p, u, 2): res.append(_fail('fig3-2-filter'))
        if not is_n_ideal(p, p.full & ~u.mask, 2): res.append(_fail('fig3-2-ideal'))
        if is_m_prime_n_filter(p, u, 2, 2): res.append(_fail('fig3-2-prime'))
    return res

####################################################################################################
# separation

def _ideals(p):
    return [0] + [p.down_masks[x] for x in range(p.size)]
def _sep_candidates(bound):
    for p in iter_distributive_lattices(bound): yield _poset_payload(p)
def _sep_check(d):
    p = _payload_poset(d)
    res = []
    for n in (1, 2, 3):
        fs = n_filter_masks(p, n)
        primes = [g for g in fs if is_prime_upset(p, Upset(p, g))]
        for f in fs:
            inter = p.full
            for g in primes:
                if (f & ~g) == 0: inter &= g
            if inter != f: res.append(_fail('intersection-of-primes', upset=_names(p, f), n=n))
            for i in _ideals(p):
                if f & i: continue
                try: g = separate_prime_n_filter(p, Upset(p, f), bits(i), n).mask
                except NFLabError as e:
                    res.append(_fail('separation-error', upset=_names(p, f), ideal=_names(p, i),
                                     n=n, error=str(e)))
                    continue
                ok = (f & ~g) == 0 and not (g & i) and is_n_filter(p, Upset(p, g), n) and \
                     is_prime_upset(p, Upset(p, g))
                if not ok: res.append(_fail('separation', upset=_names(p, f), n=n,
                                            ideal=_names(p, i), result=_names(p, g)))
    return res

####################################################################################################
# m-prime-characterization

def _mprime_candidates(bound):
    for p in iter_distributive_lattices(bound): yield _poset_payload(p)
def _mprime_check(d):
    p = _payload_poset(d)
    res = []
    for m in (1, 2):
        for n in (1, 2):
            pre = set(homs_into(p, dBA(n, m), 'distributive'))
            mp = set([f for f in n_filter_masks(p, n) if is_m_prime_n_filter(p, Upset(p, f), m, n)])
            if pre != mp:
                res.append(_fail('m-prime-vs-preimage', m=m, n=n,
                                 only_prime=[_names(p, f) for f in sorted(mp - pre)],
                                 only_preimage=[_names(p, f) for f in sorted(pre - mp)]))
        # m-prime filters are the preimages of the top of B_m
        pre = set(homs_into(p, canonical('boolean', m), 'distributive'))
        mp = set([f for f in n_filter_masks(p, 1) if is_m_prime_filter(p, Upset(p, f), m)])
        if pre != mp: res.append(_fail('m-prime-filter-vs-preimage', m=m))
    return res

####################################################################################################
# splitting

def _split_candidates(bound):
    k = 1
    while 2**k <= max(bound, 2) and k <= 4:
        yield {'k': k}
        k += 1
def _split_check(d):
    b = boolean_lattice(d['k'])
    res = []
    for m in _upsets(b):
        s = Structure(b, m)
        for n in range(1, 5):
            try: splitting_check(s, n)
            except DichotomyViolated as e:
                res.append(_fail('dichotomy', k=d['k'], upset=_names(b, m), n=n, error=str(e)))
    return res

####################################################################################################
# height-beta-grid

@functools.lru_cache(maxsize=64)
def _in_ba_class(d, k, n, j):
    # is height(d, k(d-1)) in the class of Boolean n-filters satisfying beta(j)?
    s = height(d, k*(d - 1))
    return is_n_filter(s.algebra, s.upset, n) and holds_in(s, beta(j))

def _grid_inclusion(m, i, n, j):
    return (m <= n and j <= i) or m == 1

def _hgrid_candidates(bound):
    for dd in range(1, 4):
        for m in range(0, 3): yield {'height': [dd, m]}
    for dd in (2, 3):
        for k in (0, 1, 2): yield {'beta': [dd, k]}
    for (m, i, n, j) in itertools.product((1, 2, 3), (0, 1, 2), (1, 2, 3), (0, 1, 2)):
        yield {'grid': [m, i, n, j]}
def _hgrid_check(d):
    res = []
    if 'height' in d:
        (dd, m) = d['height']
        s = height(dd, m)
        (p, u) = (s.algebra, s.upset)
        c = p.full & ~u.mask
        if min_filter_degree(p, u) != dd: res.append(_fail('degree', d=dd, m=m))
        if not is_n_ideal(p, c, m + 1) or (m > 0 and is_n_ideal(p, c, m)):
            res.append(_fail('complement-degree', d=dd, m=m))
    elif 'beta' in d:
        (dd, k) = d['beta']
        s = height(dd, k*(dd - 1))
        if not holds_in(s, beta(k)): res.append(_fail('beta-holds', d=dd, k=k))
        # the failing side is only checked while the valuation space stays small
        if s.size <= 32 and holds_in(s, beta(k + 1)): res.append(_fail('beta-fails', d=dd, k=k))
    else:
        (m, i, n, j) = d['grid']
        wits = [(dd, k) for dd in (2, 3) for k in (0, 1, 2)]
        seps = [w for w in wits if _in_ba_class(w[0], w[1], m, i) and
                                   not _in_ba_class(w[0], w[1], n, j)]
        incl = _grid_inclusion(m, i, n, j)
        if incl and seps: res.append(_fail('grid-separated', grid=[m, i, n, j],
                                           witness=[list(w) for w in seps]))
        if not incl and not seps: res.append(_fail('grid-unseparated', grid=[m, i, n, j]))
    return res

####################################################################################################
# gamma

_gamma_pairs = ((2, 1), (3, 1), (3, 2))
def _gamma_candidates(bound):
    k = 2
    while 2**k <= max(bound, 4) and k <= 4:
        yield {'k': k}
        k += 1
def _gamma_check(d):
    b = boolean_lattice(d['k'])
    res = []
    for (m, n) in _gamma_pairs:
        spec = FilterClassSpec([product_generator(m, n)])
        for f in _upsets(b, nonempty=True):
            s = Structure(b, f, 'boolean')
            direct = product_class_check(s, m, n)
            member = class_membership(spec, s)
            gam = gamma_criterion(s, m, n)
            if not (direct == member == gam):
                res.append(_fail('gamma', k=d['k'], m=m, n=n, upset=_names(b, f),
                                 direct=direct, membership=member, gamma=gam))
    return res

####################################################################################################
# construction-laws

def _restrict_mask(sel, f):
    # f restricted to the selection sel, as a bit-set of the induced subposet
    return sum(1 << k for (k,i) in enumerate(bits(sel)) if (f >> i) & 1)
def _laws_candidates(bound):
    for p in iter_meet_semilattices(min(bound, 6)): yield _poset_payload(p, kind='semilattice')
    for p in iter_distributive_lattices(bound + 2): yield _poset_payload(p, kind='lattice')
def _laws_check(d):
    p = _payload_poset(d)
    res = []
    if d['kind'] == 'lattice':
        jr = p.join_rows
        for n in (1, 2):
            for f in n_filter_masks(p, n):
                for x in range(p.size):
                    gx = generate_n_filter(p, Upset(p, f | p.up_masks[x]), n).mask
                    for y in range(x + 1, p.size):
                        gy = generate_n_filter(p, Upset(p, f | p.up_masks[y]), n).mask
                        gxy = generate_n_filter(p, Upset(p, f | p.up_masks[jr[x][y]]), n).mask
                        if gx & gy != gxy:
                            res.append(_fail('intersect-generated', upset=_names(p, f), n=n,
                                             x=p.elements[x], y=p.elements[y]))
        return res
    fs = {n: n_filter_masks(p, n) for n in (1, 2, 3)}
    # monotonicity
    for n in (1, 2):
        for f in fs[n]:
            if f not in fs[n + 1]: res.append(_fail('monotone-degree', upset=_names(p, f), n=n))
    for u in _upsets(p):
        gs = [generate_n_filter(p, Upset(p, u), n).mask for n in (1, 2, 3)]
        if not all((gs[k+1] & ~gs[k]) == 0 for k in (0, 1)):
            res.append(_fail('monotone-generation', upset=_names(p, u)))
    # unions
    for (n1, n2) in ((1, 1), (1, 2)):
        for f in fs[n1]:
            for g in fs[n2]:
                if not is_n_filter(p, Upset(p, f | g), n1 + n2):
                    res.append(_fail('union', n=[n1, n2], upsets=[_names(p, f), _names(p, g)]))
    # preimages along endomorphisms
    for h in itertools.islice(iter_homs(p, p, 'semilattice'), 64):
        for n in (1, 2):
            for f in fs[n]:
                pre = sum(1 << i for (i,j) in enumerate(h) if (f >> j) & 1)
                if not is_n_filter(p, Upset(p, pre), n):
                    res.append(_fail('preimage', n=n, upset=_names(p, f), map=list(h)))
    # products of n-filters
    if p.size <= 4:
        q = product_poset([p, p])
        for n in (1, 2):
            for f in fs[n]:
                for g in fs[n]:
                    m = sum(1 << (i*p.size + j) for i in bits(f) for j in bits(g))
                    if not is_n_filter(q, Upset(q, m), n):
                        res.append(_fail('product', n=n, upsets=[_names(p, f), _names(p, g)]))
    # restrictions to subsemilattices, and of m-prime n-filters to ideal subsemilattices
    primes = {(m, n): [f for f in fs[n] if is_m_prime_n_filter(p, Upset(p, f), m, n)]
              for m in (1, 2) for n in (1, 2)}
    for sel in range(1, p.full + 1):
        if not is_subalgebra_mask(p, sel, 'semilattice'): continue
        q = subposet(p, sel)
        restricted = {}
        for n in (1, 2):
            for f in fs[n]:
                r = _restrict_mask(sel, f)
                restricted[(n, f)] = is_n_filter(q, Upset(q, r), n)
                if not restricted[(n, f)]:
                    res.append(_fail('restriction', n=n, upset=_names(p, f), sub=_names(p, sel)))
        if not is_ideal_subposet(SubposetWitness(p, sel)): continue
        for ((m, n), fm) in primes.items():
            for f in fm:
                if not restricted[(n, f)]: continue
                r = _restrict_mask(sel, f)
                if not is_m_prime_n_filter(q, Upset(q, r), m, n):
                    res.append(_fail('prime-restriction', m=m, n=n, upset=_names(p, f),
                                     sub=_names(p, sel)))
    # the lattice of n-filters is distributive over distributive semilattices
    if p.is_distributive_semilattice:
        for n in (1, 2):
            if not filter_lattice(p, n).is_distributive: res.append(_fail('filter-lattice', n=n))
    return res

####################################################################################################
# strict-image

def _simage_candidates(bound):
    k = 1
    while 2**k <= bound and k <= 4:
        yield {'k': k}
        k += 1
def _simage_check(d):
    b = boolean_lattice(d['k'])
    res = []
    for f in _upsets(b, nonempty=True):
        s = Structure(b, f, 'boolean')
        for (q, h) in strict_quotients(s):
            if find_embedding(q, s) is None:
                res.append(_fail('image-embeds', k=d['k'], upset=_names(b, f),
                                 quotient=list(q.algebra.elements)))
    return res

####################################################################################################
# nfilter-class-generation

def _ncg_candidates(bound):
    for p in iter_distributive_lattices(bound): yield _poset_payload(p)
    for (name, s) in iter_gallery():
        if s.algebra.is_distributive and s.size <= 16: yield {'gallery': name}
def _ncg_check(d):
    res = []
    if 'gallery' in d:
        s = canonical(d['gallery']).with_signature('distributive')
        k = min_filter_degree(s.algebra, s.upset)
        if k == 0: return res
        nk = nabla(k).with_signature('distributive')
        fwd = class_membership(FilterClassSpec([s], signature='distributive'), nk)
        bwd = class_membership(FilterClassSpec([nk], signature='distributive'), s)
        if not (fwd and bwd): res.append(_fail('generates-class', name=d['gallery'], degree=k,
                                               nabla_in_class=fwd, structure_in_class=bwd))
        if s.algebra.is_boolean and k >= 2:
            sb = canonical(d['gallery'])
            if not class_membership(FilterClassSpec([sb]), product_generator(2, 1)):
                res.append(_fail('contains-nabla2-nabla1', name=d['gallery']))
        return res
    p = _payload_poset(d)
    for n in (1, 2, 3):
        spec = FilterClassSpec([nabla(n)], signature='distributive')
        for f in _upsets(p):
            s = Structure(p, f, 'distributive')
            a = class_membership(spec, s)
            b = is_n_filter(p, Upset(p, f), n)
            if a != b: res.append(_fail('membership-vs-degree', n=n, upset=_names(p, f),
                                        membership=a, n_filter=b))
    return res

####################################################################################################
# logical-class

_logical_generators = ('nabla(1)', 'nabla(2)', 'boolean(1)', 'boolean(2)', 'height(2,1)')
def _logical_candidates(bound):
    for g in _logical_generators: yield {'generator': g, 'bound': bound}
def _logical_check(d):
    spec = FilterClassSpec([canonical(d['generator'])])
    lspec = spec.with_closure('logical_class')
    res = []
    k = 1
    while 2**k <= min(d['bound'], 8):
        b = boolean_lattice(k)
        for f in _upsets(b, nonempty=True):
            s = Structure(b, f, 'boolean')
            if class_membership(spec, s) != class_membership(lspec, s):
                res.append(_fail('logical-vs-filter', k=k, upset=_names(b, f)))
            if not class_membership(spec, s): continue
            for (q, h) in strict_quotients(s):
                if not class_membership(spec, q):
                    res.append(_fail('image-closed', k=k, upset=_names(b, f),
                                     quotient=list(q.algebra.elements)))
        k += 1
    return res

####################################################################################################
# entailment

_entailment_rules = (('adjunction', 1), ('adjunction', 2), ('alpha', 1), ('alpha', 2),
                     ('alpha', 3), ('beta', 1), ('beta', 2), ('gamma', 1, 1), ('gamma', 1, 2),
                     ('gamma', 2, 2), ('text', 'x, y |- x & y'), ('text', 'x |- x | y'))
_ent_search_size = 8
def _entailment_rule(spec):
    if spec[0] == 'text': return parse_implication(spec[1])
    return {'adjunction': adjunction, 'alpha': alpha, 'beta': beta, 'gamma': gamma}[spec[0]](
        *spec[1:])
def _ent_candidates(bound):
    for r in _entailment_rules: yield {'rule': list(r), 'bound': bound}
def _ent_check(d):
    r = _entailment_rule(tuple(d['rule']))
    res = []
    for n in range(1, d['bound'] + 1):
        ops = set(r.operations)
        fams = ['BA'] if 'neg' in ops or 'bottom' in ops else ['BA', 'DL']
        for fam in fams:
            s = nabla(n) if fam == 'BA' else nabla(n).with_signature('distributive')
            e = entails_class(r, '%s(%d)' % (fam, n))
            h = holds_in(s, r)
            if e != h: res.append(_fail('entailment-vs-generator', rule=r.text,
                                        cls='%s(%d)' % (fam, n), entails=e, holds=h))
            if fam == 'DL':
                cm = find_countermodel(r, 'distributive', _ent_search_size, degree=n)
                if e != (cm is None):
                    res.append(_fail('entailment-vs-search', rule=r.text, cls='DL(%d)' % n,
                                     entails=e, countermodel=(None if cm is None else
                                                              list(cm[0].algebra.elements))))
    if d['rule'][0] == 'adjunction':
        k = d['rule'][1]
        for fam in ('SL', 'uSL'):
            if not entails_class(r, '%s(%d)' % (fam, k)):
                res.append(_fail('adjunction-defines', rule=r.text, cls='%s(%d)' % (fam, k)))
            if k > 1 and entails_class(adjunction(k - 1), '%s(%d)' % (fam, k)):
                res.append(_fail('adjunction-strict', cls='%s(%d)' % (fam, k)))
    return res

####################################################################################################
# adjunction-substitution (experimental)

def _partitions(total):
    # integer partitions of total into non-increasing parts
    def _rec(rem, mx):
        if rem == 0:
            yield ()
            return
        for k in range(min(rem, mx), 0, -1):
            for rest in _rec(rem - k, k): yield (k,) + rest
    return _rec(total, total)
def _subst_candidates(bound):
    for p in iter_meet_semilattices(min(bound, 5)): yield _poset_payload(p)
def _subst_check(d):
    p = _payload_poset(d)
    res = []
    for n in (1, 2):
        rules = [subst_adjunction(g) for g in _partitions(n + 1)]
        for f in n_filter_masks(p, n):
            s = Structure(p, f, 'semilattice')
            for r in rules:
                if not holds_in(s, r):
                    res.append(_fail('substitution-instance', n=n, rule=r.text,
                                     upset=_names(p, f)))
    return res

####################################################################################################
# The registry and the runner

@pimms.immutable
class TheoremSuite(object):
    '''
    TheoremSuite(name, candidates, check, default_bound) describes a named suite: candidates(bound)
    yields the picklable candidate payloads and check(payload) yields the list of failures found for
    one candidate. Experimental suites report searches, never verifications.
    '''
    def __init__(self, name, candidates, check, default_bound, experimental=False):
        self.name = name
        self.candidates = candidates
        self.check = check
        self.default_bound = default_bound
        self.experimental = experimental
    @pimms.param
    def name(n): return n
    @pimms.param
    def candidates(f): return f
    @pimms.param
    def check(f): return f
    @pimms.param
    def default_bound(b):
        if not pimms.is_int(b) or b < 1: raise ValueError('suite bounds must be positive integers')
        return int(b)
    @pimms.option(False)
    def experimental(e): return bool(e)

suites = pyr.pmap({s.name: s for s in [
    TheoremSuite('definition-equivalence',         _defeq_candidates,   _defeq_check,      7),
    TheoremSuite('generation',                     _generation_candidates, _generation_check, 7),
    TheoremSuite('prime-nfilter-characterization', _pchar_candidates,   _pchar_check,      8),
    TheoremSuite('counterexample-gallery',         _cgal_candidates,    _cgal_check,       1),
    TheoremSuite('separation',                     _sep_candidates,     _sep_check,        8),
    TheoremSuite('m-prime-characterization',       _mprime_candidates,  _mprime_check,     8),
    TheoremSuite('splitting',                      _split_candidates,   _split_check,      16),
    TheoremSuite('height-beta-grid',               _hgrid_candidates,   _hgrid_check,      1),
    TheoremSuite('gamma',                          _gamma_candidates,   _gamma_check,      16),
    TheoremSuite('construction-laws',              _laws_candidates,    _laws_check,       6),
    TheoremSuite('strict-image',                   _simage_candidates,  _simage_check,     16),
    TheoremSuite('nfilter-class-generation',       _ncg_candidates,     _ncg_check,        8),
    TheoremSuite('logical-class',                  _logical_candidates, _logical_check,    8),
    TheoremSuite('entailment',                     _ent_candidates,     _ent_check,        3),
    TheoremSuite('adjunction-substitution',        _subst_candidates,   _subst_check,      5,
                 experimental=True)]})
'''
suites is a persistent map of the registered theorem suite names to TheoremSuite objects.
'''
suite_names = tuple(suites.keys())

def _run_candidate(name, payload):
    return suites[name].check(payload)

def run_theorem_suite(name, size_bound=None, jobs=None):
    '''
    run_theorem_suite(name) runs the named theorem suite and yields its report, a dictionary
      {"suite": name, "bound": bound, "checked": count, "failures": [...], "experimental": bool}
      in which each failure records the index of the failing candidate, the check that failed, and
      its details.

    The optional argument size_bound (default: the suite's default bound) caps the size of the
    enumerated carriers; jobs (default: config['jobs']) is the number of worker processes over
    which the candidates are sharded. Failures are merged in candidate order.

    Raises UnknownSuite for unregistered suite names.
    '''
    st = suites.get(name, None)
    if st is None: raise UnknownSuite('unknown theorem suite: %s' % (name,))
    bound = st.default_bound if size_bound is None else int(size_bound)
    jobs = config['jobs'] if jobs is None else int(jobs)
    payloads = list(st.candidates(bound))
    logging.info('nflab: suite %s: %d candidates at bound %d', name, len(payloads), bound)
    if jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_run_candidate, [name]*len(payloads), payloads,
                                  chunksize=max(1, len(payloads) // (4*jobs))))
    else: results = [_run_candidate(name, d) for d in payloads]
    failures = []
    for (k, fs) in enumerate(results):
        for f in fs:
            f = dict(f)
            f['candidate'] = k
            failures.append(f)
    if failures: logging.info('nflab: suite %s: %d failures', name, len(failures))
    return {'suite':        name,
            'bound':        bound,
            'checked':      len(payloads),
            'failures':     failures,
            'experimental': st.experimental}

def suite_passed(report):
    '''
    suite_passed(report) yields True if the given suite report lists no failures.
    '''
    return len(report['failures']) == 0

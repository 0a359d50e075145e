####################################################################################################
# nflab/io/core.py
# This file implements the load and save functions that read and write structures, posets, rules,
# and Hasse diagrams.

import pyrsistent as pyr
import os, six, json, gzip, logging, pimms

from ..util       import (ObjectWithMetaData, MalformedDocument)
from ..order      import (is_poset, poset_to_json, parse_poset)
from ..structures import (is_structure, is_homomorphism_object, structure_to_json,
                          parse_structure)
from ..horn       import (is_implication, to_implication, implication_to_json,
                          implication_from_json, parse_implication)

####################################################################################################
# Format registries
# Each registry maps a format name to the triple (function, extensions, sniff).

importers = pyr.m()
'''
nflab.io.core.importers is the persistent map of the formats that nflab.io.load understands; each
value is the triple (load_function, extensions, sniff).
'''
exporters = pyr.m()
'''
nflab.io.core.exporters is the persistent map of the formats that nflab.io.save understands; each
value is the triple (save_function, extensions, sniff).
'''

def _extensions(extensions):
    if extensions is None: return ()
    if pimms.is_str(extensions): return (extensions.lower(),)
    return tuple([e.lower() for e in extensions])

def _match_extension(registry, filename):
    # the longest matching extension wins, so that 'json.gz' beats 'gz'
    fnm = os.path.split(filename)[1].lower()
    hits = [(len(e), k) for (k,(_,es,_)) in six.iteritems(registry) for e in es
            if fnm.endswith('.' + e)]
    return max(hits)[1] if hits else None

def _sniff(registry, *args, **kwargs):
    for (k,(_,_,sniff)) in six.iteritems(registry):
        if sniff is None: continue
        try:
            if sniff(*args, **kwargs): return k
        except Exception: continue
    return None

def _resolve(registry, format):
    # a format may be given by its registered name or by one of its extensions
    fmt = format.lower()
    if fmt in registry: return fmt
    return next((k for (k,(_,es,_)) in six.iteritems(registry) if fmt in es), None)

def guess_import_format(filename, **kwargs):
    '''
    guess_import_format(filename) yields the name of the importer for the given filename, deduced
      from its extension or, failing that, from the importers' sniff tests; yields None if no
      importer claims the file. The file is not loaded.
    '''
    return _match_extension(importers, filename) or _sniff(importers, filename, **kwargs)

def guess_export_format(filename, data, **kwargs):
    '''
    guess_export_format(filename, data) yields the name of the exporter for writing data to the
      given filename, deduced from the extension or from the exporters' sniff tests; yields None if
      no exporter applies.
    '''
    return _match_extension(exporters, filename) or _sniff(exporters, filename, data, **kwargs)

def load(filename, format=None, **kwargs):
    '''
    load(filename) yields the nflab object (a Structure, FinitePoset, or Implication) stored in the
      given file; the format is guessed from the filename.
    load(filename, format) uses the named format (an importer name or a registered extension).

    Each importer is also available as load.<format>, so load(f, 'rule') and load.rule(f) are
    equivalent. Objects that carry meta-data record the filename as source_filename.

    Raises MalformedDocument if the format cannot be deduced or the document cannot be parsed.
    '''
    filename = os.path.expanduser(filename)
    fmt = guess_import_format(filename, **kwargs) if format is None else _resolve(importers, format)
    if fmt is None:
        raise MalformedDocument('cannot load %s: format %s not recognized'
                                % (filename, 'could not be deduced and is' if format is None else
                                   '\'%s\' is' % format))
    logging.debug('nflab: loading %s as %s', filename, fmt)
    obj = importers[fmt][0](filename, **kwargs)
    if isinstance(obj, ObjectWithMetaData): obj = obj.with_meta(source_filename=filename)
    return obj

def save(filename, data, format=None, **kwargs):
    '''
    save(filename, data) writes data to the given filename in the format guessed from the filename
      and the data, and yields the filename.
    save(filename, data, format) uses the named format (an exporter name or a registered extension).

    Each exporter is also available as save.<format>, so save(f, s, 'dot') and save.dot(f, s) are
    equivalent. Raises ValueError if no exporter applies.
    '''
    filename = os.path.expanduser(os.path.expandvars(filename))
    if format is None: fmt = guess_export_format(filename, data, **kwargs)
    else: fmt = _resolve(exporters, format)
    if fmt is None:
        raise ValueError('cannot save %s: no exporter for format %s'
                         % (filename, format if format is not None else '(none deduced)'))
    logging.debug('nflab: saving %s as %s', filename, fmt)
    return exporters[fmt][0](filename, data, **kwargs)

def importer(name, extensions=None, sniff=None):
    '''
    @importer(name) registers the decorated function as the loader for the named format; see also
      forget_importer. The function takes a filename followed by keyword options only.

    The following options are accepted:
      * extensions (default: None) is an extension or a collection of extensions (without the
        leading dot) of files in this format.
      * sniff (default: None) is a function f(filename) that yields True for files in this format.
    '''
    name = name.lower()
    if name in importers: raise ValueError('importer %s is already registered' % name)
    def _register(f):
        global importers
        importers = importers.set(name, (f, _extensions(extensions), sniff))
        setattr(load, name, f)
        return f
    return _register

def exporter(name, extensions=None, sniff=None):
    '''
    @exporter(name) registers the decorated function as the writer for the named format; see also
      forget_exporter. The function takes a filename and the object to write, followed by keyword
      options only.

    The following options are accepted:
      * extensions (default: None) is an extension or a collection of extensions (without the
        leading dot) of files in this format.
      * sniff (default: None) is a function f(filename, data) that yields True when data should be
        written in this format.
    '''
    name = name.lower()
    if name in exporters: raise ValueError('exporter %s is already registered' % name)
    def _register(f):
        global exporters
        exporters = exporters.set(name, (f, _extensions(extensions), sniff))
        setattr(save, name, f)
        return f
    return _register

def forget_importer(name):
    '''
    forget_importer(name) removes the named importer and yields True, or yields False if there was
      no such importer.
    '''
    global importers
    name = name.lower()
    if name not in importers: return False
    importers = importers.discard(name)
    delattr(load, name)
    return True

def forget_exporter(name):
    '''
    forget_exporter(name) removes the named exporter and yields True, or yields False if there was
      no such exporter.
    '''
    global exporters
    name = name.lower()
    if name not in exporters: return False
    exporters = exporters.discard(name)
    delattr(save, name)
    return True

####################################################################################################
# Normalization

def normalize(obj):
    '''
    normalize(obj) yields a JSON-friendly version of the given object: structures, posets, rules,
      and homomorphisms become their canonical JSON documents; maps and sequences are normalized
      recursively; other objects are returned as they are.
    '''
    if is_structure(obj):             return structure_to_json(obj)
    elif is_poset(obj):               return poset_to_json(obj)
    elif is_implication(obj):         return implication_to_json(obj)
    elif is_homomorphism_object(obj): return obj.to_json()
    elif pimms.is_map(obj):           return {k:normalize(v) for (k,v) in six.iteritems(obj)}
    elif isinstance(obj, (list, tuple)): return [normalize(u) for u in obj]
    else: return obj
norm = normalize

def denormalize(dat):
    '''
    denormalize(dat) yields the nflab object described by the decoded JSON document dat: a
      Structure for documents with an "upset" or "signature", a FinitePoset for other documents
      with "elements", an Implication for rule documents, and dat itself otherwise.
    '''
    if not pimms.is_map(dat): return dat
    if 'elements' in dat:
        if 'upset' in dat or 'signature' in dat: return parse_structure(dat)
        return parse_poset(dat)
    if 'conclusion' in dat or 'rule' in dat: return implication_from_json(dat)
    return dat

####################################################################################################
# Importers and exporters

def _open_text(filename, mode):
    # .gz files are transparently (de)compressed
    if filename.endswith('.gz'): return gzip.open(filename, mode + 't')
    return open(filename, mode + 't')

@importer('json', ('json', 'json.gz'))
def load_json(filename, to='auto'):
    '''
    load_json(filename) yields the structure, poset, or rule described by the JSON document in the
      given file (or readable stream); see denormalize.

    With the option to=None the decoded JSON data are returned as they are.
    '''
    if to not in ('auto', None): raise ValueError('load_json: unrecognized to option: %s' % (to,))
    try:
        if not pimms.is_str(filename): dat = json.load(filename)
        else:
            with _open_text(filename, 'r') as fl: dat = json.load(fl)
    except ValueError as e: raise MalformedDocument('could not parse JSON: %s' % e)
    return dat if to is None else denormalize(dat)

@exporter('json', ('json', 'json.gz'))
def save_json(filename, obj, normalize=True):
    '''
    save_json(filename, obj) writes obj to the given file (or writable stream) as JSON with sorted
      keys and yields filename. nflab objects are written as their canonical documents unless the
      option normalize is False.
    '''
    dat = norm(obj) if normalize else obj
    if not pimms.is_str(filename): json.dump(dat, filename, sort_keys=True)
    else:
        with _open_text(filename, 'w') as fl: json.dump(dat, fl, sort_keys=True)
    return filename

@importer('rule', ('rule',))
def load_rule(filename, signature=None):
    '''
    load_rule(filename) yields the Implication whose text is stored in the given file; blank lines
      and lines starting with # are ignored, and the remaining lines are joined.
    '''
    with open(filename, 'rt') as fl: lns = fl.readlines()
    txt = ' '.join([ln.strip() for ln in lns if ln.strip() and not ln.strip().startswith('#')])
    return parse_implication(txt, signature)
@exporter('rule', ('rule',), sniff=lambda fnm, d: is_implication(d))
def save_rule(filename, rule):
    '''
    save_rule(filename, rule) writes the canonical text of the given rule to the given filename.
    '''
    r = to_implication(rule)
    with open(filename, 'wt') as fl: fl.write(r.text + '\n')
    return filename

def to_dot(s, highlight=None, name='nflab'):
    '''
    to_dot(s) yields a pydotplus Dot graph of the Hasse diagram of the given Structure or
      FinitePoset s, drawn bottom-to-top. Designated elements of a structure are drawn filled.

    The optional argument highlight may be a collection of element names or indices to outline in
    red (for example a witness or a generated filter).
    '''
    from pydotplus.graphviz import (Dot, Node, Edge)
    p = s.algebra if is_structure(s) else s
    des = s.mask if is_structure(s) else 0
    hl = 0 if highlight is None else p.mask(highlight)
    g = Dot(graph_name=name, graph_type='digraph')
    g.set_rankdir('BT')
    for (i,el) in enumerate(p.elements):
        style = {}
        if (des >> i) & 1: style.update(style='filled', fillcolor='lightgray')
        if (hl >> i) & 1: style.update(color='red', penwidth='2')
        g.add_node(Node(str(i), label='"%s"' % el, **style))
    for (i,j) in p.covers: g.add_edge(Edge(str(i), str(j)))
    return g
def export_dot(s, highlight=None):
    '''
    export_dot(s) yields the DOT text of the Hasse diagram of the given Structure or FinitePoset s;
      see to_dot for the optional argument highlight.
    '''
    return to_dot(s, highlight=highlight).to_string()
@exporter('dot', ('dot', 'gv'))
def save_dot(filename, obj, highlight=None):
    '''
    save_dot(filename, s) writes the DOT text of the Hasse diagram of s to the given filename.
    '''
    with open(filename, 'wt') as fl: fl.write(export_dot(obj, highlight=highlight))
    return filename

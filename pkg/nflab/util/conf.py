####################################################################################################
# nflab/util/conf.py
# The nflab configuration: the size caps that guard exhaustive searches and the worker count.

import os, six, json, warnings, pimms

def loadrc(filename):
    '''
    loadrc(filename) yields the dictionary stored as JSON in the given rc-file. Raises ValueError
      if the file does not exist or does not hold a JSON object.
    '''
    filename = os.path.expanduser(os.path.expandvars(filename))
    if not os.path.isfile(filename): raise ValueError('rc-file %s does not exist' % filename)
    with open(filename, 'r') as fl:
        try: dat = json.load(fl)
        except ValueError as e: raise ValueError('rc-file %s is not valid JSON: %s' % (filename, e))
    if not pimms.is_map(dat): raise ValueError('rc-file %s does not hold a JSON object' % filename)
    return dict(dat)

def _from_environ(envname):
    # environment values are JSON when they parse as JSON and strings otherwise
    val = os.environ[envname]
    try: return json.loads(val)
    except ValueError: return val

class ConfigMeta(type):
    '''
    ConfigMeta lets the config class itself be indexed, iterated, and printed like a dictionary.
    '''
    def __getitem__(cls, name):   return cls.get(name)
    def __setitem__(cls, name, val): cls.set(name, val)
    def __contains__(cls, name):  return name in cls._items
    def __len__(cls):             return len(cls._items)
    def __iter__(cls):            return iter(sorted(cls._items.keys()))
    def __repr__(cls):            return 'config(%r)' % (cls.todict(),)

@six.add_metaclass(ConfigMeta)
class config(object):
    '''
    nflab.util.conf.config holds the nflab configuration items. Each item is declared once with
    config.declare() and then read as config[name]. Its value is the first of the following that
    is available:
      * a value assigned in Python (config['jobs'] = 4);
      * the item's environment variable ('NFLAB_' + name.upper() by default), parsed as JSON;
      * the item's entry in the rc-file named by the environment variable NFLABRC, if that is set;
      * the declared default.
    A declared filter is applied to every value; values it rejects fall back to the default with a
    warning.
    '''
    _items = {}
    _vals  = {}
    _rc    = None

    @staticmethod
    def rc():
        '''
        config.rc() yields the dictionary read from the rc-file named by NFLABRC, or an empty
          dictionary when NFLABRC is not set or the file cannot be read.
        '''
        if config._rc is None:
            path = os.environ.get('NFLABRC', None)
            if path is None: config._rc = {}
            else:
                try: config._rc = loadrc(path)
                except ValueError as e:
                    warnings.warn('nflab: ignoring rc-file: %s' % e)
                    config._rc = {}
        return config._rc

    @staticmethod
    def declare(name, rc_name=None, environ_name=None, filter=None, default_value=None):
        '''
        config.declare(name) registers the configuration item with the given name.

        The following options are accepted:
          * rc_name (default: name) is the key of the item in the rc-file.
          * environ_name (default: 'NFLAB_' + name.upper()) is the environment variable consulted.
          * filter (default: None) is a function applied to every value the item takes; it may
            raise to reject a value.
          * default_value (default: None) is the value used when no other source provides one.
        '''
        if name in config._items: raise ValueError('config item %s is already declared' % name)
        if rc_name is None: rc_name = name
        if environ_name is None: environ_name = 'NFLAB_' + name.upper()
        config._items[name] = (rc_name, environ_name, filter, default_value)
        return name

    @staticmethod
    def get(name):
        '''
        config.get(name) yields the current value of the named configuration item.
        '''
        if name not in config._items: raise KeyError(name)
        if name in config._vals: return config._vals[name]
        (rcname, envname, fltfn, dval) = config._items[name]
        if envname in os.environ: val = _from_environ(envname)
        else: val = config.rc().get(rcname, dval)
        if fltfn is not None and val is not dval:
            try: val = fltfn(val)
            except (TypeError, ValueError):
                warnings.warn('nflab: invalid value %r for config item %s; using %r'
                              % (val, name, dval))
                val = dval
        config._vals[name] = val
        return val

    @staticmethod
    def set(name, val):
        '''
        config.set(name, val) assigns the named configuration item; config[name] = val is
          equivalent. The item's filter is applied and may raise.
        '''
        if name not in config._items: raise KeyError('config item %s is not declared' % name)
        fltfn = config._items[name][2]
        config._vals[name] = val if fltfn is None else fltfn(val)

    @staticmethod
    def keys(): return sorted(config._items.keys())
    @staticmethod
    def todict(): return {k:config.get(k) for k in config.keys()}

    @staticmethod
    def reset(name=None):
        '''
        config.reset() forgets every assigned or cached value so that the environment and the
          rc-file are consulted again; config.reset(name) forgets only the named item.
        '''
        if name is None:
            config._vals.clear()
            config._rc = None
        else: config._vals.pop(name, None)

def to_positive_int(x):
    '''
    to_positive_int(x) yields int(x) if x is a positive integer and raises ValueError otherwise.
    '''
    if isinstance(x, float) and x != int(x): raise ValueError('not an integer: %r' % (x,))
    x = int(x)
    if x < 1: raise ValueError('not a positive integer: %r' % (x,))
    return x

# size caps of the exhaustive operations
config.declare('size_cap',          filter=to_positive_int, default_value=4096)
config.declare('poset_path_cap',    filter=to_positive_int, default_value=16)
config.declare('oracle_cap',        filter=to_positive_int, default_value=24)
config.declare('enumeration_cap',   filter=to_positive_int, default_value=24)
config.declare('valuation_chunk',   filter=to_positive_int, default_value=2**20)
config.declare('free_boolean_warn', filter=to_positive_int, default_value=256)
# worker processes for theorem suites
config.declare('jobs',              filter=to_positive_int, default_value=1)

""" Bunch is a subclass of dict with attribute-style access, used as the
    run-config namespace.

    >>> b = Bunch()
    >>> b.seed = 7
    >>> b.seed
    7
    >>> b['seed'] += 1
    >>> b.seed
    8
    >>> b.caps = Bunch(states=16)
    >>> b.caps.states
    16
    >>> b.caps is b['caps']
    True
"""
import yaml
from yaml.representer import SafeRepresenter

__all__ = ('Bunch', 'bunchify', 'unbunchify',)


class Bunch(dict):
    """ A dictionary that provides attribute-style access.

        >>> b = Bunch(mode='exact', samples=1000)
        >>> sorted(b.keys())
        ['mode', 'samples']
        >>> b.update({'mode': 'sample'}, seed=3)
        >>> b
        Bunch(mode='sample', samples=1000, seed=3)
        >>> b.missing
        Traceback (most recent call last):
            ...
        AttributeError: missing
    """

    def __getattr__(self, k):
        # only reached when normal attribute lookup fails
        try:
            return self[k]
        except KeyError:
            raise AttributeError(k)

    def __setattr__(self, k, v):
        if hasattr(type(self), k):
            object.__setattr__(self, k, v)
        else:
            self[k] = v

    def __delattr__(self, k):
        if k in self:
            del self[k]
        else:
            object.__delattr__(self, k)

    def __repr__(self):
        """
            >>> Bunch(b=2, a=Bunch(c=1))
            Bunch(a=Bunch(c=1), b=2)
        """
        args = ', '.join(['%s=%r' % (key, self[key]) for key in sorted(self.keys())])
        return '%s(%s)' % (self.__class__.__name__, args)

    def toDict(self):
        return unbunchify(self)

    def toYAML(self, **options):
        """
            >>> Bunch(trials=Bunch(gamma=100)).toYAML(default_flow_style=True)
            '{trials: {gamma: 100}}\\n'
        """
        opts = dict(indent=4, default_flow_style=False)
        opts.update(options)
        return yaml.safe_dump(self.toDict(), **opts)

    @staticmethod
    def fromDict(d):
        return bunchify(d)


def bunchify(x):
    """ Recursively transforms a dictionary into a Bunch via copy.

        >>> b = bunchify({'trials': {'gamma': 100}, 'eps': ['1/4', {'q': 16}]})
        >>> b.trials.gamma
        100
        >>> b.eps[1].q
        16
    """
    if isinstance(x, dict):
        return Bunch((k, bunchify(v)) for k, v in x.items())
    elif isinstance(x, (list, tuple)):
        return type(x)(bunchify(v) for v in x)
    else:
        return x


def unbunchify(x):
    """ Recursively converts a Bunch into a dictionary.

        >>> unbunchify(Bunch(a=Bunch(b=[Bunch(c=1)])))
        {'a': {'b': [{'c': 1}]}}
    """
    if isinstance(x, dict):
        return dict((k, unbunchify(v)) for k, v in x.items())
    elif isinstance(x, (list, tuple)):
        return type(x)(unbunchify(v) for v in x)
    else:
        return x


SafeRepresenter.add_representer(Bunch, SafeRepresenter.represent_dict)

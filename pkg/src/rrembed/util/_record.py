from __future__ import print_function, division, absolute_import

import itertools as it

from ..errors import ConfigurationError


class Record(object):
    """Immutable typed value object.

    Subclasses declare ``__fields__``, optional coercions in ``__types__`` and
    defaults in ``__defaults__``. After coercion :meth:`validate` runs and may
    raise :class:`rrembed.errors.ConfigurationError`.
    """
    __fields__ = ()
    __types__ = ()
    __defaults__ = {}

    def __init__(self, *args, **kwargs):
        if len(args) > len(self.__fields__):
            raise ConfigurationError('{} takes at most {} values'.format(type(self).__name__, len(self.__fields__)))

        unknown = set(kwargs) - set(self.__fields__)
        if unknown:
            raise ConfigurationError('unknown fields for {}: {}'.format(type(self).__name__, sorted(unknown)))

        kwargs.update(dict(zip(self.__fields__, args)))

        types = dict(zip(self.__fields__, self.__types__))

        for key in self.__fields__:
            type_ = types.get(key)

            val = kwargs.get(key, self.__defaults__.get(key))
            if val is not None and type_ is not None:
                try:
                    val = type_(val)

                except (TypeError, ValueError) as exc:
                    raise ConfigurationError('{}.{}: cannot convert {!r} ({})'.format(
                        type(self).__name__, key, val, exc,
                    ))

            object.__setattr__(self, key, val)

        self.validate()

    def validate(self):
        pass

    def __setattr__(self, key, value):
        raise AttributeError('{} is immutable, use update()'.format(type(self).__name__))

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented

        return Record.key(self) == Record.key(other)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((type(self),) + Record.key(self))

    def __repr__(self):
        kv_pairs = ', '.join('{}={!r}'.format(k, getattr(self, k)) for k in self.__fields__)
        return '{}({})'.format(self.__class__.__name__, kv_pairs)

    def __reduce__(self):
        return (_rebuild, (type(self), dict(self.items())))

    def key(self):
        return tuple(getattr(self, k) for k in self.__fields__)

    def items(self):
        return zip(self.__fields__, Record.key(self))

    def update(self, **kwargs):
        values = dict(self.items())
        values.update(kwargs)
        return self.__class__(**values)


def _rebuild(cls, values):
    return cls(**values)


def diff(a, b):
    if type(a) is not type(b):
        return ['error: %r != %r' % (a, b)]

    if isinstance(a, (list, tuple)):
        if len(a) != len(b):
            return ['length differ: %r != %r' % (a, b)]

        return it.chain.from_iterable(diff(u, v) for (u, v) in zip(a, b))

    elif isinstance(a, dict):
        keys = sorted(set(a) | set(b))
        return it.chain.from_iterable(
            diff(a[k], b[k]) if k in a and k in b else ['missing key %r' % k]
            for k in keys
        )

    elif not isinstance(a, Record):
        return [] if a == b else ['error %r != %r' % (a, b)]

    ak = dict(a.items())
    bk = dict(b.items())

    return it.chain.from_iterable(
        ['{}: {}'.format(k, line) for line in diff(ak[k], bk[k])]
        for k in a.__fields__
    )

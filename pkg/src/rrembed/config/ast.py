"""Nodes of parsed config files."""
from __future__ import print_function, division, absolute_import

from ..util import Record


class Document(Record):
    """A config file.

    :ivar Sequence[Union[Section,Assignment]] statements:
        the section headers and assignments in file order.
    """
    __fields__ = ['statements']
    __types__ = [tuple]


class Section(Record):
    __fields__ = ['name']


class Assignment(Record):
    __fields__ = ['key', 'value']


class Quantity(Record):
    """A number with an optional unit, e.g. ``10.746 eV``."""
    __fields__ = ['value', 'unit']


class Bool(Record):
    __fields__ = ['value']


class Name(Record):
    __fields__ = ['name']


class String(Record):
    __fields__ = ['value']

    @classmethod
    def unquote(cls, s):
        return s[1:-1].replace('""', '"')


class List(Record):
    __fields__ = ['items']
    __types__ = [tuple]

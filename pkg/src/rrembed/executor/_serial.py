from __future__ import print_function, division, absolute_import

from ._executor import Model


class SerialModel(Model):
    """Evaluate sweep points one after another in the calling process."""
    name = 'serial'

    def map(self, func, items):
        return [func(item) for item in items]

from __future__ import print_function, division, absolute_import

from ._executor import Model
from ..util._dask import dask_map


class DaskModel(Model):
    """Evaluate sweep points as ``dask.delayed`` tasks.

    :param str scheduler:
        any dask scheduler name, ``processes`` by default.

    :param Optional[int] num_workers:
        the number of workers, dask picks the number of cores if missing.
    """
    name = 'dask'

    def __init__(self, scheduler='processes', num_workers=None):
        self.scheduler = scheduler
        self.num_workers = num_workers

    def __repr__(self):
        return 'DaskModel(scheduler={!r}, num_workers={!r})'.format(self.scheduler, self.num_workers)

    def map(self, func, items):
        return dask_map(func, items, scheduler=self.scheduler, num_workers=self.num_workers)

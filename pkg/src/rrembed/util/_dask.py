"""Helpers to fan out independent runs with dask."""
from __future__ import print_function, division, absolute_import

import dask


def dask_map(func, items, scheduler='processes', num_workers=None):
    """Apply ``func`` to each item as delayed tasks, results in input order."""
    tasks = [dask.delayed(func, pure=False)(item) for item in items]

    kwargs = {'scheduler': scheduler}
    if num_workers is not None and scheduler != 'synchronous':
        kwargs['num_workers'] = num_workers

    return list(dask.compute(*tasks, **kwargs))

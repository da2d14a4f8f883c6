from __future__ import print_function, division, absolute_import

import os

import pytest

from rrembed.util._record import Record, diff


@pytest.fixture(scope='module')
def slow():
    """Gate for runs at full production length."""
    if os.environ.get('RRE_SLOW_TESTS'):
        return True

    pytest.skip('slow tests are disabled, set RRE_SLOW_TESTS=1')


def pytest_assertrepr_compare(op, left, right):
    if not(isinstance(left, Record) and isinstance(right, Record) and op == "=="):
        return

    return [
        'Comparing Records',
        '%r != %r' % (left, right),
    ] + list(diff(left, right))

"""Command line entry point ``rrembed``."""
from __future__ import print_function, division, absolute_import

import argparse
import logging
import sys

from .config import experiments, parse_config
from .errors import ConfigurationError, Error
from .executor import Executor, write_error

_logger = logging.getLogger(__name__)

#: exit status per error family
exit_codes = {
    'ok': 0,
    'error': 1,
    'configuration': 2,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog='rrembed',
        description='Emitter dynamics in a cavity dressed by a molecular ensemble.',
    )
    parser.add_argument('experiment', nargs='?', choices=experiments, help='overrides the experiment of the config')
    parser.add_argument('--config', required=True, help='config file, sectioned text or json')
    parser.add_argument('--out', default='.', help='output directory (default: current directory)')
    parser.add_argument('--jobs', type=int, default=None, help='parallel sweep points, 0 for all cores')
    parser.add_argument('--oversample', type=int, default=None, help='spectral oversampling factor')
    parser.add_argument('--dry-run', action='store_true', help='print the resolved config and exit')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='more logging')
    return parser


def apply_overrides(config, args):
    if args.oversample is not None:
        config = config.set('propagation.oversampling', args.oversample)

    if args.jobs is not None:
        config = config.set('output.jobs', args.jobs)

    return config


def main(argv=None):
    args = build_parser().parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose else logging.WARNING,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )

    try:
        config = apply_overrides(parse_config(args.config, experiment=args.experiment), args)

        if args.dry_run:
            print(config.to_json())
            return exit_codes['ok']

        Executor(config, out=args.out).execute()

    except ConfigurationError as exc:
        _logger.error('invalid configuration: %s', exc)
        write_error(exc, args.out)
        return exit_codes['configuration']

    except Error as exc:
        _logger.error('%s failed: %s', args.experiment or 'run', exc)
        return exit_codes['error']

    return exit_codes['ok']


if __name__ == '__main__':
    sys.exit(main())

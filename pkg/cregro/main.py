"""Module containing the logic for the cregro entry-points."""

import os
import sys
import logging
import argparse
from os import path

import yaml

from cregro.config import Data
from cregro.exceptions import CregroError
from cregro.exceptions import ScriptError
from cregro import create_from_script_file
from cregro import create_from_yaml_file


def show_dependency(options):
    if options.dependency:
        from platform import uname, python_version
        from cregro.utils import Printer
        lst = [
            Data.main_app_text,
            'Platform: {0.system} {0.release} - Python {1}'.format(
                uname(), python_version()
            ),
            '--------------------',
            'Dependencies:'
        ]

        for pkg in Data.get_dependency().values():
            lst.append('  + Package: {0[package]}'.format(pkg))
            lst.append('             {0[url]}'.format(pkg))

        Printer.print(lst)
        sys.exit(0)


def configure_logging(options):
    """Raise the root level to INFO (-v) or DEBUG (-vv); logs go to stderr."""
    level = logging.WARNING
    if options.verbose == 1:
        level = logging.INFO
    elif options.verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s'
    )


def fail(message, code=2):
    print('*** {}'.format(message), file=sys.stderr)
    sys.exit(code)


class Cli:
    """cregro console CLI application."""
    def __init__(self):
        self.filename = ''
        self.filetype = ''

        parser = argparse.ArgumentParser(
            prog='cregro',
            usage='%(prog)s [options] script',
            description='%(prog)s runs weight initial module and regularity sessions',
        )

        parser.add_argument(
            'script', type=str, nargs='?', default='',
            help='session script (.crg) or YAML session (.yaml, .yml).'
        )

        parser.add_argument(
            '--json', action='store_true', dest='json_output',
            help='Emit one JSON document per command.'
        )

        parser.add_argument(
            '--seed', type=int, default=None,
            help='First seed of check sweeps.  Default is {}.'.format(Data.default_seed)
        )

        parser.add_argument(
            '--budget', type=int, default=None,
            help='Random instances per check sweep.  Default is {}.'.format(Data.default_budget)
        )

        parser.add_argument(
            '--threads', type=int, default=None,
            help='Sweep worker threads.  Default is ${} or {}.'.format(
                Data.threads_env_var, Data.default_threads)
        )

        parser.add_argument(
            '--max-degree', type=int, default=None, dest='max_degree',
            help='Largest degree of randomly generated generators.'
        )

        parser.add_argument(
            '-e', '--filetype', type=str, choices=['crg', 'yaml', 'yml'],
            default='',
            help='File type can be either crg, yaml, or yml.'
        )

        parser.add_argument(
            '-v', '--verbose', action='count', default=0,
            help='Log progress to stderr (-vv for debug).'
        )

        parser.add_argument(
            '-d', '--dependency', action='store_true', dest='dependency',
            help='Show Python package dependencies.'
        )

        self.parser = parser

    @property
    def is_script_type(self):
        """Return True if filetype is crg, otherwise, False."""
        return self.filetype == 'crg'

    @property
    def is_yaml_type(self):
        """Return True if filetype is yml or yaml, otherwise, False."""
        return self.filetype in ['yml', 'yaml']

    def validate_filename(self, options):
        """Validate the script argument which is a file type of `crg`,
        `yml`, or `yaml`.

        Parameters
        ----------
        options (argparse.Namespace): an argparse.Namespace instance.

        Returns
        -------
        bool: True if the script argument is valid, otherwise, ``sys.exit(2)``
        """
        filename, filetype = str(options.script), str(options.filetype)
        if not filename:
            self.parser.print_usage(sys.stderr)
            fail('script argument CAN NOT be empty.')

        self.filename = filename
        self.filetype = filetype

        _, ext = path.splitext(filename)
        ext = ext.lower()
        if not filetype and ext in Data.script_extensions + Data.yaml_extensions:
            self.filetype = ext[1:]
            return True

        if not filetype:
            if ext == '':
                fmt = ('{} file doesnt have an extension.  '
                       'System cant determine a file type.  '
                       'Please rerun with --filetype=<filetype> '
                       'where filetype is crg, yml, or yaml.')
            else:
                fmt = ('{} file has an extension but its extension is not '
                       'crg, yml, or yaml.  If you think this file is a '
                       'session file, please rerun with --filetype=<filetype> '
                       'where filetype is crg, yml, or yaml.')
            fail(fmt.format(filename))
        return True

    def resolve_threads(self, options):
        """Return --threads, else $CREGRO_THREADS, else the default."""
        threads = options.threads
        if threads is None:
            text = os.environ.get(Data.threads_env_var, '')
            if text:
                try:
                    threads = int(text)
                except ValueError:
                    fail('{} must be an integer, got {!r}.'.format(Data.threads_env_var, text))
        threads = Data.default_threads if threads is None else threads
        if threads < 1:
            fail('--threads must be a positive integer.')
        return threads

    def run_cli(self, options):
        """Execute a cregro session.

        Parameters
        ----------
        options (argparse.Namespace): a argparse.Namespace instance.
        """
        func = create_from_script_file if self.is_script_type else create_from_yaml_file
        if options.budget is not None and options.budget < 0:
            fail('--budget must be a non-negative integer.')
        try:
            session = func(
                self.filename,
                json_output=options.json_output,
                seed=options.seed,
                budget=options.budget,
                threads=self.resolve_threads(options),
                max_degree=options.max_degree
            )
            exit_code = session.run()
        except ScriptError as ex:
            fail('{}: {}'.format(self.filename, ex.diagnostic))
        except (CregroError, OSError, yaml.YAMLError) as ex:
            fail(ex)
        sys.exit(exit_code)

    def run(self, argv=None):
        """Take CLI arguments, parse it, and process."""
        options = self.parser.parse_args(argv)
        show_dependency(options)
        configure_logging(options)
        self.validate_filename(options)
        self.run_cli(options)


def execute(argv=None):
    """Execute cregro console CLI."""
    app = Cli()
    app.run(argv)

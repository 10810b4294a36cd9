"""Module containing the attributes for cregro."""

from os import path
from textwrap import dedent

import numpy
import sympy
import yaml

__version__ = '0.1.0'
version = __version__
__edition__ = 'Community'
edition = __edition__

__all__ = [
    'version',
    'edition',
    'Data'
]


class Data:
    # main app
    main_app_text = 'cregro {} ({} Edition)'.format(version, edition)

    # packages
    sympy_text = 'sympy v{}'.format(sympy.__version__)
    sympy_link = 'https://pypi.org/project/sympy/'

    numpy_text = 'numpy v{}'.format(numpy.__version__)
    numpy_link = 'https://pypi.org/project/numpy/'

    pyyaml_text = 'pyyaml v{}'.format(yaml.__version__)
    pyyaml_link = 'https://pypi.org/project/PyYAML/'

    # engine limits
    max_prime = 2 ** 31
    max_exponent = 2 ** 31 - 1
    max_chain_length = 64
    lcm_lattice_cap = 12
    hilbert_slack = 2

    # theorem-check sweeps
    default_seed = 0
    default_budget = 500
    default_threads = 1
    threads_env_var = 'CREGRO_THREADS'
    betti_guard = 40
    random_prime = 101
    check_names = [
        'hilbert', 'dominance', 'cancellation', 'crystallization',
        'weak_crystallization', 'sameb', 'leila', 'remark', 'lifting',
        'routes', 'criterion', 'ld', 'groebner'
    ]
    indexed_checks = ['sameb', 'leila', 'remark']

    # file types
    script_extensions = ['.crg']
    yaml_extensions = ['.yaml', '.yml']

    # URL
    repo_url = 'https://github.com/cregro/cregro'
    documentation_url = path.join(repo_url, 'blob/develop/README.md')
    license_url = path.join(repo_url, 'blob/develop/LICENSE')
    schema_dir = path.join(path.dirname(__file__), 'schemas')

    # License
    years = '2026-2040'
    license_name = 'BSD 3-Clause License'
    copyright_text = 'Copyright @ {}'.format(years)
    license = dedent(
        """
        BSD 3-Clause License

        Copyright (c) {}, cregro developers
        All rights reserved.

        Redistribution and use in source and binary forms, with or without
        modification, are permitted provided that the conditions of the
        BSD 3-Clause License are met.
        """.format(years)
    ).strip()

    @classmethod
    def get_dependency(cls):
        dependencies = dict(
            numpy=dict(
                package=cls.numpy_text,
                url=cls.numpy_link
            ),
            pyyaml=dict(
                package=cls.pyyaml_text,
                url=cls.pyyaml_link
            ),
            sympy=dict(
                package=cls.sympy_text,
                url=cls.sympy_link
            )
        )
        return dependencies

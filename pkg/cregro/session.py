"""Module containing the logic for running a session script and rendering
its results as text or as JSON documents."""

import json
import logging

from cregro.config import Data
from cregro.argumenthelper import validate_argument_type
from cregro.parser import SessionScript
from cregro.parser import analyze
from cregro.parser import parse
from cregro.groebner import sort_elements
from cregro.initial import initial_module_sat
from cregro.resolution import Quotient
from cregro.resolution import creg_profile
from cregro.resolution import free_resolution
from cregro.resolution import linear_defect
from cregro.resolution import regularity
from cregro.resolution import syzygy_module
from cregro.resolution import truncation
from cregro.checks import Instance
from cregro.checks import InstanceGenerator
from cregro.checks import run_check
from cregro.checks import run_sweep


logger = logging.getLogger(__file__)

SCHEMAS = dict(
    inw='generators.json',
    gb='generators.json',
    truncate='generators.json',
    syz='generators.json',
    betti='betti.json',
    reg='value.json',
    creg='value.json',
    ld='value.json',
    report='check_report.json',
    summary='check_summary.json',
)


def schema_name(document):
    """Return the schema file name describing a ``--json`` document."""
    if document['command'] == 'check':
        return SCHEMAS['summary' if 'summary' in document else 'report']
    return SCHEMAS[document['command']]


class Session:
    """This is a class for running the commands of a session script.

    Attributes
    ----------
    script (SessionScript): the parsed script.
    bound (list): the commands bound to their submodules and weights.
    json_output (bool): emit one JSON document per command.
    seed (int): first sweep seed unless a command sets ``--seed``.
    budget (int): sweep size unless a command sets ``--budget``.
    threads (int): sweep worker threads.
    max_degree (int): largest degree of random generators.

    Methods
    -------
    run(print_func=print) -> int
    execute(bound) -> tuple

    Raises
    ------
    ScriptSemanticError: if the script does not resolve.
    """
    def __init__(self, script, json_output=False, seed=None, budget=None,
                 threads=None, max_degree=None):
        if isinstance(script, str):
            script = parse(script)
        validate_argument_type(SessionScript, script=script)
        self.script = script
        self.bound = analyze(script)
        self.json_output = json_output
        self.seed = Data.default_seed if seed is None else seed
        self.budget = Data.default_budget if budget is None else budget
        self.threads = Data.default_threads if threads is None else threads
        self.max_degree = max_degree

    def __repr__(self):
        return 'Session(commands={})'.format(len(self.bound))

    def __len__(self):
        return len(self.bound)

    def run(self, print_func=print):
        """Execute every command in order.

        Returns
        -------
        int: 0 on success, 1 when a check reported a failure.
        """
        exit_code = 0
        for bound in self.bound:
            logger.debug('running %s', bound.command.to_text())
            document, text, failed = self.execute(bound)
            if self.json_output:
                print_func(json.dumps(document, sort_keys=True))
            else:
                print_func('>>> {}'.format(bound.command.to_text()))
                print_func(text)
            if failed:
                exit_code = 1
        return exit_code

    def execute(self, bound):
        """Return (document, text, failed) for one bound command."""
        name = bound.command.name
        handler = getattr(self, 'do_{}'.format(name))
        document, text, failed = handler(bound)
        document = dict(command=name, **document)
        return document, text, failed

    def _generators(self, bound, label, elements, **extra):
        texts = [element.to_text() for element in sort_elements(elements)]
        document = dict(module=bound.command.target, generators=texts, **extra)
        return document, '{} = [{}]'.format(label, ', '.join(texts)), False

    def do_inw(self, bound):
        initial = initial_module_sat(bound.submodule, bound.weight)
        return self._generators(bound, 'inw', initial.groebner_basis())

    def do_gb(self, bound):
        return self._generators(bound, 'gb', bound.submodule.groebner_basis())

    def do_truncate(self, bound):
        degree = bound.command.argument
        result = truncation(bound.submodule, degree)
        return self._generators(bound, 'truncate', result.generators, degree=degree)

    def do_syz(self, bound):
        index = bound.command.argument or 0
        result = syzygy_module(bound.submodule, index)
        return self._generators(bound, 'syz', result.generators, index=index)

    def do_betti(self, bound):
        table = free_resolution(Quotient(bound.submodule)).betti_table()
        document = dict(module=bound.command.target, **table.to_dict())
        return document, table.to_text(), False

    def _value(self, bound, label, value, **extra):
        document = dict(module=bound.command.target, value=value, **extra)
        return document, '{} = {}'.format(label, value), False

    def do_reg(self, bound):
        return self._value(bound, 'reg', regularity(bound.submodule))

    def do_ld(self, bound):
        return self._value(bound, 'ld', linear_defect(bound.submodule))

    def do_creg(self, bound):
        profile = creg_profile(bound.submodule)
        document, text, failed = self._value(
            bound, 'creg', max(profile.values()),
            profile=[[degree, value] for degree, value in profile.items()]
        )
        rows = ', '.join('d={}: {}'.format(degree, value) for degree, value in profile.items())
        return document, '{}\nprofile: {}'.format(text, rows), failed

    def do_check(self, bound):
        command = bound.command
        if bound.submodule is not None:
            instance = Instance(bound.submodule, bound.weight, label=command.target)
            report = run_check(command.check, instance, argument=command.argument)
            document = dict(check=command.check, module=command.target, report=report.to_dict())
            return document, report.to_text(), report.is_fail

        generator = InstanceGenerator()
        if self.max_degree is not None:
            generator = InstanceGenerator(max_degree=self.max_degree)
        summary = run_sweep(
            command.check,
            seed=self.seed if command.seed is None else command.seed,
            budget=self.budget if command.budget is None else command.budget,
            threads=self.threads,
            argument=command.argument,
            generator=generator
        )
        failures = summary.failures
        document = dict(check=command.check, summary=summary.to_dict(),
                        failures=[report.to_dict() for report in failures])
        lines = [summary.to_text()] + [report.to_text() for report in failures]
        return document, '\n'.join(lines), bool(failures)

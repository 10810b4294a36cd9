"""Module containing the logic for executable theorem checks: instances,
a seeded instance generator, check reports and seeded sweeps."""

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from functools import cached_property
from functools import partial

import numpy as np

from cregro.config import Data
from cregro.argumenthelper import validate_argument_type
from cregro.argumenthelper import validate_argument_choice
from cregro.exceptions import ArgumentValidationError
from cregro.exceptions import CregroError
from cregro.polynomial import CoefficientField
from cregro.polynomial import FreeModule
from cregro.polynomial import Ring
from cregro.polynomial import WeightData
from cregro.polynomial import initial_form
from cregro.groebner import Submodule
from cregro.groebner import buchberger
from cregro.groebner import colon_t
from cregro.groebner import is_groebner
from cregro.groebner import syzygies
from cregro.groebner import torsion_witness
from cregro.initial import LiftingInstance
from cregro.initial import buchberger_criterion
from cregro.initial import homogenize_module
from cregro.initial import initial_generators
from cregro.initial import initial_module_sat
from cregro.initial import lifting_criterion
from cregro.initial import truncated_criterion
from cregro.initial import weight_buchberger
from cregro.resolution import HilbertFunction
from cregro.resolution import Quotient
from cregro.resolution import creg
from cregro.resolution import free_resolution
from cregro.resolution import hilbert_bound
from cregro.resolution import linear_defect
from cregro.resolution import regularity
from cregro.resolution import specialize
from cregro.resolution import syzygy_module
from cregro.resolution import truncation
from cregro.utils import exponents_of_degree


logger = logging.getLogger(__file__)

PASS = 'pass'
FAIL = 'fail'
NOT_APPLICABLE = 'not-applicable'


class CheckReport:
    """The verdict of one check on one instance.

    Attributes
    ----------
    name (str): the check name.
    instance (str): a description that replays the instance.
    seed (int): the generator seed, None for curated instances.
    verdict (str): pass, fail or not-applicable.
    vacuous (bool): True when an implication passed because its hypothesis did not fire.
    witness (dict): the offending data of a failure.
    details (dict): values computed on the way.
    """
    def __init__(self, name, instance='', seed=None, verdict=PASS,
                 vacuous=False, witness=None, details=None):
        validate_argument_choice(verdict=(verdict, (PASS, FAIL, NOT_APPLICABLE)))
        self.name = name
        self.instance = instance
        self.seed = seed
        self.verdict = verdict
        self.vacuous = vacuous
        self.witness = witness
        self.details = details or {}

    def __repr__(self):
        return 'CheckReport({}, {})'.format(self.name, self.verdict)

    @property
    def is_pass(self):
        return self.verdict == PASS

    @property
    def is_fail(self):
        return self.verdict == FAIL

    @property
    def is_not_applicable(self):
        return self.verdict == NOT_APPLICABLE

    def to_dict(self):
        return dict(
            name=self.name,
            instance=self.instance,
            seed=self.seed,
            verdict=self.verdict,
            vacuous=self.vacuous,
            witness=self.witness,
            details=self.details
        )

    def to_text(self):
        status = self.verdict
        if self.vacuous:
            status += ' (vacuous)'
        if self.seed is not None:
            status += ' (seed {})'.format(self.seed)
        lines = ['{}: {} :: {}'.format(self.name, status, self.instance)]
        for key, value in sorted(self.details.items()):
            lines.append('  {}: {}'.format(key, _render(value)))
        if self.witness is not None:
            lines.append('  witness: {}'.format(json.dumps(self.witness, sort_keys=True)))
        return '\n'.join(lines)


def _render(value):
    if isinstance(value, (list, tuple)):
        if any(isinstance(item, (list, tuple, dict)) for item in value):
            return json.dumps(value)
        return ', '.join(str(item) for item in value)
    if isinstance(value, dict):
        return ', '.join('{}: {}'.format(k, _render(v)) for k, v in value.items())
    return str(value)


class Instance:
    """A graded submodule M with weights, and lazily computed companions.

    Parameters
    ----------
    submodule (Submodule): the module M.
    weight (WeightData): the weights (omega, epsilon).
    seed (int): the generator seed the instance came from, if any.
    label (str): a name for curated instances.
    """
    def __init__(self, submodule, weight, seed=None, label=''):
        validate_argument_type(Submodule, submodule=submodule)
        validate_argument_type(WeightData, weight=weight)
        self.submodule = submodule
        self.weight = weight.for_module(submodule.ambient)
        self.seed = seed
        self.label = label

    def __repr__(self):
        return 'Instance({})'.format(self.describe())

    def describe(self):
        ambient = self.submodule.ambient
        shifts = ','.join(str(shift[0]) for shift in ambient.shifts)
        return '{} F=({}) {} M={}'.format(
            ambient.ring.to_text(), shifts, self.weight.to_text(), self.submodule.to_text()
        )

    @cached_property
    def family(self):
        return homogenize_module(self.submodule, self.weight)

    @cached_property
    def initial(self):
        return self.family.fiber(0)

    @cached_property
    def quotient_table(self):
        return free_resolution(Quotient(self.submodule)).betti_table()

    @cached_property
    def initial_quotient_table(self):
        return free_resolution(Quotient(self.initial)).betti_table()

    @cached_property
    def module_resolution(self):
        return free_resolution(self.submodule)

    @cached_property
    def module_table(self):
        return self.module_resolution.betti_table()

    @cached_property
    def initial_table(self):
        return free_resolution(self.initial).betti_table()

    @cached_property
    def initial_creg(self):
        return creg(self.initial)

    @cached_property
    def module_creg(self):
        return creg(self.submodule)

    def report(self, name, **kwargs):
        return CheckReport(name, instance=self.describe(), seed=self.seed, **kwargs)


def as_instance(subject, weight=None):
    """Wrap a submodule (with weights) as an Instance; instances pass through."""
    if isinstance(subject, Instance):
        return subject
    if weight is None:
        weight = WeightData((0,) * subject.ring.nvars)
    return Instance(subject, weight)


class InstanceGenerator:
    """Seeded random graded submodules with small weights.

    Every instance depends on its seed alone, so a failing seed replays.

    Parameters
    ----------
    max_vars (int): largest number of variables, 2 to 4.  Default is 3.
    max_rank (int): largest free module rank, 1 to 3.  Default is 2.
    max_generators (int): largest number of generators, 1 to 6.  Default is 4.
    max_degree (int): largest generator degree, 1 to 6.  Default is 4.
    coefficient_bound (int): coefficients are drawn from [-bound, bound].  Default is 3.
    max_weight (int): weights are drawn from [0, max_weight].  Default is 4.
    prime (int): characteristic of the finite field instances.  Default is 101.
    """
    names = ('x', 'y', 'z', 'w')
    limits = dict(max_vars=(2, 4), max_rank=(1, 3), max_generators=(1, 6), max_degree=(1, 6))

    def __init__(self, max_vars=3, max_rank=2, max_generators=4, max_degree=4,
                 coefficient_bound=3, max_weight=4, prime=None):
        options = dict(max_vars=max_vars, max_rank=max_rank,
                       max_generators=max_generators, max_degree=max_degree)
        validate_argument_type(int, coefficient_bound=coefficient_bound,
                               max_weight=max_weight, **options)
        for name, value in options.items():
            low, high = self.limits[name]
            if not low <= value <= high:
                fmt = '{} argument must be between {} and {}, got {}.'
                raise ArgumentValidationError(fmt.format(name, low, high, value))
        if coefficient_bound < 1 or max_weight < 0:
            raise ArgumentValidationError('coefficient_bound must be positive and max_weight non-negative.')
        self.max_vars = max_vars
        self.max_rank = max_rank
        self.max_generators = max_generators
        self.max_degree = max_degree
        self.coefficient_bound = coefficient_bound
        self.max_weight = max_weight
        self.prime = Data.random_prime if prime is None else prime

    def _coefficient(self, rng):
        bound = self.coefficient_bound
        value = 0
        while not value:
            value = int(rng.integers(-bound, bound + 1))
        return value

    def _element(self, rng, module):
        nvars = module.ring.nvars
        while True:
            degree = int(rng.integers(1, self.max_degree + 1))
            components = [j for j, shift in enumerate(module.shifts) if degree - shift[0] >= 1]
            if not components:
                continue
            terms = []
            for _ in range(int(rng.integers(1, 4))):
                component = components[int(rng.integers(len(components)))]
                candidates = exponents_of_degree(nvars, degree - module.shifts[component][0])
                exponents = candidates[int(rng.integers(len(candidates)))]
                terms.append((self._coefficient(rng), exponents, component))
            element = module.element(terms)
            if element:
                return element

    def instance(self, seed):
        """Return the instance of ``seed``."""
        rng = np.random.default_rng(seed)
        nvars = int(rng.integers(2, self.max_vars + 1))
        field = CoefficientField(self.prime if rng.random() < 0.5 else 0)
        ring = Ring(self.names[:nvars], field)
        rank = int(rng.integers(1, self.max_rank + 1))
        shifts = [0] + [int(rng.integers(0, 2)) for _ in range(rank - 1)]
        module = FreeModule(ring, shifts)
        count = int(rng.integers(1, self.max_generators + 1))
        generators = [self._element(rng, module) for _ in range(count)]
        omega = tuple(int(rng.integers(0, self.max_weight + 1)) for _ in range(nvars))
        epsilon = tuple(int(rng.integers(0, self.max_weight + 1)) for _ in range(rank))
        weight = WeightData(omega, epsilon)
        return Instance(Submodule(module, generators), weight, seed=seed)

    def instances(self, seed, budget):
        return [self.instance(seed + offset) for offset in range(budget)]


CURATED = [
    ('complete-intersection', 'QQ', 'x,y', (0,), ['x^2+y^2', 'x*y'], (1, 0), ()),
    ('twisted-cubic-pencil', 'QQ', 'x,y,z', (0,), ['x^2-y*z', 'y^2-x*z'], (1, 1, 0), ()),
    ('square-of-maximal', 'QQ', 'x,y', (0,), ['x^2', 'x*y', 'y^2'], (1, 0), ()),
    ('linear-quotient', 'QQ', 'x,y', (0,), ['x^2', 'x*y'], (2, 1), ()),
    ('principal', 'QQ', 'x,y', (0,), ['x^2+x*y+y^2'], (1, 0), ()),
    ('rank-two', 'QQ', 'x,y', (0, 1), ['x^2*e1+y*e2'], (1, 1), (0, 2)),
    ('zero-weight', 'QQ', 'x,y,z', (0,), ['x*y-z^2', 'x*z-y^2'], (0, 0, 0), ()),
    ('degree-gap', 'QQ', 'x,y', (0,), ['x^3', 'x^2*y', 'y^3'], (0, 1), ()),
    ('mixed-degrees', 'QQ', 'x,y', (0,), ['x^2', 'y^3'], (1, 1), ()),
    ('prime-field', 'GF(101)', 'x,y,z', (0,), ['x^2+y*z', 'x*y+z^2'], (1, 2, 0), ()),
]


def curated_corpus():
    """Return the hand-checked instances with known values."""
    from cregro.parser import parse_element

    corpus = []
    for label, field, names, shifts, elements, omega, epsilon in CURATED:
        ring = Ring(names.split(','), CoefficientField.from_text(field))
        module = FreeModule(ring, shifts)
        generators = [parse_element(text, module) for text in elements]
        weight = WeightData(omega, epsilon)
        corpus.append(Instance(Submodule(module, generators), weight, label=label))
    return corpus


def check_hilbert_preservation(subject, weight=None):
    """Pass iff M and in(M) share their Hilbert function up to the tabulation bound."""
    instance = as_instance(subject, weight)
    module, initial = instance.submodule, instance.initial
    bound = hilbert_bound(module)
    left, right = HilbertFunction(module), HilbertFunction(initial)
    mismatches = [d for d in range(bound + 1) if left.value(d) != right.value(d)]
    quotient = HilbertFunction(Quotient(module)).values(bound)
    details = dict(bound=bound, hilbert=quotient)
    if mismatches:
        witness = dict(degrees=mismatches,
                       module=[left.value(d) for d in mismatches],
                       initial=[right.value(d) for d in mismatches])
        return instance.report('hilbert', verdict=FAIL, witness=witness, details=details)
    if left.series_numerator is not None and right.series_numerator is not None:
        if left.series_numerator != right.series_numerator:
            witness = dict(numerators=[sorted(left.series_numerator.items()),
                                       sorted(right.series_numerator.items())])
            return instance.report('hilbert', verdict=FAIL, witness=witness, details=details)
    return instance.report('hilbert', details=details)


def check_betti_dominance(subject, weight=None):
    """Pass iff beta_ij(F/M) <= beta_ij(F/in(M)) everywhere."""
    instance = as_instance(subject, weight)
    table, initial = instance.quotient_table, instance.initial_quotient_table
    details = dict(module=table.totals(), initial=initial.totals())
    violations = table.violations(initial)
    if violations:
        witness = dict(entries=[[i, j, table[(i, j)], initial[(i, j)]] for i, j in violations])
        return instance.report('dominance', verdict=FAIL, witness=witness, details=details)
    return instance.report('dominance', details=details)


def check_consecutive_cancellation(subject, weight=None):
    """Pass iff the Betti table of F/M comes from that of F/in(M) by
    consecutive cancellations."""
    instance = as_instance(subject, weight)
    table, initial = instance.quotient_table, instance.initial_quotient_table
    cancellations = initial.consecutive_cancellations(table)
    if cancellations is None:
        witness = dict(module=table.to_dict()['betti'], initial=initial.to_dict()['betti'])
        return instance.report('cancellation', verdict=FAIL, witness=witness)
    details = dict(cancellations=[[i, j, k, l, count] for (i, j), (k, l), count in cancellations])
    return instance.report('cancellation', details=details)


def _weak_window(initial, top):
    table = free_resolution(truncation(initial, top)).betti_table()
    degrees = table.degrees(1)
    if not degrees:
        return 0
    return max(0, degrees[-1] - top - 1)


def check_crystallization(subject, weight=None, mode='creg'):
    """Pass unless in(M) has no generators in degrees a+1..a+1+r yet has
    one above a, where a is the top generator degree of M.

    ``mode`` selects r: ``creg`` uses creg(in(M)); ``weak`` uses the least
    r with beta_{1,d+1}(in(M)<a>) = 0 for all d > a + r.
    """
    validate_argument_choice(mode=(mode, ('creg', 'weak')))
    instance = as_instance(subject, weight)
    name = 'crystallization' if mode == 'creg' else 'weak_crystallization'
    top = max(instance.submodule.generator_degrees())
    degrees = instance.initial.generator_degrees()
    window = instance.initial_creg if mode == 'creg' else _weak_window(instance.initial, top)
    details = dict(a=top, r=window, degrees=degrees)
    gap = range(top + 1, top + 2 + window)
    if any(degree in gap for degree in degrees):
        return instance.report(name, vacuous=True, details=details)
    if max(degrees) > top:
        witness = dict(a=top, r=window, degrees=[d for d in degrees if d > top])
        return instance.report(name, verdict=FAIL, witness=witness, details=details)
    return instance.report(name, details=details)


def check_thm_same_b(subject, weight=None, level=0):
    """With in(M) componentwise linear, pass iff beta_level(M) = beta_level(in(M))
    implies that M is componentwise linear."""
    validate_argument_choice(level=(level, (0, 1)))
    instance = as_instance(subject, weight)
    if instance.initial_creg != 0:
        details = dict(initial_creg=instance.initial_creg)
        return instance.report('sameb', verdict=NOT_APPLICABLE, details=details)
    module_total = instance.module_table.total(level)
    initial_total = instance.initial_table.total(level)
    details = dict(level=level, module=module_total, initial=initial_total)
    if module_total != initial_total:
        return instance.report('sameb', vacuous=True, details=details)
    details.update(creg=instance.module_creg)
    if instance.module_creg != 0:
        return instance.report('sameb', verdict=FAIL, witness=dict(creg=instance.module_creg),
                               details=details)
    return instance.report('sameb', details=details)


def check_thm_leila(subject, weight=None, index=2):
    """With in(M) componentwise linear and beta_index(M) = beta_index(in(M)),
    pass iff every syzygy module Omega_j(M), j >= index - 2, is
    componentwise linear."""
    validate_argument_type(int, index=index)
    if index <= 1:
        report = check_thm_same_b(subject, weight, level=max(index, 0))
        report.name = 'leila'
        report.details['delegated'] = 'sameb'
        return report

    instance = as_instance(subject, weight)
    if instance.initial_creg != 0:
        details = dict(initial_creg=instance.initial_creg)
        return instance.report('leila', verdict=NOT_APPLICABLE, details=details)
    module_total = instance.module_table.total(index)
    initial_total = instance.initial_table.total(index)
    if module_total != initial_total:
        details = dict(index=index, module=module_total, initial=initial_total)
        return instance.report('leila', verdict=NOT_APPLICABLE, details=details)

    resolution = instance.module_resolution
    checked = {}
    for position in range(index - 2, resolution.length + 1):
        omega = syzygy_module(instance.submodule, position, resolution=resolution)
        if omega.is_zero:
            continue
        value = creg(omega)
        checked[position] = value
        if value != 0:
            witness = dict(index=position, creg=value)
            return instance.report('leila', verdict=FAIL, witness=witness,
                                   details=dict(index=index, creg=checked))
    return instance.report('leila', details=dict(index=index, creg=checked))


def check_remark_syzygy_initial(subject, weight=None, index=1):
    """Pass iff in_(omega, eps(i))(B_{t=1}) = B_{t=0}, where B is the image of
    the (i+1)-st differential of the minimal bigraded resolution of F~/M~."""
    validate_argument_type(int, index=index)
    instance = as_instance(subject, weight)
    guard = sum(instance.initial_quotient_table.totals())
    if guard > Data.betti_guard:
        return instance.report('remark', verdict=NOT_APPLICABLE,
                               details=dict(betti_total=guard))
    resolution = free_resolution(Quotient(instance.family.mtilde))
    if index < 0 or index >= len(resolution.maps):
        return instance.report('remark', vacuous=True, details=dict(index=index))

    epsilon = tuple(shift[1] for shift in resolution.modules[index].shifts)
    induced = WeightData(instance.weight.omega, epsilon)
    images = []
    for alpha in (1, 0):
        specialized = specialize(resolution, alpha)
        images.append(Submodule(specialized.modules[index], specialized.maps[index]))
    left = initial_module_sat(images[0], induced)
    details = dict(index=index, epsilon=list(epsilon))
    if left != images[1]:
        witness = dict(left=left.to_text(), right=images[1].to_text())
        return instance.report('remark', verdict=FAIL, witness=witness, details=details)
    return instance.report('remark', details=details)


def check_lifting_lemma(subject, weight=None):
    """Pass iff the lifting criterion agrees with the direct t-torsion test.

    ``subject`` is a LiftingInstance, or an instance whose every step of
    the lifting-lemma algorithm is tested.
    """
    if isinstance(subject, LiftingInstance):
        pairs = [(0, subject)]
        report = partial(CheckReport, 'lifting', instance=repr(subject))
    else:
        instance = as_instance(subject, weight)
        _, trace = weight_buchberger(instance.submodule, instance.weight)
        pairs = [(step.index, LiftingInstance.from_step(step)) for step in trace.steps]
        report = partial(instance.report, 'lifting')

    tally = {'true': 0, 'false': 0}
    for step, lifting in pairs:
        criterion = lifting_criterion(lifting)
        witness = torsion_witness(lifting.image)
        if criterion != (witness is None):
            text = None if witness is None else witness.to_text()
            return report(verdict=FAIL, witness=dict(step=step, criterion=criterion, torsion=text),
                          details=tally)
        tally['true' if criterion else 'false'] += 1
    return report(details=tally)


def check_route_equivalence(subject, weight=None):
    """Pass iff saturation and the lifting-lemma algorithm (both division
    modes) give the same initial module, the terminal chain member is
    M~, and taking the initial module twice changes nothing."""
    instance = as_instance(subject, weight)
    saturated = instance.initial
    single, trace = weight_buchberger(instance.submodule, instance.weight)
    maximal, fast_trace = weight_buchberger(instance.submodule, instance.weight, divide_max_t=True)
    details = dict(chain=len(trace), chain_max_t=len(fast_trace))
    mtilde = instance.family.mtilde

    problems = []
    if single != saturated:
        problems.append('single-t route differs')
    if maximal != saturated:
        problems.append('maximal-t route differs')
    if colon_t(trace.terminal) != trace.terminal:
        problems.append('terminal member not saturated')
    if trace.terminal != mtilde:
        problems.append('terminal member differs from the homogenization')
    if not all(mtilde.contains_submodule(member) for member in trace.chain):
        problems.append('chain member outside the homogenization')
    if initial_module_sat(saturated, instance.weight) != saturated:
        problems.append('initial module not idempotent')
    if problems:
        witness = dict(problems=problems, saturation=saturated.to_text(), lifting=single.to_text())
        return instance.report('routes', verdict=FAIL, witness=witness, details=details)
    return instance.report('routes', details=details)


def check_buchberger_criterion(subject, weight=None):
    """Pass iff both syzygy strategies and the truncated criterion return
    True exactly when the initial forms generate in(M)."""
    instance = as_instance(subject, weight)
    generators = instance.submodule.generators
    expected = initial_generators(instance.submodule, instance.weight) == instance.initial
    forms = [initial_form(g, instance.weight) for g in generators]
    syzygy_degree = syzygies(forms).max_degree
    bound = max([g.standard_degree for g in generators] + [syzygy_degree or 0])

    values = dict(
        schreyer=buchberger_criterion(generators, instance.weight),
        minimal=buchberger_criterion(generators, instance.weight, minimal=True),
        truncated=truncated_criterion(generators, instance.weight, bound)
    )
    details = dict(expected=expected, bound=bound, **values)
    wrong = sorted(name for name, value in values.items() if value != expected)
    if wrong:
        return instance.report('criterion', verdict=FAIL, witness=dict(disagree=wrong),
                               details=details)
    return instance.report('criterion', details=details)


def check_linear_defect(subject, weight=None):
    """Pass iff ld = 0 exactly when creg = 0, and reg <= d + creg, for both
    M and in(M)."""
    instance = as_instance(subject, weight)
    details = {}
    for label, module in (('module', instance.submodule), ('initial', instance.initial)):
        value = creg(module)
        defect = linear_defect(module)
        top = max(module.generator_degrees())
        reg = regularity(module)
        details[label] = dict(ld=defect, creg=value, reg=reg, d=top)
        if (defect == 0) != (value == 0) or reg > top + value:
            return instance.report('ld', verdict=FAIL, witness=dict(side=label, **details[label]),
                                   details=details)
    return instance.report('ld', details=details)


def check_groebner_engine(subject, weight=None):
    """Pass iff every s-pair of the reduced bases of M and in(M) reduces to
    zero and the basis does not depend on the generator order."""
    instance = as_instance(subject, weight)
    basis = instance.submodule.groebner_basis()
    problems = []
    if not is_groebner(basis):
        problems.append('module basis')
    if not is_groebner(instance.initial.groebner_basis()):
        problems.append('initial basis')
    generators = list(instance.submodule.generators)
    rng = np.random.default_rng(instance.seed or 0)
    for permutation in (generators[::-1], [generators[k] for k in rng.permutation(len(generators))]):
        if buchberger(permutation) != basis:
            problems.append('permutation changes the basis')
            break
    details = dict(basis=len(basis))
    if problems:
        return instance.report('groebner', verdict=FAIL, witness=dict(problems=problems),
                               details=details)
    return instance.report('groebner', details=details)


CHECKS = {
    'hilbert': check_hilbert_preservation,
    'dominance': check_betti_dominance,
    'cancellation': check_consecutive_cancellation,
    'crystallization': check_crystallization,
    'weak_crystallization': partial(check_crystallization, mode='weak'),
    'sameb': check_thm_same_b,
    'leila': check_thm_leila,
    'remark': check_remark_syzygy_initial,
    'lifting': check_lifting_lemma,
    'routes': check_route_equivalence,
    'criterion': check_buchberger_criterion,
    'ld': check_linear_defect,
    'groebner': check_groebner_engine,
}

ARGUMENT_NAMES = dict(sameb='level', leila='index', remark='index')


def run_check(name, instance, argument=None):
    """Run one check; engine errors become failing reports.

    Parameters
    ----------
    name (str): a registered check name.
    instance (Instance): the instance.
    argument (int): level for ``sameb``, homological index for ``leila`` and ``remark``.
    """
    validate_argument_choice(name=(name, tuple(CHECKS)))
    if instance.submodule.is_zero:
        return instance.report(name, verdict=NOT_APPLICABLE, details=dict(reason='zero module'))
    kwargs = {}
    if argument is not None and name in ARGUMENT_NAMES:
        kwargs[ARGUMENT_NAMES[name]] = argument
    try:
        report = CHECKS[name](instance, **kwargs)
    except CregroError as ex:
        report = instance.report(name, verdict=FAIL,
                                 witness=dict(error='{}: {}'.format(type(ex).__name__, ex)))
    if not report.is_pass:
        logger.info('%s', report.to_text())
    return report


class SweepSummary:
    """Counts of a sweep: pass, fail, not-applicable and vacuous passes.

    ``fired`` counts the passes whose hypothesis held, the distribution
    guard; a sweep where it stays zero is flagged.  A ``lifting`` sweep
    also sums how often the lifting criterion came out true and false.
    """
    def __init__(self, name, reports):
        self.name = name
        self.reports = list(reports)

    def __repr__(self):
        return 'SweepSummary({}, {})'.format(self.name, self.counts)

    @property
    def counts(self):
        counts = dict(seeds=len(self.reports), fired=0, vacuous=0)
        counts.update({PASS: 0, FAIL: 0, NOT_APPLICABLE: 0})
        for report in self.reports:
            counts[report.verdict] += 1
            if report.is_pass:
                counts['vacuous' if report.vacuous else 'fired'] += 1
        return counts

    @property
    def never_fired(self):
        counts = self.counts
        return counts['seeds'] > 0 and counts['fired'] == 0

    @property
    def lifting_tally(self):
        """Return the summed criterion outcomes of a lifting sweep, else None."""
        if self.name != 'lifting':
            return None
        tally = {'true': 0, 'false': 0}
        for report in self.reports:
            for key in tally:
                tally[key] += report.details.get(key, 0)
        return tally

    @property
    def failures(self):
        return [report for report in self.reports if report.is_fail]

    def to_dict(self):
        counts = self.counts
        result = {'name': self.name, 'seeds': counts['seeds'], 'pass': counts[PASS],
                  'fail': counts[FAIL], 'na': counts[NOT_APPLICABLE],
                  'vacuous': counts['vacuous'], 'fired': counts['fired'],
                  'never_fired': self.never_fired}
        if self.lifting_tally is not None:
            result['lifting'] = self.lifting_tally
        return result

    def to_text(self):
        counts = self.counts
        fmt = 'check {}: {} instances, pass {}, fail {}, not-applicable {}, vacuous {}, fired {}'
        text = fmt.format(self.name, counts['seeds'], counts[PASS], counts[FAIL],
                          counts[NOT_APPLICABLE], counts['vacuous'], counts['fired'])
        tally = self.lifting_tally
        if tally is not None:
            text += ', criterion true {}, false {}'.format(tally['true'], tally['false'])
        if self.never_fired:
            text += ' (hypothesis never fired)'
        return text


def run_sweep(name, seed=None, budget=None, threads=None, argument=None,
              curated=True, generator=None):
    """Run a check over the curated corpus and ``budget`` seeded instances.

    Reports are kept in seed order whatever the thread count.

    Parameters
    ----------
    name (str): a registered check name.
    seed (int): the first seed.  Default is Data.default_seed.
    budget (int): the number of random instances.  Default is Data.default_budget.
    threads (int): worker threads.  Default is Data.default_threads.
    argument (int): passed through to run_check.
    curated (bool): include the curated corpus first.  Default is True.
    generator (InstanceGenerator): the random distribution.

    Returns
    -------
    SweepSummary: the reports and their counts.
    """
    seed = Data.default_seed if seed is None else seed
    budget = Data.default_budget if budget is None else budget
    threads = Data.default_threads if threads is None else threads
    validate_argument_type(int, seed=seed, budget=budget, threads=threads)
    if budget < 0 or threads < 1:
        raise ArgumentValidationError('budget must be non-negative and threads positive.')
    generator = generator or InstanceGenerator()

    instances = curated_corpus() if curated else []
    instances += generator.instances(seed, budget)
    task = partial(_run_one, name, argument)
    if threads == 1:
        reports = [task(instance) for instance in instances]
    else:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            reports = list(executor.map(task, instances))
    summary = SweepSummary(name, reports)
    logger.info('%s', summary.to_text())
    if summary.never_fired:
        logger.warning('check %s: hypothesis never fired on %d instances', name, len(reports))
    return summary


def _run_one(name, argument, instance):
    return run_check(name, instance, argument=argument)

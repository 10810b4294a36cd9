"""Module containing the logic for initial modules with respect to weights:
the saturation route, the lifting-lemma algorithm and its criteria."""

import logging

from cregro.config import Data
from cregro.polynomial import BigradedContext
from cregro.polynomial import initial_form
from cregro.polynomial import linear_combination
from cregro.polynomial import reduce_mod_t
from cregro.groebner import Submodule
from cregro.groebner import syzygies
from cregro.groebner import saturate_t
from cregro.groebner import colon_t
from cregro.groebner import buchberger
from cregro.resolution import hilbert_function
from cregro.exceptions import ElementError
from cregro.exceptions import GroebnerError
from cregro.exceptions import HomogeneityError
from cregro.exceptions import LiftingInstanceError
from cregro.exceptions import DegreeBoundError


logger = logging.getLogger(__file__)


def _require_graded(submodule):
    for generator in submodule.generators:
        if not generator.is_homogeneous:
            raise HomogeneityError('generator not homogeneous: {}'.format(generator.to_text()))


class FlatFamily:
    """The homogenization M~ of M, a flat family over K[t].

    Attributes
    ----------
    context (BigradedContext): the bigraded ring and module.
    mtilde (Submodule): the saturated homogenization inside F~.
    source (Submodule): the original M.
    """
    def __init__(self, context, mtilde, source):
        self.context = context
        self.mtilde = mtilde
        self.source = source

    def __repr__(self):
        return 'FlatFamily({})'.format(self.mtilde.to_text())

    def fiber(self, alpha):
        """Return M~ evaluated at t = alpha as a submodule of F."""
        generators = [self.context.evaluate(g, alpha) for g in self.mtilde.generators]
        module = self.context.base_module
        return Submodule(module, buchberger(generators), check=False)

    def is_flat(self):
        """Return True if (M~ : t) = M~."""
        return colon_t(self.mtilde) == self.mtilde


def homogenize_module(submodule, weight):
    """Return the flat family <f~_1, ..., f~_r> : t^infinity.

    Raises
    ------
    HomogeneityError: if a generator is not standard homogeneous.
    """
    _require_graded(submodule)
    context = BigradedContext(submodule.ambient, weight)
    lifted = [context.homogenize(g) for g in submodule.generators]
    mtilde = saturate_t(Submodule(context.module, lifted, check=False))
    return FlatFamily(context, mtilde, submodule)


def initial_module_sat(submodule, weight):
    """Return in_(omega, epsilon)(M) as M~ at t = 0, through saturation."""
    return homogenize_module(submodule, weight).fiber(0)


def initial_generators(submodule, weight):
    """Return the submodule spanned by the initial forms of the generators."""
    weight = weight.for_module(submodule.ambient)
    forms = [initial_form(g, weight) for g in submodule.generators]
    return Submodule(submodule.ambient, forms)


class TraceStep:
    """One pass of the lifting-lemma algorithm.

    Attributes
    ----------
    index (int): the chain index k of M_k.
    generators (tuple): generators of M_k over A[t].
    reductions (tuple): the generators modulo t.
    presentation (SyzygyPresentation): syzygies Phi of the reductions.
    image (tuple): the image (g~) o Phi, each divisible by t.
    quotient (tuple): the generators of Q.
    additions (tuple): the generators of Q not in M_k.
    """
    def __init__(self, index, generators, reductions, presentation, image, quotient, additions):
        self.index = index
        self.generators = tuple(generators)
        self.reductions = tuple(reductions)
        self.presentation = presentation
        self.image = tuple(image)
        self.quotient = tuple(quotient)
        self.additions = tuple(additions)

    def __repr__(self):
        return 'TraceStep(k={}, added={})'.format(self.index, len(self.additions))

    @property
    def is_terminal(self):
        return not self.additions


class AlgorithmTrace:
    """The chain M_0 in M_1 in ... in M_k built by the lifting-lemma algorithm."""
    def __init__(self, context, chain, steps):
        self.context = context
        self.chain = tuple(chain)
        self.steps = tuple(steps)

    def __repr__(self):
        return 'AlgorithmTrace(length={})'.format(len(self.chain))

    def __len__(self):
        return len(self.chain)

    @property
    def terminal(self):
        return self.chain[-1]

    @property
    def termination_step(self):
        return len(self.steps) - 1

    def to_text(self):
        lines = []
        for step in self.steps:
            quotient = ', '.join(g.to_text() for g in step.quotient) or '0'
            status = 'stop' if step.is_terminal else 'add {}'.format(len(step.additions))
            lines.append('step {}: Q = [{}] -> {}'.format(step.index, quotient, status))
        return '\n'.join(lines)


def _lifting_step(generators, divide_max_t=False, minimal=False):
    reductions = [reduce_mod_t(g) for g in generators]
    presentation = syzygies(reductions, minimal=minimal, degrees=[g.degree for g in generators],
                            ambient=generators[0].module)
    module = generators[0].module
    image = [linear_combination(column, generators, module) for column in presentation.columns]
    quotient = []
    for element in image:
        if not element:
            continue
        if not element.t_order():
            raise GroebnerError('image element {} is not divisible by t'.format(element.to_text()))
        quotient.append(element.strip_t() if divide_max_t else element.divide_by_t(1))
    return reductions, presentation, image, quotient


def weight_buchberger(submodule, weight, divide_max_t=False):
    """Compute in_(omega, epsilon)(M) by the lifting-lemma algorithm.

    At each step the syzygies Phi of the generators modulo t are lifted,
    the image (g~) o Phi is divided by t to give Q, and the chain grows
    by the part of Q outside M_k until Q lies in M_k.

    Parameters
    ----------
    submodule (Submodule): a graded M.
    weight (WeightData): the weights.
    divide_max_t (bool): divide by the largest power of t instead of t.

    Returns
    -------
    tuple: (Submodule, AlgorithmTrace), the initial module in F and the trace.
    """
    _require_graded(submodule)
    if submodule.is_zero:
        raise ElementError('the lifting-lemma algorithm needs non-zero generators')
    context = BigradedContext(submodule.ambient, weight)
    generators = [context.homogenize(g) for g in submodule.generators]
    current = Submodule(context.module, generators, check=False)
    chain, steps = [current], []

    for index in range(Data.max_chain_length):
        reductions, presentation, image, quotient = _lifting_step(
            list(current.generators), divide_max_t=divide_max_t
        )
        additions = []
        for element in quotient:
            if not current.contains(element) and not any(element == a for a in additions):
                additions.append(element)
        step = TraceStep(index, current.generators, reductions, presentation, image, quotient, additions)
        steps.append(step)
        logger.debug('lifting step %d: %d syzygies, %d new generators',
                     index, presentation.source_rank, len(additions))
        if not additions:
            break
        current = Submodule(context.module, list(current.generators) + additions, check=False)
        chain.append(current)
    else:
        raise GroebnerError('chain did not stabilize within {} steps'.format(Data.max_chain_length))

    fiber = [context.evaluate(g, 0) for g in current.generators]
    initial = Submodule(submodule.ambient, buchberger(fiber), check=False)
    return initial, AlgorithmTrace(context, chain, steps)


class LiftingInstance:
    """The lifting diagram G_2 -> G_1 -> G_0 over A[t] with l = t.

    Attributes
    ----------
    g1 (tuple): images of the basis of G_1 in G_0 (elements of G_0).
    g2 (tuple): images of the basis of G_2 in G_1.
    f1 (tuple): g1 modulo t.
    f2 (tuple): g2 modulo t.
    target (FreeModule): G_0.
    """
    def __init__(self, g1, g2, target=None):
        g1, g2 = tuple(g1), tuple(g2)
        if target is None:
            if not g1:
                raise LiftingInstanceError('an empty g1 needs an explicit target module')
            target = g1[0].module
        if target.ring.t_index is None:
            raise LiftingInstanceError('a lifting instance lives over the bigraded ring')
        for element in g1:
            if element.module != target:
                raise LiftingInstanceError('every column of g1 must lie in G_0')
        for column in g2:
            if column.module.rank != len(g1):
                fmt = 'a column of g2 has rank {} but g1 has {} columns'
                raise LiftingInstanceError(fmt.format(column.module.rank, len(g1)))
            if column.module.ring != target.ring:
                raise LiftingInstanceError('g1 and g2 must share the ring')
        self.g1, self.g2, self.target = g1, g2, target
        self.f1 = tuple(reduce_mod_t(g) for g in g1)
        self.f2 = tuple(reduce_mod_t(column) for column in g2)
        for column in self.f2:
            if linear_combination(column, self.f1, target):
                raise LiftingInstanceError('the reductions modulo t do not form a complex')

    def __repr__(self):
        return 'LiftingInstance(g1={}, g2={})'.format(len(self.g1), len(self.g2))

    @classmethod
    def from_generators(cls, generators, minimal=False):
        """Build the instance of a generator tuple of F~ and the syzygies of
        its reductions modulo t."""
        generators = tuple(generators)
        if not generators:
            raise LiftingInstanceError('a lifting instance needs generators')
        reductions = [reduce_mod_t(g) for g in generators]
        presentation = syzygies(reductions, minimal=minimal,
                                degrees=[g.degree for g in generators],
                                ambient=generators[0].module)
        return cls(generators, presentation.columns)

    @classmethod
    def from_step(cls, step):
        return cls(step.generators, step.presentation.columns)

    @property
    def image(self):
        """Return the submodule im(g1) of G_0."""
        return Submodule(self.target, self.g1, check=False)


def lifting_criterion(instance):
    """Return True iff g1 o g2 (G_2) lies in t * g1(G_1).

    That holds exactly when t is a non-zerodivisor on G_0 / im(g1).
    """
    image = instance.image
    for column in instance.g2:
        element = linear_combination(column, instance.g1, instance.target)
        if not element:
            continue
        if not element.t_order():
            return False
        if not image.contains(element.divide_by_t(1)):
            return False
    return True


def buchberger_criterion(generators, weight, minimal=False):
    """Return True if (1/t)(f~) o Phi lies in <f~>.

    When it holds the initial forms of ``generators`` generate the
    initial module.  ``minimal`` selects a minimal syzygy generating set.
    """
    generators = list(generators)
    if not generators:
        raise ElementError('the criterion needs non-zero generators')
    submodule = Submodule(generators[0].module, generators)
    context = BigradedContext(submodule.ambient, weight)
    lifted = [context.homogenize(g) for g in submodule.generators]
    return lifting_criterion(LiftingInstance.from_generators(lifted, minimal=minimal))


def truncated_criterion(generators, weight, bound):
    """Return True if <in f_i> and in(M) agree in every degree <= ``bound``.

    in(M) and M share their Hilbert function, so the comparison is made
    against M.  When it holds the two modules are equal.

    Raises
    ------
    DegreeBoundError: if ``bound`` is below the degree of the syzygies.
    ElementError: if ``generators`` is empty.
    """
    generators = list(generators)
    if not generators:
        raise ElementError('the criterion needs non-zero generators')
    submodule = Submodule(generators[0].module, generators)
    forms = initial_generators(submodule, weight)
    presentation = syzygies(forms.generators)
    if presentation.max_degree is not None and bound < presentation.max_degree:
        raise DegreeBoundError('bound below syzygy degree')
    for degree in range(bound + 1):
        if hilbert_function(forms, degree) != hilbert_function(submodule, degree):
            logger.debug('truncated criterion: dimensions differ in degree %d', degree)
            return False
    return True

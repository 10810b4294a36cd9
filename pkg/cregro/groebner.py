"""Module containing the logic for the Groebner engine: normal forms,
Buchberger's algorithm, membership, syzygies and saturation by t."""

import heapq
import logging
from collections import defaultdict

from sympy.polys.monomials import monomial_div
from sympy.polys.monomials import monomial_divides
from sympy.polys.monomials import monomial_lcm

from cregro.polynomial import FreeModule
from cregro.polynomial import ModuleElement
from cregro.polynomial import ModuleMonomial
from cregro.polynomial import MonomialOrder
from cregro.polynomial import canonical_order
from cregro.polynomial import accumulate
from cregro.polynomial import linear_combination
from cregro.exceptions import ElementError
from cregro.exceptions import GroebnerError
from cregro.exceptions import HomogeneityError


logger = logging.getLogger(__file__)


def normal_form(element, basis, order=None):
    """Return the fully reduced remainder of ``element`` modulo ``basis``.

    Parameters
    ----------
    element (ModuleElement): the element to reduce.
    basis (list): non-zero elements of the same free module.
    order (MonomialOrder): the term order.  Default is the canonical order.

    Returns
    -------
    ModuleElement: a remainder r with element - r in <basis> and no term of
    r divisible by a leading monomial of ``basis``.
    """
    module = element.module
    order = order or canonical_order(module.ring)
    key = order.key_function(module)

    divisors = defaultdict(list)
    for candidate in basis:
        if candidate:
            monomial, coefficient = candidate.leading_term(order)
            divisors[monomial.component].append((monomial.exponents, coefficient, candidate))

    pending = dict(element.coefficients)
    remainder = {}
    while pending:
        monomial = max(pending, key=key)
        coefficient = pending[monomial]
        for exponents, lead_coefficient, candidate in divisors.get(monomial.component, ()):
            quotient = monomial_div(monomial.exponents, exponents)
            if quotient is not None:
                accumulate(pending, candidate, quotient, -(coefficient / lead_coefficient))
                break
        else:
            remainder[monomial] = coefficient
            del pending[monomial]
    return ModuleElement(module, remainder)


def s_polynomial(first, second, order=None):
    """Return the s-polynomial of two elements with leads in one component."""
    lead_a, coefficient_a = first.leading_term(order)
    lead_b, coefficient_b = second.leading_term(order)
    if lead_a.component != lead_b.component:
        raise GroebnerError('s-polynomial of elements with leads in different components')
    lcm = monomial_lcm(lead_a.exponents, lead_b.exponents)
    result = accumulate({}, first, monomial_div(lcm, lead_a.exponents), 1 / coefficient_a)
    accumulate(result, second, monomial_div(lcm, lead_b.exponents), -1 / coefficient_b)
    return ModuleElement(first.module, result)


def sort_elements(elements):
    """Sort elements by ascending degree, ties by descending canonical lead."""
    def lead_key(element):
        return element.module.canonical_key(element.terms[0][1])

    def degree_key(element):
        return element.module.degree(element.terms[0][1])

    ordered = sorted(elements, key=lead_key, reverse=True)
    return sorted(ordered, key=degree_key)


def buchberger(generators, order=None):
    """Compute the reduced Groebner basis of the module spanned by ``generators``.

    S-pairs are selected by the normal strategy (smallest lcm first).  The
    chain criterion prunes pairs in every rank; the coprime criterion is
    applied only in rank one, where it is valid.

    Returns
    -------
    list: monic reduced Groebner basis sorted by ``sort_elements``.
    """
    generators = [g for g in generators if g]
    if not generators:
        return []
    module = generators[0].module
    for generator in generators:
        if generator.module != module:
            raise ElementError('operands belong to different free modules')
    order = order or canonical_order(module.ring)
    key = order.key_function(module)
    use_coprime = module.rank == 1

    basis, leads = [], []
    queue, queued = [], set()

    def insert(element):
        index = len(basis)
        basis.append(element)
        lead = element.leading_monomial(order)
        leads.append(lead)
        for other in range(index):
            if leads[other].component != lead.component:
                continue
            lcm = ModuleMonomial(monomial_lcm(leads[other].exponents, lead.exponents), lead.component)
            heapq.heappush(queue, (key(lcm), other, index, lcm))
            queued.add((other, index))

    def chain_criterion(i, j, lcm):
        for k, lead in enumerate(leads):
            if k in (i, j) or lead.component != lcm.component:
                continue
            if not monomial_divides(lead.exponents, lcm.exponents):
                continue
            if (min(i, k), max(i, k)) not in queued and (min(j, k), max(j, k)) not in queued:
                return True
        return False

    for generator in generators:
        remainder = normal_form(generator, basis, order)
        if remainder:
            insert(remainder.monic(order))

    processed = skipped = 0
    while queue:
        _, i, j, lcm = heapq.heappop(queue)
        queued.discard((i, j))
        a, b = leads[i].exponents, leads[j].exponents
        if use_coprime and all(not (u and v) for u, v in zip(a, b)):
            skipped += 1
            continue
        if chain_criterion(i, j, lcm):
            skipped += 1
            continue
        processed += 1
        remainder = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if remainder:
            insert(remainder.monic(order))

    keep = []
    for i, lead in enumerate(leads):
        redundant = any(
            j != i and other.component == lead.component
            and monomial_divides(other.exponents, lead.exponents)
            and (other != lead or j < i)
            for j, other in enumerate(leads)
        )
        if not redundant:
            keep.append(basis[i])

    reduced = []
    for index, element in enumerate(keep):
        others = keep[:index] + keep[index + 1:]
        reduced.append(normal_form(element, others, order).monic(order))

    logger.debug('buchberger: %d pairs reduced, %d pruned, basis size %d',
                 processed, skipped, len(reduced))
    return sort_elements(reduced)


def is_groebner(basis, order=None):
    """Return True if every s-pair of ``basis`` reduces to zero."""
    basis = [g for g in basis if g]
    for i, first in enumerate(basis):
        for second in basis[i + 1:]:
            if first.leading_monomial(order).component != second.leading_monomial(order).component:
                continue
            if normal_form(s_polynomial(first, second, order), basis, order):
                return False
    return True


class Submodule:
    """A submodule of a graded free module given by generators.

    Reduced Groebner bases are cached per order.

    Parameters
    ----------
    ambient (FreeModule): the free module containing the submodule.
    generators (list): elements of ``ambient``; zeros are dropped.
    check (bool): require homogeneous generators.  Default is True.
    """
    def __init__(self, ambient, generators=(), check=True):
        kept = []
        for generator in generators:
            if not isinstance(generator, ModuleElement) or generator.module != ambient:
                raise ElementError('generator {} is not an element of {}'.format(generator, ambient))
            if check and not generator.is_homogeneous:
                raise HomogeneityError('generator not homogeneous: {}'.format(generator.to_text()))
            if generator:
                kept.append(generator)
        self.ambient = ambient
        self.generators = tuple(kept)
        self._bases = {}

    def __repr__(self):
        return 'Submodule({})'.format(self.to_text())

    def __eq__(self, other):
        if not isinstance(other, Submodule) or other.ambient != self.ambient:
            return False
        return frozenset(self.groebner_basis()) == frozenset(other.groebner_basis())

    def __hash__(self):
        return hash((self.ambient, frozenset(self.groebner_basis())))

    def __contains__(self, element):
        return self.contains(element)

    @property
    def ring(self):
        return self.ambient.ring

    @property
    def is_zero(self):
        return not self.generators

    def groebner_basis(self, order=None):
        order = order or canonical_order(self.ring)
        if order not in self._bases:
            self._bases[order] = buchberger(self.generators, order)
        return self._bases[order]

    def reduce(self, element, order=None):
        return normal_form(element, self.groebner_basis(order), order)

    def contains(self, element, order=None):
        return not self.reduce(element, order)

    def contains_submodule(self, other):
        return all(self.contains(generator) for generator in other.generators)

    def minimal_generators(self):
        return minimal_generators(self)

    def generator_degrees(self):
        """Return the sorted standard degrees of the minimal generators."""
        return sorted(g.degree[0] for g in self.minimal_generators())

    def to_text(self):
        return '[{}]'.format(', '.join(g.to_text() for g in self.generators))


def membership(element, submodule, order=None):
    """Return True if ``element`` lies in ``submodule``."""
    return submodule.contains(element, order)


def minimal_generators(submodule):
    """Return a minimal homogeneous generating set (graded Nakayama).

    Generators are scanned by ascending total degree and kept only when
    they are not in the span of those kept before.
    """
    candidates = sort_elements(submodule.generators)
    candidates = sorted(candidates, key=lambda g: sum(g.degree))
    kept = []
    for candidate in candidates:
        if kept and Submodule(submodule.ambient, kept, check=False).contains(candidate):
            continue
        kept.append(candidate)
    return kept


class SyzygyPresentation:
    """The syzygies of a tuple (g_1, ..., g_r) as columns of a matrix.

    Attributes
    ----------
    generators (tuple): the presented tuple g_1, ..., g_r.
    source (FreeModule): A^r with shifts deg(g_k).
    columns (tuple): syzygies as elements of ``source``.
    """
    def __init__(self, generators, source, columns):
        self.generators = tuple(generators)
        self.source = source
        self.columns = tuple(columns)

    def __repr__(self):
        return 'SyzygyPresentation(r={}, s={})'.format(self.target_rank, self.source_rank)

    @property
    def source_rank(self):
        return len(self.columns)

    @property
    def target_rank(self):
        return len(self.generators)

    @property
    def degrees(self):
        return [column.degree for column in self.columns]

    @property
    def max_degree(self):
        """Return the largest standard degree of a column, None when empty."""
        return max((degree[0] for degree in self.degrees), default=None)

    def verify(self, ambient):
        """Return True if every column annihilates the generator tuple."""
        return all(
            not linear_combination(column, self.generators, ambient)
            for column in self.columns
        )

    def to_text(self):
        return '[{}]'.format(', '.join(column.to_text() for column in self.columns))


def syzygies(generators, order=None, minimal=False, degrees=None, ambient=None):
    """Compute generators of the syzygy module of an arbitrary tuple.

    The tag-module construction appends one tracking component per
    generator, computes a Groebner basis for an order that eliminates the
    original components, and reads the syzygies off the tag block.

    Parameters
    ----------
    generators (list): homogeneous elements of one free module (zeros allowed).
    order (MonomialOrder): base order on the ambient module.  Default is canonical.
    minimal (bool): prune the columns to a minimal generating set.
    degrees (list): degrees of the generators, required for zero generators.
    ambient (FreeModule): the module of the generators, required when empty.

    Returns
    -------
    SyzygyPresentation: columns generating ker(A^r -> F).
    """
    generators = list(generators)
    if ambient is None:
        if not generators:
            raise GroebnerError('syzygies of an empty tuple need an ambient module')
        ambient = generators[0].module
    ring = ambient.ring
    if degrees is None:
        degrees = []
        for generator in generators:
            if not generator:
                raise GroebnerError('zero generators need explicit degrees')
            degrees.append(generator.degree)
    source = FreeModule(ring, degrees)
    if not generators:
        return SyzygyPresentation(generators, source, [])

    rank, count = ambient.rank, len(generators)
    base = order or canonical_order(ring)
    block = ((0,) * ring.nvars, (1,) * rank + (0,) * count)
    tag_order = MonomialOrder(base.ring_order, 'pot', weights=(block,) + base.weights, graded=True)
    tag_module = FreeModule(ring, ambient.shifts + source.shifts)

    tagged = [
        generator.map_to(tag_module) + tag_module.basis_element(rank + index)
        for index, generator in enumerate(generators)
    ]
    renumber = {rank + index: index for index in range(count)}
    columns = []
    for element in buchberger(tagged, tag_order):
        if element.leading_monomial(tag_order).component >= rank:
            columns.append(element.map_to(source, renumber))

    if minimal:
        columns = minimal_generators(Submodule(source, columns, check=False))
    logger.debug('syzygies: %d generators, %d columns', count, len(columns))
    return SyzygyPresentation(generators, source, sort_elements(columns))


def saturate_t(submodule):
    """Return N : t^infinity for a bihomogeneous submodule N of F~.

    A reduced basis in the canonical bigraded order is divided by the
    largest power of t dividing each element, until nothing changes.
    """
    ring = submodule.ring
    if ring.t_index is None:
        raise GroebnerError('saturation by t needs the bigraded ring')
    order = canonical_order(ring)
    generators = list(submodule.generators)
    passes = 0
    while True:
        passes += 1
        basis = buchberger(generators, order)
        stripped = [element.strip_t() for element in basis]
        if stripped == basis:
            break
        generators = stripped
    logger.debug('saturate_t: fixpoint after %d pass(es), %d generators', passes, len(basis))
    result = Submodule(submodule.ambient, basis, check=False)
    result._bases[order] = basis
    return result


def colon_t(submodule):
    """Return N : t, generated by g/t (t | g) and g over the reduced basis."""
    if submodule.ring.t_index is None:
        raise GroebnerError('the colon by t needs the bigraded ring')
    generators = [
        element.divide_by_t(1) if element.t_order() else element
        for element in submodule.groebner_basis()
    ]
    return Submodule(submodule.ambient, generators, check=False)


def torsion_witness(submodule):
    """Return alpha with t*alpha in N and alpha not in N, or None if t is
    a non-zerodivisor on F~/N."""
    if submodule.ring.t_index is None:
        raise GroebnerError('t-torsion needs the bigraded ring')
    for element in submodule.groebner_basis():
        if element.t_order():
            candidate = element.divide_by_t(1)
            if not submodule.contains(candidate):
                return candidate
    return None

"""Module containing the logic for exact coefficients, monomials, module
elements, term/weight orders and the bigraded homogenization ring."""

import re
import logging
from collections import namedtuple
from functools import lru_cache

from sympy import isprime
from sympy.polys.domains import QQ, GF
from sympy.polys.orderings import grevlex, lex
from sympy.polys.monomials import monomial_mul

from cregro.config import Data
from cregro.argumenthelper import validate_argument_type
from cregro.argumenthelper import validate_argument_choice
from cregro.exceptions import FieldError
from cregro.exceptions import RingError
from cregro.exceptions import FreeModuleError
from cregro.exceptions import WeightError
from cregro.exceptions import ExponentOverflowError
from cregro.exceptions import ElementError
from cregro.exceptions import ZeroElementError
from cregro.exceptions import HomogeneityError
from cregro.utils import pad_degree
from cregro.utils import add_degrees
from cregro.utils import count_monomials


logger = logging.getLogger(__file__)

ModuleMonomial = namedtuple('ModuleMonomial', ['exponents', 'component'])
ModuleMonomial.__doc__ = 'A monomial X^u e_j; ``component`` is the 0-based index j.'


class CoefficientField:
    """An exact coefficient field, either the rationals or GF(p).

    Attributes
    ----------
    characteristic (int): 0 for the rationals, otherwise the prime p.
    domain (sympy.polys.domains.Domain): the sympy domain doing the arithmetic.

    Properties
    ----------
    name -> str
    zero -> domain element
    one -> domain element

    Methods
    -------
    to_pair(value) -> tuple
    to_text(value) -> str
    from_text(text) -> CoefficientField
    """
    def __init__(self, characteristic=0):
        validate_argument_type(int, characteristic=characteristic)
        if characteristic == 0:
            self.domain = QQ
        else:
            if characteristic < 2 or not isprime(characteristic):
                raise FieldError('GF argument must be prime')
            if characteristic >= Data.max_prime:
                raise FieldError('GF argument must be a prime below 2^31')
            self.domain = GF(characteristic)
        self.characteristic = characteristic

    def __eq__(self, other):
        return isinstance(other, CoefficientField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(('field', self.characteristic))

    def __repr__(self):
        return 'CoefficientField({})'.format(self.name)

    def __call__(self, value, denominator=1):
        if self.is_member(value) and denominator == 1:
            return value
        try:
            numerator = self.domain(value)
            denominator = self.domain(denominator)
        except Exception as ex:
            raise FieldError('cannot convert {!r} into {}: {}'.format(value, self.name, ex))
        if not denominator:
            raise FieldError('division by zero in {}'.format(self.name))
        return numerator / denominator

    @property
    def name(self):
        return 'QQ' if self.characteristic == 0 else 'GF({})'.format(self.characteristic)

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def is_member(self, value):
        """Return True if ``value`` is already an element of this field."""
        return isinstance(value, self.domain.dtype)

    def to_pair(self, value):
        """Return ``value`` as a signed (numerator, denominator) pair of ints.

        Prime-field elements use the symmetric representative.
        """
        if self.characteristic == 0:
            return int(value.numerator), int(value.denominator)
        return self.domain.to_int(value), 1

    def to_text(self, value):
        numerator, denominator = self.to_pair(value)
        if denominator == 1:
            return str(numerator)
        return '{}/{}'.format(numerator, denominator)

    @classmethod
    def from_text(cls, text):
        """Create a field from ``QQ`` or ``GF(p)``."""
        text = str(text).strip()
        if text == 'QQ':
            return cls()
        match = re.fullmatch(r'GF\(\s*(\d+)\s*\)', text)
        if not match:
            raise FieldError('field must be QQ or GF(p), got {!r}'.format(text))
        return cls(int(match.group(1)))


class Ring:
    """A polynomial ring K[X_1, ..., X_n] with a (multi)grading.

    Parameters
    ----------
    names (list): distinct variable names.
    field (CoefficientField): the coefficient field.  Default is QQ.
    grading (tuple): per-variable degree tuples.  Default is the standard grading.
    t_index (int): index of the homogenizing variable t, if any.
    """
    reserved_pattern = re.compile(r'e\d+$')

    def __init__(self, names, field=None, grading=None, t_index=None):
        names = tuple(names)
        if not names:
            raise RingError('a ring needs at least one variable')
        if len(set(names)) != len(names):
            raise RingError('variable names must be unique: {}'.format(', '.join(names)))
        for name in names:
            if not re.fullmatch(r'[A-Za-z_][A-Za-z0-9_]*', name):
                raise RingError('invalid variable name {!r}'.format(name))
            if self.reserved_pattern.match(name):
                raise RingError('variable name {!r} is reserved for basis elements'.format(name))

        self.names = names
        self.field = field if field is not None else CoefficientField()
        if grading is None:
            grading = ((1,),) * len(names)
        grading = tuple(tuple(degree) for degree in grading)
        if len(grading) != len(names) or len({len(degree) for degree in grading}) != 1:
            raise RingError('grading must give one degree vector of common length per variable')
        self.grading = grading
        self.t_index = t_index

    def __eq__(self, other):
        return (isinstance(other, Ring) and other.names == self.names
                and other.field == self.field and other.grading == self.grading
                and other.t_index == self.t_index)

    def __hash__(self):
        return hash((self.names, self.field, self.grading, self.t_index))

    def __repr__(self):
        return 'Ring({})'.format(self.to_text())

    @property
    def nvars(self):
        return len(self.names)

    @property
    def grading_size(self):
        return len(self.grading[0])

    @property
    def is_standard_graded(self):
        return self.grading_size == 1 and all(degree == (1,) for degree in self.grading)

    def degree(self, exponents):
        """Return the multidegree of the monomial with ``exponents``."""
        total = [0] * self.grading_size
        for exponent, degree in zip(exponents, self.grading):
            if exponent:
                for index, value in enumerate(degree):
                    total[index] += exponent * value
        return tuple(total)

    def base_ring(self):
        """Return the standard graded ring obtained by forgetting t."""
        if self.t_index is None:
            return self
        names = self.names[:self.t_index] + self.names[self.t_index + 1:]
        return Ring(names, self.field)

    def to_text(self):
        return '{}[{}]'.format(self.field.name, ','.join(self.names))


class FreeModule:
    """A graded free module F = sum_j A(-d_j).

    A rank-zero module is allowed so that resolutions may shrink to zero
    during cancellation.
    """
    def __init__(self, ring, shifts=(0,)):
        validate_argument_type(Ring, ring=ring)
        self.ring = ring
        try:
            self.shifts = tuple(pad_degree(shift, ring.grading_size) for shift in shifts)
        except (TypeError, ValueError) as ex:
            raise FreeModuleError('invalid shifts {!r}: {}'.format(shifts, ex))
        for shift in self.shifts:
            if max(abs(entry) for entry in shift) > Data.max_exponent:
                raise FreeModuleError('shift {} out of range'.format(shift[0]))
        self._canonical_key = None

    def __eq__(self, other):
        return isinstance(other, FreeModule) and other.ring == self.ring and other.shifts == self.shifts

    def __hash__(self):
        return hash((self.ring, self.shifts))

    def __repr__(self):
        shifts = ','.join(str(shift[0]) if len(shift) == 1 else str(shift) for shift in self.shifts)
        return 'FreeModule({}, ({}))'.format(self.ring.to_text(), shifts)

    @property
    def rank(self):
        return len(self.shifts)

    @property
    def canonical_key(self):
        """Return the canonical order key function on this module's monomials."""
        if self._canonical_key is None:
            self._canonical_key = canonical_order(self.ring).key_function(self)
        return self._canonical_key

    def degree(self, monomial):
        return add_degrees(self.ring.degree(monomial.exponents), self.shifts[monomial.component])

    def total_degree(self, monomial):
        return sum(self.degree(monomial))

    def zero(self):
        return ModuleElement(self)

    def monomial(self, exponents, component=0, coefficient=1):
        exponents = tuple(exponents)
        if len(exponents) != self.ring.nvars:
            raise ElementError('expected {} exponents, got {}'.format(self.ring.nvars, len(exponents)))
        if not 0 <= component < self.rank:
            raise ElementError('component e{} outside rank {}'.format(component + 1, self.rank))
        monomial = ModuleMonomial(exponents, component)
        return ModuleElement(self, {monomial: self.ring.field(coefficient)})

    def basis_element(self, component):
        return self.monomial((0,) * self.ring.nvars, component)

    def variable(self, name, component=0):
        try:
            index = self.ring.names.index(name)
        except ValueError:
            raise ElementError('unknown variable {!r}'.format(name))
        exponents = [0] * self.ring.nvars
        exponents[index] = 1
        return self.monomial(exponents, component)

    def element(self, terms):
        """Create an element from (coefficient, exponents, component) triples."""
        result = {}
        field = self.ring.field
        for coefficient, exponents, component in terms:
            monomial = ModuleMonomial(tuple(exponents), component)
            result[monomial] = result.get(monomial, field.zero) + field(coefficient)
        return ModuleElement(self, result)

    def dimension(self, degree):
        """Return dim_K of the standard-degree ``degree`` part (standard grading only)."""
        if self.ring.grading_size != 1:
            raise FreeModuleError('graded dimensions need a standard graded ring')
        return sum(count_monomials(self.ring.nvars, degree - shift[0]) for shift in self.shifts)


class WeightData:
    """Non-negative integral weights (omega on variables, epsilon on basis elements).

    An empty epsilon stands for the zero vector of the module rank.
    """
    def __init__(self, omega, epsilon=()):
        omega, epsilon = tuple(omega), tuple(epsilon or ())
        for name, vector in (('omega', omega), ('epsilon', epsilon)):
            for entry in vector:
                if isinstance(entry, bool) or not isinstance(entry, int):
                    raise WeightError('{} entries must be integers, got {!r}'.format(name, entry))
                if entry < 0:
                    raise WeightError('{} entries must be non-negative, got {}'.format(name, entry))
        self.omega = omega
        self.epsilon = epsilon

    def __eq__(self, other):
        return (isinstance(other, WeightData) and other.omega == self.omega
                and other.epsilon == self.epsilon)

    def __hash__(self):
        return hash((self.omega, self.epsilon))

    def __repr__(self):
        return 'WeightData({})'.format(self.to_text())

    @property
    def is_zero(self):
        return not any(self.omega) and not any(self.epsilon)

    def for_module(self, module):
        """Return these weights validated against ``module``, epsilon padded."""
        if len(self.omega) != module.ring.nvars:
            fmt = 'omega has {} entries but the ring has {} variables'
            raise WeightError(fmt.format(len(self.omega), module.ring.nvars))
        epsilon = self.epsilon or (0,) * module.rank
        if len(epsilon) != module.rank:
            fmt = 'epsilon has {} entries but the free module has rank {}'
            raise WeightError(fmt.format(len(epsilon), module.rank))
        return WeightData(self.omega, epsilon)

    def weight(self, monomial):
        exponents, component = monomial
        value = sum(w * u for w, u in zip(self.omega, exponents))
        if component < len(self.epsilon):
            value += self.epsilon[component]
        return value

    def to_text(self):
        epsilon = self.epsilon or (0,)
        return 'omega={} epsilon={}'.format(','.join(map(str, self.omega)), ','.join(map(str, epsilon)))


class MonomialOrder:
    """A module monomial order.

    The key of X^u e_j is, in priority order: the multidegree of the term
    (when ``graded``), the value of every weight in ``weights``, then
    position-over-term (``pot``) or term-over-position (``top``) with the
    ring order.  Lower component index is larger.

    Parameters
    ----------
    ring_order (str): ``degrevlex`` or ``lex``.
    module_order (str): ``pot`` or ``top``.
    weights (tuple): pairs (omega, epsilon); epsilon may be None or short,
        missing entries count as zero.  Entries may be negative for
        internal orders.
    graded (bool): compare the module multidegree first.  Default is True.
    """
    ring_orders = dict(degrevlex=grevlex, lex=lex)

    def __init__(self, ring_order='degrevlex', module_order='pot', weights=(), graded=True):
        validate_argument_choice(ring_order=(ring_order, tuple(self.ring_orders)),
                                 module_order=(module_order, ('pot', 'top')))
        self.ring_order = ring_order
        self.module_order = module_order
        self.weights = tuple(
            (tuple(omega), None if epsilon is None else tuple(epsilon))
            for omega, epsilon in weights
        )
        self.graded = bool(graded)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.signature == self.signature

    def __hash__(self):
        return hash(self.signature)

    def __repr__(self):
        return 'MonomialOrder({}, {}, weights={}, graded={})'.format(*self.signature)

    @property
    def signature(self):
        return self.ring_order, self.module_order, self.weights, self.graded

    def key(self, module, monomial):
        exponents, component = monomial
        key = module.degree(monomial) if self.graded else ()
        for omega, epsilon in self.weights:
            value = sum(w * u for w, u in zip(omega, exponents))
            if epsilon and component < len(epsilon):
                value += epsilon[component]
            key += (value,)
        ring_key = self.ring_orders[self.ring_order](exponents)
        if self.module_order == 'pot':
            return key + (-component, ring_key)
        return key + (ring_key, -component)

    def key_function(self, module):
        """Return a cached single-argument key function for ``module``."""
        @lru_cache(maxsize=65536)
        def key(monomial):
            return self.key(module, monomial)
        return key

    def with_weights(self, weights, first=True):
        """Return a copy with extra leading (or trailing) weights."""
        weights = tuple(weights)
        combined = weights + self.weights if first else self.weights + weights
        return MonomialOrder(self.ring_order, self.module_order, combined, self.graded)


@lru_cache(maxsize=None)
def canonical_order(ring):
    """Return the canonical order of a ring.

    It is degrevlex refined by position-over-term.  Over the bigraded ring
    a weight of -1 on t follows the bidegree, so the leading monomial of a
    bihomogeneous element is divisible by t only when the element is.
    """
    if ring.t_index is None:
        return MonomialOrder()
    omega = [0] * ring.nvars
    omega[ring.t_index] = -1
    return MonomialOrder(weights=((tuple(omega), None),))


def accumulate(accumulator, element, exponents=None, coefficient=None):
    """Add ``coefficient * X^exponents * element`` to a coefficient dict in place."""
    for monomial, value in element.coefficients.items():
        if exponents is not None:
            product = monomial_mul(monomial.exponents, exponents)
            if max(product, default=0) > Data.max_exponent:
                raise ExponentOverflowError('exponent overflow in {}'.format(product))
            monomial = ModuleMonomial(product, monomial.component)
        if coefficient is not None:
            value = value * coefficient
        total = accumulator.get(monomial)
        total = value if total is None else total + value
        if total:
            accumulator[monomial] = total
        else:
            accumulator.pop(monomial, None)
    return accumulator


class ModuleElement:
    """A sparse element of a graded free module.

    Attributes
    ----------
    module (FreeModule): the ambient free module.
    coefficients (dict): ModuleMonomial to non-zero field coefficient.

    Properties
    ----------
    terms -> list of (coefficient, ModuleMonomial), descending canonical order
    degree -> tuple or None

    Methods
    -------
    leading_term(order=None) -> tuple
    monic(order=None) -> ModuleElement
    mul_monomial(exponents, coefficient=None) -> ModuleElement
    to_text() -> str
    """
    __slots__ = ('module', 'coefficients', '_terms', '_hash')

    def __init__(self, module, coefficients=None):
        self.module = module
        self.coefficients = {
            monomial: value for monomial, value in (coefficients or {}).items() if value
        }
        self._terms = None
        self._hash = None

    def __eq__(self, other):
        return (isinstance(other, ModuleElement) and other.module == self.module
                and other.coefficients == self.coefficients)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.module, frozenset(self.coefficients.items())))
        return self._hash

    def __bool__(self):
        return bool(self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __repr__(self):
        return 'ModuleElement({})'.format(self.to_text())

    def __str__(self):
        return self.to_text()

    def _check_operand(self, other):
        if not isinstance(other, ModuleElement):
            raise ElementError('cannot combine a module element with {!r}'.format(other))
        if other.module != self.module:
            raise ElementError('operands belong to different free modules')

    def __add__(self, other):
        self._check_operand(other)
        return ModuleElement(self.module, accumulate(dict(self.coefficients), other))

    def __sub__(self, other):
        self._check_operand(other)
        minus_one = -self.module.ring.field.one
        return ModuleElement(self.module, accumulate(dict(self.coefficients), other, coefficient=minus_one))

    def __neg__(self):
        return ModuleElement(self.module, {m: -c for m, c in self.coefficients.items()})

    def __mul__(self, scalar):
        return self.scale(scalar)

    __rmul__ = __mul__

    def scale(self, scalar):
        scalar = self.module.ring.field(scalar)
        if not scalar:
            return ModuleElement(self.module)
        return ModuleElement(self.module, {m: c * scalar for m, c in self.coefficients.items()})

    def mul_monomial(self, exponents, coefficient=None):
        """Return ``coefficient * X^exponents * self``."""
        if coefficient is not None:
            coefficient = self.module.ring.field(coefficient)
        return ModuleElement(self.module, accumulate({}, self, tuple(exponents), coefficient))

    def mul_polynomial(self, polynomial):
        """Return ``polynomial * self`` for a dict exponents -> coefficient."""
        result = {}
        for exponents, coefficient in polynomial.items():
            accumulate(result, self, exponents, coefficient)
        return ModuleElement(self.module, result)

    @property
    def terms(self):
        if self._terms is None:
            key = self.module.canonical_key
            self._terms = sorted(
                ((c, m) for m, c in self.coefficients.items()),
                key=lambda item: key(item[1]), reverse=True
            )
        return self._terms

    @property
    def support(self):
        return frozenset(self.coefficients)

    def component(self, index):
        """Return the polynomial in component ``index`` as exponents -> coefficient."""
        return {m.exponents: c for m, c in self.coefficients.items() if m.component == index}

    def leading_term(self, order=None):
        """Return (ModuleMonomial, coefficient) of the largest term under ``order``."""
        if not self.coefficients:
            raise ZeroElementError('leading term of zero undefined')
        if order is None:
            _, monomial = self.terms[0]
        else:
            monomial = max(self.coefficients, key=lambda m: order.key(self.module, m))
        return monomial, self.coefficients[monomial]

    def leading_monomial(self, order=None):
        return self.leading_term(order)[0]

    def monic(self, order=None):
        if not self.coefficients:
            return self
        _, coefficient = self.leading_term(order)
        inverse = self.module.ring.field.one / coefficient
        return ModuleElement(self.module, {m: c * inverse for m, c in self.coefficients.items()})

    @property
    def degrees(self):
        return {self.module.degree(monomial) for monomial in self.coefficients}

    @property
    def is_homogeneous(self):
        return len(self.degrees) <= 1

    @property
    def degree(self):
        """Return the multidegree of a homogeneous element, None for zero."""
        degrees = self.degrees
        if not degrees:
            return None
        if len(degrees) > 1:
            raise HomogeneityError('generator not homogeneous: {}'.format(self.to_text()))
        return degrees.pop()

    @property
    def standard_degree(self):
        degree = self.degree
        return None if degree is None else degree[0]

    def t_order(self):
        """Return the largest k such that t^k divides this element."""
        index = self.module.ring.t_index
        if index is None or not self.coefficients:
            return 0
        return min(monomial.exponents[index] for monomial in self.coefficients)

    def divide_by_t(self, power=1):
        """Return ``self / t^power``; every term must be divisible."""
        index = self.module.ring.t_index
        if index is None:
            raise ElementError('the ring of {} has no variable t'.format(self.to_text()))
        if power > self.t_order() and self.coefficients:
            raise ElementError('t^{} does not divide {}'.format(power, self.to_text()))
        result = {}
        for monomial, value in self.coefficients.items():
            exponents = list(monomial.exponents)
            exponents[index] -= power
            result[ModuleMonomial(tuple(exponents), monomial.component)] = value
        return ModuleElement(self.module, result)

    def strip_t(self):
        """Return the element divided by the largest power of t dividing it."""
        order = self.t_order()
        return self.divide_by_t(order) if order else self

    def map_to(self, target, components=None):
        """Return this element read in ``target`` with component renumbering.

        Parameters
        ----------
        target (FreeModule): a free module over the same ring.
        components (dict): old component index to new index.  Terms whose
            component is missing are dropped.  Default is identity.
        """
        if target.ring != self.module.ring:
            raise ElementError('cannot move an element to a module over another ring')
        result = {}
        for monomial, value in self.coefficients.items():
            component = monomial.component
            if components is not None:
                if component not in components:
                    continue
                component = components[component]
            result[ModuleMonomial(monomial.exponents, component)] = value
        return ModuleElement(target, result)

    def _term_text(self, coefficient, monomial):
        ring = self.module.ring
        factors = []
        for name, exponent in zip(ring.names, monomial.exponents):
            if exponent == 1:
                factors.append(name)
            elif exponent:
                factors.append('{}^{}'.format(name, exponent))
        if self.module.rank > 1:
            factors.append('e{}'.format(monomial.component + 1))
        numerator, denominator = ring.field.to_pair(coefficient)
        sign = '-' if numerator < 0 else '+'
        numerator = abs(numerator)
        if (numerator, denominator) != (1, 1) or not factors:
            scalar = str(numerator) if denominator == 1 else '{}/{}'.format(numerator, denominator)
            factors.insert(0, scalar)
        return sign, '*'.join(factors)

    def to_text(self):
        if not self.coefficients:
            return '0'
        pieces = []
        for position, (coefficient, monomial) in enumerate(self.terms):
            sign, body = self._term_text(coefficient, monomial)
            if position == 0:
                pieces.append(body if sign == '+' else '-' + body)
            else:
                pieces.append(sign + body)
        return ''.join(pieces)


def linear_combination(vector, elements, target):
    """Return sum_k vector_k * elements[k] in ``target``.

    Parameters
    ----------
    vector (ModuleElement): an element of a free module of rank len(elements).
    elements (list): elements of ``target``.
    target (FreeModule): the module receiving the combination.
    """
    if vector.module.rank != len(elements):
        fmt = 'a vector of rank {} cannot combine {} elements'
        raise ElementError(fmt.format(vector.module.rank, len(elements)))
    result = {}
    for monomial, coefficient in vector.coefficients.items():
        element = elements[monomial.component]
        if element.module != target:
            raise ElementError('operands belong to different free modules')
        accumulate(result, element, monomial.exponents, coefficient)
    return ModuleElement(target, result)


def weight_of(monomial, weight):
    """Return omega . u + epsilon_j for the monomial X^u e_j."""
    return weight.weight(monomial)


def initial_form(element, weight):
    """Return the sum of the terms of maximal (omega, epsilon)-weight.

    Raises
    ------
    ZeroElementError: if ``element`` is zero.
    """
    if not element:
        raise ZeroElementError('initial form of zero undefined')
    weights = {monomial: weight.weight(monomial) for monomial in element.coefficients}
    top = max(weights.values())
    kept = {m: c for m, c in element.coefficients.items() if weights[m] == top}
    return ModuleElement(element.module, kept)


class BigradedContext:
    """The ring A[t] with deg X_i = (1, w_i), deg t = (0, 1) and the free
    module F~ with deg e_j = (d_j, epsilon_j).

    Attributes
    ----------
    base_module (FreeModule): the standard graded module F.
    weight (WeightData): the weights, epsilon padded to the rank of F.
    ring (Ring): the bigraded ring, t is its last variable.
    module (FreeModule): the bigraded free module F~.
    """
    def __init__(self, module, weight):
        if module.ring.grading_size != 1:
            raise RingError('homogenization needs a standard graded ring')
        self.base_module = module
        self.weight = weight.for_module(module)
        base = module.ring
        t_name = 't'
        while t_name in base.names:
            t_name += '_'
        grading = tuple((1, w) for w in self.weight.omega) + ((0, 1),)
        self.ring = Ring(base.names + (t_name,), base.field, grading=grading, t_index=base.nvars)
        shifts = [(shift[0], epsilon) for shift, epsilon in zip(module.shifts, self.weight.epsilon)]
        self.module = FreeModule(self.ring, shifts)

    def __eq__(self, other):
        return (isinstance(other, BigradedContext) and other.base_module == self.base_module
                and other.weight == self.weight)

    def __hash__(self):
        return hash((self.base_module, self.weight))

    @property
    def t_name(self):
        return self.ring.names[self.ring.t_index]

    def t_power(self, power):
        exponents = [0] * self.ring.nvars
        exponents[self.ring.t_index] = power
        return tuple(exponents)

    def homogenize(self, element):
        return homogenize(element, self.weight, context=self)

    def evaluate(self, element, alpha):
        return evaluate_t(element, alpha, target=self.base_module)


def homogenize(element, weight, context=None):
    """Return the t-homogenization f~ = t^d sum c (t^-w.u X^u)(t^-eps_j e_j).

    Raises
    ------
    ZeroElementError: if ``element`` is zero.
    HomogeneityError: if ``element`` is not standard homogeneous.
    """
    if not element:
        raise ZeroElementError('homogenization of zero undefined')
    if not element.is_homogeneous:
        raise HomogeneityError('generator not homogeneous: {}'.format(element.to_text()))
    if context is None:
        context = BigradedContext(element.module, weight)
    weights = {monomial: context.weight.weight(monomial) for monomial in element.coefficients}
    top = max(weights.values())
    result = {}
    for monomial, coefficient in element.coefficients.items():
        exponents = monomial.exponents + (top - weights[monomial],)
        result[ModuleMonomial(exponents, monomial.component)] = coefficient
    return ModuleElement(context.module, result)


def evaluate_t(element, alpha, target=None):
    """Substitute t := alpha and read the result in the module over A.

    Parameters
    ----------
    element (ModuleElement): an element over the bigraded ring.
    alpha (int, field element): the value of t.
    target (FreeModule): the module over A.  Default is derived from the
        first coordinates of the bigraded shifts.
    """
    ring = element.module.ring
    index = ring.t_index
    if index is None:
        raise ElementError('the ring of {} has no variable t'.format(element.to_text()))
    if target is None:
        target = FreeModule(ring.base_ring(), [shift[0] for shift in element.module.shifts])
    field = ring.field
    alpha = field(alpha)
    result = {}
    for monomial, coefficient in element.coefficients.items():
        power = monomial.exponents[index]
        if power:
            if not alpha:
                continue
            coefficient = coefficient * alpha ** power
        exponents = monomial.exponents[:index] + monomial.exponents[index + 1:]
        key = ModuleMonomial(exponents, monomial.component)
        total = result.get(key, field.zero) + coefficient
        if total:
            result[key] = total
        else:
            result.pop(key, None)
    return ModuleElement(target, result)


def reduce_mod_t(element):
    """Return the terms of ``element`` not divisible by t, kept over A[t]."""
    index = element.module.ring.t_index
    if index is None:
        return element
    kept = {m: c for m, c in element.coefficients.items() if not m.exponents[index]}
    return ModuleElement(element.module, kept)

import numpy as np
import pytest

from cregro.polynomial import CoefficientField
from cregro.polynomial import Ring
from cregro.polynomial import FreeModule
from cregro.polynomial import WeightData
from cregro.polynomial import MonomialOrder
from cregro.polynomial import ModuleMonomial
from cregro.polynomial import BigradedContext
from cregro.polynomial import weight_of
from cregro.polynomial import initial_form
from cregro.polynomial import homogenize
from cregro.polynomial import evaluate_t
from cregro.polynomial import reduce_mod_t
from cregro.polynomial import linear_combination
from cregro.parser import parse_element
from cregro.exceptions import FieldError
from cregro.exceptions import RingError
from cregro.exceptions import WeightError
from cregro.exceptions import ElementError
from cregro.exceptions import ZeroElementError
from cregro.exceptions import HomogeneityError
from cregro.exceptions import ExponentOverflowError
from cregro.exceptions import ArgumentValidationError


@pytest.fixture
def module():
    yield FreeModule(Ring(['x', 'y']))


@pytest.fixture
def module_xyz():
    yield FreeModule(Ring(['x', 'y', 'z']))


@pytest.fixture
def rank_two():
    yield FreeModule(Ring(['x', 'y']), (0, 1))


class TestCoefficientField:
    def test_rationals(self):
        field = CoefficientField()
        assert field.name == 'QQ'
        assert field.to_text(field(2, 4)) == '1/2'
        assert field.to_pair(field(-6, 4)) == (-3, 2)

    def test_prime_field_uses_symmetric_representatives(self):
        field = CoefficientField(7)
        assert field.name == 'GF(7)'
        assert field.to_text(field(6)) == '-1'
        assert field.to_text(field(1, 2)) == '-3'

    @pytest.mark.parametrize(
        "characteristic",
        [
            4,          # case: composite
            1,          # case: below two
            2 ** 31 + 11,   # case: prime above the machine-word bound
        ]
    )
    def test_invalid_characteristic(self, characteristic):
        with pytest.raises(FieldError):
            CoefficientField(characteristic)

    def test_non_prime_message(self):
        with pytest.raises(FieldError, match='GF argument must be prime'):
            CoefficientField(4)

    def test_division_by_zero(self):
        with pytest.raises(FieldError):
            CoefficientField()(1, 0)

    @pytest.mark.parametrize(
        "text,characteristic",
        [
            ('QQ', 0),
            ('GF(101)', 101),
            (' GF( 7 ) ', 7),
        ]
    )
    def test_from_text(self, text, characteristic):
        assert CoefficientField.from_text(text).characteristic == characteristic

    def test_from_text_rejects_unknown_field(self):
        with pytest.raises(FieldError):
            CoefficientField.from_text('ZZ')


class TestRing:
    def test_text(self):
        ring = Ring(['x', 'y'], CoefficientField(101))
        assert ring.to_text() == 'GF(101)[x,y]'
        assert ring.nvars == 2
        assert ring.is_standard_graded

    @pytest.mark.parametrize(
        "names",
        [
            [],                 # case: no variable
            ['x', 'x'],         # case: duplicate name
            ['x', 'e1'],        # case: reserved basis name
            ['2x'],             # case: invalid identifier
        ]
    )
    def test_invalid_names(self, names):
        with pytest.raises(RingError):
            Ring(names)

    def test_multidegree(self):
        ring = Ring(['x', 'y'], grading=((1, 2), (1, 0)))
        assert ring.degree((2, 3)) == (5, 4)
        assert not ring.is_standard_graded


class TestFreeModule:
    def test_rank_and_dimension(self, rank_two):
        assert rank_two.rank == 2
        # 3 monomials of degree 2 in e1, 2 monomials of degree 1 in e2
        assert rank_two.dimension(2) == 5
        assert rank_two.dimension(0) == 1

    def test_monomial_outside_rank(self, module):
        with pytest.raises(ElementError):
            module.monomial((1, 0), component=1)

    def test_unknown_variable(self, module):
        with pytest.raises(ElementError):
            module.variable('z')


class TestWeightData:
    def test_for_module_pads_epsilon(self, rank_two):
        weight = WeightData((1, 0)).for_module(rank_two)
        assert weight.epsilon == (0, 0)
        assert weight.to_text() == 'omega=1,0 epsilon=0,0'

    @pytest.mark.parametrize(
        "omega,epsilon",
        [
            ((1, -1), ()),      # case: negative omega
            ((1, 0), (-2,)),    # case: negative epsilon
            ((1, 0.5), ()),     # case: non-integral entry
        ]
    )
    def test_invalid_entries(self, omega, epsilon):
        with pytest.raises(WeightError):
            WeightData(omega, epsilon)

    @pytest.mark.parametrize(
        "omega,epsilon",
        [
            ((1,), ()),             # case: omega too short
            ((1, 0), (0, 0, 0)),    # case: epsilon longer than the rank
        ]
    )
    def test_length_mismatch(self, rank_two, omega, epsilon):
        with pytest.raises(WeightError):
            WeightData(omega, epsilon).for_module(rank_two)

    def test_weight_of(self, rank_two):
        weight = WeightData((2, 1), (0, 3))
        assert weight_of(ModuleMonomial((1, 1), 0), weight) == 3
        assert weight_of(ModuleMonomial((0, 2), 1), weight) == 5
        assert WeightData((0, 0)).is_zero


class TestMonomialOrder:
    def test_degrevlex_and_lex(self, module_xyz):
        element = parse_element('x*z+y^2', module_xyz)
        assert element.leading_monomial().exponents == (0, 2, 0)
        assert element.leading_monomial(MonomialOrder('lex')).exponents == (1, 0, 1)

    def test_position_and_term_over_position(self):
        module = FreeModule(Ring(['x', 'y']), (0, 0))
        element = parse_element('y*e1+x*e2', module)
        assert element.leading_monomial(MonomialOrder(module_order='pot')).component == 0
        assert element.leading_monomial(MonomialOrder(module_order='top')).component == 1

    def test_weights_refine_the_degree(self, module):
        element = parse_element('x^2+y^2', module)
        order = MonomialOrder(weights=(((0, 1), None),))
        assert element.leading_monomial(order).exponents == (0, 2)

    def test_invalid_choice(self):
        with pytest.raises(ArgumentValidationError):
            MonomialOrder('grlex')


def random_monomial(rng, nvars=3, rank=2):
    exponents = tuple(int(e) for e in rng.integers(0, 4, size=nvars))
    return ModuleMonomial(exponents, int(rng.integers(0, rank)))


def times(exponents, monomial):
    return ModuleMonomial(tuple(a + b for a, b in zip(exponents, monomial.exponents)),
                          monomial.component)


class TestMonomialOrderAxioms:
    @pytest.fixture
    def module(self):
        yield FreeModule(Ring(['x', 'y', 'z']), (0, 1))

    orders = [
        MonomialOrder('degrevlex'),                                 # case: grevlex
        MonomialOrder('lex'),                                       # case: graded lex
        MonomialOrder('lex', graded=False),                         # case: pure lex
        MonomialOrder(weights=(((3, 1, 2), (0, 4)),)),              # case: weighted
        MonomialOrder(module_order='top'),                          # case: term over position
        MonomialOrder('lex', 'top', weights=(((0, 2, 1), None),)),  # case: weighted top
    ]

    @pytest.mark.parametrize("order", orders)
    def test_total_and_transitive(self, module, order):
        rng = np.random.default_rng(5)
        key = order.key_function(module)
        for _ in range(200):
            first, second, third = (random_monomial(rng) for _ in range(3))
            assert (key(first) == key(second)) == (first == second)
            low, middle, high = sorted([first, second, third], key=key)
            assert key(low) <= key(middle) <= key(high)
            if key(first) < key(second) and key(second) < key(third):
                assert key(first) < key(third)

    @pytest.mark.parametrize("order", orders)
    def test_compatible_with_multiplication(self, module, order):
        rng = np.random.default_rng(6)
        key = order.key_function(module)
        for _ in range(200):
            first, second = random_monomial(rng), random_monomial(rng)
            factor = random_monomial(rng, rank=1).exponents
            if key(first) < key(second):
                assert key(times(factor, first)) < key(times(factor, second))
            if any(factor):
                # every proper multiple is larger, so descending chains stop
                assert key(times(factor, first)) > key(first)


class TestModuleElement:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ('x^2+y^2', 'x^2+y^2'),                     # case: already canonical
            ('y^2+x^2', 'x^2+y^2'),                     # case: reordered
            ('-1/2*y^3+3*x^2*y', '3*x^2*y-1/2*y^3'),    # case: rational coefficients
            ('x*y-x*y', '0'),                           # case: cancellation
            ('2*x+3*x', '5*x'),                         # case: like terms
        ]
    )
    def test_text(self, module, text, expected):
        assert parse_element(text, module).to_text() == expected

    def test_rank_two_text(self, rank_two):
        element = parse_element('y*e2+x^2*e1', rank_two)
        assert element.to_text() == 'x^2*e1+y*e2'
        assert element.degree == (2,)

    def test_arithmetic(self, module):
        f = parse_element('x^2+y^2', module)
        g = parse_element('x*y', module)
        assert (f + g).to_text() == 'x^2+x*y+y^2'
        assert not (f - f)
        assert (f * 2).to_text() == '2*x^2+2*y^2'
        assert not f.scale(0)
        assert f.mul_monomial((0, 1)).to_text() == 'x^2*y+y^3'
        assert (-g).to_text() == '-x*y'
        assert f.monic() == f

    def test_operands_from_different_modules(self, module, module_xyz):
        with pytest.raises(ElementError):
            parse_element('x', module) + parse_element('x', module_xyz)

    def test_degree_of_inhomogeneous_element(self, module):
        element = parse_element('x^2+y', module)
        assert not element.is_homogeneous
        with pytest.raises(HomogeneityError, match='generator not homogeneous: x\\^2\\+y'):
            element.degree

    def test_exponent_overflow(self, module):
        element = parse_element('x^2147483647', module)
        with pytest.raises(ExponentOverflowError):
            element.mul_monomial((1, 0))

    def test_leading_term_of_zero(self, module):
        with pytest.raises(ZeroElementError):
            module.zero().leading_term()

    def test_linear_combination(self, module):
        generators = [parse_element('x^2', module), parse_element('x*y', module)]
        vector = parse_element('y*e1-x*e2', FreeModule(module.ring, (2, 2)))
        assert not linear_combination(vector, generators, module)


class TestInitialForm:
    @pytest.mark.parametrize(
        "text,omega,expected",
        [
            ('x^2+y^2', (1, 0), 'x^2'),             # case: x heavier
            ('x^2+y^2', (0, 1), 'y^2'),             # case: y heavier
            ('x^2+y^2', (1, 1), 'x^2+y^2'),         # case: balanced weight
            ('x^2+y^2', (0, 0), 'x^2+y^2'),         # case: zero weight
            ('x^2+x*y+y^2', (2, 1), 'x^2'),         # case: single top term
        ]
    )
    def test_initial_form(self, module, text, omega, expected):
        element = parse_element(text, module)
        assert initial_form(element, WeightData(omega)).to_text() == expected

    def test_epsilon_selects_components(self, rank_two):
        element = parse_element('x^2*e1+y*e2', rank_two)
        weight = WeightData((1, 1), (0, 2)).for_module(rank_two)
        assert initial_form(element, weight).to_text() == 'y*e2'

    def test_zero(self, module):
        with pytest.raises(ZeroElementError, match='initial form of zero undefined'):
            initial_form(module.zero(), WeightData((1, 0)))


class TestHomogenization:
    def test_bigraded_context(self, rank_two):
        context = BigradedContext(rank_two, WeightData((1, 0), (0, 2)))
        assert context.ring.names == ('x', 'y', 't')
        assert context.ring.grading == ((1, 1), (1, 0), (0, 1))
        assert context.module.shifts == ((0, 0), (1, 2))

    def test_homogenize(self, module):
        element = parse_element('x^2+y^2', module)
        lifted = homogenize(element, WeightData((1, 0)))
        assert lifted.to_text() == 'x^2+y^2*t^2'
        assert lifted.degree == (2, 2)

    def test_evaluate_recovers_element_and_initial_form(self, module):
        weight = WeightData((1, 0))
        element = parse_element('x^2+x*y+y^2', module)
        lifted = homogenize(element, weight)
        assert evaluate_t(lifted, 1, target=module) == element
        assert evaluate_t(lifted, 0, target=module) == initial_form(element, weight)
        assert reduce_mod_t(lifted).to_text() == 'x^2'

    def test_t_division(self, module):
        lifted = homogenize(parse_element('x*y+y^2', module), WeightData((1, 0)))
        product = lifted.mul_monomial((0, 0, 2))
        assert product.t_order() == 2
        assert product.strip_t() == lifted
        with pytest.raises(ElementError):
            lifted.divide_by_t(1)

    def test_homogenize_inhomogeneous(self, module):
        with pytest.raises(HomogeneityError):
            homogenize(parse_element('x^2+y', module), WeightData((1, 0)))

    def test_homogenize_zero(self, module):
        with pytest.raises(ZeroElementError):
            homogenize(module.zero(), WeightData((1, 0)))

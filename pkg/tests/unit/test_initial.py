import pytest

from cregro.polynomial import Ring
from cregro.polynomial import FreeModule
from cregro.polynomial import WeightData
from cregro.polynomial import BigradedContext
from cregro.polynomial import MonomialOrder
from cregro.groebner import buchberger
from cregro.groebner import Submodule
from cregro.initial import homogenize_module
from cregro.initial import initial_module_sat
from cregro.initial import initial_generators
from cregro.initial import weight_buchberger
from cregro.initial import LiftingInstance
from cregro.initial import lifting_criterion
from cregro.initial import buchberger_criterion
from cregro.initial import truncated_criterion
from cregro.parser import parse_element
from cregro.exceptions import DegreeBoundError
from cregro.exceptions import ElementError
from cregro.exceptions import LiftingInstanceError


def submodule_of(texts, module):
    return Submodule(module, [parse_element(text, module) for text in texts])


def texts(submodule):
    return [g.to_text() for g in submodule.groebner_basis()]


@pytest.fixture
def module():
    yield FreeModule(Ring(['x', 'y']))


@pytest.fixture
def ideal(module):
    yield submodule_of(['x^2+y^2', 'x*y'], module)


class TestInitialModule:
    @pytest.mark.parametrize(
        "omega,expected",
        [
            ((1, 0), ['x^2', 'x*y', 'y^3']),        # case: x heavier
            ((0, 1), ['x*y', 'y^2', 'x^3']),        # case: y heavier
            ((0, 0), ['x^2+y^2', 'x*y', 'y^3']),    # case: zero weight keeps M
            ((1, 1), ['x^2+y^2', 'x*y', 'y^3']),    # case: constant weight keeps M
        ]
    )
    def test_saturation_route(self, ideal, omega, expected):
        assert texts(initial_module_sat(ideal, WeightData(omega))) == expected

    @pytest.mark.parametrize(
        "omega",
        [(1, 0), (0, 1), (0, 0), (3, 1)]
    )
    def test_routes_agree(self, ideal, omega):
        weight = WeightData(omega)
        saturated = initial_module_sat(ideal, weight)
        single, _ = weight_buchberger(ideal, weight)
        maximal, _ = weight_buchberger(ideal, weight, divide_max_t=True)
        assert single == saturated
        assert maximal == saturated

    def test_initial_module_is_idempotent(self, ideal):
        weight = WeightData((1, 0))
        initial = initial_module_sat(ideal, weight)
        assert initial_module_sat(initial, weight) == initial

    def test_rank_two_with_epsilon(self):
        module = FreeModule(Ring(['x', 'y']), (0, 1))
        submodule = submodule_of(['x^2*e1+y*e2'], module)
        initial = initial_module_sat(submodule, WeightData((1, 1), (0, 2)))
        assert texts(initial) == ['y*e2']

    def test_prime_field(self):
        from cregro.polynomial import CoefficientField
        module = FreeModule(Ring(['x', 'y'], CoefficientField(101)))
        ideal = submodule_of(['x^2+y^2', 'x*y'], module)
        assert texts(initial_module_sat(ideal, WeightData((1, 0)))) == ['x^2', 'x*y', 'y^3']

    def test_initial_generators(self, ideal):
        forms = initial_generators(ideal, WeightData((1, 0)))
        assert texts(forms) == ['x^2', 'x*y']


class TestFlatFamily:
    def test_fibers(self, ideal):
        family = homogenize_module(ideal, WeightData((1, 0)))
        assert family.is_flat()
        assert family.fiber(1) == ideal
        assert texts(family.fiber(0)) == ['x^2', 'x*y', 'y^3']


class TestWeightBuchberger:
    def test_trace_single_t(self, ideal):
        initial, trace = weight_buchberger(ideal, WeightData((1, 0)))
        assert texts(initial) == ['x^2', 'x*y', 'y^3']
        assert len(trace) == 3
        assert trace.termination_step == 2
        assert [len(step.additions) for step in trace.steps] == [1, 1, 0]
        assert trace.steps[-1].is_terminal
        assert trace.steps[0].additions[0].to_text() == 'y^3*t'
        assert trace.to_text().splitlines()[-1].endswith('-> stop')

    def test_trace_maximal_t(self, ideal):
        _, trace = weight_buchberger(ideal, WeightData((1, 0)), divide_max_t=True)
        assert len(trace) == 2
        assert trace.steps[0].additions[0].to_text() == 'y^3'

    def test_terminal_member_is_the_homogenization(self, ideal):
        weight = WeightData((1, 0))
        _, trace = weight_buchberger(ideal, weight)
        assert trace.terminal == homogenize_module(ideal, weight).mtilde
        for member in trace.chain:
            assert trace.terminal.contains_submodule(member)

    def test_zero_module(self, module):
        with pytest.raises(ElementError):
            weight_buchberger(Submodule(module, []), WeightData((1, 0)))


class TestCriteria:
    @pytest.mark.parametrize(
        "generators,omega,expected",
        [
            (['x^2+y^2', 'x*y'], (1, 0), False),    # case: y^3 is missing
            (['x^2+x*y', 'y^2'], (1, 0), True),     # case: coprime initial forms
            (['x^2', 'x*y', 'y^3'], (1, 0), True),  # case: monomial module
            (['x^2+x*y+y^2'], (1, 0), True),        # case: principal ideal
        ]
    )
    def test_buchberger_criterion(self, module, generators, omega, expected):
        generators = [parse_element(text, module) for text in generators]
        weight = WeightData(omega)
        assert buchberger_criterion(generators, weight) is expected
        assert buchberger_criterion(generators, weight, minimal=True) is expected

    def test_criterion_agrees_with_initial_module(self, module):
        generators = [parse_element(text, module) for text in ['x^2+x*y', 'y^2']]
        weight = WeightData((1, 0))
        submodule = Submodule(module, generators)
        assert buchberger_criterion(generators, weight)
        assert initial_generators(submodule, weight) == initial_module_sat(submodule, weight)

    def test_truncated_criterion(self, module):
        weight = WeightData((1, 0))
        good = [parse_element(text, module) for text in ['x^2+x*y', 'y^2']]
        bad = [parse_element(text, module) for text in ['x^2+y^2', 'x*y']]
        assert truncated_criterion(good, weight, 4)
        assert not truncated_criterion(bad, weight, 3)

    def test_truncated_criterion_bound(self, module):
        generators = [parse_element(text, module) for text in ['x^2+x*y', 'y^2']]
        with pytest.raises(DegreeBoundError, match='bound below syzygy degree'):
            truncated_criterion(generators, WeightData((1, 0)), 3)

    @pytest.mark.parametrize(
        "criterion,args",
        [
            (buchberger_criterion, ()),
            (truncated_criterion, (4,)),
        ]
    )
    def test_criteria_need_generators(self, criterion, args):
        with pytest.raises(ElementError, match='the criterion needs non-zero generators'):
            criterion([], WeightData((1, 0)), *args)


class TestLiftingInstance:
    @pytest.fixture
    def context(self, module):
        yield BigradedContext(module, WeightData((1, 0)))

    def test_lifting_criterion(self, module, context):
        lifted = [context.homogenize(parse_element(text, module)) for text in ['x^2+y^2', 'x*y']]
        assert not lifting_criterion(LiftingInstance.from_generators(lifted))

        lifted.append(context.homogenize(parse_element('y^3', module)))
        instance = LiftingInstance.from_generators(lifted)
        assert lifting_criterion(instance)
        assert len(instance.f1) == 3

    def test_reductions_must_form_a_complex(self, module, context):
        g1 = [context.homogenize(parse_element('x', module))]
        g2 = [FreeModule(context.ring, [(2, 2)]).basis_element(0)]
        with pytest.raises(LiftingInstanceError):
            LiftingInstance(g1, g2)

    def test_rank_mismatch(self, module, context):
        g1 = [context.homogenize(parse_element('x', module))]
        g2 = [FreeModule(context.ring, [(1, 1), (1, 1)]).basis_element(0)]
        with pytest.raises(LiftingInstanceError):
            LiftingInstance(g1, g2)

    def test_needs_bigraded_ring(self, module):
        with pytest.raises(LiftingInstanceError):
            LiftingInstance([parse_element('x', module)], [])


def leading_term_module(submodule, order):
    ambient = submodule.ambient
    terms = []
    for element in buchberger(submodule.generators, order):
        monomial = element.leading_monomial(order)
        terms.append(ambient.monomial(monomial.exponents, monomial.component))
    return Submodule(ambient, terms)


class TestSeparatingWeights:
    @pytest.fixture
    def ring(self):
        yield Ring(['x', 'y', 'z'])

    @pytest.mark.parametrize(
        "generators",
        [
            ['x^2-y*z', 'y^2-x*z'],                 # case: twisted cubic pencil
            ['x*y+y*z+z^2', 'x^2-z^2'],             # case: complete intersection
            ['x^3-y*z^2+z^3', 'x*y-z^2', 'y^2*z'],  # case: mixed degrees
        ]
    )
    def test_ideal_matches_monomial_initial_module(self, ring, generators):
        ideal = submodule_of(generators, FreeModule(ring))
        weight = WeightData((100, 10, 1))
        saturated = initial_module_sat(ideal, weight)
        lifted, _ = weight_buchberger(ideal, weight)
        weighted = MonomialOrder(weights=((weight.omega, ()),))
        assert saturated == leading_term_module(ideal, weighted)
        assert lifted == saturated
        # in degrees below ten the weight orders monomials like graded lex
        assert saturated == leading_term_module(ideal, MonomialOrder('lex'))

    @pytest.mark.parametrize(
        "epsilon",
        [
            (1000, 0),  # case: first component heavier
            (0, 1000),  # case: second component heavier
        ]
    )
    def test_rank_two_matches_monomial_initial_module(self, ring, epsilon):
        module = FreeModule(ring, (0, 0))
        submodule = submodule_of(['x*e1+y*e2', 'z^2*e1-x*y*e2', 'y*z*e1+z^2*e2'], module)
        weight = WeightData((100, 10, 1), epsilon)
        saturated = initial_module_sat(submodule, weight)
        lifted, _ = weight_buchberger(submodule, weight)
        order = MonomialOrder(weights=((weight.omega, weight.epsilon),))
        expected = leading_term_module(submodule, order)
        assert saturated == expected
        assert lifted == expected
        assert all(len(g.coefficients) == 1 for g in saturated.groebner_basis())

import pytest

from cregro import checks
from cregro.checks import CheckReport
from cregro.checks import Instance
from cregro.checks import InstanceGenerator
from cregro.checks import SweepSummary
from cregro.checks import as_instance
from cregro.checks import curated_corpus
from cregro.checks import run_check
from cregro.checks import run_sweep
from cregro.checks import check_hilbert_preservation
from cregro.checks import check_betti_dominance
from cregro.checks import check_consecutive_cancellation
from cregro.checks import check_crystallization
from cregro.checks import check_thm_same_b
from cregro.checks import check_thm_leila
from cregro.checks import check_remark_syzygy_initial
from cregro.checks import check_lifting_lemma
from cregro.checks import check_route_equivalence
from cregro.checks import check_buchberger_criterion
from cregro.checks import check_linear_defect
from cregro.checks import check_groebner_engine
from cregro.polynomial import Ring
from cregro.polynomial import FreeModule
from cregro.polynomial import WeightData
from cregro.polynomial import BigradedContext
from cregro.groebner import Submodule
from cregro.initial import LiftingInstance
from cregro.parser import parse_element
from cregro.exceptions import ArgumentValidationError
from cregro.exceptions import CregroError


def submodule_of(texts, module):
    return Submodule(module, [parse_element(text, module) for text in texts])


@pytest.fixture
def module():
    yield FreeModule(Ring(['x', 'y']))


@pytest.fixture
def instance(module):
    ideal = submodule_of(['x^2+y^2', 'x*y'], module)
    yield Instance(ideal, WeightData((1, 0)))


@pytest.fixture
def square(module):
    ideal = submodule_of(['x^2', 'x*y', 'y^2'], module)
    yield Instance(ideal, WeightData((1, 0)))


class TestCheckReport:
    def test_text(self):
        report = CheckReport('dominance', instance='I', seed=3, verdict='fail',
                             witness={'a': 1}, details={'b': [1, 2]})
        assert report.is_fail
        assert report.to_text() == 'dominance: fail (seed 3) :: I\n  b: 1, 2\n  witness: {"a": 1}'

    def test_vacuous_text(self):
        report = CheckReport('sameb', instance='I', vacuous=True)
        assert report.to_text() == 'sameb: pass (vacuous) :: I'

    def test_dict(self):
        report = CheckReport('ld', instance='I')
        assert report.to_dict() == dict(name='ld', instance='I', seed=None, verdict='pass',
                                        vacuous=False, witness=None, details={})

    def test_invalid_verdict(self):
        with pytest.raises(ArgumentValidationError):
            CheckReport('ld', verdict='maybe')


class TestInstance:
    def test_describe(self, instance):
        assert instance.describe() == 'QQ[x,y] F=(0) omega=1,0 epsilon=0 M=[x^2+y^2, x*y]'

    def test_companions(self, instance):
        assert [g.to_text() for g in instance.initial.groebner_basis()] == ['x^2', 'x*y', 'y^3']
        assert instance.initial_creg == 0
        assert instance.module_creg == 1

    def test_as_instance(self, module, instance):
        assert as_instance(instance) is instance
        wrapped = as_instance(instance.submodule)
        assert wrapped.weight.is_zero


class TestInstanceGenerator:
    def test_seed_determines_the_instance(self):
        generator = InstanceGenerator()
        assert generator.instance(7).describe() == generator.instance(7).describe()
        assert generator.instance(7).seed == 7

    def test_instances_respect_limits(self):
        generator = InstanceGenerator(max_vars=2, max_rank=1, max_generators=2, max_degree=2)
        for instance in generator.instances(0, 10):
            assert instance.submodule.ring.nvars == 2
            assert instance.submodule.ambient.rank == 1
            assert 1 <= len(instance.submodule.generators) <= 2
            assert max(instance.submodule.generator_degrees()) <= 2

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(max_vars=5),           # case: too many variables
            dict(max_rank=0),           # case: empty free module
            dict(max_degree=7),         # case: degree above the cap
            dict(coefficient_bound=0),  # case: no coefficient
            dict(max_vars='3'),         # case: wrong type
        ]
    )
    def test_invalid_limits(self, kwargs):
        with pytest.raises(ArgumentValidationError):
            InstanceGenerator(**kwargs)

    def test_curated_corpus(self):
        corpus = curated_corpus()
        assert len(corpus) == 10
        assert corpus[0].label == 'complete-intersection'
        assert all(item.seed is None for item in corpus)


class TestChecks:
    def test_hilbert_preservation(self, instance):
        report = check_hilbert_preservation(instance)
        assert report.is_pass
        assert report.details['hilbert'][:4] == [1, 2, 1, 0]

    def test_betti_dominance(self, instance):
        report = check_betti_dominance(instance)
        assert report.is_pass
        assert report.details == dict(module=[1, 2, 1], initial=[1, 3, 2])

    def test_consecutive_cancellation(self, instance):
        report = check_consecutive_cancellation(instance)
        assert report.is_pass
        assert report.details == dict(cancellations=[[1, 3, 2, 3, 1]])

    def test_crystallization_is_vacuous(self, instance):
        report = check_crystallization(instance)
        assert report.is_pass and report.vacuous
        assert report.details == dict(a=2, r=0, degrees=[2, 2, 3])

    @pytest.mark.parametrize("level", [0, 1])
    def test_same_b_is_vacuous_on_complete_intersection(self, instance, level):
        report = check_thm_same_b(instance, level=level)
        assert report.is_pass and report.vacuous

    def test_same_b_fires_on_monomial_module(self, square):
        report = check_thm_same_b(square)
        assert report.is_pass and not report.vacuous
        assert report.details['creg'] == 0

    def test_same_b_level(self, instance):
        with pytest.raises(ArgumentValidationError):
            check_thm_same_b(instance, level=2)

    def test_leila_delegates_below_two(self, instance):
        report = check_thm_leila(instance, index=1)
        assert report.name == 'leila'
        assert report.details['delegated'] == 'sameb'

    def test_leila(self, square):
        report = check_thm_leila(square, index=2)
        assert report.is_pass

    def test_remark(self, instance):
        assert check_remark_syzygy_initial(instance, index=1).is_pass

    def test_remark_past_the_resolution(self, instance):
        report = check_remark_syzygy_initial(instance, index=9)
        assert report.is_pass and report.vacuous

    def test_lifting_lemma_over_the_trace(self, instance):
        report = check_lifting_lemma(instance)
        assert report.is_pass
        assert report.details == {'true': 1, 'false': 2}

    def test_lifting_lemma_on_a_diagram(self, module):
        context = BigradedContext(module, WeightData((1, 0)))
        lifted = [context.homogenize(parse_element(text, module))
                  for text in ['x^2+y^2', 'x*y', 'y^3']]
        report = check_lifting_lemma(LiftingInstance.from_generators(lifted))
        assert report.is_pass
        assert report.details == {'true': 1, 'false': 0}

    def test_route_equivalence(self, instance):
        report = check_route_equivalence(instance)
        assert report.is_pass
        assert report.details == dict(chain=3, chain_max_t=2)

    def test_buchberger_criterion(self, instance):
        report = check_buchberger_criterion(instance)
        assert report.is_pass
        assert report.details['expected'] is False

    def test_linear_defect(self, instance):
        report = check_linear_defect(instance)
        assert report.is_pass
        assert report.details == dict(
            module=dict(ld=1, creg=1, reg=3, d=2),
            initial=dict(ld=0, creg=0, reg=3, d=3)
        )

    def test_groebner_engine(self, instance):
        report = check_groebner_engine(instance)
        assert report.is_pass
        assert report.details == dict(basis=3)


class TestRunCheck:
    def test_zero_module_is_not_applicable(self, module):
        zero = Instance(Submodule(module, []), WeightData((1, 0)))
        assert run_check('hilbert', zero).is_not_applicable

    def test_unknown_check(self, instance):
        with pytest.raises(ArgumentValidationError):
            run_check('nonsense', instance)

    def test_engine_error_becomes_failure(self, instance, monkeypatch):
        def broken(subject, **kwargs):
            raise CregroError('boom')

        monkeypatch.setitem(checks.CHECKS, 'hilbert', broken)
        report = run_check('hilbert', instance)
        assert report.is_fail
        assert report.witness == dict(error='CregroError: boom')

    def test_argument_is_forwarded(self, instance):
        report = run_check('remark', instance, argument=9)
        assert report.details == dict(index=9)


class TestSweep:
    @pytest.mark.parametrize("name", sorted(checks.CHECKS))
    def test_curated_corpus_passes(self, name):
        summary = run_sweep(name, budget=0)
        assert summary.counts['seeds'] == 10
        assert summary.counts['fail'] == 0, [r.to_text() for r in summary.failures]
        assert not summary.never_fired

    @pytest.mark.parametrize(
        "name,argument",
        [
            ('sameb', 0),     # case: equal generator counts
            ('sameb', 1),     # case: equal first syzygy counts
            ('leila', None),  # case: equal second syzygy counts
        ]
    )
    def test_curated_corpus_fires_hypotheses(self, name, argument):
        summary = run_sweep(name, budget=0, argument=argument)
        assert summary.counts['fail'] == 0
        assert summary.counts['fired'] >= 3

    @pytest.mark.parametrize("name", sorted(checks.CHECKS))
    def test_seeded_sweep_passes(self, name):
        generator = InstanceGenerator(max_vars=2, max_rank=2, max_generators=3, max_degree=3)
        summary = run_sweep(name, seed=11, budget=3, curated=False, generator=generator)
        assert summary.counts['seeds'] == 3
        assert summary.counts['fail'] == 0, [r.to_text() for r in summary.failures]

    def test_crystallization_hypothesis_fires(self):
        generator = InstanceGenerator(max_vars=2, max_rank=1, max_generators=2, max_degree=3)
        summary = run_sweep('crystallization', seed=0, budget=20, generator=generator)
        assert summary.counts['fail'] == 0
        assert summary.counts['fired'] >= 10

    def test_lifting_sweep_sees_both_directions(self):
        generator = InstanceGenerator(max_vars=2, max_rank=1, max_generators=3, max_degree=3)
        summary = run_sweep('lifting', seed=0, budget=5, generator=generator)
        tally = summary.lifting_tally
        assert summary.counts['fail'] == 0
        assert tally['true'] >= summary.counts['seeds']
        assert tally['false'] >= 2
        assert summary.to_dict()['lifting'] == tally
        assert ', criterion true {}, false {}'.format(tally['true'], tally['false']) \
            in summary.to_text()

    def test_other_sweeps_carry_no_lifting_tally(self):
        summary = SweepSummary('ld', [CheckReport('ld')])
        assert summary.lifting_tally is None
        assert 'lifting' not in summary.to_dict()

    def test_sweep_whose_hypothesis_never_fires_is_flagged(self, instance, monkeypatch):
        monkeypatch.setattr(checks, 'curated_corpus', lambda: [instance])
        summary = run_sweep('sameb', budget=0)
        assert summary.counts['vacuous'] == 1
        assert summary.never_fired
        assert summary.to_dict()['never_fired'] is True
        assert summary.to_text() == (
            'check sameb: 1 instances, pass 1, fail 0, not-applicable 0, vacuous 1, '
            'fired 0 (hypothesis never fired)'
        )

    def test_empty_sweep_is_not_flagged(self):
        assert not SweepSummary('sameb', []).never_fired

    def test_thread_count_does_not_change_reports(self):
        generator = InstanceGenerator(max_degree=2)
        single = run_sweep('hilbert', seed=3, budget=4, threads=1, curated=False,
                           generator=generator)
        pooled = run_sweep('hilbert', seed=3, budget=4, threads=3, curated=False,
                           generator=generator)
        assert [r.to_dict() for r in single.reports] == [r.to_dict() for r in pooled.reports]
        assert [r.seed for r in single.reports] == [3, 4, 5, 6]

    def test_invalid_budget(self):
        with pytest.raises(ArgumentValidationError):
            run_sweep('hilbert', budget=-1)
        with pytest.raises(ArgumentValidationError):
            run_sweep('hilbert', threads=0)

    def test_summary(self):
        reports = [
            CheckReport('sameb'),
            CheckReport('sameb', vacuous=True),
            CheckReport('sameb', verdict='fail'),
            CheckReport('sameb', verdict='not-applicable'),
        ]
        summary = SweepSummary('sameb', reports)
        assert summary.to_dict() == {'name': 'sameb', 'seeds': 4, 'pass': 2, 'fail': 1,
                                     'na': 1, 'vacuous': 1, 'fired': 1, 'never_fired': False}
        assert summary.to_text() == \
            'check sameb: 4 instances, pass 2, fail 1, not-applicable 1, vacuous 1, fired 1'
        assert len(summary.failures) == 1

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from src.analysis.sampling import SamplePlan
from src.frames.adapted_frame import FrameField
from src.geometry.killing import killing_verdict
from src.geometry.verdict import Verdict
from src.kinematics import (
    COUNTEREXAMPLE_CANDIDATE, HYPOTHESIS_UNMET, THEOREM_INSTANTIATED,
    decide_conclusion, decompose_m, herglotz_noether_report, isometry_via_criteria,
    kinematic_invariants, rigidity_verdict, rotational_predicate, timelike_domain_check,
)
from src.models.catalog import build_model
from src.utils.errors import PreconditionViolated, SchemaError


def plan_for(scene, count=10, seed=5):
    lower, upper = scene.domain
    return SamplePlan('random', count, lower, upper, seed)


class TestDecomposition:
    def test_parts(self):
        M = np.array([[1.0, 2.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
        vorticity, shear, expansion = decompose_m(M)
        assert expansion == 3.0
        np.testing.assert_allclose(vorticity, [[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
        np.testing.assert_allclose(shear, [[0, 1, 0], [1, 0, 0], [0, 0, 0]])

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            decompose_m(np.zeros((2, 3)))

    @settings(max_examples=100, deadline=None)
    @given(arrays(np.float64, (3, 3), elements=st.floats(-10.0, 10.0)))
    def test_reconstruction(self, M):
        vorticity, shear, expansion = decompose_m(M)
        np.testing.assert_allclose(vorticity + shear + expansion / 3 * np.eye(3), M,
                                   atol=1e-12)
        np.testing.assert_allclose(vorticity, -vorticity.T)
        np.testing.assert_allclose(shear, shear.T)
        assert abs(np.trace(shear)) < 1e-12

    def test_rotating_disk_invariants(self):
        scene = build_model('minkowski', 4, flow='rotating', flow_params={'omega': 0.5})
        invariants = kinematic_invariants(FrameField(scene, [0.0, 1.0, 0.0, 0.0]).sample)
        assert invariants.lam == pytest.approx(np.sqrt(0.75))
        assert invariants.acceleration_norm == pytest.approx(1.0 / 3.0)
        assert invariants.vorticity_magnitude == pytest.approx(2.0 / 3.0)
        assert invariants.shear_magnitude < 1e-12
        assert abs(invariants.expansion) < 1e-12
        assert set(invariants.to_dict()) >= {'lambda', 'acceleration_norm', 'expansion'}


class TestRigidity:
    @pytest.mark.parametrize("name,flow,rigid", [
        ('minkowski', 'static', True),
        ('minkowski', 'rotating', True),
        ('minkowski', 'boost', True),
        ('minkowski', 'milne', False),
        ('minkowski', 'perturbed_rotating', False),
        ('de_sitter', 'rotating', True),
        ('fermi_rigid', 'fermi_rigid', True),
    ])
    def test_verdicts(self, name, flow, rigid):
        scene = build_model(name, 4, flow=flow)
        points = plan_for(scene).points()
        assert rigidity_verdict(scene, points).passed is rigid

    def test_milne_worst_residual_is_expansion(self):
        scene = build_model('minkowski', 4, flow='milne')
        verdict = rigidity_verdict(scene, [[1.6, 0.2, 0.0, 0.0]])
        assert verdict.worst_residual == pytest.approx(1.0 / np.sqrt(1.6 ** 2 - 0.2 ** 2))

    def test_perturbed_rotation_shears(self):
        scene = build_model('minkowski', 4, flow='perturbed_rotating',
                            flow_params={'omega': 0.5, 'epsilon': 0.1})
        verdict = rigidity_verdict(scene, plan_for(scene).points(), 1e-6)
        assert not verdict.passed
        assert verdict.worst_residual > 1e-3

    def test_empty_sample_set(self):
        with pytest.raises(SchemaError) as info:
            rigidity_verdict(build_model('minkowski', 4), [])
        assert info.value.field == 'points'

    def test_rotational_predicate(self):
        rotating = build_model('minkowski', 4, flow='rotating')
        static = build_model('minkowski', 4)
        perturbed = build_model('minkowski', 4, flow='perturbed_rotating')
        point = [0.0, 1.0, 0.5, 0.0]
        assert rotational_predicate(rotating, point)
        assert rotational_predicate(perturbed, point)
        assert not rotational_predicate(static, point)


class TestIsometryCriteria:
    def test_rotation_satisfies_both(self):
        scene = build_model('minkowski', 4, flow='rotating', flow_params={'omega': 0.5})
        criteria = isometry_via_criteria(scene, plan_for(scene).points())
        assert criteria.rigidity.passed
        assert all(v.passed for v in criteria.as_dict().values())
        assert set(criteria.as_dict()) == {'rfif', 'finalc'}

    def test_fermi_fails_both(self):
        scene = build_model('fermi_rigid', 4, params={'a0': 0.3, 'a1': 0.1})
        criteria = isometry_via_criteria(scene, plan_for(scene).points())
        assert criteria.rigidity.passed
        assert not criteria.exact_acceleration.passed
        assert not criteria.steady_rotation.passed

    def test_constant_fermi_acceleration_passes(self):
        scene = build_model('fermi_rigid', 4, params={'a0': 0.3, 'a1': 0.0})
        criteria = isometry_via_criteria(scene, plan_for(scene).points())
        assert criteria.exact_acceleration.passed
        assert criteria.steady_rotation.passed

    @pytest.mark.parametrize("name,n,flow,params,flow_params", [
        ('minkowski', 4, 'static', {}, {}),
        ('minkowski', 4, 'rotating', {}, {'omega': 0.5}),
        ('minkowski', 4, 'helical', {}, {}),
        ('minkowski', 4, 'boost', {}, {}),
        ('de_sitter', 4, 'rotating', {}, {'omega': 0.3}),
        ('de_sitter', 5, 'rotating', {}, {'omega': 0.3}),
        ('anti_de_sitter', 4, 'rotating', {}, {'omega': 0.3}),
        ('anti_de_sitter', 5, 'rotating', {}, {'omega': 0.3}),
        ('einstein_static', 4, 'rotating', {}, {'omega': 0.5}),
        ('fermi_rigid', 4, 'fermi_rigid', {'a0': 0.3, 'a1': 0.0}, {}),
    ])
    def test_killing_flows_meet_both_criteria(self, name, n, flow, params, flow_params):
        scene = build_model(name, n, params=params, flow=flow, flow_params=flow_params)
        points = plan_for(scene, 20).points()
        assert killing_verdict(scene, points, 1e-6).passed
        assert rigidity_verdict(scene, points, 1e-6).passed
        criteria = isometry_via_criteria(scene, points, 1e-6)
        assert criteria.as_dict()['rfif'].passed
        assert criteria.as_dict()['finalc'].passed

    def test_requires_rigid_flow(self):
        scene = build_model('minkowski', 4, flow='milne')
        with pytest.raises(PreconditionViolated) as info:
            isometry_via_criteria(scene, plan_for(scene).points())
        assert not info.value.verdict.passed


class TestTimelikeDomain:
    def test_flags_light_cylinder(self):
        scene = build_model('minkowski', 4, flow='rotating', flow_params={'omega': 0.5})
        points = [[0.0, 1.0, 0.0, 0.0], [0.0, 2.0, 0.0, 0.0], [0.0, 1.5, 2.0, 0.0]]
        report = timelike_domain_check(scene, points)
        np.testing.assert_array_equal(report.flagged, [False, True, True])
        assert report.g_vv[0] == pytest.approx(-0.75)
        assert list(report.to_frame()['timelike']) == [True, False, False]

    def test_recommended_domain_is_clear(self):
        scene = build_model('minkowski', 4, flow='rotating', flow_params={'omega': 1.5})
        report = timelike_domain_check(scene, plan_for(scene, 200).points())
        assert not report.flagged.any()


class TestTheorem:
    def test_rotating_minkowski_is_instantiated(self):
        scene = build_model('minkowski', 4, flow='rotating', flow_params={'omega': 0.5})
        report = herglotz_noether_report(scene, plan_for(scene))
        assert report.conclusion == THEOREM_INSTANTIATED
        assert report.kappa == 0.0
        assert report.kappa_declared
        assert report.all_rigid and report.all_rotational
        assert all(p.M_dot_zero.passed and p.K_dot_zero.passed for p in report.points)

    @pytest.mark.parametrize("name", ['de_sitter', 'anti_de_sitter'])
    def test_curved_homogeneous_is_instantiated(self, name):
        scene = build_model(name, 4, flow='rotating', flow_params={'omega': 0.3})
        assert herglotz_noether_report(scene, plan_for(scene)).conclusion == THEOREM_INSTANTIATED

    @pytest.mark.parametrize("name,flow", [
        ('minkowski', 'static'),
        ('minkowski', 'milne'),
        ('minkowski', 'perturbed_rotating'),
        ('einstein_static', 'rotating'),
        ('fermi_rigid', 'fermi_rigid'),
    ])
    def test_hypothesis_unmet(self, name, flow):
        scene = build_model(name, 4, flow=flow)
        report = herglotz_noether_report(scene, plan_for(scene))
        assert report.conclusion == HYPOTHESIS_UNMET

    def test_einstein_static_fails_homogeneity(self):
        scene = build_model('einstein_static', 4, flow='rotating')
        report = herglotz_noether_report(scene, plan_for(scene))
        assert not report.kappa_declared
        assert not report.homogeneity.passed
        assert report.killing_direct.passed

    def test_excludes_non_timelike_points(self):
        scene = build_model('minkowski', 4, flow='rotating', flow_params={'omega': 0.5})
        points = np.array([[0.0, 1.0, 0.2, 0.0], [0.0, 3.0, 0.0, 0.0], [0.1, 0.8, 0.3, 0.1]])
        report = herglotz_noether_report(scene, points)
        assert [e['index'] for e in report.excluded] == [1]
        assert [p.index for p in report.points] == [0, 2]
        assert report.conclusion == THEOREM_INSTANTIATED

    def test_no_usable_points(self):
        scene = build_model('minkowski', 4, flow='rotating', flow_params={'omega': 0.5})
        report = herglotz_noether_report(scene, np.array([[0.0, 3.0, 0.0, 0.0]]))
        assert report.conclusion == HYPOTHESIS_UNMET
        assert report.homogeneity is None

    def test_empty_plan(self):
        scene = build_model('minkowski', 4)
        with pytest.raises(SchemaError):
            herglotz_noether_report(scene, np.zeros((0, 4)))

    def test_conclusion_table(self):
        good = Verdict("c", 0.0, [0.0], 1e-6)
        bad = Verdict("c", 1.0, [0.0], 1e-6)
        assert decide_conclusion(good, True, True, good) == THEOREM_INSTANTIATED
        assert decide_conclusion(good, True, True, bad) == COUNTEREXAMPLE_CANDIDATE
        assert decide_conclusion(bad, True, True, bad) == HYPOTHESIS_UNMET
        assert decide_conclusion(good, False, True, bad) == HYPOTHESIS_UNMET
        assert decide_conclusion(good, True, False, bad) == HYPOTHESIS_UNMET
        assert decide_conclusion(None, True, True, good) == HYPOTHESIS_UNMET

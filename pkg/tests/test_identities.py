import numpy as np
import pytest

from src.analysis.sampling import SamplePlan
from src.frames.adapted_frame import FrameField
from src.identities import (
    IDENTITIES, SUITES, AccelerationGradientIdentity, build_identities,
    check_acceleration_gradient, check_base_curvature, check_first_structural,
    check_lambda_relation, check_mixed_curvature, check_sectional_defect,
    check_spatial_lie_derivative, check_vorticity_transport, identity_forms,
    run_identity_suite, sectional_defect,
)
from src.models.catalog import build_model
from src.utils.config import DEFAULT_TOLERANCES
from src.utils.errors import HypothesisUnmet, ModeUnavailable

TOL = DEFAULT_TOLERANCES.identity


def points_for(scene, count=5, seed=9):
    lower, upper = scene.domain
    return SamplePlan('random', count, lower, upper, seed).points()


UNIVERSAL = [check_first_structural, check_spatial_lie_derivative, check_base_curvature,
             check_acceleration_gradient]


class TestSuites:
    @pytest.mark.parametrize("name,n", [
        ('minkowski', 4), ('minkowski', 5), ('de_sitter', 4), ('anti_de_sitter', 4),
    ])
    def test_rotating_flows_pass_everything(self, name, n):
        scene = build_model(name, n, flow='rotating', flow_params={'omega': 0.4})
        outcome = run_identity_suite(scene, points_for(scene), 'all')
        assert not outcome.skipped
        assert not outcome.excluded
        verdicts = outcome.verdicts(TOL)
        assert [v.criterion for v in verdicts] == list(SUITES['all'])
        assert outcome.all_passed(TOL), [v.to_dict() for v in verdicts if not v.passed]

    @pytest.mark.parametrize("name,flow", [
        ('minkowski', 'milne'),
        ('minkowski', 'perturbed_rotating'),
        ('minkowski', 'helical'),
        ('fermi_rigid', 'fermi_rigid'),
        ('einstein_static', 'rotating'),
    ])
    def test_universal_identities(self, name, flow):
        scene = build_model(name, 4, flow=flow)
        for point in points_for(scene, 3):
            field = FrameField(scene, point)
            for check in UNIVERSAL:
                result = check(scene, point, field=field)
                assert result.passed(TOL), result.to_dict()

    def test_structural_suite_only(self):
        scene = build_model('minkowski', 4, flow='milne')
        outcome = run_identity_suite(scene, points_for(scene, 3), 'structural')
        assert {r.name for r in outcome.results} == set(SUITES['structural'])
        assert len(outcome.to_frame()) == len(outcome.results)

    def test_einstein_static_skips_homogeneous_checks(self):
        scene = build_model('einstein_static', 4, flow='rotating')
        outcome = run_identity_suite(scene, points_for(scene, 2), 'curvature')
        assert {s.identity for s in outcome.skipped} == {'sectional-defect', 'mixed-curvature'}
        assert [v.criterion for v in outcome.verdicts(TOL)] == ['base-curvature']

    def test_unusable_points_are_excluded(self):
        scene = build_model('minkowski', 4, flow='rotating', flow_params={'omega': 0.5})
        outcome = run_identity_suite(scene, [[0.0, 1.0, 0.3, 0.0], [0.0, 3.0, 0.0, 0.0]],
                                     'derivatives')
        assert [e['index'] for e in outcome.excluded] == [1]
        assert len(outcome.results) == 2

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            build_identities('everything')

    def test_every_identity_has_a_form(self):
        forms = identity_forms()
        assert set(forms) == set(IDENTITIES) == set(SUITES['all'])
        assert all(forms.values())


class TestAccelerationGradient:
    def test_flat_mode_on_minkowski(self):
        scene = build_model('minkowski', 4, flow='rotating')
        result = check_acceleration_gradient(scene, [0.0, 1.0, 0.2, 0.1], mode='flat')
        assert 'R^0_{i0j}' not in result.terms
        assert result.passed(TOL)

    def test_flat_mode_refuses_curved_points(self):
        scene = build_model('de_sitter', 4, flow='rotating')
        with pytest.raises(ModeUnavailable):
            check_acceleration_gradient(scene, points_for(scene, 1)[0], mode='flat')

    def test_auto_mode_uses_curvature(self):
        scene = build_model('de_sitter', 4, flow='rotating')
        point = points_for(scene, 1)[0]
        auto = check_acceleration_gradient(scene, point, mode='auto')
        general = check_acceleration_gradient(scene, point, mode='general')
        assert 'R^0_{i0j}' in auto.terms
        assert auto.residual == general.residual
        assert auto.passed(TOL)

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            AccelerationGradientIdentity(mode='curved')


class TestCurvatureIdentities:
    def test_sectional_defect_on_rotating_disk(self):
        scene = build_model('minkowski', 4, flow='rotating', flow_params={'omega': 0.5})
        field = FrameField(scene, [0.0, 1.0, 0.0, 0.0])
        defect = sectional_defect(field)
        assert np.all(np.diag(defect) == 0.0)
        assert np.max(np.abs(defect)) == pytest.approx(4.0 / 3.0, abs=1e-6)
        assert check_sectional_defect(scene, field.point, field=field).passed(TOL)

    def test_sectional_defect_needs_rigid_flow(self):
        scene = build_model('minkowski', 4, flow='milne')
        with pytest.raises(HypothesisUnmet):
            check_sectional_defect(scene, points_for(scene, 1)[0])

    def test_homogeneous_checks_need_constant_curvature(self):
        scene = build_model('einstein_static', 4, flow='rotating')
        point = points_for(scene, 1)[0]
        with pytest.raises(HypothesisUnmet):
            check_mixed_curvature(scene, point)
        with pytest.raises(HypothesisUnmet):
            check_sectional_defect(scene, point, kappa=1.0)

    def test_explicit_kappa_overrides_scene(self):
        scene = build_model('anti_de_sitter', 4, flow='rotating')
        point = points_for(scene, 1)[0]
        assert check_mixed_curvature(scene, point, kappa=-1.0).passed(TOL)
        with pytest.raises(HypothesisUnmet):
            check_mixed_curvature(scene, point, kappa=0.0)


class TestIdentityResults:
    def test_terms_sum_to_components(self):
        scene = build_model('de_sitter', 4, flow='rotating')
        result = check_base_curvature(scene, points_for(scene, 1)[0])
        total = sum(result.terms.values())
        np.testing.assert_array_equal(result.components, total)
        assert result.residual == pytest.approx(np.max(np.abs(total)) / result.scale)
        assert set(result.details) == set(result.terms)
        assert result.scale == 1.0 + max(result.details.values())

    def test_to_dict(self):
        scene = build_model('minkowski', 4, flow='rotating')
        data = check_vorticity_transport(scene, [0.0, 1.0, 0.5, 0.0]).to_dict()
        assert data['identity'] == 'vorticity-transport'
        assert data['asserted'] is True
        assert list(data['details']) == sorted(data['details'])

    def test_lambda_relation_on_killing_flow(self):
        scene = build_model('fermi_rigid', 4, params={'a0': 0.3, 'a1': 0.0})
        result = check_lambda_relation(scene, points_for(scene, 1)[0])
        assert result.asserted
        assert result.passed(TOL)

    def test_lambda_relation_is_diagnostic_off_killing(self):
        scene = build_model('fermi_rigid', 4, params={'a0': 0.3, 'a1': 0.1})
        result = check_lambda_relation(scene, points_for(scene, 1)[0])
        assert not result.asserted

    def test_spatial_lie_derivative_sees_expansion(self):
        scene = build_model('minkowski', 4, flow='milne')
        result = check_spatial_lie_derivative(scene, [1.6, 0.2, 0.0, 0.0])
        assert result.details['L_V h'] == pytest.approx(2.0, abs=1e-9)
        assert result.details['-lambda*(M+M^T)'] == pytest.approx(2.0, abs=1e-9)
        assert result.passed(TOL)


CORPUS_SCENES = ([('minkowski', n, {}) for n in (3, 4, 5, 6)]
                 + [('constant_curvature', n, {'k': k}) for k in (1.0, -1.0) for n in (4, 5)]
                 + [('einstein_static', 4, {})])
CORPUS_FLOWS = [('static', {}), ('rotating', {'omega': 0.3}), ('rotating', {'omega': 0.5})]


class TestCatalogCorpus:
    @pytest.mark.parametrize("name,n,params", CORPUS_SCENES)
    @pytest.mark.parametrize("flow,flow_params", CORPUS_FLOWS)
    def test_all_identities_hold(self, name, n, params, flow, flow_params):
        scene = build_model(name, n, params=params, flow=flow, flow_params=flow_params)
        points = points_for(scene, 50, seed=42)
        outcome = run_identity_suite(scene, points, 'all')
        assert not outcome.excluded
        failed = [v.to_dict() for v in outcome.verdicts(1e-7) if not v.passed]
        assert not failed
        if name == 'minkowski':
            for point in points:
                result = check_acceleration_gradient(scene, point, mode='flat')
                assert result.passed(1e-7), result.to_dict()

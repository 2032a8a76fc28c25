import numpy as np
import pytest

from src.analysis.sampling import SamplePlan
from src.geometry.killing import killing_residual, killing_verdict, lie_derivative_metric
from src.geometry.metric import (
    constant_curvature_residual, curvature_at, fit_kappa, sample_metric,
)
from src.geometry.scene import Scene
from src.geometry.verdict import Verdict
from src.models.catalog import build_model
from src.utils.errors import DegenerateMetric, ExpressionSyntaxError, SchemaError


def sample_points(scene, count=10, seed=7):
    lower, upper = scene.domain
    return SamplePlan('random', count, lower, upper, seed).points()


def minkowski_2d(**overrides):
    document = dict(
        coords=["t", "x"],
        metric=[["-1", "0"], [None, "1"]],
        flow=["1", "0"],
    )
    document.update(overrides)
    return Scene.from_texts(**document)


class TestScene:
    def test_minimal_scene(self):
        scene = minkowski_2d()
        assert scene.n == 2
        np.testing.assert_array_equal(scene.metric_value([0.0, 0.0]), np.diag([-1.0, 1.0]))
        assert scene.flow_norm([0.3, 0.1]) == -1.0

    def test_mismatched_lower_triangle(self):
        with pytest.raises(SchemaError):
            minkowski_2d(metric=[["-1", "x"], ["0", "1"]])

    def test_matching_lower_triangle_is_accepted(self):
        scene = minkowski_2d(metric=[["-1", "0.1*x"], ["0.1*x", "1"]])
        g = scene.metric_value([0.0, 2.0])
        assert g[0, 1] == g[1, 0] == pytest.approx(0.2)

    def test_flow_of_wrong_length(self):
        with pytest.raises(SchemaError):
            minkowski_2d(flow=["1"])

    def test_parameter_clash(self):
        with pytest.raises(SchemaError):
            minkowski_2d(params={"x": 1.0})

    def test_syntax_error_names_component(self):
        with pytest.raises(ExpressionSyntaxError) as info:
            minkowski_2d(metric=[["-1", "0"], [None, "1 +"]])
        assert info.value.component == (1, 1)

    def test_metric_jet_layout(self):
        scene = build_model('einstein_static', 4)
        point = sample_points(scene, 1)[0]
        jet = scene.metric_jet(point)
        assert jet.value.shape == (4, 4)
        assert jet.gradient.shape == (4, 4, 4)
        assert jet.hessian.shape == (4, 4, 4, 4)
        np.testing.assert_array_equal(jet.value, jet.value.T)


class TestMetricSamples:
    def test_inverse_and_determinant(self):
        scene = build_model('de_sitter', 4)
        ms = sample_metric(scene, sample_points(scene, 1)[0])
        np.testing.assert_allclose(ms.g @ ms.g_inv, np.eye(4), atol=1e-12)
        assert ms.det == pytest.approx(np.linalg.det(ms.g), rel=1e-10)

    def test_degenerate_metric(self):
        scene = minkowski_2d(metric=[["0", "0"], [None, "1"]])
        with pytest.raises(DegenerateMetric):
            sample_metric(scene, [0.0, 0.0])

    def test_minkowski_is_flat(self):
        scene = build_model('minkowski', 4)
        _, cs, rs = curvature_at(scene, [0.1, 0.2, 0.3, 0.4])
        assert np.max(np.abs(cs.gamma)) == 0.0
        assert np.max(np.abs(rs.R)) == 0.0

    @pytest.mark.parametrize("a1", [0.1, 0.0])
    def test_fermi_chart_is_flat(self, a1):
        scene = build_model('fermi_rigid', 4, params={'a0': 0.3, 'a1': a1})
        for point in sample_points(scene, 20):
            _, _, rs = curvature_at(scene, point)
            assert np.max(np.abs(rs.R)) < 1e-9

    @pytest.mark.parametrize("name", ['einstein_static', 'de_sitter', 'anti_de_sitter'])
    def test_riemann_symmetries(self, name):
        scene = build_model(name, 4)
        for point in sample_points(scene, 5):
            ms, _, rs = curvature_at(scene, point)
            R = rs.lowered(ms)
            scale = 1.0 + np.max(np.abs(R))
            assert np.max(np.abs(R + np.swapaxes(R, 0, 1))) < 1e-9 * scale
            assert np.max(np.abs(R + np.swapaxes(R, 2, 3))) < 1e-9 * scale
            assert np.max(np.abs(R - np.einsum('abcd->cdab', R))) < 1e-9 * scale
            bianchi = R + np.einsum('abcd->acdb', R) + np.einsum('abcd->adbc', R)
            assert np.max(np.abs(bianchi)) < 1e-9 * scale


class TestConstantCurvature:
    @pytest.mark.parametrize("name,n,kappa", [
        ('de_sitter', 4, 1.0),
        ('anti_de_sitter', 4, -1.0),
        ('anti_de_sitter', 5, -1.0),
        ('minkowski', 3, 0.0),
    ])
    def test_declared_kappa_holds(self, name, n, kappa):
        scene = build_model(name, n)
        assert scene.model_kappa == kappa
        for point in sample_points(scene, 20):
            ms, _, rs = curvature_at(scene, point)
            assert constant_curvature_residual(rs, ms, kappa) < 1e-8

    def test_wrong_kappa_fails(self):
        scene = build_model('minkowski', 4)
        ms, _, rs = curvature_at(scene, [0.0, 0.3, 0.2, 0.1])
        assert constant_curvature_residual(rs, ms, 1.0) > 0.5

    def test_fit_recovers_kappa(self):
        scene = build_model('constant_curvature', 4, params={'k': -0.5})
        samples = [curvature_at(scene, p) for p in sample_points(scene, 4)]
        kappa = fit_kappa([(rs, ms) for ms, _, rs in samples])
        assert kappa == pytest.approx(-0.5, abs=1e-9)

    def test_einstein_static_is_not_constant_curvature(self):
        scene = build_model('einstein_static', 4)
        samples = [curvature_at(scene, p) for p in sample_points(scene, 4)]
        pairs = [(rs, ms) for ms, _, rs in samples]
        kappa = fit_kappa(pairs)
        assert max(constant_curvature_residual(rs, ms, kappa) for rs, ms in pairs) > 1e-3


class TestKilling:
    def test_static_minkowski(self):
        scene = build_model('minkowski', 4)
        assert np.max(np.abs(lie_derivative_metric(scene, [0.0, 0.5, 0.5, 0.5]))) == 0.0
        assert killing_verdict(scene, sample_points(scene)).passed

    @pytest.mark.parametrize("name", ['minkowski', 'de_sitter', 'anti_de_sitter',
                                      'einstein_static'])
    def test_rotation_is_killing(self, name):
        scene = build_model(name, 4, flow='rotating', flow_params={'omega': 0.5})
        verdict = killing_verdict(scene, sample_points(scene, 20), 1e-6)
        assert verdict.passed

    def test_fermi_flow_is_not_killing(self):
        scene = build_model('fermi_rigid', 4, params={'a0': 0.3, 'a1': 0.1})
        verdict = killing_verdict(scene, sample_points(scene, 20), 1e-6)
        assert not verdict.passed
        assert verdict.worst_residual > 1e-3

    def test_milne_is_not_killing(self):
        scene = build_model('minkowski', 4, flow='milne')
        assert killing_residual(scene, [1.8, 0.3, 0.0, 0.0]) > 0.1

    def test_empty_sample_set(self):
        with pytest.raises(SchemaError) as info:
            killing_verdict(build_model('minkowski', 4), [])
        assert info.value.field == 'points'


class TestVerdict:
    def test_max_reduction(self):
        verdict = Verdict.from_residuals("c", [1e-9, 3e-7, 2e-8], [[0], [1], [2]], 1e-6)
        assert verdict.passed
        assert verdict.worst_point == [1.0]
        assert verdict.worst_residual == 3e-7
        assert Verdict.from_dict(verdict.to_dict()) == verdict

    def test_boundary_fails(self):
        assert not Verdict.from_residuals("c", [1e-6], [[0.0]], 1e-6).passed

    def test_empty_residuals(self):
        with pytest.raises(SchemaError):
            Verdict.from_residuals("c", [], [], 1e-6)

"""Identities that hold for any flow: the first structure equation, the
variation of lambda and the Lie derivative of the projected metric."""
from typing import Dict, Optional, Sequence

import numpy as np

from ..expressions.jets import contract
from ..frames.adapted_frame import FrameField
from ..geometry.killing import killing_residual
from ..geometry.scene import Scene
from ..utils.config import Tolerances
from .base_identity import BaseIdentity, IdentityResult


class FirstStructuralIdentity(BaseIdentity):
    """d omega^mu = omega^nu ^ omega^mu_nu, on coordinate 2-planes."""

    name = "first-structural"
    form = "d(omega^mu) = omega^nu ^ omega^mu_nu"

    def terms(self, field: FrameField) -> Dict[str, np.ndarray]:
        W = field.coframe
        grad = field.coframe_jet.gradient  # [mu, alpha, beta] = d_beta W^mu_alpha
        d_coframe = np.swapaxes(grad, 1, 2) - grad
        # omega^mu_nu as coordinate 1-forms: [mu, nu, alpha]
        connection = np.einsum('mnr,ra->mna', field.sample.gamma_hat, W)
        wedge = (np.einsum('na,mnb->mab', W, connection)
                 - np.einsum('nb,mna->mab', W, connection))
        return {'d_coframe': d_coframe, '-coframe^connection': -wedge}


class LambdaRelationIdentity(BaseIdentity):
    """I_0(lambda) = 0 and I_i(lambda) = lambda K_i, asserted on Killing flows only."""

    name = "lambda-relation"
    form = "I_0(lambda) = 0, I_i(lambda) = lambda K_i"

    def terms(self, field: FrameField) -> Dict[str, np.ndarray]:
        fs = field.sample
        return {
            'I(lambda)': field.lambda_derivatives,
            '-lambda*K': np.concatenate([[0.0], -fs.lam * fs.K]),
        }

    def is_asserted(self, field: FrameField) -> bool:
        return killing_residual(field.scene, field.point) < self.tolerances.verdict


class SpatialLieDerivativeIdentity(BaseIdentity):
    """(L_V h)(I_i, I_j) = lambda (M_ij + M_ji) for the projected metric h = g + u u."""

    name = "spatial-lie-derivative"
    form = "(L_V h)(I_i, I_j) = lambda (M_ij + M_ji), h = g + u (x) u"

    def terms(self, field: FrameField) -> Dict[str, np.ndarray]:
        u_low = contract('ab,b->a', field.g_jet, field.frame_jet[:, 0])
        h = field.g_jet + contract('a,b->ab', u_low, u_low)
        v, dv = field.v_jet.value, field.v_jet.gradient  # dv[r, m] = d_m V^r
        twist = np.einsum('rn,rm->mn', h.value, dv)
        lie = np.einsum('r,mnr->mn', v, h.gradient) + twist + twist.T
        spatial = field.frame[:, 1:]
        fs = field.sample
        return {
            'L_V h': spatial.T @ lie @ spatial,
            '-lambda*(M+M^T)': -fs.lam * (fs.M + fs.M.T),
        }


def check_first_structural(scene: Scene, point: Sequence[float],
                           field: Optional[FrameField] = None,
                           tolerances: Optional[Tolerances] = None) -> IdentityResult:
    return FirstStructuralIdentity(tolerances).check(scene, point, field)


def check_lambda_relation(scene: Scene, point: Sequence[float],
                          field: Optional[FrameField] = None,
                          tolerances: Optional[Tolerances] = None) -> IdentityResult:
    return LambdaRelationIdentity(tolerances).check(scene, point, field)


def check_spatial_lie_derivative(scene: Scene, point: Sequence[float],
                                 field: Optional[FrameField] = None,
                                 tolerances: Optional[Tolerances] = None) -> IdentityResult:
    return SpatialLieDerivativeIdentity(tolerances).check(scene, point, field)

import numpy as np

from squeezelink.gaussian import P1, P2, X1, X2, product_covariance
from squeezelink.models import MeasurementModel


class JointPhaseSpace(MeasurementModel, name='joint'):
    """
    Ideal receiver reading x1, p1, x2, p2 of every copy at once.
    """
    aliases = ('joint-phase-space',)
    description = "all four quadratures of every copy"

    def per_copy_variance(self, v2):
        m = self.measured_covariance(v2)
        xx, pp = (X1, X2), (P1, P2)
        return (product_covariance(m, xx, xx)
                + product_covariance(m, pp, pp)
                - 2 * product_covariance(m, xx, pp))

    def estimate(self, samples):
        products = (samples[..., X1] * samples[..., X2]
                    - samples[..., P1] * samples[..., P2])
        return np.mean(products, axis=-1)

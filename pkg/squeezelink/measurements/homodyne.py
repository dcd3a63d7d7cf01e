import numpy as np

from squeezelink.gaussian import P1, P2, X1, X2, product_covariance
from squeezelink.models import MeasurementModel


class AlternatingHomodyne(MeasurementModel, name='alt-homodyne'):
    """
    Double homodyne detection switching basis from copy to copy: copies
    1, 3, 5… give x1·x2, copies 2, 4, 6… give p1·p2. Each product is
    estimated from half the copies, hence twice the per-copy variance.
    """
    aliases = ('alternating-homodyne',)
    description = "x on odd copies, p on even copies"
    copies_multiple = 2

    def per_copy_variance(self, v2):
        m = self.measured_covariance(v2)
        xx, pp = (X1, X2), (P1, P2)
        return 2 * (product_covariance(m, xx, xx)
                    + product_covariance(m, pp, pp))

    def estimate(self, samples):
        x_copies = samples[..., 0::2, :]
        p_copies = samples[..., 1::2, :]
        return (np.mean(x_copies[..., X1] * x_copies[..., X2], axis=-1)
                - np.mean(p_copies[..., P1] * p_copies[..., P2], axis=-1))

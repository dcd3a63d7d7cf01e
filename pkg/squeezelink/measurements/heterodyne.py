import numpy as np

from squeezelink.gaussian import VACUUM_VARIANCE
from squeezelink.measurements.joint import JointPhaseSpace


class Heterodyne(JointPhaseSpace, name='heterodyne'):
    """
    Simultaneous x and p on each output; the joint measurement costs one
    extra vacuum unit per quadrature.
    """
    aliases = ()
    description = "simultaneous x, p with one added vacuum unit"

    def measured_covariance(self, v2):
        return v2.matrix + VACUUM_VARIANCE * np.eye(4)

import math
import warnings
from typing import Dict, Optional, Tuple, Type

import numpy as np

from squeezelink.gaussian import CovMat2, DomainError


class MetaModel(type):
    """Metaclass to customize MeasurementModel subclasses __repr__()"""

    def __repr__(self):
        return "<{realname}{name}>".format(
            realname=self.__name__,
            name=f' “{self.name}”' if self.__name__ != self.name else '')


class MeasurementModel(metaclass=MetaModel):
    """
    Abstract receiver for the correlation observable x1·x2 − p1·p2.

    A model says which covariance its outcomes are drawn from, how one
    estimate is formed from M copies, and how noisy a single copy is.
    Subclass and define the relevant attributes and methods; subclasses
    register themselves under ``name`` (lowercased).
    """
    _registry: Dict[str, Type['MeasurementModel']] = {}
    name: Optional[str] = None
    aliases: Tuple[str, ...] = ()
    description: str = ''
    # copy counts must be a multiple of this
    copies_multiple: int = 1

    def __init_subclass__(cls, register=True, name=None, **kwargs):
        super().__init_subclass__(**kwargs)
        cls.name = name or cls.__name__

        if not register:
            return

        registry_name = cls.name.lower()
        if registry_name in cls._registry:
            full_name = lambda c: f"{c.__module__}.{c.__qualname__}"
            warnings.warn(f"Model registry: name '{registry_name}' for "
                          f"{full_name(cls)} overwrites "
                          f"{full_name(MeasurementModel._registry[registry_name])}")

        cls._registry[registry_name] = cls

    def __repr__(self):
        return f"<{type(self).__name__} “{self.name}”>"

    def measured_covariance(self, v2: CovMat2) -> np.ndarray:
        """Covariance of the recorded outcomes."""
        return v2.matrix

    def per_copy_variance(self, v2: CovMat2) -> float:
        raise NotImplementedError()

    def estimate(self, samples: np.ndarray) -> np.ndarray:
        """
        Reduce outcomes of shape (..., M, 4) to estimates of shape (...).
        """
        raise NotImplementedError()

    def check_copies(self, m: int):
        if m < 1 or m % self.copies_multiple:
            multiple = (f" and a multiple of {self.copies_multiple}"
                        if self.copies_multiple > 1 else "")
            raise DomainError(
                f"{self.name}: copy count must be ≥ 1{multiple}, got {m}")

    def round_copies(self, m: float) -> int:
        """Smallest admissible copy count ≥ m."""
        k = self.copies_multiple
        return max(k, k * math.ceil(m / k))

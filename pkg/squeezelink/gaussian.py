"""
Zero-mean Gaussian states of one and two bosonic modes.

States are stored as quadrature covariance matrices with the convention
x = (a + a†)/√2, p = (a − a†)/(i√2): the vacuum has variance 1/2 in each
quadrature. Two-mode matrices are ordered (x1, p1, x2, p2).

Every value is immutable once built and validated on construction, so an
unphysical matrix can never travel further than the operation that made it.
"""

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np
import scipy.linalg

VACUUM_VARIANCE = 0.5
PHYSICALITY_TOL = 1e-9
SYMMETRY_TOL = 1e-12
EIG_RTOL = 64 * np.finfo(float).eps

# quadrature indices in a two-mode covariance matrix
X1, P1, X2, P2 = range(4)


class DomainError(ValueError):
    """A parameter lies outside the domain of the operation."""


class UnphysicalStateError(DomainError):
    pass


class UnsupportedConfigurationError(DomainError):
    pass


def _check_finite(name, value):
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")


def symplectic_form(modes: int) -> np.ndarray:
    return scipy.linalg.block_diag(*[np.array([[0., 1.], [-1., 0.]])] * modes)


def symplectic_eigenvalues(v: Union['CovMat1', 'CovMat2', np.ndarray]
                           ) -> List[float]:
    """
    Symplectic spectrum of a covariance matrix, one value per mode.

    The moduli of the eigenvalues of i·Ω·V come in equal pairs; a state is
    physical iff every value is ≥ 1/2.
    """
    m = v.matrix if isinstance(v, (CovMat1, CovMat2)) else np.asarray(
        v, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2:
        raise DomainError(f"expected a 2n×2n matrix, got shape {m.shape}")
    modes = m.shape[0] // 2
    moduli = np.sort(np.abs(np.linalg.eigvals(1j * symplectic_form(modes) @ m)))
    return [float(nu) for nu in moduli[::2]]


@dataclass(frozen=True)
class CovMat1:
    """Single-mode covariance matrix [[vxx, vxp], [vxp, vpp]]."""
    vxx: float
    vpp: float
    vxp: float = 0.0

    def __post_init__(self):
        for name in ('vxx', 'vpp', 'vxp'):
            object.__setattr__(self, name, float(getattr(self, name)))
            _check_finite(name, getattr(self, name))
        if self.vxx <= 0 or self.vpp <= 0:
            raise UnphysicalStateError(
                f"quadrature variances must be positive, got "
                f"vxx={self.vxx!r}, vpp={self.vpp!r}")
        if self.determinant < (VACUUM_VARIANCE - PHYSICALITY_TOL) ** 2:
            raise UnphysicalStateError(
                f"symplectic eigenvalue {self.symplectic_eigenvalue:.12g} "
                f"is below the vacuum bound {VACUUM_VARIANCE}")

    @classmethod
    def vacuum(cls) -> 'CovMat1':
        return cls(VACUUM_VARIANCE, VACUUM_VARIANCE)

    @property
    def determinant(self) -> float:
        return self.vxx * self.vpp - self.vxp ** 2

    @property
    def symplectic_eigenvalue(self) -> float:
        return math.sqrt(max(self.determinant, 0.0))

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.vxx, self.vxp], [self.vxp, self.vpp]])


@dataclass(frozen=True, eq=False)
class CovMat2:
    """Two-mode covariance matrix over (x1, p1, x2, p2)."""
    m: np.ndarray

    def __post_init__(self):
        m = np.array(self.m, dtype=float)
        if m.shape != (4, 4):
            raise DomainError(f"expected a 4×4 matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise DomainError("covariance matrix has non-finite entries")
        scale = max(float(np.max(np.abs(m))), 1.0)
        if np.max(np.abs(m - m.T)) > SYMMETRY_TOL * scale:
            raise DomainError("covariance matrix is not symmetric")
        m = (m + m.T) / 2
        m.setflags(write=False)
        object.__setattr__(self, 'm', m)
        nus = symplectic_eigenvalues(m)
        # eigenvalue error grows with the matrix norm
        tol = max(PHYSICALITY_TOL, EIG_RTOL * scale)
        if min(nus) < VACUUM_VARIANCE - tol:
            raise UnphysicalStateError(
                f"symplectic eigenvalues {nus} violate the vacuum bound")

    @classmethod
    def vacuum(cls) -> 'CovMat2':
        return cls(VACUUM_VARIANCE * np.eye(4))

    @property
    def matrix(self) -> np.ndarray:
        return self.m

    def mode(self, index: int) -> CovMat1:
        """Reduced state of mode 0 or 1."""
        i = 2 * index
        return CovMat1(self.m[i, i], self.m[i + 1, i + 1], self.m[i, i + 1])

    def with_vacuum_noise(self) -> 'CovMat2':
        """The same state with one vacuum unit added to every quadrature."""
        return CovMat2(self.m + VACUUM_VARIANCE * np.eye(4))

    def __eq__(self, other):
        if not isinstance(other, CovMat2):
            return NotImplemented
        return bool(np.array_equal(self.m, other.m))

    def __hash__(self):
        return hash(self.m.tobytes())


def product_covariance(m: np.ndarray, first: Tuple[int, int],
                       second: Tuple[int, int]) -> float:
    """
    Cov(u·v, w·z) for zero-mean jointly Gaussian quadratures, by Isserlis:
    ⟨uw⟩⟨vz⟩ + ⟨uz⟩⟨vw⟩. With first == second this is Var(u·v).
    """
    (u, v), (w, z) = first, second
    return float(m[u, w] * m[v, z] + m[u, z] * m[v, w])


_SQUEEZE_FACTORS = {
    'standard': lambda r: math.exp(-2 * r),
    'paper': lambda r: math.exp(-4 * r),
    'decibel': lambda db: 10 ** (-db / 10),
    'variance-factor': lambda s: s,
}

SQUEEZE_CONVENTION_ALIASES = {
    'db': 'decibel',
    'factor': 'variance-factor',
}


def squeeze_conventions() -> Sequence[str]:
    return (*_SQUEEZE_FACTORS, *SQUEEZE_CONVENTION_ALIASES)


@dataclass(frozen=True)
class SqueezeSpec:
    """
    A squeezing magnitude together with the convention that turns it into
    a quadrature variance factor s (squeezed variance = s × original).

    ``paper`` scales variances by e^(∓4r), the pairing under which
    r = 0.576 is 10 dB; ``standard`` is the usual e^(∓2r).
    """
    value: float
    convention: str = 'paper'

    def __post_init__(self):
        convention = SQUEEZE_CONVENTION_ALIASES.get(
            self.convention, self.convention)
        if convention not in _SQUEEZE_FACTORS:
            raise DomainError(
                f"unknown squeezing convention {self.convention!r}, expected "
                f"one of {', '.join(squeeze_conventions())}")
        object.__setattr__(self, 'convention', convention)
        object.__setattr__(self, 'value', float(self.value))
        _check_finite('squeezing', self.value)
        if self.value < 0:
            raise DomainError(f"squeezing must be ≥ 0, got {self.value!r}")
        if convention == 'variance-factor' and not 0 < self.value <= 1:
            raise DomainError(
                f"variance factor must lie in (0, 1], got {self.value!r}")

    @property
    def factor(self) -> float:
        return squeeze_factor(self)

    @property
    def decibels(self) -> float:
        return -10 * math.log10(self.factor)


@dataclass(frozen=True)
class ThermalOccupation:
    nbar: float

    def __post_init__(self):
        object.__setattr__(self, 'nbar', float(self.nbar))
        _check_finite('nbar', self.nbar)
        if self.nbar < 0:
            raise DomainError(
                f"mean photon number must be ≥ 0, got {self.nbar!r}")


def make_thermal(nbar: Union[ThermalOccupation, float]) -> CovMat1:
    if not isinstance(nbar, ThermalOccupation):
        nbar = ThermalOccupation(nbar)
    v = nbar.nbar + VACUUM_VARIANCE
    return CovMat1(v, v)


def squeeze_factor(spec: SqueezeSpec) -> float:
    return _SQUEEZE_FACTORS[spec.convention](spec.value)


def apply_squeeze(v: CovMat1, spec: Union[SqueezeSpec, float]) -> CovMat1:
    """
    Squeeze x and anti-squeeze p by the variance factor of ``spec``.

    A bare float is read as the variance factor itself.
    """
    if not isinstance(spec, SqueezeSpec):
        spec = SqueezeSpec(spec, 'variance-factor')
    if v.vxp != 0:
        raise UnsupportedConfigurationError(
            "squeezing is phase-aligned with the x/p axes; the input state "
            "has a non-zero x–p covariance")
    s = spec.factor
    return CovMat1(v.vxx * s, v.vpp / s)


def apply_loss(v: CovMat1, eta: float) -> CovMat1:
    """Mix the state with vacuum at intensity transmittance ``eta``."""
    eta = float(eta)
    if not 0 <= eta <= 1:
        raise DomainError(f"transmittance must lie in [0, 1], got {eta!r}")
    vac = (1 - eta) * VACUUM_VARIANCE
    return CovMat1(eta * v.vxx + vac, eta * v.vpp + vac, eta * v.vxp)


# a1 = (a + b)/√2, a2 = (a − b)/√2 acting on (xa, pa, xb, pb)
_BEAM_SPLITTER = np.array([
    [1., 0., 1., 0.],
    [0., 1., 0., 1.],
    [1., 0., -1., 0.],
    [0., 1., 0., -1.],
]) / math.sqrt(2)


def beam_splitter(va: CovMat1, vb: CovMat1 = None) -> CovMat2:
    """Combine two modes on a 50:50 beam splitter; ``vb`` defaults to vacuum."""
    if vb is None:
        vb = CovMat1.vacuum()
    for name, v in (('va', va), ('vb', vb)):
        if not isinstance(v, CovMat1):
            raise DomainError(f"{name} must be a single-mode state")
    joint = scipy.linalg.block_diag(va.matrix, vb.matrix)
    return CovMat2(_BEAM_SPLITTER @ joint @ _BEAM_SPLITTER.T)

"""Steering functionals, assemblages, and their pairing.

A steering functional is an n x m table of d x d coefficient operators
F_x^a; an assemblage is an n x m table of steered states sigma_x^a with a
setting-independent sum. The pairing <F, sigma> = Tr(sum_xa F_x^a
sigma_x^a) is the number every bound in this toolkit is about.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .clifford import CliffordFamily
from .errors import PreconditionError
from .linalg import operator_norm
from .mub import MubFamily
from .tolerances import TOLERANCES

KINDS = ("mub", "clifford", "clifford-dichotomic", "random", "custom")


def _table(arr) -> np.ndarray:
    out = np.asarray(arr, dtype=complex)
    if out.ndim != 4 or out.shape[2] != out.shape[3]:
        raise PreconditionError(
            f"expected a (settings, outcomes, d, d) table, got shape {out.shape}"
        )
    return out


def _table_hermiticity_defect(table: np.ndarray) -> float:
    return float(np.abs(table - table.conj().transpose(0, 1, 3, 2)).max(initial=0.0))


@dataclass(frozen=True)
class SteeringFunctional:
    """Coefficient table of a linear functional on assemblages.

    coefficients[x, a] is the d x d operator weighting sigma_x^a. The
    hermitian and psd flags are computed from the table, never trusted
    from callers or files.
    """

    kind: str
    coefficients: np.ndarray  # (n, m, d, d)
    hermitian: bool
    psd: bool
    seed: int | None = None

    @property
    def n(self) -> int:
        return self.coefficients.shape[0]

    @property
    def m(self) -> int:
        return self.coefficients.shape[1]

    @property
    def d(self) -> int:
        return self.coefficients.shape[2]

    @classmethod
    def from_table(cls, table, kind: str = "custom", seed: int | None = None):
        if kind not in KINDS:
            raise PreconditionError(f"unknown functional kind {kind!r}")
        table = _table(table)
        hermitian = _table_hermiticity_defect(table) <= TOLERANCES.hermiticity
        psd = False
        if hermitian:
            flat = table.reshape(-1, table.shape[2], table.shape[3])
            psd = float(np.linalg.eigvalsh(flat).min()) >= -TOLERANCES.hermiticity
        table = table.copy()
        table.setflags(write=False)
        return cls(kind=kind, coefficients=table, hermitian=hermitian, psd=psd, seed=seed)


@dataclass(frozen=True)
class AssemblageReport:
    min_eigenvalue: float
    no_signaling_deviation: float
    normalization_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return (
            self.min_eigenvalue >= -self.tolerance
            and self.no_signaling_deviation <= self.tolerance
            and self.normalization_deviation <= self.tolerance
        )


@dataclass(frozen=True)
class Assemblage:
    """Table of steered states sigma_x^a.

    Validity (positivity, a setting-independent reduced state, unit trace)
    is checked by validate()/require_valid() rather than at construction,
    so deliberately broken tables remain constructible in tests.
    """

    members: np.ndarray  # (n, m, d, d)

    @property
    def n(self) -> int:
        return self.members.shape[0]

    @property
    def m(self) -> int:
        return self.members.shape[1]

    @property
    def d(self) -> int:
        return self.members.shape[2]

    def reduced_state(self) -> np.ndarray:
        return self.members[0].sum(axis=0)

    def validate(self, tol: float = TOLERANCES.assemblage) -> AssemblageReport:
        members = _table(self.members)
        flat = members.reshape(-1, members.shape[2], members.shape[3])
        herm = (flat + flat.conj().transpose(0, 2, 1)) / 2
        min_eig = float(np.linalg.eigvalsh(herm).min())
        reduced = members.sum(axis=1)
        nosig = max(
            (operator_norm(reduced[x] - reduced[0]) for x in range(members.shape[0])),
            default=0.0,
        )
        norm_dev = abs(float(np.trace(reduced[0]).real) - 1.0)
        return AssemblageReport(
            min_eigenvalue=min_eig,
            no_signaling_deviation=nosig,
            normalization_deviation=norm_dev,
            tolerance=tol,
        )

    def require_valid(self, tol: float = TOLERANCES.assemblage) -> "Assemblage":
        report = self.validate(tol)
        if not report.passed:
            raise PreconditionError(f"invalid assemblage: {report}")
        return self


@dataclass(frozen=True)
class DichotomicFunctional:
    """n Hermitian observables F_x paired with difference assemblages
    sigma_x = sigma_x^1 - sigma_x^2."""

    observables: np.ndarray  # (n, d, d)

    @property
    def n(self) -> int:
        return self.observables.shape[0]

    @property
    def d(self) -> int:
        return self.observables.shape[1]

    def as_steering_functional(self) -> SteeringFunctional:
        """Equivalent two-outcome table: Tr(sum_x F_x (sigma_x^1 - sigma_x^2))
        equals the steering pairing of the table {F_x, -F_x}."""
        table = np.stack([np.stack([f, -f]) for f in self.observables])
        return SteeringFunctional.from_table(table, kind="clifford-dichotomic")


def mub_functional(family: MubFamily) -> SteeringFunctional:
    """Rank-1 projector table F_x^a = |phi_x^a><phi_x^a| (m = d outcomes)."""
    table = np.einsum("xai,xaj->xaij", family.bases, family.bases.conj())
    return SteeringFunctional.from_table(table, kind="mub")


def clifford_projectors(family: CliffordFamily) -> np.ndarray:
    """Spectral projectors P_x^1 = (1 + A_x)/2, P_x^2 = (1 - A_x)/2."""
    eye = np.eye(family.dimension, dtype=complex)
    return np.stack(
        [np.stack([(eye + a) / 2, (eye - a) / 2]) for a in family.observables]
    )


def clifford_functional(family: CliffordFamily) -> SteeringFunctional:
    """Two-outcome table F_x^1 = A_x/2, F_x^2 = -A_x/2 (the projector table
    shifted by -1/2)."""
    table = np.stack([np.stack([a / 2, -a / 2]) for a in family.observables])
    return SteeringFunctional.from_table(table, kind="clifford")


def dichotomic_functional(family: CliffordFamily) -> DichotomicFunctional:
    """Observable form F_x = A_x = P_x^1 - P_x^2."""
    obs = family.observables.copy()
    obs.setflags(write=False)
    return DichotomicFunctional(observables=obs)


def random_functional(d: int, seed: int) -> SteeringFunctional:
    """Random sign table in the (d, d, d) scenario.

    F_x^a places the signs eps_{x,a}^k / d in its first row and is zero
    elsewhere, so it is genuinely non-Hermitian. Signs come from numpy's
    PCG64 stream: eps = 2 * default_rng(seed).integers(0, 2, size=(d, d, d)) - 1,
    drawn in C order over (x, a, k). Identical seeds reproduce identical
    tables bit-exactly.
    """
    if d < 2:
        raise PreconditionError(f"dimension must be at least 2, got {d}")
    rng = np.random.default_rng(seed)
    eps = 2 * rng.integers(0, 2, size=(d, d, d)) - 1
    table = np.zeros((d, d, d, d), dtype=complex)
    table[:, :, 0, :] = eps / d
    return SteeringFunctional.from_table(table, kind="random", seed=seed)


def evaluate(functional: SteeringFunctional, assemblage) -> float | complex:
    """Pairing Tr(sum_xa F_x^a sigma_x^a).

    For Hermitian functionals the imaginary residue must stay below the
    evaluation tolerance and is discarded. For non-Hermitian functionals a
    residue above tolerance is returned as a complex value with a warning,
    since bounds on such functionals go through |<F, sigma>|.
    """
    members = assemblage.members if isinstance(assemblage, Assemblage) else assemblage
    members = _table(members)
    if members.shape != functional.coefficients.shape:
        raise PreconditionError(
            f"shape mismatch: functional {functional.coefficients.shape} "
            f"vs assemblage {members.shape}"
        )
    value = complex(np.einsum("xaij,xaji->", functional.coefficients, members))
    if abs(value.imag) <= TOLERANCES.evaluation_imag:
        return value.real
    if functional.hermitian:
        raise PreconditionError(
            f"imaginary residue {value.imag:.3e} of a Hermitian pairing exceeds "
            f"{TOLERANCES.evaluation_imag:.1e}; the assemblage table is not Hermitian"
        )
    warnings.warn(
        f"pairing has imaginary part {value.imag:.3e}; returning a complex value",
        RuntimeWarning,
        stacklevel=2,
    )
    return value


def canonical_quantum_assemblage(functional: SteeringFunctional) -> Assemblage:
    """The assemblage attaining the known quantum value of a structured kind.

    mub: sigma_x^a = F_x^a / d (steering a maximally entangled pair with
    the unbiased-basis measurements). clifford kinds: sigma_x^a = P_x^a / d
    with the spectral projectors of A_x. Random and custom tables have no
    canonical optimizer.
    """
    kind = functional.kind
    d = functional.d
    eye = np.eye(d, dtype=complex)
    if kind == "mub":
        members = functional.coefficients / d
    elif kind == "clifford":
        members = (functional.coefficients + eye / 2) / d
    elif kind == "clifford-dichotomic":
        members = (functional.coefficients / 2 + eye / 2) / d
    else:
        raise PreconditionError(f"no canonical quantum assemblage for kind {kind!r}")
    return Assemblage(members=members).require_valid()

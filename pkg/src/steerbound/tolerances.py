"""Numerical tolerances for every validation layer, kept in one record."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Absolute tolerances shared across the toolkit.

    hermiticity: max-norm defect before a matrix is rejected as non-Hermitian.
    spectrum: accuracy expected of the dense eigensolver, relative to the
        matrix norm.
    anticommutation: slack on anticommutator identities.
    unbiasedness: slack on basis orthonormality and cross-basis overlaps.
    assemblage: slack on positivity, no-signaling and normalization of
        steered-state tables (looser than construction tolerances to absorb
        accumulated rounding in derived tables).
    evaluation_imag: largest imaginary residue discarded when pairing a
        Hermitian functional with an assemblage.
    gram_psd: slack on positive semidefiniteness of Gram matrices.
    gram_identity: slack on the frame-operator / Gram-matrix norm match.
    bound_slack: slack when asserting computed values against proven
        analytic bounds.
    seesaw_monotone: per-step decrease tolerated before the alternating
        optimizer is considered non-monotone.
    """

    hermiticity: float = 1e-10
    spectrum: float = 1e-9
    anticommutation: float = 1e-12
    unbiasedness: float = 1e-10
    assemblage: float = 1e-9
    evaluation_imag: float = 1e-9
    gram_psd: float = 1e-9
    gram_identity: float = 1e-8
    bound_slack: float = 1e-9
    seesaw_monotone: float = 1e-12


TOLERANCES = Tolerances()

import numpy as np
import pytest

from steerbound import (
    CliffordFamily,
    PreconditionError,
    build_clifford_family,
    verify_anticommutation,
)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def test_two_observables_single_qubit():
    family = build_clifford_family(2)
    assert family.qubits == 1
    assert np.array_equal(family.observables[0], SIGMA_X)
    assert np.array_equal(family.observables[1], SIGMA_Y)
    assert verify_anticommutation(family).passed


def test_three_observables_single_qubit():
    family = build_clifford_family(3)
    assert family.qubits == 1
    assert np.array_equal(family.observables[2], SIGMA_Z)


def test_five_observables_two_qubits():
    family = build_clifford_family(5)
    assert family.dimension == 4
    pairs = 0
    for x in range(5):
        for y in range(x + 1, 5):
            anti = family.observables[x] @ family.observables[y]
            anti = anti + family.observables[y] @ family.observables[x]
            assert np.abs(anti).max() <= 1e-12
            pairs += 1
    assert pairs == 10


@pytest.mark.parametrize("n", range(1, 10))
def test_built_families_verify(n):
    report = verify_anticommutation(build_clifford_family(n))
    assert report.max_deviation <= 1e-12
    assert report.passed


def test_verify_flags_repeated_observable():
    family = CliffordFamily(qubits=1, observables=np.stack([SIGMA_X, SIGMA_X]))
    report = verify_anticommutation(family)
    assert report.max_deviation == pytest.approx(2.0, abs=1e-15)
    assert not report.passed


def test_verify_single_observable_vacuous():
    family = CliffordFamily(qubits=1, observables=SIGMA_Z[None, :, :])
    assert verify_anticommutation(family).max_deviation == 0.0


def test_squared_combination_identity():
    rng = np.random.default_rng(21)
    family = build_clifford_family(7)
    eye = np.eye(family.dimension)
    for _ in range(50):
        c = rng.normal(size=family.count)
        combo = np.einsum("x,xij->ij", c, family.observables)
        assert np.abs(combo @ combo - (c @ c) * eye).max() <= 1e-10


@pytest.mark.parametrize("n", [2, 5, 8])
def test_spectrum_is_balanced_signs(n):
    family = build_clifford_family(n)
    half = family.dimension // 2
    for a in family.observables:
        vals = np.linalg.eigvalsh(a)
        assert np.allclose(vals[:half], -1, atol=1e-12)
        assert np.allclose(vals[half:], 1, atol=1e-12)


def test_full_dimension_flag():
    family = build_clifford_family(3, full_dimension=True)
    assert family.dimension == 8
    assert verify_anticommutation(family).passed


def test_full_dimension_cap():
    with pytest.raises(PreconditionError, match="8192"):
        build_clifford_family(13, full_dimension=True)


def test_compact_dimension_rule():
    # smallest m with 2m+1 >= n
    expected = {1: 2, 2: 2, 3: 2, 4: 4, 5: 4, 6: 8, 7: 8, 8: 16, 12: 64}
    for n, dim in expected.items():
        assert build_clifford_family(n).dimension == dim

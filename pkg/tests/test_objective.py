import numpy as np
import pytest
from conftest import random_rotation, random_state, random_unit

from ggqd import (
    CorrelationData,
    MeasurementDirections,
    NonUnitDirectionError,
    NotCanonicalFormError,
    StateFamilySpec,
    generate_state,
    objective_coefficients,
    objective_f,
    pauli_decompose,
    rank2_lambda_max,
    reduced_over_a,
    sphere_direction,
)

E1, E2, E3 = np.eye(3)


def bell_corr(c3):
    rho = generate_state(StateFamilySpec("bell_mixture", {"c3": c3}), allow_nonphysical=True)
    return pauli_decompose(rho)


def mixed_corr():
    return CorrelationData(x=np.zeros(3), y=np.zeros(3), T=np.zeros((3, 3)))


def random_canonical(rng, scale=0.8):
    x = np.array([rng.uniform(-scale, scale), 0.0, rng.uniform(-scale, scale)])
    y = np.array([rng.uniform(-scale, scale), 0.0, rng.uniform(-scale, scale)])
    t = np.zeros((3, 3))
    for i, j in ((0, 0), (0, 2), (1, 1), (2, 0), (2, 2)):
        t[i, j] = rng.uniform(-scale, scale)
    return CorrelationData(x=x, y=y, T=t)


def sphere_grid(n_az, n_pol):
    az = np.arange(n_az) * (2 * np.pi / n_az)
    pol = np.linspace(0.0, np.pi, n_pol)
    a, p = np.meshgrid(az, pol, indexing="ij")
    sp = np.sin(p)
    return np.stack([np.cos(a) * sp, np.sin(a) * sp, np.cos(p)], axis=-1).reshape(-1, 3)


def charpoly_lambda_max(m):
    # independent route: cubic characteristic polynomial, largest real root
    tr = float(np.trace(m))
    minors = (
        m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        + m[0, 0] * m[2, 2] - m[0, 2] * m[2, 0]
        + m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1]
    )
    det = float(np.linalg.det(m))
    return float(np.roots([1.0, -tr, float(minors), -det]).real.max())


def test_objective_mixed_is_one():
    corr = mixed_corr()
    rng = np.random.default_rng(0)
    for _ in range(10):
        assert objective_f(corr, (random_unit(rng), random_unit(rng))) == 1.0


@pytest.mark.parametrize("c3", [0.0, 0.5, 1.0, -0.9])
def test_objective_bell_reference_directions(c3):
    corr = bell_corr(c3)
    assert abs(objective_f(corr, (E3, E3)) - (1 + c3 * c3)) <= 1e-14
    # T e2 = -e2 so a.Tb = -1 and f = 2
    assert abs(objective_f(corr, (E2, E2)) - 2.0) <= 1e-14


def test_objective_non_unit_direction():
    corr = mixed_corr()
    with pytest.raises(NonUnitDirectionError):
        objective_f(corr, (np.array([1.0, 1.0, 0.0]), E3))
    with pytest.raises(NonUnitDirectionError):
        MeasurementDirections(a=E3, b=np.array([0.0, 0.0, 0.9]))


def test_measurement_directions_from_angles():
    dirs = MeasurementDirections.from_angles(0.3, 1.1, 2.0, 0.6)
    assert np.allclose(dirs.b, sphere_direction(0.3, 1.1), atol=1e-15)
    assert np.allclose(dirs.a, sphere_direction(2.0, 0.6), atol=1e-15)
    corr = bell_corr(0.4)
    assert objective_f(corr, dirs) == objective_f(corr, (dirs.a, dirs.b))


def test_coefficients_bell_at_e3():
    c3 = 0.7
    coeffs = objective_coefficients(bell_corr(c3), E3)
    assert coeffs.m12 == coeffs.m13 == coeffs.m23 == coeffs.m22 == 0.0
    assert abs(coeffs.m0 - 1.0) <= 1e-15
    assert abs(coeffs.m33 - c3 * c3) <= 1e-15
    for b in sphere_grid(8, 7):
        assert abs(coeffs.evaluate(b) - (1 + c3 * c3 * b[2] ** 2)) <= 1e-14


def test_coefficients_constant_without_correlations():
    coeffs = objective_coefficients(mixed_corr(), np.array([1.0, 0.0, 0.0]))
    for b in sphere_grid(6, 5):
        assert coeffs.evaluate(b) == 1.0


def test_coefficients_match_objective_on_grid():
    rng = np.random.default_rng(31)
    grid = sphere_grid(20, 20)
    for _ in range(25):
        corr = random_canonical(rng)
        a = random_unit(rng)
        coeffs = objective_coefficients(corr, a)
        for b in grid:
            assert abs(coeffs.evaluate(b) - objective_f(corr, (a, b))) <= 1e-10


def test_coefficients_reject_non_canonical():
    t = np.zeros((3, 3))
    t[0, 1] = 0.5
    corr = CorrelationData(x=np.zeros(3), y=np.zeros(3), T=t)
    with pytest.raises(NotCanonicalFormError, match="canonical"):
        objective_coefficients(corr, E3)


def test_rank2_rank1_case():
    rng = np.random.default_rng(1)
    v = rng.standard_normal(3)
    lam, vec = rank2_lambda_max(np.zeros(3), v)
    assert abs(lam - v @ v) <= 1e-14
    assert abs(abs(vec @ (v / np.linalg.norm(v))) - 1.0) <= 1e-12


def test_rank2_orthogonal_pair():
    u = 0.8 * E1
    v = 0.5 * E2
    lam, vec = rank2_lambda_max(u, v)
    assert abs(lam - 0.64) <= 1e-15
    assert np.allclose(np.abs(vec), E1, atol=1e-12)


def test_rank2_equal_vectors():
    u = np.array([0.3, -0.4, 0.5])
    lam, vec = rank2_lambda_max(u, u)
    assert abs(lam - 2 * (u @ u)) <= 1e-14
    assert abs(abs(vec @ (u / np.linalg.norm(u))) - 1.0) <= 1e-12


def test_rank2_degenerate_tiebreak():
    lam, vec = rank2_lambda_max(E1, E2)
    assert abs(lam - 1.0) <= 1e-15
    assert np.allclose(vec, np.array([1.0, 1.0, 0.0]) / np.sqrt(2), atol=1e-15)
    lam, vec = rank2_lambda_max(np.zeros(3), np.zeros(3))
    assert lam == 0.0
    assert np.array_equal(vec, E3)


def test_rank2_against_characteristic_polynomial():
    rng = np.random.default_rng(77)
    for _ in range(1000):
        u = rng.standard_normal(3) * rng.uniform(0.1, 2.0)
        v = rng.standard_normal(3) * rng.uniform(0.1, 2.0)
        m = np.outer(u, u) + np.outer(v, v)
        lam, vec = rank2_lambda_max(u, v)
        assert abs(lam - charpoly_lambda_max(m)) <= 1e-12
        assert abs(np.linalg.norm(vec) - 1.0) <= 1e-12
        assert np.allclose(m @ vec, lam * vec, atol=1e-10)


@pytest.mark.parametrize("c3", [0.5, 1.0])
def test_reduced_bell_reference_values(c3):
    corr = bell_corr(c3)
    g3, _ = reduced_over_a(corr, E3)
    assert abs(g3 - (1 + c3 * c3)) <= 1e-14
    g2, a2 = reduced_over_a(corr, E2)
    assert abs(g2 - 2.0) <= 1e-14
    assert abs(objective_f(corr, (a2, E2)) - 2.0) <= 1e-14


def test_reduced_mixed_is_one():
    g, _ = reduced_over_a(mixed_corr(), E1)
    assert g == 1.0


def test_reduced_dominates_objective():
    rng = np.random.default_rng(13)
    for seed in range(20):
        corr = pauli_decompose(random_state(seed))
        b = random_unit(rng)
        g, a_star = reduced_over_a(corr, b)
        assert abs(objective_f(corr, (a_star, b)) - g) <= 1e-12
        for _ in range(50):
            assert objective_f(corr, (random_unit(rng), b)) <= g + 1e-12


def test_reduced_grid_consistency():
    grid = sphere_grid(50, 50)
    rng = np.random.default_rng(2024)
    for seed in range(10):
        corr = pauli_decompose(random_state(seed))
        b = random_unit(rng)
        g, _ = reduced_over_a(corr, b)
        f = 1.0 + (corr.y @ b) ** 2 + (grid @ corr.x) ** 2 + (grid @ (corr.T @ b)) ** 2
        assert f.max() <= g + 1e-12
        assert g - f.max() <= 3e-3


def test_reduced_rotation_covariance():
    rng = np.random.default_rng(3)
    for seed in range(10):
        corr = pauli_decompose(random_state(seed))
        ra, rb = random_rotation(rng), random_rotation(rng)
        rotated = CorrelationData(x=ra @ corr.x, y=rb @ corr.y, T=ra @ corr.T @ rb.T)
        b = random_unit(rng)
        g, _ = reduced_over_a(corr, b)
        g_rot, _ = reduced_over_a(rotated, rb @ b)
        assert abs(g - g_rot) <= 1e-10


def test_objective_bounds():
    rng = np.random.default_rng(4)
    for seed in range(10):
        corr = pauli_decompose(random_state(seed))
        upper = 1.0 + corr.x @ corr.x + corr.y @ corr.y + float(np.sum(corr.T * corr.T))
        for _ in range(20):
            f = objective_f(corr, (random_unit(rng), random_unit(rng)))
            assert 1.0 <= f <= upper + 1e-12

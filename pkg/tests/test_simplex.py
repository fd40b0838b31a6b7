import numpy as np
import pytest

from fairshare.simplex import minimize_box


def test_quadratic_interior_minimum():
    res = minimize_box(lambda x: (x[0] - 0.3) ** 2 + 4 * (x[1] - 2.0) ** 2,
                       [0.9, 5.0], [0, 1], [1, 10], [0.1, 1.0])
    assert res.converged
    np.testing.assert_allclose(res.x, [0.3, 2.0], atol=1e-5)


def test_minimum_on_boundary_stays_in_box():
    seen = []

    def f(x):
        seen.append(x.copy())
        return (x[0] + 1.0) ** 2 + (x[1] - 3.0) ** 2

    res = minimize_box(f, [0.5, 1.0], [0, 1], [1, 5], [0.2, 0.5])
    assert res.x[0] == pytest.approx(0.0, abs=1e-8) and res.x[1] == pytest.approx(3.0, abs=1e-5)
    pts = np.array(seen)
    assert pts[:, 0].min() >= 0 and pts[:, 0].max() <= 1 and pts[:, 1].min() >= 1 and pts[:, 1].max() <= 5


def test_rosenbrock():
    def rosen(x):
        return 100 * (x[1] - x[0] ** 2) ** 2 + (1 - x[0]) ** 2
    res = minimize_box(rosen, [-1.2, 1.0], [-2, -2], [2, 2], [0.1, 0.1], max_iter=5000)
    np.testing.assert_allclose(res.x, [1, 1], atol=1e-4)


def test_iteration_cap_reported():
    res = minimize_box(lambda x: float(np.sum(x**2)), [0.9, 0.9], [-1, -1], [1, 1], [0.1, 0.1], max_iter=3)
    assert res.iterations == 3 and not res.converged

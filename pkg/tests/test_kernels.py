"""Both kernel backends must agree bit for bit with each other and with small hand values."""
import pytest

from latticecount import kernels


def test_backend_selection():
    assert kernels.BACKEND in kernels.backends()


def test_grid(backend):
    g = backend.delannoy_grid(3, 2)
    assert g == [[1, 1, 1], [1, 3, 5], [1, 5, 13], [1, 7, 25]]
    assert backend.delannoy_grid(0, 0) == [[1]]


@pytest.mark.parametrize("n", [0, 1, 2, 7, 60])
def test_central_routes(backend, n):
    grid = backend.central_grid(n)
    assert grid == backend.central_recurrence(n)
    assert grid == [backend.delannoy_binomial_sum(i, i) for i in range(n + 1)]
    assert grid == [backend.delannoy_grid(n, n)[i][i] for i in range(n + 1)]


def test_walk_layers(backend):
    layers = backend.walk_layers([(1, 1), (1, -1)], 4, -4, 4)
    assert layers[4] == [1, 0, 4, 0, 6, 0, 4, 0, 1]
    # level step of length 2 lands only on even times
    layers = backend.walk_layers([(2, 0)], 3, 0, 0)
    assert [layer[0] for layer in layers] == [1, 0, 1, 0]


def test_strip_absorption(backend):
    up, down, alive = backend.strip_absorption(2, 4)
    assert up == [0, 0, 1, 0, 2]
    assert down == [0, 0, 1, 0, 2]
    assert alive == 4


def test_backends_identical():
    impls = list(kernels.backends().values())
    if len(impls) < 2:
        pytest.skip("compiled backend not built")
    py, cy = kernels.python_backend, kernels.compiled_backend
    assert py.delannoy_grid(40, 33) == cy.delannoy_grid(40, 33)
    assert py.central_grid(150) == cy.central_grid(150)
    assert py.central_recurrence(150) == cy.central_recurrence(150)
    assert py.delannoy_binomial_sum(90, 71) == cy.delannoy_binomial_sum(90, 71)
    js = [(1, 2), (1, -1), (2, 0), (3, -2)]
    assert py.walk_layers(js, 30, -25, 40) == cy.walk_layers(js, 30, -25, 40)
    assert py.strip_absorption(5, 80) == cy.strip_absorption(5, 80)


def test_env_forces_python_fallback():
    import os
    import subprocess
    import sys

    env = dict(os.environ, LATTICECOUNT_PURE_PYTHON="1")
    proc = subprocess.run(
        [sys.executable, "-c", "from latticecount import kernels; print(kernels.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert proc.stdout.strip() == "python"

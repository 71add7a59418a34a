import numpy as np
import pytest

from gridstab.grid import GridSpec


def random_uniform_grid(rng, v_max=12, c=-1.0, min_loads=1):
    """Connected grid, every branch ``c j``, generator shunts ``eps c j``.

    A random spanning tree plus random chords; node count, generator count
    and the shunt factor ``eps`` are drawn from ``rng``.
    """
    v = int(rng.integers(3, v_max + 1))
    n_gen = int(rng.integers(2, v - min_loads + 1))
    order = rng.permutation(v)
    edges = set()
    for i in range(1, v):
        a, b = int(order[i]), int(order[rng.integers(0, i)])
        edges.add((min(a, b), max(a, b)))
    for _ in range(int(rng.integers(0, v))):
        a, b = sorted(int(x) for x in rng.choice(v, 2, replace=False))
        edges.add((a, b))
    eps = float(rng.uniform(0.05, 1.0))
    return GridSpec.build(n_gen, sorted(edges), n_loads=v - n_gen, admittance=complex(0, c),
                          generator_shunt=complex(0, eps * c)), eps


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)

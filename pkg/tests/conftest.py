"""Shared fixtures: the reference double barrier and a warmed marching kernel."""

import pytest
from hypothesis import settings

import siegert as sg

settings.register_profile("suite", deadline=None, max_examples=25)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def db_potential():
    return sg.double_barrier(1.0, 0.1, cutoff=20.0)


@pytest.fixture(scope="session")
def db_half_grid(db_potential):
    return sg.half_domain_grid(db_potential, 10000)


@pytest.fixture(scope="session")
def db_full_grid(db_potential):
    return sg.full_domain_grid(db_potential, 20000)


@pytest.fixture(scope="session", autouse=True)
def warm_kernel(db_potential):
    # the first march jit-compiles the RK4 kernel; keep that out of timed tests
    sg.symmetry_criterion(db_potential, 0.3, sg.half_domain_grid(db_potential, 200))


@pytest.fixture(scope="session")
def db_resonances(db_potential, db_half_grid):
    return sg.find_resonances(db_potential, 0.1, 2.0, grid=db_half_grid)

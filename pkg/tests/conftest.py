"""Shared fixtures: the torus example pipeline and randomized closures."""

import random

import pytest

from ghcomplex import (extract_biorder, generate, gh_complex,
                       nambooripad_complex)
from ghcomplex.errors import CapExceeded
from ghcomplex.partial_maps import PartialMap
from ghcomplex.repro import paper_indices, paper_semigroup
from ghcomplex.semigroups import regularity


@pytest.fixture(scope="session")
def S():
    """The 73-element closure of the published generators."""
    return paper_semigroup()


@pytest.fixture(scope="session")
def idx(S):
    return paper_indices(S)


@pytest.fixture(scope="session")
def B(S):
    return extract_biorder(S)


@pytest.fixture(scope="session")
def GH(B):
    return gh_complex(B)


@pytest.fixture(scope="session")
def K(B):
    return nambooripad_complex(B)


def pair(idx, i, j):
    """Element index of the constant map f_(Ri,Lj)."""
    return idx[f"f_R{i}_L{j}"]


# ---------------------------------------------------------------------------
# Small hand fixtures
# ---------------------------------------------------------------------------

@pytest.fixture(scope="session")
def semilattice():
    """The three-element semilattice {e, f, 0} with e, f incomparable,
    realised by two partial identity maps on disjoint domains."""
    e = PartialMap(2, (1, None))
    f = PartialMap(2, (None, 2))
    return generate([e, f])


# ---------------------------------------------------------------------------
# Seed-pinned random closures
# ---------------------------------------------------------------------------

def random_partial_map(rng, degree):
    return PartialMap(degree, tuple(
        rng.choice([None] + list(range(1, degree + 1)))
        for _ in range(degree)))


def random_closures(seed, count, cap=300, require_regular=True,
                    max_attempts=10_000):
    """Deterministic stream of random closures of partial maps."""
    rng = random.Random(seed)
    out = []
    for _ in range(max_attempts):
        if len(out) >= count:
            break
        degree = rng.randint(3, 4)
        gens = [random_partial_map(rng, degree)
                for _ in range(rng.randint(2, 3))]
        try:
            closure = generate(gens, cap=cap)
        except CapExceeded:
            continue
        if require_regular and not regularity(closure)[1]:
            continue
        out.append(closure)
    assert len(out) == count, f"only found {len(out)} closures"
    return out


@pytest.fixture(scope="session")
def regular_closures():
    """Fifty random regular closures with at most 300 elements."""
    return random_closures(seed=20260810, count=50)

import pytest

from sweedler.fields import GF, QQ
from sweedler.structures import matrix_algebra, trivial_algebra
from sweedler.zoo import (
    corpus_algebras,
    corpus_bialgebras,
    corpus_hopf_algebras,
    cyclic_group_hopf,
    idempotent_monoid_bialgebra,
    involution_algebra,
    sweedler_hopf,
)


@pytest.fixture(scope="session")
def f2():
    return GF(2)


@pytest.fixture(scope="session")
def f3():
    return GF(3)


@pytest.fixture(scope="session")
def inv_f2(f2):
    """F_2[g]/(g^2 + 1) = F_2[C_2]."""
    return involution_algebra(f2)


@pytest.fixture(scope="session")
def m2_f2(f2):
    return matrix_algebra(trivial_algebra(f2), 2)


@pytest.fixture(scope="session")
def k_f2(f2):
    return trivial_algebra(f2)


@pytest.fixture(scope="session")
def q_c2():
    return cyclic_group_hopf(QQ, 2)


@pytest.fixture(scope="session")
def sweedler4(f3):
    return sweedler_hopf(f3)


@pytest.fixture(scope="session")
def idempotent(f2):
    return idempotent_monoid_bialgebra(f2)


@pytest.fixture(scope="session")
def bialgebra_corpus():
    return corpus_bialgebras()


@pytest.fixture(scope="session")
def hopf_corpus():
    return corpus_hopf_algebras()


@pytest.fixture(scope="session")
def algebra_corpus():
    return corpus_algebras()

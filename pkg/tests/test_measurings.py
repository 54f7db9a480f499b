import itertools
import random

import pytest

from sweedler.errors import IncompatibleMeasurings, NotCommutative
from sweedler.fields import GF, QQ
from sweedler.linalg import LinMap, compose, invert, kron
from sweedler.measurings import (
    Measuring,
    compose_measuring,
    conjugate_measuring,
    enumerate_measurings,
    identity_measuring,
    intertwiners,
    is_simple,
    matrix_morphism_from_measuring,
    measuring_from_matrix_morphism,
    regular_measuring,
    restrict_measuring,
    corestrict_measuring,
    tensor_measuring_bialgebra,
    tensor_measuring_endo,
    unit_measuring,
    validate_measuring,
)
from sweedler.structures import (
    algebra_morphisms,
    general_linear_group,
    matrix_algebra,
    trivial_algebra,
)
from sweedler.zoo import cyclic_group_hopf, dual_numbers

F2 = GF(2)


# -- validation ----------------------------------------------------------------


def test_regular_measuring_is_valid(inv_f2):
    assert validate_measuring(regular_measuring(inv_f2)).ok


def test_involution_action_is_valid(inv_f2, k_f2):
    # the morphism g -> [[0,1],[1,0]] in M_2(F2); M^2 = I makes it a measuring
    images = {0: LinMap.identity(F2, 2), 1: LinMap.from_rows(F2, [[0, 1], [1, 0]])}
    entries = []
    for cell in range(4):
        for t in range(2):
            entries.append(images[t].entries[cell])
    rho = LinMap(F2, 4, 2, tuple(entries))
    m = measuring_from_matrix_morphism(rho, inv_f2, k_f2, 2)
    assert validate_measuring(m).ok


def test_zero_psi_fails_the_unit_diagram(inv_f2, k_f2):
    m = Measuring(inv_f2, k_f2, 2, LinMap.zero(F2, 2, 4))
    report = validate_measuring(m)
    assert not report.ok
    assert any(f.axiom == "measuring unit" for f in report.failures)


# -- the matrix-morphism bijection ----------------------------------------------


def test_roundtrip_on_all_enumerated_measurings(inv_f2, k_f2):
    for n in (1, 2):
        for rho in algebra_morphisms(inv_f2, matrix_algebra(k_f2, n)):
            m = measuring_from_matrix_morphism(rho, inv_f2, k_f2, n)
            assert matrix_morphism_from_measuring(m) == rho
            again = measuring_from_matrix_morphism(matrix_morphism_from_measuring(m),
                                                   inv_f2, k_f2, n)
            assert again == m


def test_unpacking_matches_direct_indexing(inv_f2, k_f2):
    unipotent = LinMap.from_rows(F2, [[1, 1], [0, 1]])
    images = {0: LinMap.identity(F2, 2), 1: unipotent}
    entries = []
    for cell in range(4):
        for t in range(2):
            entries.append(images[t].entries[cell])
    rho = LinMap(F2, 4, 2, tuple(entries))
    m = measuring_from_matrix_morphism(rho, inv_f2, k_f2, 2)
    # psi(a_t (x) x_j) = sum_i x_i (x) rho(a_t)_ij with B = k
    for t in range(2):
        for j in range(2):
            col = m.psi.col_at(t * 2 + j)
            assert col == tuple(images[t].entries[i * 2 + j] for i in range(2))


def test_empty_measuring(inv_f2, k_f2):
    m = measuring_from_matrix_morphism(LinMap.zero(F2, 0, 2), inv_f2, k_f2, 0)
    assert m.xdim == 0 and validate_measuring(m).ok


# -- enumeration and orbits -------------------------------------------------------


def test_enumerate_dimension_one(inv_f2, k_f2):
    report = enumerate_measurings(inv_f2, k_f2, 1)
    assert report.total_count == 1 and len(report.orbits) == 1


def brute_force_involutions():
    ident = LinMap.identity(F2, 2)
    return [LinMap.make(F2, 2, 2, e) for e in itertools.product(range(2), repeat=4)
            if compose(LinMap.make(F2, 2, 2, e), LinMap.make(F2, 2, 2, e)) == ident]


def test_enumerate_dimension_two_matches_brute_force(inv_f2, k_f2):
    report = enumerate_measurings(inv_f2, k_f2, 2)
    involutions = brute_force_involutions()
    assert report.total_count == len(involutions) == 4
    # oracle orbits: conjugate each involution by all of GL_2(F_2)
    gl = general_linear_group(F2, 2)
    seen = set()
    oracle_orbits = []
    for m in involutions:
        if m.entries in seen:
            continue
        orbit = {compose(compose(g, m), invert(g)).entries for g in gl}
        seen |= orbit
        oracle_orbits.append(len(orbit))
    assert sorted(size for _, size in report.orbits) == sorted(oracle_orbits) == [1, 3]


def test_enumerate_from_base_field_is_forced(k_f2, m2_f2):
    report = enumerate_measurings(k_f2, m2_f2, 2)
    assert report.total_count == 1


def test_orbit_members_are_conjugate(inv_f2, k_f2):
    report = enumerate_measurings(inv_f2, k_f2, 2)
    gl = general_linear_group(F2, 2)
    for rep, size in report.orbits:
        orbit = {conjugate_measuring(rep, g).psi.entries for g in gl}
        assert len(orbit) == size


def test_non_conjugate_reps_have_no_invertible_intertwiner(inv_f2, k_f2):
    report = enumerate_measurings(inv_f2, k_f2, 2)
    (rep1, _), (rep2, _) = report.orbits
    for iw in intertwiners(rep1, rep2):
        try:
            invert(iw.f)
            raise AssertionError("found an invertible intertwiner across orbits")
        except Exception:
            pass


# -- intertwiners ------------------------------------------------------------------


def test_identity_is_an_intertwiner(inv_f2):
    m = regular_measuring(inv_f2)
    basis = [iw.f for iw in intertwiners(m, m)]
    ident = LinMap.identity(F2, 2)
    span = _f2_span(basis)
    assert ident.entries in span


def test_schur_for_the_standard_module(m2_f2, k_f2):
    std = measuring_from_matrix_morphism(LinMap.identity(F2, 4), m2_f2, k_f2, 2)
    assert len(intertwiners(std, std)) == 1


def test_intertwiner_equation_holds_for_every_basis_vector(inv_f2, k_f2):
    report = enumerate_measurings(inv_f2, k_f2, 2)
    (rep1, _), (rep2, _) = report.orbits
    ident_a = LinMap.identity(F2, 2)
    ident_b = LinMap.identity(F2, 1)
    for iw in intertwiners(rep1, rep2):
        lhs = compose(kron(iw.f, ident_b), rep1.psi)
        rhs = compose(rep2.psi, kron(ident_a, iw.f))
        assert lhs == rhs


def _f2_span(maps):
    span = set()
    for bits in itertools.product(range(2), repeat=len(maps)):
        total = None
        for bit, m in zip(bits, maps):
            if bit:
                total = m if total is None else total + m
        if total is not None:
            span.add(total.entries)
    return span


def test_simplicity_detection(m2_f2, k_f2, inv_f2):
    std = measuring_from_matrix_morphism(LinMap.identity(F2, 4), m2_f2, k_f2, 2)
    assert is_simple(std)
    # the regular module of F2[C2] contains the fixed line span(1 + g)
    assert not is_simple(regular_measuring(inv_f2))


# -- tensor products ----------------------------------------------------------------


def test_tensor_with_unit_measuring_is_identity_on_the_nose(q_c2):
    kq = trivial_algebra(QQ)
    sign = measuring_from_matrix_morphism(LinMap.from_rows(QQ, [[1, -1]]),
                                          q_c2.algebra, kq, 1)
    unit = unit_measuring(q_c2.bialgebra, kq)
    left = tensor_measuring_bialgebra(unit, sign, q_c2.bialgebra)
    right = tensor_measuring_bialgebra(sign, unit, q_c2.bialgebra)
    assert left.psi == sign.psi and right.psi == sign.psi


def test_sign_character_squares_to_trivial(q_c2):
    kq = trivial_algebra(QQ)
    sign = measuring_from_matrix_morphism(LinMap.from_rows(QQ, [[1, -1]]),
                                          q_c2.algebra, kq, 1)
    triv = measuring_from_matrix_morphism(LinMap.from_rows(QQ, [[1, 1]]),
                                          q_c2.algebra, kq, 1)
    assert tensor_measuring_bialgebra(sign, sign, q_c2.bialgebra).psi == triv.psi


def test_tensor_requires_commutative_target(sweedler4):
    endo = Measuring(sweedler4.algebra, sweedler4.algebra, 1,
                     LinMap.identity(GF(3), 4))
    with pytest.raises(NotCommutative):
        tensor_measuring_bialgebra(endo, endo, sweedler4.bialgebra)


def test_tensor_outputs_validate_on_corpus_draws(inv_f2, k_f2):
    rng = random.Random(20240)
    h2 = cyclic_group_hopf(F2, 2)
    pool = [measuring_from_matrix_morphism(rho, inv_f2, k_f2, n)
            for n in (1, 2)
            for rho in algebra_morphisms(inv_f2, matrix_algebra(k_f2, n))]
    for _ in range(50):
        m1, m2 = rng.choice(pool), rng.choice(pool)
        t = tensor_measuring_bialgebra(m1, m2, h2.bialgebra)
        assert validate_measuring(t).ok


def test_unit_measuring_validates_for_corpus(bialgebra_corpus):
    for name, b in bialgebra_corpus:
        m = unit_measuring(b, trivial_algebra(b.field))
        assert validate_measuring(m).ok, name


def test_endo_tensor_is_composition_in_dimension_one(inv_f2):
    endos = algebra_morphisms(inv_f2, inv_f2)
    assert len(endos) == 2
    for r1 in endos:
        for r2 in endos:
            m1 = Measuring(inv_f2, inv_f2, 1, r1)
            m2 = Measuring(inv_f2, inv_f2, 1, r2)
            t = tensor_measuring_endo(m1, m2)
            assert t.psi == compose(r2, r1)
            assert validate_measuring(t).ok


def test_endo_tensor_with_identity(inv_f2):
    m = identity_measuring(inv_f2)
    again = tensor_measuring_endo(m, m)
    assert again.psi == m.psi
    # the identity measuring is neutral against higher-dimensional ones too
    rho = algebra_morphisms(inv_f2, matrix_algebra(inv_f2, 2))[0]
    two = measuring_from_matrix_morphism(rho, inv_f2, inv_f2, 2)
    assert tensor_measuring_endo(two, m).psi == two.psi
    assert tensor_measuring_endo(m, two).psi == two.psi


def test_endo_tensor_associativity(inv_f2):
    endos = [Measuring(inv_f2, inv_f2, 1, r) for r in algebra_morphisms(inv_f2, inv_f2)]
    for m1, m2, m3 in itertools.product(endos, repeat=3):
        lhs = tensor_measuring_endo(tensor_measuring_endo(m1, m2), m3)
        rhs = tensor_measuring_endo(m1, tensor_measuring_endo(m2, m3))
        assert lhs.psi == rhs.psi


def test_tensor_is_functorial_in_intertwiners(inv_f2, k_f2):
    h2 = cyclic_group_hopf(F2, 2)
    report = enumerate_measurings(inv_f2, k_f2, 2)
    (rep1, _), (rep2, _) = report.orbits
    for m1, m1p in [(rep1, rep1), (rep1, rep2)]:
        for m2, m2p in [(rep2, rep2), (rep2, rep1)]:
            t = tensor_measuring_bialgebra(m1, m2, h2.bialgebra)
            tp = tensor_measuring_bialgebra(m1p, m2p, h2.bialgebra)
            for iw1 in intertwiners(m1, m1p):
                for iw2 in intertwiners(m2, m2p):
                    candidate = kron(iw1.f, iw2.f)
                    lhs = compose(kron(candidate, LinMap.identity(F2, 1)), t.psi)
                    rhs = compose(tp.psi, kron(LinMap.identity(F2, 2), candidate))
                    assert lhs == rhs


def test_compose_is_functorial_in_intertwiners(inv_f2, k_f2):
    endos = [Measuring(inv_f2, inv_f2, 1, r) for r in algebra_morphisms(inv_f2, inv_f2)]
    report = enumerate_measurings(inv_f2, k_f2, 2)
    (rep1, _), (rep2, _) = report.orbits
    for e in endos:
        for m, mp in [(rep1, rep1), (rep1, rep2), (rep2, rep2)]:
            c = compose_measuring(e, m)
            cp = compose_measuring(e, mp)
            for iw_e in intertwiners(e, e):
                for iw_m in intertwiners(m, mp):
                    candidate = kron(iw_e.f, iw_m.f)
                    lhs = compose(kron(candidate, LinMap.identity(F2, 1)), c.psi)
                    rhs = compose(cp.psi, kron(LinMap.identity(F2, 2), candidate))
                    assert lhs == rhs


# -- composition -----------------------------------------------------------------


def test_compose_with_identity_measuring(q_c2):
    kq = trivial_algebra(QQ)
    sign = measuring_from_matrix_morphism(LinMap.from_rows(QQ, [[1, -1]]),
                                          q_c2.algebra, kq, 1)
    assert compose_measuring(sign, identity_measuring(kq)).psi == sign.psi
    assert compose_measuring(identity_measuring(q_c2.algebra), sign).psi == sign.psi


def test_characters_compose_as_algebra_maps(inv_f2, k_f2):
    sigma = algebra_morphisms(inv_f2, inv_f2)
    chars = algebra_morphisms(inv_f2, k_f2)
    for s in sigma:
        for c in chars:
            m1 = Measuring(inv_f2, inv_f2, 1, s)
            m2 = Measuring(inv_f2, k_f2, 1, c)
            composed = compose_measuring(m1, m2)
            assert composed.psi == compose(c, s)
            assert validate_measuring(composed).ok


def test_compose_associativity_random(inv_f2, k_f2):
    rng = random.Random(777)
    endos = [Measuring(inv_f2, inv_f2, 1, r) for r in algebra_morphisms(inv_f2, inv_f2)]
    twos = [measuring_from_matrix_morphism(rho, inv_f2, k_f2, 2)
            for rho in algebra_morphisms(inv_f2, matrix_algebra(k_f2, 2))]
    for _ in range(30):
        m1, m2 = rng.choice(endos), rng.choice(endos)
        m3 = rng.choice(twos)
        lhs = compose_measuring(compose_measuring(m1, m2), m3)
        rhs = compose_measuring(m1, compose_measuring(m2, m3))
        assert lhs.psi == rhs.psi


def test_compose_shape_mismatch(q_c2, inv_f2, k_f2):
    kq = trivial_algebra(QQ)
    sign = measuring_from_matrix_morphism(LinMap.from_rows(QQ, [[1, -1]]),
                                          q_c2.algebra, kq, 1)
    with pytest.raises(IncompatibleMeasurings):
        compose_measuring(sign, sign)


# -- restriction -----------------------------------------------------------------


def test_restrict_along_identity(inv_f2):
    m = regular_measuring(inv_f2)
    assert restrict_measuring(LinMap.identity(F2, 2), m, inv_f2) == m


def test_restrict_along_unit_gives_forced_measuring(inv_f2, k_f2):
    m = regular_measuring(inv_f2)
    unit = inv_f2.unit  # k -> A is an algebra morphism
    restricted = restrict_measuring(unit, m, trivial_algebra(F2))
    assert validate_measuring(restricted).ok
    assert restricted.psi == LinMap.identity(F2, 2)  # psi(1 (x) x) = x (x) 1


def test_corestrict_along_augmentation_gives_module(inv_f2, k_f2):
    dn = dual_numbers(F2)
    rhos = algebra_morphisms(inv_f2, dn)
    assert len(rhos) == 2
    augment = LinMap.from_rows(F2, [[1, 0]])  # 1 -> 1, y -> 0
    for rho in rhos:
        m = Measuring(inv_f2, dn, 1, rho)
        module = corestrict_measuring(m, augment, k_f2)
        assert module.b == k_f2
        assert validate_measuring(module).ok

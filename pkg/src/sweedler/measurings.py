"""Measuring representations: pairs (X, psi: A (x) X -> X (x) B).

These are the objects carrying the two axioms

    psi.(mult_A (x) 1) = (1 (x) mult_B).(psi (x) 1).(1 (x) psi)
    psi.(unit_A (x) 1) = 1 (x) unit_B

For X = k^n they are the same thing as algebra morphisms A -> M_n(B), and the
isomorphism classes of n-dimensional ones are the GL_n(k)-conjugation orbits
of those morphisms; both directions are implemented here, together with
intertwiners, enumeration, tensor products and composition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    IncompatibleMeasurings,
    NotAMorphism,
    NotCommutative,
)
from .fields import same_field
from .linalg import (
    LinMap,
    compose,
    compose_all,
    invert,
    kron,
    matrix_equation_kernel,
    swap_map,
)
from .structures import (
    DEFAULT_BUDGET,
    Algebra,
    Bialgebra,
    Failure,
    ValidationReport,
    algebra_morphisms,
    general_linear_group,
    is_algebra_morphism,
    is_commutative,
    matrix_algebra,
    trivial_algebra,
)


@dataclass(frozen=True)
class Measuring:
    a: Algebra
    b: Algebra
    xdim: int
    psi: LinMap  # dim(a)*xdim -> xdim*dim(b)

    def __post_init__(self):
        same_field(self.a.field, self.b.field, self.psi.field)
        if self.xdim < 0:
            raise DimensionMismatch("xdim must be >= 0")
        if self.psi.dom != self.a.dim * self.xdim or self.psi.cod != self.xdim * self.b.dim:
            raise DimensionMismatch("psi shape does not match (a, b, xdim)")

    @property
    def field(self):
        return self.psi.field


@dataclass(frozen=True)
class Intertwiner:
    source: Measuring
    target: Measuring
    f: LinMap  # source.xdim -> target.xdim


@dataclass(frozen=True)
class OrbitReport:
    total_count: int
    orbits: tuple[tuple[Measuring, int], ...]  # (representative, orbit size)


def validate_measuring(m: Measuring) -> ValidationReport:
    k = m.field
    da, x, db = m.a.dim, m.xdim, m.b.dim
    ident_a = LinMap.identity(k, da)
    ident_x = LinMap.identity(k, x)
    ident_b = LinMap.identity(k, db)
    failures: list[Failure] = []
    lhs = compose(m.psi, kron(m.a.mult, ident_x))
    rhs = compose_all(kron(ident_x, m.b.mult), kron(m.psi, ident_b), kron(ident_a, m.psi))
    if lhs != rhs:
        witness = _first_col_mismatch(lhs, rhs, (da, da, x))
        failures.append(Failure("measuring multiplicativity", witness))
    lhs_u = compose(m.psi, kron(m.a.unit, ident_x))
    rhs_u = kron(ident_x, m.b.unit)
    if lhs_u != rhs_u:
        witness = _first_col_mismatch(lhs_u, rhs_u, (x,))
        failures.append(Failure("measuring unit", witness))
    return ValidationReport(tuple(failures))


def _first_col_mismatch(lhs: LinMap, rhs: LinMap, dims: tuple[int, ...]) -> tuple:
    for c in range(lhs.dom):
        if lhs.col_at(c) != rhs.col_at(c):
            idx = []
            rest = c
            for d in reversed(dims):
                idx.append(rest % d)
                rest //= d
            return tuple(reversed(idx))
    return ()


def require_valid_measuring(m: Measuring) -> Measuring:
    report = validate_measuring(m)
    if not report.ok:
        raise IncompatibleMeasurings(f"not a measuring: {report}")
    return m


# ---------------------------------------------------------------------------
# the bijection with algebra morphisms A -> M_n(B)


def measuring_from_matrix_morphism(rho: LinMap, a: Algebra, b: Algebra, n: int) -> Measuring:
    """Unpack an algebra morphism A -> M_n(B) into psi(a (x) x_j) = sum_i x_i (x) rho(a)_ij."""
    mb = matrix_algebra(b, n) if n >= 1 else None
    if n >= 1 and not is_algebra_morphism(rho, a, mb):
        raise NotAMorphism("rho is not an algebra morphism into the matrix algebra")
    k = a.field
    da, db = a.dim, b.dim
    entries = [k.zero()] * ((n * db) * (da * n))
    for t in range(da):
        col = rho.col_at(t) if n >= 1 else ()
        for i in range(n):
            for j in range(n):
                for q in range(db):
                    val = col[(i * n + j) * db + q]
                    if val != 0:
                        entries[(i * db + q) * (da * n) + (t * n + j)] = val
    return Measuring(a, b, n, LinMap(k, n * db, da * n, tuple(entries)))


def matrix_morphism_from_measuring(m: Measuring) -> LinMap:
    """Inverse of :func:`measuring_from_matrix_morphism`; roundtrip is the identity."""
    k = m.field
    da, n, db = m.a.dim, m.xdim, m.b.dim
    entries = [k.zero()] * ((n * n * db) * da)
    for t in range(da):
        for i in range(n):
            for j in range(n):
                for q in range(db):
                    val = m.psi.entries[(i * db + q) * (da * n) + (t * n + j)]
                    if val != 0:
                        entries[((i * n + j) * db + q) * da + t] = val
    return LinMap(k, n * n * db, da, tuple(entries))


def regular_measuring(a: Algebra) -> Measuring:
    """A acting on itself by multiplication, with B = k: psi = mult."""
    return Measuring(a, trivial_algebra(a.field), a.dim, a.mult)


def identity_measuring(a: Algebra) -> Measuring:
    """The one-dimensional measuring A -> A with psi = id (up to unit isos)."""
    return Measuring(a, a, 1, LinMap.identity(a.field, a.dim))


def unit_measuring(a: Bialgebra, b: Algebra) -> Measuring:
    """X = k with psi = unit_B . counit_A; the unit for the bialgebra tensor."""
    return Measuring(a.algebra, b, 1, compose(b.unit, a.counit))


# ---------------------------------------------------------------------------
# intertwiners and conjugation orbits


def intertwiners(m1: Measuring, m2: Measuring) -> list[Intertwiner]:
    """Echelon-canonical basis of {f : (f (x) 1_B).psi1 = psi2.(1_A (x) f)}."""
    if m1.a != m2.a or m1.b != m2.b:
        raise IncompatibleMeasurings("intertwiners need the same (A, B)")
    k = m1.field
    da, db = m1.a.dim, m1.b.dim
    ident_a = LinMap.identity(k, da)
    ident_b = LinMap.identity(k, db)

    def op(f: LinMap) -> LinMap:
        return compose(kron(f, ident_b), m1.psi) - compose(m2.psi, kron(ident_a, f))

    basis = matrix_equation_kernel(k, (m2.xdim, m1.xdim), [op])
    return [Intertwiner(m1, m2, f) for f in basis]


def conjugate_measuring(m: Measuring, g: LinMap) -> Measuring:
    """Transport along the invertible g: X -> X, psi' = (g (x) 1).psi.(1 (x) g^-1)."""
    k = m.field
    ident_a = LinMap.identity(k, m.a.dim)
    ident_b = LinMap.identity(k, m.b.dim)
    psi = compose_all(kron(g, ident_b), m.psi, kron(ident_a, invert(g)))
    return Measuring(m.a, m.b, m.xdim, psi)


def enumerate_measurings(a: Algebra, b: Algebra, n: int,
                         budget: int = DEFAULT_BUDGET) -> OrbitReport:
    """All n-dimensional measurings, classified into GL_n(k)-conjugation orbits.

    Enumeration runs over algebra morphisms A -> M_n(B) (the measuring axioms
    are equivalent to these, and the space is smaller than raw psi maps).
    Representatives are the lexicographically smallest flattened psi entries.
    """
    if n == 0:
        empty = Measuring(a, b, 0, LinMap.zero(a.field, 0, 0))
        return OrbitReport(1, ((empty, 1),))
    morphisms = algebra_morphisms(a, matrix_algebra(b, n), budget=budget)
    gl = general_linear_group(a.field, n, budget=budget)
    remaining = {rho.entries: rho for rho in morphisms}
    orbits = []
    while remaining:
        seed_key = min(remaining)
        seed = remaining.pop(seed_key)
        orbit_keys = {seed_key}
        seed_measuring = measuring_from_matrix_morphism(seed, a, b, n)
        for g in gl:
            moved = conjugate_measuring(seed_measuring, g)
            key = matrix_morphism_from_measuring(moved).entries
            orbit_keys.add(key)
        for key in orbit_keys:
            remaining.pop(key, None)
        members = [measuring_from_matrix_morphism(LinMap(a.field, seed.cod, seed.dom, key), a, b, n)
                   for key in orbit_keys]
        rep = min(members, key=lambda m: m.psi.entries)
        orbits.append((rep, len(orbit_keys)))
    orbits.sort(key=lambda pair: pair[0].psi.entries)
    total = len(morphisms)
    assert total == sum(size for _, size in orbits)
    return OrbitReport(total, tuple(orbits))


def is_simple(m: Measuring, budget: int = DEFAULT_BUDGET) -> bool:
    """No proper nonzero subcomodule: every intertwiner from a smaller
    measuring is zero (a nonzero one has a subcomodule as its image)."""
    for d in range(1, m.xdim):
        report = enumerate_measurings(m.a, m.b, d, budget=budget)
        for rep, _ in report.orbits:
            for iw in intertwiners(rep, m):
                if not iw.f.is_zero():
                    return False
    return m.xdim > 0


# ---------------------------------------------------------------------------
# tensor products and composition


def tensor_measuring_bialgebra(m1: Measuring, m2: Measuring, a: Bialgebra) -> Measuring:
    """Tensor product over a bialgebra A with commutative B:

    A X Y --Delta X Y--> A A X Y --A c Y--> A X A Y --psi1 psi2--> X B Y B
          --X c B--> X Y B B --X Y mult--> X Y B
    """
    if m1.a != m2.a or m1.b != m2.b:
        raise IncompatibleMeasurings("tensor needs matching (A, B) on both factors")
    if m1.a != a.algebra:
        raise IncompatibleMeasurings("bialgebra does not match the measurings' A")
    if not is_commutative(m1.b):
        raise NotCommutative("the target algebra must be commutative")
    k = m1.field
    da, db = m1.a.dim, m1.b.dim
    x, y = m1.xdim, m2.xdim
    ident = lambda n: LinMap.identity(k, n)
    step1 = kron(a.comult, ident(x * y))
    step2 = kron(ident(da), kron(swap_map(da, x, k), ident(y)))
    step3 = kron(m1.psi, m2.psi)
    step4 = kron(ident(x), kron(swap_map(db, y, k), ident(db)))
    step5 = kron(ident(x * y), m1.b.mult)
    return Measuring(m1.a, m1.b, x * y, compose_all(step5, step4, step3, step2, step1))


def tensor_measuring_endo(m1: Measuring, m2: Measuring) -> Measuring:
    """A = B tensor: A X Y --psi1 Y--> X A Y --X psi2--> X Y A."""
    if not (m1.a == m1.b == m2.a == m2.b):
        raise IncompatibleMeasurings("endo tensor needs A = B on both factors")
    k = m1.field
    x, y = m1.xdim, m2.xdim
    composite = compose(kron(LinMap.identity(k, x), m2.psi),
                        kron(m1.psi, LinMap.identity(k, y)))
    return Measuring(m1.a, m1.b, x * y, composite)


def compose_measuring(m_ab: Measuring, m_bc: Measuring) -> Measuring:
    """Composition A X Y --psi Y--> X B Y --X phi--> X Y C for psi: A->B on X,
    phi: B->C on Y; strictly associative on flattened maps."""
    if m_ab.b != m_bc.a:
        raise IncompatibleMeasurings("middle algebras do not match")
    k = m_ab.field
    x, y = m_ab.xdim, m_bc.xdim
    composite = compose(kron(LinMap.identity(k, x), m_bc.psi),
                        kron(m_ab.psi, LinMap.identity(k, y)))
    return Measuring(m_ab.a, m_bc.b, x * y, composite)


def restrict_measuring(u: LinMap, m: Measuring, a_source: Algebra) -> Measuring:
    """Pull back along an algebra morphism u: A' -> A: psi' = psi.(u (x) 1)."""
    if not is_algebra_morphism(u, a_source, m.a):
        raise NotAMorphism("u is not an algebra morphism A' -> A")
    psi = compose(m.psi, kron(u, LinMap.identity(m.field, m.xdim)))
    return Measuring(a_source, m.b, m.xdim, psi)


def corestrict_measuring(m: Measuring, v: LinMap, b_target: Algebra) -> Measuring:
    """Push forward along an algebra morphism v: B -> B': psi' = (1 (x) v).psi."""
    if not is_algebra_morphism(v, m.b, b_target):
        raise NotAMorphism("v is not an algebra morphism B -> B'")
    psi = compose(kron(LinMap.identity(m.field, m.xdim), v), m.psi)
    return Measuring(m.a, b_target, m.xdim, psi)

"""Structure-constant presentations of algebras, coalgebras, bialgebras and
Hopf algebras, with full axiom validation.

Everything is a :class:`~sweedler.linalg.LinMap` in the end: an algebra is
(mult: dim^2 -> dim, unit: 1 -> dim), a coalgebra the transposed shapes, and
all axioms are checked as exact matrix identities.  Validation failures are
data (a report with a witness), not exceptions.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    InvalidAlgebra,
    InvalidBialgebra,
    InvalidCoalgebra,
    InvalidHopf,
    NotAGroup,
    Singular,
    UnsupportedField,
)
from .fields import Field, same_field
from .linalg import (
    LinMap,
    compose,
    compose_all,
    invert,
    kernel_basis,
    kron,
    solve,
    solve_matrix_equations,
    swap_map,
)

DEFAULT_BUDGET = 1 << 24


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class Algebra:
    """Unital associative algebra: mult: dim^2 -> dim, unit: 1 -> dim."""

    mult: LinMap
    unit: LinMap

    def __post_init__(self):
        same_field(self.mult.field, self.unit.field)
        d = self.unit.cod
        if d < 1:
            raise DimensionMismatch("an algebra needs dim >= 1 (it has a unit)")
        if self.unit.dom != 1 or self.mult.cod != d or self.mult.dom != d * d:
            raise DimensionMismatch("algebra structure maps have inconsistent shapes")

    @property
    def field(self) -> Field:
        return self.mult.field

    @property
    def dim(self) -> int:
        return self.unit.cod

    def unit_vector(self) -> tuple:
        return self.unit.col_at(0)

    def product(self, u: Sequence, v: Sequence) -> tuple:
        """Product of two coefficient vectors."""
        k = self.field
        vec = [k.zero()] * (self.dim * self.dim)
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                vec[i * self.dim + j] = k.mul(a, b)
        return self.mult.apply(vec)


@dataclass(frozen=True)
class Coalgebra:
    """Counital coassociative coalgebra: comult: dim -> dim^2, counit: dim -> 1."""

    comult: LinMap
    counit: LinMap

    def __post_init__(self):
        same_field(self.comult.field, self.counit.field)
        d = self.counit.dom
        if self.counit.cod != 1 or self.comult.dom != d or self.comult.cod != d * d:
            raise DimensionMismatch("coalgebra structure maps have inconsistent shapes")

    @property
    def field(self) -> Field:
        return self.comult.field

    @property
    def dim(self) -> int:
        return self.counit.dom


@dataclass(frozen=True)
class Bialgebra:
    algebra: Algebra
    coalgebra: Coalgebra

    def __post_init__(self):
        same_field(self.algebra.field, self.coalgebra.field)
        if self.algebra.dim != self.coalgebra.dim:
            raise DimensionMismatch("bialgebra halves disagree on dimension")

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def mult(self) -> LinMap:
        return self.algebra.mult

    @property
    def unit(self) -> LinMap:
        return self.algebra.unit

    @property
    def comult(self) -> LinMap:
        return self.coalgebra.comult

    @property
    def counit(self) -> LinMap:
        return self.coalgebra.counit


@dataclass(frozen=True)
class HopfAlgebra:
    bialgebra: Bialgebra
    antipode: LinMap

    def __post_init__(self):
        same_field(self.bialgebra.field, self.antipode.field)
        d = self.bialgebra.dim
        if self.antipode.cod != d or self.antipode.dom != d:
            raise DimensionMismatch("antipode shape does not match the bialgebra")

    @property
    def field(self) -> Field:
        return self.bialgebra.field

    @property
    def dim(self) -> int:
        return self.bialgebra.dim

    @property
    def algebra(self) -> Algebra:
        return self.bialgebra.algebra

    @property
    def coalgebra(self) -> Coalgebra:
        return self.bialgebra.coalgebra


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Failure:
    axiom: str
    witness: tuple

    def __str__(self):
        return f"{self.axiom} fails at basis indices {self.witness}"


@dataclass(frozen=True)
class ValidationReport:
    failures: tuple[Failure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self):
        if self.ok:
            return "valid"
        return "; ".join(str(f) for f in self.failures)


def _unflatten(index: int, dims: tuple[int, ...]) -> tuple:
    idx = []
    rest = index
    for d in reversed(dims):
        idx.append(rest % d)
        rest //= d
    return tuple(reversed(idx))


def _first_mismatch(lhs: LinMap, rhs: LinMap, dims: tuple[int, ...],
                    by_row: bool = False) -> tuple | None:
    """Basis indices of the first differing column (or row), over ``dims``."""
    if lhs.entries == rhs.entries:
        return None
    if by_row:
        for r in range(lhs.cod):
            if lhs.row_at(r) != rhs.row_at(r):
                return _unflatten(r, dims)
    for c in range(lhs.dom):
        if lhs.col_at(c) != rhs.col_at(c):
            return _unflatten(c, dims)
    return None


def _check(failures: list, axiom: str, lhs: LinMap, rhs: LinMap, dims: tuple[int, ...],
           by_row: bool = False):
    witness = _first_mismatch(lhs, rhs, dims, by_row)
    if witness is not None:
        failures.append(Failure(axiom, witness))


def validate_algebra(a: Algebra) -> ValidationReport:
    d = a.dim
    ident = LinMap.identity(a.field, d)
    failures: list[Failure] = []
    _check(failures, "associativity",
           compose(a.mult, kron(a.mult, ident)),
           compose(a.mult, kron(ident, a.mult)), (d, d, d))
    _check(failures, "left unit", compose(a.mult, kron(a.unit, ident)), ident, (d,))
    _check(failures, "right unit", compose(a.mult, kron(ident, a.unit)), ident, (d,))
    return ValidationReport(tuple(failures))


def validate_coalgebra(c: Coalgebra) -> ValidationReport:
    d = c.dim
    ident = LinMap.identity(c.field, d)
    failures: list[Failure] = []
    _check(failures, "coassociativity",
           compose(kron(c.comult, ident), c.comult),
           compose(kron(ident, c.comult), c.comult), (d, d, d), by_row=True)
    _check(failures, "left counit", compose(kron(c.counit, ident), c.comult), ident, (d,))
    _check(failures, "right counit", compose(kron(ident, c.counit), c.comult), ident, (d,))
    return ValidationReport(tuple(failures))


def validate_bialgebra(b: Bialgebra) -> ValidationReport:
    """Algebra + coalgebra axioms, plus: counit and comult are algebra morphisms
    for the product (mult (x) mult).(1 (x) swap (x) 1) on the tensor square."""
    d = b.dim
    k = b.field
    ident = LinMap.identity(k, d)
    failures = list(validate_algebra(b.algebra).failures)
    failures += list(validate_coalgebra(b.coalgebra).failures)
    mult2 = compose_all(kron(b.mult, b.mult), kron(ident, kron(swap_map(d, d, k), ident)))
    _check(failures, "comult multiplicative",
           compose(b.comult, b.mult),
           compose(mult2, kron(b.comult, b.comult)), (d, d))
    _check(failures, "comult unital", compose(b.comult, b.unit), kron(b.unit, b.unit), (1,))
    _check(failures, "counit multiplicative",
           compose(b.counit, b.mult), kron(b.counit, b.counit), (d, d))
    _check(failures, "counit unital",
           compose(b.counit, b.unit), LinMap.identity(k, 1), (1,))
    return ValidationReport(tuple(failures))


def _antipode_failures(b: Bialgebra, s: LinMap) -> list[Failure]:
    d = b.dim
    ident = LinMap.identity(b.field, d)
    unit_counit = compose(b.unit, b.counit)
    failures: list[Failure] = []
    _check(failures, "left antipode",
           compose_all(b.mult, kron(s, ident), b.comult), unit_counit, (d,))
    _check(failures, "right antipode",
           compose_all(b.mult, kron(ident, s), b.comult), unit_counit, (d,))
    return failures


def validate_hopf(h: HopfAlgebra) -> ValidationReport:
    failures = list(validate_bialgebra(h.bialgebra).failures)
    failures += _antipode_failures(h.bialgebra, h.antipode)
    return ValidationReport(tuple(failures))


def require_valid_algebra(a: Algebra) -> Algebra:
    report = validate_algebra(a)
    if not report.ok:
        raise InvalidAlgebra(str(report), report)
    return a


def require_valid_coalgebra(c: Coalgebra) -> Coalgebra:
    report = validate_coalgebra(c)
    if not report.ok:
        raise InvalidCoalgebra(str(report), report)
    return c


def require_valid_bialgebra(b: Bialgebra) -> Bialgebra:
    report = validate_bialgebra(b)
    if not report.ok:
        raise InvalidBialgebra(str(report), report)
    return b


def require_valid_hopf(h: HopfAlgebra) -> HopfAlgebra:
    report = validate_hopf(h)
    if not report.ok:
        raise InvalidHopf(str(report), report)
    return h


# ---------------------------------------------------------------------------
# constructions


def trivial_algebra(field: Field) -> Algebra:
    one = LinMap.identity(field, 1)
    return Algebra(mult=one, unit=one)


def tensor_algebra(a: Algebra, b: Algebra) -> Algebra:
    """Tensor product algebra on A (x) B with (a (x) b)(a' (x) b') = aa' (x) bb'."""
    k = same_field(a.field, b.field)
    da, db = a.dim, b.dim
    ident_a = LinMap.identity(k, da)
    ident_b = LinMap.identity(k, db)
    mult = compose_all(kron(a.mult, b.mult),
                       kron(ident_a, kron(swap_map(db, da, k), ident_b)))
    return Algebra(mult=mult, unit=kron(a.unit, b.unit))


def matrix_units_algebra(field: Field, n: int) -> Algebra:
    """M_n(k) on the matrix-unit basis e_ij, index i*n + j."""
    k = field
    dim = n * n
    mult = [[k.zero()] * (dim * dim) for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            for l in range(n):
                # e_ij . e_jl = e_il
                mult[i * n + l][(i * n + j) * dim + (j * n + l)] = k.one()
    unit = [k.one() if i % (n + 1) == 0 else k.zero() for i in range(dim)]
    return Algebra(mult=LinMap.from_rows(k, mult),
                   unit=LinMap.column(k, unit))


def matrix_algebra(b: Algebra, n: int) -> Algebra:
    """M_n(B) on basis e_ij (x) b_k, index (i*n + j)*dim(B) + k."""
    if n < 1:
        raise DimensionMismatch("matrix algebras need n >= 1")
    return tensor_algebra(matrix_units_algebra(b.field, n), b)


def group_algebra(field: Field, cayley: Sequence[Sequence[int]]) -> HopfAlgebra:
    """The Hopf algebra k[G] of a finite group given by its Cayley table.

    Grouplike basis: Delta g = g (x) g, eps g = 1, s(g) = g^{-1}.
    """
    n = len(cayley)
    if n == 0:
        raise NotAGroup("empty table")
    for row in cayley:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise NotAGroup("table is not square over indices 0..n-1")
    identity = None
    for e in range(n):
        if all(cayley[e][j] == j and cayley[j][e] == j for j in range(n)):
            identity = e
            break
    if identity is None:
        raise NotAGroup("no identity element")
    inverse = [None] * n
    for g in range(n):
        for h in range(n):
            if cayley[g][h] == identity and cayley[h][g] == identity:
                inverse[g] = h
                break
        if inverse[g] is None:
            raise NotAGroup(f"element {g} has no inverse")
    for g in range(n):
        for h in range(n):
            for l in range(n):
                if cayley[cayley[g][h]][l] != cayley[g][cayley[h][l]]:
                    raise NotAGroup(f"associativity fails at ({g}, {h}, {l})")
    k = field
    mult = [[k.zero()] * (n * n) for _ in range(n)]
    comult = [[k.zero()] * n for _ in range(n * n)]
    for g in range(n):
        for h in range(n):
            mult[cayley[g][h]][g * n + h] = k.one()
        comult[g * n + g][g] = k.one()
    unit = [k.one() if g == identity else k.zero() for g in range(n)]
    counit = [k.one()] * n
    antipode = [[k.one() if inverse[j] == i else k.zero() for j in range(n)] for i in range(n)]
    alg = Algebra(mult=LinMap.from_rows(k, mult), unit=LinMap.column(k, unit))
    coalg = Coalgebra(comult=LinMap.from_rows(k, comult), counit=LinMap.row(k, counit))
    return HopfAlgebra(Bialgebra(alg, coalg), LinMap.from_rows(k, antipode))


def dual_coalgebra(a: Algebra) -> Coalgebra:
    """Linear dual on the dual basis: comult = mult^T, counit = unit^T."""
    return Coalgebra(comult=a.mult.transpose(), counit=a.unit.transpose())


def dual_algebra(c: Coalgebra) -> Algebra:
    return Algebra(mult=c.comult.transpose(), unit=c.counit.transpose())


def dual_bialgebra(b: Bialgebra) -> Bialgebra:
    return Bialgebra(dual_algebra(b.coalgebra), dual_coalgebra(b.algebra))


def opposite(a: Algebra) -> Algebra:
    d = a.dim
    return Algebra(mult=compose(a.mult, swap_map(d, d, a.field)), unit=a.unit)


def coopposite(c: Coalgebra) -> Coalgebra:
    d = c.dim
    return Coalgebra(comult=compose(swap_map(d, d, c.field), c.comult), counit=c.counit)


def is_commutative(a: Algebra) -> bool:
    return opposite(a) == a


def is_cocommutative(c: Coalgebra) -> bool:
    return coopposite(c) == c


def convolution_algebra(c: Coalgebra, b: Algebra) -> Algebra:
    """The convolution algebra [C, B]: f*g = mult_B.(f (x) g).comult_C.

    Basis: the map c_p -> b_q sits at index p*dim(B) + q; this is the tensor
    algebra C* (x) B.
    """
    return tensor_algebra(dual_algebra(c), b)


# ---------------------------------------------------------------------------
# fusion operators and antipodes


@dataclass(frozen=True)
class FusionOperators:
    """The four canonical endomorphisms of H (x) H whose invertibility
    characterises Hopf (h, h_prime) and op-Hopf (h_bar, h_bar_prime)."""

    h: LinMap
    h_prime: LinMap
    h_bar: LinMap
    h_bar_prime: LinMap


def fusion_operators(b: Bialgebra) -> FusionOperators:
    require_valid_bialgebra(b)
    d = b.dim
    k = b.field
    ident = LinMap.identity(k, d)
    c = swap_map(d, d, k)
    h = compose(kron(ident, b.mult), kron(b.comult, ident))
    h_prime = compose(kron(b.mult, ident), kron(ident, b.comult))
    h_bar = compose_all(kron(b.mult, ident), kron(ident, c), kron(b.comult, ident))
    h_bar_prime = compose_all(kron(ident, b.mult), kron(c, ident), kron(ident, b.comult))
    return FusionOperators(h, h_prime, h_bar, h_bar_prime)


def _convolution_inverse_of_identity(b: Bialgebra, twist: LinMap | None) -> LinMap | None:
    """Solve mult.(s (x) 1).D = unit.counit = mult.(1 (x) s).D for s, where
    D = comult (antipode) or swap.comult (opantipode).  None if inconsistent."""
    d = b.dim
    k = b.field
    ident = LinMap.identity(k, d)
    dlt = b.comult if twist is None else compose(twist, b.comult)
    rhs = compose(b.unit, b.counit)
    s = solve_matrix_equations(
        k, (d, d),
        [(lambda x: compose_all(b.mult, kron(x, ident), dlt), rhs),
         (lambda x: compose_all(b.mult, kron(ident, x), dlt), rhs)])
    return s


def find_antipode(b: Bialgebra) -> HopfAlgebra | None:
    """Solve the antipode equations; cross-checked against fusion invertibility."""
    require_valid_bialgebra(b)
    s = _convolution_inverse_of_identity(b, twist=None)
    ops = fusion_operators(b)
    h_invertible = _invertible(ops.h)
    h_prime_invertible = _invertible(ops.h_prime)
    found = s is not None
    if not (found == h_invertible == h_prime_invertible):
        raise AssertionError(
            "internal error: antipode solver and fusion-operator invertibility disagree")
    if s is None:
        return None
    return HopfAlgebra(b, s)


def find_opantipode(b: Bialgebra) -> LinMap | None:
    """Convolution inverse of the identity against the co-opposite comultiplication."""
    require_valid_bialgebra(b)
    s = _convolution_inverse_of_identity(b, twist=swap_map(b.dim, b.dim, b.field))
    ops = fusion_operators(b)
    if not ((s is not None) == _invertible(ops.h_bar) == _invertible(ops.h_bar_prime)):
        raise AssertionError(
            "internal error: opantipode solver and opfusion invertibility disagree")
    return s


def _invertible(f: LinMap) -> bool:
    try:
        invert(f)
        return True
    except Singular:
        return False


# ---------------------------------------------------------------------------
# grouplikes and morphism enumeration


def _vectors(field: Field, length: int, budget: int):
    """All coefficient vectors of the given length, lexicographic.  F_p only."""
    if field.is_rational:
        raise UnsupportedField("exhaustive enumeration needs a finite field")
    total = field.char ** length
    if total > budget:
        raise BudgetExceeded(total, budget)
    return itertools.product(field.elements(), repeat=length)


def grouplikes(c: Coalgebra, candidates: Sequence[Sequence] | None = None,
               budget: int = DEFAULT_BUDGET) -> list[tuple]:
    """All x with comult x = x (x) x and counit x = 1, deterministically ordered.

    Over a prime field the search is exhaustive.  Over the rationals the
    quadratic system is undecidable by enumeration, so the caller must declare
    candidate axes; each axis line is solved exactly and the result is complete
    for the declared family only.
    """
    k = c.field
    d = c.dim
    one = k.one()
    out = []
    if candidates is not None:
        seen = set()
        for cand in candidates:
            vec = tuple(k.coerce(x) for x in cand)
            if len(vec) != d:
                raise DimensionMismatch("candidate axis has wrong length")
            eps = c.counit.apply(vec)[0]
            if eps == 0:
                continue
            x = tuple(k.div(v, eps) for v in vec)
            if x in seen:
                continue
            if _is_grouplike(c, x):
                seen.add(x)
                out.append(x)
        return out
    for vec in _vectors(k, d, budget):
        if c.counit.apply(vec)[0] != one:
            continue
        if _is_grouplike(c, vec):
            out.append(tuple(vec))
    return out


def _is_grouplike(c: Coalgebra, x: Sequence) -> bool:
    k = c.field
    lhs = c.comult.apply(x)
    d = c.dim
    for i in range(d):
        for j in range(d):
            if lhs[i * d + j] != k.mul(x[i], x[j]):
                return False
    return c.counit.apply(x)[0] == k.one()


def is_algebra_morphism(f: LinMap, a: Algebra, b: Algebra) -> bool:
    """f is linear A -> B with f(1) = 1 and f(xy) = f(x)f(y)."""
    if f.dom != a.dim or f.cod != b.dim:
        return False
    if compose(f, a.unit) != b.unit:
        return False
    return compose(f, a.mult) == compose(b.mult, kron(f, f))


def is_coalgebra_morphism(f: LinMap, c: Coalgebra, d: Coalgebra) -> bool:
    """f is linear C -> D with Delta.f = (f (x) f).Delta and eps.f = eps."""
    if f.dom != c.dim or f.cod != d.dim:
        return False
    if compose(d.counit, f) != c.counit:
        return False
    return compose(d.comult, f) == compose(kron(f, f), c.comult)


def _unital_affine_space(a: Algebra, b: Algebra,
                         zero_coords: frozenset[int] | None = None):
    """Particular solution + kernel basis for {f : f(1_A) = 1_B}, in vec(f)
    coordinates (row-major, f[q, t] at q*dim(A) + t), optionally with some
    coordinates pinned to zero."""
    k = same_field(a.field, b.field)
    da, db = a.dim, b.dim
    nvars = da * db
    # rows: db constraints  sum_t f[q, t] * unit_a[t] = unit_b[q]
    rows = []
    target = []
    unit_a = a.unit_vector()
    for q in range(db):
        row = [k.zero()] * nvars
        for t in range(da):
            row[q * da + t] = unit_a[t]
        rows.append(row)
        target.append(b.unit_vector()[q])
    if zero_coords:
        for coord in sorted(zero_coords):
            row = [k.zero()] * nvars
            row[coord] = k.one()
            rows.append(row)
            target.append(k.zero())
    system = LinMap.from_rows(k, rows)
    particular = solve(system, target)
    if particular is None:
        return None
    return particular, kernel_basis(system)


def algebra_morphisms(a: Algebra, b: Algebra, budget: int = DEFAULT_BUDGET,
                      zero_coords: frozenset[int] | None = None) -> list[LinMap]:
    """All algebra morphisms A -> B by exhaustive enumeration, lexicographic.

    The unit condition (and any pinned-zero coordinates) is linear, so only the
    residual affine space is enumerated; the budget bounds the candidates
    actually tried.
    """
    k = same_field(a.field, b.field)
    if k.is_rational:
        raise UnsupportedField("morphism enumeration needs a finite field")
    affine = _unital_affine_space(a, b, zero_coords)
    if affine is None:
        return []
    particular, kernel = affine
    free = len(kernel)
    total = k.char ** free
    if total > budget:
        raise BudgetExceeded(total, budget)
    da, db = a.dim, b.dim
    found = []
    for coeffs in itertools.product(k.elements(), repeat=free):
        vec = list(particular)
        for t, basis_vec in zip(coeffs, kernel):
            if t == 0:
                continue
            for i, x in enumerate(basis_vec):
                if x != 0:
                    vec[i] = k.add(vec[i], k.mul(t, x))
        f = LinMap(k, db, da, tuple(vec))
        if _is_multiplicative(f, a, b):
            found.append(f)
    found.sort(key=lambda m: m.entries)
    return found


def _is_multiplicative(f: LinMap, a: Algebra, b: Algebra) -> bool:
    k = f.field
    da = a.dim
    images = [f.col_at(t) for t in range(da)]
    for i in range(da):
        for j in range(da):
            prod = a.mult.col_at(i * da + j)
            lhs = f.apply(prod)
            rhs = b.product(images[i], images[j])
            if lhs != rhs:
                return False
    return True


def general_linear_group(field: Field, n: int, budget: int = DEFAULT_BUDGET) -> list[LinMap]:
    """All invertible n x n matrices over a prime field, lexicographic."""
    out = []
    for vec in _vectors(field, n * n, budget):
        m = LinMap(field, n, n, tuple(vec))
        if _invertible(m):
            out.append(m)
    return out

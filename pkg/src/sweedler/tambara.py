"""Tambara's coendomorphism algebra a(A, B) at the representation level.

The algebra is presented by generators x_{i,beta}, the coefficients along a
basis {a_i} of A of the universal map delta: B -> A (x) a(A,B), with the
relations that make delta unital and multiplicative.  Its n-dimensional
modules are exactly the algebra morphisms B -> M_n(A); both sides are
enumerated independently and matched through the canonical identification
rho(beta_j) = sum_i a_i (x) m(x_{i,j}).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceeded, UnsupportedField
from .fields import Field, same_field
from .linalg import LinMap, compose
from .structures import (
    DEFAULT_BUDGET,
    Algebra,
    algebra_morphisms,
    general_linear_group,
    matrix_algebra,
)

Word = tuple[int, ...]
Polynomial = dict[Word, object]  # word -> scalar


@dataclass(frozen=True)
class PresentedAlgebra:
    field: Field
    generators: tuple[str, ...]
    relations: tuple[tuple[tuple[object, Word], ...], ...]
    # each relation: ((coeff, word), ...) sorted by (len(word), word)


def _poly_add(field: Field, p: Polynomial, q: Polynomial, scale=None) -> Polynomial:
    out = dict(p)
    for word, coeff in q.items():
        if scale is not None:
            coeff = field.mul(scale, coeff)
        acc = field.add(out.get(word, field.zero()), coeff)
        if acc == 0:
            out.pop(word, None)
        else:
            out[word] = acc
    return out


def _poly_mul(field: Field, p: Polynomial, q: Polynomial) -> Polynomial:
    out: Polynomial = {}
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            word = w1 + w2
            acc = field.add(out.get(word, field.zero()), field.mul(c1, c2))
            if acc == 0:
                out.pop(word, None)
            else:
                out[word] = acc
    return out


def _canonical(poly: Polynomial) -> tuple[tuple[object, Word], ...]:
    return tuple((poly[w], w) for w in sorted(poly, key=lambda w: (len(w), w)))


def tambara_presentation(a: Algebra, b: Algebra,
                         a_labels: list[str] | None = None,
                         b_labels: list[str] | None = None) -> PresentedAlgebra:
    """Finite presentation of the coendomorphism algebra of (A, B).

    Generators x_{i,beta} for every A-basis index i and non-pivot B-basis
    element beta; the pivot coordinates of delta(1_B) = 1_A (x) 1 are
    eliminated.  One (possibly zero, then dropped) relation per pair of
    B-basis elements and A-coordinate.
    """
    k = same_field(a.field, b.field)
    da, db = a.dim, b.dim
    if a_labels is None:
        a_labels = [f"a{i}" for i in range(da)]
    if b_labels is None:
        b_labels = [f"b{j}" for j in range(db)]
    unit_b = b.unit_vector()
    pivot = next(j for j in range(db) if unit_b[j] != 0)
    generators = []
    gen_index: dict[tuple[int, int], int] = {}
    for i in range(da):
        for j in range(db):
            if j == pivot:
                continue
            gen_index[(i, j)] = len(generators)
            generators.append(f"x_{{{a_labels[i]},{b_labels[j]}}}")

    unit_a = a.unit_vector()
    inv_pivot = k.inv(unit_b[pivot])

    def image(i: int, j: int) -> Polynomial:
        """The linear polynomial representing x_{i,j} with the pivot eliminated:
        x_{i,pivot} = (1/u_pivot) ((1_A)_i * 1 - sum_{j != pivot} u_j x_{i,j})."""
        if j != pivot:
            return {(gen_index[(i, j)],): k.one()}
        poly: Polynomial = {}
        if unit_a[i] != 0:
            poly[()] = k.mul(inv_pivot, unit_a[i])
        for jj in range(db):
            if jj == pivot or unit_b[jj] == 0:
                continue
            poly = _poly_add(k, poly, {(gen_index[(i, jj)],): k.neg(k.mul(inv_pivot, unit_b[jj]))})
        return poly

    relations = []
    for j in range(db):
        for l in range(db):
            product_col = b.mult.col_at(j * db + l)  # beta_j * beta_l in B
            for t in range(da):
                # sum_{i,u} c^t_{iu} x_{i,j} x_{u,l}  -  sum_m (beta_j beta_l)_m x_{t,m}
                poly: Polynomial = {}
                for i in range(da):
                    pi = image(i, j)
                    if not pi:
                        continue
                    for u in range(da):
                        coeff = a.mult.entries[t * (da * da) + (i * da + u)]
                        if coeff == 0:
                            continue
                        pu = image(u, l)
                        if not pu:
                            continue
                        poly = _poly_add(k, poly, _poly_mul(k, pi, pu), scale=coeff)
                for m in range(db):
                    coeff = product_col[m]
                    if coeff == 0:
                        continue
                    poly = _poly_add(k, poly, image(t, m), scale=k.neg(coeff))
                if poly:
                    relations.append(_canonical(poly))
    return PresentedAlgebra(k, tuple(generators), tuple(relations))


# ---------------------------------------------------------------------------
# module enumeration and the correspondence with measurings


def _evaluate_word(word: Word, mats: list[LinMap], field: Field, n: int) -> LinMap:
    out = LinMap.identity(field, n)
    for g in word:
        out = compose(out, mats[g])
    return out


def _satisfies(p: PresentedAlgebra, mats: list[LinMap], n: int) -> bool:
    zero = LinMap.zero(p.field, n, n)
    for relation in p.relations:
        acc = zero
        for coeff, word in relation:
            acc = acc + _evaluate_word(word, mats, p.field, n).scale(coeff)
        if not acc.is_zero():
            return False
    return True


def tambara_modules(p: PresentedAlgebra, n: int,
                    budget: int = DEFAULT_BUDGET) -> list[tuple[LinMap, ...]]:
    """All n-dimensional modules: assignments of n x n matrices to the
    generators satisfying every relation; lexicographic order."""
    k = p.field
    if k.is_rational:
        raise UnsupportedField("module enumeration needs a finite field")
    g = len(p.generators)
    total = k.char ** (n * n * g)
    if total > budget:
        raise BudgetExceeded(total, budget)
    found = []
    cells = n * n
    for flat in itertools.product(k.elements(), repeat=cells * g):
        mats = [LinMap(k, n, n, tuple(flat[t * cells:(t + 1) * cells])) for t in range(g)]
        if _satisfies(p, mats, n):
            found.append(tuple(mats))
    return found


def module_orbits(p: PresentedAlgebra, modules: list[tuple[LinMap, ...]], n: int,
                  budget: int = DEFAULT_BUDGET) -> list[tuple[tuple[LinMap, ...], int]]:
    """GL_n(k)-conjugation orbits of modules, lexicographically smallest first."""
    from .linalg import invert

    k = p.field
    gl = general_linear_group(k, n, budget=budget)
    key = lambda mats: tuple(m.entries for m in mats)
    remaining = {key(mats): mats for mats in modules}
    orbits = []
    while remaining:
        seed = remaining.pop(min(remaining))
        orbit_keys = {key(seed)}
        for g in gl:
            ginv = invert(g)
            moved = tuple(compose(compose(g, m), ginv) for m in seed)
            orbit_keys.add(key(moved))
        for kk in orbit_keys:
            remaining.pop(kk, None)
        rep = min(orbit_keys)
        orbits.append((tuple(LinMap(k, n, n, e) for e in rep), len(orbit_keys)))
    orbits.sort(key=lambda pair: tuple(m.entries for m in pair[0]))
    return orbits


def module_to_matrix_morphism(p: PresentedAlgebra, a: Algebra, b: Algebra,
                              mats: tuple[LinMap, ...], n: int) -> LinMap:
    """The canonical identification: rho(beta_j) = sum_i a_i (x) m(x_{i,j})
    as an algebra morphism B -> M_n(A)."""
    k = p.field
    da, db = a.dim, b.dim
    unit_b = b.unit_vector()
    pivot = next(j for j in range(db) if unit_b[j] != 0)
    gen_index = {}
    g = 0
    for i in range(da):
        for j in range(db):
            if j != pivot:
                gen_index[(i, j)] = g
                g += 1
    unit_a = a.unit_vector()
    inv_pivot = k.inv(unit_b[pivot])

    def matrix_of(i: int, j: int) -> LinMap:
        if j != pivot:
            return mats[gen_index[(i, j)]]
        out = LinMap.identity(k, n).scale(k.mul(inv_pivot, unit_a[i]))
        for jj in range(db):
            if jj == pivot or unit_b[jj] == 0:
                continue
            out = out - mats[gen_index[(i, jj)]].scale(k.mul(inv_pivot, unit_b[jj]))
        return out

    entries = [k.zero()] * ((n * n * da) * db)
    for j in range(db):
        for i in range(da):
            block = matrix_of(i, j)
            for r in range(n):
                for s in range(n):
                    val = block.entries[r * n + s]
                    if val != 0:
                        entries[((r * n + s) * da + i) * db + j] = val
    return LinMap(k, n * n * da, db, tuple(entries))


def module_intertwiners(mats1: tuple[LinMap, ...], mats2: tuple[LinMap, ...],
                        field: Field, n: int) -> list[LinMap]:
    """Echelon basis of {T : T m1(x) = m2(x) T for every generator x}."""
    from .linalg import matrix_equation_kernel

    ops = []
    for m1, m2 in zip(mats1, mats2):
        ops.append(lambda t, m1=m1, m2=m2: compose(t, m1) - compose(m2, t))
    return matrix_equation_kernel(field, (n, n), ops)


@dataclass(frozen=True)
class CorrespondenceReport:
    n: int
    module_count: int
    morphism_count: int
    module_orbit_sizes: tuple[int, ...]
    morphism_orbit_sizes: tuple[int, ...]
    matched: bool
    orbits_matched: bool
    intertwiners_matched: bool

    @property
    def ok(self) -> bool:
        return self.matched and self.orbits_matched and self.intertwiners_matched


def _orbit_partition(items: dict, conjugates) -> set[frozenset]:
    """Partition of the key set of ``items`` by the closure ``conjugates(value)``."""
    remaining = dict(items)
    partition = set()
    while remaining:
        seed_key = min(remaining)
        seed = remaining.pop(seed_key)
        orbit = {seed_key} | set(conjugates(seed))
        for kk in orbit:
            remaining.pop(kk, None)
        partition.add(frozenset(orbit))
    return partition


def correspondence_check(a: Algebra, b: Algebra, n: int,
                         budget: int = DEFAULT_BUDGET) -> CorrespondenceReport:
    """Verify that n-dimensional modules of a(A, B) are exactly the algebra
    morphisms B -> M_n(A), compatibly with conjugation orbits and intertwiners."""
    from .linalg import invert
    from .measurings import (
        conjugate_measuring,
        intertwiners as measuring_intertwiners,
        matrix_morphism_from_measuring,
        measuring_from_matrix_morphism,
    )

    p = tambara_presentation(a, b)
    modules = tambara_modules(p, n, budget=budget)
    morphisms = algebra_morphisms(b, matrix_algebra(a, n), budget=budget)
    translate = {tuple(m.entries for m in mats):
                 module_to_matrix_morphism(p, a, b, mats, n).entries
                 for mats in modules}
    matched = sorted(translate.values()) == sorted(rho.entries for rho in morphisms)

    gl = general_linear_group(p.field, n, budget=budget)

    def module_conjugates(mats):
        for g in gl:
            ginv = invert(g)
            yield tuple(compose(compose(g, m), ginv).entries for m in mats)

    def morphism_conjugates(rho):
        mu = measuring_from_matrix_morphism(rho, b, a, n)
        for g in gl:
            yield matrix_morphism_from_measuring(conjugate_measuring(mu, g)).entries

    module_partition = _orbit_partition(
        {tuple(m.entries for m in mats): mats for mats in modules}, module_conjugates)
    morphism_partition = _orbit_partition(
        {rho.entries: rho for rho in morphisms}, morphism_conjugates)
    translated_partition = {frozenset(translate[key] for key in orbit)
                            for orbit in module_partition}
    orbits_matched = translated_partition == morphism_partition

    # intertwiners transport: the same T solves both sides, in the same basis
    intertwiners_ok = True
    for mats1 in modules:
        rho1 = module_to_matrix_morphism(p, a, b, mats1, n)
        mu1 = measuring_from_matrix_morphism(rho1, b, a, n)
        for mats2 in modules:
            rho2 = module_to_matrix_morphism(p, a, b, mats2, n)
            mu2 = measuring_from_matrix_morphism(rho2, b, a, n)
            lhs = [t.entries for t in module_intertwiners(mats1, mats2, p.field, n)]
            rhs = [iw.f.entries for iw in measuring_intertwiners(mu1, mu2)]
            if lhs != rhs:
                intertwiners_ok = False
    return CorrespondenceReport(
        n=n,
        module_count=len(modules),
        morphism_count=len(morphisms),
        module_orbit_sizes=tuple(sorted((len(o) for o in module_partition), reverse=True)),
        morphism_orbit_sizes=tuple(sorted((len(o) for o in morphism_partition), reverse=True)),
        matched=matched,
        orbits_matched=orbits_matched,
        intertwiners_matched=intertwiners_ok,
    )

"""The structure-constant document format (canonical JSON).

A structure document carries ``field`` ("Q" or "F<p>"), ``dim``, ``basis``
labels, an algebra part (``unit`` vector + ``mult`` triples), a coalgebra part
(``counit`` vector + ``comult`` entries), an optional ``antipode`` and
optional ``degrees``.  Omitted mult/comult entries are zero, with one
exception: when the unit is supported on a single basis vector the products
forced by unitality are implied and must be omitted.  Serialization is
canonical and byte-exact under round-trips; the precise grammar lives in
docs/format.md.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ParseError, ValidationError
from .fields import Field, parse_field
from .graded import (
    GradedAlgebra,
    GradedBialgebra,
    GradedCoalgebra,
    GradedHopf,
    GradedSpace,
    validate_graded,
)
from .linalg import LinMap
from .measurings import Measuring, validate_measuring
from .structures import (
    Algebra,
    Bialgebra,
    Coalgebra,
    HopfAlgebra,
    validate_algebra,
    validate_bialgebra,
    validate_coalgebra,
    validate_hopf,
)

_STRUCTURE_KEYS = ("field", "dim", "basis", "unit", "mult",
                   "comult", "counit", "antipode", "degrees")


@dataclass(frozen=True)
class Document:
    """A parsed structure document: the validated value plus its basis labels."""

    value: object
    labels: tuple[str, ...]

    @property
    def field(self) -> Field:
        return _underlying(self.value)[2]

    @property
    def dim(self) -> int:
        return len(self.labels)


def _underlying(value):
    """(algebra | None, coalgebra | None, field, antipode | None, degrees | None)."""
    degrees = None
    if isinstance(value, (GradedAlgebra, GradedCoalgebra, GradedBialgebra, GradedHopf)):
        degrees = value.space.degrees
        value = (value.algebra if isinstance(value, GradedAlgebra) else
                 value.coalgebra if isinstance(value, GradedCoalgebra) else
                 value.bialgebra if isinstance(value, GradedBialgebra) else
                 value.hopf)
    if isinstance(value, HopfAlgebra):
        return value.algebra, value.coalgebra, value.field, value.antipode, degrees
    if isinstance(value, Bialgebra):
        return value.algebra, value.coalgebra, value.field, None, degrees
    if isinstance(value, Algebra):
        return value, None, value.field, None, degrees
    if isinstance(value, Coalgebra):
        return None, value, value.field, None, degrees
    raise TypeError(f"not a structure value: {type(value).__name__}")


# ---------------------------------------------------------------------------
# serialization


def show_vector(field: Field, vec) -> list[str]:
    return [field.show(x) for x in vec]


def _unit_support(algebra: Algebra) -> int | None:
    """The index of the single supporting basis vector of the unit, if unique."""
    support = [i for i, x in enumerate(algebra.unit_vector()) if x != 0]
    return support[0] if len(support) == 1 else None


def structure_to_dict(doc: Document) -> dict:
    algebra, coalgebra, field, antipode, degrees = _underlying(doc.value)
    dim = doc.dim
    out: dict = {"field": str(field), "dim": dim, "basis": list(doc.labels)}
    if algebra is not None:
        out["unit"] = show_vector(field, algebra.unit_vector())
        triples = []
        implied = _unit_support(algebra)
        for i in range(dim):
            for j in range(dim):
                if implied is not None and (i == implied or j == implied):
                    continue
                col = algebra.mult.col_at(i * dim + j)
                if any(x != 0 for x in col):
                    triples.append([i, j, show_vector(field, col)])
        out["mult"] = triples
    if coalgebra is not None:
        entries = []
        for i in range(dim):
            col = coalgebra.comult.col_at(i)
            if any(x != 0 for x in col):
                matrix = [show_vector(field, col[r * dim:(r + 1) * dim]) for r in range(dim)]
                entries.append([i, matrix])
        out["comult"] = entries
        out["counit"] = show_vector(field, coalgebra.counit.row_at(0))
    if antipode is not None:
        out["antipode"] = [show_vector(field, antipode.col_at(i)) for i in range(dim)]
    if degrees is not None:
        out["degrees"] = list(degrees)
    return out


def canonical_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def serialize_document(doc: Document) -> str:
    return canonical_json(structure_to_dict(doc))


# ---------------------------------------------------------------------------
# parsing


def _want(cond: bool, message: str, path: str):
    if not cond:
        raise ParseError(message, path=path)


def _parse_vector(field: Field, data, length: int, path: str) -> tuple:
    _want(isinstance(data, list) and len(data) == length,
          f"expected a vector of {length} scalars", path)
    return tuple(field.parse(x) for x in data)


def parse_structure_dict(raw: dict) -> Document:
    _want(isinstance(raw, dict), "document must be an object", "$")
    for key in raw:
        _want(key in _STRUCTURE_KEYS, f"unknown key {key!r}", key)
    for key in ("field", "dim", "basis"):
        _want(key in raw, f"missing key {key!r}", "$")
    field = parse_field(raw["field"]) if isinstance(raw["field"], str) else None
    _want(field is not None, "field must be a string", "field")
    dim = raw["dim"]
    _want(isinstance(dim, int) and dim >= 0, "dim must be a nonnegative integer", "dim")
    basis = raw["basis"]
    _want(isinstance(basis, list) and len(basis) == dim
          and all(isinstance(x, str) and x for x in basis)
          and len(set(basis)) == dim,
          "basis must list dim distinct nonempty labels", "basis")

    has_alg = "unit" in raw or "mult" in raw
    has_coalg = "counit" in raw or "comult" in raw
    _want(not has_alg or ("unit" in raw and "mult" in raw),
          "an algebra part needs both unit and mult", "$")
    _want(not has_coalg or ("counit" in raw and "comult" in raw),
          "a coalgebra part needs both counit and comult", "$")
    _want(has_alg or has_coalg, "document carries no structure", "$")
    _want("antipode" not in raw or (has_alg and has_coalg),
          "an antipode needs a full bialgebra", "antipode")

    algebra = _parse_algebra(field, dim, raw) if has_alg else None
    coalgebra = _parse_coalgebra(field, dim, raw) if has_coalg else None
    antipode = None
    if "antipode" in raw:
        data = raw["antipode"]
        _want(isinstance(data, list) and len(data) == dim, "antipode must list dim images",
              "antipode")
        cols = [_parse_vector(field, v, dim, f"antipode[{i}]") for i, v in enumerate(data)]
        antipode = LinMap.make(field, dim, dim,
                               [cols[j][r] for r in range(dim) for j in range(dim)])
    degrees = None
    if "degrees" in raw:
        data = raw["degrees"]
        _want(isinstance(data, list) and len(data) == dim
              and all(isinstance(x, int) for x in data),
              "degrees must list dim integers", "degrees")
        degrees = tuple(data)

    value = _assemble(algebra, coalgebra, antipode, degrees, field)
    _validate(value)
    return Document(value, tuple(basis))


def _parse_algebra(field: Field, dim: int, raw: dict) -> Algebra:
    _want(dim >= 1, "an algebra needs dim >= 1", "dim")
    unit_vec = _parse_vector(field, raw["unit"], dim, "unit")
    support = [i for i, x in enumerate(unit_vec) if x != 0]
    _want(bool(support), "the unit vector cannot be zero", "unit")
    implied = support[0] if len(support) == 1 else None
    zero = field.zero()
    cols: dict[tuple[int, int], tuple] = {}
    if implied is not None:
        # products with the unit axis are forced: e_t e_j = (1/u) e_j
        inv = field.inv(unit_vec[implied])
        for j in range(dim):
            vec = [zero] * dim
            vec[j] = inv
            cols[(implied, j)] = tuple(vec)
            cols[(j, implied)] = tuple(vec)
    data = raw["mult"]
    _want(isinstance(data, list), "mult must be a list of triples", "mult")
    last = None
    for idx, triple in enumerate(data):
        path = f"mult[{idx}]"
        _want(isinstance(triple, list) and len(triple) == 3, "expected [i, j, vector]", path)
        i, j, vec_data = triple
        _want(isinstance(i, int) and isinstance(j, int) and 0 <= i < dim and 0 <= j < dim,
              "indices out of range", path)
        _want(last is None or (i, j) > last, "triples must be strictly sorted by (i, j)", path)
        last = (i, j)
        _want(implied is None or (i != implied and j != implied),
              "products with the unit axis are implied and must be omitted", path)
        vec = _parse_vector(field, vec_data, dim, path)
        _want(any(x != 0 for x in vec), "zero triples must be omitted", path)
        cols[(i, j)] = vec
    entries = []
    for t in range(dim):
        for i in range(dim):
            for j in range(dim):
                col = cols.get((i, j))
                entries.append(col[t] if col is not None else zero)
    return Algebra(mult=LinMap(field, dim, dim * dim, tuple(entries)),
                   unit=LinMap.make(field, dim, 1, unit_vec))


def _parse_coalgebra(field: Field, dim: int, raw: dict) -> Coalgebra:
    counit_vec = _parse_vector(field, raw["counit"], dim, "counit")
    data = raw["comult"]
    _want(isinstance(data, list), "comult must be a list of [i, matrix] entries", "comult")
    zero = field.zero()
    images: dict[int, list] = {}
    last = None
    for idx, entry in enumerate(data):
        path = f"comult[{idx}]"
        _want(isinstance(entry, list) and len(entry) == 2, "expected [i, matrix]", path)
        i, matrix = entry
        _want(isinstance(i, int) and 0 <= i < dim, "index out of range", path)
        _want(last is None or i > last, "entries must be strictly sorted by index", path)
        last = i
        _want(isinstance(matrix, list) and len(matrix) == dim, "expected a dim x dim matrix", path)
        rows = [_parse_vector(field, row, dim, f"{path}[{r}]") for r, row in enumerate(matrix)]
        flat = [x for row in rows for x in row]
        _want(any(x != 0 for x in flat), "zero entries must be omitted", path)
        images[i] = flat
    entries = []
    for rc in range(dim * dim):
        for i in range(dim):
            img = images.get(i)
            entries.append(img[rc] if img is not None else zero)
    return Coalgebra(comult=LinMap(field, dim * dim, dim, tuple(entries)),
                     counit=LinMap.make(field, 1, dim, counit_vec))


def _assemble(algebra, coalgebra, antipode, degrees, field):
    if algebra is not None and coalgebra is not None:
        bialgebra = Bialgebra(algebra, coalgebra)
        core = HopfAlgebra(bialgebra, antipode) if antipode is not None else bialgebra
    else:
        core = algebra if algebra is not None else coalgebra
    if degrees is None:
        return core
    space = GradedSpace(field, degrees)
    if isinstance(core, HopfAlgebra):
        return GradedHopf(core, space)
    if isinstance(core, Bialgebra):
        return GradedBialgebra(core, space)
    if isinstance(core, Algebra):
        return GradedAlgebra(core, space)
    return GradedCoalgebra(core, space)


def _validate(value):
    if isinstance(value, (GradedAlgebra, GradedCoalgebra, GradedBialgebra, GradedHopf)):
        report = validate_graded(value)
    elif isinstance(value, HopfAlgebra):
        report = validate_hopf(value)
    elif isinstance(value, Bialgebra):
        report = validate_bialgebra(value)
    elif isinstance(value, Algebra):
        report = validate_algebra(value)
    else:
        report = validate_coalgebra(value)
    if not report.ok:
        raise ValidationError(str(report), report)


def parse_document(text: str) -> Document:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    return parse_structure_dict(raw)


# ---------------------------------------------------------------------------
# measuring documents


@dataclass(frozen=True)
class MeasuringDocument:
    a_ref: str
    b_ref: str
    measuring: Measuring


def measuring_to_dict(mdoc: MeasuringDocument) -> dict:
    m = mdoc.measuring
    field = m.field
    entries = []
    for t in range(m.a.dim):
        for x in range(m.xdim):
            col = m.psi.col_at(t * m.xdim + x)
            if any(v != 0 for v in col):
                entries.append([[t, x], show_vector(field, col)])
    return {"a": mdoc.a_ref, "b": mdoc.b_ref, "xdim": m.xdim, "psi": entries}


def serialize_measuring_document(mdoc: MeasuringDocument) -> str:
    return canonical_json(measuring_to_dict(mdoc))


def parse_measuring_document(text: str, loader) -> MeasuringDocument:
    """``loader(ref)`` must return the referenced structure Document."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    _want(isinstance(raw, dict), "measuring document must be an object", "$")
    for key in raw:
        _want(key in ("a", "b", "xdim", "psi"), f"unknown key {key!r}", key)
    for key in ("a", "b", "xdim", "psi"):
        _want(key in raw, f"missing key {key!r}", "$")
    _want(isinstance(raw["a"], str) and isinstance(raw["b"], str),
          "a and b must be document references", "$")
    a_doc = loader(raw["a"])
    b_doc = loader(raw["b"])
    a = _require_algebra(a_doc, "a")
    b = _require_algebra(b_doc, "b")
    xdim = raw["xdim"]
    _want(isinstance(xdim, int) and xdim >= 0, "xdim must be a nonnegative integer", "xdim")
    field = a.field
    zero = field.zero()
    cols: dict[tuple[int, int], tuple] = {}
    last = None
    for idx, entry in enumerate(raw["psi"]):
        path = f"psi[{idx}]"
        _want(isinstance(entry, list) and len(entry) == 2, "expected [[a, x], vector]", path)
        pair, vec_data = entry
        _want(isinstance(pair, list) and len(pair) == 2
              and all(isinstance(v, int) for v in pair), "expected [a-index, x-index]", path)
        t, x = pair
        _want(0 <= t < a.dim and 0 <= x < xdim, "indices out of range", path)
        _want(last is None or (t, x) > last, "entries must be strictly sorted", path)
        last = (t, x)
        vec = _parse_vector(field, vec_data, xdim * b.dim, path)
        _want(any(v != 0 for v in vec), "zero entries must be omitted", path)
        cols[(t, x)] = vec
    entries = []
    for r in range(xdim * b.dim):
        for t in range(a.dim):
            for x in range(xdim):
                col = cols.get((t, x))
                entries.append(col[r] if col is not None else zero)
    psi = LinMap(field, xdim * b.dim, a.dim * xdim, tuple(entries))
    measuring = Measuring(a, b, xdim, psi)
    report = validate_measuring(measuring)
    if not report.ok:
        raise ValidationError(f"not a measuring: {report}", report)
    return MeasuringDocument(raw["a"], raw["b"], measuring)


def _require_algebra(doc: Document, which: str) -> Algebra:
    algebra = _underlying(doc.value)[0]
    if algebra is None:
        raise ValidationError(f"referenced document {which!r} has no algebra part")
    return algebra


def algebra_of(doc: Document) -> Algebra | None:
    return _underlying(doc.value)[0]


def coalgebra_of(doc: Document) -> Coalgebra | None:
    return _underlying(doc.value)[1]

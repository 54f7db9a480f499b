"""Batch command-line front end.

Every command reads structure/measuring documents, runs one operation and
emits a deterministic JSON report (or a bare result document with
``--format document``).  Negative mathematical findings (no antipode, zero
grouplikes) are successful runs with status 0; only operational problems
(parse, validation, budget, unsupported inputs) are nonzero:

    0 success          3 validation error     5 unsupported input or
    1 internal error   4 budget exceeded        precondition violation
    2 parse error
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import documents as docs
from .errors import (
    BudgetExceeded,
    IncompatibleMeasurings,
    NotCommutative,
    ParseError,
    PreconditionViolated,
    SweedlerError,
    UnsupportedField,
    ValidationError,
)
from .graded import (
    GradedAlgebra,
    GradedBialgebra,
    GradedCoalgebra,
    GradedHopf,
    degree0_part,
    graded_dual,
    is_connected,
    validate_graded,
)
from .linalg import LinMap, invert
from .measurings import (
    compose_measuring,
    enumerate_measurings,
    tensor_measuring_bialgebra,
    tensor_measuring_endo,
)
from .reconstruction import reconstruct
from .structures import (
    DEFAULT_BUDGET,
    Algebra,
    Bialgebra,
    Coalgebra,
    HopfAlgebra,
    algebra_morphisms,
    convolution_algebra,
    dual_algebra,
    dual_bialgebra,
    dual_coalgebra,
    find_antipode,
    find_opantipode,
    fusion_operators,
    grouplikes,
)
from .tambara import correspondence_check, tambara_presentation

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_BUDGET = 4
EXIT_UNSUPPORTED = 5


def _read_document(path: str) -> docs.Document:
    return docs.parse_document(Path(path).read_text())


def _read_measuring(path: str) -> docs.MeasuringDocument:
    base = Path(path).parent

    def loader(ref: str) -> docs.Document:
        return docs.parse_document((base / ref).read_text())

    return docs.parse_measuring_document(Path(path).read_text(), loader)


def _matrix(f: LinMap) -> list[list[str]]:
    return [docs.show_vector(f.field, f.row_at(r)) for r in range(f.cod)]


def _vector(field, vec) -> list[str]:
    return docs.show_vector(field, vec)


def _kind(value) -> str:
    return {
        Algebra: "algebra", Coalgebra: "coalgebra", Bialgebra: "bialgebra",
        HopfAlgebra: "hopf", GradedAlgebra: "graded algebra",
        GradedCoalgebra: "graded coalgebra", GradedBialgebra: "graded bialgebra",
        GradedHopf: "graded hopf",
    }[type(value)]


# ---------------------------------------------------------------------------
# command handlers: each returns (result dict, is_document)


def cmd_validate(args):
    doc = _read_document(args.document)
    return {"input": args.document, "kind": _kind(doc.value), "dim": doc.dim,
            "valid": True}, False


def cmd_dual(args):
    doc = _read_document(args.document)
    value = doc.value
    labels = tuple(f"{name}*" for name in doc.labels)
    if isinstance(value, (GradedAlgebra, GradedCoalgebra, GradedBialgebra, GradedHopf)):
        dual = graded_dual(value)
    elif isinstance(value, HopfAlgebra):
        dual = HopfAlgebra(dual_bialgebra(value.bialgebra), value.antipode.transpose())
    elif isinstance(value, Bialgebra):
        dual = dual_bialgebra(value)
    elif isinstance(value, Algebra):
        dual = dual_coalgebra(value)
    else:
        dual = dual_algebra(value)
    return docs.structure_to_dict(docs.Document(dual, labels)), True


def cmd_convolution(args):
    cdoc = _read_document(args.coalgebra)
    bdoc = _read_document(args.algebra)
    c = docs.coalgebra_of(cdoc)
    b = docs.algebra_of(bdoc)
    if c is None:
        raise ValidationError("first input needs a coalgebra part")
    if b is None:
        raise ValidationError("second input needs an algebra part")
    conv = convolution_algebra(c, b)
    labels = tuple(f"[{cl}->{bl}]" for cl in cdoc.labels for bl in bdoc.labels)
    return docs.structure_to_dict(docs.Document(conv, labels)), True


def _require_bialgebra(doc: docs.Document) -> Bialgebra:
    value = doc.value
    if isinstance(value, (GradedBialgebra, GradedHopf)):
        value = value.bialgebra if isinstance(value, GradedBialgebra) else value.hopf
    if isinstance(value, HopfAlgebra):
        return value.bialgebra
    if isinstance(value, Bialgebra):
        return value
    raise ValidationError("input must be a bialgebra document")


def cmd_fusion(args):
    b = _require_bialgebra(_read_document(args.document))
    ops = fusion_operators(b)
    out = {}
    for name, op in [("h", ops.h), ("h_prime", ops.h_prime),
                     ("h_bar", ops.h_bar), ("h_bar_prime", ops.h_bar_prime)]:
        invertible = True
        try:
            invert(op)
        except SweedlerError:
            invertible = False
        out[name] = {"invertible": invertible, "matrix": _matrix(op)}
    return out, False


def cmd_antipode(args):
    b = _require_bialgebra(_read_document(args.document))
    found = find_antipode(b)
    if found is None:
        return {"antipode": {"present": False}}, False
    return {"antipode": {"present": True, "matrix": _matrix(found.antipode)}}, False


def cmd_opantipode(args):
    b = _require_bialgebra(_read_document(args.document))
    found = find_opantipode(b)
    if found is None:
        return {"opantipode": {"present": False}}, False
    return {"opantipode": {"present": True, "matrix": _matrix(found)}}, False


def cmd_grouplikes(args):
    doc = _read_document(args.document)
    c = docs.coalgebra_of(doc)
    if c is None:
        raise ValidationError("input needs a coalgebra part")
    found = grouplikes(c, budget=args.budget)
    return {"count": len(found),
            "grouplikes": [_vector(c.field, v) for v in found]}, False


def cmd_morphisms(args):
    a = docs.algebra_of(_read_document(args.source))
    b = docs.algebra_of(_read_document(args.target))
    if a is None or b is None:
        raise ValidationError("both inputs need algebra parts")
    found = algebra_morphisms(a, b, budget=args.budget)
    return {"count": len(found), "morphisms": [_matrix(f) for f in found]}, False


def cmd_enumerate_measurings(args):
    a = docs.algebra_of(_read_document(args.source))
    b = docs.algebra_of(_read_document(args.target))
    if a is None or b is None:
        raise ValidationError("both inputs need algebra parts")
    report = enumerate_measurings(a, b, args.n, budget=args.budget)
    orbits = [{"size": size,
               "representative": docs.measuring_to_dict(
                   docs.MeasuringDocument(args.source, args.target, rep))}
              for rep, size in report.orbits]
    return {"total": report.total_count, "orbit_count": len(report.orbits),
            "orbits": orbits}, False


def cmd_reconstruct(args):
    mdocs = [_read_measuring(path) for path in args.measurings]
    generated = reconstruct([m.measuring for m in mdocs],
                            auto_intertwiners=args.auto_intertwiners)
    d = generated.d
    labels = tuple(f"d{i}" for i in range(d.dim))
    pairing_entries = []
    for t in range(generated.a.dim):
        for j in range(d.dim):
            col = generated.pairing.col_at(t * d.dim + j)
            if any(x != 0 for x in col):
                pairing_entries.append([[t, j], _vector(d.field, col)])
    return {
        "a": mdocs[0].a_ref if mdocs else None,
        "b": mdocs[0].b_ref if mdocs else None,
        "d": docs.structure_to_dict(docs.Document(d, labels)),
        "pairing": pairing_entries,
        "projections": [_matrix(p) for p in generated.projections],
    }, True


def cmd_tensor(args):
    m1 = _read_measuring(args.first)
    m2 = _read_measuring(args.second)
    mode = args.mode
    if mode == "auto":
        base = Path(args.first).parent
        a_doc = docs.parse_document((base / m1.a_ref).read_text())
        try:
            bialgebra = _require_bialgebra(a_doc)
            mode = "bialgebra"
        except ValidationError:
            mode = "endo"
    if mode == "bialgebra":
        base = Path(args.first).parent
        a_doc = docs.parse_document((base / m1.a_ref).read_text())
        result = tensor_measuring_bialgebra(m1.measuring, m2.measuring,
                                            _require_bialgebra(a_doc))
    else:
        result = tensor_measuring_endo(m1.measuring, m2.measuring)
    out = docs.MeasuringDocument(m1.a_ref, m1.b_ref, result)
    return docs.measuring_to_dict(out), True


def cmd_compose(args):
    m_ab = _read_measuring(args.first)
    m_bc = _read_measuring(args.second)
    result = compose_measuring(m_ab.measuring, m_bc.measuring)
    out = docs.MeasuringDocument(m_ab.a_ref, m_bc.b_ref, result)
    return docs.measuring_to_dict(out), True


def cmd_graded_check(args):
    doc = _read_document(args.document)
    value = doc.value
    if not isinstance(value, (GradedAlgebra, GradedCoalgebra, GradedBialgebra, GradedHopf)):
        raise ValidationError("input carries no degrees")
    report = validate_graded(value)
    connected = None
    if all(d >= 0 for d in value.space.degrees):
        connected = is_connected(value.space)
    return {"valid": report.ok, "connected": connected,
            "failures": [{"axiom": f.axiom, "witness": list(f.witness)}
                         for f in report.failures]}, False


def cmd_degree0(args):
    doc = _read_document(args.document)
    value = doc.value
    if not isinstance(value, (GradedAlgebra, GradedBialgebra, GradedHopf)):
        raise ValidationError("input must be a graded algebra document")
    if isinstance(value, (GradedBialgebra, GradedHopf)):
        underlying = value.bialgebra.algebra if isinstance(value, GradedBialgebra) \
            else value.hopf.algebra
        graded = GradedAlgebra(underlying, value.space)
    else:
        graded = value
    part = degree0_part(graded)
    labels = tuple(lbl for lbl, d in zip(doc.labels, graded.degrees) if d == 0)
    return docs.structure_to_dict(docs.Document(part, labels)), True


def cmd_tambara_presentation(args):
    adoc = _read_document(args.source)
    bdoc = _read_document(args.target)
    a = docs.algebra_of(adoc)
    b = docs.algebra_of(bdoc)
    if a is None or b is None:
        raise ValidationError("both inputs need algebra parts")
    pres = tambara_presentation(a, b, list(adoc.labels), list(bdoc.labels))
    relations = [[[pres.field.show(coeff), list(word)] for coeff, word in rel]
                 for rel in pres.relations]
    return {"field": str(pres.field), "generators": list(pres.generators),
            "relations": relations}, True


def cmd_tambara_check(args):
    a = docs.algebra_of(_read_document(args.source))
    b = docs.algebra_of(_read_document(args.target))
    if a is None or b is None:
        raise ValidationError("both inputs need algebra parts")
    report = correspondence_check(a, b, args.n, budget=args.budget)
    if not report.ok:
        raise AssertionError("internal error: the canonical identification failed")
    return {"n": report.n, "module_count": report.module_count,
            "morphism_count": report.morphism_count,
            "module_orbit_sizes": list(report.module_orbit_sizes),
            "morphism_orbit_sizes": list(report.morphism_orbit_sizes),
            "matched": report.matched, "orbits_matched": report.orbits_matched,
            "intertwiners_matched": report.intertwiners_matched}, False


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="enumeration candidate budget")
    shared.add_argument("--seed", type=int, default=None,
                        help="seed recorded in the report (for reproducibility logs)")
    shared.add_argument("--output", type=str, default=None, help="write the report here")
    shared.add_argument("--format", choices=["report", "document"], default="report")
    shared.add_argument("--auto-intertwiners", dest="auto_intertwiners",
                        type=lambda v: v.lower() in ("1", "true", "yes"), default=True,
                        metavar="BOOL",
                        help="use a full Hom-space basis in reconstruct (default true)")
    parser = argparse.ArgumentParser(
        prog="sweedler",
        description="exact computations with algebras, Hopf algebras and measurings")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, *specs, **kwargs):
        p = sub.add_parser(name, parents=[shared], **kwargs)
        for spec in specs:
            p.add_argument(*spec[0], **spec[1])
        p.set_defaults(handler=handler)
        return p

    add("validate", cmd_validate, ((["document"], {})),
        help="parse and revalidate a structure document")
    add("dual", cmd_dual, ((["document"], {})),
        help="linear dual (algebra <-> coalgebra, full dual for bialgebras)")
    add("convolution", cmd_convolution, ((["coalgebra"], {})), ((["algebra"], {})),
        help="convolution algebra [C, B]")
    add("fusion", cmd_fusion, ((["document"], {})),
        help="the four fusion operators and their invertibility")
    add("antipode", cmd_antipode, ((["document"], {})),
        help="solve for an antipode (absent is a successful result)")
    add("opantipode", cmd_opantipode, ((["document"], {})),
        help="solve for an opantipode")
    add("grouplikes", cmd_grouplikes, ((["document"], {})),
        help="enumerate grouplike elements (finite fields)")
    add("morphisms", cmd_morphisms, ((["source"], {})), ((["target"], {})),
        help="enumerate algebra morphisms (finite fields)")
    add("enumerate-measurings", cmd_enumerate_measurings,
        ((["source"], {})), ((["target"], {})), ((["n"], {"type": int})),
        help="n-dimensional measurings with conjugation orbits")
    add("reconstruct", cmd_reconstruct,
        ((["measurings"], {"nargs": "+"})),
        help="generated subcoalgebra of a family of measurings")
    p = add("tensor", cmd_tensor, ((["first"], {})), ((["second"], {})),
            help="tensor product of measurings")
    p.add_argument("--mode", choices=["auto", "bialgebra", "endo"], default="auto")
    add("compose", cmd_compose, ((["first"], {})), ((["second"], {})),
        help="composition of measurings across a common middle algebra")
    add("graded-check", cmd_graded_check, ((["document"], {})),
        help="homogeneity and Koszul-braided axioms of a graded document")
    add("degree0", cmd_degree0, ((["document"], {})),
        help="degree-0 part of a graded algebra")
    add("tambara-presentation", cmd_tambara_presentation,
        ((["source"], {})), ((["target"], {})),
        help="presentation of the coendomorphism algebra a(A, B)")
    p = add("tambara-check", cmd_tambara_check, ((["source"], {})), ((["target"], {})),
            help="match a(A, B)-modules with morphisms B -> M_n(A)")
    p.add_argument("--n", type=int, required=True)
    return parser


def _emit(args, payload: dict, is_document: bool) -> None:
    if args.format == "document" and is_document:
        text = docs.canonical_json(payload)
    else:
        report = {"command": args.command, "status": "ok"}
        if args.seed is not None:
            report["seed"] = args.seed
        report["result"] = payload
        text = docs.canonical_json(report)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_error(args, exc: Exception, code: int) -> int:
    report = {"command": getattr(args, "command", None), "status": "error",
              "error": type(exc).__name__, "message": str(exc)}
    failures = getattr(exc, "report", None)
    if failures is not None:
        report["failures"] = [{"axiom": f.axiom, "witness": list(f.witness)}
                              for f in failures.failures]
    text = docs.canonical_json(report)
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, is_document = args.handler(args)
    except ParseError as exc:
        return _emit_error(args, exc, EXIT_PARSE)
    except ValidationError as exc:
        return _emit_error(args, exc, EXIT_VALIDATION)
    except BudgetExceeded as exc:
        return _emit_error(args, exc, EXIT_BUDGET)
    except (UnsupportedField, PreconditionViolated, IncompatibleMeasurings,
            NotCommutative) as exc:
        return _emit_error(args, exc, EXIT_UNSUPPORTED)
    except OSError as exc:
        return _emit_error(args, exc, EXIT_PARSE)
    except SweedlerError as exc:
        return _emit_error(args, exc, EXIT_VALIDATION)
    except AssertionError as exc:
        return _emit_error(args, exc, EXIT_INTERNAL)
    _emit(args, payload, is_document)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Regenerate the committed fixture documents in tests/fixtures/.

Everything is produced through the canonical serializer, so running this
script must leave a clean git tree.
"""

from __future__ import annotations

from pathlib import Path

from sweedler.documents import Document, MeasuringDocument, canonical_json, \
    measuring_to_dict, serialize_document
from sweedler.fields import GF, QQ
from sweedler.linalg import LinMap
from sweedler.measurings import (
    identity_measuring,
    measuring_from_matrix_morphism,
    regular_measuring,
)
from sweedler.structures import matrix_algebra, trivial_algebra
from sweedler.zoo import (
    cyclic_group_hopf,
    dual_numbers,
    graded_dual_numbers,
    graded_line_hopf,
    idempotent_monoid_bialgebra,
    involution_algebra,
    sweedler_hopf,
)

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def write(name: str, text: str) -> None:
    (OUT / name).write_text(text)
    print(f"wrote {name}")


def structure(name: str, value, labels) -> None:
    write(name, serialize_document(Document(value, tuple(labels))))


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    f2, f3 = GF(2), GF(3)

    structure("f2_trivial.json", trivial_algebra(f2), ["1"])
    structure("q_trivial.json", trivial_algebra(QQ), ["1"])
    structure("f2_c2.json", cyclic_group_hopf(f2, 2), ["1", "g"])
    structure("q_c2.json", cyclic_group_hopf(QQ, 2), ["1", "g"])
    structure("f3_c2.json", cyclic_group_hopf(f3, 2), ["1", "g"])
    structure("f2_c3.json", cyclic_group_hopf(f2, 3), ["1", "g", "g2"])
    structure("sweedler4_f3.json", sweedler_hopf(f3), ["1", "g", "x", "gx"])
    structure("idempotent_f2.json", idempotent_monoid_bialgebra(f2), ["1", "e"])
    structure("f2_dualnum.json", dual_numbers(f2), ["1", "y"])
    structure("m2_f2.json", matrix_algebra(trivial_algebra(f2), 2),
              ["e00", "e01", "e10", "e11"])
    structure("graded_line_f2.json", graded_line_hopf(f2, 1), ["1", "x"])
    structure("graded_line_q.json", graded_line_hopf(QQ, 1), ["1", "x"])
    structure("graded_dualnum_f2_deg1.json", graded_dual_numbers(f2, 1), ["1", "y"])
    structure("graded_dualnum_f2_deg2.json", graded_dual_numbers(f2, 2), ["1", "y"])

    # a coalgebra document with broken coassociativity (for the validate command)
    broken = {
        "field": "F2",
        "dim": 2,
        "basis": ["1", "g"],
        "comult": [
            [0, [["1", "0"], ["0", "0"]]],
            [1, [["1", "0"], ["0", "1"]]],
        ],
        "counit": ["1", "0"],
    }
    write("broken_coassoc.json", canonical_json(broken))

    # measuring fixtures
    a = involution_algebra(f2)
    write("f2_c2_regular.measuring.json",
          canonical_json(measuring_to_dict(
              MeasuringDocument("f2_c2.json", "f2_trivial.json", regular_measuring(a)))))
    m2 = matrix_algebra(trivial_algebra(f2), 2)
    std = measuring_from_matrix_morphism(LinMap.identity(f2, 4), m2, trivial_algebra(f2), 2)
    write("m2_standard.measuring.json",
          canonical_json(measuring_to_dict(
              MeasuringDocument("m2_f2.json", "f2_trivial.json", std))))

    HQ = cyclic_group_hopf(QQ, 2)
    kq = trivial_algebra(QQ)
    sign = measuring_from_matrix_morphism(LinMap.from_rows(QQ, [[1, -1]]),
                                          HQ.algebra, kq, 1)
    triv = measuring_from_matrix_morphism(LinMap.from_rows(QQ, [[1, 1]]),
                                          HQ.algebra, kq, 1)
    write("q_c2_sign.measuring.json",
          canonical_json(measuring_to_dict(
              MeasuringDocument("q_c2.json", "q_trivial.json", sign))))
    write("q_c2_triv.measuring.json",
          canonical_json(measuring_to_dict(
              MeasuringDocument("q_c2.json", "q_trivial.json", triv))))
    write("q_c2_identity.measuring.json",
          canonical_json(measuring_to_dict(
              MeasuringDocument("q_c2.json", "q_c2.json", identity_measuring(HQ.algebra)))))


if __name__ == "__main__":
    main()

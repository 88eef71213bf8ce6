"""Definition of the bundled corpus; regenerate data/corpus.json with
``python -m permexp.corpus src/permexp/data/corpus.json``."""

from __future__ import annotations

import sys
from math import factorial

from .catalog import CatalogEntry, dump_catalog
from .constructions import FamilySpec, build
from .perm import format_cycles


def _f(text: str) -> FamilySpec:
    return FamilySpec.parse(text)


PRODUCTS = [
    "cyclic:2*symmetric:3",
    "cyclic:3*symmetric:3",
    "cyclic:4*symmetric:3",
    "cyclic:5*symmetric:3",
    "cyclic:7*symmetric:3",
    "cyclic:3*dihedral:5",
    "cyclic:2*dihedral:5",
    "symmetric:3*symmetric:3",
    "symmetric:3*dihedral:5",
    "elementary_abelian:2,2*symmetric:3",
    "cyclic:2*quaternion8",
    "cyclic:3*quaternion8",
    "quaternion8*symmetric:3",
    "cyclic:2*dihedral:4",
    "cyclic:3*dihedral:4",
    "dihedral:4*symmetric:3",
    "cyclic:2*alternating:4",
    "cyclic:3*alternating:4",
    "cyclic:2*symmetric:4",
    "symmetric:4*symmetric:3",
    "cyclic:2*alternating:5",
    "cyclic:2*symmetric:5",
    "cyclic:2*psl2:7",
    "cyclic:2*cyclic:4",
    "cyclic:4*cyclic:4",
    "cyclic:3*cyclic:9",
    "cyclic:2*cyclic:6",
    "cyclic:5*cyclic:3",
    "cyclic:2*power_auto:3,2",
    "cyclic:3*power_auto:3,2",
    "cyclic:2*power_auto:5,1",
    "elementary_abelian:2,3*symmetric:3",
    "cyclic:6*symmetric:3",
    "cyclic:11*symmetric:3",
    "cyclic:3*dihedral:7",
    "alternating:4*symmetric:3",
    "cyclic:5*alternating:4",
    "dihedral:5*dihedral:7",
    "cyclic:2*psl2:5",
    "elementary_abelian:3,2*symmetric:3",
]


def corpus_specs() -> list[FamilySpec]:
    specs = [FamilySpec("cyclic", [n]) for n in range(1, 31)]
    for p, k in [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (5, 2), (7, 2)]:
        specs.append(FamilySpec("elementary_abelian", [p, k]))
    specs += [FamilySpec("dihedral", [n]) for n in range(3, 21)]
    specs += [FamilySpec("symmetric", [n]) for n in range(2, 9)]
    specs += [FamilySpec("alternating", [n]) for n in range(3, 7)]
    specs.append(FamilySpec("quaternion8"))
    specs += [FamilySpec("psl2", [p]) for p in (5, 7, 11, 13)]
    specs += [FamilySpec("power_auto", [3, n]) for n in range(1, 6)]
    specs += [FamilySpec("power_auto", [5, n]) for n in range(1, 4)]
    specs += [_f(t) for t in PRODUCTS]
    return specs


def _expected_order(spec: FamilySpec) -> int:
    p = spec.parameters
    fam = spec.family
    if fam == "cyclic":
        return p[0]
    if fam == "elementary_abelian":
        return p[0] ** p[1]
    if fam == "dihedral":
        return 2 * p[0]
    if fam == "symmetric":
        return factorial(p[0])
    if fam == "alternating":
        return max(1, factorial(p[0]) // 2)
    if fam == "quaternion8":
        return 8
    if fam == "psl2":
        return p[0] * (p[0] ** 2 - 1) // 2
    if fam == "power_auto":
        return 2 * p[0] ** p[1]
    out = 1
    for f in spec.factors:
        out *= _expected_order(f)
    return out


def _expectations(spec: FamilySpec) -> dict[str, int]:
    expect = {"order": _expected_order(spec)}
    if spec.family == "power_auto" and spec.parameters[0] == 3:
        n = spec.parameters[1]
        expect.update(E=3 ** (n - 1), d=n + 1)
    if spec.family == "psl2":
        expect.update(E=2, d=2)
    return expect


def corpus_entries() -> list[CatalogEntry]:
    out = []
    for spec in corpus_specs():
        G = build(spec)
        out.append(
            CatalogEntry(
                name=spec.label(),
                degree=G.degree,
                generators=[format_cycles(g) for g in G.generators],
                expect=_expectations(spec),
            )
        )
    return out


if __name__ == "__main__":
    text = dump_catalog(corpus_entries())
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

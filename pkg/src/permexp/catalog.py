"""Catalog files, the verification runner and report emission.

Catalog format::

    {"groups": [{"name": "S3", "degree": 3,
                 "generators": ["(1 2)", "(1 2 3)"],
                 "expect": {"order": 6, "d": 2}}]}
"""

from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .config import DEFAULT_CAPS, CapExceeded, Caps
from .group import PermGroup
from .invariants import invariants_report, structural_flags
from .perm import CycleSyntaxError, parse_cycles
from .theorem import (
    check_e2_remark,
    check_gl_bound,
    check_lemma_product,
    check_multiplicativity,
    check_section_divisibility,
    check_star3,
    check_theorem,
    is_d_maximal,
    lemma_report,
    proposition_report,
    star3_values,
)

log = logging.getLogger(__name__)

ALL_CHECKS = ("theorem", "lemma", "star", "star3", "sections", "gl", "proposition", "dmax")
# dmax reports a property rather than a claim, so it is opt-in.
DEFAULT_CHECKS = ALL_CHECKS[:-1]
EXPECT_KEYS = ("order", "exponent", "E", "d")
SECTION_SAMPLES = 20

PASS, FAIL, NA, SKIPPED = "pass", "fail", "n/a", "skipped"


class CatalogError(ValueError):
    pass


@dataclass
class CatalogEntry:
    name: str
    degree: int
    generators: list[str]
    expect: dict[str, int] = field(default_factory=dict)

    def group(self) -> PermGroup:
        gens = []
        for text in self.generators:
            try:
                gens.append(parse_cycles(text, self.degree))
            except CycleSyntaxError as exc:
                raise CatalogError(f"{self.name}: generator {text!r}: {exc}") from None
        return PermGroup(self.degree, gens, name=self.name)

    def to_dict(self) -> dict:
        out = {"name": self.name, "degree": self.degree, "generators": list(self.generators)}
        if self.expect:
            out["expect"] = dict(self.expect)
        return out


def _line_col(text: str, pos: int) -> str:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return f"line {line}, column {col}"


def _group_offsets(text: str, count: int) -> list[int]:
    """Start offsets of the objects inside the top-level "groups" array."""
    dec = json.JSONDecoder()
    offsets: list[int] = []
    key = text.find('"groups"')
    pos = text.find("[", key) + 1 if key >= 0 else -1
    if pos <= 0:
        return offsets
    while len(offsets) < count:
        while pos < len(text) and text[pos] in " \t\r\n,":
            pos += 1
        if pos >= len(text) or text[pos] == "]":
            break
        offsets.append(pos)
        try:
            _, pos = dec.raw_decode(text, pos)
        except json.JSONDecodeError:
            break
    return offsets


def parse_catalog_text(text: str, source: str = "<catalog>") -> list[CatalogEntry]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("groups"), list):
        raise CatalogError(f'{source}: top level must be an object with a "groups" array')
    groups = doc["groups"]
    offsets = _group_offsets(text, len(groups))
    entries: list[CatalogEntry] = []
    names: set[str] = set()
    for i, raw in enumerate(groups):
        where = f"{source}: groups[{i}]"
        if i < len(offsets):
            where += f" ({_line_col(text, offsets[i])})"
        entry = _parse_entry(raw, where)
        if entry.name in names:
            raise CatalogError(f"{where}: duplicate name {entry.name!r}")
        names.add(entry.name)
        try:
            entry.group()
        except CatalogError as exc:
            raise CatalogError(f"{where}: {exc}") from None
        entries.append(entry)
    return entries


def _parse_entry(raw, where: str) -> CatalogEntry:
    if not isinstance(raw, dict):
        raise CatalogError(f"{where}: entry must be an object")
    unknown = set(raw) - {"name", "degree", "generators", "expect"}
    if unknown:
        raise CatalogError(f"{where}: unknown field(s) {sorted(unknown)}")
    name, degree, gens = raw.get("name"), raw.get("degree"), raw.get("generators")
    if not isinstance(name, str) or not name:
        raise CatalogError(f'{where}: "name" must be a non-empty string')
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise CatalogError(f'{where}: "degree" must be a positive integer')
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise CatalogError(f'{where}: "generators" must be a list of strings')
    expect = raw.get("expect", {})
    if not isinstance(expect, dict):
        raise CatalogError(f'{where}: "expect" must be an object')
    for k, v in expect.items():
        if k not in EXPECT_KEYS:
            raise CatalogError(f'{where}: unknown expectation {k!r}')
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise CatalogError(f"{where}: expectation {k!r} must be a non-negative integer")
    return CatalogEntry(name, degree, list(gens), dict(expect))


def parse_catalog(path) -> list[CatalogEntry]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CatalogError(f"{path}: {exc.strerror}") from None
    return parse_catalog_text(text, str(path))


def bundled_corpus_path():
    return resources.files("permexp") / "data" / "corpus.json"


def bundled_corpus() -> list[CatalogEntry]:
    text = bundled_corpus_path().read_text(encoding="utf-8")
    return parse_catalog_text(text, "corpus.json")


def dump_catalog(entries: list[CatalogEntry]) -> str:
    doc = {"groups": [e.to_dict() for e in entries]}
    return json.dumps(doc, indent=2) + "\n"


@dataclass
class EntryResult:
    name: str
    invariants: dict | None = None
    theorem: dict | None = None
    checks: dict[str, str] = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    skips: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "invariants": self.invariants,
            "theorem": self.theorem,
            "checks": self.checks,
            "details": self.details,
            "failures": self.failures,
            "skips": self.skips,
        }


@dataclass
class RunReport:
    entries: list[EntryResult]
    seed: int
    caps: Caps
    checks: tuple[str, ...]
    wall_time: float | None = None

    @property
    def failure_count(self) -> int:
        return sum(len(e.failures) for e in self.entries)

    @property
    def skip_count(self) -> int:
        return sum(len(e.skips) for e in self.entries)

    def exit_status(self, allow_skips: bool = False) -> int:
        if self.failure_count:
            return 1
        if self.skip_count and not allow_skips:
            return 1
        return 0

    def to_dict(self) -> dict:
        meta = {"seed": self.seed, "caps": self.caps.as_dict(), "checks": list(self.checks)}
        if self.wall_time is not None:
            meta["wall_time_seconds"] = round(self.wall_time, 3)
        return {
            "meta": meta,
            "summary": {
                "entries": len(self.entries),
                "failures": self.failure_count,
                "skips": self.skip_count,
            },
            "entries": [e.to_dict() for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        cols = ["name", "order", "exponent", "E", "d", "p", "lhs_scaled", "rhs_scaled", "equality"]
        w.writerow(cols + list(self.checks))
        for e in self.entries:
            inv = e.invariants or {}
            th = e.theorem or {}
            w.writerow(
                [
                    e.name,
                    inv.get("order", ""),
                    inv.get("exponent", ""),
                    inv.get("ratio_E", ""),
                    inv.get("d", ""),
                    "" if inv.get("smallest_prime") is None else inv["smallest_prime"],
                    "" if th.get("lhs_scaled") is None else th["lhs_scaled"],
                    "" if th.get("rhs_scaled") is None else th["rhs_scaled"],
                    th.get("equality", ""),
                ]
                + [e.checks.get(c, "") for c in self.checks]
            )
        return buf.getvalue()


def _record(res: EntryResult, check: str, ok: bool, detail: str) -> None:
    res.checks[check] = PASS if ok else FAIL
    if not ok:
        res.failures.append(f"{check}: {detail}")


def verify_entry(entry: CatalogEntry, checks=DEFAULT_CHECKS, seed: int = 0, caps: Caps = DEFAULT_CAPS) -> EntryResult:
    """Run the selected checks on one catalog entry."""
    res = EntryResult(name=entry.name)
    G = entry.group()
    try:
        inv = invariants_report(G, caps)
    except CapExceeded as exc:
        res.skips.append(f"invariants: {exc}")
        for c in checks:
            res.checks[c] = SKIPPED
        return res
    res.invariants = inv.to_dict()

    actual = {"order": inv.order, "exponent": inv.exponent, "E": inv.ratio_E, "d": inv.d}
    for key, want in sorted(entry.expect.items()):
        if actual[key] != want:
            res.failures.append(f"expect: {key} expected {want}, got {actual[key]}")

    trivial = inv.order == 1
    for check in checks:
        try:
            _run_check(check, G, inv, res, trivial, seed, caps)
        except CapExceeded as exc:
            res.checks[check] = SKIPPED
            res.skips.append(f"{check}: {exc}")
    return res


def _run_check(check, G, inv, res, trivial, seed, caps) -> None:
    if check == "theorem":
        v = check_theorem(G, caps)
        res.theorem = v.to_dict()
        if not v.applicable:
            res.checks[check] = NA
            return
        e2 = check_e2_remark(G, caps)
        res.details["e2_remark"] = e2
        ok = v.holds and v.consistent and e2
        _record(
            res, check, ok,
            f"p^d={v.lhs_scaled} vs E*p^2={v.rhs_scaled}, equality={v.equality}, "
            f"predicted={v.predicted_equality}, e2_remark={e2}",
        )
    elif check == "lemma":
        if trivial or not inv.flags.nilpotent:
            res.checks[check] = NA
            return
        lr = lemma_report(G, caps)
        res.details["lemma"] = {
            "lhs_scaled": lr.lhs_scaled,
            "rhs_scaled": lr.rhs_scaled,
            "equality": lr.equality,
            "max_order_is_exponent": lr.max_order_is_exponent,
            "chain": [list(step) for step in lr.chain],
        }
        _record(
            res, check, lr.passed,
            f"p^d={lr.lhs_scaled} vs E*p={lr.rhs_scaled}, max_order_is_exponent="
            f"{lr.max_order_is_exponent}, chain={lr.chain}",
        )
    elif check == "star":
        ok = check_multiplicativity(G, caps)
        per = {str(p): s.ratio_E for p, s in sorted(inv.sylow_data.items())}
        res.details["star"] = {"E": inv.ratio_E, "sylow_E": per}
        _record(res, check, ok, f"E={inv.ratio_E}, Sylow E values={per}")
    elif check == "star3":
        if trivial:
            res.checks[check] = NA
            return
        lhs, rhs = star3_values(G, caps)
        chain_ok = check_lemma_product(G, caps)
        res.details["star3"] = {"lhs": lhs, "rhs": rhs, "lemma_product": chain_ok}
        _record(res, check, check_star3(G, caps) and chain_ok,
                f"p^2*prod={lhs} vs p^d={rhs}, lemma_product={chain_ok}")
    elif check == "sections":
        rep = check_section_divisibility(G, SECTION_SAMPLES, seed, caps)
        res.details["sections"] = rep.to_dict()
        for msg in rep.skipped:
            res.skips.append(f"sections: {msg}")
        ok = rep.violations == 0 and len(rep.samples) >= SECTION_SAMPLES
        bad = [(s.h_label, s.n_label, s.quotient_E) for s in rep.samples if not s.divides]
        _record(res, check, ok, f"{len(rep.samples)} samples, violations={bad}, E(G)={rep.group_E}")
    elif check == "gl":
        if trivial:
            res.checks[check] = NA
            return
        top = max(s.d for s in inv.sylow_data.values())
        _record(res, check, check_gl_bound(G, caps), f"d={inv.d} vs 1+max d(P)={1 + top}")
    elif check == "proposition":
        pr = proposition_report(G, caps)
        res.details["proposition"] = {
            "applies": pr.applies,
            "solvable": pr.solvable,
            "sylow2_order": pr.sylow2_order,
            "regular_sign": pr.regular_sign,
            "regular_sign_explicit": pr.regular_sign_explicit,
            "parity_kernel_index": pr.parity_kernel_index,
        }
        if not pr.applies:
            res.checks[check] = NA
            return
        _record(res, check, pr.passed, f"{pr}")
    elif check == "dmax":
        res.details["d_maximal"] = is_d_maximal(G, caps)
        res.checks[check] = str(res.details["d_maximal"]).lower()
    else:
        raise ValueError(f"unknown check {check!r}")


def _verify_args(args):
    return verify_entry(*args)


def run_suite(
    entries: list[CatalogEntry],
    checks=DEFAULT_CHECKS,
    seed: int = 0,
    caps: Caps = DEFAULT_CAPS,
    jobs: int = 1,
) -> RunReport:
    checks = tuple(c for c in ALL_CHECKS if c in set(checks))
    work = [(e, checks, seed, caps) for e in entries]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_args, work))
    else:
        results = [_verify_args(w) for w in work]
    for r in results:
        for f in r.failures:
            log.warning("%s: %s", r.name, f)
    return RunReport(entries=results, seed=seed, caps=caps, checks=checks)

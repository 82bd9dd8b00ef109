"""Brute-force verification suites.

Each suite returns a :class:`SuiteResult`; a suite passes when it records no
violations.  Scope (which types, exhaustive or sampled) is passed in, with
defaults that keep every suite to seconds.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import bsdh
from .character import anticanonical_character, character_lowest_weight_report
from .errors import BSDHError
from .rootsys import DynkinType, RootSystem, build_root_system, simple_reflection
from .weyl import (
    Word,
    all_elements,
    all_reduced_words,
    element_of,
    element_support,
    is_minimal_coset_rep,
    left_descents,
    left_multiply,
    minuscule_elements,
    w_dot_zero,
)

DEFAULT_TYPES = {
    "fano-all-words": ["A1", "A3", "B2", "B3", "G2"],
    "minuscule": ["A4:2", "B3:3", "C3:1", "D4:4"],
    "coxeter-gg": ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"],
    "oracle-m": ["A3", "B2", "B3", "G2"],
    "oracle-m-sampled": ["A4", "D4", "C3", "F4"],
    "census": ["A2", "A3", "A4", "D4", "B2", "B3", "C3", "G2", "F4"],
    "character": ["A1", "A2", "A3", "B2", "B3", "C3", "G2"],
    "identities": ["A1", "A2", "A3", "B2", "B3", "C3", "G2"],
}


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "suite": self.name,
            "checked": self.checked,
            "violations": self.violations,
            "details": self.details,
            "passed": self.passed,
        }


def _rs(target: str | DynkinType | RootSystem) -> RootSystem:
    if isinstance(target, RootSystem):
        return target
    if isinstance(target, str):
        target = DynkinType.parse(target)
    return build_root_system(target)


def full_support_elements(rs: RootSystem):
    full = frozenset(range(1, rs.rank + 1))
    return [w for w in all_elements(rs) if element_support(rs, w) == full]


def random_reduced_word(rs: RootSystem, rng: random.Random, length: int | None = None) -> Word:
    """A random reduced word built by left multiplication with ascents."""
    fp = rs.rho
    word: list[int] = []
    limit = length if length is not None else rng.randint(0, len(rs.positive_roots))
    while len(word) < limit:
        ascents = [i + 1 for i, c in enumerate(fp) if c > 0]
        if not ascents:
            break
        i = rng.choice(ascents)
        fp = simple_reflection(rs, i, fp)
        word.insert(0, i)
    return tuple(word)


def _words_exhaustive(rs: RootSystem) -> Iterable[Word]:
    for w in all_elements(rs):
        yield from all_reduced_words(rs, w)


def _words_sampled(rs: RootSystem, sample: int, seed: int) -> Iterable[Word]:
    rng = random.Random(f"{rs.type}:{seed}")
    for _ in range(sample):
        yield random_reduced_word(rs, rng)


def word_source(rs: RootSystem, exhaustive: bool, sample: int, seed: int) -> Iterable[Word]:
    return _words_exhaustive(rs) if exhaustive else _words_sampled(rs, sample, seed)


def suite_fano_all_words(types: Sequence[str] = DEFAULT_TYPES["fano-all-words"]) -> SuiteResult:
    """Closed-form Fano criterion versus enumeration of every reduced word."""
    result = SuiteResult("fano-all-words")
    for target in types:
        rs = _rs(target)
        if str(rs.type) == "A2":
            result.details[str(rs.type)] = "skipped: outside theorem hypothesis"
            continue
        elements = full_support_elements(rs)
        fano = []
        for w in elements:
            result.checked += 1
            closed = bsdh.fano_all_expressions_criterion(rs, w)
            brute = bsdh.fano_all_expressions_bruteforce(rs, w)
            if closed != brute:
                result.violations.append({
                    "type": str(rs.type), "element": list(w.canonical_word),
                    "criterion": closed, "bruteforce": brute,
                })
            if brute:
                fano.append(list(w.canonical_word))
        result.details[str(rs.type)] = {"full_support_elements": len(elements), "fano_for_all_words": fano}
    return result


def _parse_minuscule_target(target: str) -> tuple[RootSystem, int]:
    t, _, m = target.partition(":")
    rs = _rs(t)
    if not m:
        raise BSDHError(f"minuscule target {target!r} needs the form TYPE:m, e.g. D4:4")
    return rs, int(m)


def suite_minuscule(targets: Sequence[str] = DEFAULT_TYPES["minuscule"]) -> SuiteResult:
    """m_j >= 0 for every reduced word of every minuscule element."""
    result = SuiteResult("minuscule")
    for target in targets:
        rs, m = _parse_minuscule_target(target)
        for w in minuscule_elements(rs, m):
            if not is_minimal_coset_rep(rs, w, m):
                result.violations.append({"target": target, "element": list(w.canonical_word),
                                          "reason": "not a minimal coset representative"})
        report = bsdh.minuscule_gg_check(rs, m)
        result.checked += report.pairs_checked
        for v in report.violations:
            result.violations.append({"target": target, **v})
        result.details[target] = {"elements": report.elements, "pairs_checked": report.pairs_checked}
    return result


def suite_coxeter_gg(types: Sequence[str] = DEFAULT_TYPES["coxeter-gg"]) -> SuiteResult:
    """Coxeter global-generation criterion versus m-vector non-negativity."""
    result = SuiteResult("coxeter-gg")
    for target in types:
        rs = _rs(target)
        gg_count = words = 0
        for perm in itertools.permutations(range(1, rs.rank + 1)):
            words += 1
            crit = bsdh.coxeter_gg_criterion(rs, perm)
            gg = bsdh.classify(rs, perm).globally_generated
            gg_count += gg
            if crit != gg:
                result.violations.append({"type": str(rs.type), "word": list(perm),
                                          "criterion": crit, "classify": gg})
        result.checked += words
        result.details[str(rs.type)] = {"coxeter_words": words, "globally_generated": gg_count}
    return result


def check_word_identities(rs: RootSystem, word: Word) -> list[str]:
    """Cross-checks on one reduced word; returns failure descriptions."""
    failures = []
    m = bsdh.anticanonical_o_coeffs(rs, word)
    m_alt = bsdh.o_coeffs_via_decomposition(rs, word)
    if m != m_alt:
        failures.append(f"formula {m.coeffs} != decomposition {m_alt.coeffs}")
    x = bsdh.anticanonical_x_coeffs(rs, word)
    if bsdh.x_to_o(rs, x) != m:
        failures.append(f"x_to_o(X-coeffs) {bsdh.x_to_o(rs, x).coeffs} != m {m.coeffs}")
    if bsdh.o_to_x(rs, m) != x:
        failures.append(f"o_to_x(m) != X-coeffs {x.coeffs}")
    if word and m.coeffs[-1] != 2:
        failures.append(f"last coefficient {m.coeffs[-1]} != 2")
    if any(c < 2 for c in x.coeffs):
        failures.append(f"X-coefficient below 2: {x.coeffs}")
    return failures


def suite_oracle_m(
    types: Sequence[str] = DEFAULT_TYPES["oracle-m"],
    *,
    exhaustive: bool = True,
    sample: int = 200,
    seed: int = 0,
) -> SuiteResult:
    """Closed-form m-vector versus the decomposition, plus basis-change identities."""
    result = SuiteResult("oracle-m")
    for target in types:
        rs = _rs(target)
        count = 0
        for word in word_source(rs, exhaustive, sample, seed):
            count += 1
            for failure in check_word_identities(rs, word):
                result.violations.append({"type": str(rs.type), "word": list(word), "failure": failure})
        result.checked += count
        result.details[str(rs.type)] = {"words": count, "mode": "exhaustive" if exhaustive else f"sample({sample}, seed={seed})"}
    return result


def census_shape_failures(rs: RootSystem) -> list[str]:
    failures = []
    census = bsdh.coxeter_census(rs)
    have = sorted(i for i, v in census.items() if v is not None)
    want = list(range(1, rs.rank + 1)) if rs.is_simply_laced else rs.short_simple_indices()
    if have != want:
        failures.append(f"census covers {have}, expected {want}")
    j1 = bsdh.j_sets(rs, tuple(range(1, rs.rank + 1)))[0]
    if rs.is_simply_laced and len(j1) < 2:
        failures.append(f"|J_1| = {len(j1)} < 2 in a simply-laced type")
    # |J_1| is 1 in B_n and G2 but 2 in C_n and F4, so only non-emptiness is asserted here
    if not rs.is_simply_laced and not j1:
        failures.append("J_1 is empty in a non-simply-laced type")
    for perm in itertools.permutations(range(1, rs.rank + 1)):
        c = element_of(rs, perm)
        in_census = bsdh.negative_simple_index(rs, bsdh.inverse_image_of_simple_sum(rs, c)) is not None
        if bsdh.j_chain_holds(rs, perm) != in_census:
            failures.append(f"J-chain test disagrees with census on {perm}")
    return failures


def suite_census(types: Sequence[str] = DEFAULT_TYPES["census"]) -> SuiteResult:
    """Coxeter census shape, uniqueness and the J_r membership chain."""
    result = SuiteResult("census")
    for target in types:
        rs = _rs(target)
        result.checked += 1
        for failure in census_shape_failures(rs):
            result.violations.append({"type": str(rs.type), "failure": failure})
        census = bsdh.coxeter_census(rs)
        result.details[str(rs.type)] = {
            "census": {str(i): (list(v[1]) if v else None) for i, v in census.items()},
            "J1": sorted(bsdh.j_sets(rs, tuple(range(1, rs.rank + 1)))[0]),
        }
    return result


def suite_character(types: Sequence[str] = DEFAULT_TYPES["character"]) -> SuiteResult:
    """Coxeter-word characters: effective, lowest weight w.0 of multiplicity one."""
    result = SuiteResult("character")
    for target in types:
        rs = _rs(target)
        for i in range(1, rs.rank + 1):
            result.checked += 1
            dim = anticanonical_character(rs, (i,)).dimension
            if dim != 3:
                result.violations.append({"type": str(rs.type), "word": [i], "failure": f"dimension {dim} != 3"})
        for perm in itertools.permutations(range(1, rs.rank + 1)):
            result.checked += 1
            report = character_lowest_weight_report(rs, perm, strict=False)
            if not report.certified:
                result.violations.append({"type": str(rs.type), "word": list(perm),
                                          "failure": "negative multiplicity on a Coxeter word"})
            if not report.passed:
                result.violations.append({"type": str(rs.type), "word": list(perm),
                                          "failure": "lowest-weight check failed", "report": report.as_dict()})
    return result


def suite_identities(types: Sequence[str] = DEFAULT_TYPES["identities"]) -> SuiteResult:
    """Lemma-level identities over every element: w.0, descents, pairing bound."""
    result = SuiteResult("identities")
    for target in types:
        rs = _rs(target)
        for w in all_elements(rs):
            result.checked += 1
            w_dot_zero(rs, w)  # raises on disagreement
            for i in left_descents(rs, w):
                # v = s_i w < w, so i is an ascent of v and <v.0, alpha_i> >= 0
                v = left_multiply(rs, i, w)
                if w_dot_zero(rs, v)[i - 1] < 0:
                    result.violations.append({"type": str(rs.type), "element": list(w.canonical_word),
                                              "letter": i, "failure": "<v.0, alpha_i> < 0"})
    return result


def suite_fixtures(path=None) -> SuiteResult:
    from .fixtures import check_fixture, load_fixtures

    result = SuiteResult("fixtures")
    for fx in load_fixtures(path):
        result.checked += 1
        for failure in check_fixture(fx):
            result.violations.append({"fixture": fx.name, "failure": failure})
    return result


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "fano-all-words": suite_fano_all_words,
    "minuscule": suite_minuscule,
    "coxeter-gg": suite_coxeter_gg,
    "oracle-m": suite_oracle_m,
    "census": suite_census,
    "character": suite_character,
    "identities": suite_identities,
    "fixtures": suite_fixtures,
}

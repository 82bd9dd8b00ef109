"""Picard-group calculus of Bott-Samelson-Demazure-Hansen varieties.

For a reduced word ``(i_1, ..., i_r)`` the Picard group of Z(w, i) is free
of rank r with two bases:

* X-basis: the boundary divisors X_l (the l-th factor equal to the identity);
* O-basis: O_j(1), the pullback of the line bundle of omega_{i_j} from the
  j-th partial product.

A line bundle is *globally generated* iff its O-coefficients are all >= 0
and *very ample* iff they are all >= 1.  The vector of O-coefficients of
the anti-canonical bundle is called the m-vector here.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import BSDHError, HypothesisError, InvariantViolation
from .rootsys import RootSystem, Weight, simple_reflection
from .weyl import (
    WeylElement,
    Word,
    apply_word,
    coxeter_elements,
    element_support,
    is_coxeter_element,
    is_coxeter_word,
    iter_reduced_words,
    all_reduced_words,
    minuscule_elements,
    require_reduced,
)

X_BASIS = "X"
O_BASIS = "O"


@dataclass(frozen=True)
class PicardClass:
    basis: str
    coeffs: tuple[int, ...]
    word: Word

    def __post_init__(self):
        if self.basis not in (X_BASIS, O_BASIS):
            raise ValueError(f"basis must be 'X' or 'O', got {self.basis!r}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        object.__setattr__(self, "word", tuple(self.word))
        if len(self.coeffs) != len(self.word):
            raise ValueError(
                f"{len(self.coeffs)} coefficients for a word of length {len(self.word)}"
            )


@dataclass(frozen=True)
class Classification:
    globally_generated: bool
    very_ample: bool
    fano: bool
    weak_fano_certified: bool
    big: bool
    m: PicardClass

    def as_dict(self) -> dict:
        return {
            "globally_generated": self.globally_generated,
            "very_ample": self.very_ample,
            "fano": self.fano,
            "weak_fano_certified": self.weak_fano_certified,
            "big": self.big,
            "m": list(self.m.coeffs),
        }


def _root_pairing(rs: RootSystem, a: int, b: int) -> int:
    """<alpha_a, alpha_b> for 1-based simple indices."""
    return rs.cartan[b - 1][a - 1]


def demazure_x_coeffs(rs: RootSystem, word: Sequence[int], k: int, weight: Weight) -> tuple[int, ...]:
    """(r_k1(weight), ..., r_kk(weight)), the X-coefficients of O_k(weight).

    ``r_kl(weight) = <weight, s_{i_k} ... s_{i_{l+1}}(alpha_{i_l})>``, evaluated
    as ``<s_{i_{l+1}} ... s_{i_k}(weight), alpha_{i_l}>`` so that only weight
    reflections are needed.
    """
    word = require_reduced(rs, word)
    if not 1 <= k <= len(word):
        raise BSDHError(f"k = {k} out of range 1..{len(word)}")
    out = [0] * k
    mu = tuple(weight)
    for l in range(k, 0, -1):
        if l < k:
            mu = simple_reflection(rs, word[l], mu)
        out[l - 1] = mu[word[l - 1] - 1]
    return tuple(out)


def basis_change_matrix(rs: RootSystem, word: Sequence[int]) -> list[list[int]]:
    """Lower unitriangular ``R[k][l] = r_kl(omega_{i_k})`` (0-based k, l)."""
    word = require_reduced(rs, word)
    r = len(word)
    matrix = [[0] * r for _ in range(r)]
    for k in range(1, r + 1):
        row = demazure_x_coeffs(rs, word, k, rs.fundamental_weight(word[k - 1]))
        matrix[k - 1][:k] = row
    return matrix


def anticanonical_x_coeffs(rs: RootSystem, word: Sequence[int]) -> PicardClass:
    """X-coefficients 1 + <rho, s_{i_r} ... s_{i_{l+1}}(alpha_{i_l})>."""
    word = require_reduced(rs, word)
    if not word:
        return PicardClass(X_BASIS, (), ())
    pairings = demazure_x_coeffs(rs, word, len(word), rs.rho)
    return PicardClass(X_BASIS, tuple(1 + p for p in pairings), word)


def anticanonical_o_coeffs(rs: RootSystem, word: Sequence[int]) -> PicardClass:
    """The m-vector by the closed formula.

    m_j pairs ``alpha_{i_j} + ... + alpha_{i_{q-1}}`` against alpha_{i_j},
    where q is the next position carrying the letter i_j (or r + 1 if none).
    """
    word = require_reduced(rs, word)
    r = len(word)
    m = []
    for j in range(r):
        a = word[j]
        total = 0
        for k in range(j, r):
            if k > j and word[k] == a:
                break
            total += _root_pairing(rs, word[k], a)
        m.append(total)
    return PicardClass(O_BASIS, tuple(m), word)


def o_coeffs_via_decomposition(rs: RootSystem, word: Sequence[int]) -> PicardClass:
    """The m-vector by expanding K^{-1} = O_1(alpha_{i_1}) x ... x O_r(alpha_{i_r}).

    Each O_k(alpha_{i_k}) splits over the latest occurrence (within the
    first k letters) of every letter a as O_t(<alpha_{i_k}, alpha_a>).
    """
    word = require_reduced(rs, word)
    m = [0] * len(word)
    last: dict[int, int] = {}
    for k, letter in enumerate(word):
        last[letter] = k
        for a, t in last.items():
            m[t] += _root_pairing(rs, letter, a)
    return PicardClass(O_BASIS, tuple(m), word)


def o_to_x(rs: RootSystem, oclass: PicardClass) -> PicardClass:
    if oclass.basis != O_BASIS:
        raise ValueError("o_to_x expects an O-basis class")
    R = basis_change_matrix(rs, oclass.word)
    r = len(oclass.word)
    x = [sum(oclass.coeffs[k] * R[k][l] for k in range(l, r)) for l in range(r)]
    return PicardClass(X_BASIS, tuple(x), oclass.word)


def x_to_o(rs: RootSystem, xclass: PicardClass) -> PicardClass:
    if xclass.basis != X_BASIS:
        raise ValueError("x_to_o expects an X-basis class")
    R = basis_change_matrix(rs, xclass.word)
    r = len(xclass.word)
    m = [0] * r
    for l in range(r - 1, -1, -1):
        m[l] = xclass.coeffs[l] - sum(m[k] * R[k][l] for k in range(l + 1, r))
    return PicardClass(O_BASIS, tuple(m), xclass.word)


def classify(rs: RootSystem, word: Sequence[int]) -> Classification:
    m = anticanonical_o_coeffs(rs, word)
    gg = all(c >= 0 for c in m.coeffs)
    ample = all(c >= 1 for c in m.coeffs)
    return Classification(
        globally_generated=gg,
        very_ample=ample,
        fano=ample,
        weak_fano_certified=gg,
        big=True,
        m=m,
    )


def coxeter_gg_criterion(rs: RootSystem, word: Sequence[int]) -> bool:
    """Global generation test for a Coxeter word s_{sigma(1)} ... s_{sigma(n)}."""
    word = tuple(word)
    if not is_coxeter_word(rs, word):
        raise BSDHError(f"{word} is not a Coxeter word of {rs.type}")
    n = len(word)
    return all(
        sum(_root_pairing(rs, word[k], word[r]) for k in range(r, n)) >= 0
        for r in range(n)
    )


def _sum_of_simple_roots_weight(rs: RootSystem) -> Weight:
    return rs.root_to_weight((1,) * rs.rank)


def negative_simple_index(rs: RootSystem, weight: Weight) -> int | None:
    """i such that weight == -alpha_i (weight coordinates), else None."""
    for i in range(1, rs.rank + 1):
        if rs.root_to_weight(tuple(-c for c in rs.simple_root(i))) == tuple(weight):
            return i
    return None


def inverse_image_of_simple_sum(rs: RootSystem, w: WeylElement) -> Weight:
    """w^{-1}(alpha_1 + ... + alpha_n) in weight coordinates."""
    return apply_word(rs, tuple(reversed(w.canonical_word)), _sum_of_simple_roots_weight(rs))


def _check_full_support(rs: RootSystem, w: WeylElement) -> None:
    if element_support(rs, w) != frozenset(range(1, rs.rank + 1)):
        raise HypothesisError(f"supp({w}) is not all of S for {rs.type}")


def _check_not_a2(rs: RootSystem) -> None:
    if rs.type.family == "A" and rs.type.rank == 2:
        raise HypothesisError("theorem excludes type A2")


def fano_all_expressions_criterion(rs: RootSystem, w: WeylElement) -> bool:
    """Closed-form test: w is Coxeter and w^{-1}(sum of simple roots) is in -S."""
    _check_not_a2(rs)
    _check_full_support(rs, w)
    if not is_coxeter_element(rs, w):
        return False
    return negative_simple_index(rs, inverse_image_of_simple_sum(rs, w)) is not None


def fano_all_expressions_bruteforce(rs: RootSystem, w: WeylElement) -> bool:
    """True iff every reduced word of w yields a Fano variety.  Stops at the first failure."""
    _check_not_a2(rs)
    _check_full_support(rs, w)
    return all(classify(rs, word).fano for word in iter_reduced_words(rs, w))


def coxeter_census(rs: RootSystem) -> dict[int, tuple[WeylElement, Word] | None]:
    """For each simple index i, the Coxeter element c with c^{-1}(sum alpha) = -alpha_i."""
    if rs.rank < 2:
        raise BSDHError("coxeter_census needs rank >= 2")
    census: dict[int, tuple[WeylElement, Word] | None] = {i: None for i in range(1, rs.rank + 1)}
    for c, word in coxeter_elements(rs):
        i = negative_simple_index(rs, inverse_image_of_simple_sum(rs, c))
        if i is None:
            continue
        if census[i] is not None:
            raise InvariantViolation(f"two Coxeter elements map sum(alpha) to -alpha_{i}")
        census[i] = (c, word)
    return census


def j_sets(rs: RootSystem, word: Sequence[int]) -> list[frozenset[int]]:
    """J_1, ..., J_{n-1} for a Coxeter word.

    J_r holds the simple indices a outside {i_1, ..., i_{r-1}} with
    ``<alpha_{i_r} + ... + alpha_{i_n}, alpha_a> = 1``.
    """
    word = tuple(word)
    if not is_coxeter_word(rs, word):
        raise BSDHError(f"{word} is not a Coxeter word of {rs.type}")
    n = len(word)
    out = []
    for r in range(n - 1):
        used = set(word[:r])
        out.append(frozenset(
            a for a in range(1, rs.rank + 1)
            if a not in used and sum(_root_pairing(rs, word[k], a) for k in range(r, n)) == 1
        ))
    return out


def j_chain_holds(rs: RootSystem, word: Sequence[int]) -> bool:
    return all(word[r] in J for r, J in enumerate(j_sets(rs, word)))


@dataclass
class MinusculeReport:
    type: str
    m: int
    elements: int
    pairs_checked: int
    violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "type": self.type,
            "m": self.m,
            "elements": self.elements,
            "pairs_checked": self.pairs_checked,
            "violations": self.violations,
            "passed": self.passed,
        }


def minuscule_gg_check(rs: RootSystem, m: int) -> MinusculeReport:
    """Check m_j >= 0 over every reduced word of every minuscule element for omega_m."""
    elements = minuscule_elements(rs, m)
    report = MinusculeReport(type=str(rs.type), m=m, elements=len(elements), pairs_checked=0)
    for w in elements:
        for word in all_reduced_words(rs, w):
            report.pairs_checked += 1
            mv = anticanonical_o_coeffs(rs, word).coeffs
            if any(c < 0 for c in mv):
                report.violations.append({"element": list(w.canonical_word), "word": list(word), "m": list(mv)})
    return report


__all__ = [
    "PicardClass",
    "Classification",
    "MinusculeReport",
    "demazure_x_coeffs",
    "basis_change_matrix",
    "anticanonical_x_coeffs",
    "anticanonical_o_coeffs",
    "o_coeffs_via_decomposition",
    "o_to_x",
    "x_to_o",
    "classify",
    "coxeter_gg_criterion",
    "fano_all_expressions_criterion",
    "fano_all_expressions_bruteforce",
    "coxeter_census",
    "j_sets",
    "j_chain_holds",
    "minuscule_gg_check",
    "negative_simple_index",
    "inverse_image_of_simple_sum",
]

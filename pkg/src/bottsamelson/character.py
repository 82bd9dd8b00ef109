"""Formal T-characters and the Demazure-operator recursion for K^{-1}.

The recursion computes the Euler characteristic of the anti-canonical
bundle as a virtual character.  It agrees with the H^0 character whenever
the higher cohomology vanishes (Coxeter words, globally generated cases);
otherwise it is reported as "euler-only".
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import InvariantViolation
from .rootsys import RootSystem, Weight
from .weyl import element_of, require_reduced, w_dot_zero


class Character:
    """A finite Z-linear combination of weights e^lambda.

    Zero multiplicities are never stored.  Iteration and ``items()`` are in
    sorted weight order so that output is deterministic.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        self._terms: dict[Weight, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for weight, mult in items:
            self._add(tuple(weight), int(mult))

    def _add(self, weight: Weight, mult: int) -> None:
        total = self._terms.get(weight, 0) + mult
        if total:
            self._terms[weight] = total
        else:
            self._terms.pop(weight, None)

    @classmethod
    def unit(cls, rank: int) -> "Character":
        return cls({(0,) * rank: 1})

    def __getitem__(self, weight) -> int:
        return self._terms.get(tuple(weight), 0)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms))

    def items(self):
        return sorted(self._terms.items())

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "Character") -> "Character":
        out = Character(self._terms)
        for weight, mult in other._terms.items():
            out._add(weight, mult)
        return out

    def __neg__(self) -> "Character":
        return Character({w: -m for w, m in self._terms.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def shifted(self, delta: Weight) -> "Character":
        """Multiply by e^delta."""
        return Character({tuple(a + b for a, b in zip(w, delta)): m for w, m in self._terms.items()})

    @property
    def dimension(self) -> int:
        return sum(self._terms.values())

    def is_effective(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    def __repr__(self):
        body = ", ".join(f"{w}: {m}" for w, m in self.items())
        return f"Character({{{body}}})"


def demazure_operator(rs: RootSystem, i: int, chi: Character) -> Character:
    """Euler characteristic of the P^1-fibration along alpha_i, applied termwise.

    With n = <lambda, alpha_i>:
    n >= 0 gives e^lambda + e^{lambda - alpha_i} + ... + e^{s_i lambda};
    n == -1 gives 0;
    n <= -2 gives -(e^{lambda + alpha_i} + ... + e^{lambda + (-n-1) alpha_i}).
    """
    rs.check_letter(i)
    alpha = rs.root_to_weight(rs.simple_root(i))
    out: dict[Weight, int] = {}

    def bump(weight, mult):
        out[weight] = out.get(weight, 0) + mult

    for weight, mult in chi.items():
        n = weight[i - 1]
        if n >= 0:
            for k in range(n + 1):
                bump(tuple(w - k * a for w, a in zip(weight, alpha)), mult)
        elif n <= -2:
            for k in range(1, -n):
                bump(tuple(w + k * a for w, a in zip(weight, alpha)), -mult)
    return Character(out)


def anticanonical_character(rs: RootSystem, word: Sequence[int]) -> Character:
    """chi(empty) = e^0; chi(i_1, rest) = D_{i_1}(e^{alpha_{i_1}} chi(rest))."""
    word = require_reduced(rs, word)
    chi = Character.unit(rs.rank)
    for i in reversed(word):
        alpha = rs.root_to_weight(rs.simple_root(i))
        chi = demazure_operator(rs, i, chi.shifted(alpha))
    return chi


def root_cone_geq(rs: RootSystem, nu: Weight, mu: Weight) -> bool:
    """nu >= mu: nu - mu is a non-negative integer combination of simple roots."""
    try:
        diff = rs.weight_to_root(tuple(a - b for a, b in zip(nu, mu)))
    except ValueError:
        return False
    return min(diff, default=0) >= 0


@dataclass
class LowestWeightReport:
    word: tuple[int, ...]
    dimension: int
    certified: bool
    lowest_weight: Weight
    lowest_multiplicity: int
    not_above: list[Weight] = field(default_factory=list)
    negative: list[Weight] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.lowest_multiplicity == 1 and not self.not_above

    @property
    def certification(self) -> str:
        return "h0" if self.certified else "euler-only"

    def as_dict(self) -> dict:
        return {
            "word": list(self.word),
            "dimension": self.dimension,
            "certification": self.certification,
            "lowest_weight": list(self.lowest_weight),
            "lowest_multiplicity": self.lowest_multiplicity,
            "not_above_lowest": [list(w) for w in self.not_above],
            "negative_multiplicity_weights": [list(w) for w in self.negative],
            "passed": self.passed,
        }


def character_lowest_weight_report(
    rs: RootSystem, word: Sequence[int], *, strict: bool = True
) -> LowestWeightReport:
    """Check that w.0 occurs once and bounds every weight from below.

    The character is *certified* when every multiplicity is non-negative.
    With ``strict`` a failure on a certified character raises
    InvariantViolation; otherwise failures are only recorded.
    """
    word = require_reduced(rs, word)
    chi = anticanonical_character(rs, word)
    lowest = w_dot_zero(rs, element_of(rs, word))
    negative = [w for w, m in chi.items() if m < 0]
    report = LowestWeightReport(
        word=word,
        dimension=chi.dimension,
        certified=not negative,
        lowest_weight=lowest,
        lowest_multiplicity=chi[lowest],
        not_above=[w for w in chi if not root_cone_geq(rs, w, lowest)],
        negative=negative,
    )
    if strict and report.certified and not report.passed:
        raise InvariantViolation(f"lowest-weight check failed on certified character of {word}")
    return report

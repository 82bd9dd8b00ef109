"""Weyl group elements, reduced words and commutation classes.

Elements are identified by their fingerprint ``w(rho)``.  Since rho is
regular this is faithful, and it gives a lot for free:

* ``s_i w`` has fingerprint ``s_i(w(rho))``;
* i is a left descent of w (``l(s_i w) < l(w)``) iff ``w(rho)[i] < 0``;
* ``l(w)`` is the number of positive roots beta with ``<w(rho), beta> < 0``.

Words are tuples of 1-based letters, read left to right as the product
``s_{i_1} ... s_{i_r}``.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple

from .errors import InvariantViolation, LetterError, NotMinusculeError, NotReducedError
from .rootsys import RootSystem, Weight, minuscule_weights, reflect_root, simple_reflection

Word = Tuple[int, ...]


def parse_word(text: str) -> Word:
    """Parse the comma-separated wire format, e.g. ``"1,2,1"``."""
    text = text.strip()
    if text in ("", "()", "e", "-"):
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise LetterError(f"cannot parse word {text!r}; expected comma-separated integers") from None


def format_word(word: Sequence[int]) -> str:
    return ",".join(str(i) for i in word)


def _check_word(rs: RootSystem, word: Sequence[int]) -> Word:
    word = tuple(word)
    for i in word:
        rs.check_letter(i)
    return word


@dataclass(frozen=True)
class WeylElement:
    fingerprint: Weight
    length: int
    canonical_word: Word

    def __str__(self):
        if not self.canonical_word:
            return "e"
        return "".join(f"s{i}" for i in self.canonical_word)


def apply_word(rs: RootSystem, word: Sequence[int], weight: Weight) -> Weight:
    """s_{i_1}(s_{i_2}(...s_{i_r}(weight)))."""
    word = _check_word(rs, word)
    weight = tuple(weight)
    for i in reversed(word):
        weight = simple_reflection(rs, i, weight)
    return weight


def apply_word_to_root(rs: RootSystem, word: Sequence[int], root) -> tuple:
    root = tuple(root)
    for i in reversed(_check_word(rs, word)):
        root = reflect_root(rs.cartan, i - 1, root)
    return root


def first_cancellation(rs: RootSystem, word: Sequence[int]) -> int | None:
    """Largest position k whose root s_{i_r}...s_{i_{k+1}}(alpha_{i_k}) is negative.

    Returns None for reduced words.
    """
    word = _check_word(rs, word)
    # Build s_{i_r}...s_{i_{k+1}} incrementally from the right end.
    suffix: list[int] = []
    for k in range(len(word), 0, -1):
        root = rs.simple_root(word[k - 1])
        for i in suffix:
            root = reflect_root(rs.cartan, i - 1, root)
        if min(root) < 0:
            return k
        suffix.insert(0, word[k - 1])
    return None


def is_reduced(rs: RootSystem, word: Sequence[int]) -> bool:
    return first_cancellation(rs, word) is None


def require_reduced(rs: RootSystem, word: Sequence[int]) -> Word:
    word = _check_word(rs, word)
    k = first_cancellation(rs, word)
    if k is not None:
        raise NotReducedError(word, k)
    return word


def length_of_fingerprint(rs: RootSystem, fingerprint: Weight) -> int:
    return sum(
        1 for coroot in rs.coroots if sum(a * b for a, b in zip(fingerprint, coroot)) < 0
    )


def canonical_word_of(rs: RootSystem, fingerprint: Weight) -> Word:
    """Lexicographically smallest reduced word, by peeling the smallest left descent."""
    letters = []
    fp = tuple(fingerprint)
    while True:
        descent = next((i for i, c in enumerate(fp) if c < 0), None)
        if descent is None:
            break
        letters.append(descent + 1)
        fp = simple_reflection(rs, descent + 1, fp)
    if fp != rs.rho:
        raise ValueError(f"{fingerprint} is not in the W-orbit of rho")
    return tuple(letters)


def element_from_fingerprint(rs: RootSystem, fingerprint: Weight) -> WeylElement:
    fingerprint = tuple(fingerprint)
    word = canonical_word_of(rs, fingerprint)
    return WeylElement(fingerprint, len(word), word)


def element_of(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    """The element represented by ``word`` (which need not be reduced)."""
    fp = apply_word(rs, word, rs.rho)
    element = element_from_fingerprint(rs, fp)
    n_inv = length_of_fingerprint(rs, fp)
    if n_inv != element.length:
        raise InvariantViolation(
            f"length mismatch for {word}: inversions {n_inv}, canonical word {element.length}"
        )
    return element


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs.rho, 0, ())


def longest_element(rs: RootSystem) -> WeylElement:
    return element_from_fingerprint(rs, tuple(-c for c in rs.rho))


def inverse(rs: RootSystem, w: WeylElement) -> WeylElement:
    return element_of(rs, tuple(reversed(w.canonical_word)))


def left_multiply(rs: RootSystem, i: int, w: WeylElement) -> WeylElement:
    """The element s_i w."""
    return element_from_fingerprint(rs, simple_reflection(rs, i, w.fingerprint))


def left_descents(rs: RootSystem, w: WeylElement) -> list[int]:
    return [i + 1 for i, c in enumerate(w.fingerprint) if c < 0]


def right_descents(rs: RootSystem, w: WeylElement) -> list[int]:
    """Letters i with l(w s_i) = l(w) - 1, i.e. w(alpha_i) < 0."""
    out = []
    for i in range(1, rs.rank + 1):
        image = apply_word_to_root(rs, w.canonical_word, rs.simple_root(i))
        if min(image) < 0:
            out.append(i)
    return out


def inversion_set(rs: RootSystem, w: WeylElement) -> list[int]:
    """0-based indices of the positive roots beta with w(beta) < 0."""
    inv_fp = apply_word(rs, tuple(reversed(w.canonical_word)), rs.rho)
    out = [
        k
        for k, coroot in enumerate(rs.coroots)
        if sum(a * b for a, b in zip(inv_fp, coroot)) < 0
    ]
    if len(out) != w.length:
        raise InvariantViolation(f"|R+(w)| = {len(out)} but l(w) = {w.length} for {w}")
    return out


def all_elements(rs: RootSystem) -> list[WeylElement]:
    """Every element of W, sorted by (length, canonical word).  Small ranks only."""
    seen = {rs.rho}
    frontier = [rs.rho]
    while frontier:
        nxt = []
        for fp in frontier:
            for i in range(1, rs.rank + 1):
                image = simple_reflection(rs, i, fp)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    elements = [element_from_fingerprint(rs, fp) for fp in seen]
    elements.sort(key=lambda e: (e.length, e.canonical_word))
    return elements


def iter_reduced_words(rs: RootSystem, w: WeylElement) -> Iterator[Word]:
    """Lazily yield the reduced words of w in lexicographic order."""

    def rec(fp, prefix):
        descents = [i + 1 for i, c in enumerate(fp) if c < 0]
        if not descents:
            yield tuple(prefix)
            return
        for i in descents:
            prefix.append(i)
            yield from rec(simple_reflection(rs, i, fp), prefix)
            prefix.pop()

    yield from rec(tuple(w.fingerprint), [])


def all_reduced_words(rs: RootSystem, w: WeylElement) -> list[Word]:
    """Every reduced word of w, duplicate free and lexicographically sorted."""
    memo: dict[Weight, list[Word]] = {}

    def words(fp):
        if fp in memo:
            return memo[fp]
        descents = [i + 1 for i, c in enumerate(fp) if c < 0]
        if not descents:
            result = [()]
        else:
            result = []
            for i in descents:
                result.extend((i,) + tail for tail in words(simple_reflection(rs, i, fp)))
        memo[fp] = result
        return result

    return list(words(tuple(w.fingerprint)))


def count_reduced_words(rs: RootSystem, w: WeylElement) -> int:
    memo: dict[Weight, int] = {}

    def count(fp):
        if fp not in memo:
            descents = [i + 1 for i, c in enumerate(fp) if c < 0]
            memo[fp] = 1 if not descents else sum(
                count(simple_reflection(rs, i, fp)) for i in descents
            )
        return memo[fp]

    return count(tuple(w.fingerprint))


def commutes(rs: RootSystem, i: int, j: int) -> bool:
    return i != j and rs.cartan[i - 1][j - 1] == 0


def commutation_classes(rs: RootSystem, words: Iterable[Sequence[int]]) -> list[list[Word]]:
    """Partition words of one element into commutation classes.

    Two words are equivalent when linked by a chain of swaps of adjacent
    commuting letters through words of the input.  Each class is sorted and
    classes are ordered by their smallest word.
    """
    words = sorted({_check_word(rs, w) for w in words})
    if not words:
        return []
    fps = {apply_word(rs, w, rs.rho) for w in words}
    if len(fps) > 1:
        raise ValueError("commutation_classes needs words of a single Weyl group element")

    parent = {w: w for w in words}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for w in words:
        for k in range(len(w) - 1):
            if commutes(rs, w[k], w[k + 1]):
                swapped = w[:k] + (w[k + 1], w[k]) + w[k + 2:]
                if swapped in parent:
                    ra, rb = find(w), find(swapped)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)

    classes: dict[Word, list[Word]] = {}
    for w in words:
        classes.setdefault(find(w), []).append(w)
    return sorted((sorted(c) for c in classes.values()), key=lambda c: c[0])


def coxeter_elements(rs: RootSystem) -> list[tuple[WeylElement, Word]]:
    """Distinct Coxeter elements with their lexicographically first word."""
    found: dict[Weight, tuple[WeylElement, Word]] = {}
    for perm in itertools.permutations(range(1, rs.rank + 1)):
        fp = apply_word(rs, perm, rs.rho)
        if fp not in found:
            found[fp] = (element_from_fingerprint(rs, fp), perm)
    return sorted(found.values(), key=lambda pair: pair[1])


def is_coxeter_word(rs: RootSystem, word: Sequence[int]) -> bool:
    return sorted(word) == list(range(1, rs.rank + 1))


def support(rs: RootSystem, word: Sequence[int]) -> frozenset[int]:
    """Letters of a reduced word; non-reduced input is rejected."""
    word = require_reduced(rs, word)
    return frozenset(word)


def element_support(rs: RootSystem, w: WeylElement) -> frozenset[int]:
    return frozenset(w.canonical_word)


def is_coxeter_element(rs: RootSystem, w: WeylElement) -> bool:
    return w.length == rs.rank and element_support(rs, w) == frozenset(range(1, rs.rank + 1))


def minuscule_elements(rs: RootSystem, m: int) -> list[WeylElement]:
    """Minimal coset representatives of W / W_{S - {alpha_m}} for minuscule omega_m.

    Grown from the identity by left multiplication: if ``<w(omega_m), alpha_i>``
    is positive then s_i w is again a minimal representative, one longer.
    """
    rs.check_letter(m)
    if m not in minuscule_weights(rs):
        raise NotMinusculeError(f"omega_{m} is not minuscule in {rs.type}")
    omega = rs.fundamental_weight(m)
    start = (omega, rs.rho)
    seen = {omega: rs.rho}
    queue = deque([start])
    while queue:
        mu, fp = queue.popleft()
        for i in range(1, rs.rank + 1):
            if mu[i - 1] > 0:
                nu = simple_reflection(rs, i, mu)
                if nu not in seen:
                    seen[nu] = simple_reflection(rs, i, fp)
                    queue.append((nu, seen[nu]))
    elements = [element_from_fingerprint(rs, fp) for fp in seen.values()]
    elements.sort(key=lambda e: (e.length, e.canonical_word))
    return elements


def is_minimal_coset_rep(rs: RootSystem, w: WeylElement, m: int) -> bool:
    """True iff w(alpha_j) > 0 for every simple j != m."""
    return all(j == m for j in right_descents(rs, w))


def w_dot_zero(rs: RootSystem, w: WeylElement) -> Weight:
    """w . 0 = w(rho) - rho, checked against -sum of R+(w^{-1})."""
    direct = tuple(a - b for a, b in zip(w.fingerprint, rs.rho))
    total = [0] * rs.rank
    for root, coroot in zip(rs.positive_roots, rs.coroots):
        # beta in R+(w^{-1})  <=>  w^{-1}(beta) < 0  <=>  <w(rho), beta> < 0
        if sum(a * b for a, b in zip(w.fingerprint, coroot)) < 0:
            for j, c in enumerate(root):
                total[j] -= c
    via_inversions = rs.root_to_weight(tuple(total))
    if via_inversions != direct:
        raise InvariantViolation(
            f"w(rho) - rho = {direct} but -sum R+(w^-1) = {via_inversions} for {w}"
        )
    return direct

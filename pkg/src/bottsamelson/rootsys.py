"""Finite root systems of simple type with Bourbaki node numbering.

Two coordinate systems are used throughout:

* a *weight* is a tuple of integers in the fundamental-weight basis, so
  ``weight[i]`` is the pairing of the weight with the i-th simple coroot;
* a *root vector* is a tuple of integers in the simple-root basis.

Node numbering (1-based)::

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) => n          alpha_n short
    C_n   1 - 2 - ... - (n-1) <= n          alpha_1..alpha_{n-1} short
    D_n   1 - 2 - ... - (n-2) - (n-1)
                          \\--- n
    E_n   1 - 3 - 4 - 5 - ... - n,  2 attached to 4
    F_4   1 - 2 => 3 - 4                    alpha_3, alpha_4 short
    G_2   1 <= 2                            alpha_1 short

The Cartan matrix is stored with ``cartan[i][j] = <alpha_j, alpha_i>``, i.e.
column j holds the weight coordinates of the simple root alpha_j.
"""
from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from .errors import LetterError, RankError

Weight = Tuple[int, ...]
RootVector = Tuple[int, ...]

MAX_CLASSICAL_RANK = 10

_RANK_BOUNDS = {
    "A": (1, MAX_CLASSICAL_RANK),
    "B": (2, MAX_CLASSICAL_RANK),
    "C": (3, MAX_CLASSICAL_RANK),
    "D": (4, MAX_CLASSICAL_RANK),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

# Known |R+| per family, used as a construction sanity check.
_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        family = self.family.upper() if isinstance(self.family, str) else self.family
        object.__setattr__(self, "family", family)
        if family not in _RANK_BOUNDS:
            raise RankError(f"unknown Dynkin family {self.family!r}; expected one of A-G")
        lo, hi = _RANK_BOUNDS[family]
        if not isinstance(self.rank, int) or self.rank < lo:
            raise RankError(f"type {family} requires rank >= {lo}, got {self.rank}")
        if self.rank > hi:
            raise RankError(f"type {family} requires rank <= {hi}, got {self.rank}")

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        """Parse compact names such as ``"A3"`` or ``"g2"``."""
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise RankError(f"cannot parse Dynkin type {text!r}; expected e.g. 'A3'")
        return cls(text[0], int(text[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _gram_data(t: DynkinType):
    """Squared lengths and off-diagonal inner products (scaled to integers)."""
    n, fam = t.rank, t.family
    lengths = [2] * n
    edges = {}
    if fam == "A":
        edges = {(i, i + 1): -1 for i in range(n - 1)}
    elif fam == "B":
        lengths[n - 1] = 1
        edges = {(i, i + 1): -1 for i in range(n - 1)}
    elif fam == "C":
        lengths[n - 1] = 4
        edges = {(i, i + 1): -1 for i in range(n - 2)}
        edges[(n - 2, n - 1)] = -2
    elif fam == "D":
        edges = {(i, i + 1): -1 for i in range(n - 2)}
        edges[(n - 3, n - 1)] = -1
    elif fam == "E":
        edges = {(0, 2): -1, (1, 3): -1}
        edges.update({(i, i + 1): -1 for i in range(2, n - 1)})
    elif fam == "F":
        lengths = [4, 4, 2, 2]
        edges = {(0, 1): -2, (1, 2): -2, (2, 3): -1}
    elif fam == "G":
        lengths = [2, 6]
        edges = {(0, 1): -3}
    return lengths, edges


def cartan_matrix(t: DynkinType) -> tuple[tuple[int, ...], ...]:
    lengths, edges = _gram_data(t)
    n = t.rank
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = lengths[i]
    for (i, j), v in edges.items():
        gram[i][j] = gram[j][i] = v
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            num = 2 * gram[j][i]
            assert num % lengths[i] == 0
            row.append(num // lengths[i])
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class RootSystem:
    """Immutable root datum of a simple type.

    ``positive_roots[k]`` and ``coroots[k]`` are the k-th positive root in
    the simple-root basis and its coroot in the simple-coroot basis.  The
    first ``n`` entries are the simple roots in node order.
    """

    type: DynkinType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[RootVector, ...]
    coroots: tuple[RootVector, ...]
    simple_lengths: tuple[int, ...]
    _root_index: dict = field(repr=False, compare=False, hash=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    @property
    def is_simply_laced(self) -> bool:
        return len(set(self.simple_lengths)) == 1

    def short_simple_indices(self) -> list[int]:
        """1-based indices of the short simple roots (empty if simply laced)."""
        if self.is_simply_laced:
            return []
        longest = max(self.simple_lengths)
        return [i + 1 for i, d in enumerate(self.simple_lengths) if d < longest]

    def fundamental_weight(self, i: int) -> Weight:
        self.check_letter(i)
        return tuple(int(j == i - 1) for j in range(self.rank))

    def simple_root(self, i: int) -> RootVector:
        self.check_letter(i)
        return tuple(int(j == i - 1) for j in range(self.rank))

    def check_letter(self, i: int) -> None:
        if not isinstance(i, (int, np.integer)) or not 1 <= i <= self.rank:
            raise LetterError(f"simple index {i} out of range 1..{self.rank} for {self.type}")

    def root_index(self, root: RootVector) -> int | None:
        return self._root_index.get(tuple(root))

    def is_root(self, root: RootVector) -> bool:
        root = tuple(root)
        return root in self._root_index or tuple(-c for c in root) in self._root_index

    def root_to_weight(self, root: RootVector) -> Weight:
        n = self.rank
        return tuple(sum(self.cartan[i][j] * root[j] for j in range(n)) for i in range(n))

    def weight_to_root(self, weight: Weight) -> RootVector:
        """Simple-root coordinates of a weight in the root lattice.

        Raises ValueError when the weight is not in the root lattice.
        """
        a = np.array(self.cartan, dtype=float)
        x = np.linalg.solve(a, np.array(weight, dtype=float))
        root = tuple(int(v) for v in np.rint(x))
        if self.root_to_weight(root) != tuple(weight):
            raise ValueError(f"weight {weight} is not in the root lattice of {self.type}")
        return root

    def highest_root(self) -> RootVector:
        return max(self.positive_roots, key=sum)


def reflect_root(cartan, i: int, root: RootVector) -> RootVector:
    """s_i applied to a root vector; ``i`` is 0-based."""
    c = sum(cartan[i][j] * root[j] for j in range(len(root)))
    out = list(root)
    out[i] -= c
    return tuple(out)


def reflect_coroot(cartan, i: int, coroot: RootVector) -> RootVector:
    """s_i applied to a coroot in the simple-coroot basis; ``i`` is 0-based."""
    c = sum(coroot[j] * cartan[j][i] for j in range(len(coroot)))
    out = list(coroot)
    out[i] -= c
    return tuple(out)


@functools.lru_cache(maxsize=None)
def build_root_system(t: DynkinType) -> RootSystem:
    """Build the root system of type ``t``.

    Positive roots are obtained by closing the simple roots under simple
    reflections, tracking each coroot alongside its root.
    """
    if isinstance(t, str):
        t = DynkinType.parse(t)
    cartan = cartan_matrix(t)
    n = t.rank
    simple = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    roots: list[RootVector] = list(simple)
    coroots: list[RootVector] = list(simple)
    index = {r: k for k, r in enumerate(roots)}
    queue = deque(range(n))
    while queue:
        k = queue.popleft()
        beta, beta_v = roots[k], coroots[k]
        for i in range(n):
            if beta == simple[i]:
                continue
            image = reflect_root(cartan, i, beta)
            if image in index:
                continue
            if min(image) < 0:
                raise AssertionError(f"closure produced a non-positive root {image}")
            index[image] = len(roots)
            roots.append(image)
            coroots.append(reflect_coroot(cartan, i, beta_v))
            queue.append(len(roots) - 1)

    expected = _POSITIVE_ROOT_COUNT[t.family](n)
    if len(roots) != expected:
        raise AssertionError(f"{t}: found {len(roots)} positive roots, expected {expected}")
    lengths, _ = _gram_data(t)
    return RootSystem(
        type=t,
        cartan=cartan,
        positive_roots=tuple(roots),
        coroots=tuple(coroots),
        simple_lengths=tuple(lengths),
        _root_index=index,
    )


def root_system(family: str, rank: int | None = None) -> RootSystem:
    """Convenience constructor: ``root_system("A", 3)`` or ``root_system("A3")``."""
    if rank is None:
        return build_root_system(DynkinType.parse(family))
    return build_root_system(DynkinType(family, rank))


def pairing(rs: RootSystem, weight: Weight, beta: int) -> int:
    """<weight, beta> for the positive root with 0-based index ``beta``."""
    if not 0 <= beta < len(rs.positive_roots):
        raise IndexError(f"positive root index {beta} out of range")
    coroot = rs.coroots[beta]
    return sum(a * b for a, b in zip(weight, coroot))


def pair_with_root(rs: RootSystem, weight: Weight, root: RootVector) -> int:
    """<weight, root> for any root (positive or negative)."""
    root = tuple(root)
    k = rs.root_index(root)
    if k is not None:
        return pairing(rs, weight, k)
    k = rs.root_index(tuple(-c for c in root))
    if k is None:
        raise ValueError(f"{root} is not a root of {rs.type}")
    return -pairing(rs, weight, k)


def simple_reflection(rs: RootSystem, i: int, weight: Weight) -> Weight:
    """s_i(weight) = weight - <weight, alpha_i> alpha_i, with 1-based ``i``."""
    rs.check_letter(i)
    c = weight[i - 1]
    if c == 0:
        return tuple(weight)
    col = i - 1
    return tuple(w - c * rs.cartan[row][col] for row, w in enumerate(weight))


def minuscule_weights(rs: RootSystem) -> list[int]:
    """1-based indices m with <omega_m, beta> <= 1 for every positive root."""
    return [
        m + 1
        for m in range(rs.rank)
        if all(coroot[m] <= 1 for coroot in rs.coroots)
    ]

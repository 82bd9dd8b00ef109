import numpy as np
import pytest

from bottsamelson.errors import LetterError, RankError
from bottsamelson.rootsys import (
    DynkinType,
    build_root_system,
    cartan_matrix,
    minuscule_weights,
    pairing,
    root_system,
    simple_reflection,
)

# |R+| and det(Cartan) from the standard tables
TABLE = {
    "A1": (1, 2), "A2": (3, 3), "A3": (6, 4), "A4": (10, 5),
    "B2": (4, 2), "B3": (9, 2), "B4": (16, 2),
    "C3": (9, 2), "C4": (16, 2),
    "D4": (12, 4), "D5": (20, 4),
    "E6": (36, 3), "E7": (63, 2), "E8": (120, 1),
    "F4": (24, 1), "G2": (6, 1),
}

HIGHEST = {
    "A3": (1, 1, 1), "B3": (1, 2, 2), "C3": (2, 2, 1), "D4": (1, 2, 1, 1),
    "G2": (3, 2), "F4": (2, 3, 4, 2), "E6": (1, 2, 2, 3, 2, 1),
    "E8": (2, 3, 4, 6, 5, 4, 3, 2),
}

ALL_TYPES = sorted(TABLE)


@pytest.mark.parametrize("name", ALL_TYPES)
def test_positive_root_count_and_determinant(name):
    rs = root_system(name)
    n_pos, det = TABLE[name]
    assert len(rs.positive_roots) == n_pos
    assert round(np.linalg.det(np.array(rs.cartan, dtype=float))) == det


@pytest.mark.parametrize("name", ALL_TYPES)
def test_cartan_is_symmetrizable(name):
    rs = root_system(name)
    n = rs.rank
    d = rs.simple_lengths
    for i in range(n):
        assert rs.cartan[i][i] == 2
        for j in range(n):
            # D A symmetric, with D = diag(|alpha_i|^2)
            assert d[i] * rs.cartan[i][j] == d[j] * rs.cartan[j][i]


@pytest.mark.parametrize("name,root", sorted(HIGHEST.items()))
def test_highest_root(name, root):
    assert root_system(name).highest_root() == root


@pytest.mark.parametrize("name", ALL_TYPES)
def test_coroots_match_lengths(name):
    rs = root_system(name)
    lengths = rs.simple_lengths
    for beta, cobeta in zip(rs.positive_roots, rs.coroots):
        norm = sum(bi * bj * lengths[i] * rs.cartan[i][j]
                   for i, bi in enumerate(beta) for j, bj in enumerate(beta)) / 2
        expected = tuple(b * lengths[i] / norm for i, b in enumerate(beta))
        assert cobeta == pytest.approx(expected)


def test_short_simple_roots():
    assert root_system("B3").short_simple_indices() == [3]
    assert root_system("C3").short_simple_indices() == [1, 2]
    assert root_system("F4").short_simple_indices() == [3, 4]
    assert root_system("G2").short_simple_indices() == [1]
    assert root_system("D4").short_simple_indices() == []


def test_minuscule_weights():
    assert minuscule_weights(root_system("A3")) == [1, 2, 3]
    assert minuscule_weights(root_system("B3")) == [3]
    assert minuscule_weights(root_system("C3")) == [1]
    assert minuscule_weights(root_system("D4")) == [1, 3, 4]
    assert minuscule_weights(root_system("E6")) == [1, 6]
    assert minuscule_weights(root_system("E7")) == [7]
    for t in ("E8", "F4", "G2"):
        assert minuscule_weights(root_system(t)) == []


@pytest.mark.parametrize("bad", [("A", 0), ("B", 1), ("C", 2), ("D", 3), ("E", 5), ("E", 9),
                                 ("F", 3), ("G", 3), ("H", 3), ("A", 11)])
def test_rank_bounds(bad):
    with pytest.raises((RankError, ValueError)):
        DynkinType(*bad)


def test_parse_and_str():
    t = DynkinType.parse("D4")
    assert (t.family, t.rank, str(t)) == ("D", 4, "D4")
    assert root_system("A", 3) is root_system("A3")
    with pytest.raises(ValueError):
        DynkinType.parse("Q2")


def test_simple_reflection_and_pairing():
    rs = root_system("A2")
    assert simple_reflection(rs, 1, (1, 0)) == (-1, 1)
    assert simple_reflection(rs, 2, (1, 0)) == (1, 0)
    # highest root alpha1 + alpha2 pairs to 1 with omega_1
    top = rs.root_index(rs.highest_root())
    assert pairing(rs, (1, 0), top) == 1
    with pytest.raises(LetterError):
        rs.check_letter(3)
    with pytest.raises(IndexError):
        pairing(rs, (1, 0), 99)


def test_weight_root_round_trip():
    rs = root_system("F4")
    for beta in rs.positive_roots:
        assert rs.weight_to_root(rs.root_to_weight(beta)) == beta
    with pytest.raises(ValueError):
        root_system("A1").weight_to_root((1,))  # omega_1 = alpha_1 / 2


def test_cartan_matrix_columns_are_simple_roots():
    t = DynkinType("B", 3)
    rs = build_root_system(t)
    C = cartan_matrix(t)
    for j in range(3):
        assert rs.root_to_weight(rs.simple_root(j + 1)) == tuple(C[i][j] for i in range(3))

import random
from itertools import permutations

import pytest

from aggroup.groupid import (
    GroupOrderCapError,
    GroupTable,
    abelian,
    abelian_invariant_factors,
    alternating4,
    cyclic,
    dihedral,
    direct_product,
    invariants,
    is_dihedral,
    is_isomorphic,
    model,
    quaternion,
    recognize,
    standard_models,
    symmetric4,
)


def sym3() -> GroupTable:
    perms = list(permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    return GroupTable([[idx[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms])


def shuffled(G: GroupTable, seed: int) -> GroupTable:
    """An isomorphic copy with the identity moved off index 0 too."""
    n = G.order
    sigma = list(range(n))
    random.Random(seed).shuffle(sigma)
    rows = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            rows[sigma[x]][sigma[y]] = sigma[G.mul(x, y)]
    return GroupTable(rows)


def check_mapping(G, H, m):
    assert sorted(m.values()) == list(range(H.order))
    for x in range(G.order):
        for y in range(G.order):
            assert m[G.mul(x, y)] == H.mul(m[x], m[y])


def test_group_table_rejects_non_groups():
    with pytest.raises(ValueError):
        GroupTable([[0, 1, 2], [2, 0, 1], [1, 2, 0]])  # E1: not associative


@pytest.mark.parametrize("m, names", [
    (1, ["C1"]), (2, ["C2"]), (4, ["C4", "C2xC2"]), (6, ["C6", "S3"]),
    (8, ["C8", "C2xC4", "C2xC2xC2", "D4", "Q8"]), (12, ["C12", "C2xC6", "D6", "A4"]),
])
def test_standard_models(m, names):
    assert sorted(n for n, _ in standard_models(m)) == sorted(names)


def test_abelian_invariant_factors():
    assert sorted(abelian_invariant_factors(8)) == sorted([[8], [2, 4], [2, 2, 2]])
    assert abelian_invariant_factors(6) == [[6]]


def test_models_pairwise_non_isomorphic():
    for m in (4, 6, 8, 12, 16):
        ms = standard_models(m)
        for i, (_, A) in enumerate(ms):
            for _, B in ms[i + 1:]:
                assert is_isomorphic(A, B) is None


def test_recognize_relabelled_copies():
    for m in (2, 3, 4, 5, 6, 8, 10, 12, 14, 16):
        for name, G in standard_models(m):
            H = shuffled(G, m)
            assert recognize(H) == name
            mp = is_isomorphic(G, H)
            assert mp is not None
            check_mapping(G, H, mp)


def test_s3_and_d3_agree():
    assert recognize(sym3()) == "S3"
    assert is_isomorphic(dihedral(3), sym3()) is not None


def test_named_constructions():
    assert recognize(direct_product(cyclic(2), cyclic(3))) == "C6"
    assert recognize(quaternion()) == "Q8"
    assert recognize(alternating4()) == "A4"
    assert recognize(symmetric4()) == "S4"
    assert recognize(abelian([2, 2])) == "C2xC2"
    assert model("D4").order == 8


def test_order_sequence_invariant():
    assert invariants(quaternion()) != invariants(dihedral(4))


def test_dihedral_predicate():
    assert is_dihedral(dihedral(4)) and is_dihedral(sym3())
    assert not is_dihedral(quaternion())
    assert not is_dihedral(cyclic(4))
    # D2 = C2xC2 is excluded by convention
    assert not is_dihedral(abelian([2, 2]))


def test_order_cap():
    with pytest.raises(GroupOrderCapError):
        recognize(cyclic(25))


def test_unrecognized_name():
    # C3 x S3 has order 18 and is not in the model list
    assert recognize(direct_product(cyclic(3), sym3())).startswith("unrecognized")

import pytest

from qfilters.boolfuncs import (
    BooleanFunction,
    Partition,
    all_functions,
    constant_in_argument,
    decision_partition,
    decision_partition_diff,
    decision_predicate,
    deutsch_partition,
    enumeration_by_weight,
    is_constant,
    parity,
    parity_partition,
    sum_function,
    sum_label,
)


def popcount_parity(fid: int) -> str:
    # independent oracle: the table is the binary expansion of the id
    return "+" if bin(fid).count("1") % 2 == 0 else "-"


def test_table_id_round_trip():
    f = BooleanFunction.from_id(2, 1)
    assert f.table == (0, 0, 0, 1)
    assert f.id == 1
    assert BooleanFunction.from_id(2, 2).table == (0, 0, 1, 0)
    assert BooleanFunction(2, (1, 0, 1, 1)).id == 11


def test_from_string():
    assert BooleanFunction.from_string("0001").id == 1
    assert BooleanFunction.from_string("0x9", k=2).table == (1, 0, 0, 1)
    with pytest.raises(ValueError):
        BooleanFunction.from_string("012")
    with pytest.raises(ValueError):
        BooleanFunction.from_string("0")
    with pytest.raises(ValueError):
        BooleanFunction.from_string("0x1")  # hex needs k
    with pytest.raises(ValueError):
        BooleanFunction.from_string("0011", k=3)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_parity_matches_popcount(k):
    for f in all_functions(k):
        assert parity(f) == popcount_parity(f.id)


def test_parity_examples():
    assert parity(BooleanFunction.from_id(2, 0)) == "+"
    assert parity(BooleanFunction.from_id(2, 1)) == "-"
    assert parity(BooleanFunction.from_id(2, 15)) == "+"


def test_is_constant():
    assert is_constant(BooleanFunction.from_id(1, 0))
    assert not is_constant(BooleanFunction.from_id(1, 2))
    assert is_constant(BooleanFunction.from_id(1, 3))


def test_constant_in_argument():
    assert constant_in_argument(0, 1, "first")
    assert not constant_in_argument(1, 0, "first")
    assert not constant_in_argument(3, 2, "second")
    assert constant_in_argument(2, 3, "second")
    with pytest.raises(ValueError):
        constant_in_argument(4, 0, "first")
    with pytest.raises(ValueError):
        constant_in_argument(0, 0, "third")


def test_deutsch_partition():
    p = deutsch_partition()
    assert p.blocks == ((0, 3), (1, 2))
    assert p.ground == frozenset(range(4))


def test_parity_partition_k2():
    p = parity_partition(2)
    assert set(p.blocks[0]) == {0, 3, 5, 6, 9, 10, 12, 15}
    assert set(p.blocks[1]) == {1, 2, 4, 7, 8, 11, 13, 14}


def test_parity_partition_published_labels():
    # the published listing names the plus block by weight-ordered row
    # labels; mapping ids through that enumeration recovers it
    label_of = {f.id: pos for pos, f in enumerate(enumeration_by_weight(2))}
    plus = {label_of[fid] for fid in parity_partition(2).blocks[0]}
    minus = {label_of[fid] for fid in parity_partition(2).blocks[1]}
    assert plus == {0, 5, 6, 7, 8, 9, 10, 15}
    assert minus == {1, 2, 3, 4, 11, 12, 13, 14}


def test_parity_partition_k1_is_deutsch():
    assert parity_partition(1).blocks == deutsch_partition().blocks


@pytest.mark.parametrize("k", [1, 2, 3])
def test_parity_partition_equal_blocks(k):
    p = parity_partition(k)
    assert len(p.blocks[0]) == len(p.blocks[1]) == 1 << ((1 << k) - 1)


def test_parity_partition_limit():
    with pytest.raises(ValueError):
        parity_partition(5)


def test_enumeration_by_weight_k2():
    ids = [f.id for f in enumeration_by_weight(2)]
    assert ids == [0, 1, 2, 4, 8, 3, 5, 9, 6, 10, 12, 7, 11, 13, 14, 15]


def test_enumeration_complement_symmetry():
    funcs = enumeration_by_weight(2)
    for m in range(16):
        mirrored = tuple(1 - v for v in funcs[m].table)
        assert funcs[15 - m].table == mirrored


def test_sum_function_tables():
    assert sum_function(0, 1).table == (0, 1, 0, 1)
    assert sum_function(1, 1).table == (0, 1, 1, 0)
    assert sum_function(3, 3).table == (0, 0, 0, 0)


def test_decision_partition_d2():
    want = {(0, 0), (1, 0), (2, 0), (3, 0), (0, 3), (1, 3), (2, 3), (3, 3)}
    assert set(decision_partition("D2").blocks[0]) == want


def test_decision_partition_d4():
    want = {(0, 0), (0, 3), (1, 1), (1, 2), (2, 1), (2, 2), (3, 0), (3, 3)}
    assert set(decision_partition("D4").blocks[0]) == want


def test_d3_d4_complementary():
    d3 = decision_partition("D3")
    d4 = decision_partition("D4")
    assert set(d3.blocks[0]) == set(d4.blocks[1])
    assert set(d3.blocks[1]) == set(d4.blocks[0])


def test_d1_d2_joint_refinement():
    d1 = decision_partition("D1")
    d2 = decision_partition("D2")
    sizes = sorted(
        len(set(a) & set(b)) for a in d1.blocks for b in d2.blocks
    )
    assert sizes == [4, 4, 4, 4]


def test_sum_functions_always_even():
    # the mod-2 sum of two one-bit functions hits 1 an even number of times
    for i in range(4):
        for j in range(4):
            assert parity(sum_function(i, j)) == "+"


def test_one_bit_parity_cross_link():
    # both-or-neither constant is the same as equal one-bit parities
    for i in range(4):
        for j in range(4):
            fi = BooleanFunction.from_id(1, i)
            fj = BooleanFunction.from_id(1, j)
            assert (parity(fi) == parity(fj)) == decision_predicate("D4", i, j)


def test_one_bit_parity_is_constancy():
    for i in range(4):
        f = BooleanFunction.from_id(1, i)
        assert (parity(f) == "+") == is_constant(f)


def test_decision_diff_d1_documented_defect():
    diff = decision_partition_diff("D1")
    assert diff.duplicated == ("f32", "f33")
    assert diff.missing == ("f22", "f23")
    assert diff.block_mismatches == ()
    assert not diff.clean


@pytest.mark.parametrize("problem", ["D2", "D3", "D4"])
def test_decision_diff_others_clean(problem):
    assert decision_partition_diff(problem).clean


def test_sum_label():
    assert sum_label(3, 2) == "f32"


def test_partition_validation():
    with pytest.raises(ValueError, match="disjoint"):
        Partition(((0, 1), (1, 2)))
    with pytest.raises(ValueError, match="cover"):
        Partition.over(range(4), [(0, 1), (2,)])
    with pytest.raises(ValueError, match="repeated"):
        Partition(((0, 0),))


def test_restrict_last():
    f = BooleanFunction.from_id(2, 1)  # 0001
    assert f.restrict_last(0).table == (0, 0)
    assert f.restrict_last(1).table == (0, 1)

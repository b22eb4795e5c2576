import numpy as np
import pytest

from spreadbent import (
    OddArity,
    OverlapDetected,
    TruthTable,
    WrongSpreadSize,
    algebraic_degree,
    anf,
    build_partial_spread,
    field,
    format_anf,
    from_spread,
    is_bent,
    mobius,
    nonlinearity,
    poly,
    truth_table_of_anf,
    walsh_transform,
)

GF2 = field(1)

MINUS_FAMILY = [poly(GF2, (1, 0, 1)), poly(GF2, (1, 1, 1))]
PLUS_FAMILY = MINUS_FAMILY + [poly(GF2, (0, 0, 1))]


def golden_pair():
    g = from_spread(build_partial_spread(MINUS_FAMILY, b=2), plus_type=False)
    h = from_spread(build_partial_spread(PLUS_FAMILY, b=2), plus_type=True)
    return g, h


def naive_walsh(tt):
    n = tt.n
    out = []
    for a in range(1 << n):
        acc = 0
        for x in range(1 << n):
            acc += (-1) ** (int(tt.bits[x]) ^ bin(a & x).count("1"))
        out.append(acc)
    return out


def test_from_support_round_trip():
    tt = TruthTable.from_support(4, [5, 6, 10, 11, 13, 15])
    assert tt.support() == [5, 6, 10, 11, 13, 15]
    assert tt.weight() == 6
    assert TruthTable.from_hex(4, tt.hex()) == tt


def test_hex_packs_index_zero_first():
    tt = TruthTable.from_support(2, [0])
    assert tt.hex() == "8"
    g, h = golden_pair()
    assert g.hex() == "0635"
    assert h.hex() == "f635"


def test_empty_support():
    tt = TruthTable.from_support(3, [])
    assert tt.weight() == 0
    assert tt.hex() == "00"
    assert TruthTable.from_hex(3, "00") == tt


def test_golden_tables_bit_exact():
    g, h = golden_pair()
    assert list(g.bits) == [0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 1, 0, 1]
    assert list(h.bits) == [1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 1, 0, 1]


def test_golden_anf():
    g, h = golden_pair()
    assert anf(g).monomials() == [5, 6, 10]
    assert anf(h).monomials() == [0, 4, 5, 6, 8, 10, 12]
    assert format_anf(anf(g)) == "x1*x3 + x2*x3 + x2*x4"


def test_walsh_matches_naive_small():
    rng = np.random.default_rng(7)
    for n in (1, 2, 3):
        for _ in range(10):
            tt = TruthTable(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8))
            assert list(walsh_transform(tt).values) == naive_walsh(tt)


def test_parseval():
    g, h = golden_pair()
    for tt in (g, h):
        values = walsh_transform(tt).values.astype(np.int64)
        assert int((values**2).sum()) == 1 << (2 * tt.n)


def test_bent_and_nonlinearity():
    g, h = golden_pair()
    for tt in (g, h):
        assert is_bent(tt)
        assert nonlinearity(walsh_transform(tt)) == 6
    flat = TruthTable(4, np.zeros(16, dtype=np.uint8))
    assert not is_bent(flat)
    with pytest.raises(OddArity):
        is_bent(TruthTable.from_support(3, [1]))


def test_mobius_involution():
    rng = np.random.default_rng(11)
    for _ in range(20):
        bits = rng.integers(0, 2, size=64, dtype=np.uint8)
        assert np.array_equal(mobius(mobius(bits)), bits)


def test_anf_truth_table_inverse():
    rng = np.random.default_rng(13)
    for _ in range(20):
        tt = TruthTable(4, rng.integers(0, 2, size=16, dtype=np.uint8))
        assert truth_table_of_anf(anf(tt)) == tt


def test_algebraic_degree():
    g, h = golden_pair()
    assert algebraic_degree(anf(g)) == 2
    assert algebraic_degree(anf(h)) == 2
    zero_tt = TruthTable(3, np.zeros(8, dtype=np.uint8))
    assert algebraic_degree(anf(zero_tt)) == 0
    const_tt = TruthTable(3, np.ones(8, dtype=np.uint8))
    assert algebraic_degree(anf(const_tt)) == 0
    assert anf(const_tt).monomials() == [0]


def test_weight_formulas():
    g, h = golden_pair()
    assert g.weight() == 2**3 - 2**1
    assert h.weight() == 2**3 + 2**1


def test_from_spread_size_errors():
    spread = build_partial_spread(MINUS_FAMILY, b=2)
    with pytest.raises(WrongSpreadSize):
        from_spread(spread, plus_type=True)  # 2 members where ps+ needs 3
    with pytest.raises(WrongSpreadSize):
        from_spread([], plus_type=False)


def test_from_spread_overlap_error():
    spread = build_partial_spread(MINUS_FAMILY, b=2)
    with pytest.raises(OverlapDetected):
        from_spread([spread[0], spread[0]], plus_type=False)


def test_format_anf_degenerate():
    zero_tt = TruthTable(2, np.zeros(4, dtype=np.uint8))
    assert format_anf(anf(zero_tt)) == "0"
    const_tt = TruthTable(2, np.ones(4, dtype=np.uint8))
    assert format_anf(anf(const_tt)) == "1"

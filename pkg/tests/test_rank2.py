import numpy as np
import pytest

from spreadbent import (
    BEYOND_DS,
    BEYOND_MM,
    WITHIN_MM_RANGE,
    TruthTable,
    build_partial_spread,
    classify,
    development_matrix,
    development_rank,
    ds_rank_bounds,
    field,
    from_spread,
    mm_rank_bounds,
    poly,
    rank_gf2,
    report,
)


def naive_rank_gf2(rows):
    rows = [int(r) for r in rows]
    rank = 0
    for col in range(max(r.bit_length() for r in rows) if any(rows) else 0):
        mask = 1 << col
        pivot = next((i for i in range(rank, len(rows)) if rows[i] & mask), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & mask:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


def pack_rows(matrix):
    return np.packbits(np.asarray(matrix, dtype=np.uint8), axis=1)


def test_development_matrix_symmetry():
    tt = TruthTable.from_support(4, [5, 6, 10, 11, 13, 15])
    packed = development_matrix(tt)
    unpacked = np.unpackbits(packed, axis=1)[:, :16]
    assert np.array_equal(unpacked, unpacked.T)
    assert list(unpacked[0]) == list(tt.bits)


def test_rank_gf2_matches_naive_random():
    rng = np.random.default_rng(21)
    for _ in range(50):
        matrix = rng.integers(0, 2, size=(32, 32), dtype=np.uint8)
        as_ints = [int("".join(map(str, row[::-1])), 2) if row.any() else 0 for row in matrix]
        assert rank_gf2(pack_rows(matrix), 32) == naive_rank_gf2(as_ints)


def test_rank_gf2_identity_and_zero():
    eye = np.eye(24, dtype=np.uint8)
    assert rank_gf2(pack_rows(eye), 24) == 24
    assert rank_gf2(pack_rows(np.zeros((24, 24), dtype=np.uint8)), 24) == 0


def test_known_rank_n4():
    spec = field(1)
    fam = [poly(spec, (1, 0, 1)), poly(spec, (1, 1, 1))]
    tt = from_spread(build_partial_spread(fam, b=2), plus_type=False)
    assert development_rank(tt) == 6


def test_bounds_values():
    assert mm_rank_bounds(4) == (10, 30)
    assert ds_rank_bounds(4) == (30, 42)
    assert mm_rank_bounds(2) == (6, 6)
    assert ds_rank_bounds(2) == (6, 6)


def test_classification_thresholds():
    assert classify(44, 4) == BEYOND_DS
    assert classify(30, 4) == WITHIN_MM_RANGE
    assert classify(36, 4) == BEYOND_MM
    assert classify(42, 4) == BEYOND_MM
    assert classify(43, 4) == BEYOND_DS
    assert classify(6, 2) == WITHIN_MM_RANGE


def test_report_bundles_fields():
    r = report(44, 4)
    assert (r.rank, r.m, r.classification) == (44, 4, BEYOND_DS)

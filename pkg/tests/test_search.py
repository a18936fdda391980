import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zonobelt import catalog, search
from zonobelt.belts import belt_diameter, belt_distance
from zonobelt.conjugate import assemble, pair_facets
from zonobelt.errors import BoundViolation
from zonobelt.search import (
    OrbitCanon,
    SearchOptions,
    SearchReport,
    bound_45,
    bound_log2,
    decode,
    encode,
    evaluate,
    orbit_representatives,
    parse_bits,
    rows_ok,
    search_xi,
    spot_check,
)


@pytest.mark.parametrize("d", range(1, 200))
def test_bounds_match_float_formula(d):
    assert bound_log2(d) == max(0, math.ceil(math.log2(d)))
    assert bound_45(d) == max(0, math.ceil(math.log2(0.8 * d) - 1e-12))


def test_bound_values():
    assert bound_45(6) == 3 and bound_log2(6) == 3
    assert bound_45(5) == 2 and bound_log2(5) == 3
    assert bound_45(10) == 3 and bound_log2(10) == 4


@settings(max_examples=200)
@given(st.integers(1, 5).flatmap(lambda m: st.tuples(st.just(m), st.integers(0, (1 << (m * m)) - 1))))
def test_encode_decode_roundtrip(mi):
    m, index = mi
    assert encode(decode(index, m)) == index


def test_encoding_lsb_is_top_left():
    assert decode(1, 2) == [[1, 0], [0, 0]]
    assert decode(1 << 2, 2) == [[0, 0], [1, 0]]
    assert encode(catalog.PAPER_A) == search.encode(parse_bits("1100001100001100001110001", 5))


def test_rows_ok():
    assert rows_ok(encode([[1, 0, 0], [0, 1, 0], [0, 0, 0]]), 3)
    assert not rows_ok(encode([[1, 1, 0], [0, 0, 0], [0, 0, 0]]), 3)


def test_orbit_count_m3():
    assert sum(1 for _ in orbit_representatives(3)) == 36


def test_orbit_canonical_is_invariant():
    canon = OrbitCanon(3)
    A = [[1, 1, 0], [0, 0, 1], [1, 0, 0]]
    B = [row[::-1] for row in A[::-1]]
    assert canon.canonical(encode(A)) == canon.canonical(encode(B))
    assert canon.canonical(encode(A)) <= encode(A)


def test_evaluate_paper_matrix():
    o = evaluate(6, encode(catalog.PAPER_A))
    assert o.conjugated and o.parallelohedron
    assert (o.pair_distance, o.diameter) == (3, 3)


def test_spot_check_paper_matrix():
    rep = spot_check(6, catalog.PAPER_A)
    assert rep.max_pair_distance == 3 and rep.max_diameter == 3
    assert rep.argmax_pair == [encode(catalog.PAPER_A)]


@pytest.fixture(scope="module")
def d4_full():
    return search_xi(4)


def test_d4_full_scan(d4_full):
    assert d4_full.complete and d4_full.scanned == 512
    assert d4_full.max_pair_distance == 2
    assert d4_full.max_diameter == 2


def test_d4_reductions_agree(d4_full):
    for opts in (SearchOptions(row_filter=True), SearchOptions(symmetry_reduction=True),
                 SearchOptions(row_filter=True, symmetry_reduction=True)):
        rep = search_xi(4, opts)
        assert rep.max_pair_distance == d4_full.max_pair_distance
        assert rep.max_diameter == d4_full.max_diameter
        assert rep.scanned < d4_full.scanned


def test_d4_argmax_reverified(d4_full):
    for index in d4_full.argmax_pair:
        V = assemble(decode(index, 3))
        P, Q = pair_facets(V, 3)
        assert belt_distance(V, P, Q) == d4_full.max_pair_distance
    for index in d4_full.argmax_diameter:
        assert belt_diameter(assemble(decode(index, 3))) == d4_full.max_diameter


def test_d3_scan():
    rep = search_xi(3)
    assert rep.scanned == 16
    assert rep.max_pair_distance <= 2


@pytest.mark.parametrize("stop", [1, 7, 100, 511])
def test_checkpoint_resume_d4(tmp_path, d4_full, stop):
    ck = tmp_path / "ck.json"
    opts = SearchOptions(checkpoint_path=ck, chunk_size=64, stop_after=stop)
    first = search_xi(4, opts)
    assert not first.complete
    saved = json.loads(ck.read_text())
    assert saved["nextIndex"] == first.next_index and saved["version"] == 1
    resumed = search_xi(4, SearchOptions(checkpoint_path=ck, chunk_size=64))
    assert resumed.complete
    assert resumed.comparable() == d4_full.comparable()


def test_checkpoint_rejects_other_options(tmp_path):
    ck = tmp_path / "ck.json"
    search_xi(4, SearchOptions(checkpoint_path=ck, stop_after=10))
    with pytest.raises(ValueError):
        search_xi(4, SearchOptions(checkpoint_path=ck, row_filter=True))


def test_workers_are_deterministic(d4_full):
    rep = search_xi(4, SearchOptions(workers=2, chunk_size=50))
    assert rep.comparable() == d4_full.comparable()


def test_report_json_roundtrip(d4_full):
    data = d4_full.to_json()
    assert data["maxPairDistance"] == 2 and "version" in data
    again = SearchReport.from_json(json.loads(json.dumps(data)))
    assert again.comparable() == d4_full.comparable()


def test_argmax_cap():
    rep = search_xi(4, SearchOptions(argmax_limit=2))
    assert len(rep.argmax_diameter) <= 2
    assert rep.argmax_diameter_count == search_xi(4).argmax_diameter_count > 2


def test_bound_violation_writes_reproducer(tmp_path, monkeypatch):
    monkeypatch.setattr(search, "bound_45", lambda d: 1)
    path = tmp_path / "repro.json"
    with pytest.raises(BoundViolation) as info:
        search.scan_range(4, 0, 512, reproducer_path=path)
    data = json.loads(path.read_text())
    assert data["A"] == info.value.matrix
    assert data["diameter"] == 2


def test_dimension_range():
    with pytest.raises(ValueError):
        search_xi(8)

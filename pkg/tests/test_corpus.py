import pytest

from conftest import burnside_count
from sgchroma.core import BoundExceeded, canonical_form
from sgchroma.harness import corpus
from sgchroma.harness.corpus import class_count, enumerate_all, unsigned_graphs


def test_small_orders():
    assert class_count(1) == 1
    assert class_count(2) == 3
    assert class_count(3) == 11  # regression value, equals the orbit count below


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_counts_match_burnside(n):
    assert class_count(n) == burnside_count(n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_counts_with_loops_match_burnside(n):
    assert class_count(n, loops=True) == burnside_count(n, loops=True)


def test_representatives_are_distinct_classes():
    for n in range(1, 6):
        forms = [canonical_form(g) for g in enumerate_all(n)]
        assert len(set(forms)) == len(forms)


def test_cache_roundtrip(tmp_path, monkeypatch):
    monkeypatch.setenv("SGCHROMA_CACHE", str(tmp_path))
    first = list(enumerate_all(4))
    assert (tmp_path / "signed-n4-noloops-v1.txt").exists()
    assert list(enumerate_all(4)) == first


def test_bounds():
    with pytest.raises(BoundExceeded):
        list(enumerate_all(corpus.SIGNED_BOUND + 1))
    with pytest.raises(BoundExceeded):
        list(unsigned_graphs(8))


def test_unsigned_counts():
    counts = {}
    for G in unsigned_graphs(7):
        counts[G.n] = counts.get(G.n, 0) + 1
    assert counts == {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}

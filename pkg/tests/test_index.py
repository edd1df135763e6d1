import random
from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given, strategies as st

from srcount import (
    IndexConfig, InvalidInputError, LabeledText, QueryStats, SrcIndex, SrcQuery,
    build_index, count, is_empty, report_one,
)
from srcount import oracle

from conftest import EXAMPLE_LABELS, EXAMPLE_TEXT, random_text


def test_example_counts(example_idx):
    assert example_idx.tau == 2
    assert example_idx.count("ab", 20, 40) == 1
    assert example_idx.count("ab", 0, 93) == 2
    assert example_idx.count("zz", 0, 93) == 0
    st = QueryStats()
    assert example_idx.count("abracadabra", 0, 93, stats=st) == 1
    assert st.path == "long"


def test_module_level_api(example_idx):
    q = SrcQuery("ab", 20, 40)
    assert count(example_idx, q) == 1
    assert not is_empty(example_idx, q)
    assert report_one(example_idx, q) == 8
    assert example_idx.query(q) == 1


def test_emptiness(example_idx):
    assert not example_idx.is_empty("ab", 20, 40)
    assert example_idx.is_empty("ab", 90, 93)
    assert example_idx.is_empty("q", 0, 93)


def test_report_one(example_idx):
    assert example_idx.report_one("ab", 20, 40) == 8
    assert example_idx.report_one("ab", 0, 93) in {1, 8}
    assert example_idx.report_one("ab", 0, 93, path="long") in {1, 8}
    assert example_idx.report_one("zz", 0, 93) is None
    assert example_idx.report_one("ab", 90, 93) is None


def test_root_string_through_index(example_idx):
    rs = example_idx.tts.string(example_idx.st.root)
    assert example_idx.alphabet.decode(rs.to_list()) == "dbarabacaar"


def test_tiny_indexes():
    idx = build_index(LabeledText("x", [7]))
    assert idx.count("x", 0, 7) == 1
    assert idx.count("xx", 0, 7) == 0
    idx = build_index(LabeledText("aaaa", [1, 2, 3, 4]))
    assert idx.count("a", 0, 4) == 4
    assert idx.count("aa", 2, 3) == 2
    assert idx.count("aaaa", 0, 4) == 1


def test_errors(example_idx):
    with pytest.raises(InvalidInputError):
        example_idx.count("", 0, 5)
    with pytest.raises(InvalidInputError):
        SrcQuery("", 0, 1)
    with pytest.raises(InvalidInputError):
        example_idx.count("ab", 0, 94)
    assert example_idx.count("ab", 40, 20) == 0
    with pytest.raises(InvalidInputError):
        LabeledText("ab", [1])
    with pytest.raises(InvalidInputError):
        LabeledText("ab", [1, 9], u=5)
    with pytest.raises(InvalidInputError):
        SrcIndex(LabeledText("", []))
    with pytest.raises(ValueError):
        example_idx.count("abracadabra", 0, 93, path="short")


def test_bytes_text_accepts_str_patterns():
    idx = SrcIndex(LabeledText(b"abracadabra", EXAMPLE_LABELS))
    assert idx.count(b"ab", 20, 40) == 1
    assert idx.count("ab", 20, 40) == 1


def test_self_check_passes():
    rng = random.Random(4)
    text = random_text(rng, 400, 4)
    lt = LabeledText(text, [rng.randint(0, 1000) for _ in text], 1000)
    SrcIndex(lt, IndexConfig(self_check=True, self_check_queries=100))


def _random_instance(rng, n_max=300):
    n = rng.randint(1, n_max)
    sigma = rng.choice([2, 4, 16])
    u = rng.choice([n, n * n, 2**40])
    text = random_text(rng, n, sigma)
    lt = LabeledText(text, [rng.randint(0, u) for _ in range(n)], u)
    return lt, sigma


def _random_pattern(rng, text, sigma, m):
    if m <= len(text) and rng.random() < 0.7:
        i = rng.randrange(len(text) - m + 1)
        return text[i:i + m]
    return random_text(rng, m, sigma)


@pytest.mark.parametrize("seed", range(8))
def test_properties_random(seed):
    rng = random.Random(seed)
    lt, sigma = _random_instance(rng)
    idx = SrcIndex(lt)
    u = lt.u
    for _ in range(60):
        m = rng.randint(1, 2 * idx.tau + 4)
        p = _random_pattern(rng, lt.text, sigma, m)
        a = rng.randint(0, u)
        b = rng.randint(a, u)
        got = idx.count(p, a, b)
        assert got == oracle.naive_count(lt, p, a, b)
        if a >= 1:
            assert got == idx.count(p, 0, b) - idx.count(p, 0, a - 1)
        b2 = rng.randint(b, u)
        assert got <= idx.count(p, a, b2)
        ext = p + random_text(rng, 1, sigma)
        assert idx.count(ext, a, b) <= got
        occ = oracle.naive_occurrences(lt, p, a, b)
        r = idx.report_one(p, a, b)
        assert (r is None) == (not occ)
        assert r is None or r in occ


@given(st.text(alphabet="ab", min_size=1, max_size=30), st.data())
def test_hypothesis_oracle(text, data):
    labels = data.draw(st.lists(st.integers(0, 20), min_size=len(text), max_size=len(text)))
    lt = LabeledText(text, labels, 20)
    tau = data.draw(st.integers(1, 5))
    idx = SrcIndex(lt, IndexConfig(tau=tau))
    p = data.draw(st.text(alphabet="abc", min_size=1, max_size=8))
    a = data.draw(st.integers(0, 20))
    b = data.draw(st.integers(0, 20))
    want = oracle.naive_count(lt, p, a, b)
    assert idx.count(p, a, b) == want
    assert idx.count(p, a, b, path="long") == want
    if len(p) <= tau:
        stats = QueryStats()
        assert idx.count(p, a, b, path="short", stats=stats) == want
        assert stats.rank_calls <= 2 * len(p)
        stats = QueryStats()
        r = idx.report_one(p, a, b, path="short", stats=stats)
        assert (r is None) == (want == 0)
        assert stats.select_calls <= len(p)


def test_concurrent_queries_agree():
    rng = random.Random(11)
    lt, sigma = _random_instance(rng, 1500)
    idx = SrcIndex(lt)
    queries = []
    for _ in range(400):
        m = rng.randint(1, 2 * idx.tau + 4)
        a = rng.randint(0, lt.u)
        queries.append((_random_pattern(rng, lt.text, sigma, m), a, rng.randint(a, lt.u)))
    serial = [idx.count(*q) for q in queries]
    with ThreadPoolExecutor(4) as pool:
        parallel = list(pool.map(lambda q: idx.count(*q), queries))
    assert parallel == serial

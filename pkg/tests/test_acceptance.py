"""Exit criteria. Each test prints one PASS/FAIL line in the terminal summary.

Time limits exclude one-off JIT compilation, which the warm-up fixture
triggers before any criterion is timed. They are enforced on the default
numba backend only; under the pure-numpy fallback the time is reported.
"""

import random
import time
from contextlib import contextmanager

import numpy as np
import pytest

from srcount import (
    GapSpec, IntervalSet, LabeledText, QueryStats, SrcIndex, aligned_build, aligned_count,
    gaps_build, gaps_count, intervals_build, intervals_count, prsc_build, prsc_count,
)
from srcount import BACKEND, oracle
from srcount.rank_select import RankSelectString
from srcount.suffix_tree import SuffixTree

from conftest import ACCEPTANCE_LINES, EXAMPLE_LABELS, EXAMPLE_TEXT, random_text

pytestmark = pytest.mark.acceptance

CORE_QUERIES = 10_000
APP_QUERIES = 1_000


@contextmanager
def criterion(k: int, desc: str, limit: float | None):
    t0 = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - t0
        if limit is not None and BACKEND == "numba":
            assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
    except BaseException as exc:
        elapsed = time.perf_counter() - t0
        ACCEPTANCE_LINES[k] = f"FAIL criterion {k}: {desc} ({elapsed:.2f}s) -- {exc}"
        raise
    note = "" if limit is None or BACKEND == "numba" else f", {limit:g}s limit not enforced on {BACKEND}"
    ACCEPTANCE_LINES[k] = f"PASS criterion {k}: {desc} ({elapsed:.2f}s{note})"


@pytest.fixture(scope="module", autouse=True)
def warm_up():
    idx = SrcIndex(LabeledText("abcabcab", [1, 2, 3, 4, 5, 6, 7, 8]))
    idx.count("ab", 0, 8)
    idx.count("abcabca", 0, 8)
    idx.report_one("ab", 0, 8)
    idx.report_one("abcabca", 0, 8)
    root = idx.tts.string(idx.st.root)
    root.to_list()
    root.rank(1, 3)
    root.select(1, 1)
    idx.li.label_interval(2, 5)
    rs = RankSelectString([1, 0, 1], 2)
    rs.select(1, 2)
    rs.select(0, 1)


def _pattern(rng, text, sigma, m):
    if m <= len(text) and rng.random() < 0.7:
        i = rng.randrange(len(text) - m + 1)
        return text[i:i + m]
    return random_text(rng, m, sigma)


@pytest.fixture(scope="module")
def core_corpus():
    """Random (text, labels, query) triples shared by criteria 2, 3 and 6."""
    rng = random.Random(20240517)
    corpus = []
    total = 0
    while total < CORE_QUERIES:
        n = rng.randint(1, 2000)
        sigma = rng.choice([2, 4, 16])
        u = rng.choice([n, n * n, 2**40])
        text = random_text(rng, n, sigma)
        lt = LabeledText(text, [rng.randint(0, u) for _ in range(n)], u)
        idx = SrcIndex(lt)
        queries = []
        for _ in range(250):
            m = rng.randint(1, 2 * idx.tau + 4)
            a, b = rng.randint(0, u), rng.randint(0, u)
            if a > b and rng.random() < 0.9:
                a, b = b, a
            queries.append((_pattern(rng, text, sigma, m), a, b))
        corpus.append((lt, idx, queries))
        total += len(queries)
    return corpus


def test_criterion_1_example_walkthrough():
    with criterion(1, "worked example: count('ab',20,40)=1, S_r, [2,6], 'bdb$c' with one 'b' in [1,2]", 1.0):
        idx = SrcIndex(LabeledText(EXAMPLE_TEXT, EXAMPLE_LABELS))
        tree, tts, alpha = idx.st, idx.tts, idx.alphabet
        assert idx.count("ab", 20, 40) == 1
        assert alpha.decode(tts.string(tree.root).to_list()) == "dbarabacaar"
        assert idx.li.label_interval(20, 40) == (2, 6)
        a, b = alpha.encode("ab")
        root_s = tts.string(tree.root)
        assert (root_s.rank(a, 1), root_s.rank(a, 6)) == (0, 2)
        child = tts.string(tree.child(tree.root, a))
        assert alpha.decode(child.to_list()) == "bdb$c"
        lo, hi = root_s.rank(a, 1) + 1, root_s.rank(a, 6)
        assert (lo, hi) == (1, 2)
        assert child.rank(b, hi) - child.rank(b, lo - 1) == 1


def test_criterion_2_oracle_equivalence(core_corpus):
    n_queries = sum(len(q) for _, _, q in core_corpus)
    with criterion(2, f"count == naive_count on {n_queries} random triples", 60.0):
        assert n_queries >= CORE_QUERIES
        mismatches = []
        for lt, idx, queries in core_corpus:
            for p, a, b in queries:
                got = idx.count(p, a, b)
                want = oracle.naive_count(lt, p, a, b)
                if got != want:
                    mismatches.append((lt.n, p, a, b, got, want))
        assert not mismatches, f"{len(mismatches)} mismatches, first {mismatches[0]}"


def test_criterion_3_path_agreement(core_corpus):
    with criterion(3, "forced long path agrees with node-string descent for all m <= tau", 60.0):
        checked = 0
        for _, idx, queries in core_corpus:
            for p, a, b in queries:
                if len(p) <= idx.tau:
                    assert idx.count(p, a, b, path="short") == idx.count(p, a, b, path="long"), (p, a, b)
                    checked += 1
        assert checked > 1000


def test_criterion_4_applications():
    rng = random.Random(77)
    with criterion(4, f"prsc/intervals/gaps/aligned == oracles, >= {APP_QUERIES} queries each", 60.0):
        done = {"prsc": 0, "intervals": 0, "gaps": 0, "aligned": 0}
        gaps_d = {0: 0, 1: 0, 2: 0, 5: 0}
        round_ = 0
        while min(done.values()) < APP_QUERIES:
            sigma = rng.choice([2, 4, 16])
            n = rng.randint(1, 1000)
            text = random_text(rng, n, sigma)
            text2 = random_text(rng, rng.randint(1, 1000), sigma)
            spans = [(s, min(n, s + rng.randint(0, n // 4))) for s in
                     (rng.randint(1, n) for _ in range(rng.randint(0, 4)))]
            d = [0, 1, 2, 5][round_ % 4]
            round_ += 1
            pr = prsc_build(text)
            iv = intervals_build(text, IntervalSet(spans))
            gp = gaps_build(text, GapSpec(d))
            al = aligned_build(text, text2)
            for _ in range(50):
                p1 = _pattern(rng, text, sigma, rng.randint(1, 8))
                p2 = _pattern(rng, text2 if rng.random() < 0.5 else text, sigma, rng.randint(1, 8))
                i = rng.randint(1, n)
                j = rng.randint(i, n)
                assert prsc_count(pr, p1, i, j) == oracle.naive_prsc(text, p1, i, j)
                assert intervals_count(iv, p1, i, j) == oracle.naive_intervals(text, spans, p1, i, j)
                assert gaps_count(gp, p1, p2) == oracle.naive_gaps(text, d, p1, p2)
                assert aligned_count(al, p1, p2) == oracle.naive_aligned(text, text2, p1, p2)
                for k in done:
                    done[k] += 1
                gaps_d[d] += 1
        assert all(v > 0 for v in gaps_d.values())


def test_criterion_5_space():
    rng = random.Random(5)
    with criterion(5, "per-depth stored chars <= n+1, total <= (tau+1)(n+1), n <= 10^4", 10.0):
        for trial in range(12):
            n = rng.randint(1, 10_000) if trial % 3 else rng.randint(8_000, 10_000)
            sigma = rng.choice([2, 4, 16])
            text = random_text(rng, n, sigma)
            lt = LabeledText(text, [rng.randint(0, n) for _ in range(n)], n)
            idx = SrcIndex(lt)
            sizes = idx.tts.level_sizes()
            assert max(sizes) <= n + 1, sizes
            assert sum(sizes) <= (idx.tau + 1) * (n + 1)
            # each level holds exactly the strings of the stored nodes at that tree depth
            tree, tts = idx.st, idx.tts
            per_depth = {}
            for v in np.flatnonzero(tts.stored):
                v = int(v)
                depth, w = 0, v
                while w != tree.root:
                    w = int(tree.parent[w])
                    depth += 1
                per_depth[depth] = per_depth.get(depth, 0) + len(tts.string(v))
            assert [per_depth[k] for k in sorted(per_depth)] == sizes


def test_criterion_6_work_bound(core_corpus):
    with criterion(6, "short-path queries issue <= 2m rank calls", None):
        worst = 0.0
        short = 0
        for _, idx, queries in core_corpus:
            for p, a, b in queries:
                stats = QueryStats()
                idx.count(p, a, b, stats=stats)
                if stats.path == "short":
                    short += 1
                    assert stats.rank_calls <= 2 * len(p), (p, stats)
                    assert stats.edges <= len(p)
                    worst = max(worst, stats.rank_calls / len(p))
                else:
                    assert stats.rank_calls == 0
        assert short > 1000 and worst <= 2


def test_criterion_7_self_consistency():
    rng = np.random.default_rng(7)
    with criterion(7, "rank/select duality and suffix-tree interval partition on 10^5 probes", 10.0):
        probes = 0
        while probes < 60_000:
            sigma = int(rng.choice([2, 4, 16, 64]))
            n = int(rng.integers(1, 5000))
            seq = rng.integers(0, sigma, n)
            rs = RankSelectString(seq, sigma)
            totals = np.bincount(seq, minlength=sigma)
            for _ in range(2000):
                c = int(rng.integers(0, sigma))
                if totals[c] == 0:
                    continue
                j = int(rng.integers(1, totals[c] + 1))
                pos = rs.select(c, j)
                assert rs.rank(c, pos) == j and rs.access(pos) == c
                probes += 1
        while probes < 100_000:
            n = int(rng.integers(1, 3000))
            text = "".join(rng.choice(list("abcd"[: int(rng.choice([1, 2, 4]))]), n))
            tree = SuffixTree.from_text(text)
            for v in rng.integers(0, tree.num_nodes, 2000):
                v = int(v)
                kids = list(tree.children(v).values())
                lo, hi = tree.suffix_interval(v)
                if kids:
                    spans = [tree.suffix_interval(w) for w in kids]
                    assert spans[0][0] == lo and spans[-1][1] == hi
                    assert all(x[1] + 1 == y[0] for x, y in zip(spans, spans[1:]))
                else:
                    assert lo == hi
                probes += 1


def test_criterion_8_asymptotic_proxies():
    desc = ("asymptotic O(n) space / O(m) time not measurable at desk scale; "
            "proxies: rank calls per edge flat in n, stored chars/(n+1) <= tau+1")
    rng = random.Random(8)
    with criterion(8, desc, None):
        per_edge = []
        for n in (1_000, 3_000, 10_000):
            text = random_text(rng, n, 4)
            idx = SrcIndex(LabeledText(text, [rng.randint(0, n) for _ in range(n)], n))
            assert idx.tts.total_chars() <= (idx.tau + 1) * (n + 1)
            calls = edges = 0
            for _ in range(300):
                m = rng.randint(1, idx.tau)
                stats = QueryStats()
                idx.count(_pattern(rng, text, 4, m), 0, n, stats=stats)
                calls += stats.rank_calls
                edges += stats.edges
            per_edge.append(calls / edges)
        assert all(x == 2 for x in per_edge)

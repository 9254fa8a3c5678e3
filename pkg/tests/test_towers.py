import itertools

import pytest

from oracles import BruteMonoid, comb
from skewgrowth import (
    Limits,
    are_equivalent,
    enumerate_towers,
    mcm,
    observed_height,
    parse_preset_spec,
    skew_by_root,
    skew_growth,
)
from skewgrowth.config import BudgetExceeded
from skewgrowth.towers import stage_sizes


@pytest.mark.parametrize("spec, d", [("bii", 6), ("gn:3", 6), ("hn:1", 7), ("abel:2", 6), ("abel:3", 6), ("appendix2", 5), ("free:2", 4)])
def test_skew_matches_brute_towers(spec, d):
    p = parse_preset_spec(spec)
    assert list(skew_growth(p, d).coefficients) == BruteMonoid(p, d).skew()


@pytest.mark.parametrize("spec, d", [("bii", 6), ("gn:3", 6), ("abel:2", 6)])
def test_tower_list_matches_brute(spec, d):
    p = parse_preset_spec(spec)
    ours = sorted(tuple(tuple(e.canonical for e in J) for J in t.stages) for t in enumerate_towers(p, d))
    theirs = sorted(stages for stages, _ in BruteMonoid(p, d).towers())
    assert ours == theirs


def test_sum_of_towers_is_skew(small_preset):
    d = 7
    total = [0] * (d + 1)
    total[0] = 1
    for t in enumerate_towers(small_preset, d):
        for k, c in enumerate(t.contribution().coefficients):
            total[k] += c
    assert total == list(skew_growth(small_preset, d).coefficients)


def test_linear_coefficient(any_preset):
    s = skew_growth(any_preset, 4)
    assert s[0] == 1 and s[1] == -any_preset.rank


def test_strict_degree_growth(small_preset):
    for t in enumerate_towers(small_preset, 7):
        lower = t.ground
        for J, top in zip(t.stages, t.stage_mcms):
            assert set(J) <= set(lower) and len(J) >= 2
            assert min(m.degree for m in top) > max(j.degree for j in J)
            lower = top


def test_root_decomposition(bii):
    d = 10
    total = [0] * (d + 1)
    total[0], total[1] = 1, -3
    for series in skew_by_root(bii, d).values():
        total = [a + b for a, b in zip(total, series.coefficients)]
    assert total == list(skew_growth(bii, d).coefficients)


def test_bii_signed_count_per_height(bii):
    # towers rooted at {b,c} of height u reaching degree l+2 carry total sign (-1)^(u-1) C(l-u, u-1)
    d = 10
    towers = [t for t in enumerate_towers(bii, d) if t.stages and [bii.format_word(e.canonical) for e in t.stages[0]] == ["b", "c"]]
    for l in range(1, d - 1):
        for u in range(1, (l + 1) // 2 + 1):
            got = sum(t.sign for t in towers if t.height == u for m in t.top if m.degree == l + 2)
            assert got == (-1) ** (u - 1) * comb(l - u, u - 1), (l, u)


@pytest.mark.parametrize("m", [2, 3])
def test_abelian_unique_towers(m):
    p = parse_preset_spec(f"abel:{m}")
    d = 3 * m + 2
    towers = enumerate_towers(p, d)
    counts = stage_sizes(towers)
    assert all(c == 1 for c in counts.values())
    w = p.parse_word
    for t in towers:
        for i, J in enumerate(t.stages, start=1):
            k = (i + 1) // 2
            if i % 2:
                expected = [w("a" * ((k - 1) * m + 1)), w("a" * ((k - 1) * m) + "b")]
            else:
                expected = [w("a" * (k * m)), w("a" * ((k - 1) * m + 1) + "b")]
            assert len(J) == 2
            for e in expected:
                assert any(are_equivalent(p, e, j.canonical) for j in J)


def test_observed_heights():
    assert observed_height(parse_preset_spec("gn:3"), 7) == 2
    assert observed_height(parse_preset_spec("hn:1"), 9) == 2
    assert observed_height(parse_preset_spec("bii"), 10) == 4
    assert observed_height(parse_preset_spec("abel:2"), 6) == 5
    assert observed_height(parse_preset_spec("free:3"), 8) == 0


def test_bii_stage_mcm_lemma(bii):
    # mcm of several c^k b is c^{kmax} b c^j b for all j in range
    d = 9
    w = bii.parse_word
    for size in (2, 3):
        for ks in itertools.combinations(range(4), size):
            J = [w("c" * k + "b") for k in ks]
            got = mcm(bii, J, d)
            kmax = ks[-1]
            expected = [w("c" * kmax + "b" + "c" * j + "b") for j in range(d - kmax - 1)]
            assert len(got) == len(expected)
            for e in expected:
                assert any(are_equivalent(bii, e, g.canonical) for g in got)


@pytest.mark.parametrize("n", [3, 4])
def test_gn_stage_mcm_lemma(n):
    p = parse_preset_spec(f"gn:{n}")
    w = p.parse_word
    for ks in [(0, 1), (0, 2), (1, 2), (0, 1, 2)]:
        J = [w("c" * k + "b" * (n - 1)) for k in ks]
        got = mcm(p, J, n + 5)
        assert len(got) == 1
        assert are_equivalent(p, got[0].canonical, w("c" * ks[-1] + "b" * n))


def test_hn_stage_mcm_lemma():
    p = parse_preset_spec("hn:1")
    w = p.parse_word
    for ks in [(0, 1), (0, 2), (1, 2)]:
        J = [w("c" * k + "bba") for k in ks]
        got = mcm(p, J, 10)
        assert len(got) == 1
        assert are_equivalent(p, got[0].canonical, w("c" * ks[-1] + "bbacb"))


def test_budget_is_enforced(bii):
    with pytest.raises(BudgetExceeded):
        skew_growth(bii, 10, Limits(budget=50))


def test_tower_json(bii):
    t = [t for t in enumerate_towers(bii, 4) if t.height == 1][0]
    doc = t.to_json(bii)
    assert doc["height"] == 1 and doc["stages"] == [["a", "b"]] and doc["top_mcm"] == ["ab"]

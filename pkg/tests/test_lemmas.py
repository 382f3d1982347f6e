import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import digraphs, fail_on_violations
from pancyclic.digraph import Digraph, DigraphBuilder, complete, directed_cycle, parse_digraph
from pancyclic.families import build_bipartite_range
from pancyclic.harness import rng_for
from pancyclic.lemmas import (Lemma6Params, LemmaReport, Status, insertion_indices, lemma1_check,
                              lemma2_check, lemma2_insert, lemma2_preconditions, lemma3_check,
                              lemma4_check, lemma5_check, lemma6_check)
from pancyclic.spectrum import Cycle, find_cycle_of_length, validate_cycle
from pancyclic.sweeps import (SweepResult, lemma1_exhaustive, lemma1_seeded, lemma3_exhaustive, lemma3_seeded,
                              lemma4_exhaustive, lemma4_seeded, lemma5_seeded, lemma6_harvest)


def with_x(n, into=(), out=(), closing=False, extra=()):
    """Path 0..n-1 (closed into a cycle if asked) plus x = n.

    ``into``/``out`` are 1-based positions i with x_i -> x / x -> x_i.
    """
    b = DigraphBuilder(n + 1)
    for i in range(n - 1):
        b.add_arc(i, i + 1)
    if closing:
        b.add_arc(n - 1, 0)
    for i in into:
        b.add_arc(i - 1, n)
    for i in out:
        b.add_arc(n, i - 1)
    for u, v in extra:
        b.add_arc(u, v)
    return b.freeze()


class TestReport:
    def test_str(self):
        assert str(LemmaReport("2", Status.HOLDS, witness=1)) == "lemma=2 status=Holds witness=1"

    def test_violated_flag(self):
        assert LemmaReport("1", Status.VIOLATED).violated
        assert not LemmaReport("1", Status.PREMISE_FAILED, premise="p").violated


class TestSweepResult:
    def test_persist_writes_instance_and_arguments(self, tmp_path):
        res = SweepResult("2")
        d = complete(3)
        res.record(d, {"path": [0, 1], "x": 2}, LemmaReport("2", Status.VIOLATED, witness={"n": 2}))
        res.record(d, {"path": [0, 1], "x": 2}, LemmaReport("2", Status.HOLDS, witness=1))
        assert (res.checked, res.premise_true, len(res.violations)) == (2, 2, 1)
        files = res.persist(tmp_path, tag="_demo")
        assert [f.name for f in files] == ["lemma2_demo_violation_0.txt"]
        assert parse_digraph(files[0].read_text()) == d
        assert '"x": 2' in (tmp_path / "lemma2_demo_violation_0.json").read_text()
        assert str(res) == "lemma 2: checked=2 PremiseFailed=0, Holds=1, Violated=1"


class TestLemma1:
    def test_complete_five(self):
        r = lemma1_check(complete(5), [0, 1, 2, 3], 4)
        assert r.status is Status.HOLDS
        assert sorted(r.witness) == [2, 3, 4, 5]
        for k, c in r.witness.items():
            assert len(c) == k and validate_cycle(complete(5), c.verts)

    def test_low_degree(self):
        d = with_x(5, into=[1], closing=True)
        r = lemma1_check(d, [0, 1, 2, 3, 4], 5)
        assert r.status is Status.PREMISE_FAILED and r.premise == "d(x,C)>=n+1"

    def test_toggle_to_threshold(self):
        # d(x,C) = n flips to n+1 by one arc
        d = with_x(3, into=[1, 2], out=[3], closing=True)
        assert lemma1_check(d, [0, 1, 2], 3).status is Status.PREMISE_FAILED
        assert lemma1_check(d.with_arcs(add=[(3, 0)]), [0, 1, 2], 3).status is Status.HOLDS

    def test_bad_inputs(self):
        with pytest.raises(ValueError):
            lemma1_check(directed_cycle(4), [0, 2, 1, 3], 3)
        with pytest.raises(ValueError):
            lemma1_check(complete(4), [0, 1, 2], 2)

    def test_sweeps(self):
        res = lemma1_exhaustive(max_n=4)
        fail_on_violations(res, tag="_exhaustive")
        assert res.statuses[Status.HOLDS] == 120
        seeded = lemma1_seeded(300, seed=3)
        fail_on_violations(seeded, tag="_seeded")
        assert seeded.statuses[Status.HOLDS] == 300


class TestLemma2:
    def test_tiny_insertion(self):
        # x = 2 with x_1 -> x -> x_2 only
        d = Digraph.from_arcs(3, [(0, 1), (0, 2), (2, 1)])
        assert lemma2_preconditions(d, [0, 1], 2) == ("iii",)
        assert lemma2_insert(d, [0, 1], 2) == 1
        assert str(lemma2_check(d, [0, 1], 2)) == "lemma=2 status=Holds witness=1"

    def test_no_precondition(self):
        # K*_4 with x = 3 keeping only x -> x_1 and x_3 -> x
        d = complete(4).with_arcs(remove=[(0, 3), (1, 3), (3, 1), (3, 2)])
        assert d.restricted_degree(3, [0, 1, 2]) == 2
        assert lemma2_preconditions(d, [0, 1, 2], 3) == ()
        assert lemma2_insert(d, [0, 1, 2], 3) is None
        r = lemma2_check(d, [0, 1, 2], 3)
        assert r.status is Status.PREMISE_FAILED and r.premise == "one of (i),(ii),(iii)"

    def test_toggles(self):
        d = Digraph.from_arcs(3, [(0, 1), (0, 2), (2, 1)])
        # x -> x_1 kills (iii) but d = n+1 with x_n -> x absent gives (ii)
        assert lemma2_preconditions(d.with_arcs(add=[(2, 0)]), [0, 1], 2) == ("ii",)
        # both end arcs: d = n+2
        assert lemma2_preconditions(d.with_arcs(add=[(2, 0), (1, 2)]), [0, 1], 2) == ("i",)

    def test_all_indices(self):
        d = with_x(5, into=[1, 3, 4], out=[2, 4, 5])
        assert insertion_indices(d, [0, 1, 2, 3, 4], 5) == [1, 3, 4]
        assert lemma2_insert(d, [0, 1, 2, 3, 4], 5) == 1

    @given(digraphs(min_p=3, max_p=8), st.data())
    def test_insertion_soundness(self, d, data):
        x = data.draw(st.integers(0, d.p - 1))
        rest = [v for v in range(d.p) if v != x]
        path = data.draw(st.permutations(rest))[:data.draw(st.integers(2, len(rest)))]
        # make the sequence a path in the host
        d = d.with_arcs(add=list(zip(path, path[1:])))
        i = lemma2_insert(d, path, x)
        if i is not None:
            assert d.has_arc(path[i - 1], x) and d.has_arc(x, path[i])
        if lemma2_preconditions(d, path, x):
            assert i is not None

    @given(digraphs(min_p=3, max_p=8), st.data())
    def test_reversal_duality(self, d, data):
        x = data.draw(st.integers(0, d.p - 1))
        rest = [v for v in range(d.p) if v != x]
        path = data.draw(st.permutations(rest))[:data.draw(st.integers(2, len(rest)))]
        d = d.with_arcs(add=list(zip(path, path[1:])))
        n = len(path)
        fwd = insertion_indices(d, path, x)
        back = insertion_indices(d.reverse(), path[::-1], x)
        assert back == sorted(n - i for i in fwd)
        assert lemma2_preconditions(d, path, x) == lemma2_preconditions(d.reverse(), path[::-1], x)

    def test_literal_condition_ii_is_not_sufficient(self):
        # d(x,P) = 3 = n+1, x_n -> x_1 absent, yet no insertion: the end arc x_n -> x is meant
        d = with_x(2, into=[1, 2], out=[1])
        assert not d.has_arc(1, 0)
        assert d.restricted_degree(2, [0, 1]) == 3
        assert lemma2_insert(d, [0, 1], 2) is None
        assert lemma2_preconditions(d, [0, 1], 2) == ()

    def test_invalid_path(self):
        with pytest.raises(ValueError):
            lemma2_insert(directed_cycle(4), [1, 0], 3)


class TestLemma3:
    def test_degree_premise(self):
        d = with_x(4, into=[1], out=[3], closing=True)
        r = lemma3_check(d, [0, 1, 2, 3], 4, 3)
        assert r.status is Status.PREMISE_FAILED and r.premise == "d(x,C)=m"

    def test_no_cn_premise(self):
        # x_4 -> x -> x_1 closes a 5-cycle through all of C
        d = with_x(4, into=[2, 4], out=[1, 3], closing=True)
        r = lemma3_check(d, [0, 1, 2, 3], 4, 5)
        assert r.status is Status.PREMISE_FAILED and r.premise == "no C_5"

    def test_found_by_search_p6(self):
        # seeded search over chorded C_5 plus x with d(x,C) = 5 and no C_4
        for i in range(10_000):
            rng = rng_for(17, i)
            slots = rng.choice(10, size=5, replace=False)
            into = [int(s) + 1 for s in slots if s < 5]
            out = [int(s) - 4 for s in slots if s >= 5]
            chords = [(u, v) for u in range(5) for v in range(5)
                      if u != v and v != (u + 1) % 5 and rng.random() < 0.2]
            d = with_x(5, into=into, out=out, closing=True, extra=chords)
            if find_cycle_of_length(d, 4) is None:
                break
        else:
            pytest.fail("no premise instance found")
        assert lemma3_check(d, [0, 1, 2, 3, 4], 5, 4).status is Status.HOLDS

    def test_range(self):
        d = with_x(4, closing=True)
        for n in (1, 6):
            with pytest.raises(ValueError):
                lemma3_check(d, [0, 1, 2, 3], 4, n)

    def test_sweeps(self):
        res = lemma3_exhaustive(max_m=5)
        fail_on_violations(res, tag="_exhaustive")
        assert res.statuses[Status.HOLDS] == 196
        seeded = lemma3_seeded(200, seed=5)
        fail_on_violations(seeded, tag="_seeded")
        assert seeded.statuses[Status.HOLDS] == 200


class TestLemma4:
    def test_b_example(self):
        d = with_x(3, into=[1, 3], out=[1, 3])
        r = lemma4_check(d, [0, 1, 2], 3, "b")
        assert r.status is Status.HOLDS

    def test_b_premises(self):
        d = with_x(3, into=[1, 2], out=[3])
        assert lemma4_check(d, [0, 1, 2], 3, "b").premise == "d(x,P)=n+1"
        d = with_x(3, into=[1, 2], out=[1, 2])
        r = lemma4_check(d, [0, 1, 2], 3, "b")
        assert r.premise == "adjacent to at most one of two consecutive" and r.witness == 1

    def test_a_i_example(self):
        d = with_x(4, into=[1, 2], out=[4])
        r = lemma4_check(d, [0, 1, 2, 3], 4, "a_i")
        assert r.status is Status.HOLDS and r.witness == 1

    def test_a_i_degree_premise(self):
        d = with_x(5, into=[1, 2], out=[5])
        assert d.restricted_degree(5, range(5)) == 3
        r = lemma4_check(d, [0, 1, 2, 3, 4], 5, "a_i")
        assert r.status is Status.PREMISE_FAILED and r.premise == "d(x,P)>=n-1"

    def test_a_i_toggles(self):
        base = with_x(4, into=[1, 2], out=[4])
        path = [0, 1, 2, 3]
        assert lemma4_check(base.with_arcs(add=[(4, 0)]), path, 4, "a_i").premise == "x->x_1 absent"
        assert lemma4_check(base.with_arcs(add=[(3, 4)]), path, 4, "a_i").premise == "x_n->x absent"
        assert lemma4_check(base.with_arcs(add=[(4, 2)]), path, 4, "a_i").premise == "x not insertable"
        assert lemma4_check(base.with_arcs(remove=[(1, 4)]), path, 4, "a_i").premise == "x_2->x"

    def test_a_ii_example(self):
        d = with_x(5, into=[1, 3], out=[5])
        r = lemma4_check(d, [0, 1, 2, 3, 4], 5, "a_ii")
        assert r.status is Status.HOLDS and r.witness == 1

    def test_a_ii_pairwise_bound(self):
        d = with_x(6, into=[1, 4], out=[4, 6])
        r = lemma4_check(d, list(range(6)), 6, "a_ii")
        assert r.premise == "|A(x_i->x)|+|A(x->x_{i+3})|<=1" and r.witness == 1

    def test_unknown_variant(self):
        with pytest.raises(ValueError):
            lemma4_check(with_x(3), [0, 1, 2], 3, "c")

    def test_exhaustive(self):
        res = lemma4_exhaustive(max_n=6)
        for r in res.values():
            fail_on_violations(r)
        assert {v: r.statuses[Status.HOLDS] for v, r in res.items()} == {"a_i": 7, "a_ii": 3, "b": 2}

    @pytest.mark.parametrize("variant", ["a_i", "a_ii", "b"])
    def test_seeded(self, variant):
        res = lemma4_seeded(50, seed=8, variant=variant)
        fail_on_violations(res, tag="_seeded")
        assert res.premise_true == 50


class TestLemma5:
    def test_complete_ten(self):
        r = lemma5_check(complete(10), list(range(9)), 9)
        assert r.status is Status.HOLDS
        assert sorted(r.witness) == list(range(3, 9))

    def test_not_strong(self):
        d = complete(10).with_arcs(remove=[(v, 9) for v in range(9)])
        r = lemma5_check(d, list(range(9)), 9)
        assert r.status is Status.PREMISE_FAILED and r.premise == "strong"

    def test_size(self):
        assert lemma5_check(complete(9), list(range(8)), 8).premise == "p>=10"

    def test_non_adjacent_vertex_named(self):
        d = complete(10).with_arcs(remove=[(9, 4), (4, 9)])
        r = lemma5_check(d, list(range(9)), 9)
        assert r.premise == "x adjacent to all of C" and r.witness == 4

    def test_cycle_must_span(self):
        with pytest.raises(ValueError):
            lemma5_check(complete(10), list(range(8)), 9)

    def test_seeded(self):
        res = lemma5_seeded(100, seed=2)
        fail_on_violations(res)
        assert res.statuses[Status.HOLDS] == 100


# K*_{5,6}: A = 0..4, independent B = 5..10; x = 10 in B
K56_CYCLE = Cycle((0, 5, 1, 6, 2, 7, 3, 8, 4, 9))


class TestLemma6:
    def test_premise_true_instance(self):
        d = build_bipartite_range(5, inner=())
        for n in (5, 7, 9):
            r = lemma6_check(d, Lemma6Params(1, 1, n, K56_CYCLE, 10))
            assert r.status is Status.HOLDS

    def test_complete_ten(self):
        r = lemma6_check(complete(10), Lemma6Params(1, 1, 5, Cycle(tuple(range(9))), 9))
        assert r.status is Status.PREMISE_FAILED

    def test_cycle_present(self):
        d = build_bipartite_range(5, inner=())
        r = lemma6_check(d, Lemma6Params(1, 1, 6, K56_CYCLE, 10))
        assert r.premise == "no C_6"

    def test_emptiness_names_the_arc(self):
        d = build_bipartite_range(5, inner=())
        r = lemma6_check(d, Lemma6Params(1, 3, 5, K56_CYCLE, 10))
        assert r.premise == "A(x->C(1,a-1)) empty" and r.witness == (10, 0)
        r = lemma6_check(d, Lemma6Params(3, 1, 5, K56_CYCLE, 10))
        assert r.premise == "A(C(p-k,p-1)->x) empty" and r.witness == (4, 10)

    def test_hypothesis_premise(self):
        d = build_bipartite_range(5, inner=()).with_arcs(remove=[(10, 0)])
        r = lemma6_check(d, Lemma6Params(1, 1, 5, K56_CYCLE, 10))
        assert r.premise == "degree hypothesis"

    @pytest.mark.parametrize("k,a,n", [(0, 1, 5), (1, 0, 5), (5, 5, 5), (1, 1, 4), (1, 1, 10)])
    def test_ranges(self, k, a, n):
        with pytest.raises(ValueError):
            lemma6_check(build_bipartite_range(5, inner=()), Lemma6Params(k, a, n, K56_CYCLE, 10))

    def test_short_cycle_rejected(self):
        with pytest.raises(ValueError):
            lemma6_check(complete(10), Lemma6Params(1, 1, 5, Cycle(tuple(range(8))), 9))

    def test_harvest(self):
        res = lemma6_harvest(max_cycles=5)
        fail_on_violations(res)
        assert res.premise_true > 0

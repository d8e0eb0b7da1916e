import random

import numpy as np
import pytest

from revembed import (
    Cube,
    Manager,
    Pla,
    ResourceLimitError,
    brute_dsop_check,
    brute_mu,
    brute_verify,
    dsop,
    embed_bennett,
    exact_mu_bdd,
    parse_pla,
    verify,
)
from revembed.oracle import MAX_VARS, table_from_func, tables_from_pla

from helpers import pla_truth, random_pla


class TestTables:
    def test_tables_from_pla(self, running):
        tables = tables_from_pla(running)
        assert tables.shape == (3, 32)
        truth = pla_truth(running)
        for point in range(32):
            got = frozenset(
                j + 1 for j in range(3) if tables[j, point]
            )
            assert got == truth[point]

    def test_table_from_func_simple(self):
        manager = Manager()
        manager.add_vars(["x1", "x2"])
        f = manager.var("x1") ^ manager.var("x2")
        table = table_from_func(f, 2)
        assert table.tolist() == [False, True, True, False]

    def test_table_from_func_skipped_level(self):
        manager = Manager()
        manager.add_vars(["x1", "x2", "x3"])
        f = manager.var("x3")
        table = table_from_func(f, 3)
        # x3 is bit 2 of the row index
        assert table.tolist() == [False] * 4 + [True] * 4

    def test_terminal_tables(self):
        manager = Manager()
        manager.add_vars(["x1"])
        assert table_from_func(manager.true, 1).tolist() == [True, True]
        assert table_from_func(manager.false, 1).tolist() == [False, False]

    def test_input_guard(self):
        big = Pla(MAX_VARS + 1, 1, [])
        with pytest.raises(ResourceLimitError):
            tables_from_pla(big)


class TestBruteMu:
    def test_matches_bdd_method(self, running, underapprox):
        for pla in (running, underapprox):
            a = brute_mu(pla)
            b = exact_mu_bdd(pla)
            assert a.mu == b.mu
            assert a.per_pattern == b.per_pattern
            assert a.exact

    def test_function_list_input(self):
        manager = Manager()
        manager.add_vars(["x1", "x2"])
        f = manager.var("x1") & manager.var("x2")
        rep = brute_mu([f], n=2)
        assert rep.mu == 3
        assert rep.per_pattern == {frozenset(): 3, frozenset({1}): 1}


class TestBruteDsopCheck:
    def test_accepts_disjoint(self, running):
        assert brute_dsop_check(dsop(running), reference=running)

    def test_rejects_overlap(self):
        pla = Pla(
            2,
            1,
            [
                (Cube.parse("1-"), frozenset({1})),
                (Cube.parse("-1"), frozenset({1})),
            ],
        )
        assert not brute_dsop_check(pla)

    def test_rejects_semantic_drift(self, running):
        d = dsop(running)
        dropped = Pla(d.n, d.m, d.entries[:-1], dsop_certified=True)
        assert not brute_dsop_check(dropped, reference=running)


class TestBruteVerify:
    def test_agrees_with_symbolic_on_randoms(self):
        rng = random.Random(4321)
        for _ in range(12):
            pla = random_pla(rng, rng.randint(1, 5), rng.randint(1, 3), 6)
            rc = embed_bennett(pla)
            assert brute_verify(rc, pla).to_dict() == verify(rc, pla).to_dict()

    def test_entry_budget(self, running):
        rc = embed_bennett(running)
        with pytest.raises(ResourceLimitError):
            brute_verify(rc, running, max_entries=4)

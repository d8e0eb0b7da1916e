import json
import random

import jsonschema
import pytest

import revembed as rv
from revembed import (
    METHOD_BRUTE,
    METHOD_EXACT_BDD,
    METHOD_EXACT_CUBE,
    METHOD_HEURISTIC_CUBE,
    Manager,
    ResourceLimitError,
    brute_mu,
    ceil_log2,
    dsop,
    exact_mu_bdd,
    exact_mu_cube,
    heuristic_mu,
    upper_bound_total,
)

from helpers import random_pla


def pattern_map(report):
    return {tuple(sorted(k)): v for k, v in report.per_pattern.items()}


RUNNING_EXACT = {(): 4, (1,): 5, (1, 3): 9, (2,): 8, (3,): 6}
RUNNING_HEUR = {(): 4, (1,): 8, (1, 3): 6, (2,): 8, (3,): 12}


class TestArithmetic:
    def test_ceil_log2(self):
        assert [ceil_log2(k) for k in (1, 2, 3, 4, 5, 8, 9, 70)] == [
            0, 1, 2, 2, 3, 3, 4, 7,
        ]

    def test_ceil_log2_rejects_nonpositive(self):
        for bad in (0, -3):
            with pytest.raises(ValueError):
                ceil_log2(bad)

    def test_upper_bound(self):
        assert upper_bound_total(5, 3) == 8
        assert upper_bound_total(1, 1) == 2


class TestWorkedExample:
    def test_heuristic(self, running):
        rep = heuristic_mu(running)
        assert rep.method == METHOD_HEURISTIC_CUBE
        assert not rep.exact
        assert pattern_map(rep) == RUNNING_HEUR
        assert (rep.mu, rep.ell, rep.total_lines) == (12, 4, 7)

    def test_exact_cube(self, running):
        rep = exact_mu_cube(running)
        assert rep.method == METHOD_EXACT_CUBE
        assert rep.exact
        assert pattern_map(rep) == RUNNING_EXACT
        assert (rep.mu, rep.ell, rep.total_lines) == (9, 4, 7)

    def test_exact_bdd(self, running):
        rep = exact_mu_bdd(running)
        assert rep.method == METHOD_EXACT_BDD
        assert rep.exact
        assert pattern_map(rep) == RUNNING_EXACT

    def test_heuristic_is_exact_on_certified_input(self, running):
        rep = heuristic_mu(dsop(running))
        assert rep.exact
        assert pattern_map(rep) == RUNNING_EXACT

    def test_underapprox_pair(self, underapprox):
        heur = heuristic_mu(underapprox)
        assert (heur.mu, heur.total_lines) == (16, 7)
        exact = exact_mu_bdd(underapprox)
        assert (exact.mu, exact.total_lines) == (20, 8)
        assert pattern_map(exact) == {(): 8, (2,): 4, (2, 3): 20}


class TestExactBddInputs:
    def test_accepts_function_list(self, running):
        manager = Manager()
        xs = [manager.add_var("x%d" % (i + 1)) for i in range(running.n)]
        funcs = rv.to_functions(running, manager, xs)
        rep = exact_mu_bdd(funcs, n=running.n)
        assert pattern_map(rep) == RUNNING_EXACT

    def test_pattern_cap(self, running):
        with pytest.raises(ResourceLimitError):
            exact_mu_bdd(running, pattern_cap=2)


class TestReportShape:
    def test_to_dict_schema(self, running):
        schema = json.loads(rv.schema_path("lines.schema.json").read_text())
        for rep in (
            heuristic_mu(running),
            exact_mu_cube(running),
            exact_mu_bdd(running),
            brute_mu(running),
        ):
            jsonschema.validate(rep.to_dict(), schema)

    def test_patterns_sorted_and_counts_stringed(self, running):
        d = exact_mu_cube(running).to_dict()
        outs = [tuple(p["outputs"]) for p in d["patterns"]]
        assert outs == sorted(outs)
        assert all(isinstance(p["count"], str) for p in d["patterns"])


class TestAgreement:
    def test_methods_agree_on_randoms(self):
        rng = random.Random(99)
        for _ in range(25):
            pla = random_pla(rng, rng.randint(1, 6), rng.randint(1, 4), 8)
            want = pattern_map(brute_mu(pla))
            assert pattern_map(exact_mu_cube(pla)) == want
            assert pattern_map(exact_mu_bdd(pla)) == want
            heur = heuristic_mu(pla)
            assert heur.mu >= 1
            # row-wise accumulation may count a point once per covering row,
            # so the heuristic map bounds the domain from above only
            assert sum(heur.per_pattern.values()) >= 1 << pla.n
            certified = heuristic_mu(dsop(pla))
            assert certified.exact
            assert pattern_map(certified) == want

    def test_exact_counts_partition_the_domain(self, running, underapprox):
        for pla in (running, underapprox):
            rep = exact_mu_bdd(pla)
            assert sum(rep.per_pattern.values()) == 1 << pla.n
            assert pla.n - pla.m <= rep.ell <= pla.n

"""Reversible embeddings of multi-output Boolean functions.

An embedding of f: B^n -> B^m is an injective g: B^r -> B^r that computes
f on the plane where its p = r - n constant inputs are 0, routing the
information f destroys into ell = r - m garbage outputs. g is kept as the
BDD of its characteristic function chi_g(kappa, x, y, gamma) on a manager
whose order interleaves constant/output pairs above input/garbage pairs;
this interleaving is what keeps chi_g of a reversible function small.

embed_exact assigns garbage values cube by cube with a symbolic +q counter
over the gamma variables, reaching the optimal ell = ceil(log2 mu) but
leaving the nonzero constant planes unspecified. embed_bennett instead
copies every input through (y_i = kappa_i xor f_i(x), gamma = x), total and
simple, at the generic width n + m.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Union

from .bdd import Func, Manager, VarId, and_all, or_all
from .cube import DC
from .errors import ResourceLimitError
from .linecount import heuristic_mu
from .pla import Pla, characteristic, to_functions

ROLE_CONSTANT = "constant"
ROLE_INPUT = "input"
ROLE_OUTPUT = "output"
ROLE_GARBAGE = "garbage"


@dataclass
class RcBdd:
    """A (possibly partial) reversible embedding as a characteristic BDD."""

    manager: Manager
    chi: Func
    n: int
    m: int
    p: int
    ell: int
    r: int
    kappa: list[VarId]
    xs: list[VarId]
    ys: list[VarId]
    gammas: list[VarId]
    partial: bool
    # final per-pattern garbage-block offsets and their update history
    pattern_counts: dict[frozenset[int], int] = field(default_factory=dict)
    cnt_trace: list[tuple[frozenset[int], int]] = field(default_factory=list)

    def node_count(self) -> int:
        return self.manager.dag_size(self.chi)

    def roles(self) -> dict[VarId, tuple[str, int]]:
        out = {}
        for i, v in enumerate(self.kappa):
            out[v] = (ROLE_CONSTANT, i + 1)
        for i, v in enumerate(self.xs):
            out[v] = (ROLE_INPUT, i + 1)
        for i, v in enumerate(self.ys):
            out[v] = (ROLE_OUTPUT, i + 1)
        for i, v in enumerate(self.gammas):
            out[v] = (ROLE_GARBAGE, i + 1)
        return out

    def summary(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "p": self.p,
            "ell": self.ell,
            "r": self.r,
            "partial": self.partial,
            "node_count": self.node_count(),
        }


@dataclass(frozen=True)
class VerifyReport:
    injective: bool
    functional: bool
    total: bool
    projects: bool

    @property
    def ok(self) -> bool:
        return self.injective and self.functional and self.total and self.projects

    def to_dict(self) -> dict:
        return {
            "injective": self.injective,
            "functional": self.functional,
            "total": self.total,
            "projects": self.projects,
        }


def cube_of(outputs: frozenset[int], manager: Manager, ys: list[VarId]) -> Func:
    """Minterm cube over the y variables selecting one output pattern."""
    return manager.cube({y: 1 if i + 1 in outputs else 0 for i, y in enumerate(ys)})


def inc(gammas: list[Func], times: int = 1) -> list[Func]:
    """Symbolic times-fold increment of the word (gamma_1 .. gamma_w).

    gamma_1 is the least significant bit. Equivalent to composing the
    +1 counter s_i = g_i xor (g_1 and ... and g_{i-1}) `times` times, i.e.
    adding the constant `times` mod 2^w; implemented as a constant adder so
    arbitrary-precision counts stay cheap.
    """
    if times < 0:
        raise ValueError("times must be nonnegative")
    if not gammas:
        return []
    manager = gammas[0].manager
    carry = manager.false
    out = []
    for i, g in enumerate(gammas):
        add_bit = (times >> i) & 1
        s = g ^ carry
        if add_bit:
            s = ~s
            carry = g | carry
        else:
            carry = g & carry
        out.append(s)
    return out


def _interleaved_names(first: list[str], second: list[str]) -> list[str]:
    """first_1, second_1, first_2, second_2, ..., then the leftovers."""
    out = []
    k = min(len(first), len(second))
    for i in range(k):
        out.append(first[i])
        out.append(second[i])
    out.extend(first[k:])
    out.extend(second[k:])
    return out


def _embedding_manager(p: int, m: int, n: int, ell: int):
    manager = Manager()
    names = _interleaved_names(
        ["k%d" % (i + 1) for i in range(p)], ["y%d" % (i + 1) for i in range(m)]
    ) + _interleaved_names(
        ["x%d" % (i + 1) for i in range(n)], ["g%d" % (i + 1) for i in range(ell)]
    )
    manager.add_vars(names)
    by = {manager.name_of(v): v for v in manager.vars}
    kappa = [by["k%d" % (i + 1)] for i in range(p)]
    ys = [by["y%d" % (i + 1)] for i in range(m)]
    xs = [by["x%d" % (i + 1)] for i in range(n)]
    gammas = [by["g%d" % (i + 1)] for i in range(ell)]
    return manager, kappa, xs, ys, gammas


def embed_exact(pla: Pla) -> RcBdd:
    """Garbage-optimal partial embedding of a disjoint cube list.

    Every entry (c, o) becomes one relation cube: inputs constrained by c
    on the kappa=0 plane, y set to o's minterm, and the garbage word bound
    to the block of #on(c) consecutive values starting at o's running
    offset CNT[o] — don't-care inputs of c enumerate the block, unused
    garbage bits pin its base. Entries sharing a pattern therefore land on
    disjoint garbage values, which is exactly what makes g injective.
    """
    if not pla.dsop_certified:
        raise ValueError("embed_exact needs a dsop-certified Pla")
    report = heuristic_mu(pla)  # exact: the cube list is disjoint
    mu_map = report.per_pattern
    n, m, ell = pla.n, pla.m, report.ell
    p = m + ell - n
    if p < 0:
        raise AssertionError("ell >= n - m must hold for exact mu")
    r = n + p
    manager, kappa, xs, ys, gammas = _embedding_manager(p, m, n, ell)
    gamma_funcs = [manager.var(g) for g in gammas]

    cnt: dict[frozenset[int], int] = {}
    trace: list[tuple[frozenset[int], int]] = []
    chi = manager.false
    for cube, outs in pla.entries:
        offset = cnt.get(outs, 0)
        # gamma - offset: low bits must spell the don't-care index, high
        # bits must be 0, which pins gamma to [offset, offset + on_size)
        word = inc(gamma_funcs, (-offset) % (1 << ell))
        literals = {xs[pos]: bit for pos, bit in cube.literals()}
        literals.update({k: 0 for k in kappa})
        literals.update({y: 1 if i + 1 in outs else 0 for i, y in enumerate(ys)})
        entry = manager.cube(literals)
        dcs = cube.dc_positions()
        for i, d in enumerate(dcs):
            entry = entry & manager.var(xs[d]).xnor(word[i])
        for i in range(len(dcs), ell):
            entry = entry & ~word[i]
        cnt[outs] = offset + cube.on_size()
        assert cnt[outs] <= mu_map.get(outs, 0), "garbage block overran mu"
        trace.append((outs, cnt[outs]))
        chi = chi | entry
    return RcBdd(
        manager=manager,
        chi=chi,
        n=n,
        m=m,
        p=p,
        ell=ell,
        r=r,
        kappa=kappa,
        xs=xs,
        ys=ys,
        gammas=gammas,
        partial=True,
        pattern_counts=cnt,
        cnt_trace=trace,
    )


def embed_bennett(
    source: Union[Pla, list[Func]], n: Optional[int] = None
) -> RcBdd:
    """Total embedding that copies inputs through: for each output,
    y_i = kappa_i xor f_i(x); every input survives as garbage gamma_j = x_j.
    Always reversible, at the generic n + m lines."""
    if isinstance(source, Pla):
        n = source.n
        m = source.m
    else:
        m = len(source)
        if n is None:
            n = max((v.level + 1 for f in source for v in f.support()), default=0)
    manager, kappa, xs, ys, gammas = _embedding_manager(m, m, n, n)
    if isinstance(source, Pla):
        funcs = to_functions(source, manager, xs)
    else:
        var_map = {i: xs[i] for i in range(n)}
        funcs = [manager.transfer(f, var_map) for f in source]
    terms = [
        manager.var(y).xnor(manager.var(k) ^ f)
        for y, k, f in zip(ys, kappa, funcs)
    ]
    terms.extend(
        manager.var(g).xnor(manager.var(x)) for g, x in zip(gammas, xs)
    )
    chi = and_all(terms, manager)
    return RcBdd(
        manager=manager,
        chi=chi,
        n=n,
        m=m,
        p=m,
        ell=n,
        r=n + m,
        kappa=kappa,
        xs=xs,
        ys=ys,
        gammas=gammas,
        partial=False,
    )


def complete_offset(pla: Pla) -> Pla:
    """Append every input no row covers as an explicit empty-pattern cube
    (one per BDD path), so a later embedding specifies the whole domain.
    Idempotent; points already carried by zero-output rows stay untouched."""
    manager = Manager()
    xs = [manager.add_var("x%d" % (i + 1)) for i in range(pla.n)]
    covered = or_all(
        [
            manager.cube({xs[pos]: bit for pos, bit in cube.literals()})
            for cube, _ in pla.entries
        ],
        manager,
    )
    entries = list(pla.entries)
    for cube in manager.enumerate_paths(~covered, pla.n):
        entries.append((cube, frozenset()))
    # the appended cubes live outside the union of all existing rows, so
    # pairwise disjointness is preserved and the certificate carries over
    return Pla(
        pla.n,
        pla.m,
        entries,
        input_names=pla.input_names,
        output_names=pla.output_names,
        dsop_certified=pla.dsop_certified,
    )


def verify(rcbdd: RcBdd, source: Union[Pla, list[Func]]) -> VerifyReport:
    """Symbolic checks of the embedding relation chi.

    functional/injective compare the relation's assignment count against
    its domain/range projections; total asks whether the kappa=0 plane is
    fully specified; projects asks whether the kappa=0 plane, with garbage
    projected away, is exactly chi_f restricted to the specified domain.
    """
    manager, chi = rcbdd.manager, rcbdd.chi
    if isinstance(source, Pla):
        funcs = to_functions(source, manager, rcbdd.xs)
    else:
        var_map = {i: rcbdd.xs[i] for i in range(rcbdd.n)}
        funcs = [manager.transfer(f, var_map) for f in source]
    in_vars = rcbdd.kappa + rcbdd.xs
    out_vars = rcbdd.ys + rcbdd.gammas
    r = rcbdd.r
    relation = manager.sat_count(chi, 2 * r)
    domain = manager.exists(chi, out_vars)
    image = manager.exists(chi, in_vars)
    functional = relation == manager.sat_count(domain, r)
    injective = relation == manager.sat_count(image, r)
    chi0 = manager.restrict(chi, {k: 0 for k in rcbdd.kappa})
    domain0 = manager.exists(chi0, out_vars)
    total = domain0 == manager.true
    projected = manager.exists(chi0, rcbdd.gammas)
    chi_f = characteristic(funcs, manager, rcbdd.ys)
    projects = projected == (chi_f & domain0)
    return VerifyReport(
        injective=injective, functional=functional, total=total, projects=projects
    )


def to_extended_pla(rcbdd: RcBdd, max_rows: int = 1 << 16) -> str:
    """Relational dump of chi as an extended PLA.

    One row per BDD path: the input plane is the p constant columns then
    the n input columns; the output plane is the m output columns then the
    ell garbage columns. Output-plane cells are values (0/1/-), not
    fd-style constructing sets; rows are pairwise disjoint.
    """
    manager = rcbdd.manager
    in_levels = [v.level for v in rcbdd.kappa] + [v.level for v in rcbdd.xs]
    out_levels = [v.level for v in rcbdd.ys] + [v.level for v in rcbdd.gammas]
    char = {0: "0", 1: "1", DC: "-"}
    rows = []
    for path in manager.enumerate_paths(rcbdd.chi, 2 * rcbdd.r):
        if len(rows) >= max_rows:
            raise ResourceLimitError(
                "extended PLA dump exceeds %d rows" % max_rows
            )
        inp = "".join(char[path[l]] for l in in_levels)
        outp = "".join(char[path[l]] for l in out_levels)
        rows.append("%s %s" % (inp, outp))
    lines = [
        "# embedding relation: %d constant + %d input columns ->"
        % (rcbdd.p, rcbdd.n),
        "# %d output + %d garbage columns; output plane holds values"
        % (rcbdd.m, rcbdd.ell),
        ".i %d" % (rcbdd.p + rcbdd.n),
        ".o %d" % (rcbdd.m + rcbdd.ell),
        ".p %d" % len(rows),
    ]
    lines.extend(rows)
    lines.append(".e")
    return "\n".join(lines) + "\n"


def ordering_comparison(
    lines: int = 8, samples: int = 20, seed: int = 0
) -> list[dict]:
    """Node counts of random reversible functions' characteristic BDDs
    under the interleaved order versus all-inputs-then-all-outputs.

    A measured comparison, not a theorem: returns one record per sampled
    permutation of B^lines with both counts.
    """
    rng = random.Random(seed)
    size = 1 << lines
    out = []
    for sample in range(samples):
        perm = list(range(size))
        rng.shuffle(perm)
        out.append(
            {
                "sample": sample,
                "lines": lines,
                "interleaved_nodes": _permutation_chi_size(perm, lines, True),
                "separated_nodes": _permutation_chi_size(perm, lines, False),
            }
        )
    return out


def _permutation_chi_size(perm: list[int], k: int, interleaved: bool) -> int:
    manager = Manager()
    if interleaved:
        names = _interleaved_names(
            ["i%d" % (j + 1) for j in range(k)], ["o%d" % (j + 1) for j in range(k)]
        )
    else:
        names = ["i%d" % (j + 1) for j in range(k)] + [
            "o%d" % (j + 1) for j in range(k)
        ]
    manager.add_vars(names)
    by = {manager.name_of(v): v for v in manager.vars}
    ins = [by["i%d" % (j + 1)] for j in range(k)]
    outs = [by["o%d" % (j + 1)] for j in range(k)]
    cubes = []
    for a, b in enumerate(perm):
        lits = {ins[j]: (a >> j) & 1 for j in range(k)}
        lits.update({outs[j]: (b >> j) & 1 for j in range(k)})
        cubes.append(manager.cube(lits))
    chi = or_all(cubes, manager)
    return manager.dag_size(chi)

"""Reduced ordered binary decision diagrams (ROBDDs).

Canonical node store per manager: one hash-consed unique table keyed by
(level, low, high), so two handles denote the same function iff they hold
the same node id (Bryant 1986). No complement edges. The variable order is
fixed at variable-creation time; algorithms that need a special order create
their variables in that order on a fresh manager.

Counting helpers use Python integers throughout, so satisfying-assignment
counts stay exact at thousands of variables. Managers are not thread-safe;
confine each manager to one thread.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .cube import DC, Cube
from .errors import ResourceLimitError

TERMINAL_LEVEL = sys.maxsize

_OPS = ("and", "or", "xor", "xnor")


@dataclass(frozen=True)
class VarId:
    """Handle for one manager variable.

    index identifies the variable; level is its position in the global
    order. This manager assigns levels in creation order, so the two
    coincide, but callers should treat them as distinct concepts.
    """

    index: int
    level: int


class Func:
    """Handle for a function node inside a manager. Cheap to copy and hash."""

    __slots__ = ("manager", "node")

    def __init__(self, manager: "Manager", node: int):
        self.manager = manager
        self.node = node

    def __and__(self, other: "Func") -> "Func":
        return self.manager.apply("and", self, other)

    def __or__(self, other: "Func") -> "Func":
        return self.manager.apply("or", self, other)

    def __xor__(self, other: "Func") -> "Func":
        return self.manager.apply("xor", self, other)

    def __invert__(self) -> "Func":
        return self.manager.negate(self)

    def xnor(self, other: "Func") -> "Func":
        return self.manager.apply("xnor", self, other)

    def cofactor(self, var: VarId, value: int) -> "Func":
        return self.manager.cofactor(self, var, value)

    def sat_count(self, support_size: int) -> int:
        return self.manager.sat_count(self, support_size)

    def support(self) -> list[VarId]:
        return self.manager.support(self)

    def support_size(self) -> int:
        return self.manager.support_size(self)

    def dag_size(self) -> int:
        return self.manager.dag_size(self)

    @property
    def is_true(self) -> bool:
        return self.node == 1

    @property
    def is_false(self) -> bool:
        return self.node == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Func)
            and other.manager is self.manager
            and other.node == self.node
        )

    def __hash__(self) -> int:
        return hash((id(self.manager), self.node))

    def __bool__(self) -> bool:
        raise TypeError("ambiguous: use is_true / is_false or compare Funcs")

    def __repr__(self) -> str:
        return "<Func node=%d of %r>" % (self.node, self.manager)


class Manager:
    """Shared node store plus combinator caches.

    max_nodes, when given, bounds the unique table; exceeding it raises
    ResourceLimitError and leaves the manager usable.
    """

    def __init__(self, max_nodes: Optional[int] = None):
        # id 0 is the 0-terminal, id 1 the 1-terminal
        self._nodes: list[tuple[int, int, int]] = [
            (TERMINAL_LEVEL, -1, -1),
            (TERMINAL_LEVEL, -1, -1),
        ]
        self._unique: dict[tuple[int, int, int], int] = {}
        self._memo: dict[tuple, int] = {}
        self._count: dict[int, tuple[int, int]] = {0: (0, 0), 1: (1, 0)}
        self._supp: dict[int, int] = {0: 0, 1: 0}
        self._vars: list[VarId] = []
        self._names: list[str] = []
        self._by_name: dict[str, VarId] = {}
        self.max_nodes = max_nodes
        self.false = Func(self, 0)
        self.true = Func(self, 1)

    # ---------------------------------------------------------------- vars

    def add_var(self, name: Optional[str] = None) -> VarId:
        level = len(self._vars)
        vid = VarId(index=level, level=level)
        if name is None:
            name = "v%d" % level
        if name in self._by_name:
            raise ValueError("duplicate variable name %r" % name)
        self._vars.append(vid)
        self._names.append(name)
        self._by_name[name] = vid
        # deep managers need commensurate recursion headroom
        want = 2000 + 3 * len(self._vars)
        if sys.getrecursionlimit() < want:
            sys.setrecursionlimit(min(want, 40000))
        return vid

    def add_vars(self, names: Iterable[str]) -> list[VarId]:
        return [self.add_var(n) for n in names]

    @property
    def vars(self) -> list[VarId]:
        return list(self._vars)

    def var_count(self) -> int:
        return len(self._vars)

    def name_of(self, var: VarId) -> str:
        return self._names[var.level]

    def _resolve(self, var) -> VarId:
        if isinstance(var, VarId):
            if var.level >= len(self._vars) or self._vars[var.level] != var:
                raise ValueError("variable %r is not registered here" % (var,))
            return var
        if isinstance(var, int):
            return self._vars[var]
        if isinstance(var, str):
            return self._by_name[var]
        raise TypeError("expected VarId, index, or name")

    def var(self, var) -> Func:
        vid = self._resolve(var)
        return Func(self, self._mk(vid.level, 0, 1))

    def nvar(self, var) -> Func:
        vid = self._resolve(var)
        return Func(self, self._mk(vid.level, 1, 0))

    # --------------------------------------------------------------- nodes

    def _mk(self, level: int, lo: int, hi: int) -> int:
        if lo == hi:
            return lo
        key = (level, lo, hi)
        nid = self._unique.get(key)
        if nid is None:
            if self.max_nodes is not None and len(self._nodes) >= self.max_nodes:
                raise ResourceLimitError(
                    "node budget of %d exhausted" % self.max_nodes
                )
            nid = len(self._nodes)
            self._nodes.append(key)
            self._unique[key] = nid
        return nid

    def node_count(self) -> int:
        """Total nodes ever created in this manager, terminals included."""
        return len(self._nodes)

    def node_level(self, f: Func) -> int:
        """Level of f's top variable; TERMINAL_LEVEL for constants."""
        return self._nodes[self._check(f)][0]

    def node_branches(self, f: Func) -> tuple[Func, Func]:
        """(low, high) children of a non-terminal node."""
        u = self._check(f)
        if u < 2:
            raise ValueError("terminals have no branches")
        _, lo, hi = self._nodes[u]
        return Func(self, lo), Func(self, hi)

    def _check(self, f: Func) -> int:
        if not isinstance(f, Func):
            raise TypeError("expected a Func, got %r" % (f,))
        if f.manager is not self:
            raise ValueError("mixed managers")
        return f.node

    # --------------------------------------------------------- combinators

    def apply(self, op: str, f: Func, g: Func) -> Func:
        op = op.lower()
        if op not in _OPS:
            raise ValueError("unknown operator %r" % op)
        u, v = self._check(f), self._check(g)
        return Func(self, self._apply(op, u, v))

    def _apply(self, op: str, u: int, v: int) -> int:
        if op == "and":
            if u == 0 or v == 0:
                return 0
            if u == 1:
                return v
            if v == 1 or u == v:
                return u
        elif op == "or":
            if u == 1 or v == 1:
                return 1
            if u == 0:
                return v
            if v == 0 or u == v:
                return u
        elif op == "xor":
            if u == v:
                return 0
            if u == 0:
                return v
            if v == 0:
                return u
            if u == 1:
                return self._neg(v)
            if v == 1:
                return self._neg(u)
        else:  # xnor
            if u == v:
                return 1
            if u == 1:
                return v
            if v == 1:
                return u
            if u == 0:
                return self._neg(v)
            if v == 0:
                return self._neg(u)
        if u > v:  # all four ops commute
            u, v = v, u
        key = (op, u, v)
        out = self._memo.get(key)
        if out is None:
            lu, lou, hiu = self._nodes[u]
            lv, lov, hiv = self._nodes[v]
            top = lu if lu < lv else lv
            u0, u1 = (lou, hiu) if lu == top else (u, u)
            v0, v1 = (lov, hiv) if lv == top else (v, v)
            out = self._mk(top, self._apply(op, u0, v0), self._apply(op, u1, v1))
            self._memo[key] = out
        return out

    def negate(self, f: Func) -> Func:
        return Func(self, self._neg(self._check(f)))

    def _neg(self, u: int) -> int:
        if u < 2:
            return 1 - u
        key = ("not", u)
        out = self._memo.get(key)
        if out is None:
            lvl, lo, hi = self._nodes[u]
            out = self._mk(lvl, self._neg(lo), self._neg(hi))
            self._memo[key] = out
        return out

    def ite(self, f: Func, g: Func, h: Func) -> Func:
        u = self._check(f)
        v = self._check(g)
        w = self._check(h)
        return Func(self, self._ite(u, v, w))

    def _ite(self, u: int, v: int, w: int) -> int:
        if u == 1:
            return v
        if u == 0:
            return w
        if v == w:
            return v
        if v == 1 and w == 0:
            return u
        if v == 0 and w == 1:
            return self._neg(u)
        key = ("ite", u, v, w)
        out = self._memo.get(key)
        if out is None:
            top = min(self._nodes[u][0], self._nodes[v][0], self._nodes[w][0])

            def cof(x: int, branch: int) -> int:
                lvl, lo, hi = self._nodes[x]
                if lvl == top:
                    return hi if branch else lo
                return x

            out = self._mk(
                top,
                self._ite(cof(u, 0), cof(v, 0), cof(w, 0)),
                self._ite(cof(u, 1), cof(v, 1), cof(w, 1)),
            )
            self._memo[key] = out
        return out

    # ------------------------------------------------------- restructuring

    def cofactor(self, f: Func, var, value: int) -> Func:
        return self.restrict(f, {var: value})

    def restrict(self, f: Func, assignment: dict) -> Func:
        """Fix the given variables to constants."""
        u = self._check(f)
        fixed = {self._resolve(k).level: int(v) for k, v in assignment.items()}
        for v in fixed.values():
            if v not in (0, 1):
                raise ValueError("restriction values must be 0 or 1")
        memo: dict[int, int] = {}

        def rec(x: int) -> int:
            if x < 2:
                return x
            got = memo.get(x)
            if got is not None:
                return got
            lvl, lo, hi = self._nodes[x]
            if lvl in fixed:
                out = rec(hi if fixed[lvl] else lo)
            else:
                out = self._mk(lvl, rec(lo), rec(hi))
            memo[x] = out
            return out

        return Func(self, rec(u))

    def exists(self, f: Func, variables) -> Func:
        """Existentially quantify the given variables out of f."""
        u = self._check(f)
        levels = frozenset(self._resolve(v).level for v in variables)
        if not levels:
            return f
        top_gone = max(levels)
        memo: dict[int, int] = {}

        def rec(x: int) -> int:
            if x < 2:
                return x
            lvl, lo, hi = self._nodes[x]
            if lvl > top_gone:
                return x
            got = memo.get(x)
            if got is not None:
                return got
            if lvl in levels:
                out = self._apply("or", rec(lo), rec(hi))
            else:
                out = self._mk(lvl, rec(lo), rec(hi))
            memo[x] = out
            return out

        return Func(self, rec(u))

    def cube(self, literals: dict) -> Func:
        """Conjunction of single-variable literals, built without apply.

        literals maps variable handles to 0 (negative) or 1 (positive).
        """
        pairs = sorted(
            ((self._resolve(k).level, int(v)) for k, v in literals.items()),
            reverse=True,
        )
        node = 1
        seen = None
        for level, bit in pairs:
            if level == seen:
                raise ValueError("conflicting literals for one variable")
            seen = level
            node = self._mk(level, 0, node) if bit else self._mk(level, node, 0)
        return Func(self, node)

    def transfer(self, f: Func, var_map: dict) -> Func:
        """Rebuild a foreign Func inside this manager.

        var_map maps source variables (VarId or level) to target variables
        of this manager and must preserve relative level order.
        """
        src = f.manager
        if src is self:
            raise ValueError("transfer expects a foreign Func")
        mapping = {}
        for k, v in var_map.items():
            klevel = k.level if isinstance(k, VarId) else int(k)
            mapping[klevel] = self._resolve(v).level
        items = sorted(mapping.items())
        targets = [t for _, t in items]
        if targets != sorted(targets):
            raise ValueError("transfer map must preserve relative order")
        memo: dict[int, int] = {}

        def rec(x: int) -> int:
            if x < 2:
                return x
            got = memo.get(x)
            if got is not None:
                return got
            lvl, lo, hi = src._nodes[x]
            if lvl not in mapping:
                raise ValueError("support variable at level %d is unmapped" % lvl)
            out = self._mk(mapping[lvl], rec(lo), rec(hi))
            memo[x] = out
            return out

        return Func(self, rec(src._check(f)))

    # ------------------------------------------------------------ analysis

    def _support_mask(self, u: int) -> int:
        got = self._supp.get(u)
        if got is not None:
            return got
        lvl, lo, hi = self._nodes[u]
        out = (1 << lvl) | self._support_mask(lo) | self._support_mask(hi)
        self._supp[u] = out
        return out

    def support(self, f: Func) -> list[VarId]:
        mask = self._support_mask(self._check(f))
        out = []
        level = 0
        while mask:
            if mask & 1:
                out.append(self._vars[level])
            mask >>= 1
            level += 1
        return out

    def support_size(self, f: Func) -> int:
        return self._support_mask(self._check(f)).bit_count()

    def sat_count(self, f: Func, support_size: int) -> int:
        """Number of satisfying assignments over support_size variables.

        Exact arbitrary-precision count over any variable window of the
        given size that contains f's support; errors when the window is
        smaller than the support.
        """
        u = self._check(f)
        need = self._support_mask(u).bit_count()
        if support_size < need:
            raise ValueError(
                "support_size %d is smaller than the support (%d variables)"
                % (support_size, need)
            )
        count, longest = self._count_pair(u)
        return count << (support_size - longest)

    def _count_pair(self, u: int) -> tuple[int, int]:
        # (count over `longest` variables, longest root-to-1 path length)
        got = self._count.get(u)
        if got is not None:
            return got
        _, lo, hi = self._nodes[u]
        clo, llo = self._count_pair(lo)
        chi, lhi = self._count_pair(hi)
        longest = max(llo, lhi) + 1
        count = (clo << (longest - 1 - llo)) + (chi << (longest - 1 - lhi))
        self._count[u] = (count, longest)
        return count, longest

    def eval(self, f: Func, assignment) -> int:
        """Pointwise evaluation. assignment is indexed by variable index
        (sequence) or keyed by variable (mapping); every support variable
        must be assigned."""
        u = self._check(f)
        if isinstance(assignment, dict):
            byidx = {self._resolve(k).level: int(v) for k, v in assignment.items()}
            lookup = byidx.get
        else:
            seq = list(assignment)

            def lookup(level):
                return seq[level] if level < len(seq) else None

        while u >= 2:
            lvl, lo, hi = self._nodes[u]
            bit = lookup(lvl)
            if bit is None:
                raise ValueError(
                    "no value for support variable %r" % (self._names[lvl],)
                )
            u = hi if bit else lo
        return u

    def enumerate_paths(self, f: Func, n: int) -> Iterator[Cube]:
        """Yield the root-to-1 paths of f as pairwise-disjoint cubes over
        the first n variables (low branch first). Requires f's support to
        lie within those variables."""
        u = self._check(f)
        mask = self._support_mask(u)
        if n < 0 or (mask >> n) != 0:
            raise ValueError("f has support beyond the first %d variables" % n)
        scratch = [DC] * n

        def walk(x: int) -> Iterator[Cube]:
            if x == 1:
                yield Cube(scratch)
                return
            if x == 0:
                return
            lvl, lo, hi = self._nodes[x]
            scratch[lvl] = 0
            yield from walk(lo)
            scratch[lvl] = 1
            yield from walk(hi)
            scratch[lvl] = DC

        return walk(u)

    def dag_size(self, f: Func) -> int:
        """Reachable node count, terminals included."""
        u = self._check(f)
        seen = set()
        stack = [u]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            if x >= 2:
                _, lo, hi = self._nodes[x]
                stack.append(lo)
                stack.append(hi)
        return len(seen)

    # ----------------------------------------------------------------- dot

    def to_dot(self, f: Func, name: str = "bdd") -> str:
        """GraphViz text: dashed low edges, solid high edges."""
        u = self._check(f)
        order: list[int] = []
        seen = set()

        def visit(x: int):
            if x in seen:
                return
            seen.add(x)
            if x >= 2:
                _, lo, hi = self._nodes[x]
                visit(lo)
                visit(hi)
            order.append(x)

        visit(u)
        lines = ["digraph %s {" % name, "  rankdir=TB;"]
        per_level: dict[int, list[int]] = {}
        for x in sorted(seen):
            if x < 2:
                lines.append('  n%d [label="%d", shape=box];' % (x, x))
            else:
                lvl = self._nodes[x][0]
                lines.append(
                    '  n%d [label="%s", shape=circle];' % (x, self._names[lvl])
                )
                per_level.setdefault(lvl, []).append(x)
        for lvl in sorted(per_level):
            members = "; ".join("n%d" % x for x in per_level[lvl])
            lines.append("  { rank=same; %s; }" % members)
        for x in sorted(seen):
            if x >= 2:
                _, lo, hi = self._nodes[x]
                lines.append("  n%d -> n%d [style=dashed];" % (x, lo))
                lines.append("  n%d -> n%d [style=solid];" % (x, hi))
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return "<Manager vars=%d nodes=%d>" % (len(self._vars), len(self._nodes))


def func_to_dot(f: Func, name: str = "bdd") -> str:
    return f.manager.to_dot(f, name)


def and_all(funcs: list[Func], manager: Optional[Manager] = None) -> Func:
    """Balanced conjunction; true for an empty list."""
    return _reduce("and", funcs, manager, empty=1)


def or_all(funcs: list[Func], manager: Optional[Manager] = None) -> Func:
    """Balanced disjunction; false for an empty list."""
    return _reduce("or", funcs, manager, empty=0)


def _reduce(op: str, funcs: list[Func], manager: Optional[Manager], empty: int) -> Func:
    if not funcs:
        if manager is None:
            raise ValueError("empty reduction needs an explicit manager")
        return Func(manager, empty)
    work = list(funcs)
    while len(work) > 1:
        nxt = []
        for i in range(0, len(work) - 1, 2):
            nxt.append(work[i].manager.apply(op, work[i], work[i + 1]))
        if len(work) % 2:
            nxt.append(work[-1])
        work = nxt
    return work[0]

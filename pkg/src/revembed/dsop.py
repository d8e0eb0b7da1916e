"""Disjoint sum-of-products rewriting.

dsop() turns an arbitrary cube list into a semantically equal one whose
cubes are pairwise disjoint, by repeatedly resolving the first overlap:
the overlapped entry is replaced in place by the intersection (with merged
outputs), the remainder of the resident cube is appended, and the
remainder of the incoming cube goes back to the front of the work queue.
Every step strictly shrinks the uncommitted ON-set measure, so the loop
terminates. post_compact() then shrinks a disjoint list by re-extracting
each output pattern's region from a BDD, one cube per path.
"""
from __future__ import annotations

from collections import deque
from typing import Optional

from .bdd import Manager, or_all
from .cube import Cube, cube_and, cube_sharp
from .pla import Pla

__all__ = ["cube_and", "cube_sharp", "dsop", "post_compact"]


def dsop(pla: Pla) -> Pla:
    """Deterministic disjoint rewriting of a Pla. Output is certified."""
    queue = deque(pla.entries)
    acc: list[tuple[Cube, frozenset[int]]] = []
    while queue:
        cube, outs = queue.popleft()
        hit = None
        for idx, (rcube, routs) in enumerate(acc):
            meet = cube_and(cube, rcube)
            if meet is not None:
                hit = (idx, rcube, routs, meet)
                break
        if hit is None:
            acc.append((cube, outs))
            continue
        idx, rcube, routs, meet = hit
        acc[idx] = (meet, outs | routs)
        for piece in cube_sharp(rcube, cube):
            acc.append((piece, routs))
        for piece in reversed(cube_sharp(cube, rcube)):
            queue.appendleft((piece, outs))
    return Pla(
        pla.n,
        pla.m,
        acc,
        input_names=pla.input_names,
        output_names=pla.output_names,
        dsop_certified=True,
    )


def post_compact(pla: Pla, manager: Optional[Manager] = None) -> Pla:
    """Per-pattern cube compaction of a certified disjoint Pla.

    Entries are grouped by exact output set, each group's region is OR-ed
    into a BDD, and the region is re-read as one cube per root-to-1 path.
    Sound only for disjoint inputs: overlapping cubes of different
    patterns would conflate their regions.
    """
    if not pla.dsop_certified:
        raise ValueError("post_compact needs a dsop-certified Pla")
    if manager is None:
        manager = Manager()
    while manager.var_count() < pla.n:
        manager.add_var("x%d" % (manager.var_count() + 1))
    xs = manager.vars[: pla.n]
    groups: dict[frozenset[int], list[Cube]] = {}
    for cube, outs in pla.entries:
        groups.setdefault(outs, []).append(cube)
    entries: list[tuple[Cube, frozenset[int]]] = []
    for outs in sorted(groups, key=lambda o: tuple(sorted(o))):
        region = or_all(
            [
                manager.cube({xs[pos]: bit for pos, bit in cube.literals()})
                for cube in groups[outs]
            ],
            manager,
        )
        for cube in manager.enumerate_paths(region, pla.n):
            entries.append((cube, outs))
    return Pla(
        pla.n,
        pla.m,
        entries,
        input_names=pla.input_names,
        output_names=pla.output_names,
        dsop_certified=True,
    )

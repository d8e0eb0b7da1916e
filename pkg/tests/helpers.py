"""Shared helpers for the test suite."""
from __future__ import annotations

import random

from revembed import Cube, DC, Pla


def cube_points(cube: Cube) -> set[int]:
    """All minterms a cube covers, as integers with x1 in bit 0."""
    pts = {0}
    for pos in range(len(cube)):
        bit = cube[pos]
        if bit == DC:
            pts = {p | (v << pos) for p in pts for v in (0, 1)}
        elif bit == 1:
            pts = {p | (1 << pos) for p in pts}
    return pts


def pla_truth(pla: Pla) -> dict[int, frozenset[int]]:
    """Point -> output pattern map by direct cube cover."""
    table = {}
    for x in range(1 << pla.n):
        outs = set()
        for cube, pat in pla.entries:
            if cube.covers(x):
                outs |= pat
        table[x] = frozenset(outs)
    return table


def random_pla(rng: random.Random, n: int, m: int, max_cubes: int) -> Pla:
    entries = []
    for _ in range(rng.randint(1, max_cubes)):
        bits = tuple(
            rng.choice((0, 1, DC, DC)) for _ in range(n)
        )  # bias toward wide cubes
        outs = frozenset(j + 1 for j in range(m) if rng.random() < 0.4)
        entries.append((Cube(bits), outs))
    return Pla(n, m, entries)


def hand_built_chi(rc, pla):
    """Independent reconstruction of the garbage-optimal relation.

    Point x inside entry (c, o) maps to y = o's minterm and gamma =
    (running offset of o when c was placed) + x's rank among c's points
    in don't-care-position binary order. Everything else (nonzero
    constants or unspecified x) is absent from the relation.
    """
    manager = rc.manager
    offsets = {}
    minterms = []
    for cube, outs in pla.entries:
        base = offsets.get(outs, 0)
        dcs = cube.dc_positions()
        for rank in range(cube.on_size()):
            point = dict(cube.literals())
            for i, d in enumerate(dcs):
                point[d] = (rank >> i) & 1
            gamma_val = base + rank
            lits = {rc.xs[posn]: bit for posn, bit in point.items()}
            lits.update({k: 0 for k in rc.kappa})
            lits.update(
                {y: 1 if j + 1 in outs else 0 for j, y in enumerate(rc.ys)}
            )
            lits.update(
                {g: (gamma_val >> i) & 1 for i, g in enumerate(rc.gammas)}
            )
            minterms.append(manager.cube(lits))
        offsets[outs] = base + cube.on_size()
    acc = manager.false
    for term in minterms:
        acc = acc | term
    return acc

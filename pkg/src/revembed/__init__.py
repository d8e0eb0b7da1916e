"""Reversible embeddings of irreversible Boolean functions.

The package turns a multi-output PLA description into a reversible
characteristic function with provably few extra circuit lines: it counts
the garbage outputs a function really needs, rewrites the PLA into
disjoint cubes, and builds the embedding as a BDD that downstream
synthesis can consume.
"""
from __future__ import annotations

from importlib.resources import files as _files
from pathlib import Path

from .bdd import Func, Manager, VarId, and_all, func_to_dot, or_all
from .benchgen import redundancy, restricted_growth
from .cube import DC, Cube, cube_and, cube_sharp
from .dsop import dsop, post_compact
from .embedding import (
    RcBdd,
    VerifyReport,
    complete_offset,
    cube_of,
    embed_bennett,
    embed_exact,
    inc,
    ordering_comparison,
    to_extended_pla,
    verify,
)
from .errors import PlaError, ResourceLimitError
from .linecount import (
    METHOD_BRUTE,
    METHOD_EXACT_BDD,
    METHOD_EXACT_CUBE,
    METHOD_HEURISTIC_CUBE,
    LineReport,
    ceil_log2,
    exact_mu_bdd,
    exact_mu_cube,
    heuristic_mu,
    upper_bound_total,
)
from .oracle import brute_dsop_check, brute_mu, brute_verify
from .pla import Pla, characteristic, off_set, parse_pla, to_functions, write_pla

__version__ = "0.1.0"

__all__ = [
    "Cube",
    "DC",
    "Func",
    "LineReport",
    "Manager",
    "METHOD_BRUTE",
    "METHOD_EXACT_BDD",
    "METHOD_EXACT_CUBE",
    "METHOD_HEURISTIC_CUBE",
    "Pla",
    "PlaError",
    "RcBdd",
    "ResourceLimitError",
    "VarId",
    "VerifyReport",
    "and_all",
    "brute_dsop_check",
    "brute_mu",
    "brute_verify",
    "ceil_log2",
    "characteristic",
    "complete_offset",
    "cube_and",
    "cube_of",
    "cube_sharp",
    "data_path",
    "dsop",
    "embed_bennett",
    "embed_exact",
    "exact_mu_bdd",
    "exact_mu_cube",
    "func_to_dot",
    "heuristic_mu",
    "inc",
    "off_set",
    "or_all",
    "ordering_comparison",
    "parse_pla",
    "post_compact",
    "redundancy",
    "restricted_growth",
    "schema_path",
    "to_extended_pla",
    "to_functions",
    "upper_bound_total",
    "verify",
    "write_pla",
]


def data_path(name: str) -> Path:
    """Path to one of the PLA files shipped with the package."""
    return Path(str(_files("revembed").joinpath("data", name)))


def schema_path(name: str) -> Path:
    """Path to one of the JSON schemas describing the CLI's output."""
    return Path(str(_files("revembed").joinpath("schemas", name)))

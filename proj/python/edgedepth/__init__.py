"""Depth of powers of edge ideals of graphs.

Vertices carry labels 1..n. Report-producing calls return plain dicts with
the same layout as the command-line JSON output.
"""

import json

from ._edgedepth import (
    CatalogError,
    Graph,
    GraphError,
    depth_oracle,
    depth_zero,
    generate_connected_graphs,
    h1_nonzero,
    localized_depth_zero,
    mu_star,
    named,
    phi_star,
    s_invariant,
    symbolic_depth_one,
)
from . import _edgedepth as _core

DEFAULT_PRIME = 32003

__all__ = [
    "CatalogError",
    "Graph",
    "GraphError",
    "analyze",
    "check_theorems",
    "depth_oracle",
    "depth_profile",
    "depth_zero",
    "generate_connected_graphs",
    "h1_nonzero",
    "localized_depth_zero",
    "mu_star",
    "named",
    "phi_star",
    "s_invariant",
    "search_conjectures",
    "symbolic_depth_one",
    "verify_report",
]


def depth_profile(g, t_max, with_oracle=False, prime=DEFAULT_PRIME):
    return json.loads(_core._profile(g, t_max, with_oracle, prime))


def analyze(g, t_max=0, with_oracle=False, prime=DEFAULT_PRIME):
    """t_max=0 picks s(g)+2, or 4 when s is undefined."""
    return json.loads(_core._analyze(g, t_max, with_oracle, prime))


def check_theorems(g, t_max=0, with_oracle=False, prime=DEFAULT_PRIME):
    return json.loads(_core._check_theorems(g, t_max, with_oracle, prime))["checks"]


def search_conjectures(graphs, t_max=5, jobs=1):
    return json.loads(_core._search_conjectures(list(graphs), t_max, jobs))


def verify_report(doc):
    """Returns (checks, failures) for a report dict or JSON string."""
    text = doc if isinstance(doc, str) else json.dumps(doc)
    return _core._verify_report(text)


def document(kind, parameters, results):
    return json.loads(_core._document(kind, json.dumps(parameters), json.dumps(results)))

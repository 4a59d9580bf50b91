"""Exact-arithmetic checks for the Klein-quartic sextic pencil.

Thin wrapper over the compiled module: every structured result crosses the
boundary as the same JSON the command-line tool writes, decoded here.
"""

import json

try:
    from . import _core
except ImportError:  # in-tree runs load the module from the build directory
    import _core

__all__ = [
    "claim_ids",
    "claim_tags",
    "run_claim",
    "run_all",
    "report",
    "report_text",
    "curve",
    "curve_check",
    "mori_sweep",
    "axioms",
    "cyc_arith",
]

claim_ids = _core.claim_ids
claim_tags = _core.claim_tags
report_text = _core.report_text
curve_check = _core.curve_check


def run_claim(claim_id, **options):
    """One claim's result dict: id, status, evidence, citations, axioms_used."""
    return json.loads(_core.run_claim_json(claim_id, **options))["results"][0]


def run_all(tag="", **options):
    """Result dicts for every claim, optionally restricted to one tag."""
    return json.loads(_core.run_all_json(tag, **options))["results"]


def report(tag="", **options):
    """The full versioned report document, as the CLI writes it."""
    return json.loads(_core.run_all_json(tag, **options))


def curve(path, field_order=84):
    """A curve file as its canonicalized document: degree and wire terms."""
    return json.loads(_core.curve_json(path, field_order))


def mori_sweep(**ranges):
    """Scenario rows of the reduction sweep; keys g, n, e_min, fibers,
    feasible, reason, axioms."""
    return json.loads(_core.mori_sweep_json(**ranges))["rows"]


def axioms():
    """The compiled assumption table: id, statement, source per entry."""
    return json.loads(_core.axioms_json())["axioms"]


def cyc_arith(op, a, b, field_order=84):
    """Exact field arithmetic on wire-format coefficients.

    `a` and `b` are term lists like [[0, "1/2"], [12, "-3"]]; `op` is one of
    "add", "sub", "mul", "div".  Returns the canonicalized term list.
    """
    return json.loads(_core.cyc_arith_json(op, json.dumps(a), json.dumps(b), field_order))

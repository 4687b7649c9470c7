"""Exact arithmetic on integral lattices."""

from ._qlat import (
    BudgetExceeded,
    Error,
    Lattice,
    NonIntegralError,
    SyntaxError,
    canonical,
    claim_ids,
    decompose,
    discriminant,
    dual,
    dual_minimum,
    dual_minimum_outside,
    enumerate_lattices,
    evaluate,
    from_json,
    identify,
    is_integral,
    is_isometric,
    isometry,
    lll_reduced,
    minimum,
    orthogonal_sum,
    primitively_represents,
    represented_integers,
    represents,
    roots,
    run_claims,
    scale,
    short_vectors,
    to_json,
)

__all__ = [name for name in dir() if not name.startswith("_")]

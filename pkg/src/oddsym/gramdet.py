"""Gram matrices of the word pairing per degree, exact determinants, the
determinant-degree formula, degenerate-locus factor multiplicities, and
radical ranks at specialized q.

The determinant row order is the lexicographic composition order; since the
analysis only uses the degree, |leading coefficient| and factor
multiplicities, the order-dependent sign is normalized away by making the
leading coefficient positive.
"""

import json
from functools import lru_cache
from importlib import resources

from .combinat import compositions_of, partitions_of, sort_to_partition
from .form import pair_h_at, pair_h_generic
from .polyq import QPoly, det_exact, divide_out, rank_exact

GENERIC_DET_BOUND = 6


def composition_labels(n: int, order: str = "lex") -> list[tuple[int, ...]]:
    """Row labels: plain lexicographic, or the appendix layout that groups
    compositions by their underlying partition."""
    comps = list(compositions_of(n))
    if order == "lex":
        return comps
    if order == "appendix":
        return sorted(comps, key=lambda a: (sort_to_partition(a), a))
    raise ValueError(f"unknown order {order!r}")


def gram_matrix(n: int, q="generic", basis: str = "compositions",
                order: str = "lex"):
    """(labels, rows) for the degree-n Gram matrix of the pairing.

    q is "generic" (QPoly entries) or an integer; the basis indexes rows and
    columns by compositions or by partitions.
    """
    if basis == "compositions":
        labels = composition_labels(n, order)
    elif basis == "partitions":
        labels = list(partitions_of(n))
    else:
        raise ValueError(f"unknown basis {basis!r}")
    if q == "generic":
        rows = [[pair_h_generic(b, a) for a in labels] for b in labels]
    else:
        rows = [[pair_h_at(b, a, int(q)) for a in labels] for b in labels]
    return labels, rows


@lru_cache(maxsize=None)
def gram_det(n: int) -> QPoly:
    """Generic-q determinant of the composition Gram matrix, normalized to a
    positive leading coefficient."""
    if n > GENERIC_DET_BOUND:
        raise ValueError(f"degree bound {GENERIC_DET_BOUND} exceeded")
    _, rows = gram_matrix(n)
    det = det_exact(rows)
    if det.leading_coefficient() < 0:
        det = -det
    return det


def det_degree_formula(n: int) -> int:
    """Predicted degree of the composition Gram determinant."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return 2 ** (n - 2) * (n * n - 3 * n + 4) - 1


def det_degree_check(n: int) -> dict:
    det = gram_det(n)
    want = det_degree_formula(n)
    return {
        "degree": n,
        "det_degree": det.degree(),
        "formula": want,
        "leading_coefficient": det.leading_coefficient(),
        "monic": abs(det.leading_coefficient()) == 1,
        "ok": det.degree() == want and abs(det.leading_coefficient()) == 1,
    }


@lru_cache(maxsize=None)
def degenerate_factors() -> tuple:
    """Minimal polynomials of the degenerate q-values with their listed
    multiplicities per degree, shipped as package data."""
    text = resources.files("oddsym.data").joinpath("degenerate_factors.json").read_text()
    out = []
    for item in json.loads(text):
        out.append(
            {
                "name": item["name"],
                "degree_introduced": item["degree_introduced"],
                "poly": QPoly(item["coeffs"]),
                "multiplicities": {int(n): int(m) for n, m in item["multiplicities"]},
            }
        )
    return tuple(out)


def factor_multiplicity_check(n: int) -> dict:
    """Divide every listed factor out of the degree-n determinant and compare
    with the listed multiplicity; the residual after all listed factors must
    be the constant 1."""
    det = gram_det(n)
    results = []
    residual = det
    for item in degenerate_factors():
        want = item["multiplicities"].get(n, 0)
        got, _ = divide_out(det, item["poly"])
        results.append(
            {"factor": item["name"], "want": want, "got": got, "ok": got == want}
        )
        if want:
            for _ in range(want):
                residual = residual // item["poly"]
    factors_palindromic = all(
        item["poly"].is_self_reciprocal()
        for item in degenerate_factors()
        if item["name"] != "q"
    )
    return {
        "degree": n,
        "factors": results,
        "residual": str(residual),
        "residual_degree": residual.degree(),
        "factors_palindromic": factors_palindromic,
        "ok": all(r["ok"] for r in results) and residual.degree() == 0
        and abs(residual.leading_coefficient()) == 1,
    }


def radical_rank(n: int, q_value: int) -> int:
    """Rank over the rationals of the degree-n composition Gram matrix at an
    integer q; the corank is the dimension of the radical."""
    _, rows = gram_matrix(n, q=q_value)
    return rank_exact(rows)

"""Dimension bounds certified by sign-constrained witness polynomials.

A witness is a polynomial f(x) = sum_r f_r P_r(x) in the Krawtchouk
basis together with a nonempty index set S inside {0..n}.  If

    1) f_t > 0 for every t in S, and f_t >= 0 for every other t, and
    2) f(t) <= 0 for every t outside S,

then every ((n, K, d))_m code whose distribution agrees with its dual
on S satisfies

    K <= (1/m^n) max_{t in S} f(t) / f_t.

``check_conditions`` reports every violation; ``dimension_bound``
refuses to produce a number unless both conditions hold, because the
conclusion is only valid under the hypotheses.  Callers that pick
S = {0..d-1} (or {0..d-2} for even d) get the code-theoretic reading;
the raw engine accepts any S and leaves that interpretation to them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exceptions import ConditionError, DomainError, SchemaError
from .krawtchouk import ExactScalar, KrawParams, kraw_table
from .rational import format_rational, parse_rational


@dataclass(frozen=True)
class KBasisPoly:
    """A polynomial stored by its coefficients in the Krawtchouk basis."""

    params: KrawParams
    coeffs: tuple[ExactScalar, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.params.n + 1:
            raise DomainError(
                f"expected {self.params.n + 1} coefficients, got {len(self.coeffs)}"
            )


@dataclass(frozen=True)
class ConditionReport:
    index_set: tuple[int, ...]
    cond1_ok: bool
    cond1_violations: tuple[int, ...]
    cond2_ok: bool
    cond2_violations: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.cond1_ok and self.cond2_ok


@dataclass(frozen=True)
class BoundReport:
    bound: Fraction
    bound_floor: int
    argmax_t: int
    ratios: tuple[tuple[int, Fraction], ...]  # (t, f(t)/f_t) for t in S, ascending


def poly_eval(f: KBasisPoly, t: int) -> ExactScalar:
    """f(t) = sum_r f_r P_r(t)."""
    n = f.params.n
    if not 0 <= t <= n:
        raise DomainError(f"point t must lie in [0, {n}], got {t}")
    table = kraw_table(f.params)
    return sum(c * table[r][t] for r, c in enumerate(f.coeffs))


def _poly_values(f: KBasisPoly) -> list[ExactScalar]:
    table = kraw_table(f.params)
    n = f.params.n
    return [
        sum(c * table[r][t] for r, c in enumerate(f.coeffs)) for t in range(n + 1)
    ]


def _normalize_index_set(S: Iterable[int], n: int) -> tuple[int, ...]:
    indices = sorted(set(S))
    if not indices:
        raise DomainError("index set S must be nonempty")
    if indices[0] < 0 or indices[-1] > n:
        raise DomainError(f"index set S must lie inside [0, {n}], got {indices}")
    return tuple(indices)


def _conditions(
    f: KBasisPoly, S: tuple[int, ...], values: Sequence[ExactScalar]
) -> ConditionReport:
    in_S = set(S)
    cond1_viol = []
    for t, c in enumerate(f.coeffs):
        if t in in_S:
            if not c > 0:
                cond1_viol.append(t)
        elif c < 0:
            cond1_viol.append(t)
    cond2_viol = [t for t in range(f.params.n + 1) if t not in in_S and values[t] > 0]
    return ConditionReport(
        index_set=S,
        cond1_ok=not cond1_viol,
        cond1_violations=tuple(cond1_viol),
        cond2_ok=not cond2_viol,
        cond2_violations=tuple(cond2_viol),
    )


def check_conditions(f: KBasisPoly, S: Iterable[int]) -> ConditionReport:
    """Check both sign conditions, listing every violating index."""
    indices = _normalize_index_set(S, f.params.n)
    return _conditions(f, indices, _poly_values(f))


def dimension_bound(f: KBasisPoly, S: Iterable[int]) -> BoundReport:
    """Exact bound (1/m^n) max_{t in S} f(t)/f_t for a valid witness.

    Raises ``ConditionError`` (carrying the report) if either condition
    fails.  Ties in the maximum resolve to the smallest index, so the
    report is deterministic; the bound itself is tie-independent.
    """
    indices = _normalize_index_set(S, f.params.n)
    values = _poly_values(f)
    report = _conditions(f, indices, values)
    if not report.ok:
        raise ConditionError(report)
    ratios = tuple(
        (t, Fraction(values[t]) / Fraction(f.coeffs[t])) for t in indices
    )
    best_t, best = ratios[0]
    for t, r in ratios[1:]:
        if r > best:
            best_t, best = t, r
    p = f.params
    bound = best / p.m**p.n
    return BoundReport(
        bound=bound,
        bound_floor=math.floor(bound),
        argmax_t=best_t,
        ratios=ratios,
    )


# --- JSON wire format -------------------------------------------------
#
# {"n": int, "m": int, "S": [int, ...], "coeffs": ["rational-string", ...]}


def witness_to_dict(f: KBasisPoly, S: Iterable[int]) -> dict:
    return {
        "n": f.params.n,
        "m": f.params.m,
        "S": list(_normalize_index_set(S, f.params.n)),
        "coeffs": [format_rational(c) for c in f.coeffs],
    }


def witness_from_dict(doc: Mapping) -> tuple[KBasisPoly, tuple[int, ...]]:
    if not isinstance(doc, Mapping):
        raise SchemaError("witness document must be a JSON object")
    for key in ("n", "m", "S", "coeffs"):
        if key not in doc:
            raise SchemaError(f"witness document missing {key!r}")
    n, m = doc["n"], doc["m"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise SchemaError("field 'n' must be an integer")
    if not isinstance(m, int) or isinstance(m, bool):
        raise SchemaError("field 'm' must be an integer")
    S = doc["S"]
    if (
        not isinstance(S, Sequence)
        or isinstance(S, (str, bytes))
        or not all(isinstance(t, int) and not isinstance(t, bool) for t in S)
    ):
        raise SchemaError("field 'S' must be an array of integers")
    if not isinstance(doc["coeffs"], Sequence) or isinstance(doc["coeffs"], (str, bytes)):
        raise SchemaError("field 'coeffs' must be an array of rational strings")
    coeffs = tuple(parse_rational(c) for c in doc["coeffs"])
    try:
        poly = KBasisPoly(KrawParams(n, m), coeffs)
        indices = _normalize_index_set(S, n)
    except DomainError as exc:
        raise SchemaError(str(exc)) from exc
    return poly, indices

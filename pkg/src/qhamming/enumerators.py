"""MacWilliams transform between weight distributions and their duals.

A distribution carries the code dimension K because the transform
couples the two: with gamma = m^2 - 1,

    sum_i A'_i x^(n-i) y^i
        = (K / m^n) sum_r A_r (x + gamma*y)^(n-r) (x - y)^r.

In coefficient form the two directions are

    forward:  A'_i = (K / m^n)     * sum_r A_r  P_i(r)
    inverse:  A_r  = (1 / (K m^n)) * sum_i A'_i P_r(i)

and they are exact mutual inverses.  Distributions of actual codes are
entrywise nonnegative and agree with their duals on every index below
the minimum distance; neither fact is enforced here (transform outputs
of arbitrary inputs can be negative), but both can be queried.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .exceptions import DomainError, SchemaError
from .krawtchouk import ExactScalar, KrawParams, kraw_table
from .rational import format_rational, parse_rational


@dataclass(frozen=True)
class WeightDistribution:
    """A vector A_0..A_n of exact scalars plus the code dimension K."""

    params: KrawParams
    K: Fraction
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.params.n + 1:
            raise DomainError(
                f"expected {self.params.n + 1} entries, got {len(self.entries)}"
            )
        if self.K <= 0:
            raise DomainError(f"dimension K must be positive, got {self.K}")

    @property
    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.entries)


def make_distribution(
    n: int, m: int, K: ExactScalar, entries: Sequence[ExactScalar]
) -> WeightDistribution:
    """Convenience constructor coercing entries to ``Fraction``."""
    return WeightDistribution(
        KrawParams(n, m), Fraction(K), tuple(Fraction(a) for a in entries)
    )


def mw_forward(dist: WeightDistribution) -> WeightDistribution:
    """Dual distribution A'_i = (K/m^n) sum_r A_r P_i(r)."""
    p = dist.params
    table = kraw_table(p)
    scale = Fraction(dist.K, p.m**p.n)
    dual = tuple(
        scale * sum(a * v for a, v in zip(dist.entries, table[i]))
        for i in range(p.n + 1)
    )
    return WeightDistribution(p, dist.K, dual)


def mw_inverse(dual: WeightDistribution) -> WeightDistribution:
    """Primal distribution A_r = (1/(K m^n)) sum_i A'_i P_r(i)."""
    p = dual.params
    table = kraw_table(p)
    scale = 1 / (dual.K * p.m**p.n)
    entries = tuple(
        scale * sum(a * v for a, v in zip(dual.entries, table[r]))
        for r in range(p.n + 1)
    )
    return WeightDistribution(p, dual.K, entries)


@dataclass(frozen=True)
class PurityReport:
    """Per-index equality of a distribution and its dual below d."""

    d: int
    per_index: tuple[bool, ...]

    @property
    def ok(self) -> bool:
        return all(self.per_index)


def check_purity_window(
    dist: WeightDistribution, dual: WeightDistribution, d: int
) -> PurityReport:
    """Compare entries of ``dist`` and ``dual`` at indices 0..d-1."""
    if dist.params != dual.params or dist.K != dual.K:
        raise DomainError("distributions differ in (n, m, K)")
    if not 1 <= d <= dist.params.n + 1:
        raise DomainError(f"window size d must lie in [1, {dist.params.n + 1}], got {d}")
    per_index = tuple(dist.entries[i] == dual.entries[i] for i in range(d))
    return PurityReport(d, per_index)


# --- JSON wire format -------------------------------------------------
#
# {"n": int, "m": int, "K": "rational-string", "A": ["rational-string", ...]}


def distribution_to_dict(dist: WeightDistribution) -> dict:
    return {
        "n": dist.params.n,
        "m": dist.params.m,
        "K": format_rational(dist.K),
        "A": [format_rational(a) for a in dist.entries],
    }


def distribution_from_dict(doc: Mapping) -> WeightDistribution:
    if not isinstance(doc, Mapping):
        raise SchemaError("distribution document must be a JSON object")
    for key in ("n", "m", "K", "A"):
        if key not in doc:
            raise SchemaError(f"distribution document missing {key!r}")
    n, m = doc["n"], doc["m"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise SchemaError("field 'n' must be an integer")
    if not isinstance(m, int) or isinstance(m, bool):
        raise SchemaError("field 'm' must be an integer")
    if not isinstance(doc["A"], Sequence) or isinstance(doc["A"], (str, bytes)):
        raise SchemaError("field 'A' must be an array of rational strings")
    K = parse_rational(doc["K"])
    entries = tuple(parse_rational(a) for a in doc["A"])
    try:
        return WeightDistribution(KrawParams(n, m), K, entries)
    except DomainError as exc:
        raise SchemaError(str(exc)) from exc

"""Expansion of Krawtchouk products back into the Krawtchouk basis.

The product of two family members is again a polynomial of degree
i + j, so it has an exact expansion

    P_i(x) P_j(x) = sum_k c_k P_k(x)

whose coefficients are nonnegative integers given by a closed
double-binomial sum.  ``kbasis_extract`` inverts pointwise values into
basis coefficients through the orthogonality relation

    sum_r P_k(r) P_r(t) = q^n delta_{k,t},   q = m^2,

and serves as the independent oracle for the closed form.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exceptions import DomainError
from .krawtchouk import ExactScalar, KrawParams, binomial, kraw_table


@dataclass(frozen=True)
class LinearizationRow:
    """Coefficients c_0..c_n with P_i P_j = sum_k c_k P_k."""

    i: int
    j: int
    params: KrawParams
    coeffs: tuple[int, ...]


def linearize_product(i: int, j: int, p: KrawParams) -> LinearizationRow:
    """Expand P_i(x) P_j(x) in the Krawtchouk basis.

    The coefficient of P_k is

        sum_s C(k, 2k+2s-i-j) C(n-k, s) C(2k+2s-i-j, k+s-j)
              * (gamma-1)^(i+j-2s-k) * gamma^s

    where s runs until the binomial factors vanish; every term with a
    zero binomial contributes nothing, and on the surviving support the
    exponent i+j-2s-k is nonnegative.
    """
    n = p.n
    if not 0 <= i <= n:
        raise DomainError(f"degree i must lie in [0, {n}], got {i}")
    if not 0 <= j <= n:
        raise DomainError(f"degree j must lie in [0, {n}], got {j}")
    g = p.gamma
    w = g - 1
    coeffs = []
    for k in range(n + 1):
        acc = 0
        for s in range(n - k + 1):
            b1 = 2 * k + 2 * s - i - j
            c1 = binomial(k, b1)
            if c1 == 0:
                continue
            c3 = binomial(b1, k + s - j)
            if c3 == 0:
                continue
            acc += c1 * binomial(n - k, s) * c3 * w ** (i + j - 2 * s - k) * g**s
        coeffs.append(acc)
    return LinearizationRow(i, j, p, tuple(coeffs))


def kbasis_extract(values: Sequence[ExactScalar], p: KrawParams) -> tuple[Fraction, ...]:
    """Coefficients f_0..f_n with sum_r f_r P_r(t) = values[t] for all t.

    Computed as f_k = q^(-n) sum_t values[t] P_t(k); the expansion is
    unique because the value matrix squares to q^n times the identity.
    """
    n = p.n
    if len(values) != n + 1:
        raise DomainError(f"expected {n + 1} values, got {len(values)}")
    table = kraw_table(p)
    scale = p.q**n
    coeffs = []
    for k in range(n + 1):
        acc = sum(values[t] * table[t][k] for t in range(n + 1))
        coeffs.append(Fraction(acc) / scale)
    return tuple(coeffs)

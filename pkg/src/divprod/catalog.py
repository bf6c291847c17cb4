"""Named, executable divisor-sum identities, each checked against oracles that
do not share machinery with the recurrence engine.

Every check returns an IdentityReport instead of raising on mismatch: a failed
identity is data.  Three catalog entries are expected failures, kept to pin
the index-bound and orientation corrections the passing forms rely on:

* ``jacobi_square_verbatim``   includes the zero-argument term of the square
  identity via the extended divisor sum; first failure n=4.
* ``ramanujan_a_verbatim``     runs the cubic-coefficient recurrence without
  the monomial-shift reindexing; first failure n=2.
* ``p_regular_verbatim_2``     expands the reciprocal of the p-regular
  product, which has negative coefficients; first mismatch n=1.
"""

from __future__ import annotations

from functools import partial
from typing import Callable

from divprod.divisors import (
    sigma_rm_table,
    sigma_table,
    square_indicator,
    triangular,
    triangular_indicator,
)
from divprod.products import (
    Factor,
    ProductSpec,
    SetDescriptor,
    WeightSpec,
    coeffs_via_expansion,
    coeffs_via_recurrence,
    delta_product_admissible,
    delta_spec,
    p_regular_spec,
    ramanujan_spec,
    rogers_ramanujan_spec,
    square_quotient_spec,
)
from divprod.report import IdentityReport
from divprod.sequences import (
    lambert_cubic_by_divisors,
    lambert_cubic_prefix,
    partition_counts,
    regular_partition_counts,
    rogers_ramanujan_sum_side,
    triangular_rep_counts,
)


def _require_order(order: int, minimum: int = 1) -> None:
    if order < minimum:
        raise ValueError(f"order must be >= {minimum}")


def partition_recurrence_check(order: int) -> IdentityReport:
    """n p(n) = sum_{k=1..n} sigma(k) p(n-k), with p from the partition DP."""
    _require_order(order)
    ident = "partition_recurrence"
    p = partition_counts(order).terms
    sig = sigma_table(order)
    for n in range(1, order + 1):
        rhs = 0
        for k in range(1, n + 1):
            rhs += sig[k] * p[n - k]
        lhs = n * p[n]
        if lhs != rhs:
            return IdentityReport.failure(ident, order, n, lhs, rhs)
    return IdentityReport.success(ident, order)


def jacobi_square_check(order: int) -> IdentityReport:
    """(-1)^n s(n) n = -(sigma(n)+sigma_odd(n))/2
    + sum_{k>=1, k^2<=n-1} (-1)^(k+1) (sigma(n-k^2)+sigma_odd(n-k^2))."""
    _require_order(order)
    ident = "jacobi_square"
    sig = sigma_table(order)
    odd = sigma_rm_table(order, 1, 2)
    for n in range(1, order + 1):
        lhs = (-n if n % 2 else n) * square_indicator(n)
        # sigma + sigma_odd = sigma_even + 2 sigma_odd is always even
        acc = -(sig[n] + odd[n]) // 2
        k = 1
        while k * k <= n - 1:
            term = sig[n - k * k] + odd[n - k * k]
            acc += term if k % 2 else -term
            k += 1
        if lhs != acc:
            return IdentityReport.failure(ident, order, n, lhs, acc)
    return IdentityReport.success(ident, order)


def jacobi_square_verbatim_check(order: int) -> IdentityReport:
    """Same identity with the summation taken over the full convolution range
    k = 1..n-1, zero arguments contributing via the extended divisor sum
    (sigma(0)=1, odd-divisor sum 0).  Known failing; pins the strict
    positive-argument bound of jacobi_square.  First failure: n=4."""
    _require_order(order)
    ident = "jacobi_square_verbatim"
    sig = sigma_table(order)
    odd = sigma_rm_table(order, 1, 2)
    for n in range(1, order + 1):
        lhs = (-n if n % 2 else n) * square_indicator(n)
        acc = -(sig[n] + odd[n]) // 2
        for k in range(1, n):
            arg = n - k * k
            if arg < 0:
                break
            term = 1 if arg == 0 else sig[arg] + odd[arg]
            acc += term if k % 2 else -term
        if lhs != acc:
            return IdentityReport.failure(ident, order, n, lhs, acc)
    return IdentityReport.success(ident, order)


def triangular_check(order: int) -> IdentityReport:
    """t(n) n = sum over triangular T(k) <= n-1 of
    sigma_odd(n-T(k)) - sigma_even(n-T(k))."""
    _require_order(order)
    ident = "triangular"
    odd = sigma_rm_table(order, 1, 2)
    even = sigma_rm_table(order, 0, 2)
    for n in range(1, order + 1):
        lhs = triangular_indicator(n) * n
        acc = 0
        k = 0
        while triangular(k) <= n - 1:
            arg = n - triangular(k)
            acc += odd[arg] - even[arg]
            k += 1
        if lhs != acc:
            return IdentityReport.failure(ident, order, n, lhs, acc)
    return IdentityReport.success(ident, order)


def _lambert_cubic_agreement(ident: str, order: int) -> IdentityReport | None:
    """Divisor-sum route vs double-sum route vs shifted-product recurrence."""
    by_div = [lambert_cubic_by_divisors(n) for n in range(order + 1)]
    by_series = lambert_cubic_prefix(order)
    by_rec = coeffs_via_recurrence(ramanujan_spec(), order)
    for n in range(1, order + 1):
        if by_div[n] != by_series[n]:
            return IdentityReport.failure(ident, order, n, by_div[n], by_series[n])
        if by_div[n] != by_rec[n]:
            return IdentityReport.failure(ident, order, n, by_div[n], by_rec[n])
    return None


def ramanujan_a_check(order: int) -> IdentityReport:
    """(n-1) a(n) = 8 sum_{k=1..n-1} a(n-k) (sigma_odd(k)-sigma_even(k)) for
    n >= 2, the recurrence reindexed for the x^1 prefactor of the product;
    also pins a(n) itself three ways (divisor sum, double sum, recurrence)."""
    _require_order(order, minimum=2)
    ident = "ramanujan_a"
    mismatch = _lambert_cubic_agreement(ident, order)
    if mismatch is not None:
        return mismatch
    a = [lambert_cubic_by_divisors(n) for n in range(order + 1)]
    odd = sigma_rm_table(order, 1, 2)
    even = sigma_rm_table(order, 0, 2)
    diff = [odd[k] - even[k] for k in range(order + 1)]
    for n in range(2, order + 1):
        acc = 0
        for k in range(1, n):
            acc += a[n - k] * diff[k]
        lhs = (n - 1) * a[n]
        rhs = 8 * acc
        if lhs != rhs:
            return IdentityReport.failure(ident, order, n, lhs, rhs)
    return IdentityReport.success(ident, order)


def ramanujan_a_verbatim_check(order: int) -> IdentityReport:
    """n a(n) = 8 sum_{k=0..n-1} a(k) (sigma_odd(n-k)-sigma_even(n-k)):
    the recurrence without the shift reindexing.  Known failing; first
    failure n=2 (lhs 16, rhs 0)."""
    _require_order(order, minimum=2)
    ident = "ramanujan_a_verbatim"
    a = [lambert_cubic_by_divisors(n) for n in range(order + 1)]
    odd = sigma_rm_table(order, 1, 2)
    even = sigma_rm_table(order, 0, 2)
    diff = [odd[k] - even[k] for k in range(order + 1)]
    for n in range(2, order + 1):
        acc = 0
        for k in range(n):
            acc += a[k] * diff[n - k]
        lhs = n * a[n]
        rhs = 8 * acc
        if lhs != rhs:
            return IdentityReport.failure(ident, order, n, lhs, rhs)
    return IdentityReport.success(ident, order)


def p_regular_check(p: int, order: int) -> IdentityReport:
    """n Q(n) = sum_{k=0..n-1} Q(k) (sigma(n-k) - sigma_{0,p}(n-k)) for the
    count Q of partitions with parts repeating fewer than p times; the DP
    oracle is also pinned to the product expansion."""
    _require_order(order)
    ident = f"p_regular_{p}"
    q = regular_partition_counts(p, order).terms
    expanded = coeffs_via_expansion(p_regular_spec(p), order)
    for n in range(order + 1):
        if q[n] != expanded[n]:
            return IdentityReport.failure(ident, order, n, q[n], expanded[n])
    sig = sigma_table(order)
    sig0p = sigma_rm_table(order, 0, p)
    diff = [sig[k] - sig0p[k] for k in range(order + 1)]
    for n in range(1, order + 1):
        acc = 0
        for k in range(n):
            acc += q[k] * diff[n - k]
        lhs = n * q[n]
        if lhs != acc:
            return IdentityReport.failure(ident, order, n, lhs, acc)
    return IdentityReport.success(ident, order)


def p_regular_verbatim_check(p: int, order: int) -> IdentityReport:
    """Expansion of the reciprocal orientation prod (1-x^n)(1-x^{pn})^{-1}
    against the bounded-multiplicity DP.  Known failing: the reciprocal has
    negative coefficients, so the first mismatch is n=1."""
    _require_order(order)
    ident = f"p_regular_verbatim_{p}"
    if p < 2:
        raise ValueError("p must be an integer >= 2")
    reciprocal = ProductSpec(
        factors=(
            Factor(SetDescriptor.all_naturals(), WeightSpec.linear(-1)),
            Factor(SetDescriptor.multiples(p), WeightSpec.linear(1)),
        )
    )
    q = regular_partition_counts(p, order).terms
    expanded = coeffs_via_expansion(reciprocal, order)
    for n in range(order + 1):
        if q[n] != expanded[n]:
            return IdentityReport.failure(ident, order, n, q[n], expanded[n])
    return IdentityReport.success(ident, order)


def rogers_ramanujan_check(which: int, order: int) -> IdentityReport:
    """n R(n) = sum_{k=0..n-1} R(k) (sigma_{r1,5}(n-k) + sigma_{r2,5}(n-k))
    with (r1, r2) = (1, 4) for the first identity and (2, 3) for the second;
    the sum side is also pinned to the residue-class product expansion."""
    _require_order(order)
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    ident = f"rogers_ramanujan_{which}"
    r = rogers_ramanujan_sum_side(which, order).terms
    expanded = coeffs_via_expansion(rogers_ramanujan_spec(which), order)
    for n in range(order + 1):
        if r[n] != expanded[n]:
            return IdentityReport.failure(ident, order, n, r[n], expanded[n])
    r1, r2 = (1, 4) if which == 1 else (2, 3)
    ta = sigma_rm_table(order, r1, 5)
    tb = sigma_rm_table(order, r2, 5)
    w = [ta[k] + tb[k] for k in range(order + 1)]
    for n in range(1, order + 1):
        acc = 0
        for k in range(n):
            acc += r[k] * w[n - k]
        lhs = n * r[n]
        if lhs != acc:
            return IdentityReport.failure(ident, order, n, lhs, acc)
    return IdentityReport.success(ident, order)


def square_eta_quotient_check(order: int) -> IdentityReport:
    """n s(n) = h(n) + 2 sum_{k^2 <= n-1} h(n-k^2) with
    h(k) = sigma(k) - 5 sigma(k/2) + 4 sigma(k/4) (sigma vanishing off the
    integers); the quotient expansion is also pinned to 1 + 2 sum x^{n^2}."""
    _require_order(order)
    ident = "square_eta_quotient"
    expanded = coeffs_via_expansion(square_quotient_spec(), order)
    closed = [2 * square_indicator(n) for n in range(order + 1)]
    closed[0] = 1
    for n in range(order + 1):
        if expanded[n] != closed[n]:
            return IdentityReport.failure(ident, order, n, closed[n], expanded[n])
    sig = sigma_table(order)
    h = [0] * (order + 1)
    for k in range(1, order + 1):
        v = sig[k]
        if k % 2 == 0:
            v -= 5 * sig[k // 2]
        if k % 4 == 0:
            v += 4 * sig[k // 4]
        h[k] = v
    for n in range(1, order + 1):
        lhs = n * square_indicator(n)
        acc = h[n]
        k = 1
        while k * k <= n - 1:
            acc += 2 * h[n - k * k]
            k += 1
        if lhs != acc:
            return IdentityReport.failure(ident, order, n, lhs, acc)
    return IdentityReport.success(ident, order)


def delta_m_check(m: int, order: int) -> IdentityReport:
    """n delta_m(n) = m sum_{k=1..n} (sigma_odd(k)-sigma_even(k)) delta_m(n-k)
    with delta_m from the theta-power convolution, which is also pinned to
    the product expansion.  Only admissible m carry the product formula."""
    _require_order(order)
    if not delta_product_admissible(m):
        raise ValueError(
            f"no triangular-representation product formula for m={m}; "
            "admissible m: 1, 2, 6, 10, or any multiple of 4"
        )
    ident = f"delta_{m}"
    d = triangular_rep_counts(m, order).terms
    expanded = coeffs_via_expansion(delta_spec(m), order)
    for n in range(order + 1):
        if d[n] != expanded[n]:
            return IdentityReport.failure(ident, order, n, d[n], expanded[n])
    odd = sigma_rm_table(order, 1, 2)
    even = sigma_rm_table(order, 0, 2)
    diff = [odd[k] - even[k] for k in range(order + 1)]
    for n in range(1, order + 1):
        acc = 0
        for k in range(1, n + 1):
            acc += diff[k] * d[n - k]
        lhs = n * d[n]
        rhs = m * acc
        if lhs != rhs:
            return IdentityReport.failure(ident, order, n, lhs, rhs)
    return IdentityReport.success(ident, order)


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

CheckFn = Callable[[int], IdentityReport]

POSITIVE_CHECKS: dict[str, CheckFn] = {
    "partition_recurrence": partition_recurrence_check,
    "jacobi_square": jacobi_square_check,
    "triangular": triangular_check,
    "ramanujan_a": ramanujan_a_check,
    "p_regular_2": partial(p_regular_check, 2),
    "p_regular_3": partial(p_regular_check, 3),
    "p_regular_5": partial(p_regular_check, 5),
    "p_regular_7": partial(p_regular_check, 7),
    "rogers_ramanujan_1": partial(rogers_ramanujan_check, 1),
    "rogers_ramanujan_2": partial(rogers_ramanujan_check, 2),
    "square_eta_quotient": square_eta_quotient_check,
    "delta_1": partial(delta_m_check, 1),
    "delta_2": partial(delta_m_check, 2),
    "delta_4": partial(delta_m_check, 4),
    "delta_6": partial(delta_m_check, 6),
    "delta_8": partial(delta_m_check, 8),
    "delta_10": partial(delta_m_check, 10),
    "delta_12": partial(delta_m_check, 12),
}

# Expected failures, runnable by id but excluded from "all".
NEGATIVE_CHECKS: dict[str, CheckFn] = {
    "jacobi_square_verbatim": jacobi_square_verbatim_check,
    "ramanujan_a_verbatim": ramanujan_a_verbatim_check,
    "p_regular_verbatim_2": partial(p_regular_verbatim_check, 2),
}

ALL_CHECKS: dict[str, CheckFn] = {**POSITIVE_CHECKS, **NEGATIVE_CHECKS}


def run_check(identity_id: str, order: int) -> IdentityReport:
    try:
        check = ALL_CHECKS[identity_id]
    except KeyError:
        raise ValueError(
            f"unknown identity {identity_id!r}; known: {', '.join(sorted(ALL_CHECKS))}"
        )
    return check(order)


def run_all(order: int) -> list[IdentityReport]:
    """Every expected-to-pass check, reports ordered by identity id."""
    return [POSITIVE_CHECKS[i](order) for i in sorted(POSITIVE_CHECKS)]

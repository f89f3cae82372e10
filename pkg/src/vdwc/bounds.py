"""Closed-form lower bounds on w(k;c) and the counting inequalities behind them.

Every bound is available as a float and as an exact value (a ``Fraction``,
or for the square-root bound its exact square) so that comparisons near an
integer never hinge on rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

from .progressions import WindowParams
from .relcode import code_width


def classical_bound(k: int, c: int) -> float:
    """sqrt(k) * c**(k/2 - 1), from removing a single progression."""
    _check(k, c)
    return math.sqrt(k) * c ** (k / 2 - 1)


def classical_bound_squared(k: int, c: int) -> Fraction:
    return Fraction(k) * Fraction(c) ** (k - 2)


def pre_improvement_exact(k: int, c: int) -> Fraction:
    _check(k, c)
    return Fraction(c) ** (k - 4) * Fraction(k - 1, k * k)


def pre_improvement_bound(k: int, c: int) -> float:
    """c**(k-4) * (k-1) / k**2: the repeated scheme with per-event rounding."""
    return float(pre_improvement_exact(k, c))


def theorem_exact(k: int, c: int) -> Fraction:
    _check(k, c)
    return Fraction(c) ** (k - 3) * Fraction(k - 1, k * k)


def theorem_bound(k: int, c: int) -> float:
    """c**(k-3) * (k-1) / k**2: the repeated scheme with all events coded jointly."""
    return float(theorem_exact(k, c))


def abstract_exact(k: int, c: int) -> Fraction:
    """c**(k-1) / (4k) * (k-1)/k; agrees with ``theorem_exact`` only when c == 2."""
    _check(k, c)
    return Fraction(c) ** (k - 1) / (4 * k) * Fraction(k - 1, k)


def abstract_bound(k: int, c: int) -> float:
    return float(abstract_exact(k, c))


def _check(k, c):
    if k < 3 or c < 2:
        raise ValueError(f"need k >= 3 and c >= 2, got k={k}, c={c}")


def rounded_code_width(n: int, k: int, c: int) -> int:
    """ceil(log_c(k*k*n/(k-1))), the per-event code width in the counting argument."""
    target = k * k * n
    e, p = 0, k - 1
    while p < target:
        p *= c
        e += 1
    return e


class InequalityCheck(NamedTuple):
    per_event: bool
    aggregate: bool


def incompressibility_inequality(k: int, c: int, n: int, D: int, w_value: int) -> InequalityCheck:
    """Evaluate the two length inequalities the compression argument relies on.

    per_event:  (w - 1) + D * (C + 3) >= D * k, with C = ceil(log_c(k*k*n/(k-1)))
    aggregate:  (w - 1) + ceil(D * (log_c(k*k*n/(k-1)) + 3)) >= D * k
    """
    _check(k, c)
    if n < 1 or D < 0 or w_value < 1:
        raise ValueError("n and w_value must be positive, D non-negative")
    C = rounded_code_width(n, k, c)
    per_event = (w_value - 1) + D * (C + 3) >= D * k

    # ceil(D*L) >= T  <=>  D*L > T - 1, with T = D*k - (w-1) - 3D an integer
    T = D * k - (w_value - 1) - 3 * D
    if T <= 0:
        aggregate = True
    else:
        log_x = math.log(k * k * n / (k - 1), c)
        diff = D * log_x - (T - 1)
        if abs(diff) > 1e-9 * max(1.0, D * log_x):
            aggregate = diff > 0
        else:
            # (k^2 n / (k-1))^D > c^(T-1), exactly
            aggregate = (k * k * n) ** D > c ** (T - 1) * (k - 1) ** D
    return InequalityCheck(per_event, aggregate)


def predicted_output_length(input_length: int, k: int, c: int, n: int, D: int) -> int:
    """Stream length of the compressor: one marker per event plus code and color per replacement."""
    w = WindowParams(n, k, c)
    return input_length + (n - 1) + D * (code_width(w) + 3) + 1 - D * k


@dataclass
class BoundReport:
    k: int
    c: int
    n: int
    C: int
    classical: float
    pre_improvement: float
    theorem: float
    abstract: float
    exact_w: int | None = None
    inequality_holds: dict[int, InequalityCheck] = field(default_factory=dict)

    @property
    def per_event_cost(self) -> int:
        return self.C + 3

    def as_pairs(self) -> list[tuple[str, object]]:
        pairs: list[tuple[str, object]] = [
            ("k", self.k),
            ("c", self.c),
            ("n", self.n),
            ("C", self.C),
            ("per_event_cost", self.per_event_cost),
            ("classical", _fmt(self.classical)),
            ("pre_improvement", _fmt(self.pre_improvement)),
            ("theorem", _fmt(self.theorem)),
            ("abstract", _fmt(self.abstract)),
            ("exact_w", "-" if self.exact_w is None else self.exact_w),
        ]
        for D, chk in sorted(self.inequality_holds.items()):
            pairs.append((f"holds_D{D}", f"{int(chk.per_event)}/{int(chk.aggregate)}"))
        return pairs


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def bound_report(k: int, c: int, n: int | None = None, Ds: Iterable[int] = (), exact_w: int | None = None) -> BoundReport:
    """Collect every bound for (k, c).

    ``n`` is the window the code width and inequalities are evaluated at; it
    defaults to the exact value when known, else to the theorem bound
    rounded up (never below k).
    """
    if n is None:
        n = exact_w if exact_w is not None else max(k, math.ceil(theorem_exact(k, c)))
    rep = BoundReport(
        k=k,
        c=c,
        n=n,
        C=rounded_code_width(n, k, c),
        classical=classical_bound(k, c),
        pre_improvement=pre_improvement_bound(k, c),
        theorem=theorem_bound(k, c),
        abstract=abstract_bound(k, c),
        exact_w=exact_w,
    )
    for D in Ds:
        rep.inequality_holds[D] = incompressibility_inequality(k, c, n, D, n)
    return rep


def format_table(reports: list[BoundReport]) -> str:
    if not reports:
        return ""
    head: list[str] = []
    for r in reports:
        head += [name for name, _ in r.as_pairs() if name not in head]
    rows = [[str(dict(r.as_pairs()).get(h, "-")) for h in head] for r in reports]
    widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(head)]
    lines = ["  ".join(h.rjust(wd) for h, wd in zip(head, widths))]
    for row in rows:
        lines.append("  ".join(v.rjust(wd) for v, wd in zip(row, widths)))
    return "\n".join(lines)


def format_pairs(reports: list[BoundReport]) -> str:
    return "\n".join(" ".join(f"{name}={v}" for name, v in r.as_pairs()) for r in reports)

"""Milnor and Tjurina numbers of plane-curve germs, with their consequences.

For a germ ``f`` vanishing at the origin the Milnor number is the local
dimension of ``O/(f_x, f_y)`` and the Tjurina number that of
``O/(f, f_x, f_y)``.  Both are found by exact row reduction: the dimension
of ``Q[x, y] / (generators + (x, y)^N)`` over the monomial basis of total
degree < N is computed for increasing N.  That quotient is supported at the
origin, and once dim(N) = dim(N + 1) Nakayama's lemma certifies that
``(x, y)^N`` lies in the local ideal, so the stabilised dimension is the
local value.  No local standard-basis machinery is needed; the default cap
N <= 30 keeps the basis at 465 monomials, ample at desk scale.

A germ that never stabilises by the cap is reported as
:class:`NotIsolatedError` (non-isolated singularity, or cap too small); a
non-reduced germ manifests the same way.  Coefficients are restricted to
rationals so that the elimination stays exact.

The difference ``mu - tau`` is the local orbifold Euler number of the
weight-1 pair, it vanishes exactly for weighted homogeneous singularities
(Saito), and summed over a plane curve it obstructs the logarithmic
comparison theorem.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .rationals import as_rational, format_rational, parse_rational

__all__ = [
    "DEFAULT_CAP",
    "NotIsolatedError",
    "CurveGerm",
    "GermInvariants",
    "milnor_number",
    "tjurina_number",
    "germ_invariants",
    "euler_reduced_germ",
    "log_chern_c2",
    "euler_top_complement",
    "lct_obstruction",
    "germ_from_dict",
    "germ_to_dict",
]

DEFAULT_CAP = 30


class NotIsolatedError(ValueError):
    """No stabilisation by the cap: non-isolated singularity or cap too small."""


_MONOMIAL = re.compile(
    r"(?P<coeff>\d+(?:/\d+)?)?"
    r"(?P<xpart>x(?:\^(?P<i>\d+))?)?"
    r"(?P<ypart>y(?:\^(?P<j>\d+))?)?\Z"
)


@dataclass(frozen=True)
class CurveGerm:
    """``f = sum c_ij x^i y^j`` with rational coefficients and f(0, 0) = 0."""

    terms: tuple

    def __post_init__(self):
        combined: dict[tuple[int, int], Fraction] = {}
        for entry in self.terms:
            try:
                i, j, c = entry
            except (TypeError, ValueError):
                raise ValueError(f"term {entry!r} is not an (i, j, coefficient) triple") from None
            for e in (i, j):
                if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                    raise ValueError(f"bad exponent pair in term {entry!r}")
            c = as_rational(c)
            if c:
                key = (i, j)
                combined[key] = combined.get(key, Fraction(0)) + c
        combined = {m: c for m, c in combined.items() if c}
        if not combined:
            raise ValueError("germ is identically zero")
        if (0, 0) in combined:
            raise ValueError("germ must vanish at the origin (no constant term)")
        object.__setattr__(
            self, "terms", tuple(sorted((i, j, c) for (i, j), c in combined.items()))
        )

    @classmethod
    def parse(cls, text: str) -> "CurveGerm":
        """Parse monomials in x, y with '+'/'-' separators and '^' exponents."""
        s = text.replace("−", "-").replace("*", "").replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        pieces = re.findall(r"[+-][^+-]+", s)
        if "".join(pieces) != s:
            raise ValueError(f"cannot parse polynomial: {text!r}")
        terms = []
        for piece in pieces:
            body = piece[1:]
            m = _MONOMIAL.match(body)
            if not m or not (m.group("coeff") or m.group("xpart") or m.group("ypart")):
                raise ValueError(f"cannot parse monomial {piece!r}")
            coeff = parse_rational(m.group("coeff")) if m.group("coeff") else Fraction(1)
            if piece[0] == "-":
                coeff = -coeff
            i = int(m.group("i")) if m.group("i") else (1 if m.group("xpart") else 0)
            j = int(m.group("j")) if m.group("j") else (1 if m.group("ypart") else 0)
            terms.append((i, j, coeff))
        return cls(tuple(terms))

    def coefficients(self) -> dict:
        return {(i, j): c for i, j, c in self.terms}

    def __str__(self):
        parts = []
        for i, j, c in self.terms:
            mono = "".join(
                (f"x^{i}" if i > 1 else "x" if i == 1 else "",
                 f"y^{j}" if j > 1 else "y" if j == 1 else "")
            )
            if c == 1 and mono:
                parts.append(mono)
            elif c == -1 and mono:
                parts.append(f"-{mono}")
            else:
                parts.append(format_rational(c) + mono)
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


@dataclass(frozen=True)
class GermInvariants:
    mu: int
    tau: int
    truncation_used: int


def _as_germ(f) -> CurveGerm:
    if isinstance(f, CurveGerm):
        return f
    if isinstance(f, str):
        return CurveGerm.parse(f)
    raise TypeError(f"expected a CurveGerm or polynomial text, got {type(f).__name__}")


def _check_cap(cap) -> int:
    if isinstance(cap, bool) or not isinstance(cap, int) or cap < 1:
        raise ValueError(f"cap must be a positive integer, got {cap!r}")
    return cap


def _partial(poly: Mapping, axis: int) -> dict:
    out: dict[tuple[int, int], Fraction] = {}
    for (i, j), c in poly.items():
        if axis == 0 and i > 0:
            out[(i - 1, j)] = c * i
        elif axis == 1 and j > 0:
            out[(i, j - 1)] = c * j
    return out


def _is_smooth(germ: CurveGerm) -> bool:
    return any(i + j == 1 for i, j, _ in germ.terms)


def _reduce_insert(row: dict, pivots: dict) -> None:
    # Plain linear triangularisation over sparse rows; the monomial order is
    # immaterial for the rank.
    while row:
        lead = max(row)
        pivot = pivots.get(lead)
        if pivot is None:
            inv = 1 / row[lead]
            pivots[lead] = {m: c * inv for m, c in row.items()}
            return
        factor = row[lead]
        merged = dict(row)
        for m, c in pivot.items():
            value = merged.get(m, Fraction(0)) - factor * c
            if value:
                merged[m] = value
            else:
                merged.pop(m, None)
        row = merged


def _quotient_dimension(generators: Sequence[Mapping], degree_cap: int) -> int:
    """dim of Q[x, y]/(ideal + (x, y)^degree_cap) on monomials of degree < degree_cap."""
    pivots: dict[tuple[int, int], dict] = {}
    for gen in generators:
        if not gen:
            continue
        for a in range(degree_cap):
            for b in range(degree_cap - a):
                row = {
                    (i + a, j + b): c
                    for (i, j), c in gen.items()
                    if i + a + j + b < degree_cap
                }
                if row:
                    _reduce_insert(row, pivots)
    return degree_cap * (degree_cap + 1) // 2 - len(pivots)


def _stabilized_dimension(generators: Sequence[Mapping], cap: int) -> tuple[int, int]:
    previous = None
    for upto in range(1, cap + 1):
        dim = _quotient_dimension(generators, upto)
        if dim == previous:
            return dim, upto
        previous = dim
    raise NotIsolatedError(
        f"no stabilisation up to truncation {cap}: "
        "non-isolated singularity (possibly a non-reduced germ) or cap too small"
    )


def milnor_number(f, cap: int = DEFAULT_CAP) -> int:
    """dim of the Jacobian algebra O/(f_x, f_y) at the origin."""
    germ = _as_germ(f)
    cap = _check_cap(cap)
    if _is_smooth(germ):
        return 0
    poly = germ.coefficients()
    dim, _ = _stabilized_dimension([_partial(poly, 0), _partial(poly, 1)], cap)
    return dim


def tjurina_number(f, cap: int = DEFAULT_CAP) -> int:
    """dim of O/(f, f_x, f_y) at the origin."""
    germ = _as_germ(f)
    cap = _check_cap(cap)
    if _is_smooth(germ):
        return 0
    poly = germ.coefficients()
    dim, _ = _stabilized_dimension([poly, _partial(poly, 0), _partial(poly, 1)], cap)
    return dim


def germ_invariants(f, cap: int = DEFAULT_CAP) -> GermInvariants:
    """Both numbers plus the truncation at which they stabilised."""
    germ = _as_germ(f)
    cap = _check_cap(cap)
    if _is_smooth(germ):
        return GermInvariants(0, 0, 1)
    poly = germ.coefficients()
    fx, fy = _partial(poly, 0), _partial(poly, 1)
    mu, used_mu = _stabilized_dimension([fx, fy], cap)
    tau, used_tau = _stabilized_dimension([poly, fx, fy], cap)
    if mu < tau:
        raise AssertionError(f"mu = {mu} < tau = {tau}: elimination bug")
    return GermInvariants(mu, tau, max(used_mu, used_tau))


def euler_reduced_germ(f, cap: int = DEFAULT_CAP) -> int:
    """mu - tau >= 0, the local value of the weight-1 pair."""
    invariants = germ_invariants(f, cap)
    return invariants.mu - invariants.tau


def log_chern_c2(c2_surface: int, kd_dot_d: int, taus: Iterable[int]) -> int:
    """Second Chern number of the logarithmic forms: c2 + (K+D).D - sum tau."""
    return _check_int("c2_surface", c2_surface) + _check_int("kd_dot_d", kd_dot_d) - sum(
        _check_int("tau", t) for t in taus
    )


def euler_top_complement(c2_surface: int, kd_dot_d: int, mus: Iterable[int]) -> int:
    """Topological Euler number of the complement: c2 + (K+D).D - sum mu."""
    return _check_int("c2_surface", c2_surface) + _check_int("kd_dot_d", kd_dot_d) - sum(
        _check_int("mu", m) for m in mus
    )


def lct_obstruction(pairs: Iterable) -> tuple[int, str]:
    """Sum of mu - tau over the singular points, with its verdict.

    A positive total rules the logarithmic comparison theorem out for the
    curve; zero is only the absence of this obstruction, not a certificate
    that the theorem holds.
    """
    total = 0
    for entry in pairs:
        mu, tau = entry
        _check_int("mu", mu)
        _check_int("tau", tau)
        if mu < 0 or tau < 0 or mu < tau:
            raise ValueError(f"need mu >= tau >= 0, got (mu, tau) = ({mu}, {tau})")
        total += mu - tau
    return total, ("LCT-fails" if total > 0 else "no-obstruction")


def _check_int(name, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    return value


def germ_from_dict(doc) -> CurveGerm:
    """Build a germ from ``{"terms": [[i, j, "p/q"], ...]}``."""
    if not isinstance(doc, dict) or "terms" not in doc:
        raise ValueError("germ object must have a 'terms' field")
    return CurveGerm(tuple(tuple(term) for term in doc["terms"]))


def germ_to_dict(germ: CurveGerm) -> dict:
    return {"terms": [[i, j, format_rational(c)] for i, j, c in germ.terms]}

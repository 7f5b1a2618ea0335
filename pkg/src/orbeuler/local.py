"""Local orbifold Euler numbers of surface pair germs.

A local pair germ is a normal surface germ together with a boundary divisor
whose weights lie in [0, 1].  Four classes admit exact closed forms and are
modelled here:

``Ordinary``
    n smooth branches through a smooth point, pairwise transverse; a single
    branch is just a smooth point of the boundary.  With weights sorted so
    that ``a_n`` is largest and ``a`` their sum, the value is 0 when a > 2
    (not log canonical), ``(1 - a + a_n)(1 - a_n)`` when ``2 a_n >= a``, and
    ``(a - 2)^2 / 4`` when additionally at most three branches are present.
    For four or more branches in the balanced regime only the upper bound
    ``(1 - a/2)^2`` is certified, and the exactness kind records that.

``CyclicQuotient``
    A cyclic quotient singularity of chain type <n, q> with the two boundary
    curves touching the ends of the chain; the value is
    ``(1 - d1)(1 - d2) / n``, independent of q.

``StarQuotient``
    A star-shaped resolution: central curve of self-intersection -b with
    three Hirzebruch-Jung arms <n_i, q_i> carrying weights d_i.  These germs
    are quotients by polyhedral subgroups; with ``b0 = b - sum q_i/n_i``,
    ``alpha = sum (1 - d_i)/n_i`` and ``beta`` the smallest summand, the
    value is 0 for alpha < 1, ``(alpha - 1)^2 / (4 b0)`` in the balanced
    range, and ``(alpha - 1 - beta) beta / b0`` beyond it.

``ReducedGerm``
    A reduced plane curve germ taken with weight 1, summarised by its Milnor
    and Tjurina numbers; the value is ``mu - tau``.

Values are exact rationals.  Evaluators return :class:`EulerValue`, which
couples the number with its exactness kind and a log-canonicity flag; callers
must propagate the ``UPPER_BOUND`` kind.  Non log canonical germs report the
exact value 0.  Everything here is immutable and pure, so unrestricted
concurrent use is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from .rationals import Chain, ChainError, as_rational, format_rational

__all__ = [
    "NotQuotientError",
    "Exactness",
    "EulerValue",
    "Ordinary",
    "CyclicQuotient",
    "StarArm",
    "StarQuotient",
    "ReducedGerm",
    "LocalSingularity",
    "StarInvariants",
    "StarValidation",
    "CoverDegree",
    "CoverBundleData",
    "lc_status",
    "euler_ordinary",
    "euler_cyclic",
    "star_invariants",
    "validate_star",
    "euler_star",
    "cover_degree",
    "cover_bundle_data",
    "euler_ordinary3_cover_oracle",
    "euler_local",
    "singularity_from_dict",
    "singularity_to_dict",
]


class NotQuotientError(ValueError):
    """The star input is not resolved by a finite polyhedral quotient."""


class Exactness(Enum):
    EXACT = "exact"
    UPPER_BOUND = "upper-bound"


@dataclass(frozen=True)
class EulerValue:
    """A local value together with its exactness kind and lc status.

    Invariants: a non log canonical germ reports exactly 0, and a log
    canonical local value never exceeds 1.
    """

    value: Fraction
    exactness: Exactness
    lc: bool

    def __post_init__(self):
        object.__setattr__(self, "value", as_rational(self.value))
        if not isinstance(self.exactness, Exactness):
            raise TypeError("exactness must be an Exactness member")
        if not self.lc and self.value != 0:
            raise ValueError("a non log canonical germ must report value 0")
        if self.lc and self.value > 1:
            raise ValueError("a log canonical local value never exceeds 1")

    @property
    def is_exact(self) -> bool:
        return self.exactness is Exactness.EXACT

    def lc_label(self) -> str:
        return "lc" if self.lc else "non-lc"


def _weight(value) -> Fraction:
    w = as_rational(value)
    if not 0 <= w <= 1:
        raise ValueError(f"boundary weight {format_rational(w)} outside [0, 1]")
    return w


def _as_chain(chain) -> Chain:
    if isinstance(chain, Chain):
        return chain
    try:
        n, q = chain
    except (TypeError, ValueError):
        raise ChainError(f"not a chain descriptor: {chain!r}") from None
    return Chain(n, q)


@dataclass(frozen=True)
class Ordinary:
    """An ordinary point: smooth branches with pairwise distinct tangents."""

    coeffs: tuple

    def __post_init__(self):
        vals = tuple(_weight(c) for c in self.coeffs)
        if not vals:
            raise ValueError("an ordinary point needs at least one branch")
        object.__setattr__(self, "coeffs", vals)


@dataclass(frozen=True)
class CyclicQuotient:
    """Chain type <n, q> with boundary weights d1, d2 on the end curves."""

    chain: Chain
    d1: Fraction
    d2: Fraction

    def __post_init__(self):
        chain = _as_chain(self.chain)
        if chain.is_minus_one_curve:
            raise ChainError("a (-1)-curve is not a quotient singularity germ")
        object.__setattr__(self, "chain", chain)
        object.__setattr__(self, "d1", _weight(self.d1))
        object.__setattr__(self, "d2", _weight(self.d2))


@dataclass(frozen=True)
class StarArm:
    """One arm of a star: a chain <n, q> whose outer end carries weight d."""

    chain: Chain
    d: Fraction

    def __post_init__(self):
        chain = _as_chain(self.chain)
        if chain.is_minus_one_curve:
            raise ChainError("a (-1)-curve cannot be a star arm")
        object.__setattr__(self, "chain", chain)
        object.__setattr__(self, "d", _weight(self.d))

    @property
    def n(self) -> int:
        return self.chain.n

    @property
    def q(self) -> int:
        return self.chain.q


@dataclass(frozen=True)
class StarQuotient:
    """Central curve of self-intersection -b with exactly three arms."""

    b: int
    arms: tuple

    def __post_init__(self):
        if isinstance(self.b, bool) or not isinstance(self.b, int) or self.b < 1:
            raise ValueError(f"central weight b must be a positive integer, got {self.b!r}")
        arms = tuple(
            arm if isinstance(arm, StarArm) else StarArm(Chain(arm[0], arm[1]), arm[2])
            for arm in self.arms
        )
        if len(arms) != 3:
            raise ValueError(f"a star has exactly 3 arms, got {len(arms)}")
        object.__setattr__(self, "arms", arms)


@dataclass(frozen=True)
class ReducedGerm:
    """A weight-1 reduced curve germ, recorded by its Milnor/Tjurina pair."""

    mu: int
    tau: int

    def __post_init__(self):
        for name, value in (("mu", self.mu), ("tau", self.tau)):
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")
        if self.mu < self.tau:
            raise ValueError(f"mu >= tau required, got mu={self.mu}, tau={self.tau}")


LocalSingularity = Union[Ordinary, CyclicQuotient, StarQuotient, ReducedGerm]


@dataclass(frozen=True)
class StarInvariants:
    """b0 = b - sum q_i/n_i, alpha = sum (1-d_i)/n_i, beta = min (1-d_i)/n_i."""

    b0: Fraction
    alpha: Fraction
    beta: Fraction


@dataclass(frozen=True)
class StarValidation:
    invariants: StarInvariants
    triple: tuple[int, int, int]
    multipliers: tuple[int, int, int]


@dataclass(frozen=True)
class CoverDegree:
    """Order bookkeeping for the smooth cover of a polyhedral quotient.

    ``half_order`` is the s with 1 + 1/s = 1/p1 + 1/p2 + 1/p3 (half the order
    of the projectivized group); the covering degree is ``4 s^2 b0``.
    """

    half_order: Fraction
    degree: Fraction
    triple: tuple[int, int, int]


@dataclass(frozen=True)
class CoverBundleData:
    """Degree data of the rank-2 bundle on the cyclic cover of a 3-branch point.

    For weights a_i = 1 - l_i/n the pulled-back logarithmic forms descend to
    a rank-2 bundle of degree ``n - l1 - l2 - l3`` on a curve; ``sub_floor``
    bounds the degree of a line subsheaf from below and ``s_max`` is the
    degree of a maximal one.
    """

    n: int
    l1: int
    l2: int
    l3: int
    degree: int
    sub_floor: int
    s_max: Fraction


def lc_status(s: LocalSingularity) -> bool:
    """Whether the germ is log canonical (without computing its value)."""
    if isinstance(s, Ordinary):
        return sum(s.coeffs) <= 2
    if isinstance(s, CyclicQuotient):
        return True
    if isinstance(s, StarQuotient):
        return star_invariants(s.b, s.arms).alpha >= 1
    if isinstance(s, ReducedGerm):
        return True
    raise TypeError(f"not a local singularity: {type(s).__name__}")


def euler_ordinary(coeffs) -> EulerValue:
    """Value of an ordinary point with the given branch weights.

    A single branch folds to ``1 - a``, the count of a smooth boundary point.
    """
    point = coeffs if isinstance(coeffs, Ordinary) else Ordinary(tuple(coeffs))
    # A weight-0 branch does not change the underlying divisor; dropping such
    # branches keeps both the value and the exactness kind stable under
    # padding with zeros.
    weights = sorted(c for c in point.coeffs if c)
    if not weights:
        return EulerValue(Fraction(1), Exactness.EXACT, True)
    a = sum(weights)
    top = weights[-1]
    if a > 2:
        return EulerValue(Fraction(0), Exactness.EXACT, False)
    if 2 * top >= a:
        return EulerValue((1 - a + top) * (1 - top), Exactness.EXACT, True)
    if len(weights) <= 3:
        return EulerValue((a - 2) ** 2 / 4, Exactness.EXACT, True)
    return EulerValue((1 - a / 2) ** 2, Exactness.UPPER_BOUND, True)


def euler_cyclic(chain, d1, d2) -> EulerValue:
    """Value ``(1 - d1)(1 - d2)/n`` of a cyclic quotient; independent of q."""
    germ = CyclicQuotient(_as_chain(chain), d1, d2)
    value = (1 - germ.d1) * (1 - germ.d2) / germ.chain.n
    return EulerValue(value, Exactness.EXACT, True)


def star_invariants(b, arms=None) -> StarInvariants:
    star = _as_star(b, arms)
    b0 = star.b - sum(Fraction(arm.q, arm.n) for arm in star.arms)
    shares = [(1 - arm.d) / arm.n for arm in star.arms]
    return StarInvariants(b0, sum(shares), min(shares))


def _as_star(b, arms) -> StarQuotient:
    if isinstance(b, StarQuotient):
        return b
    if arms is None:
        raise ValueError("star arms are required when b is given as an integer")
    return StarQuotient(b, tuple(arms))


_EXCEPTIONAL_TRIPLES = ((2, 3, 3), (2, 3, 4), (2, 3, 5))
_MULTIPLIER_LIMIT = 60


def validate_star(b, arms=None) -> StarValidation:
    """Find multipliers m_i >= 1 with (n_1 m_1, n_2 m_2, n_3 m_3) polyhedral.

    Polyhedral triples are (2, 2, n), (2, 3, 3), (2, 3, 4) and (2, 3, 5).
    The exceptional triples are searched in ascending lexicographic order of
    the multipliers; the dihedral family is then decided by divisibility.
    Raises :class:`NotQuotientError` when b0 <= 0 or no assignment exists;
    the Euler value itself never depends on the assignment found.
    """
    star = _as_star(b, arms)
    invariants = star_invariants(star.b, star.arms)
    if invariants.b0 <= 0:
        raise NotQuotientError(
            f"b0 = {format_rational(invariants.b0)} <= 0: the central curve does not contract"
        )
    ns = tuple(arm.n for arm in star.arms)
    for m1 in range(1, _MULTIPLIER_LIMIT + 1):
        if ns[0] * m1 > 5:
            break
        for m2 in range(1, _MULTIPLIER_LIMIT + 1):
            if ns[1] * m2 > 5:
                break
            for m3 in range(1, _MULTIPLIER_LIMIT + 1):
                if ns[2] * m3 > 5:
                    break
                triple = tuple(sorted((ns[0] * m1, ns[1] * m2, ns[2] * m3)))
                if triple in _EXCEPTIONAL_TRIPLES:
                    return StarValidation(invariants, triple, (m1, m2, m3))
    for i, j in ((0, 1), (0, 2), (1, 2)):
        if ns[i] <= 2 and ns[j] <= 2:
            k = 3 - i - j
            multipliers = [0, 0, 0]
            multipliers[i] = 2 // ns[i]
            multipliers[j] = 2 // ns[j]
            multipliers[k] = 1 if ns[k] >= 2 else 2
            triple = tuple(sorted((2, 2, ns[k] * multipliers[k])))
            return StarValidation(invariants, triple, tuple(multipliers))
    raise NotQuotientError(f"no polyhedral assignment for arm orders {ns}")


def euler_star(b, arms=None) -> EulerValue:
    """Value of a star-shaped quotient point; see the module docstring."""
    validation = validate_star(b, arms)
    inv = validation.invariants
    if inv.alpha < 1:
        return EulerValue(Fraction(0), Exactness.EXACT, False)
    if inv.alpha < 2 * inv.beta + 1:
        return EulerValue((inv.alpha - 1) ** 2 / (4 * inv.b0), Exactness.EXACT, True)
    return EulerValue((inv.alpha - 1 - inv.beta) * inv.beta / inv.b0, Exactness.EXACT, True)


def cover_degree(b0, p1: int, p2: int, p3: int) -> CoverDegree:
    """Degree 4 s^2 b0 of the smooth cover for a spherical triple (p1,p2,p3)."""
    b0 = as_rational(b0)
    if b0 <= 0:
        raise ValueError(f"b0 must be positive, got {format_rational(b0)}")
    for p in (p1, p2, p3):
        if isinstance(p, bool) or not isinstance(p, int) or p < 1:
            raise ValueError(f"triple entries must be positive integers, got {p!r}")
    excess = Fraction(1, p1) + Fraction(1, p2) + Fraction(1, p3) - 1
    if excess <= 0:
        raise ValueError(f"({p1}, {p2}, {p3}) is not a spherical triple")
    s = 1 / excess
    return CoverDegree(s, 4 * s * s * b0, (p1, p2, p3))


def cover_bundle_data(n: int, l1: int, l2: int, l3: int) -> CoverBundleData:
    for name, value in (("n", n), ("l1", l1), ("l2", l2), ("l3", l3)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError(f"{name} must be an integer, got {value!r}")
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    for name, l in (("l1", l1), ("l2", l2), ("l3", l3)):
        if not 1 <= l <= n - 1:
            raise ValueError(f"{name} = {l} outside the interior range 1..{n - 1}")
    e = n - l1 - l2 - l3
    p = max(-l1, -l2, -l3, e)
    s = max(Fraction(p), Fraction(e, 2))
    return CoverBundleData(n, l1, l2, l3, e, p, s)


def euler_ordinary3_cover_oracle(n: int, l1: int, l2: int, l3: int) -> Fraction:
    """Recompute the three-branch value through the cyclic cover.

    For weights a_i = 1 - l_i/n, pulling the logarithmic forms back along the
    degree-n cover branched over the three lines yields a rank-2 bundle on a
    curve whose maximal-subsheaf degree s gives the value s(e - s)/n^2, with
    e the bundle degree.  The 1/n^2 normalization is calibrated against the
    closed form on its exact branches (see the test suite); this derivation
    is otherwise independent of the piecewise case analysis and serves as an
    oracle for it.
    """
    data = cover_bundle_data(n, l1, l2, l3)
    return data.s_max * (data.degree - data.s_max) / (n * n)


def euler_local(s: LocalSingularity) -> EulerValue:
    """Evaluate any supported germ by dispatching on its class."""
    if isinstance(s, Ordinary):
        return euler_ordinary(s)
    if isinstance(s, CyclicQuotient):
        return euler_cyclic(s.chain, s.d1, s.d2)
    if isinstance(s, StarQuotient):
        return euler_star(s.b, s.arms)
    if isinstance(s, ReducedGerm):
        difference = s.mu - s.tau
        if difference > 1:
            raise ValueError(
                f"mu - tau = {difference} > 1: a weight-1 germ with this defect is not log canonical"
            )
        return EulerValue(Fraction(difference), Exactness.EXACT, True)
    raise TypeError(f"not a local singularity: {type(s).__name__}")


def singularity_from_dict(doc) -> LocalSingularity:
    """Build a local singularity from its document form.

    Recognised ``"type"`` values: ``"ordinary"`` (field ``coeffs``),
    ``"cyclic"`` (fields ``n``, ``q``, ``d1``, ``d2``), ``"star"`` (fields
    ``b`` and ``arms`` as ``[n, q, d]`` triples) and ``"germ_mu_tau"``
    (fields ``mu``, ``tau``).  Rationals are ``"p/q"`` strings.
    """
    if not isinstance(doc, dict):
        raise ValueError(f"expected a singularity object, got {type(doc).__name__}")
    kind = doc.get("type")
    if kind == "ordinary":
        return Ordinary(tuple(_field(doc, "coeffs")))
    if kind == "cyclic":
        return CyclicQuotient(
            Chain(_field(doc, "n"), _field(doc, "q")),
            _field(doc, "d1"),
            _field(doc, "d2"),
        )
    if kind == "star":
        arms = _field(doc, "arms")
        return StarQuotient(_field(doc, "b"), tuple(tuple(arm) for arm in arms))
    if kind == "germ_mu_tau":
        return ReducedGerm(_field(doc, "mu"), _field(doc, "tau"))
    raise ValueError(f"unknown singularity type: {kind!r}")


def _field(doc, name):
    if name not in doc:
        raise ValueError(f"missing field {name!r} in singularity object")
    return doc[name]


def singularity_to_dict(s: LocalSingularity) -> dict:
    if isinstance(s, Ordinary):
        return {"type": "ordinary", "coeffs": [format_rational(c) for c in s.coeffs]}
    if isinstance(s, CyclicQuotient):
        return {
            "type": "cyclic",
            "n": s.chain.n,
            "q": s.chain.q,
            "d1": format_rational(s.d1),
            "d2": format_rational(s.d2),
        }
    if isinstance(s, StarQuotient):
        return {
            "type": "star",
            "b": s.b,
            "arms": [[arm.n, arm.q, format_rational(arm.d)] for arm in s.arms],
        }
    if isinstance(s, ReducedGerm):
        return {"type": "germ_mu_tau", "mu": s.mu, "tau": s.tau}
    raise TypeError(f"not a local singularity: {type(s).__name__}")

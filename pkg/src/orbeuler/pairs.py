"""Global orbifold Euler numbers of projective surface pairs, and the
Bogomolov-Miyaoka-Yau style certificates built from them.

A pair is a normal projective surface X with a boundary divisor
``D = sum a_i D_i`` (weights in [0, 1]).  Its orbifold Euler number counts
smooth points off D as 1, smooth points of D_i as 1 - a_i, and each supplied
special point by its local value:

    e_orb(X, D) = e_top(X) - sum a_i e_top(D_i - Sing(X, D))
                  + sum over points (e_loc - 1).

The main certificate is ``3 e_orb(X, D) >= (K_X + D)^2``, valid when the
pair is log canonical and a multiple of K_X + D is effective; equality forces
K_X + D nef (reported as a note, never verified here).  A second form bounds
``(K_X + D)^2`` by weighted branch counts and multiplicities alone.

The supplied point list is trusted to be all of Sing(X, D): omitting a
singular point invalidates a certificate.  Two surface modes exist: the
projective plane (intersection numbers from degrees, effectivity decided by
total degree) and a generic mode with user-supplied pairings and a
user-asserted effectivity flag.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, Optional

from .local import (
    Exactness,
    LocalSingularity,
    euler_local,
    lc_status,
    singularity_from_dict,
    singularity_to_dict,
)
from .rationals import as_rational, format_rational

__all__ = [
    "Verdict",
    "SurfaceData",
    "ComponentData",
    "SingularPointData",
    "PairDescription",
    "GlobalEuler",
    "BmyReport",
    "IneqReport",
    "euler_top_curve",
    "euler_orbifold_global",
    "pair_kd_squared",
    "check_bmy",
    "check_bmy_multiplicities",
    "max_canonical_degree_extremal",
    "pair_from_dict",
    "pair_to_dict",
]


class Verdict(Enum):
    PROVED = "proved"
    CONSISTENT_UPPER_BOUND = "consistent-upper-bound"
    VIOLATION = "violation"
    PRECONDITION_FAILED = "precondition-failed"


@dataclass(frozen=True)
class SurfaceData:
    """Surface numerics: e_top (= c2 when smooth projective) and c1^2 = K^2."""

    e_top: int
    c1_sq: int
    plane: bool = False

    def __post_init__(self):
        for name, value in (("e_top", self.e_top), ("c1_sq", self.c1_sq)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f"{name} must be an integer, got {value!r}")
        if self.plane and (self.e_top, self.c1_sq) != (3, 9):
            raise ValueError("plane mode fixes e_top = 3 and c1_sq = 9")

    @classmethod
    def projective_plane(cls) -> "SurfaceData":
        return cls(3, 9, plane=True)

    @classmethod
    def generic(cls, e_top: int, c1_sq: int) -> "SurfaceData":
        return cls(e_top, c1_sq, plane=False)


@dataclass(frozen=True)
class ComponentData:
    """One boundary component: weight, geometric genus, intersection data.

    Plane mode uses ``degree``; generic mode uses ``pairings``, a mapping
    with the key ``"K"`` for K.D_i, the component's own id for D_i^2, and
    other component ids for D_i.D_j.
    """

    id: str
    coeff: Fraction
    genus: int
    degree: Optional[int] = None
    pairings: Optional[Mapping[str, int]] = None

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise ValueError(f"component id must be a nonempty string, got {self.id!r}")
        coeff = as_rational(self.coeff)
        if not 0 <= coeff <= 1:
            raise ValueError(
                f"component {self.id}: weight {format_rational(coeff)} outside [0, 1]"
            )
        object.__setattr__(self, "coeff", coeff)
        if isinstance(self.genus, bool) or not isinstance(self.genus, int) or self.genus < 0:
            raise ValueError(f"component {self.id}: genus must be a nonnegative integer")
        if self.degree is not None:
            if isinstance(self.degree, bool) or not isinstance(self.degree, int) or self.degree < 1:
                raise ValueError(f"component {self.id}: degree must be a positive integer")
        if self.pairings is not None:
            object.__setattr__(self, "pairings", dict(self.pairings))


@dataclass(frozen=True)
class SingularPointData:
    """A point of Sing(X, D): local germ, incidences, weighted multiplicity.

    ``incident`` lists (component id, number of analytic branches of that
    component at the point); ``multiplicity`` is the weight-combined
    multiplicity of D at the point, sum of a_i times the branch
    multiplicities.
    """

    id: str
    local: LocalSingularity
    incident: tuple
    multiplicity: Fraction

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise ValueError(f"point id must be a nonempty string, got {self.id!r}")
        seen = set()
        normalized = []
        for entry in self.incident:
            try:
                component_id, branches = entry
            except (TypeError, ValueError):
                raise ValueError(
                    f"point {self.id}: incidence {entry!r} is not a (component, branches) pair"
                ) from None
            if isinstance(branches, bool) or not isinstance(branches, int) or branches < 1:
                raise ValueError(f"point {self.id}: branch count must be a positive integer")
            if component_id in seen:
                raise ValueError(f"point {self.id}: component {component_id!r} listed twice")
            seen.add(component_id)
            normalized.append((component_id, branches))
        object.__setattr__(self, "incident", tuple(normalized))
        multiplicity = as_rational(self.multiplicity)
        if multiplicity < 0:
            raise ValueError(f"point {self.id}: multiplicity must be nonnegative")
        object.__setattr__(self, "multiplicity", multiplicity)


@dataclass(frozen=True)
class PairDescription:
    surface: SurfaceData
    components: tuple
    points: tuple
    effective: Optional[bool] = None

    def __post_init__(self):
        components = tuple(self.components)
        points = tuple(self.points)
        ids = [c.id for c in components]
        if len(set(ids)) != len(ids):
            raise ValueError("component ids must be unique")
        point_ids = [p.id for p in points]
        if len(set(point_ids)) != len(point_ids):
            raise ValueError("point ids must be unique")
        known = set(ids)
        for point in points:
            for component_id, _ in point.incident:
                if component_id not in known:
                    raise ValueError(
                        f"point {point.id}: unknown component {component_id!r}"
                    )
        if self.surface.plane:
            for component in components:
                if component.degree is None:
                    raise ValueError(f"component {component.id}: plane mode needs a degree")
        object.__setattr__(self, "components", components)
        object.__setattr__(self, "points", points)

    def component(self, component_id: str) -> ComponentData:
        for component in self.components:
            if component.id == component_id:
                return component
        raise KeyError(component_id)


@dataclass(frozen=True)
class GlobalEuler:
    """A global value; unlike local values it may well exceed 1."""

    value: Fraction
    exactness: Exactness
    lc: bool

    @property
    def is_exact(self) -> bool:
        return self.exactness is Exactness.EXACT


@dataclass(frozen=True)
class BmyReport:
    lhs: Fraction
    lhs_exactness: Exactness
    rhs: Fraction
    verdict: Verdict
    equality: bool
    slack: Fraction
    notes: tuple = ()


@dataclass(frozen=True)
class IneqReport:
    lhs: Fraction
    rhs: Fraction
    slack: Fraction
    verdict: Verdict
    equality: bool
    notes: tuple = ()


def euler_top_curve(genus: int, branch_counts) -> int:
    """e_top of a curve: 2 - 2g - sum (r_P - 1) over its singular points."""
    if isinstance(genus, bool) or not isinstance(genus, int) or genus < 0:
        raise ValueError(f"genus must be a nonnegative integer, got {genus!r}")
    total = 2 - 2 * genus
    for r in branch_counts:
        if isinstance(r, bool) or not isinstance(r, int) or r < 1:
            raise ValueError(f"branch count must be a positive integer, got {r!r}")
        total -= r - 1
    return total


def _local_values(pair: PairDescription):
    values = []
    for point in pair.points:
        if not point.incident:
            warnings.warn(
                f"point {point.id} is incident to no component; "
                "nothing is removed from any curve (suspicious input unless it is "
                "a surface singularity off the boundary)",
                stacklevel=3,
            )
        values.append((point, euler_local(point.local)))
    return values


def euler_orbifold_global(pair: PairDescription) -> GlobalEuler:
    """Assemble the global orbifold Euler number of the pair.

    The kind is an upper bound as soon as one local value is (all local
    terms enter with positive sign), and the lc flag records whether every
    supplied point is log canonical.
    """
    local_values = _local_values(pair)
    total = Fraction(pair.surface.e_top)
    for component in pair.components:
        incidences = [
            branches
            for point in pair.points
            for component_id, branches in point.incident
            if component_id == component.id
        ]
        e_top_component = euler_top_curve(component.genus, incidences)
        removed_points = len(incidences)
        total -= component.coeff * (e_top_component - removed_points)
    for _, value in local_values:
        total += value.value - 1
    exactness = (
        Exactness.EXACT
        if all(v.is_exact for _, v in local_values)
        else Exactness.UPPER_BOUND
    )
    return GlobalEuler(total, exactness, all(v.lc for _, v in local_values))


def pair_kd_squared(pair: PairDescription) -> Fraction:
    """(K_X + D)^2 by bilinear expansion of the supplied pairings.

    Plane mode shortcuts to (sum a_i deg D_i - 3)^2.
    """
    if pair.surface.plane:
        degree = sum((c.coeff * c.degree for c in pair.components), Fraction(0))
        return (degree - 3) ** 2
    total = Fraction(pair.surface.c1_sq)
    for component in pair.components:
        total += 2 * component.coeff * _pairing(component, "K")
    for left in pair.components:
        for right in pair.components:
            total += left.coeff * right.coeff * _intersection(left, right)
    return total


def _pairing(component: ComponentData, key: str) -> int:
    if component.pairings is None or key not in component.pairings:
        raise ValueError(f"component {component.id}: missing pairing entry {key!r}")
    return component.pairings[key]


def _intersection(left: ComponentData, right: ComponentData) -> int:
    has_left = left.pairings is not None and right.id in left.pairings
    has_right = right.pairings is not None and left.id in right.pairings
    if has_left and has_right and left.pairings[right.id] != right.pairings[left.id]:
        raise ValueError(
            f"asymmetric pairing between {left.id} and {right.id}: "
            f"{left.pairings[right.id]} vs {right.pairings[left.id]}"
        )
    if has_left:
        return left.pairings[right.id]
    if has_right:
        return right.pairings[left.id]
    raise ValueError(f"missing pairing entry between {left.id} and {right.id}")


def _effectivity(pair: PairDescription) -> tuple[bool, str]:
    if pair.surface.plane:
        degree = sum((c.coeff * c.degree for c in pair.components), Fraction(0))
        if degree >= 3:
            return True, ""
        return False, (
            f"K+D has total degree {format_rational(degree - 3)} < 0 on the plane: "
            "no multiple is effective"
        )
    if pair.effective:
        return True, ""
    return False, "effectivity of a multiple of K+D was not asserted"


def check_bmy(pair: PairDescription) -> BmyReport:
    """Certify 3 e_orb(X, D) >= (K_X + D)^2.

    Preconditions (checked, not assumed): every supplied point log
    canonical, and a multiple of K+D effective (decided by degree in plane
    mode, user-asserted otherwise).  With an exact left side the verdict is
    Proved or Violation; with an upper-bound left side a passing comparison
    is only ConsistentUpperBound, while a failing one is still a Violation
    since the true value sits below the bound.
    """
    global_value = euler_orbifold_global(pair)
    lhs = 3 * global_value.value
    rhs = pair_kd_squared(pair)
    notes = []
    preconditions = True
    if not global_value.lc:
        preconditions = False
        notes.append("the pair is not log canonical at some supplied point")
    effective, reason = _effectivity(pair)
    if not effective:
        preconditions = False
        notes.append(reason)
    equality = global_value.is_exact and lhs == rhs
    if not preconditions:
        verdict = Verdict.PRECONDITION_FAILED
    elif lhs >= rhs:
        verdict = Verdict.PROVED if global_value.is_exact else Verdict.CONSISTENT_UPPER_BOUND
    else:
        verdict = Verdict.VIOLATION
    if verdict is Verdict.PROVED and equality:
        notes.append("equality: K+D is nef (consequence of the theorem, not verified)")
    return BmyReport(
        lhs=lhs,
        lhs_exactness=global_value.exactness,
        rhs=rhs,
        verdict=verdict,
        equality=equality,
        slack=lhs - rhs,
        notes=tuple(notes),
    )


def check_bmy_multiplicities(pair: PairDescription) -> IneqReport:
    """Certify (K+D)^2 <= 3 (c2 + sum a_i (2g_i - 2) + sum (r_P - m_P + m_P^2/4)).

    Here r_P is the weighted branch count sum a_i r_{P,i} and m_P the
    supplied weighted multiplicity.  Preconditions as in :func:`check_bmy`.
    """
    lhs = pair_kd_squared(pair)
    point_term = Fraction(0)
    for point in pair.points:
        r = sum(
            (pair.component(component_id).coeff * branches
             for component_id, branches in point.incident),
            Fraction(0),
        )
        m = point.multiplicity
        point_term += r - m + m * m / 4
    genus_term = sum(
        (c.coeff * (2 * c.genus - 2) for c in pair.components), Fraction(0)
    )
    rhs = 3 * (pair.surface.e_top + genus_term + point_term)
    notes = []
    preconditions = True
    if not all(lc_status(point.local) for point in pair.points):
        preconditions = False
        notes.append("the pair is not log canonical at some supplied point")
    effective, reason = _effectivity(pair)
    if not effective:
        preconditions = False
        notes.append(reason)
    if not preconditions:
        verdict = Verdict.PRECONDITION_FAILED
    elif lhs <= rhs:
        verdict = Verdict.PROVED
    else:
        verdict = Verdict.VIOLATION
    return IneqReport(
        lhs=lhs,
        rhs=rhs,
        slack=rhs - lhs,
        verdict=verdict,
        equality=lhs == rhs,
        notes=tuple(notes),
    )


def max_canonical_degree_extremal(genus: int, points) -> Fraction:
    """Largest K_X C allowed for a genus-g curve on a surface with K^2 = 3 c2 > 0.

    Each point contributes through (branches, multiplicity); branches never
    exceed the multiplicity.  The result 3(g - 1) + (3/2) sum (r_P - m_P) is
    negative for rational and elliptic curves without singular points, which
    is how such surfaces exclude them.
    """
    if isinstance(genus, bool) or not isinstance(genus, int) or genus < 0:
        raise ValueError(f"genus must be a nonnegative integer, got {genus!r}")
    total = Fraction(3) * (genus - 1)
    for entry in points:
        r, m = entry
        if isinstance(r, bool) or not isinstance(r, int) or r < 1:
            raise ValueError(f"branch count must be a positive integer, got {r!r}")
        m = as_rational(m)
        if r > m:
            raise ValueError(
                f"branches r = {r} exceed multiplicity m = {format_rational(m)}"
            )
        total += Fraction(3, 2) * (r - m)
    return total


def pair_from_dict(doc) -> PairDescription:
    """Build a pair description from its document form.

    Top-level keys: ``surface`` (``mode``, plus ``e_top``/``c1_sq`` in
    generic mode), ``components``, ``points`` and ``effective``.  Rationals
    are ``"p/q"`` strings throughout.
    """
    if not isinstance(doc, dict):
        raise ValueError(f"expected a pair document, got {type(doc).__name__}")
    surface_doc = doc.get("surface")
    if not isinstance(surface_doc, dict) or "mode" not in surface_doc:
        raise ValueError("pair document needs a 'surface' object with a 'mode'")
    mode = surface_doc["mode"]
    if mode == "plane":
        surface = SurfaceData.projective_plane()
        for key in ("e_top", "c1_sq"):
            if key in surface_doc and surface_doc[key] != getattr(surface, key):
                raise ValueError(f"surface.{key} contradicts plane mode")
    elif mode == "generic":
        for key in ("e_top", "c1_sq"):
            if key not in surface_doc:
                raise ValueError(f"surface.{key} is required in generic mode")
        surface = SurfaceData.generic(surface_doc["e_top"], surface_doc["c1_sq"])
    else:
        raise ValueError(f"unknown surface mode: {mode!r}")

    components = []
    for entry in doc.get("components", []):
        if not isinstance(entry, dict):
            raise ValueError(f"component entry {entry!r} is not an object")
        for key in ("id", "a", "genus"):
            if key not in entry:
                raise ValueError(f"component entry missing field {key!r}")
        components.append(
            ComponentData(
                id=entry["id"],
                coeff=entry["a"],
                genus=entry["genus"],
                degree=entry.get("degree"),
                pairings=entry.get("pairings"),
            )
        )

    points = []
    for entry in doc.get("points", []):
        if not isinstance(entry, dict):
            raise ValueError(f"point entry {entry!r} is not an object")
        for key in ("id", "local", "incident", "m_P"):
            if key not in entry:
                raise ValueError(f"point entry missing field {key!r}")
        points.append(
            SingularPointData(
                id=entry["id"],
                local=singularity_from_dict(entry["local"]),
                incident=tuple(tuple(pair) for pair in entry["incident"]),
                multiplicity=entry["m_P"],
            )
        )

    return PairDescription(
        surface=surface,
        components=tuple(components),
        points=tuple(points),
        effective=doc.get("effective"),
    )


def pair_to_dict(pair: PairDescription) -> dict:
    surface = {"mode": "plane" if pair.surface.plane else "generic"}
    if not pair.surface.plane:
        surface["e_top"] = pair.surface.e_top
        surface["c1_sq"] = pair.surface.c1_sq
    components = []
    for component in pair.components:
        entry = {
            "id": component.id,
            "a": format_rational(component.coeff),
            "genus": component.genus,
        }
        if component.degree is not None:
            entry["degree"] = component.degree
        if component.pairings is not None:
            entry["pairings"] = dict(component.pairings)
        components.append(entry)
    points = [
        {
            "id": point.id,
            "local": singularity_to_dict(point.local),
            "incident": [[component_id, branches] for component_id, branches in point.incident],
            "m_P": format_rational(point.multiplicity),
        }
        for point in pair.points
    ]
    doc = {"surface": surface, "components": components, "points": points}
    if pair.effective is not None:
        doc["effective"] = pair.effective
    return doc

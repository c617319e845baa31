"""Contact vectors, Lagrangian/geometry kinds and closed-form index formulas.

All quantities are exact integers.  A *contact vector* records a finite
multiset of contact orders: ``counts[i]`` is the number of contacts of order
``i + 1`` (orders are 1-based, storage is a trimmed tuple).  These vectors
play two roles throughout the package: tangency profiles of curves relative
to a divisor, and asymptotic-orbit profiles of punctured curves in a unit
cotangent bundle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import NegativeDimension, TorusPrescribedOrbit

__all__ = [
    "ContactVector",
    "LagrangianKind",
    "GeometryKind",
    "genus_smooth",
    "degree_expected",
    "maslov_cotangent",
    "deformation_dimension",
    "double_point_bound",
    "intersection_bound",
    "f_point_count",
    "fredholm_index",
]

_TERM_RE = re.compile(r"^(\d*)e(\d+)$")


@dataclass(frozen=True)
class ContactVector:
    """Sparse multiset of contact orders, canonical (trailing zeros trimmed).

    Equality and hashing act on the canonical form, so contact vectors can be
    used as dictionary keys.  ``size`` is the number of contacts, ``weight``
    the total contact order; ``weight >= size`` always holds.
    """

    counts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = tuple(int(x) for x in self.counts)
        if any(x < 0 for x in c):
            raise ValueError("contact multiplicities must be non-negative")
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "counts", c)

    @classmethod
    def zero(cls) -> "ContactVector":
        return cls(())

    @classmethod
    def e(cls, order: int, count: int = 1) -> "ContactVector":
        """``count`` contacts of the given order (``e(2)`` is one double contact)."""
        if order < 1:
            raise ValueError("contact order must be >= 1")
        return cls((0,) * (order - 1) + (count,))

    @classmethod
    def parse(cls, text: str) -> "ContactVector":
        """Parse strings like ``"0"``, ``"e2"``, ``"2e1"`` or ``"e1+e2"``."""
        text = text.strip().replace(" ", "")
        if text in ("", "0"):
            return cls.zero()
        out = cls.zero()
        for term in text.split("+"):
            m = _TERM_RE.match(term)
            if m is None:
                raise ValueError(f"cannot parse contact term {term!r}")
            coeff = int(m.group(1)) if m.group(1) else 1
            out = out + cls.e(int(m.group(2)), coeff)
        return out

    def __getitem__(self, order: int) -> int:
        if order < 1:
            raise IndexError("contact orders are 1-based")
        return self.counts[order - 1] if order <= len(self.counts) else 0

    def __bool__(self) -> bool:
        return bool(self.counts)

    def __add__(self, other: "ContactVector") -> "ContactVector":
        n = max(len(self.counts), len(other.counts))
        return ContactVector(tuple(self[i] + other[i] for i in range(1, n + 1)))

    def __sub__(self, other: "ContactVector") -> "ContactVector":
        n = max(len(self.counts), len(other.counts))
        diff = tuple(self[i] - other[i] for i in range(1, n + 1))
        if any(x < 0 for x in diff):
            raise ValueError("contact vector subtraction went negative")
        return ContactVector(diff)

    @property
    def size(self) -> int:
        return sum(self.counts)

    @property
    def weight(self) -> int:
        return sum(i * c for i, c in enumerate(self.counts, start=1))

    def orders(self):
        """Yield the distinct orders with non-zero count."""
        for i, c in enumerate(self.counts, start=1):
            if c:
                yield i

    def as_list(self) -> list[int]:
        return list(self.counts)

    def __str__(self) -> str:
        if not self.counts:
            return "0"
        parts = []
        for i, c in enumerate(self.counts, start=1):
            if c == 1:
                parts.append(f"e{i}")
            elif c:
                parts.append(f"{c}e{i}")
        return "+".join(parts)


class LagrangianKind(Enum):
    """The six constant-curvature Lagrangians whose cotangent bundles occur."""

    SPHERE2 = "sphere2"
    RP2 = "rp2"
    SPHERE3 = "sphere3"
    RP3 = "rp3"
    TORUS2 = "torus2"
    TORUS3 = "torus3"

    @property
    def dimension(self) -> int:
        return 2 if self in (LagrangianKind.SPHERE2, LagrangianKind.RP2, LagrangianKind.TORUS2) else 3

    @property
    def is_sphere(self) -> bool:
        return self in (LagrangianKind.SPHERE2, LagrangianKind.SPHERE3)

    @property
    def is_projective(self) -> bool:
        return self in (LagrangianKind.RP2, LagrangianKind.RP3)

    @property
    def is_torus(self) -> bool:
        return self in (LagrangianKind.TORUS2, LagrangianKind.TORUS3)

    @property
    def epsilon(self) -> int:
        """Orbit-space weight in the dimension equation: 2 (sphere) or 1 (RP^n)."""
        if self.is_torus:
            raise ValueError("torus dimension bookkeeping carries no epsilon factor")
        return 2 if self.is_sphere else 1


class GeometryKind(Enum):
    """Ambient real symplectic manifolds with computable invariants.

    Each kind fixes the pairing constants of the degree-``delta`` class d
    (a multiple of the line / plane-section / hyperplane-section class):
    ``d^2`` and ``c1(X).d``.  The 3-dimensional quadric has no ``d^2``.
    """

    PROJECTIVE_PLANE = "cp2"
    ELLIPSOID_QUADRIC2 = "quadric2"
    ELLIPSOID_QUADRIC3 = "quadric3"

    @property
    def lagrangian(self) -> LagrangianKind:
        return {
            GeometryKind.PROJECTIVE_PLANE: LagrangianKind.RP2,
            GeometryKind.ELLIPSOID_QUADRIC2: LagrangianKind.SPHERE2,
            GeometryKind.ELLIPSOID_QUADRIC3: LagrangianKind.SPHERE3,
        }[self]

    def self_intersection(self, delta: int) -> int:
        if self is GeometryKind.PROJECTIVE_PLANE:
            return delta * delta
        if self is GeometryKind.ELLIPSOID_QUADRIC2:
            return 2 * delta * delta
        raise ValueError("no intersection pairing of 2-cycles in a 6-manifold")

    def chern_degree(self, delta: int) -> int:
        if self is GeometryKind.PROJECTIVE_PLANE:
            return 3 * delta
        if self is GeometryKind.ELLIPSOID_QUADRIC2:
            return 4 * delta
        return 3 * delta


def genus_smooth(geometry: GeometryKind, delta: int) -> int:
    """Smooth genus g_d = (d^2 - c1.d + 2)/2 of the degree-``delta`` class."""
    if delta < 1:
        raise ValueError("degree must be >= 1")
    num = geometry.self_intersection(delta) - geometry.chern_degree(delta) + 2
    assert num % 2 == 0
    return num // 2


def degree_expected(geometry: GeometryKind, delta: int) -> int:
    """Expected count of point conditions c_d = c1.d - 1."""
    if delta < 1:
        raise ValueError("degree must be >= 1")
    return geometry.chern_degree(delta) - 1


def maslov_cotangent(kind: LagrangianKind, n: int, k: int, chi: int) -> int:
    """Maslov index of a simple curve in T*L against the Reeb trivialization.

    k is the total multiplicity of the asymptotic orbits, chi the Euler
    characteristic of the punctured curve.  Sphere: 2(n-1)k - 2chi;
    real projective space: (n-1)k - 2chi; torus: -2chi.
    """
    if kind.dimension != n:
        raise ValueError(f"{kind} has dimension {kind.dimension}, not {n}")
    if k < 0:
        raise ValueError("total multiplicity must be >= 0")
    if kind.is_sphere:
        return 2 * (n - 1) * k - 2 * chi
    if kind.is_projective:
        return (n - 1) * k - 2 * chi
    return -2 * chi


def deformation_dimension(kind: LagrangianKind, n: int, mu: int, g: int, v_minus: int = 0) -> int:
    """Dimension of the deformation space of a simple curve of Maslov index mu.

    Sphere and real projective space: mu + (n-1)(2-2g).  Torus: the negative
    punctures sit on rigid orbit families, mu + (n-1)(2-2g-v_minus).
    """
    if kind.dimension != n:
        raise ValueError(f"{kind} has dimension {kind.dimension}, not {n}")
    if g < 0 or v_minus < 0:
        raise ValueError("genus and puncture counts must be >= 0")
    if kind.is_torus:
        return mu + (n - 1) * (2 - 2 * g - v_minus)
    return mu + (n - 1) * (2 - 2 * g)


def double_point_bound(kind: LagrangianKind, k: int) -> int:
    """Upper bound on double points of a real rational curve in T*L, dim L = 2.

    k is the total multiplicity of the conjugate puncture pairs.  Sphere:
    k^2 - 2k + 1; real projective plane: (k^2 - 3k + 2)/2.  In particular a
    cylinder over a simple orbit (k = 1) is embedded.
    """
    if k < 1:
        raise ValueError("total pair multiplicity must be >= 1")
    if kind is LagrangianKind.SPHERE2:
        return k * k - 2 * k + 1
    if kind is LagrangianKind.RP2:
        return (k - 1) * (k - 2) // 2
    raise ValueError(f"double point bound only applies in dimension 2, not to {kind}")


def intersection_bound(kind: LagrangianKind, k: int) -> int:
    """Bound on the intersection of the curve with a generic deformation of itself."""
    if kind is LagrangianKind.SPHERE2:
        return 2 * k * k
    if kind is LagrangianKind.RP2:
        return k * k
    raise ValueError(f"intersection bound only applies in dimension 2, not to {kind}")


def f_point_count(
    kind: LagrangianKind,
    alpha: ContactVector,
    beta: ContactVector,
    r_l: int = 0,
) -> int:
    """Real-point count r that makes the cotangent moduli problem rigid.

    alpha is the prescribed-orbit profile, beta the free one, r_l the number
    of conjugate point pairs.  Solving the dimension equation
    (n-1)r + 2(n-1)r_L + 2(n-1)|alpha| = 2v + eps(n-1)(I(alpha)+I(beta)) + n-3
    for r gives:

        sphere, n=2:   r = 2|beta| + 2(Ia+Ib) - 1 - 2 r_L
        RP^2:          r = 2|beta| +   Ia+Ib  - 1 - 2 r_L
        sphere, n=3:   r = |beta| - |alpha| + 2(Ia+Ib) - 2 r_L
        RP^3:          r = |beta| - |alpha| +   Ia+Ib  - 2 r_L
        torus:         r = 2|beta| - 1 - 2 r_L  (n=2),  |beta| - 2 r_L  (n=3),
                       with alpha = 0 required.
    """
    if r_l < 0:
        raise ValueError("conjugate pair count must be >= 0")
    weight = alpha.weight + beta.weight
    if kind.is_torus:
        if alpha:
            raise TorusPrescribedOrbit("torus asymptotics cannot be prescribed (alpha must be 0)")
        if kind.dimension == 2:
            r = 2 * beta.size - 1 - 2 * r_l
        else:
            r = beta.size - 2 * r_l
    elif kind.dimension == 2:
        r = 2 * beta.size + kind.epsilon * weight - 1 - 2 * r_l
    else:
        r = beta.size - alpha.size + kind.epsilon * weight - 2 * r_l
    if r < 0:
        raise NegativeDimension(
            f"no non-negative real-point count for {kind.value}, alpha={alpha}, beta={beta}, r_L={r_l}"
        )
    return r


def fredholm_index(
    kind: LagrangianKind,
    n: int,
    punctures: int,
    k: int,
    *,
    real: bool = False,
    points: int = 0,
    pair_points: int = 0,
    prescribed: int = 0,
) -> int:
    """Fredholm index of the universal-moduli projection for rational curves in T*L.

    ``punctures`` and ``k`` count punctures and their total multiplicity (per
    curve for the complex problem, per conjugate pair for the real one);
    ``points`` are point conditions (real points in the real problem),
    ``pair_points`` conjugate point pairs (real problem only) and
    ``prescribed`` the punctures with prescribed asymptotics.
    """
    if kind.dimension != n:
        raise ValueError(f"{kind} has dimension {kind.dimension}, not {n}")
    if not real and pair_points:
        raise ValueError("pair_points only enters the real index")
    c = n - 1
    if real:
        constraint = c * points + 2 * c * pair_points + 2 * c * prescribed
        if kind.is_sphere:
            return 2 * c * k + 2 * punctures - 1 - constraint
        if kind.is_projective:
            return c * k + 2 * punctures - 1 - constraint
        return 2 * punctures + n - 3 - c * points - 2 * c * pair_points - c * prescribed
    constraint = 2 * c * points + 2 * c * prescribed
    if kind.is_sphere:
        return 2 * c * k + 2 * punctures - 2 - constraint
    if kind.is_projective:
        return c * k + 2 * punctures - 2 - constraint
    return 2 * punctures + 2 * n - 6 - 2 * c * points - c * prescribed

"""Assembly of the invariants chi^d_r from trees, F-values and relative counts.

For each decorated tree the contribution is

    sign * assignments * multiplicity * F(alpha-, beta+) * prod(relative factors)

where F is the cotangent invariant of the root component (keyed by the
root-edge profiles toward the minus and plus parts) and each odd vertex
contributes a relative count on the ruled surface (degree 4 over the plane,
degree 2 over the 2-quadric) or, over the 3-quadric, a sum of ruled-3-fold
counts over bidegree splittings of its degree.

The sign is (-1)^(#even vertices + 1) for the surface geometries and +1 for
the 3-quadric.  Missing table values abort the computation with the
offending tree in the message; a partial sum is never reported.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .contact import ContactVector, GeometryKind, LagrangianKind, genus_smooth
from .cotangent import FInvariantEngine, FKey, builtin_f_engine
from .errors import InadmissiblePair, UnknownInvariant, UnresolvableFKey
from .relative import (
    RelativeInvariantTable,
    RelativeKey,
    RuledSurfaceClass,
    builtin_relative_table,
    n_three,
    n_three_required_pairs,
)
from .trees import (
    TreeFamily,
    TreeWithCount,
    canonical_form,
    enumerate_trees,
    multiplicity,
)

__all__ = [
    "LedgerRow",
    "ChiResult",
    "ChiPolynomial",
    "chi",
    "chi_polynomial",
    "admissible_real_counts",
    "check_congruence",
    "check_sign_law",
    "lower_bound_report",
    "CongruenceReport",
    "SignReport",
    "LowerBoundReport",
]

_FAMILY = {
    GeometryKind.PROJECTIVE_PLANE: TreeFamily.PROJECTIVE,
    GeometryKind.ELLIPSOID_QUADRIC2: TreeFamily.TWO_SPHERICAL,
    GeometryKind.ELLIPSOID_QUADRIC3: TreeFamily.THREE_SPHERICAL,
}
_SURFACE_DEGREE = {
    GeometryKind.PROJECTIVE_PLANE: 4,
    GeometryKind.ELLIPSOID_QUADRIC2: 2,
}


def _json_int(value: int):
    """Exactness-preserving JSON value: decimal string beyond 64-bit range."""
    return value if -(2**63) <= value < 2**63 else str(value)


@dataclass(frozen=True)
class LedgerRow:
    tree: str
    assignment_count: int
    multiplicity: int
    sign: int
    f_value: int
    relative_factors: tuple[int, ...]
    contribution: int

    def to_json_dict(self) -> dict:
        return {
            "tree": self.tree,
            "assignment_count": self.assignment_count,
            "multiplicity": _json_int(self.multiplicity),
            "sign": self.sign,
            "f_value": self.f_value,
            "relative_factors": [_json_int(x) for x in self.relative_factors],
            "contribution": _json_int(self.contribution),
        }


@dataclass(frozen=True)
class ChiResult:
    geometry: GeometryKind
    d: int
    r: int
    value: int
    ledger: tuple[LedgerRow, ...]

    def to_json_dict(self) -> dict:
        return {
            "geometry": self.geometry.value,
            "d": self.d,
            "r": self.r,
            "chi": _json_int(self.value),
            "ledger": [row.to_json_dict() for row in self.ledger],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))


def admissible_real_counts(geometry: GeometryKind, d: int) -> list[int]:
    """Real-point counts r for which chi(geometry, d, r) is defined."""
    if d < 1:
        raise InadmissiblePair("degree must be >= 1")
    if geometry is GeometryKind.ELLIPSOID_QUADRIC3:
        if d % 2:
            return []
        top = 3 * d // 2
        # r = 0 is excluded: the 3-dimensional invariant needs a real point
        return [r for r in range(1, top + 1) if (top - r) % 2 == 0]
    total = (3 if geometry is GeometryKind.PROJECTIVE_PLANE else 4) * d - 1
    return [r for r in range(0, total + 1) if (total - r) % 2 == 0]


def _check_admissible(geometry: GeometryKind, d: int, r: int) -> None:
    if d < 1 or r not in admissible_real_counts(geometry, d):
        raise InadmissiblePair(f"({geometry.value}, d={d}, r={r}) is not an admissible pair")


def _surface_factors(
    geometry: GeometryKind, twc: TreeWithCount, table: RelativeInvariantTable
) -> list[int]:
    tree = twc.tree
    n = _SURFACE_DEGREE[geometry]
    factors = []
    root_adjacent = set(tree.root_adjacent())
    for v in tree.odd_vertices():
        profile = tree.profile(v)
        surface = RuledSurfaceClass(n, tree.g(v), tree.k_s(v))
        if v in root_adjacent and tree.is_plus(v):
            k_root = tree.root_edge_multiplicity(v)
            alpha = ContactVector.e(k_root)
            beta = profile - alpha
        else:
            alpha = ContactVector.zero()
            beta = profile
        factors.append(table.n_sigma(RelativeKey(surface, alpha, beta)))
    return factors


def _threefold_factors(twc: TreeWithCount, table: RelativeInvariantTable) -> list[int]:
    tree = twc.tree
    factors = []
    for v in tree.odd_vertices():
        plus = tree.is_plus(v)
        k_s = tree.k_s(v)
        contact = ContactVector.e(k_s)
        alpha, beta = (contact, ContactVector.zero()) if plus else (ContactVector.zero(), contact)
        total = 0
        for a in range(tree.g(v) + 1):
            b = tree.g(v) - a
            # a bidegree term only counts when the vertex's point pairs make
            # both the quadric projection and the ruled-surface curve rigid
            if tree.f_size(v) == n_three_required_pairs(a, b, plus):
                total += n_three(a, b, k_s, alpha, beta, table)
        factors.append(total)
    return factors


def chi(
    geometry: GeometryKind,
    d: int,
    r: int,
    relative_table: RelativeInvariantTable | None = None,
    f_engine: FInvariantEngine | None = None,
) -> ChiResult:
    """The invariant chi^d_r with its full contribution ledger."""
    _check_admissible(geometry, d, r)
    table = relative_table or builtin_relative_table()
    engine = f_engine or builtin_f_engine()
    family = _FAMILY[geometry]
    kind: LagrangianKind = geometry.lagrangian

    rows: list[LedgerRow] = []
    total = 0
    for cls in enumerate_trees(family, d, r):
        for twc in cls.variants:
            tree = twc.tree
            label = canonical_form(tree).decode()
            alpha_minus, beta_plus = tree.root_profiles()
            try:
                f_value = engine.value(FKey(kind, alpha_minus, beta_plus))
                if geometry is GeometryKind.ELLIPSOID_QUADRIC3:
                    factors = _threefold_factors(twc, table)
                else:
                    factors = _surface_factors(geometry, twc, table)
            except (UnknownInvariant, UnresolvableFKey) as exc:
                raise type(exc)(f"{exc} [required by tree {label}]") from exc
            mult = multiplicity(tree)
            sign = tree.sign_factor()
            contribution = sign * twc.assignment_count * mult * f_value
            for factor in factors:
                contribution *= factor
            rows.append(
                LedgerRow(
                    tree=label,
                    assignment_count=twc.assignment_count,
                    multiplicity=mult,
                    sign=sign,
                    f_value=f_value,
                    relative_factors=tuple(factors),
                    contribution=contribution,
                )
            )
            total += contribution
    return ChiResult(geometry=geometry, d=d, r=r, value=total, ledger=tuple(rows))


@dataclass(frozen=True)
class ChiPolynomial:
    """Coefficients r -> chi^d_r; entries whose table dependencies are out of
    range are reported as unavailable instead of being dropped."""

    geometry: GeometryKind
    d: int
    coefficients: dict[int, int]
    unavailable: dict[int, str] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "geometry": self.geometry.value,
            "d": self.d,
            "coefficients": {str(r): _json_int(v) for r, v in sorted(self.coefficients.items())},
            "unavailable": {str(r): msg for r, msg in sorted(self.unavailable.items())},
        }


def chi_polynomial(
    geometry: GeometryKind,
    d: int,
    r_max: int,
    relative_table: RelativeInvariantTable | None = None,
    f_engine: FInvariantEngine | None = None,
) -> ChiPolynomial:
    coefficients: dict[int, int] = {}
    unavailable: dict[int, str] = {}
    for r in admissible_real_counts(geometry, d):
        if r > r_max:
            break
        try:
            coefficients[r] = chi(geometry, d, r, relative_table, f_engine).value
        except (UnknownInvariant, UnresolvableFKey) as exc:
            unavailable[r] = str(exc)
    return ChiPolynomial(geometry=geometry, d=d, coefficients=coefficients, unavailable=unavailable)


# ---------------------------------------------------------------------------
# congruences and sign laws


@dataclass(frozen=True)
class CongruenceClause:
    name: str
    applicable: bool
    modulus: int
    passed: bool


@dataclass(frozen=True)
class CongruenceReport:
    geometry: GeometryKind
    d: int
    r: int
    value: int
    clauses: tuple[CongruenceClause, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses if c.applicable)


def _clause(name: str, applicable: bool, modulus: int, value: int) -> CongruenceClause:
    return CongruenceClause(
        name=name,
        applicable=applicable,
        modulus=modulus,
        passed=(not applicable) or value % modulus == 0,
    )


def check_congruence(geometry: GeometryKind, d: int, r: int, value: int) -> CongruenceReport:
    """Divisibility constraints on chi^d_r by powers of two.

    The clauses encode: for the plane, the gap 2^(r_X - r - 1) when
    r + 1 < r_X, the stronger 2^(r_X - r) when r matches d + 1 mod 4, and
    64 | chi when r + 1 < d; for the 2-quadric, 2^(2d - r - 1) when
    r < 2d - 1, the stronger 2^(2d - r) when r matches 2d + 1 mod 4, and
    16 | chi at r = 2d - 3; for the 3-quadric, 2^(3(d - 2r)/4) when
    6r + 1 <= 3d.
    """
    clauses: list[CongruenceClause] = []
    if geometry is GeometryKind.PROJECTIVE_PLANE:
        r_x = (3 * d - 1 - r) // 2
        clauses.append(_clause("pair-gap", r + 1 < r_x, 1 << max(r_x - r - 1, 0), value))
        aligned = r < r_x and (r - (d + 1)) % 4 == 0
        clauses.append(_clause("pair-gap-aligned", aligned, 1 << max(r_x - r, 0), value))
        clauses.append(_clause("plane-64", r + 1 < d, 64, value))
    elif geometry is GeometryKind.ELLIPSOID_QUADRIC2:
        g = genus_smooth(geometry, d)
        clauses.append(_clause("pair-gap", r < 2 * d - 1, 1 << max(2 * d - r - 1, 0), value))
        aligned = r < 2 * d and (g - (r + 1) // 2) % 2 == 0 and (r + 1) % 2 == 0
        clauses.append(_clause("pair-gap-aligned", aligned, 1 << max(2 * d - r, 0), value))
        clauses.append(_clause("sixteen-at-top", r == 2 * d - 3 and d >= 2, 16, value))
    else:
        # admissible (d, r) pairs always make 3(d - 2r) a multiple of four
        applicable = 6 * r + 1 <= 3 * d and (3 * (d - 2 * r)) % 4 == 0
        power = 3 * (d - 2 * r) // 4 if applicable else 0
        clauses.append(_clause("three-quarter-gap", applicable, 1 << power, value))
    return CongruenceReport(geometry=geometry, d=d, r=r, value=value, clauses=tuple(clauses))


@dataclass(frozen=True)
class SignReport:
    geometry: GeometryKind
    d: int
    r: int
    value: int
    applicable: bool
    passed: bool
    description: str


def check_sign_law(geometry: GeometryKind, d: int, r: int, value: int) -> SignReport:
    """Sign of chi^d_r when at most one point is real.

    Plane and 2-quadric: (-1)^(smooth genus) * chi >= 0 for r <= 1.
    3-quadric: chi <= 0 for r = 1 when the Chern degree 3d is 2 mod 4.
    """
    if geometry is GeometryKind.ELLIPSOID_QUADRIC3:
        applicable = r == 1 and (3 * d) % 4 == 2
        return SignReport(
            geometry, d, r, value, applicable, (not applicable) or value <= 0,
            "chi <= 0 at one real point",
        )
    applicable = r <= 1
    g = genus_smooth(geometry, d)
    ok = (not applicable) or (-1) ** g * value >= 0
    return SignReport(geometry, d, r, value, applicable, ok, "(-1)^genus * chi >= 0")


@dataclass(frozen=True)
class LowerBoundReport:
    chi: ChiResult
    abs_lower_bound: int
    upper_bound: None = None
    note: str = "total complex count (upper bound) not computed"


def lower_bound_report(
    geometry: GeometryKind,
    d: int,
    r: int,
    relative_table: RelativeInvariantTable | None = None,
    f_engine: FInvariantEngine | None = None,
) -> LowerBoundReport:
    """|chi^d_r| as a lower bound for real rational interpolating curves."""
    result = chi(geometry, d, r, relative_table, f_engine)
    return LowerBoundReport(chi=result, abs_lower_bound=abs(result.value))

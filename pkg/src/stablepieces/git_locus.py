"""Semistable locus and nilpotent cones, at the level of piece sets.

A piece lies in the nilpotent cone of a twist-stable dominant weight
exactly when the support of its Weyl element meets the support of the
weight; the semistable locus is the (weight-independent) complement of
every regular cone, i.e. the pieces with w = e.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rootsys import RootSystemError, orbit_fundamental_weights, weight_predicates


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str = ""


def _require_nilcone_weight(ctx, lam):
    profile = weight_predicates(ctx.rs, ctx.sigma, lam)
    if not profile.dominant:
        raise RootSystemError(f"weight {lam} is not dominant")
    if not profile.sigma_stable:
        raise RootSystemError(f"weight {lam} is not stable under the automorphism")
    return profile


def nilcone_pieces(ctx, lam):
    """Pieces whose Weyl-element support meets the support of ``lam``."""
    profile = _require_nilcone_weight(ctx, lam)
    g = ctx.group
    return [p for p in ctx.pieces if g.support(p.w) & profile.support]


def semistable_pieces(ctx):
    """The pieces with identity Weyl element, one per subset of I."""
    e = ctx.group.identity
    return [p for p in ctx.pieces if p.w is e]


def common_nilcone(ctx):
    """Pieces lying in every nilpotent cone: full Weyl-element support."""
    g = ctx.group
    full = frozenset(ctx.rs.index_set)
    return [p for p in ctx.pieces if g.support(p.w) == full]


def ids(piece_list):
    return sorted(p.id for p in piece_list)


def verify_partition(ctx, weights):
    """For each regular twist-stable weight: its cone and the w = e pieces
    partition the enumeration, with a weight-independent complement."""
    results = []
    semi = set(ids(semistable_pieces(ctx)))
    all_ids = set(p.id for p in ctx.pieces)
    for lam in weights:
        profile = _require_nilcone_weight(ctx, lam)
        if not profile.regular:
            raise RootSystemError(f"weight {lam} is not regular")
        cone = set(ids(nilcone_pieces(ctx, lam)))
        ok = (cone | semi == all_ids) and not (cone & semi)
        results.append(
            CheckResult(
                name=f"partition[lambda={lam}]",
                passed=ok,
                details="" if ok else f"cone+semistable != all pieces for lambda={lam}",
            )
        )
        complement_ok = (all_ids - cone) == semi
        results.append(
            CheckResult(
                name=f"complement_independent[lambda={lam}]",
                passed=complement_ok,
                details="" if complement_ok else f"complement varies at lambda={lam}",
            )
        )
    return results


def verify_cone_lattice(ctx):
    """Union/intersection identities over the orbit indicator weights,
    plus monotonicity of cones in the weight support."""
    g = ctx.group
    e = g.identity
    samples = orbit_fundamental_weights(ctx.rs, ctx.sigma)
    cones = {lam: set(ids(nilcone_pieces(ctx, lam))) for lam in samples}

    union = set().union(*cones.values()) if cones else set()
    nonidentity = set(p.id for p in ctx.pieces if p.w is not e)
    results = [
        CheckResult(
            name="union_is_nonidentity_pieces",
            passed=union == nonidentity,
            details="" if union == nonidentity else "union over orbit weights mismatch",
        )
    ]

    # Minimal twist-stable supports are the index orbits, so the
    # intersection of all cones keeps exactly the pieces whose support
    # meets every orbit; with the identity automorphism that is full
    # support, i.e. the common cone.
    intersection = set.intersection(*cones.values()) if cones else set()
    orbits = ctx.sigma.orbits()
    expected = set(
        p.id for p in ctx.pieces
        if all(g.support(p.w) & set(orbit) for orbit in orbits)
    )
    results.append(
        CheckResult(
            name="intersection_matches_orbit_support",
            passed=intersection == expected,
            details="" if intersection == expected else "intersection oracle mismatch",
        )
    )
    if ctx.sigma.is_identity:
        common = set(ids(common_nilcone(ctx)))
        results.append(
            CheckResult(
                name="intersection_is_full_support_pieces",
                passed=intersection == common,
                details="" if intersection == common else "intersection oracle mismatch",
            )
        )

    mono_ok = True
    supports = {lam: weight_predicates(ctx.rs, ctx.sigma, lam).support for lam in samples}
    for lam in samples:
        for mu in samples:
            if supports[lam] <= supports[mu] and not cones[lam] <= cones[mu]:
                mono_ok = False
    results.append(
        CheckResult(
            name="cone_monotone_in_support",
            passed=mono_ok,
            details="" if mono_ok else "cone not monotone in weight support",
        )
    )
    return results


@dataclass
class LocusReport:
    type_label: str
    auto_spec: str
    semistable_ids: list
    nilcone_ids: dict  # weight string -> id list
    common_nilcone_ids: list
    checks: list = field(default_factory=list)

    def to_json_obj(self):
        return {
            "type": self.type_label,
            "automorphism": self.auto_spec,
            "semistable": self.semistable_ids,
            "nilcone": {key: value for key, value in sorted(self.nilcone_ids.items())},
            "common_nilcone": self.common_nilcone_ids,
            "checks": [
                {"name": c.name, "pass": c.passed} for c in self.checks
            ],
        }


def locus_report(ctx, weights=None):
    """Full locus summary; default weights are the orbit indicators."""
    if weights is None:
        weights = orbit_fundamental_weights(ctx.rs, ctx.sigma)
    checks = verify_cone_lattice(ctx)
    return LocusReport(
        type_label=ctx.rs.type_label,
        auto_spec=ctx.sigma.spec_string(),
        semistable_ids=ids(semistable_pieces(ctx)),
        nilcone_ids={str(lam): ids(nilcone_pieces(ctx, lam)) for lam in weights},
        common_nilcone_ids=ids(common_nilcone(ctx)),
        checks=checks,
    )

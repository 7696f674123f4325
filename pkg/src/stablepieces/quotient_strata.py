"""Torus-closure strata as the Coxeter fan, with the Weyl action.

Cones are pairs (J, coset representative in W^J); the group acts by left
translation of cosets.  Untwisted setting only: the stratum indexing of
the quotient matches the w = e pieces of the identity-automorphism
enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pieces import InternalConsistencyError, piece_id
from .rootsys import RootSystemError


@dataclass(eq=False)
class CoxeterCone:
    """The cone rep . C_J of the Coxeter fan, named by (J, rep in W^J)."""

    J: frozenset
    rep: object  # WeylElement

    @property
    def key(self):
        return (tuple(sorted(self.J)), self.rep.id)


@dataclass(frozen=True)
class QuotientStratum:
    J: tuple
    cone_count: int
    matched_piece_id: str


def enumerate_cones(group):
    """One cone per (J subset of I, minimal coset representative)."""
    rs = group.rs
    cones = []
    for mask in range(2 ** rs.rank):
        J = frozenset(i for i in rs.index_set if mask & (1 << (i - 1)))
        for rep in group.minimal_coset_reps(J):
            cones.append(CoxeterCone(J=J, rep=rep))
    return cones


def act(group, v, cone):
    """Left translation: (J, rep W_J) -> (J, v rep W_J)."""
    moved = group.multiply(v, cone.rep)
    return CoxeterCone(J=cone.J, rep=group.min_coset_rep(moved, cone.J))


def orbit_partition(group, cones):
    """Group the cones into Weyl orbits, keyed by sorted face type J."""
    by_key = {c.key: c for c in cones}
    seen = set()
    orbits = {}
    for cone in cones:
        if cone.key in seen:
            continue
        orbit = []
        frontier = [cone]
        seen.add(cone.key)
        while frontier:
            current = frontier.pop()
            orbit.append(current)
            for i in group.rs.index_set:
                image = act(group, group.simple(i), current)
                if image.key not in seen:
                    seen.add(image.key)
                    frontier.append(by_key[image.key])
        face_types = {tuple(sorted(c.J)) for c in orbit}
        if len(face_types) != 1:
            raise InternalConsistencyError(
                f"orbit mixes face types {sorted(face_types)}"
            )
        key = face_types.pop()
        if key in orbits:
            raise InternalConsistencyError(f"two orbits share face type {key}")
        orbits[key] = orbit
    return orbits


def quotient_strata(group):
    """One stratum per J: its cone count and the matching w = e piece id."""
    rs = group.rs
    strata = []
    for mask in range(2 ** rs.rank):
        J = frozenset(i for i in rs.index_set if mask & (1 << (i - 1)))
        count = len(group.minimal_coset_reps(J))
        strata.append(
            QuotientStratum(
                J=tuple(sorted(J)),
                cone_count=count,
                matched_piece_id=piece_id(J, group.identity),
            )
        )
    return strata


def strata_json_obj(group):
    return {
        "strata": [
            {"J": list(s.J), "cone_count": s.cone_count, "piece": s.matched_piece_id}
            for s in quotient_strata(group)
        ]
    }


def require_untwisted(sigma):
    if not sigma.is_identity:
        raise RootSystemError("quotient strata are only defined for the identity automorphism")

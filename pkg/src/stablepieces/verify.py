"""Named verification suites over small-rank configurations.

Every claim the library computes is re-checked here against an
independent route: Bruhat order against subword enumeration, cores
against subset enumeration, cone identities against finite weight
samples, orbit structure against breadth-first search, and the
rank-one matrix model against exact random sampling.
"""

from __future__ import annotations

import itertools
import random

from . import git_locus, pgl2_oracle, quotient_strata
from .git_locus import CheckResult
from .pieces import PieceContext
from .rootsys import (
    DEFAULT_GUARD,
    Weight,
    build_root_system,
    parse_automorphism_spec,
)
from .weyl import WeylGroup

# (type, automorphism) pairs exercised by `verify` when no type is given
DEFAULT_MATRIX = (
    ("A1", "id"),
    ("A2", "id"),
    ("A2", "1:2,2:1"),
    ("B2", "id"),
    ("G2", "id"),
    ("A3", "id"),
    ("A3", "1:3,2:2,3:1"),
    ("D4", "id"),
    ("D4", "1:1,2:2,3:4,4:3"),
    ("D4", "1:3,2:2,3:4,4:1"),
)

SUITE_NAMES = ("bruhat", "pieces", "git", "quotient", "pgl2")

# base check names per suite; a run may emit "<name>[...]" instances
SUITE_CHECKS = {
    "bruhat": ("bruhat_matches_subword_oracle",),
    "pieces": (
        "piece_count_identity",
        "openness",
        "closure_idempotence",
        "core_maximality",
        "identity_core",
    ),
    "git": (
        "partition",
        "complement_independent",
        "union_is_nonidentity_pieces",
        "intersection_matches_orbit_support",
        "intersection_is_full_support_pieces",
        "cone_monotone_in_support",
        "semistable_complement_closed",
    ),
    "quotient": (
        "orbit_count",
        "orbits_by_face_type",
        "cone_count_matches_pieces",
        "action_composition",
    ),
    "pgl2": (
        "conjugation_invariance",
        "classification_invariance",
        "nilpotent_iff_unstable",
        "unipotent_image",
        "swap_invariance",
        "swap_injectivity",
        "torus_matches_ambient",
    ),
}

# exhaustive-vs-sampled thresholds
EXHAUSTIVE_GROUP_LIMIT = 30
EXHAUSTIVE_PIECE_LIMIT = 30
CLOSURE_SAMPLE = 50
BRUHAT_SAMPLE = 200


def build_context(type_spec, auto_spec, guard=DEFAULT_GUARD):
    rs = build_root_system(type_spec, guard=guard)
    sigma = parse_automorphism_spec(rs, auto_spec)
    group = WeylGroup(rs, guard=guard)
    return PieceContext(group, sigma)


# -- Bruhat oracle -----------------------------------------------------------


def bruhat_leq_subword_oracle(group, x, y, word_cache=None):
    """Subword criterion by brute force: some subword of some reduced word
    of y is a reduced word of x."""
    if x.length > y.length:
        return False
    if x.length == 0:
        return True
    if word_cache is None:
        word_cache = {}
    words = word_cache.get(y.id)
    if words is None:
        words = group.all_reduced_words(y)
        word_cache[y.id] = words
    for word in words:
        for positions in itertools.combinations(range(len(word)), x.length):
            if group.element_from_word([word[k] for k in positions]) is x:
                return True
    return False


def check_bruhat(ctx):
    group = ctx.group
    cache = {}
    if group.size <= EXHAUSTIVE_GROUP_LIMIT:
        pairs = [(x, y) for x in group.elements for y in group.elements]
        mode = f"exhaustive on {len(pairs)} pairs"
    else:
        rng = random.Random(0xB247)
        short = [w for w in group.elements if w.length <= 6]
        pairs = [(rng.choice(short), rng.choice(short)) for _ in range(BRUHAT_SAMPLE)]
        mode = f"sampled {len(pairs)} pairs (length <= 6)"
    bad = [
        (x, y)
        for x, y in pairs
        if group.bruhat_leq(x, y) != bruhat_leq_subword_oracle(group, x, y, cache)
    ]
    return [
        CheckResult(
            name="bruhat_matches_subword_oracle",
            passed=not bad,
            details=mode if not bad else f"disagrees at {bad[0]!r}",
        )
    ]


# -- pieces ------------------------------------------------------------------


def check_pieces(ctx):
    group, sigma = ctx.group, ctx.sigma
    results = []

    expected = sum(
        group.size
        // len(group.parabolic_elements(sigma.subset_image(
            frozenset(i for i in ctx.rs.index_set if mask & (1 << (i - 1)))
        )))
        for mask in range(2 ** ctx.rs.rank)
    )
    distinct = len({p.id for p in ctx.pieces})
    count_ok = len(ctx.pieces) == expected == distinct
    results.append(
        CheckResult(
            name="piece_count_identity",
            passed=count_ok,
            details=f"{len(ctx.pieces)} pieces" if count_ok else f"got {len(ctx.pieces)}, expected {expected}",
        )
    )

    bad = ctx.verify_openness()
    results.append(
        CheckResult(
            name="openness",
            passed=not bad,
            details="no identity piece below a non-identity piece" if not bad else f"counterexamples {bad[:3]}",
        )
    )

    if len(ctx.pieces) <= EXHAUSTIVE_PIECE_LIMIT:
        sample = list(ctx.pieces)
        mode = "exhaustive"
    else:
        step_indices = sorted({k * len(ctx.pieces) // CLOSURE_SAMPLE for k in range(CLOSURE_SAMPLE)})
        sample = [ctx.pieces[k] for k in step_indices]
        mode = f"{len(sample)} sampled pieces"
    idem_bad = []
    for p in sample:
        closure_p = set(q.index for q in ctx.closure(p))
        for q in ctx.closure(p):
            if not set(r.index for r in ctx.closure(q)) <= closure_p:
                idem_bad.append((p.id, q.id))
    results.append(
        CheckResult(
            name="closure_idempotence",
            passed=not idem_bad,
            details=mode if not idem_bad else f"fails at {idem_bad[0]}",
        )
    )

    core_bad = []
    for p in ctx.pieces:
        J = sorted(p.J)
        for r in range(len(J) + 1):
            for K in itertools.combinations(J, r):
                K = frozenset(K)
                images = set()
                simple = True
                for k in K:
                    rid = p.w.perm[sigma.image(k) - 1]
                    if rid >= ctx.rs.rank:
                        simple = False
                        break
                    images.add(rid + 1)
                if simple and images == K and not K <= p.core:
                    core_bad.append((p.id, sorted(K)))
    results.append(
        CheckResult(
            name="core_maximality",
            passed=not core_bad,
            details="subset oracle agrees" if not core_bad else f"fails at {core_bad[0]}",
        )
    )

    if sigma.is_identity:
        e = group.identity
        id_core_bad = [
            p.id for p in ctx.pieces if p.w is e and p.core != p.J
        ]
        results.append(
            CheckResult(
                name="identity_core",
                passed=not id_core_bad,
                details="" if not id_core_bad else f"fails at {id_core_bad[0]}",
            )
        )
    return results


# -- git locus ---------------------------------------------------------------


def regular_stable_weights(rs, sigma, values=(1, 2)):
    """All regular sigma-stable weights with entries from ``values``:
    one free value per sigma-orbit."""
    orbits = sigma.orbits()
    weights = []
    for choice in itertools.product(values, repeat=len(orbits)):
        coeffs = [0] * rs.rank
        for orbit, value in zip(orbits, choice):
            for i in orbit:
                coeffs[i - 1] = value
        weights.append(Weight(tuple(coeffs)))
    return weights


def check_git(ctx):
    results = []
    results.extend(git_locus.verify_partition(ctx, regular_stable_weights(ctx.rs, ctx.sigma)))
    results.extend(git_locus.verify_cone_lattice(ctx))

    # the complement of the semistable set is closed: no closure of a
    # non-identity piece reaches an identity piece
    e = ctx.group.identity
    bad = []
    if len(ctx.pieces) <= 120:
        for q in ctx.pieces:
            if q.w is e:
                continue
            bad.extend((q.id, p.id) for p in ctx.closure(q) if p.w is e)
    else:
        bad.extend(
            (q.id, "") for q in ctx.pieces
            if q.w is not e and ctx.closure_leq(q.J, q.w, e)
        )
    results.append(
        CheckResult(
            name="semistable_complement_closed",
            passed=not bad,
            details="" if not bad else f"fails at {bad[0]}",
        )
    )
    return results


# -- quotient strata -----------------------------------------------------------


def check_quotient(ctx):
    group = ctx.group
    results = []
    cones = quotient_strata.enumerate_cones(group)
    orbits = quotient_strata.orbit_partition(group, cones)

    expected_orbits = 2 ** ctx.rs.rank
    results.append(
        CheckResult(
            name="orbit_count",
            passed=len(orbits) == expected_orbits,
            details=f"{len(orbits)} orbits",
        )
    )

    by_face = {}
    for cone in cones:
        by_face.setdefault(tuple(sorted(cone.J)), []).append(cone)
    face_ok = all(
        {c.key for c in orbits.get(face, [])} == {c.key for c in members}
        for face, members in by_face.items()
    )
    results.append(
        CheckResult(
            name="orbits_by_face_type",
            passed=face_ok,
            details="each orbit is a full face-type class" if face_ok else "orbit/face-type mismatch",
        )
    )

    results.append(
        CheckResult(
            name="cone_count_matches_pieces",
            passed=len(cones) == len(ctx.pieces),
            details=f"{len(cones)} cones vs {len(ctx.pieces)} pieces",
        )
    )

    if group.size <= EXHAUSTIVE_GROUP_LIMIT:
        us = vs = group.elements
        sample_cones = cones
        mode = "exhaustive"
    else:
        rng = random.Random(0xC0E)
        us = [rng.choice(group.elements) for _ in range(8)]
        vs = [rng.choice(group.elements) for _ in range(8)]
        sample_cones = [rng.choice(cones) for _ in range(12)]
        mode = "sampled"
    comp_bad = []
    for u in us:
        for v in vs:
            uv = group.multiply(u, v)
            for cone in sample_cones:
                lhs = quotient_strata.act(group, uv, cone)
                rhs = quotient_strata.act(group, u, quotient_strata.act(group, v, cone))
                if lhs.key != rhs.key:
                    comp_bad.append((u.id, v.id, cone.key))
    results.append(
        CheckResult(
            name="action_composition",
            passed=not comp_bad,
            details=mode if not comp_bad else f"fails at {comp_bad[0]}",
        )
    )
    return results


# -- pgl2 ----------------------------------------------------------------------


def check_pgl2(samples=200, seed=42):
    report = pgl2_oracle.oracle_report(samples, seed)
    return [
        CheckResult(
            name=c["name"],
            passed=c["pass"],
            details="" if c["pass"] else repr(c["counterexample"]),
        )
        for c in report["checks"]
    ]


# -- drivers -------------------------------------------------------------------


def run_suite(suite, ctx=None, samples=200, seed=42):
    if suite == "bruhat":
        return check_bruhat(ctx)
    if suite == "pieces":
        return check_pieces(ctx)
    if suite == "git":
        return check_git(ctx)
    if suite == "quotient":
        if not ctx.sigma.is_identity:
            return []
        return check_quotient(ctx)
    if suite == "pgl2":
        return check_pgl2(samples=samples, seed=seed)
    raise ValueError(f"unknown suite {suite!r}")


def run_configs(configs, suite="all", guard=DEFAULT_GUARD, samples=200, seed=42):
    """Run the requested suite(s) for each (type, automorphism) pair.

    Returns a list of (type, auto, CheckResult); pgl2 is model-level and
    runs once per invocation, not per configuration.
    """
    suites = list(SUITE_NAMES) if suite == "all" else [suite]
    out = []
    for type_spec, auto_spec in configs:
        ctx = build_context(type_spec, auto_spec, guard=guard)
        for name in suites:
            if name == "pgl2":
                continue
            for result in run_suite(name, ctx):
                out.append((type_spec, auto_spec, result))
    if "pgl2" in suites:
        for result in check_pgl2(samples=samples, seed=seed):
            out.append(("A1", "id", result))
    return out


def base_name(check_name):
    """Strip a parametrization suffix like ``[lambda=1,2]``."""
    return check_name.split("[", 1)[0]

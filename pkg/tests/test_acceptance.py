"""Acceptance suite: one test (and one printed pass/fail line) per criterion.

Run with ``pytest -v tests/test_acceptance.py`` (add ``-s`` to see the
per-criterion lines on success).
"""

import time

from conftest import get_context, get_group
from stablepieces import cli, git_locus, pgl2_oracle
from stablepieces import quotient_strata as qs
from stablepieces.verify import bruhat_leq_subword_oracle, regular_stable_weights

OPENNESS_CONFIGS = [
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
]


def report(number, description, elapsed, bound):
    status = "PASS"  # failures raise before reaching here
    print(f"ACCEPTANCE {number} {description}: {status} ({elapsed:.2f}s, bound {bound}s)")
    assert elapsed < bound


def test_criterion_1_piece_count_identities():
    start = time.perf_counter()
    expected = {"A1": 3, "A2": 13, "B2": 17, "G2": 25, "A3": 75}
    for type_spec, count in expected.items():
        ctx = get_context(type_spec)
        assert len(ctx.pieces) == count, type_spec
        g = ctx.group
        # the count is the sum over subsets of the coset-space sizes
        subsets = {frozenset(p.J) for p in ctx.pieces}
        assert len(subsets) == 2 ** ctx.rs.rank
        assert sum(g.size // len(g.parabolic_elements(J)) for J in subsets) == count
    report(1, "piece-count identities", time.perf_counter() - start, 1)


def test_criterion_2_bruhat_oracle_equivalence():
    start = time.perf_counter()
    for type_spec, pair_count in [("A2", 36), ("B2", 64), ("A3", 576)]:
        g = get_group(type_spec)
        cache = {}
        pairs = [(x, y) for x in g.elements for y in g.elements]
        assert len(pairs) == pair_count
        for x, y in pairs:
            assert g.bruhat_leq(x, y) == bruhat_leq_subword_oracle(g, x, y, cache)
    report(2, "Bruhat oracle equivalence", time.perf_counter() - start, 5)


def test_criterion_3_openness():
    start = time.perf_counter()
    for type_spec, auto_spec in OPENNESS_CONFIGS:
        assert get_context(type_spec, auto_spec).verify_openness() == [], (type_spec, auto_spec)
    report(3, "openness of the identity pieces", time.perf_counter() - start, 30)


def test_criterion_4_closure_idempotence():
    start = time.perf_counter()
    for type_spec in ["A2", "B2", "G2"]:
        ctx = get_context(type_spec)
        for p in ctx.pieces:
            closure_p = set(ctx.closure(p))
            for q in closure_p:
                assert set(ctx.closure(q)) <= closure_p
    for type_spec, auto_spec in [("A3", "id"), ("D4", "id")]:
        ctx = get_context(type_spec, auto_spec)
        n = len(ctx.pieces)
        sample = [ctx.pieces[k] for k in sorted({i * n // 50 for i in range(50)})]
        for p in sample:
            closure_p = set(ctx.closure(p))
            for q in closure_p:
                assert set(ctx.closure(q)) <= closure_p
    report(4, "closure idempotence", time.perf_counter() - start, 30)


def test_criterion_5_semistable_partition():
    start = time.perf_counter()
    configs = [c for c in OPENNESS_CONFIGS if c[0] in {"A2", "B2", "A3", "D4"}]
    for type_spec, auto_spec in configs:
        ctx = get_context(type_spec, auto_spec)
        weights = regular_stable_weights(ctx.rs, ctx.sigma)
        all_ids = {p.id for p in ctx.pieces}
        semistable = {p.id for p in git_locus.semistable_pieces(ctx)}
        complements = set()
        for lam in weights:
            cone = {p.id for p in git_locus.nilcone_pieces(ctx, lam)}
            assert cone | semistable == all_ids, (type_spec, auto_spec, str(lam))
            assert not cone & semistable
            complements.add(frozenset(all_ids - cone))
        assert complements == {frozenset(semistable)}  # weight-independent
    report(5, "semistable partition, weight-independent", time.perf_counter() - start, 10)


def test_criterion_6_nilcone_lattice_identities():
    start = time.perf_counter()
    from stablepieces.rootsys import orbit_fundamental_weights, weight_predicates

    for type_spec, auto_spec in OPENNESS_CONFIGS:
        ctx = get_context(type_spec, auto_spec)
        g = ctx.group
        weights = orbit_fundamental_weights(ctx.rs, ctx.sigma)
        cones = {lam: {p.id for p in git_locus.nilcone_pieces(ctx, lam)} for lam in weights}

        union = set().union(*cones.values())
        assert union == {p.id for p in ctx.pieces if p.w is not g.identity}

        # Twist-stable weights cannot isolate one index inside an orbit, so
        # the cone intersection keeps the pieces whose support meets every
        # orbit; with the identity twist that is exactly full support.
        intersection = set.intersection(*cones.values())
        orbits = ctx.sigma.orbits()
        assert intersection == {
            p.id for p in ctx.pieces
            if all(g.support(p.w) & set(orbit) for orbit in orbits)
        }
        if ctx.sigma.is_identity:
            assert intersection == {p.id for p in git_locus.common_nilcone(ctx)}

        supports = {lam: weight_predicates(ctx.rs, ctx.sigma, lam).support for lam in weights}
        for lam in weights:
            for mu in weights:
                if supports[lam] <= supports[mu]:
                    assert cones[lam] <= cones[mu]
    report(6, "nilcone lattice identities", time.perf_counter() - start, 5)


def test_criterion_7_quotient_strata():
    start = time.perf_counter()
    for type_spec in ["A1", "A2", "A3", "B2", "G2", "D4"]:
        g = get_group(type_spec)
        cones = qs.enumerate_cones(g)
        orbits = qs.orbit_partition(g, cones)
        assert len(orbits) == 2 ** g.rs.rank
        for face, members in orbits.items():
            assert {c.key for c in members} == {
                c.key for c in cones if tuple(sorted(c.J)) == face
            }
        assert len(cones) == len(get_context(type_spec).pieces)
    report(7, "quotient strata orbits", time.perf_counter() - start, 10)


def test_criterion_8_pgl2_oracle():
    start = time.perf_counter()
    report_obj = pgl2_oracle.verify_matrix_model(1000, 42)
    failures = [c for c in report_obj["checks"] if not c["pass"]]
    assert not failures, failures
    names = {c["name"] for c in report_obj["checks"]}
    assert {"conjugation_invariance", "nilpotent_iff_unstable", "unipotent_image"} <= names

    torus = pgl2_oracle.verify_torus_quotient(100, 42)
    failures = [c for c in torus["checks"] if not c["pass"]]
    assert not failures, failures
    assert {c["name"] for c in torus["checks"]} == {
        "swap_invariance", "swap_injectivity", "torus_matches_ambient"
    }
    report(8, "rank-one matrix oracle, seed 42", time.perf_counter() - start, 5)


def test_criterion_9_end_to_end(capsys):
    start = time.perf_counter()
    code = cli.main(["verify", "--suite", "all"])
    capsys.readouterr()
    assert code == 0
    report(9, "end-to-end verify over the full matrix", time.perf_counter() - start, 60)

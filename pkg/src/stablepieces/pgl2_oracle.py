"""Exact-rational model of the rank-one compactification.

Points are nonzero 2x2 rational matrices up to scale.  The three strata
(invertible / rank one with trace / rank one traceless) match the three
pieces of the A1 identity-automorphism enumeration, semistability is
non-nilpotency, and the quotient coordinates are [trace^2 : det].
"""

from __future__ import annotations

import random
from fractions import Fraction

PIECE_OPEN = "J={1};w=e"
PIECE_SEMISIMPLE_BOUNDARY = "J={};w=e"
PIECE_NILPOTENT_BOUNDARY = "J={};w=s1"


class OracleError(ValueError):
    """Invalid projective point or singular conjugating matrix."""


def _as_matrix(rows):
    m = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if len(m) != 2 or any(len(row) != 2 for row in m):
        raise OracleError("expected a 2x2 matrix")
    return m


class ProjMatrixPoint:
    """A nonzero 2x2 rational matrix up to scalar.

    The stored entries are canonical: the first nonzero entry in row-major
    order is normalized to 1, so equality and hashing are plain tuple
    comparisons.
    """

    __slots__ = ("entries",)

    def __init__(self, rows):
        m = _as_matrix(rows)
        scale = next((x for row in m for x in row if x != 0), None)
        if scale is None:
            raise OracleError("the zero matrix is not a projective point")
        self.entries = tuple(tuple(x / scale for x in row) for row in m)

    def __eq__(self, other):
        return isinstance(other, ProjMatrixPoint) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"ProjMatrixPoint({self.entries!r})"

    @property
    def trace(self):
        return self.entries[0][0] + self.entries[1][1]

    @property
    def det(self):
        (a, b), (c, d) = self.entries
        return a * d - b * c


class QuotientPoint:
    """A point [p : q] of the projective line over the rationals."""

    __slots__ = ("coords",)

    def __init__(self, p, q):
        p, q = Fraction(p), Fraction(q)
        scale = p if p != 0 else q
        if scale == 0:
            raise OracleError("[0 : 0] is not a projective point")
        self.coords = (p / scale, q / scale)

    def __eq__(self, other):
        return isinstance(other, QuotientPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        p, q = self.coords
        return f"[{p} : {q}]"


def classify_piece(point):
    """Piece id of a point: rank and trace decide the stratum."""
    if point.det != 0:
        return PIECE_OPEN
    if point.trace != 0:
        return PIECE_SEMISIMPLE_BOUNDARY
    return PIECE_NILPOTENT_BOUNDARY


def is_semistable(point):
    """Semistable iff not nilpotent, i.e. trace and det not both zero."""
    return not (point.trace == 0 and point.det == 0)


def quotient_point(point):
    """Invariant coordinates [trace^2 : det]; both degree-2 homogeneous,
    so the value is independent of the chosen representative."""
    if not is_semistable(point):
        raise OracleError("quotient coordinates are undefined on the nilpotent locus")
    return QuotientPoint(point.trace**2, point.det)


def conjugate(point, g):
    """The point g A g^{-1}, for an invertible rational 2x2 matrix g."""
    g = _as_matrix(g)
    (a, b), (c, d) = g
    det = a * d - b * c
    if det == 0:
        raise OracleError("conjugating matrix is singular")
    g_inv = ((d / det, -b / det), (-c / det, a / det))
    m = _mat_mul(_mat_mul(g, point.entries), g_inv)
    return ProjMatrixPoint(m)


def _mat_mul(x, y):
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


def diagonal_point(a, d):
    return ProjMatrixPoint(((a, 0), (0, d)))


def torus_quotient_map(a, d):
    """Quotient coordinates of the torus-closure point diag(a, d)."""
    a, d = Fraction(a), Fraction(d)
    if a == 0 and d == 0:
        raise OracleError("(0, 0) is not a torus-closure point")
    return QuotientPoint((a + d) ** 2, a * d)


def random_rational(rng):
    """A rational with numerator and denominator uniform in [-9, 9], den != 0."""
    num = rng.randint(-9, 9)
    den = 0
    while den == 0:
        den = rng.randint(-9, 9)
    return Fraction(num, den)


def random_invertible(rng):
    while True:
        g = tuple(tuple(random_rational(rng) for _ in range(2)) for _ in range(2))
        if g[0][0] * g[1][1] - g[0][1] * g[1][0] != 0:
            return g


def _check(results, name, failures):
    failures = list(failures)
    results.append(
        {
            "name": name,
            "pass": not failures,
            "counterexample": failures[0] if failures else None,
        }
    )


def verify_torus_quotient(sample_count, seed, pairwise_cap=100):
    """Swap-invariance, swap-injectivity and agreement with the ambient
    quotient on random torus points; deterministic for a fixed seed."""
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < sample_count:
        a, d = random_rational(rng), random_rational(rng)
        if a != 0 or d != 0:
            pairs.append((a, d))
    results = []

    _check(
        results,
        "swap_invariance",
        (
            {"a": str(a), "d": str(d)}
            for a, d in pairs
            if torus_quotient_map(a, d) != torus_quotient_map(d, a)
        ),
    )

    head = pairs[:pairwise_cap]
    failures = []
    for i, (a, d) in enumerate(head):
        for a2, d2 in head[i + 1:]:
            if torus_quotient_map(a, d) != torus_quotient_map(a2, d2):
                continue
            # same image: pairs must agree projectively, up to swap
            if _proj_pair_eq(a, d, a2, d2) or _proj_pair_eq(a, d, d2, a2):
                continue
            failures.append({"a": str(a), "d": str(d), "a2": str(a2), "d2": str(d2)})
    _check(results, "swap_injectivity", failures)

    failures = []
    for a, d in pairs:
        g = random_invertible(rng)
        moved = conjugate(diagonal_point(a, d), g)
        if not is_semistable(moved):
            continue  # a = d = 0 is excluded, so this never triggers
        if quotient_point(moved) != torus_quotient_map(a, d):
            failures.append({"a": str(a), "d": str(d), "g": repr(g)})
    _check(results, "torus_matches_ambient", failures)

    return {"samples": sample_count, "seed": seed, "checks": results}


def _proj_pair_eq(a, d, a2, d2):
    # cross-product test; valid because neither pair is (0, 0)
    return a * d2 == d * a2


def verify_matrix_model(sample_count, seed):
    """Conjugation invariance and the semistability criterion on random
    matrix points; deterministic for a fixed seed."""
    rng = random.Random(seed)
    results = []

    conj_failures = []
    classify_failures = []
    nilpotent_failures = []
    for _ in range(sample_count):
        rows = tuple(tuple(random_rational(rng) for _ in range(2)) for _ in range(2))
        if all(x == 0 for row in rows for x in row):
            continue
        point = ProjMatrixPoint(rows)
        g = random_invertible(rng)
        moved = conjugate(point, g)
        if classify_piece(moved) != classify_piece(point):
            classify_failures.append({"point": repr(point), "g": repr(g)})
        if is_semistable(point):
            if quotient_point(moved) != quotient_point(point):
                conj_failures.append({"point": repr(point), "g": repr(g)})
        nilpotent = point.trace == 0 and point.det == 0
        if is_semistable(point) == nilpotent:
            nilpotent_failures.append({"point": repr(point)})
        if is_semistable(point) != (classify_piece(point) != PIECE_NILPOTENT_BOUNDARY):
            nilpotent_failures.append({"point": repr(point)})
    _check(results, "conjugation_invariance", conj_failures)
    _check(results, "classification_invariance", classify_failures)
    _check(results, "nilpotent_iff_unstable", nilpotent_failures)

    unipotent = ProjMatrixPoint(((1, 1), (0, 1)))
    identity = ProjMatrixPoint(((1, 0), (0, 1)))
    image_ok = (
        quotient_point(unipotent) == quotient_point(identity) == QuotientPoint(4, 1)
    )
    _check(results, "unipotent_image", [] if image_ok else [{"got": repr(quotient_point(unipotent))}])

    return {"samples": sample_count, "seed": seed, "checks": results}


def oracle_report(sample_count, seed):
    """All model checks in one report, matching the CLI JSON schema."""
    matrix = verify_matrix_model(sample_count, seed)
    torus = verify_torus_quotient(sample_count, seed)
    return {
        "samples": sample_count,
        "seed": seed,
        "checks": matrix["checks"] + torus["checks"],
    }

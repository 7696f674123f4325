"""Finite root systems, diagram automorphisms, and integral weights.

Roots are integer coordinate vectors in the simple-root basis; all
arithmetic is exact integer arithmetic.  Simple-root indices are 1-based
everywhere in the public API (``I = {1, .., rank}``).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

Root = tuple  # integer coordinates in the simple-root basis

DEFAULT_GUARD = 2_000_000

_TYPE_RE = re.compile(r"^([A-G])([0-9]+)$")

# valid rank range per series letter
_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class RootSystemError(ValueError):
    """Invalid type specification, automorphism, or weight."""


class GuardExceededError(RootSystemError):
    """Requested group is larger than the configured size guard."""


def parse_type_spec(type_spec):
    """Parse a letter+rank label like ``"A3"`` into ``(letter, rank)``."""
    m = _TYPE_RE.match(type_spec.strip())
    if not m:
        raise RootSystemError(f"unknown type label {type_spec!r}")
    letter, rank = m.group(1), int(m.group(2))
    lo, hi = _RANK_RANGE[letter]
    if rank < lo or (hi is not None and rank > hi):
        raise RootSystemError(f"rank {rank} out of range for series {letter}")
    return letter, rank


def weyl_order(letter, n):
    """Order of the Weyl group of the given simple type."""
    if letter == "A":
        return math.factorial(n + 1)
    if letter in ("B", "C"):
        return 2**n * math.factorial(n)
    if letter == "D":
        return 2 ** (n - 1) * math.factorial(n)
    if letter == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    if letter == "F":
        return 1152
    if letter == "G":
        return 12
    raise RootSystemError(f"unknown series {letter!r}")


def cartan_matrix(letter, n):
    """Cartan matrix of the simple type, rows/columns in Bourbaki order."""
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if letter in ("A", "B", "C", "F"):
        edges = [(i, i + 1) for i in range(n - 1)]
    elif letter == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif letter == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
    elif letter == "G":
        edges = []
    else:  # pragma: no cover - parse_type_spec screens letters
        raise RootSystemError(f"unknown series {letter!r}")

    for i, j in edges:
        bond(i, j)
    if letter == "B":
        bond(n - 2, n - 1, -1, -2)  # last simple root short
    elif letter == "C":
        bond(n - 2, n - 1, -2, -1)  # last simple root long
    elif letter == "F":
        bond(1, 2, -1, -2)
    elif letter == "G":
        bond(0, 1, -1, -3)
    return tuple(tuple(row) for row in c)


@dataclass(eq=False)
class RootSystem:
    """A finite root system with its full (height-ordered) root table.

    The table lists the positive roots first, graded by height with
    lexicographic tie-break that puts the simple roots in index order;
    entry ``positive_count + k`` is the negative of entry ``k``.
    """

    type_label: str
    rank: int
    cartan: tuple
    roots: tuple
    positive_count: int
    _index: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        if not self._index:
            self._index = {beta: r for r, beta in enumerate(self.roots)}

    @property
    def index_set(self):
        return range(1, self.rank + 1)

    def simple_root(self, i):
        return self.roots[i - 1]

    def root_id(self, beta):
        try:
            return self._index[tuple(beta)]
        except KeyError:
            raise RootSystemError(f"{beta!r} is not a root of {self.type_label}") from None

    def is_positive_id(self, r):
        return r < self.positive_count

    def negate_id(self, r):
        n = self.positive_count
        return r - n if r >= n else r + n

    def pairing(self, beta, i):
        """Coroot pairing of a root with the i-th simple coroot."""
        row = self.cartan[i - 1]
        return sum(row[j] * beta[j] for j in range(self.rank))

    def reflect(self, i, beta):
        """Simple reflection through the i-th simple root."""
        r = self.root_id(beta)  # validates beta
        beta = self.roots[r]
        k = self.pairing(beta, i)
        image = list(beta)
        image[i - 1] -= k
        return tuple(image)

    def simple_reflection_table(self, i):
        """The i-th simple reflection as a permutation of root-table ids."""
        return tuple(self.root_id(self.reflect(i, beta)) for beta in self.roots)


def build_root_system(type_spec, guard=DEFAULT_GUARD):
    """Construct the root system named by a letter+rank spec like ``"B3"``."""
    letter, rank = parse_type_spec(type_spec)
    if weyl_order(letter, rank) > guard:
        raise GuardExceededError(
            f"{letter}{rank}: Weyl group order {weyl_order(letter, rank)} exceeds guard {guard}"
        )
    cartan = cartan_matrix(letter, rank)

    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(1, rank + 1):
                k = sum(cartan[i - 1][j] * beta[j] for j in range(rank))
                image = list(beta)
                image[i - 1] -= k
                image = tuple(image)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt

    positives = sorted(
        (beta for beta in seen if all(b >= 0 for b in beta)),
        key=lambda beta: (sum(beta), tuple(-b for b in beta)),
    )
    table = tuple(positives) + tuple(tuple(-b for b in beta) for beta in positives)
    assert len(table) == len(seen), "root table closure lost roots"
    return RootSystem(
        type_label=f"{letter}{rank}",
        rank=rank,
        cartan=cartan,
        roots=table,
        positive_count=len(positives),
    )


@dataclass(frozen=True)
class DiagramAutomorphism:
    """A Cartan-preserving permutation of the simple-root indices."""

    perm: tuple  # perm[i-1] = image of i, 1-based
    order: int

    def image(self, i):
        return self.perm[i - 1]

    def subset_image(self, J):
        return frozenset(self.perm[j - 1] for j in J)

    def root_image(self, beta):
        image = [0] * len(beta)
        for i, b in enumerate(beta):
            image[self.perm[i] - 1] = b
        return tuple(image)

    @property
    def is_identity(self):
        return all(self.perm[i] == i + 1 for i in range(len(self.perm)))

    def orbits(self):
        """Orbits of the index permutation on I, sorted by least member."""
        seen = set()
        out = []
        for i in range(1, len(self.perm) + 1):
            if i in seen:
                continue
            orbit = []
            j = i
            while j not in seen:
                seen.add(j)
                orbit.append(j)
                j = self.perm[j - 1]
            out.append(tuple(orbit))
        return out

    def spec_string(self):
        if self.is_identity:
            return "id"
        return ",".join(f"{i + 1}:{img}" for i, img in enumerate(self.perm))


def _perm_order(perm):
    order = 1
    n = len(perm)
    current = list(perm)
    while any(current[i] != i + 1 for i in range(n)):
        current = [perm[c - 1] for c in current]
        order += 1
    return order


def make_automorphism(rs, perm):
    """Validate a permutation of I as a diagram automorphism of ``rs``."""
    perm = tuple(perm)
    if sorted(perm) != list(range(1, rs.rank + 1)):
        raise RootSystemError(f"{perm!r} is not a permutation of 1..{rs.rank}")
    for i in rs.index_set:
        for j in rs.index_set:
            if rs.cartan[perm[i - 1] - 1][perm[j - 1] - 1] != rs.cartan[i - 1][j - 1]:
                raise RootSystemError(
                    f"permutation {perm!r} does not preserve the {rs.type_label} Cartan matrix"
                )
    return DiagramAutomorphism(perm=perm, order=_perm_order(perm))


def parse_automorphism_spec(rs, auto_spec):
    """Parse ``"id"`` or a mapping list like ``"1:3,2:2,3:1"``."""
    spec = auto_spec.strip()
    if spec == "id":
        return make_automorphism(rs, range(1, rs.rank + 1))
    mapping = {}
    for item in spec.split(","):
        parts = item.split(":")
        if len(parts) != 2:
            raise RootSystemError(f"bad automorphism entry {item!r}")
        try:
            i, img = int(parts[0]), int(parts[1])
        except ValueError:
            raise RootSystemError(f"bad automorphism entry {item!r}") from None
        if i in mapping:
            raise RootSystemError(f"duplicate index {i} in automorphism spec")
        mapping[i] = img
    if sorted(mapping) != list(rs.index_set):
        raise RootSystemError(f"automorphism spec must map every index 1..{rs.rank} exactly once")
    return make_automorphism(rs, [mapping[i] for i in rs.index_set])


@dataclass(frozen=True)
class Weight:
    """An integral weight, coordinates in the fundamental-weight basis."""

    coeffs: tuple

    def __str__(self):
        return ",".join(str(a) for a in self.coeffs)


@dataclass(frozen=True)
class WeightProfile:
    dominant: bool
    regular: bool
    sigma_stable: bool
    support: frozenset


def weight_predicates(rs, sigma, lam):
    """Dominance, regularity, twist-stability and support of a weight."""
    coeffs = lam.coeffs
    if len(coeffs) != rs.rank:
        raise RootSystemError(f"weight has {len(coeffs)} coefficients, expected {rs.rank}")
    return WeightProfile(
        dominant=all(a >= 0 for a in coeffs),
        regular=all(a > 0 for a in coeffs),
        sigma_stable=all(coeffs[sigma.image(i) - 1] == coeffs[i - 1] for i in rs.index_set),
        support=frozenset(i for i in rs.index_set if coeffs[i - 1] != 0),
    )


def orbit_fundamental_weights(rs, sigma):
    """One indicator weight per sigma-orbit on I (sum of the orbit's
    fundamental weights); these are exactly the minimal-support
    sigma-stable dominant weights."""
    out = []
    for orbit in sigma.orbits():
        coeffs = tuple(1 if i in orbit else 0 for i in rs.index_set)
        out.append(Weight(coeffs))
    return out

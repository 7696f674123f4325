"""Twisted stable pieces: enumeration, cores, closures and the closure poset.

A piece is named by a pair (J subset of I, w in W^{sigma(J)}).  All piece
computations for one (root system, automorphism) pair live on a
:class:`PieceContext`; pieces from different contexts must not be mixed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rootsys import RootSystemError
from .weyl import element_string, parse_element_string


class InternalConsistencyError(RuntimeError):
    """A structural property that must hold by construction failed."""


def subset_string(J):
    return "{" + ",".join(str(j) for j in sorted(J)) + "}"


def piece_id(J, w):
    return f"J={subset_string(J)};w={element_string(w)}"


@dataclass(eq=False)
class TwistedPiece:
    """One stable piece, named by (J, w) with its cached core subset."""

    J: frozenset
    w: object  # WeylElement
    core: frozenset
    id: str
    index: int = field(default=-1)  # position in the ambient enumeration


def compute_core(group, sigma, J, w):
    """Largest K inside J with w(alpha_{sigma(k)}) simple and indexed in K.

    Decreasing fixpoint from K = J; the defining condition is closed under
    union, so the fixpoint limit is the unique maximum.
    """
    J = frozenset(J)
    if any(not group.rs.is_positive_id(w.perm[sigma.image(j) - 1]) for j in J):
        raise RootSystemError(f"{element_string(w)} is not minimal in its W_(sigma J) coset")
    K = J
    while True:
        K2 = frozenset(
            k for k in K
            if w.perm[sigma.image(k) - 1] < group.rs.rank and (w.perm[sigma.image(k) - 1] + 1) in K
        )
        if K2 == K:
            return K
        K = K2


class PieceContext:
    """Enumeration of all pieces for one (root system, automorphism) pair."""

    def __init__(self, group, sigma):
        self.group = group
        self.rs = group.rs
        self.sigma = sigma
        self.pieces = []
        self.by_id = {}
        for mask in range(2 ** self.rs.rank):
            J = frozenset(i for i in self.rs.index_set if mask & (1 << (i - 1)))
            sigma_J = sigma.subset_image(J)
            for w in group.minimal_coset_reps(sigma_J):
                p = TwistedPiece(
                    J=J,
                    w=w,
                    core=compute_core(group, sigma, J, w),
                    id=piece_id(J, w),
                    index=len(self.pieces),
                )
                self.pieces.append(p)
                self.by_id[p.id] = p
        self._conj_sets = {}
        self._closures = {}

    def __len__(self):
        return len(self.pieces)

    def piece(self, J, w):
        key = piece_id(J, w)
        try:
            return self.by_id[key]
        except KeyError:
            raise RootSystemError(f"no piece {key!r} in this enumeration") from None

    def parse_piece_id(self, text):
        text = text.strip()
        if not text.startswith("J={"):
            raise RootSystemError(f"bad piece id {text!r}")
        try:
            j_part, w_part = text.split(";", 1)
        except ValueError:
            raise RootSystemError(f"bad piece id {text!r}") from None
        inner = j_part[len("J={"):]
        if not inner.endswith("}") or not w_part.startswith("w="):
            raise RootSystemError(f"bad piece id {text!r}")
        inner = inner[:-1]
        J = frozenset(int(tok) for tok in inner.split(",") if tok)
        if any(j not in self.rs.index_set for j in J):
            raise RootSystemError(f"piece id {text!r} has indices outside I")
        w = parse_element_string(self.group, w_part[2:])
        return self.piece(J, w)

    # -- closure order -------------------------------------------------------

    def _twisted_conjugates(self, p):
        """All u w sigma(u)^{-1} for u in W_J, as element ids (sorted)."""
        ids = self._conj_sets.get(p.index)
        if ids is None:
            g = self.group
            seen = set()
            for u in g.parabolic_elements(p.J):
                x = g.multiply(g.multiply(u, p.w), g.inverse(g.twist(self.sigma, u)))
                seen.add(x.id)
            ids = sorted(seen, key=lambda i: (g.elements[i].length, i))
            self._conj_sets[p.index] = ids
        return ids

    def closure_leq(self, J, w, w_prime):
        """Whether (J', w') data w' lies below w in the (J, sigma)-closure
        order: some u in W_J has u w sigma(u)^{-1} Bruhat-below w'."""
        g = self.group
        p = self.piece(J, w)  # validates w in W^{sigma(J)}
        return any(
            g.bruhat_leq(g.elements[xid], w_prime) for xid in self._twisted_conjugates(p)
        )

    def closure(self, p):
        """All pieces contained in the closure of p, in enumeration order."""
        cached = self._closures.get(p.index)
        if cached is None:
            g = self.group
            conj = [g.elements[i] for i in self._twisted_conjugates(p)]
            cached = tuple(
                q for q in self.pieces
                if q.J <= p.J and any(g.bruhat_leq(x, q.w) for x in conj)
            )
            self._closures[p.index] = cached
        return cached

    def closure_poset(self):
        """Cover relations of the order q <= p iff q in closure(p)."""
        n = len(self.pieces)
        below = [0] * n  # bitmask of strictly-below piece indices
        for p in self.pieces:
            mask = 0
            for q in self.closure(p):
                if q.index != p.index:
                    mask |= 1 << q.index
            below[p.index] = mask
        for p in self.pieces:
            if any(below[q_index] & (1 << p.index) for q_index in _bits(below[p.index])):
                raise InternalConsistencyError(
                    f"closure relation not antisymmetric at {p.id}"
                )
        # q covers from below iff no r strictly between q and p
        edges = [
            (self.pieces[qi].id, p.id)
            for p in self.pieces
            for qi in _bits(below[p.index])
            if not any(below[ri] & (1 << qi) for ri in _bits(below[p.index]))
        ]
        edges.sort()
        nodes = sorted(p.id for p in self.pieces)
        return ClosurePoset(nodes=nodes, edges=edges, context=self)

    def verify_openness(self):
        """Pieces whose closure order would place an identity piece above a
        non-identity one; expected empty."""
        e = self.group.identity
        return [
            p.id for p in self.pieces
            if p.w is not e and self.closure_leq(p.J, p.w, e)
        ]


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(eq=False)
class ClosurePoset:
    nodes: list
    edges: list  # (lower_id, upper_id) cover pairs
    context: PieceContext

    def to_dot(self, name):
        lines = [f'digraph "{name}" {{']
        for node in self.nodes:
            lines.append(f'  "{node}";')
        for lo, hi in self.edges:
            lines.append(f'  "{lo}" -> "{hi}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_obj(self):
        return {"nodes": self.nodes, "covers": [[lo, hi] for lo, hi in self.edges]}

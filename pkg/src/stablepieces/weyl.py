"""The finite Weyl group as an interned table of root permutations.

Elements act on the root table of a :class:`~stablepieces.rootsys.RootSystem`
and are interned: one object per element, referenced by a dense id assigned
in (length, lexicographically-least reduced word) order.  Words are tuples
of 1-based simple indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rootsys import DEFAULT_GUARD, GuardExceededError, RootSystemError, parse_type_spec, weyl_order

# Bruhat memo is a dense flat table up to this group order, a dict above it.
DENSE_MEMO_LIMIT = 1024


@dataclass(eq=False)
class WeylElement:
    """A Weyl group element, stored as a permutation of root-table ids."""

    id: int
    perm: tuple
    length: int
    word: tuple  # lexicographically least reduced word
    group: "WeylGroup" = field(repr=False, default=None)

    def __repr__(self):
        return f"WeylElement({element_string(self)})"


def element_string(w):
    """Canonical string form: ``"e"`` or ``"s1.s2.s1"``."""
    if not w.word:
        return "e"
    return ".".join(f"s{i}" for i in w.word)


def parse_element_string(group, text):
    """Inverse of :func:`element_string`."""
    text = text.strip()
    if text == "e":
        return group.identity
    word = []
    for token in text.split("."):
        if not token.startswith("s"):
            raise RootSystemError(f"bad element token {token!r}")
        try:
            i = int(token[1:])
        except ValueError:
            raise RootSystemError(f"bad element token {token!r}") from None
        if not 1 <= i <= group.rs.rank:
            raise RootSystemError(f"simple index {i} out of range")
        word.append(i)
    return group.element_from_word(word)


class WeylGroup:
    """Complete multiplication table of the Weyl group of a root system."""

    def __init__(self, rs, guard=DEFAULT_GUARD):
        letter, rank = parse_type_spec(rs.type_label)
        expected = weyl_order(letter, rank)
        if expected > guard:
            raise GuardExceededError(
                f"{rs.type_label}: Weyl group order {expected} exceeds guard {guard}"
            )
        self.rs = rs
        n_roots = len(rs.roots)
        self._simple_perms = [None] + [rs.simple_reflection_table(i) for i in rs.index_set]

        identity = WeylElement(id=0, perm=tuple(range(n_roots)), length=0, word=(), group=self)
        self.elements = [identity]
        self._by_perm = {identity.perm: identity}
        # BFS by right multiplication; parents in id order and letters
        # ascending enumerate candidate words in lex order, so the first
        # word reaching an element is its lex-least reduced word.
        head = 0
        while head < len(self.elements):
            w = self.elements[head]
            head += 1
            for i in rs.index_set:
                s = self._simple_perms[i]
                perm = tuple(w.perm[s[r]] for r in range(n_roots))
                if perm not in self._by_perm:
                    elt = WeylElement(
                        id=len(self.elements),
                        perm=perm,
                        length=w.length + 1,
                        word=w.word + (i,),
                        group=self,
                    )
                    self.elements.append(elt)
                    self._by_perm[perm] = elt

        if len(self.elements) != expected:
            raise RootSystemError(
                f"generated {len(self.elements)} elements, expected {expected}"
            )
        self.identity = identity
        self._inverse_ids = [None] * len(self.elements)
        self._twist_tables = {}
        size = len(self.elements)
        if size <= DENSE_MEMO_LIMIT:
            self._bruhat_memo = bytearray(size * size)  # 0 unknown, 1 true, 2 false
        else:
            self._bruhat_memo = {}

    @property
    def size(self):
        return len(self.elements)

    def simple(self, i):
        return self._by_perm[self._simple_perms[i]]

    def _check_member(self, w):
        if w.group is not self:
            raise RootSystemError("element belongs to a different group table")

    def multiply(self, a, b):
        self._check_member(a)
        self._check_member(b)
        perm = tuple(a.perm[r] for r in b.perm)
        return self._by_perm[perm]

    def inverse(self, a):
        self._check_member(a)
        if self._inverse_ids[a.id] is None:
            inv = [0] * len(a.perm)
            for r, image in enumerate(a.perm):
                inv[image] = r
            self._inverse_ids[a.id] = self._by_perm[tuple(inv)].id
        return self.elements[self._inverse_ids[a.id]]

    def apply(self, a, beta):
        self._check_member(a)
        return self.rs.roots[a.perm[self.rs.root_id(beta)]]

    def element_from_word(self, word):
        w = self.identity
        for i in word:
            w = self.multiply(w, self.simple(i))
        return w

    # -- descents and words ------------------------------------------------

    def right_descents(self, w):
        """Indices i with w(alpha_i) negative, i.e. l(w s_i) < l(w)."""
        pc = self.rs.positive_count
        return [i for i in self.rs.index_set if w.perm[i - 1] >= pc]

    def left_descents(self, w):
        return self.right_descents(self.inverse(w))

    def reduced_word(self, w):
        """The canonical reduced word (smallest left descent at each step)."""
        self._check_member(w)
        return w.word

    def support(self, w):
        """Simple indices occurring in any reduced word of w."""
        return frozenset(w.word)

    def all_reduced_words(self, w):
        """Every reduced word of w, by backtracking over left descents."""
        self._check_member(w)
        if w.length == 0:
            return [()]
        out = []
        for i in self.left_descents(w):
            rest = self.multiply(self.simple(i), w)
            out.extend((i,) + tail for tail in self.all_reduced_words(rest))
        return out

    # -- Bruhat order ------------------------------------------------------

    def bruhat_leq(self, x, y):
        """Strong Bruhat order, by the lifting-property recursion."""
        self._check_member(x)
        self._check_member(y)
        memo = self._bruhat_memo
        dense = not isinstance(memo, dict)
        size = len(self.elements)
        stack = [(x.id, y.id)]
        # iterative to keep long chains off the Python recursion limit
        while True:
            xid, yid = stack[-1]
            key = xid * size + yid if dense else (xid, yid)
            cached = memo[key] if dense else memo.get(key, 0)
            if cached:
                stack.pop()
                if not stack:
                    return cached == 1
                continue
            xe, ye = self.elements[xid], self.elements[yid]
            if xid == 0:
                result = 1
            elif xe.length > ye.length:
                result = 2
            else:
                i = ye.word[0]  # smallest left descent of y
                sy = self.multiply(self.simple(i), ye)
                sx = self.multiply(self.simple(i), xe)
                nxt = (sx.id, sy.id) if sx.length < xe.length else (xid, sy.id)
                nkey = nxt[0] * size + nxt[1] if dense else nxt
                ncached = memo[nkey] if dense else memo.get(nkey, 0)
                if not ncached:
                    stack.append(nxt)
                    continue
                result = ncached
            memo[key] = result
            stack.pop()
            if not stack:
                return result == 1

    # -- parabolic structure -----------------------------------------------

    def parabolic_elements(self, J):
        """All elements of the standard parabolic subgroup W_J."""
        J = sorted(J)
        out = [self.identity]
        seen = {self.identity.id}
        head = 0
        while head < len(out):
            w = out[head]
            head += 1
            for j in J:
                v = self.multiply(w, self.simple(j))
                if v.id not in seen:
                    seen.add(v.id)
                    out.append(v)
        return out

    def minimal_coset_reps(self, J):
        """Minimal-length representatives of W/W_J, ordered by element id."""
        pc = self.rs.positive_count
        J = list(J)
        return [w for w in self.elements if all(w.perm[j - 1] < pc for j in J)]

    def min_coset_rep(self, w, J):
        """The representative of w W_J lying in W^J."""
        pc = self.rs.positive_count
        J = sorted(J)
        while True:
            for j in J:
                if w.perm[j - 1] >= pc:
                    w = self.multiply(w, self.simple(j))
                    break
            else:
                return w

    # -- diagram twist -------------------------------------------------------

    def _twist_table(self, sigma):
        table = self._twist_tables.get(sigma.perm)
        if table is None:
            rs = self.rs
            root_perm = tuple(rs.root_id(sigma.root_image(beta)) for beta in rs.roots)
            inv_root_perm = [0] * len(root_perm)
            for r, image in enumerate(root_perm):
                inv_root_perm[image] = r
            table = []
            for w in self.elements:
                perm = tuple(root_perm[w.perm[inv_root_perm[r]]] for r in range(len(root_perm)))
                table.append(self._by_perm[perm].id)
            table = tuple(table)
            self._twist_tables[sigma.perm] = table
        return table

    def twist(self, sigma, w):
        """Image of w under the diagram automorphism (s_i -> s_{sigma(i)})."""
        self._check_member(w)
        return self.elements[self._twist_table(sigma)[w.id]]

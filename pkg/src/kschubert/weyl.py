"""Weyl group enumeration, Bruhat order, parabolic coset representatives."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .rootdata import RootSystem, Weight, root_system


class NotMinimalRep(ValueError):
    pass


@dataclass(frozen=True, repr=False)
class WeylElement:
    """Element of W stored by its action matrix on weight coordinates.

    Equality and hashing only look at ``matrix``; ``word`` is the
    lexicographically smallest reduced word (0-based letters).
    """

    matrix: tuple
    word: tuple = field(compare=False)
    length: int = field(compare=False)

    def __str__(self):
        return format_word(self.word)

    def __repr__(self):
        return f"<{format_word(self.word)}>"


def format_word(word) -> str:
    return " ".join(f"s{j + 1}" for j in word) if word else "e"


def parse_word(text: str) -> tuple:
    """Parse ``"s1 s2 s1"`` (or ``"1 2 1"``, ``"e"``, ``""``) into 0-based letters."""
    text = text.strip()
    if text in ("", "e"):
        return ()
    letters = []
    for tok in text.replace(",", " ").split():
        tok = tok.lower().lstrip("s")
        if not tok.isdigit() or int(tok) < 1:
            raise ValueError(f"bad letter {tok!r} in word {text!r}")
        letters.append(int(tok) - 1)
    return tuple(letters)


def parabolic(I, rank: int) -> tuple:
    """Normalize a subset of simple-root indices (sorted, deduplicated)."""
    out = tuple(sorted(set(int(i) for i in I)))
    for i in out:
        if not 0 <= i < rank:
            raise IndexError(f"simple root index {i} out of range for rank {rank}")
    return out


def _matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _matvec(a, v):
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in a)


class WeylGroup:
    """The finite Weyl group of a root system, fully tabulated.

    Elements are ordered by length, then by lexicographically smallest reduced
    word.  All tables are built once and never mutated afterwards.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        n = rs.rank
        self.rank = n
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        gens = []
        for j in range(n):
            alpha = rs.simple_roots[j]
            gens.append(
                tuple(
                    tuple(int(i == k) - (alpha[i] if k == j else 0) for k in range(n))
                    for i in range(n)
                )
            )
        self._gens = tuple(gens)

        seen = {ident: ()}
        layer = [ident]
        order = [ident]
        while layer:
            nxt = []
            for m in layer:
                w = seen[m]
                for j in range(n):
                    mj = _matmul(m, gens[j])
                    if mj not in seen:
                        seen[mj] = w + (j,)
                        nxt.append(mj)
            nxt.sort(key=lambda m: seen[m])
            order.extend(nxt)
            layer = nxt
        self.elements = [WeylElement(m, seen[m], len(seen[m])) for m in order]
        self.index = {w: i for i, w in enumerate(self.elements)}
        self._by_matrix = {w.matrix: w for w in self.elements}
        self.identity = self.elements[0]
        self.longest = self.elements[-1]
        self._check_lengths()

    def _check_lengths(self):
        pos = self.rs.positive_roots
        if len(pos) != self.longest.length:
            raise AssertionError("|positive roots| != length of w0")
        for w in self.elements:
            inv = sum(1 for b in pos if not self.rs.is_positive_root(_matvec(w.matrix, b)))
            if inv != w.length:
                raise AssertionError(f"length mismatch for {w}")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __reduce__(self):
        return (weyl_group, (self.rs,))

    # -- group arithmetic -------------------------------------------------

    def element(self, matrix) -> WeylElement:
        return self._by_matrix[tuple(tuple(r) for r in matrix)]

    def simple(self, j: int) -> WeylElement:
        return self._by_matrix[self._gens[j]]

    def from_word(self, word) -> WeylElement:
        if isinstance(word, str):
            word = parse_word(word)
        m = self.identity.matrix
        for j in word:
            if not 0 <= j < self.rank:
                raise IndexError(f"letter s{j + 1} out of range for rank {self.rank}")
            m = _matmul(m, self._gens[j])
        return self._by_matrix[m]

    def mul(self, u: WeylElement, w: WeylElement) -> WeylElement:
        return self._by_matrix[_matmul(u.matrix, w.matrix)]

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.from_word(tuple(reversed(w.word)))

    def act(self, w: WeylElement, lam: Weight) -> Weight:
        return _matvec(w.matrix, lam)

    def det(self, w: WeylElement) -> int:
        return -1 if w.length % 2 else 1

    def sends_negative(self, w: WeylElement, j: int) -> bool:
        """Whether ``w(alpha_j)`` is a negative root."""
        return not self.rs.is_positive_root(self.act(w, self.rs.simple_roots[j]))

    def right_descent(self, w: WeylElement, j: int) -> bool:
        return self.sends_negative(w, j)

    def left_descent(self, w: WeylElement, j: int) -> bool:
        return self.sends_negative(self.inverse(w), j)

    def reduced_words(self, w: WeylElement) -> list:
        """All reduced words of ``w`` (exponential; meant for small groups)."""
        if w.length == 0:
            return [()]
        out = []
        for j in range(self.rank):
            if self.right_descent(w, j):
                ws = self.mul(w, self.simple(j))
                out.extend(u + (j,) for u in self.reduced_words(ws))
        return sorted(out)

    # -- Bruhat order ------------------------------------------------------

    @cached_property
    def _below(self) -> list:
        # below(w s_j) = below(w) U below(w) s_j along the stored reduced word.
        below = [None] * len(self.elements)
        below[0] = frozenset([0])
        for k, w in enumerate(self.elements[1:], start=1):
            prefix = self.from_word(w.word[:-1])
            j = w.word[-1]
            base = below[self.index[prefix]]
            sj = self.simple(j)
            shifted = {self.index[self.mul(self.elements[i], sj)] for i in base}
            below[k] = frozenset(base | shifted)
        return below

    def bruhat_leq(self, u: WeylElement, w: WeylElement) -> bool:
        return self.index[u] in self._below[self.index[w]]

    def interval(self, v: WeylElement, w: WeylElement) -> list:
        return [u for u in self.elements if self.bruhat_leq(v, u) and self.bruhat_leq(u, w)]

    def lower_set(self, w: WeylElement) -> list:
        return [self.elements[i] for i in sorted(self._below[self.index[w]])]

    # -- parabolic pieces --------------------------------------------------

    def parabolic_subgroup(self, I) -> list:
        I = parabolic(I, self.rank)
        return [w for w in self.elements if set(w.word) <= set(I)]

    def min_coset_reps(self, I) -> list:
        """``W^I``: elements with ``l(w s_j) = l(w) + 1`` for all ``j`` in ``I``."""
        I = parabolic(I, self.rank)
        return [w for w in self.elements if not any(self.right_descent(w, j) for j in I)]

    def is_min_rep(self, w: WeylElement, I) -> bool:
        return not any(self.right_descent(w, j) for j in parabolic(I, self.rank))

    def mobius_WI(self, I, v: WeylElement, w: WeylElement) -> int:
        """Moebius function of the Bruhat order restricted to ``W^I``.

        Nonzero only when the whole interval ``[v, w]`` of ``W`` stays inside
        ``W^I``, in which case it is ``(-1)^(l(v) + l(w))``.
        """
        I = parabolic(I, self.rank)
        for x in (v, w):
            if not self.is_min_rep(x, I):
                raise NotMinimalRep(f"{x} is not a minimal coset representative for I={I}")
        if not self.bruhat_leq(v, w):
            return 0
        if all(self.is_min_rep(u, I) for u in self.interval(v, w)):
            return -1 if (v.length + w.length) % 2 else 1
        return 0

    def subsets(self) -> list:
        """All subsets of simple-root indices, by size then lexicographically."""
        idx = range(self.rank)
        return [c for k in range(self.rank + 1) for c in combinations(idx, k)]

    def partition_CI(self) -> dict:
        """``C^I = W^{D-I}`` minus the union of ``W^{D-J}`` over proper ``J < I``."""
        full = set(range(self.rank))
        reps = {I: set(self.min_coset_reps(full - set(I))) for I in self.subsets()}
        out = {}
        for I in self.subsets():
            smaller = set()
            for J in self.subsets():
                if set(J) < set(I):
                    smaller |= reps[J]
            out[I] = [w for w in self.elements if w in reps[I] and w not in smaller]
        return out

    def tag(self, w: WeylElement) -> tuple:
        """The unique ``I`` with ``w`` in ``C^I``."""
        return self._tags[w]

    @cached_property
    def _tags(self) -> dict:
        return {w: I for I, ws in self.partition_CI().items() for w in ws}


_GROUPS: dict = {}


def weyl_group(group) -> WeylGroup:
    """Cached :class:`WeylGroup` for a label, Cartan matrix or root system."""
    if isinstance(group, WeylGroup):
        return group
    rs = root_system(group)
    if rs.datum not in _GROUPS:
        _GROUPS[rs.datum] = WeylGroup(rs)
    return _GROUPS[rs.datum]


def enumerate_group(rs: RootSystem) -> list:
    return list(weyl_group(rs).elements)


def longest_element(rs: RootSystem) -> WeylElement:
    return weyl_group(rs).longest


def act_weight(w: WeylElement, lam: Weight) -> Weight:
    return _matvec(w.matrix, lam)

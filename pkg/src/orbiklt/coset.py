"""Todd-Coxeter coset enumeration for finitely presented groups.

Independent check on the closed-form group orders in
:mod:`orbiklt.orbibase`: the enumeration works purely with the defining
presentation, building the Schreier graph of the trivial subgroup with
a union-find over coset labels and collapsing it against the relators.
The final number of live cosets is the group order.

Words are tuples of nonzero integers: +k is generator k (1-based), -k
its inverse.
"""

from __future__ import annotations

from typing import Sequence

from . import linalg
from .errors import EnumerationOverflowError

Word = Sequence[int]

_UNSET = -1


def _symbols(word: Word, ngens: int) -> tuple[int, ...]:
    out = []
    for g in word:
        if g == 0 or abs(g) > ngens:
            raise ValueError(f"letter {g} outside generator range 1..{ngens}")
        out.append(2 * (abs(g) - 1) + (1 if g < 0 else 0))
    return tuple(out)


class _CosetGraph:
    def __init__(self, nsymbols: int):
        self.nsymbols = nsymbols
        self.labels: list[int] = []
        self.neighbors: list[list[int]] = []
        self.add_vertex()

    def add_vertex(self) -> int:
        c = len(self.labels)
        self.labels.append(c)
        self.neighbors.append([_UNSET] * self.nsymbols)
        return c

    def find(self, c: int) -> int:
        labels = self.labels
        root = c
        while labels[root] != root:
            root = labels[root]
        while labels[c] != root:
            labels[c], c = root, labels[c]
        return root

    def unify(self, c1: int, c2: int) -> None:
        pending = [(c1, c2)]
        while pending:
            c1, c2 = pending.pop()
            c1, c2 = self.find(c1), self.find(c2)
            if c1 == c2:
                continue
            if c1 > c2:
                c1, c2 = c2, c1
            self.labels[c2] = c1
            row1, row2 = self.neighbors[c1], self.neighbors[c2]
            for d in range(self.nsymbols):
                if row2[d] == _UNSET:
                    continue
                if row1[d] == _UNSET:
                    row1[d] = row2[d]
                else:
                    pending.append((row1[d], row2[d]))

    def follow(self, c: int, d: int) -> int:
        c = self.find(c)
        row = self.neighbors[c]
        if row[d] == _UNSET:
            row[d] = self.add_vertex()
            # the inverse edge of the fresh vertex
            self.neighbors[row[d]][d ^ 1] = c
        return self.find(row[d])

    def follow_word(self, c: int, symbols: Sequence[int]) -> int:
        for d in symbols:
            c = self.follow(c, d)
        return c

    def live_count(self) -> int:
        return sum(1 for i, l in enumerate(self.labels) if i == l)


def coset_enumeration(ngens: int, relators: Sequence[Word],
                      max_cosets: int = 200_000) -> int:
    """Order of <g_1..g_n | relators>, by enumerating trivial-subgroup cosets.

    Terminates whenever the group is finite (possibly after visiting
    more transient cosets than the order); raises
    EnumerationOverflowError once more than max_cosets labels exist,
    which for the presentations used here signals an infinite group or
    an insufficient bound.
    """
    graph = _CosetGraph(2 * ngens)
    rels = [_symbols(w, ngens) for w in relators]
    rels += [(2 * i, 2 * i + 1) for i in range(ngens)]
    rels += [(2 * i + 1, 2 * i) for i in range(ngens)]
    cursor = 0
    while cursor < len(graph.labels):
        if graph.find(cursor) == cursor:
            for rel in rels:
                graph.unify(graph.follow_word(cursor, rel), cursor)
        cursor += 1
        if len(graph.labels) > max_cosets:
            raise EnumerationOverflowError(
                f"more than {max_cosets} cosets created without closing")
    return graph.live_count()


def curve_relators(genus: int, mults: Sequence[int]) -> tuple[int, list[tuple[int, ...]]]:
    """Presentation data of a marked-curve group.

    Generators: a_1, b_1, ..., a_g, b_g (handles) then one loop per
    marked point. Relators: the product of the handle commutators and
    the loops, and each loop raised to its mark.
    """
    ngens = 2 * genus + len(mults)
    product: list[int] = []
    for i in range(genus):
        a, b = 2 * i + 1, 2 * i + 2
        product += [a, b, -a, -b]
    loops = [2 * genus + 1 + j for j in range(len(mults))]
    product += loops
    relators = [tuple(product)]
    relators += [tuple([g] * m) for g, m in zip(loops, mults)]
    return ngens, relators


def enumerated_curve_order(genus: int, mults: Sequence[int],
                           max_cosets: int = 200_000) -> int:
    """Group order of the marked-curve presentation by coset enumeration."""
    ngens, relators = curve_relators(genus, mults)
    if ngens == 0:
        return 1
    return coset_enumeration(ngens, relators, max_cosets)


def abelianization_free_rank(genus: int, mults: Sequence[int]) -> int:
    """Free rank of the abelianized marked-curve group.

    Abelianizing kills the commutators, so the relation matrix has one
    row summing the loop generators and one row m_j * loop_j per mark;
    the free rank is the generator count minus its exact rank.
    """
    ngens = 2 * genus + len(mults)
    if ngens == 0:
        return 0
    rows = [[0] * (2 * genus) + [1] * len(mults)]
    for j, m in enumerate(mults):
        row = [0] * ngens
        row[2 * genus + j] = m
        rows.append(row)
    return ngens - linalg.rank(rows)

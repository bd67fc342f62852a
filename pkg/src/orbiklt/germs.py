"""klt analysis of boundary germs on a smooth surface.

A germ here is a finite set of curve branches through the origin of a
smooth surface, each branch either smooth or a (p,q)-cusp (local
equation y^q = x^p with p, q >= 2 coprime; its multiplicity at the
origin is min(p, q)), each carrying an integer weight m >= 2, together
with the pairwise intersection multiplicities of the branches at the
origin. Weighting branch D_k by 1 - 1/m_k gives an integral pair, and
:func:`classify_germ` decides whether that pair is klt by matching the
configuration against the exhaustive catalogue of klt shapes; anything
off the catalogue is NotKlt.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import NonCoprimeError
from .exact import coeff


@dataclass(frozen=True)
class GermBranch:
    """One branch through the origin: smooth, or a (p,q)-cusp, with weight m."""

    mult: int
    cusp: tuple[int, int] | None = None     # stored with p < q; None = smooth

    def __post_init__(self):
        if self.mult < 2:
            raise ValueError(f"branch multiplicity must be >= 2, got {self.mult}")
        if self.cusp is not None:
            p, q = self.cusp
            if p < 2 or q < 2:
                raise ValueError(f"cusp exponents must be >= 2, got ({p}, {q})")
            if gcd(p, q) != 1:
                raise NonCoprimeError(f"cusp exponents must be coprime, got ({p}, {q})")
            if p > q:
                object.__setattr__(self, "cusp", (q, p))

    @property
    def smooth(self) -> bool:
        return self.cusp is None

    @property
    def origin_mult(self) -> int:
        """Multiplicity of the branch at the origin: 1 if smooth, min(p, q) else."""
        return 1 if self.cusp is None else self.cusp[0]


def smooth_branch(mult: int) -> GermBranch:
    return GermBranch(mult)


def cusp_branch(p: int, q: int, mult: int) -> GermBranch:
    return GermBranch(mult, (p, q))


def _branch_key(b: GermBranch):
    return (0 if b.smooth else 1, b.mult, b.cusp or (0, 0))


@dataclass(frozen=True)
class GermConfig:
    branches: tuple[GermBranch, ...]
    contacts: tuple[tuple[int, int, int], ...] = ()   # (i, j, t), i < j, complete

    def __post_init__(self):
        n = len(self.branches)
        seen = set()
        for i, j, t in self.contacts:
            if not (0 <= i < j < n):
                raise ValueError(f"bad contact pair ({i}, {j})")
            if t < 1:
                raise ValueError(f"contact order must be >= 1, got {t}")
            seen.add((i, j))
        missing = {(i, j) for i in range(n) for j in range(i + 1, n)} - seen
        if missing:
            raise ValueError(f"missing contact data for pairs {sorted(missing)}")

    @classmethod
    def make(cls, branches: Iterable[GermBranch],
             contacts: Mapping[tuple[int, int], int] | Iterable[Sequence[int]] | None = None,
             ) -> "GermConfig":
        """Build a configuration, filling omitted contacts generically.

        The generic intersection multiplicity of two distinct branches
        is the product of their origin multiplicities; omitted pairs
        default to it (1 for two smooth branches).
        """
        branches = tuple(branches)
        given: dict[tuple[int, int], int] = {}
        if contacts is not None:
            items = contacts.items() if isinstance(contacts, Mapping) else \
                ((tuple(c[:2]), c[2]) for c in contacts)
            for (i, j), t in items:
                given[(min(i, j), max(i, j))] = t
        full = []
        for i in range(len(branches)):
            for j in range(i + 1, len(branches)):
                default = branches[i].origin_mult * branches[j].origin_mult
                full.append((i, j, given.get((i, j), default)))
        return cls(branches, tuple(full))

    @cached_property
    def _contact_map(self) -> dict[tuple[int, int], int]:
        return {(i, j): t for i, j, t in self.contacts}

    def contact(self, i: int, j: int) -> int:
        if i == j:
            raise ValueError("contact is defined for distinct branches")
        return self._contact_map[(min(i, j), max(i, j))]


class GermKind(enum.IntEnum):
    EMPTY = 0
    SINGLE_SMOOTH = 1
    TANGENT_FAMILY = 2
    TRANSVERSAL_TRIPLE = 3
    TANGENT_PAIR_PLUS_TRANSVERSAL = 4
    SINGLE_CUSP = 5
    HIGHER_CUSP = 6
    CUSP_PLUS_SMOOTH_CONTACT2 = 7
    CUSP_PLUS_SMOOTH_CONTACT3 = 8
    NOT_KLT = 9


_KIND_LABELS = {
    GermKind.EMPTY: "Empty",
    GermKind.SINGLE_SMOOTH: "SingleSmooth",
    GermKind.TANGENT_FAMILY: "TangentFamily",
    GermKind.TRANSVERSAL_TRIPLE: "TransversalTriple",
    GermKind.TANGENT_PAIR_PLUS_TRANSVERSAL: "TangentPairPlusTransversal",
    GermKind.SINGLE_CUSP: "SingleCusp",
    GermKind.HIGHER_CUSP: "HigherCusp",
    GermKind.CUSP_PLUS_SMOOTH_CONTACT2: "CuspPlusSmoothContact2",
    GermKind.CUSP_PLUS_SMOOTH_CONTACT3: "CuspPlusSmoothContact3",
    GermKind.NOT_KLT: "NotKlt",
}


@dataclass(frozen=True, order=True)
class GermClass:
    kind: GermKind
    params: tuple[int, ...] = ()

    @property
    def label(self) -> str:
        return _KIND_LABELS[self.kind]

    def __str__(self) -> str:
        if not self.params:
            return self.label
        return f"{self.label}({', '.join(map(str, self.params))})"


NOT_KLT = GermClass(GermKind.NOT_KLT)


def blowup_discrepancy(g: GermConfig) -> Fraction:
    """Coefficient 1 - sum_k t_k (1 - 1/m_k) of the first exceptional curve.

    t_k is the origin multiplicity of branch k. A klt germ always has
    this coefficient > -1; in particular sum_k t_k <= 3.
    """
    return 1 - sum((b.origin_mult * coeff(b.mult) for b in g.branches), Fraction(0))


def tangent_family_klt(t: int, mults: Sequence[int]) -> bool:
    """klt test for r >= 1 smooth branches with uniform pairwise contact t.

    The pair is klt iff sum_k (1 - 1/m_k) < 1 + 1/t, read off from the
    deepest exceptional curve of the separating chain of t blow-ups.
    """
    if t < 1:
        raise ValueError(f"contact order must be >= 1, got {t}")
    if not mults:
        raise ValueError("need at least one branch")
    total = sum((coeff(m) for m in mults), Fraction(0))
    return total < 1 + Fraction(1, t)


def _canonical(g: GermConfig) -> tuple[tuple[GermBranch, ...], dict[tuple[int, int], int]]:
    order = sorted(range(len(g.branches)), key=lambda i: _branch_key(g.branches[i]))
    branches = tuple(g.branches[i] for i in order)
    contacts = {}
    for a in range(len(order)):
        for b in range(a + 1, len(order)):
            contacts[(a, b)] = g.contact(order[a], order[b])
    return branches, contacts


def classify_germ(g: GermConfig) -> GermClass:
    """Name the catalogue shape of the germ, or NotKlt.

    Branches are sorted canonically (smooth before cusps, then by
    weight, then by exponents) so the answer is independent of input
    order. The catalogue:

    * no branch, or one smooth branch: always klt;
    * r smooth branches with uniform contact t (r = 2 here; r = 3
      transversal is its own shape): klt iff sum(1 - 1/m) < 1 + 1/t;
    * three smooth transversal branches: klt iff 1/m1 + 1/m2 + 1/m3 > 1;
    * two smooth branches tangent to order p plus a transversal third:
      klt iff 1/m + 1/n + 1/(rp) > 1;
    * one (2,q)-cusp of weight m: klt iff 1/2 + 1/q + 1/m > 1;
    * one (3,4)- or (3,5)-cusp of weight 2;
    * a (2,q)-cusp of weight 2 plus a smooth branch meeting it with
      multiplicity 2 (weight free);
    * a (2,3)-cusp of weight 2 plus a smooth branch of weight 2 meeting
      it with multiplicity 3.

    Everything else (in particular any germ with four branches, two
    cusps, or a cusp of multiplicity >= 3 next to another branch) is
    NotKlt.
    """
    branches, contacts = _canonical(g)
    r = len(branches)

    if r == 0:
        return GermClass(GermKind.EMPTY)

    if r == 1:
        b = branches[0]
        if b.smooth:
            return GermClass(GermKind.SINGLE_SMOOTH, (b.mult,))
        p, q = b.cusp
        if p == 2:
            if Fraction(1, 2) + Fraction(1, q) + Fraction(1, b.mult) > 1:
                return GermClass(GermKind.SINGLE_CUSP, (p, q, b.mult))
            return NOT_KLT
        if (p, q) in ((3, 4), (3, 5)) and b.mult == 2:
            return GermClass(GermKind.HIGHER_CUSP, (p, q))
        return NOT_KLT

    if r == 2:
        b0, b1 = branches
        t = contacts[(0, 1)]
        if b0.smooth and b1.smooth:
            if tangent_family_klt(t, (b0.mult, b1.mult)):
                return GermClass(GermKind.TANGENT_FAMILY, (t, b0.mult, b1.mult))
            return NOT_KLT
        if b0.smooth and not b1.smooth:
            p, q = b1.cusp
            if p == 2 and b1.mult == 2:
                if t == 2:
                    return GermClass(GermKind.CUSP_PLUS_SMOOTH_CONTACT2, (q, b0.mult))
                if t == 3 and q == 3 and b0.mult == 2:
                    return GermClass(GermKind.CUSP_PLUS_SMOOTH_CONTACT3)
            return NOT_KLT
        return NOT_KLT     # two cusps: already t_1 + t_2 >= 4

    if r == 3 and all(b.smooth for b in branches):
        ts = [contacts[(0, 1)], contacts[(0, 2)], contacts[(1, 2)]]
        mults = [b.mult for b in branches]
        if ts == [1, 1, 1]:
            if sum(Fraction(1, m) for m in mults) > 1:
                return GermClass(GermKind.TRANSVERSAL_TRIPLE, tuple(mults))
            return NOT_KLT
        tangent = [k for k, t in enumerate(ts) if t >= 2]
        if len(tangent) == 1:
            pairs = [(0, 1), (0, 2), (1, 2)]
            i, j = pairs[tangent[0]]
            k = ({0, 1, 2} - {i, j}).pop()
            t = ts[tangent[0]]
            if (Fraction(1, mults[i]) + Fraction(1, mults[j])
                    + Fraction(1, t * mults[k]) > 1):
                m, n = sorted((mults[i], mults[j]))
                return GermClass(GermKind.TANGENT_PAIR_PLUS_TRANSVERSAL,
                                 (m, n, t, mults[k]))
        return NOT_KLT

    return NOT_KLT


def is_klt_germ(g: GermConfig) -> bool:
    return classify_germ(g) != NOT_KLT


@dataclass(frozen=True)
class CuspCover:
    """Cyclic cover of degree m ramified along a (p,q)-cusp.

    The covering germ is the hypersurface z^m = y^q - x^p, carrying no
    boundary; it is klt exactly when 1/p + 1/q + 1/m > 1, and the
    weighted cusp downstairs is klt under the same condition.
    """

    p: int
    q: int
    mult: int

    @property
    def equation(self) -> str:
        return f"z^{self.mult} = y^{self.q} - x^{self.p}"

    @property
    def klt(self) -> bool:
        return Fraction(1, self.p) + Fraction(1, self.q) + Fraction(1, self.mult) > 1


def etale_cover_over_cusp(p: int, q: int, mult: int) -> CuspCover:
    if p < 2 or q < 2 or mult < 2:
        raise ValueError(f"need p, q, m >= 2, got ({p}, {q}, {mult})")
    if gcd(p, q) != 1:
        raise NonCoprimeError(f"cusp exponents must be coprime, got ({p}, {q})")
    return CuspCover(p, q, mult)


@dataclass(frozen=True)
class TangentCoverSplit:
    """Pullback of a branch y = x^p under the cover (u, v) -> (u, v^m).

    The preimage v^m = u^p splits into d = gcd(m, p) irreducible
    components, each of type (p/d, m/d); the components are smooth in
    exactly the cases p = m = d, p = d != m, or m = d != p.
    """

    p: int
    mult: int
    d: int
    component_type: tuple[int, int]

    @property
    def components(self) -> int:
        return self.d

    @property
    def smooth(self) -> bool:
        p, m, d = self.p, self.mult, self.d
        return (p == m == d) or (p == d != m) or (m == d != p)


def cover_split_tangent(p: int, mult: int) -> TangentCoverSplit:
    if p < 2 or mult < 2:
        raise ValueError(f"need p, m >= 2, got ({p}, {mult})")
    d = gcd(mult, p)
    return TangentCoverSplit(p, mult, d, (p // d, mult // d))


def _branch_types(max_mult: int, max_cusp_exp: int) -> list[GermBranch]:
    types = [smooth_branch(m) for m in range(2, max_mult + 1)]
    for p in range(2, max_cusp_exp + 1):
        for q in range(p + 1, max_cusp_exp + 1):
            if gcd(p, q) == 1:
                types.extend(cusp_branch(p, q, m) for m in range(2, max_mult + 1))
    return types


def _ultrametric(prods: Sequence[int], ts: Sequence[int]) -> bool:
    """Strong triangle inequality on normalized pairwise contacts.

    For three plane branches the quantities t_ij / (t_i t_j) form an
    ultrametric of tangency depths: the two smallest must coincide.
    """
    normalized = sorted(Fraction(t, p) for t, p in zip(ts, prods))
    return normalized[0] == normalized[1]


def enumerate_germ_configs(max_mult: int, max_contact: int, max_cusp_exp: int,
                           max_branches: int = 3) -> Iterator[GermConfig]:
    """All realizable germ shapes within the bounds, up to branch order.

    Marked-point positions are not part of the data; a shape is the
    multiset of branch types plus the pairwise contacts. Contacts run
    from the generic value (product of origin multiplicities) up to
    max_contact; triples additionally satisfy the ultrametric
    realizability condition.
    """
    if min(max_mult, max_contact, max_cusp_exp) < 2:
        raise ValueError("enumeration bounds must be >= 2")
    types = _branch_types(max_mult, max_cusp_exp)

    yield GermConfig.make(())
    for b in types:
        yield GermConfig.make((b,))
    if max_branches < 2:
        return
    for b0, b1 in itertools.combinations_with_replacement(types, 2):
        tmin = b0.origin_mult * b1.origin_mult
        for t in range(tmin, max_contact + 1):
            yield GermConfig.make((b0, b1), {(0, 1): t})
    if max_branches < 3:
        return
    for triple in itertools.combinations_with_replacement(types, 3):
        prods = [triple[i].origin_mult * triple[j].origin_mult
                 for i, j in ((0, 1), (0, 2), (1, 2))]
        if any(p > max_contact for p in prods):
            continue
        ranges = [range(p, max_contact + 1) for p in prods]
        for ts in itertools.product(*ranges):
            if _ultrametric(prods, ts):
                yield GermConfig.make(
                    triple, {(0, 1): ts[0], (0, 2): ts[1], (1, 2): ts[2]})


def enumerate_klt_germs(max_mult: int, max_contact: int, max_cusp_exp: int,
                        max_branches: int = 3) -> list[GermClass]:
    """Sorted distinct catalogue classes of all klt germs within bounds."""
    found = set()
    for g in enumerate_germ_configs(max_mult, max_contact, max_cusp_exp, max_branches):
        cls = classify_germ(g)
        if cls != NOT_KLT:
            found.add(cls)
    return sorted(found)


def enumerate_tangent_families(branches: int, contact: int, max_mult: int,
                               ) -> list[tuple[int, ...]]:
    """klt weight tuples for `branches` smooth branches of uniform contact.

    Returns the sorted list of nondecreasing weight tuples m_1 <= ...
    <= m_r with all m_k <= max_mult passing the tangent-family test.
    """
    if branches < 1 or contact < 1 or max_mult < 2:
        raise ValueError("need branches >= 1, contact >= 1, max_mult >= 2")
    out = []
    for mults in itertools.combinations_with_replacement(
            range(2, max_mult + 1), branches):
        if tangent_family_klt(contact, mults):
            out.append(mults)
    return out

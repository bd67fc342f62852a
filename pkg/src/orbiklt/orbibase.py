"""Orbifold curves, orbifold bases of fibrations, and abelianity verdicts.

An orbifold curve is a smooth curve of genus g with finitely many
points marked by integer multiplicities >= 2; only the multiset of
multiplicities matters here. Its canonical degree 2g - 2 + sum(1 - 1/m)
drives everything: sign gives the trichotomy, negative degree gives a
finite group of computable order, degree zero the five flat shapes.

A fibration onto a curve is recorded by its scheme-theoretic fibers
over marked base points; the multiplicity the base point acquires is
the gcd over fiber components of (component multiplicity) x (boundary
multiplicity). The resulting marked base curve decides whether the
fibration is of general type and feeds the specialness test and the
final abelianity verdict.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import NotSpecialError
from .exact import coeff, gcd_list


@dataclass(frozen=True)
class OrbifoldCurve:
    genus: int
    mults: tuple[int, ...] = ()

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")
        for m in self.mults:
            if m < 2:
                raise ValueError(f"marked multiplicities must be >= 2, got {m}")
        object.__setattr__(self, "mults", tuple(sorted(self.mults)))


def curve_degree(c: OrbifoldCurve) -> Fraction:
    """Canonical degree 2g - 2 + sum_j (1 - 1/m_j), exactly."""
    return 2 * c.genus - 2 + sum((coeff(m) for m in c.mults), Fraction(0))


class Trichotomy(enum.Enum):
    HYPERBOLIC = "Hyperbolic"
    EUCLIDEAN = "Euclidean"
    SPHERICAL = "Spherical"


def trichotomy(c: OrbifoldCurve) -> Trichotomy:
    deg = curve_degree(c)
    if deg > 0:
        return Trichotomy.HYPERBOLIC
    if deg == 0:
        return Trichotomy.EUCLIDEAN
    return Trichotomy.SPHERICAL


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[str, ...]


def curve_presentation(c: OrbifoldCurve) -> Presentation:
    """Standard presentation of the marked-curve group.

    <a_1, b_1, ..., a_g, b_g, g_1, ..., g_r |
     [a_1,b_1]...[a_g,b_g] g_1...g_r = 1, g_j^{m_j} = 1>.
    """
    gens = []
    words = []
    for i in range(1, c.genus + 1):
        gens += [f"a{i}", f"b{i}"]
        words.append(f"a{i} b{i} a{i}^-1 b{i}^-1")
    loops = [f"g{j}" for j in range(1, len(c.mults) + 1)]
    gens += loops
    words += loops
    relators = [" ".join(words)] if words else []
    relators += [f"g{j + 1}^{m}" for j, m in enumerate(c.mults)]
    return Presentation(tuple(gens), tuple(relators))


@dataclass(frozen=True)
class CurveGroupInfo:
    degree: Fraction
    trichotomy: Trichotomy
    presentation: Presentation
    order: int | None            # None = infinite
    almost_abelian: bool
    rank: int | None             # None = not applicable (hyperbolic)
    bad_orbifold: bool


def curve_group(c: OrbifoldCurve) -> CurveGroupInfo:
    """Group-theoretic summary of the marked curve.

    Negative degree forces genus 0 with at most three marks and a
    finite group: order 2/|degree| for a triple (the finite rotation
    groups), and for r <= 2 marks the quotient of the presentation,
    which is cyclic of order gcd (the product relator kills a single
    loop, so one mark gives the trivial group). Genus-0 curves with one
    mark or two distinct marks carry no uniformizing structure and are
    flagged bad. Nonnegative degree means an infinite group: virtually
    Z^2 of rank 2 at degree zero, and containing a free group beyond.
    """
    deg = curve_degree(c)
    tri = trichotomy(c)
    r = len(c.mults)
    bad = c.genus == 0 and (r == 1 or (r == 2 and c.mults[0] != c.mults[1]))
    if tri is Trichotomy.SPHERICAL:
        if r <= 1:
            order = 1
        elif r == 2:
            order = gcd(c.mults[0], c.mults[1])
        else:
            ratio = Fraction(2) / (-deg)
            assert ratio.denominator == 1
            order = ratio.numerator
        rank = 0
    elif tri is Trichotomy.EUCLIDEAN:
        order, rank = None, 2
    else:
        order, rank = None, None
    return CurveGroupInfo(
        degree=deg,
        trichotomy=tri,
        presentation=curve_presentation(c),
        order=order,
        almost_abelian=tri is not Trichotomy.HYPERBOLIC,
        rank=rank,
        bad_orbifold=bad,
    )


def is_special_curve(c: OrbifoldCurve) -> bool:
    """Special means canonical degree <= 0 (no general-type geometry)."""
    return curve_degree(c) <= 0


@dataclass(frozen=True)
class FiberData:
    """One scheme-theoretic fiber: (fiber multiplicity, boundary multiplicity) pairs."""

    components: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.components:
            raise ValueError("a fiber needs at least one component")
        for m, orb in self.components:
            if m < 1:
                raise ValueError(f"fiber multiplicities must be >= 1, got {m}")
            if orb < 1:
                raise ValueError(f"boundary multiplicities must be >= 1, got {orb}")

    @classmethod
    def make(cls, components: Iterable[Sequence[int]]) -> "FiberData":
        return cls(tuple((m, orb) for m, orb in components))


@dataclass(frozen=True)
class FibrationData:
    base_genus: int
    fibers: tuple[tuple[str, FiberData], ...]    # sorted by point label

    def __post_init__(self):
        if self.base_genus < 0:
            raise ValueError(f"base genus must be >= 0, got {self.base_genus}")
        labels = [label for label, _ in self.fibers]
        if len(set(labels)) != len(labels):
            raise ValueError("marked base points must have distinct labels")
        object.__setattr__(self, "fibers", tuple(sorted(self.fibers)))

    @classmethod
    def make(cls, base_genus: int,
             fibers: Mapping[str, FiberData] | Iterable[tuple[str, FiberData]],
             ) -> "FibrationData":
        items = fibers.items() if isinstance(fibers, Mapping) else fibers
        return cls(base_genus, tuple(items))


def fiber_multiplicity(fd: FiberData) -> int:
    """gcd over components of fiber multiplicity times boundary multiplicity.

    A reduced component without boundary structure contributes 1 and
    kills the mark.
    """
    return gcd_list([m * orb for m, orb in fd.components])


def orbifold_base(f: FibrationData) -> OrbifoldCurve:
    """Base curve marked with the fiber multiplicities that exceed 1."""
    marks = [fiber_multiplicity(fd) for _, fd in f.fibers]
    return OrbifoldCurve(f.base_genus, tuple(m for m in marks if m >= 2))


def is_general_type_fibration(f: FibrationData) -> bool:
    """True iff the orbifold base has positive canonical degree."""
    return curve_degree(orbifold_base(f)) > 0


class KodairaDim(enum.Enum):
    MINUS_INFINITY = "-inf"
    ZERO = "0"
    ONE = "1"
    TWO = "2"

    @classmethod
    def parse(cls, text: str) -> "KodairaDim":
        for member in cls:
            if member.value == text:
                return member
        raise ValueError(f"kappa must be one of -inf, 0, 1, 2; got {text!r}")


def is_special_orbisurface(kappa: KodairaDim,
                           fibrations: Sequence[FibrationData]) -> bool:
    """Specialness relative to the supplied fibration list.

    True iff kappa < 2 and none of the given fibrations onto curves is
    of general type. The verdict is only as complete as the list: this
    module never searches for fibrations itself.
    """
    if kappa is KodairaDim.TWO:
        return False
    return not any(is_general_type_fibration(f) for f in fibrations)


class MinimalModelOutcome(enum.Enum):
    NEF = "Nef"
    MORI_FIBER_OVER_CURVE = "MoriFiberOverCurve"
    DEL_PEZZO = "DelPezzo"


@dataclass(frozen=True)
class SurfaceSummary:
    """User-supplied minimal-model data for a two-dimensional pair."""

    kappa: KodairaDim
    outcome: MinimalModelOutcome
    mori_base: OrbifoldCurve | None = None
    kappa1_fibration: tuple[FibrationData, OrbifoldCurve] | None = None

    def __post_init__(self):
        nef = self.outcome is MinimalModelOutcome.NEF
        if self.kappa is KodairaDim.MINUS_INFINITY and nef:
            raise ValueError("kappa = -inf is incompatible with a nef minimal model")
        if self.kappa in (KodairaDim.ZERO, KodairaDim.ONE) and not nef:
            raise ValueError(
                f"kappa = {self.kappa.value} forces a nef minimal model, "
                f"got {self.outcome.value}")
        if (self.outcome is MinimalModelOutcome.MORI_FIBER_OVER_CURVE
                and self.mori_base is None):
            raise ValueError("a Mori fiber space over a curve needs its base curve")


class VerdictBranch(enum.Enum):
    KAPPA1_FIBRATION = "Kappa1Fibration"
    MORI_FIBER = "MoriFiber"
    KAPPA0_NEF = "Kappa0Nef"
    DEL_PEZZO = "DelPezzo"


@dataclass(frozen=True)
class Verdict:
    branch: VerdictBranch
    almost_abelian: bool
    finite: bool
    rank_bound: int
    even_rank: bool
    rationale: tuple[str, ...]

    @property
    def conclusion(self) -> str:
        return "finite" if self.finite else "almost abelian"


_SURJECTION = ("the contraction to the minimal model induces a surjection on "
               "fundamental groups, so the conclusion descends to the original pair")


def abelianity_verdict(summary: SurfaceSummary, special: bool) -> Verdict:
    """Decide the fundamental-group verdict for a special two-dimensional pair.

    The group of a special pair of dimension two is almost abelian of
    even rank at most 4; the branch taken mirrors the minimal-model
    case split. Inputs with special = False or kappa = 2 get no verdict.
    """
    if not special:
        raise NotSpecialError("verdict requires a special pair; got special = false")
    if summary.kappa is KodairaDim.TWO:
        raise NotSpecialError("a pair of log general type (kappa = 2) is never special")

    if summary.kappa is KodairaDim.ONE:
        rationale = [
            "log canonical dimension 1: the total space fibres over a curve and "
            "the general fibre has numerically trivial canonical degree, so its "
            "group is almost abelian of rank at most 2",
        ]
        if summary.kappa1_fibration is not None:
            fibration, fiber = summary.kappa1_fibration
            if curve_degree(fiber) != 0:
                raise ValueError(
                    "the general fibre of a kappa = 1 fibration must have "
                    f"canonical degree 0, got {curve_degree(fiber)}")
            base = orbifold_base(fibration)
            if curve_degree(base) > 0:
                raise ValueError(
                    "the orbifold base of the supplied fibration has positive "
                    "degree, contradicting specialness")
            rationale.append(
                f"the orbifold base (genus {base.genus}, marks "
                f"{list(base.mults)}) is special, so its group is almost abelian")
        else:
            rationale.append(
                "the orbifold base curve is special because the pair is, "
                "so its group is almost abelian")
        rationale.append(
            "extensions coming from fibrations of compact Kähler pairs "
            "preserve almost abelianity")
        return Verdict(VerdictBranch.KAPPA1_FIBRATION, True, False, 4, True,
                       tuple(rationale))

    if summary.outcome is MinimalModelOutcome.MORI_FIBER_OVER_CURVE:
        base = summary.mori_base
        if base is not None and curve_degree(base) > 0:
            raise ValueError(
                "the base of the Mori fibration is of general type, "
                "contradicting specialness")
        rationale = [
            "the minimal model fibres over a curve with rational fibres of "
            "negative canonical degree, whose groups are finite",
            "the base orbifold curve is special, so its group is almost abelian",
            "extensions coming from fibrations of compact Kähler pairs "
            "preserve almost abelianity",
        ]
        return Verdict(VerdictBranch.MORI_FIBER, True, False, 4, True,
                       tuple(rationale))

    if summary.kappa is KodairaDim.ZERO:
        rationale = [
            "the log canonical class of the minimal model is nef with kappa = 0, "
            "hence semi-ample and torsion: the pair is Ricci-flat",
            "a compact Ricci-flat orbifold has an almost abelian fundamental "
            "group of even rank at most twice its complex dimension",
            _SURJECTION,
        ]
        return Verdict(VerdictBranch.KAPPA0_NEF, True, False, 4, True,
                       tuple(rationale))

    if summary.outcome is MinimalModelOutcome.DEL_PEZZO:
        rationale = [
            "the minimal model is log Del Pezzo: its anti-log-canonical class "
            "is ample and carries a metric of positive Ricci curvature",
            "positive Ricci curvature forces a finite fundamental group (rank 0)",
            _SURJECTION,
        ]
        return Verdict(VerdictBranch.DEL_PEZZO, True, True, 0, True,
                       tuple(rationale))

    raise ValueError("inconsistent surface summary: no verdict branch applies")

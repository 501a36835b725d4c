"""Registry of scannable checks and their integer slack formulas.

Every chain and identity the scanner evaluates depends only on the
quadruple (N(x), N(y), N(x+y), N(x-y)) together with |2|.  Scans scale all
magnitudes by one global denominator D so each quadruple becomes four
integers (ax, ay, ap, am); each link's slack is then a pure integer whose
true rational value is slack/den, with a per-link denominator determined
by den_kind:

    DEN_PLAIN -> D          DEN_TWO_N -> two_n * D     DEN_TWO_D -> two_d * D

where two_n/two_d is |2| in lowest terms.  Slack is oriented so that an
inequality link holds iff slack >= 0, an equality link iff slack == 0, and
a link is tight iff slack == 0.  Both kernel implementations and the
unscaled fallback below must agree on these orientations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

DEN_PLAIN = 0
DEN_TWO_N = 1
DEN_TWO_D = 2

REL_INEQ = 0
REL_EQ = 1


class LinkDef(NamedTuple):
    label: str
    relation: str  # "<=", ">=", or "=" as written in the chain
    rel_kind: int  # REL_INEQ / REL_EQ
    den_kind: int  # DEN_PLAIN / DEN_TWO_N / DEN_TWO_D


CHECKS: dict[str, tuple[LinkDef, ...]] = {
    # ||r|-|s|| = |r-s|+|r+s|-(|r|+|s|) <= min{|r-s|,|r+s|}  (dim-1 scalars)
    "tarski": (
        LinkDef("identity", "=", REL_EQ, DEN_PLAIN),
        LinkDef("min_bound", "<=", REL_INEQ, DEN_PLAIN),
    ),
    # |N(x)-N(y)| <= N(x+y)+N(x-y)-(N(x)+N(y)) <= min{N(x-y),N(x+y)}
    "mal1": (
        LinkDef("lower", "<=", REL_INEQ, DEN_PLAIN),
        LinkDef("upper", "<=", REL_INEQ, DEN_PLAIN),
    ),
    # |N(x)-N(y)| <= N(x)+N(y)-|N(x+y)-N(x-y)|
    "mal2": (LinkDef("bound", "<=", REL_INEQ, DEN_PLAIN),),
    # |N(x)-N(y)| <= (2/|2|)max{N(x-y),N(x+y)}-(N(x)+N(y))
    #             <= (2/|2|)max{N(x),N(y)}-(N(x)+N(y))
    "na1": (
        LinkDef("lower", "<=", REL_INEQ, DEN_TWO_N),
        LinkDef("upper", "<=", REL_INEQ, DEN_TWO_N),
    ),
    # |N(x)-N(y)| <= N(x)+N(y)-(2/|2|)|N(x+y)-N(x-y)|
    "na2": (LinkDef("bound", "<=", REL_INEQ, DEN_TWO_N),),
    # the eight supporting relations, in proof order
    "steps": (
        LinkDef("twice_max", "=", REL_EQ, DEN_PLAIN),
        LinkDef("combo_max_vs_x", ">=", REL_INEQ, DEN_TWO_D),
        LinkDef("combo_max_vs_y", ">=", REL_INEQ, DEN_TWO_D),
        LinkDef("combo_max_vs_max", ">=", REL_INEQ, DEN_TWO_D),
        LinkDef("twice_min", "=", REL_EQ, DEN_PLAIN),
        LinkDef("combo_gap_vs_x", "<=", REL_INEQ, DEN_TWO_D),
        LinkDef("combo_gap_vs_y", "<=", REL_INEQ, DEN_TWO_D),
        LinkDef("combo_gap_vs_min", "<=", REL_INEQ, DEN_TWO_D),
    ),
    # |2| = 1 only: the first ultrametric chain collapses to equalities
    "collapse": (
        LinkDef("combo_max_equality", "=", REL_EQ, DEN_PLAIN),
        LinkDef("lower_tight", "=", REL_EQ, DEN_PLAIN),
        LinkDef("upper_tight", "=", REL_EQ, DEN_PLAIN),
    ),
}

#: Canonical evaluation / reporting order of the checks.
CHECK_ORDER = ("tarski", "mal1", "mal2", "na1", "na2", "steps", "collapse")

#: Checks valid only on the Archimedean baseline backend.
ARCH_CHECKS = frozenset({"tarski", "mal1", "mal2"})
#: Checks valid only on non-Archimedean backends with |2| != 0.
ULTRA_CHECKS = frozenset({"na1", "na2", "steps", "collapse"})
#: Checks that skip pairs containing a zero vector (out of precondition).
PRECONDITION_CHECKS = frozenset({"mal1", "mal2"})

CHECK_BIT = {check: 1 << i for i, check in enumerate(CHECK_ORDER)}


def link_key(check: str, index: int) -> str:
    return f"{check}:{CHECKS[check][index].label}"


def ordered_links(checks) -> list[tuple[str, int]]:
    """(check, link_index) pairs in canonical order for the enabled set."""
    out = []
    for check in CHECK_ORDER:
        if check in checks:
            out.extend((check, i) for i in range(len(CHECKS[check])))
    return out


def scaled_slacks(check: str, ax: int, ay: int, ap: int, am: int,
                  two_n: int, two_d: int) -> list[int]:
    """Integer slacks of every link of one check, given scaled norms.

    The reference formulas; the kernels inline the same arithmetic.
    """
    gap = ax - ay if ax >= ay else ay - ax
    s1 = ax + ay
    combo_max = ap if ap >= am else am
    combo_gap = ap - am if ap >= am else am - ap
    norm_max = ax if ax >= ay else ay
    norm_min = ay if ax >= ay else ax
    if check == "tarski":
        return [(am + ap - s1) - gap, s1 - combo_max]
    if check == "mal1":
        return [(ap + am - s1) - gap, s1 - combo_max]
    if check == "mal2":
        return [(s1 - combo_gap) - gap]
    if check == "na1":
        return [
            2 * two_d * combo_max - two_n * (s1 + gap),
            2 * two_d * (norm_max - combo_max),
        ]
    if check == "na2":
        return [two_n * (s1 - gap) - 2 * two_d * combo_gap]
    if check == "steps":
        return [
            2 * norm_max - (s1 + gap),
            two_d * combo_max - two_n * ax,
            two_d * combo_max - two_n * ay,
            two_d * combo_max - two_n * norm_max,
            2 * norm_min - (s1 - gap),
            two_n * ax - two_d * combo_gap,
            two_n * ay - two_d * combo_gap,
            two_n * norm_min - two_d * combo_gap,
        ]
    if check == "collapse":
        return [
            norm_max - combo_max,
            2 * combo_max - (s1 + gap),
            2 * (norm_max - combo_max),
        ]
    raise KeyError(check)


def fraction_slacks(check: str, nx: Fraction, ny: Fraction,
                    nplus: Fraction, nminus: Fraction,
                    two: Fraction) -> list[Fraction]:
    """Rational slacks computed directly from Fraction norms.

    ``scaled_slacks`` is generic arithmetic, so feeding it the unscaled
    Fractions yields slack * den_kind_factor; dividing that factor back out
    gives the exact rational slack of each link.
    """
    raw = scaled_slacks(check, nx, ny, nplus, nminus,
                        two.numerator, two.denominator)
    dens = {
        DEN_PLAIN: Fraction(1),
        DEN_TWO_N: Fraction(two.numerator),
        DEN_TWO_D: Fraction(two.denominator),
    }
    return [
        Fraction(v) / dens[link.den_kind]
        for v, link in zip(raw, CHECKS[check])
    ]

"""Exact evaluation of the norm-difference inequality chains.

Scalar layer (ordinary absolute value on Q):

* ``tarski_min_bound`` --  ||r|-|s||  <=  min{|r-s|, |r+s|},
* ``tarski_gap``       --  the residual of the sharper identity
                           ||r|-|s|| = |r-s| + |r+s| - (|r|+|s|),
                           which is exactly 0 for every rational pair,
* ``tarski_complex_fails`` -- decides, by one rational squared comparison,
                           that the identity breaks for r = a, s = b*i.

Vector layer over a normed space (N = the norm):

* ``maligranda_chain1``  --  |N(x)-N(y)| <= N(x+y)+N(x-y)-(N(x)+N(y))
                                         <= min{N(x-y), N(x+y)},
* ``maligranda_chain2``  --  |N(x)-N(y)| <= N(x)+N(y)-|N(x+y)-N(x-y)|,
* ``na_chain1``          --  |N(x)-N(y)| <= (2/|2|)max{N(x-y),N(x+y)}-(N(x)+N(y))
                                         <= (2/|2|)max{N(x),N(y)}-(N(x)+N(y)),
* ``na_chain2``          --  |N(x)-N(y)| <= N(x)+N(y)-(2/|2|)|N(x+y)-N(x-y)|,
* ``proof_step_identities`` -- the eight exact relations the chains rest on,
* ``collapse_check``     --  when |2| = 1 the first chain collapses to
                             equalities and max{N(x+y),N(x-y)} = max{N(x),N(y)}.

Every side is an exact Fraction; a link is "tight" iff its two sides are
equal as rationals.  The 2/|2| coefficient is the exact quotient of the
integer 2 by the field magnitude |2|.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotUnitTwo, SpecMismatch
from .fields import as_fraction, two_magnitude
from .reports import (
    ChainReport,
    CollapseReport,
    Link,
    Side,
    Step,
    StepReport,
    fraction_str,
)
from .spaces import NormSpec, Vector, add, norm, sub


def _link(relation: str, lhs: Fraction, rhs: Fraction) -> Link:
    if relation == "<=":
        holds = lhs <= rhs
    elif relation == ">=":
        holds = lhs >= rhs
    elif relation == "=":
        holds = lhs == rhs
    else:
        raise ValueError(f"unknown relation {relation!r}")
    return Link(relation=relation, holds=holds, tight=lhs == rhs)


def _chain(chain_id, sides, relations, context) -> ChainReport:
    values = [v for _, v in sides]
    links = tuple(
        _link(rel, values[i], values[i + 1]) for i, rel in enumerate(relations)
    )
    return ChainReport(
        chain=chain_id,
        sides=tuple(Side(label, value) for label, value in sides),
        links=links,
        context=dict(context),
    )


# ---------------------------------------------------------------------------
# scalar layer: ordinary absolute value on Q
# ---------------------------------------------------------------------------


def tarski_min_bound(r, s) -> ChainReport:
    """||r|-|s|| <= min{|r-s|, |r+s|} with exact sides."""
    r, s = as_fraction(r), as_fraction(s)
    lhs = abs(abs(r) - abs(s))
    rhs = min(abs(r - s), abs(r + s))
    return _chain(
        "tarski_min_bound",
        [("||r|-|s||", lhs), ("min{|r-s|,|r+s|}", rhs)],
        ["<="],
        {"field": "rationals", "r": fraction_str(r), "s": fraction_str(s)},
    )


def tarski_gap(r, s) -> Fraction:
    """|r-s| + |r+s| - (|r|+|s|) - ||r|-|s||; exactly 0 for all rationals."""
    r, s = as_fraction(r), as_fraction(s)
    return abs(r - s) + abs(r + s) - (abs(r) + abs(s)) - abs(abs(r) - abs(s))


def tarski_equality_chain(r, s) -> ChainReport:
    """Three-sided scalar chain: the equality refinement of the min bound.

    ||r|-|s|| = |r-s|+|r+s|-(|r|+|s|) <= min{|r-s|,|r+s|}; the first link
    is an exact equality for every rational pair, the second an inequality.
    """
    r, s = as_fraction(r), as_fraction(s)
    lhs = abs(abs(r) - abs(s))
    mid = abs(r - s) + abs(r + s) - (abs(r) + abs(s))
    rhs = min(abs(r - s), abs(r + s))
    return _chain(
        "tarski",
        [
            ("||r|-|s||", lhs),
            ("|r-s|+|r+s|-(|r|+|s|)", mid),
            ("min{|r-s|,|r+s|}", rhs),
        ],
        ["=", "<="],
        {"field": "rationals", "r": fraction_str(r), "s": fraction_str(s)},
    )


@dataclass(frozen=True)
class ComplexGapProbe:
    """Squared comparison deciding failure of the equality at r=a, s=b*i.

    The equality holds for that pair iff 2*sqrt(a^2+b^2) = |a|+|b|+||a|-|b||,
    and both sides are nonnegative, so squaring decides it exactly:
    it fails iff 4(a^2+b^2) > (|a|+|b|+||a|-|b||)^2 = (2 max{|a|,|b|})^2.
    """

    a: Fraction
    b: Fraction
    four_norm_sq: Fraction
    squared_bound: Fraction

    @property
    def fails(self) -> bool:
        return self.four_norm_sq > self.squared_bound

    def to_json_dict(self) -> dict:
        return {
            "a": fraction_str(self.a),
            "b": fraction_str(self.b),
            "four_norm_sq": fraction_str(self.four_norm_sq),
            "squared_bound": fraction_str(self.squared_bound),
            "fails": self.fails,
        }


def tarski_complex_probe(a, b) -> ComplexGapProbe:
    a, b = as_fraction(a), as_fraction(b)
    bound = abs(a) + abs(b) + abs(abs(a) - abs(b))
    return ComplexGapProbe(
        a=a,
        b=b,
        four_norm_sq=4 * (a * a + b * b),
        squared_bound=bound * bound,
    )


def tarski_complex_fails(a, b) -> bool:
    """True iff the scalar equality breaks for the pair r = a, s = b*i."""
    return tarski_complex_probe(a, b).fails


# ---------------------------------------------------------------------------
# vector layer
# ---------------------------------------------------------------------------


def norm_quadruple(x: Vector, y: Vector, spec: NormSpec):
    """(N(x), N(y), N(x+y), N(x-y)) -- every chain is a function of these."""
    return (
        norm(x, spec),
        norm(y, spec),
        norm(add(x, y), spec),
        norm(sub(x, y), spec),
    )


def _vector_context(x: Vector, y: Vector, spec: NormSpec, **extra) -> dict:
    ctx = {
        "field": x.field.selector(),
        "norm": spec.selector(),
        "x": str(x),
        "y": str(y),
    }
    ctx.update(extra)
    return ctx


def _nonzero(x: Vector) -> bool:
    return any(not x.field.is_zero(c) for c in x.coords)


def _require_archimedean(x: Vector):
    if x.field.is_non_archimedean:
        raise SpecMismatch(
            "the baseline chains run over the Archimedean backend; "
            f"got {x.field.selector()}"
        )


def maligranda_chain1(x: Vector, y: Vector, spec: NormSpec) -> ChainReport:
    """|N(x)-N(y)| <= N(x+y)+N(x-y)-(N(x)+N(y)) <= min{N(x-y),N(x+y)}."""
    _require_archimedean(x)
    nx, ny, nplus, nminus = norm_quadruple(x, y, spec)
    return _chain(
        "maligranda_chain1",
        [
            ("|N(x)-N(y)|", abs(nx - ny)),
            ("N(x+y)+N(x-y)-(N(x)+N(y))", nplus + nminus - (nx + ny)),
            ("min{N(x-y),N(x+y)}", min(nminus, nplus)),
        ],
        ["<=", "<="],
        _vector_context(
            x, y, spec, precondition_met=_nonzero(x) and _nonzero(y)
        ),
    )


def maligranda_chain2(x: Vector, y: Vector, spec: NormSpec) -> ChainReport:
    """|N(x)-N(y)| <= N(x)+N(y)-|N(x+y)-N(x-y)|."""
    _require_archimedean(x)
    nx, ny, nplus, nminus = norm_quadruple(x, y, spec)
    return _chain(
        "maligranda_chain2",
        [
            ("|N(x)-N(y)|", abs(nx - ny)),
            ("N(x)+N(y)-|N(x+y)-N(x-y)|", nx + ny - abs(nplus - nminus)),
        ],
        ["<="],
        _vector_context(
            x, y, spec, precondition_met=_nonzero(x) and _nonzero(y)
        ),
    )


def _coefficient(x: Vector) -> tuple[Fraction, Fraction]:
    """(|2|, 2/|2|) for the field of x; raises if |2| is 0 or undefined."""
    t2 = two_magnitude(x.field)
    return t2, 2 / t2


def na_chain1(x: Vector, y: Vector, spec: NormSpec) -> ChainReport:
    """|N(x)-N(y)| <= (2/|2|)max{N(x-y),N(x+y)}-(N(x)+N(y))
                  <= (2/|2|)max{N(x),N(y)}-(N(x)+N(y))."""
    t2, coef = _coefficient(x)
    nx, ny, nplus, nminus = norm_quadruple(x, y, spec)
    return _chain(
        "na_chain1",
        [
            ("|N(x)-N(y)|", abs(nx - ny)),
            (
                "(2/|2|)max{N(x-y),N(x+y)}-(N(x)+N(y))",
                coef * max(nminus, nplus) - (nx + ny),
            ),
            (
                "(2/|2|)max{N(x),N(y)}-(N(x)+N(y))",
                coef * max(nx, ny) - (nx + ny),
            ),
        ],
        ["<=", "<="],
        _vector_context(
            x,
            y,
            spec,
            two_magnitude=fraction_str(t2),
            coefficient=fraction_str(coef),
        ),
    )


def na_chain2(x: Vector, y: Vector, spec: NormSpec) -> ChainReport:
    """|N(x)-N(y)| <= N(x)+N(y)-(2/|2|)|N(x+y)-N(x-y)|."""
    t2, coef = _coefficient(x)
    nx, ny, nplus, nminus = norm_quadruple(x, y, spec)
    return _chain(
        "na_chain2",
        [
            ("|N(x)-N(y)|", abs(nx - ny)),
            (
                "N(x)+N(y)-(2/|2|)|N(x+y)-N(x-y)|",
                nx + ny - coef * abs(nplus - nminus),
            ),
        ],
        ["<="],
        _vector_context(
            x,
            y,
            spec,
            two_magnitude=fraction_str(t2),
            coefficient=fraction_str(coef),
        ),
    )


#: (label, relation) of the eight supporting relations, in proof order.
STEP_DEFS = (
    ("twice_max", "="),
    ("combo_max_vs_x", ">="),
    ("combo_max_vs_y", ">="),
    ("combo_max_vs_max", ">="),
    ("twice_min", "="),
    ("combo_gap_vs_x", "<="),
    ("combo_gap_vs_y", "<="),
    ("combo_gap_vs_min", "<="),
)


def _step_sides(nx, ny, nplus, nminus, t2):
    """(lhs, rhs) per step label, aligned with STEP_DEFS."""
    gap = abs(nx - ny)
    combo_max = max(nminus, nplus)
    combo_gap = abs(nplus - nminus)
    return {
        "twice_max": (nx + ny + gap, 2 * max(nx, ny)),
        "combo_max_vs_x": (combo_max, t2 * nx),
        "combo_max_vs_y": (combo_max, t2 * ny),
        "combo_max_vs_max": (combo_max, t2 * max(nx, ny)),
        "twice_min": (nx + ny - gap, 2 * min(nx, ny)),
        "combo_gap_vs_x": (combo_gap, t2 * nx),
        "combo_gap_vs_y": (combo_gap, t2 * ny),
        "combo_gap_vs_min": (combo_gap, t2 * min(nx, ny)),
    }


def proof_step_identities(x: Vector, y: Vector, spec: NormSpec) -> StepReport:
    """The eight exact relations behind the two ultrametric chains.

    With M = max{N(x-y), N(x+y)} and g = |N(x+y)-N(x-y)|:

    * twice_max:        N(x)+N(y)+|N(x)-N(y)|  =  2 max{N(x),N(y)}
    * combo_max_vs_x:   M  >=  |2| N(x)         (M >= N((x+y)+(x-y)) = N(2x))
    * combo_max_vs_y:   M  >=  |2| N(y)
    * combo_max_vs_max: M  >=  |2| max{N(x),N(y)}
    * twice_min:        N(x)+N(y)-|N(x)-N(y)|  =  2 min{N(x),N(y)}
    * combo_gap_vs_x:   g  <=  |2| N(x)
    * combo_gap_vs_y:   g  <=  |2| N(y)
    * combo_gap_vs_min: g  <=  |2| min{N(x),N(y)}

    The factor 2 in twice_max / twice_min is the integer two; the |2|
    factors are the field magnitude.
    """
    t2 = two_magnitude(x.field)
    nx, ny, nplus, nminus = norm_quadruple(x, y, spec)
    table = _step_sides(nx, ny, nplus, nminus, t2)
    steps = []
    for label, relation in STEP_DEFS:
        lhs, rhs = table[label]
        link = _link(relation, lhs, rhs)
        steps.append(
            Step(
                label=label,
                relation=relation,
                lhs=lhs,
                rhs=rhs,
                holds=link.holds,
                tight=link.tight,
            )
        )
    return StepReport(
        steps=tuple(steps),
        context=_vector_context(x, y, spec, two_magnitude=fraction_str(t2)),
    )


def collapse_check(x: Vector, y: Vector, spec: NormSpec) -> CollapseReport:
    """When |2| = 1: max{N(x-y),N(x+y)} = max{N(x),N(y)} and the first
    chain is tight at every link."""
    t2 = two_magnitude(x.field)
    if t2 != 1:
        raise NotUnitTwo(
            f"collapse requires |2| = 1, but |2| = {fraction_str(t2)} "
            f"in {x.field.selector()}"
        )
    nx, ny, nplus, nminus = norm_quadruple(x, y, spec)
    return CollapseReport(
        combo_max=max(nminus, nplus),
        norm_max=max(nx, ny),
        equal=max(nminus, nplus) == max(nx, ny),
        chain=na_chain1(x, y, spec),
        context=_vector_context(x, y, spec),
    )

"""Finite-dimensional normed spaces over a valued field.

A space is a field backend, a dimension, and a norm recipe:

* ``sup``  -- weighted sup norm max_i w_i |x_i| (ultrametric over a
              non-Archimedean field; also valid over the rationals),
* ``l1``   -- sum_i |x_i| (Archimedean baseline only),
* ``linf`` -- unweighted sup norm (Archimedean baseline alias).

Weights are strictly positive exact rationals, so every norm value is a
nonnegative Fraction with no rounding anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainMismatch, SpecMismatch
from .fields import FieldBackend, as_fraction
from .reports import AxiomClause, AxiomReport, fraction_str

_NORM_KINDS = ("sup", "l1", "linf")


@dataclass(frozen=True)
class NormSpec:
    """Norm recipe: kind plus optional per-coordinate sup weights."""

    kind: str = "sup"
    weights: tuple = ()

    def __post_init__(self):
        if self.kind not in _NORM_KINDS:
            raise ValueError(f"unknown norm kind {self.kind!r}; pick from {_NORM_KINDS}")
        ws = tuple(as_fraction(w) for w in self.weights)
        if self.kind != "sup" and ws:
            raise ValueError(f"{self.kind} norm takes no weights")
        for w in ws:
            if w <= 0:
                raise ValueError(f"norm weights must be positive, got {fraction_str(w)}")
        object.__setattr__(self, "weights", ws)

    def selector(self) -> str:
        if self.kind == "sup" and self.weights:
            return "sup:" + ",".join(fraction_str(w) for w in self.weights)
        return self.kind

    def weight(self, i: int) -> Fraction:
        if self.weights:
            return self.weights[i]
        return Fraction(1)


def parse_norm(selector: str) -> NormSpec:
    """Build a NormSpec from its CLI selector string."""
    text = selector.strip()
    if text.startswith("sup:"):
        weights = tuple(Fraction(part) for part in text[4:].split(","))
        return NormSpec("sup", weights)
    return NormSpec(text)


@dataclass(frozen=True)
class Vector:
    """Immutable point of a normed space; coordinates live in the field."""

    field: FieldBackend
    coords: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "coords", tuple(self.field.coerce(c) for c in self.coords)
        )

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self):
        return "(" + ", ".join(self.field.format_scalar(c) for c in self.coords) + ")"


def vector(field: FieldBackend, coords: Sequence) -> Vector:
    return Vector(field, tuple(coords))


def zero_vector(field: FieldBackend, dim: int) -> Vector:
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    return Vector(field, (field.zero(),) * dim)


def _same_space(x: Vector, y: Vector):
    if x.field != y.field:
        raise DomainMismatch(
            f"vectors from different fields: {x.field.selector()} vs {y.field.selector()}"
        )
    if x.dim != y.dim:
        raise DomainMismatch(f"dimension mismatch: {x.dim} vs {y.dim}")


def add(x: Vector, y: Vector) -> Vector:
    _same_space(x, y)
    f = x.field
    return Vector(f, tuple(f.add(a, b) for a, b in zip(x.coords, y.coords)))


def sub(x: Vector, y: Vector) -> Vector:
    _same_space(x, y)
    f = x.field
    return Vector(f, tuple(f.sub(a, b) for a, b in zip(x.coords, y.coords)))


def scale(c, x: Vector) -> Vector:
    f = x.field
    c = f.coerce(c)
    return Vector(f, tuple(f.mul(c, a) for a in x.coords))


def _check_spec(spec: NormSpec, x: Vector):
    if spec.weights and len(spec.weights) != x.dim:
        raise ValueError(
            f"{len(spec.weights)} weights given for a {x.dim}-dimensional vector"
        )
    if spec.kind in ("l1", "linf") and x.field.is_non_archimedean:
        raise SpecMismatch(
            f"{spec.kind} is the Archimedean baseline norm; "
            f"use sup over {x.field.selector()}"
        )


def norm(x: Vector, spec: NormSpec = NormSpec()) -> Fraction:
    """Exact norm of x under the given recipe."""
    _check_spec(spec, x)
    f = x.field
    mags = [f.abs_value(c) for c in x.coords]
    if spec.kind == "l1":
        return sum(mags, Fraction(0))
    if spec.kind == "linf":
        return max(mags)
    return max(spec.weight(i) * m for i, m in enumerate(mags))


def format_vector(x: Vector) -> str:
    return str(x)


def parse_vector(field: FieldBackend, text: str) -> Vector:
    """Inverse of format_vector: "(a, b, ...)" with field-native scalars."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    parts = [p.strip() for p in text.split(",")]
    if parts == [""]:
        raise ValueError("empty vector literal")
    return Vector(field, tuple(field.parse_scalar(p) for p in parts))


def check_norm_axioms(
    spec: NormSpec,
    field: FieldBackend,
    vector_samples: Sequence[Vector],
    scalar_samples: Sequence = (),
) -> AxiomReport:
    """Exact check of the norm axioms, exhaustive over the given samples.

    Definiteness (||x|| = 0 only at 0) per sample vector; homogeneity
    ||c x|| = |c| ||x|| for every (scalar, vector) combination; and for
    every ordered pair of sample vectors the subadditivity
    ||x+y|| <= ||x|| + ||y||, plus -- on ultrametric backends -- the
    stronger ||x+y|| <= max(||x||, ||y||) together with the isosceles
    refinement (equality whenever the two norms differ).
    """
    definite = {"holds": True, "checked": 0, "cex": None}
    homogeneous = {"holds": True, "checked": 0, "cex": None}
    subadd = {"holds": True, "checked": 0, "cex": None}
    ultra = {"holds": True, "checked": 0, "cex": None}
    isosceles = {"holds": True, "checked": 0, "cex": None}

    def fail(slot, text):
        if slot["holds"]:
            slot["holds"] = False
            slot["cex"] = text

    scalars = [field.coerce(c) for c in scalar_samples] or [
        field.coerce(0),
        field.one(),
        field.two(),
    ]
    vectors = list(vector_samples)
    norms = []
    n = 0
    for x in vectors:
        n += 1
        nx = norm(x, spec)
        norms.append(nx)
        definite["checked"] += 1
        if nx == 0 and any(not field.is_zero(c) for c in x.coords):
            fail(definite, f"||{x}|| = 0 but the vector is nonzero")
        for c in scalars:
            homogeneous["checked"] += 1
            lhs = norm(scale(c, x), spec)
            rhs = field.abs_value(c) * nx
            if lhs != rhs:
                fail(
                    homogeneous,
                    f"||c x|| = {fraction_str(lhs)} != |c| ||x|| = {fraction_str(rhs)} "
                    f"for c = {field.format_scalar(c)}, x = {x}",
                )
    ultrametric = field.is_non_archimedean and spec.kind == "sup"
    for i, x in enumerate(vectors):
        nx = norms[i]
        for j, y in enumerate(vectors):
            ny = norms[j]
            ns = norm(add(x, y), spec)
            subadd["checked"] += 1
            if ns > nx + ny:
                fail(
                    subadd,
                    f"||x+y|| = {fraction_str(ns)} > ||x||+||y|| for x = {x}, y = {y}",
                )
            if ultrametric:
                ultra["checked"] += 1
                if ns > max(nx, ny):
                    fail(
                        ultra,
                        f"||x+y|| = {fraction_str(ns)} > max(||x||, ||y||) = "
                        f"{fraction_str(max(nx, ny))} for x = {x}, y = {y}",
                    )
                if nx != ny:
                    isosceles["checked"] += 1
                    if ns != max(nx, ny):
                        fail(
                            isosceles,
                            f"||x|| != ||y|| but ||x+y|| = {fraction_str(ns)} != "
                            f"max = {fraction_str(max(nx, ny))} for x = {x}, y = {y}",
                        )

    clauses = [
        AxiomClause("definiteness", True, definite["holds"], definite["checked"], definite["cex"]),
        AxiomClause(
            "homogeneity", True, homogeneous["holds"], homogeneous["checked"], homogeneous["cex"]
        ),
        AxiomClause("subadditivity", True, subadd["holds"], subadd["checked"], subadd["cex"]),
    ]
    if field.is_non_archimedean and spec.kind == "sup":
        clauses.append(
            AxiomClause("ultrametric", True, ultra["holds"], ultra["checked"], ultra["cex"])
        )
        clauses.append(
            AxiomClause(
                "isosceles", True, isosceles["holds"], isosceles["checked"], isosceles["cex"]
            )
        )
    else:
        clauses.append(
            AxiomClause(
                "ultrametric",
                False,
                None,
                0,
                note="NOT-APPLICABLE: norm is not ultrametric on this backend",
            )
        )

    return AxiomReport(
        kind="norm",
        clauses=tuple(clauses),
        samples=n,
        context={"field": field.selector(), "norm": spec.selector()},
    )

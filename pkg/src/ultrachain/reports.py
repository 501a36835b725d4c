"""Report structures produced by axiom checks and chain evaluations.

All numeric values in reports are exact Fractions; JSON renders them as
reduced "num/den" strings.  Serialization is canonical (sorted keys, fixed
separators) so identical results are byte-identical on disk.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional


def fraction_str(value: Fraction) -> str:
    """Reduced "num/den" (or plain integer) form."""
    return str(Fraction(value))


def dumps(obj) -> str:
    """Canonical JSON used for every report written by the CLI."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


@dataclass(frozen=True)
class Side:
    label: str
    value: Fraction

    def to_json_dict(self) -> dict:
        return {"label": self.label, "value": fraction_str(self.value)}


@dataclass(frozen=True)
class Link:
    relation: str  # "<=", "=" or ">="
    holds: bool
    tight: bool

    def to_json_dict(self) -> dict:
        return {"relation": self.relation, "holds": self.holds, "tight": self.tight}


@dataclass(frozen=True)
class ChainReport:
    """Evaluated sides of one inequality chain plus per-link flags.

    links[i] relates sides[i] and sides[i+1].
    """

    chain: str
    sides: tuple[Side, ...]
    links: tuple[Link, ...]
    context: dict = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return all(l.holds for l in self.links)

    @property
    def all_tight(self) -> bool:
        return all(l.tight for l in self.links)

    def values(self) -> tuple[Fraction, ...]:
        return tuple(s.value for s in self.sides)

    def to_json_dict(self) -> dict:
        return {
            "chain": self.chain,
            "sides": [s.to_json_dict() for s in self.sides],
            "links": [l.to_json_dict() for l in self.links],
            "context": dict(self.context),
        }


@dataclass(frozen=True)
class Step:
    """One standalone relation lhs <relation> rhs, evaluated exactly."""

    label: str
    relation: str
    lhs: Fraction
    rhs: Fraction
    holds: bool
    tight: bool

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "relation": self.relation,
            "lhs": fraction_str(self.lhs),
            "rhs": fraction_str(self.rhs),
            "holds": self.holds,
            "tight": self.tight,
        }


@dataclass(frozen=True)
class StepReport:
    steps: tuple[Step, ...]
    context: dict = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return all(s.holds for s in self.steps)

    def __getitem__(self, label: str) -> Step:
        for s in self.steps:
            if s.label == label:
                return s
        raise KeyError(label)

    def to_json_dict(self) -> dict:
        return {
            "steps": [s.to_json_dict() for s in self.steps],
            "context": dict(self.context),
        }


@dataclass(frozen=True)
class CollapseReport:
    """Equality collapse of the first ultrametric chain when |2| = 1."""

    combo_max: Fraction  # max{|x-y|, |x+y|} (norms)
    norm_max: Fraction  # max{|x|, |y|}
    equal: bool
    chain: ChainReport
    context: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.equal and self.chain.all_tight

    def to_json_dict(self) -> dict:
        return {
            "combo_max": fraction_str(self.combo_max),
            "norm_max": fraction_str(self.norm_max),
            "equal": self.equal,
            "chain": self.chain.to_json_dict(),
            "holds": self.holds,
            "context": dict(self.context),
        }


@dataclass(frozen=True)
class AxiomClause:
    name: str
    applicable: bool
    holds: Optional[bool]  # None when not applicable
    checked: int
    counterexample: Optional[str] = None
    note: Optional[str] = None

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "applicable": self.applicable,
            "holds": self.holds,
            "checked": self.checked,
            "counterexample": self.counterexample,
            "note": self.note,
        }


@dataclass(frozen=True)
class AxiomReport:
    kind: str  # "valuation" or "norm"
    clauses: tuple[AxiomClause, ...]
    samples: int
    context: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.clauses if c.applicable)

    def __getitem__(self, name: str) -> AxiomClause:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "clauses": [c.to_json_dict() for c in self.clauses],
            "samples": self.samples,
            "passed": self.passed,
            "context": dict(self.context),
        }

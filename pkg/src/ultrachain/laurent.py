"""Laurent polynomials over a prime field Z/q.

These are the scalars of the t-adic backend: finite-support maps from integer
degrees to nonzero residues.  Only ring structure and the minimal-degree
valuation are needed; no division, no series tails.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DomainMismatch

_TERM_RE = re.compile(r"^(?:(\d+)\*?)?(t)?(?:\^(-?\d+))?$")


class LaurentPoly:
    """Immutable Laurent polynomial with coefficients in Z/q.

    Terms are kept sorted by degree with coefficients reduced to [1, q-1];
    zero coefficients are never stored.
    """

    __slots__ = ("q", "terms")

    def __init__(self, q: int, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if q < 2:
            raise ValueError("modulus must be at least 2")
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for deg, c in items:
            c = (acc.get(deg, 0) + c) % q
            if c:
                acc[deg] = c
            else:
                acc.pop(deg, None)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "terms", tuple(sorted(acc.items())))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def constant(cls, q: int, c: int) -> "LaurentPoly":
        return cls(q, {0: c})

    @classmethod
    def zero(cls, q: int) -> "LaurentPoly":
        return cls(q)

    @classmethod
    def one(cls, q: int) -> "LaurentPoly":
        return cls(q, {0: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def valuation(self):
        """Minimal degree with nonzero coefficient; INFINITY for zero.

        Returns the module-level INFINITY sentinel from ultrachain.fields
        (imported lazily to avoid a cycle).
        """
        if not self.terms:
            from .fields import INFINITY

            return INFINITY
        return self.terms[0][0]

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly(self.q, [(d + k, c) for d, c in self.terms])

    def _check(self, other: "LaurentPoly") -> None:
        if not isinstance(other, LaurentPoly) or other.q != self.q:
            raise DomainMismatch("mixed Laurent moduli")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        return LaurentPoly(self.q, list(self.terms) + list(other.terms))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.q, [(d, self.q - c) for d, c in self.terms])

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        acc: dict[int, int] = {}
        for d1, c1 in self.terms:
            for d2, c2 in other.terms:
                acc[d1 + d2] = acc.get(d1 + d2, 0) + c1 * c2
        return LaurentPoly(self.q, acc)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and other.q == self.q
            and other.terms == self.terms
        )

    def __hash__(self) -> int:
        return hash((self.q, self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for d, c in self.terms:
            if d == 0:
                parts.append(str(c))
            elif d == 1:
                parts.append("t" if c == 1 else f"{c}*t")
            else:
                parts.append(f"t^{d}" if c == 1 else f"{c}*t^{d}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly(q={self.q}, {self})"

    @classmethod
    def parse(cls, q: int, text: str) -> "LaurentPoly":
        """Parse the "c*t^k + ..." serialization (also bare "c", "t", "c*t")."""
        text = text.strip()
        if text in ("", "0"):
            return cls.zero(q)
        coeffs: list[tuple[int, int]] = []
        for raw in text.split("+"):
            term = raw.strip().replace(" ", "")
            m = _TERM_RE.match(term)
            if not m or (m.group(3) is not None and m.group(2) is None):
                raise ValueError(f"bad Laurent term: {raw!r}")
            coef = int(m.group(1)) if m.group(1) else 1
            if m.group(2) is None:
                deg = 0
                if m.group(1) is None:
                    raise ValueError(f"bad Laurent term: {raw!r}")
            else:
                deg = int(m.group(3)) if m.group(3) is not None else 1
            coeffs.append((deg, coef))
        return cls(q, coeffs)

"""Exactly-computable absolute values on fields.

Four backends share one interface:

* ``padic:p``   -- rationals with |r| = p^(-v_p(r)),
* ``trivial``   -- rationals with |r| = 1 for r != 0,
* ``tadic:q``   -- Laurent polynomials over Z/q with |f| = c^(-v(f)) for a
                   fixed rational base c > 1 (default 2),
* ``rationals`` -- rationals with the ordinary absolute value (the only
                   Archimedean backend, kept as a baseline).

Every magnitude is an exact nonnegative Fraction; valuations are integers
extended by the INFINITY sentinel, which is the valuation of zero.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence, Union

from .errors import CharacteristicTwo, DomainMismatch, NonPrimeModulus, SpecMismatch
from .laurent import LaurentPoly
from .reports import AxiomClause, AxiomReport, fraction_str


class _Infinity:
    """Valuation of the zero element: absorbs addition, exceeds every int."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("ultrachain-infinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __neg__(self):
        raise ArithmeticError("INFINITY has no negative")


INFINITY = _Infinity()

Valuation = Union[int, _Infinity]
Scalar = Union[Fraction, LaurentPoly]

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def as_fraction(value) -> Fraction:
    """Coerce int/str/Fraction to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise DomainMismatch(f"not an exact rational: {value!r}")


def _int_valuation(n: int, p: int) -> int:
    # n != 0
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(r, p: int) -> Valuation:
    """Exponent v with r = p^v * (u/w), p dividing neither u nor w.

    Returns INFINITY exactly for r = 0.
    """
    if not is_prime(p):
        raise NonPrimeModulus(f"{p} is not prime")
    r = as_fraction(r)
    if r == 0:
        return INFINITY
    return _int_valuation(r.numerator, p) - _int_valuation(r.denominator, p)


class FieldBackend:
    """Common protocol: scalar arithmetic plus an exact absolute value."""

    kind: str = ""
    is_non_archimedean: bool = True
    # signed_units: generation composes a sign with a positive unit part
    signed_units: bool = True
    # graded: scalars carry a p^v / t^v valuation factor worth enumerating
    graded: bool = True

    # -- identity ---------------------------------------------------------
    def selector(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return f"<field {self.selector()}>"

    def __eq__(self, other):
        return isinstance(other, FieldBackend) and other.selector() == self.selector()

    def __hash__(self):
        return hash(self.selector())

    # -- scalar protocol --------------------------------------------------
    def coerce(self, value) -> Scalar:
        raise NotImplementedError

    def zero(self) -> Scalar:
        return self.coerce(0)

    def one(self) -> Scalar:
        return self.coerce(1)

    def two(self) -> Scalar:
        return self.coerce(2)

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b

    def neg(self, a: Scalar) -> Scalar:
        return -a

    def is_zero(self, a: Scalar) -> bool:
        return not a

    def format_scalar(self, a: Scalar) -> str:
        return str(a)

    def parse_scalar(self, text: str) -> Scalar:
        return self.coerce(text)

    # -- valuation / magnitude ---------------------------------------------
    def valuation(self, a: Scalar) -> Valuation:
        raise NotImplementedError

    def abs_value(self, a: Scalar) -> Fraction:
        raise NotImplementedError

    # -- generation hooks (used by the explorer) ---------------------------
    def unit_parts(self, bound: int) -> list:
        """Deterministically ordered positive unit parts for scalar grids."""
        raise NotImplementedError

    def compose(self, v: int, unit, negate: bool) -> Scalar:
        """Scalar with valuation v built from a unit part and a sign."""
        raise NotImplementedError


class _RationalScalars(FieldBackend):
    """Scalar handling shared by the backends whose elements are rationals."""

    def coerce(self, value) -> Fraction:
        if isinstance(value, LaurentPoly):
            raise DomainMismatch("Laurent scalar used with a rational backend")
        if isinstance(value, float):
            raise DomainMismatch("floating point is not permitted; pass a Fraction")
        return as_fraction(value)

    def _coprime_units(self, bound: int, modulus: int | None = None) -> list[Fraction]:
        if bound < 1:
            raise ValueError("unit bound must be at least 1")
        units = []
        for u in range(1, bound + 1):
            for w in range(1, bound + 1):
                if gcd(u, w) != 1:
                    continue
                if modulus is not None and (u % modulus == 0 or w % modulus == 0):
                    continue
                units.append(Fraction(u, w))
        return units


class PadicField(_RationalScalars):
    kind = "padic"

    def __init__(self, p: int):
        if not is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        self.p = p

    def selector(self) -> str:
        return f"padic:{self.p}"

    def valuation(self, a: Fraction) -> Valuation:
        a = self.coerce(a)
        if a == 0:
            return INFINITY
        return _int_valuation(a.numerator, self.p) - _int_valuation(a.denominator, self.p)

    def abs_value(self, a: Fraction) -> Fraction:
        v = self.valuation(a)
        if v is INFINITY:
            return Fraction(0)
        return Fraction(self.p) ** (-v)

    def unit_parts(self, bound: int) -> list[Fraction]:
        return self._coprime_units(bound, modulus=self.p)

    def compose(self, v: int, unit: Fraction, negate: bool) -> Fraction:
        s = Fraction(self.p) ** v * unit
        return -s if negate else s


class TrivialField(_RationalScalars):
    kind = "trivial"
    graded = False

    def selector(self) -> str:
        return "trivial"

    def valuation(self, a: Fraction) -> Valuation:
        a = self.coerce(a)
        return INFINITY if a == 0 else 0

    def abs_value(self, a: Fraction) -> Fraction:
        a = self.coerce(a)
        return Fraction(0) if a == 0 else Fraction(1)

    def unit_parts(self, bound: int) -> list[Fraction]:
        return self._coprime_units(bound)

    def compose(self, v: int, unit: Fraction, negate: bool) -> Fraction:
        return -unit if negate else unit


class RationalField(_RationalScalars):
    """Ordinary absolute value on Q; the Archimedean baseline."""

    kind = "rationals"
    is_non_archimedean = False
    graded = False

    def selector(self) -> str:
        return "rationals"

    def valuation(self, a: Fraction) -> Valuation:
        raise SpecMismatch("the Archimedean backend has no valuation exponent")

    def abs_value(self, a: Fraction) -> Fraction:
        return abs(self.coerce(a))

    def unit_parts(self, bound: int) -> list[Fraction]:
        return self._coprime_units(bound)

    def compose(self, v: int, unit: Fraction, negate: bool) -> Fraction:
        return -unit if negate else unit


class TadicField(FieldBackend):
    """Laurent polynomials over Z/q with magnitude base^(-min degree)."""

    kind = "tadic"
    signed_units = False

    def __init__(self, q: int, base=Fraction(2)):
        if not is_prime(q):
            raise NonPrimeModulus(f"{q} is not prime")
        base = as_fraction(base)
        if base <= 1:
            raise ValueError("t-adic magnitude base must be > 1")
        self.q = q
        self.base = base

    def selector(self) -> str:
        if self.base == 2:
            return f"tadic:{self.q}"
        return f"tadic:{self.q}:{fraction_str(self.base)}"

    def coerce(self, value) -> LaurentPoly:
        if isinstance(value, LaurentPoly):
            if value.q != self.q:
                raise DomainMismatch(
                    f"Laurent scalar over Z/{value.q} used with tadic:{self.q}"
                )
            return value
        if isinstance(value, int):
            return LaurentPoly.constant(self.q, value)
        if isinstance(value, str):
            return LaurentPoly.parse(self.q, value)
        raise DomainMismatch(f"not a t-adic scalar: {value!r}")

    def valuation(self, a: LaurentPoly) -> Valuation:
        return self.coerce(a).valuation()

    def abs_value(self, a: LaurentPoly) -> Fraction:
        v = self.valuation(a)
        if v is INFINITY:
            return Fraction(0)
        return self.base ** (-v)

    def unit_parts(self, bound: int) -> list[LaurentPoly]:
        """Polynomials c0 + c1 t + ... + c_{B-1} t^{B-1} with c0 != 0."""
        if bound < 1:
            raise ValueError("unit bound must be at least 1")
        units = []

        def rec(prefix: list[int]):
            if len(prefix) == bound:
                units.append(
                    LaurentPoly(self.q, {d: c for d, c in enumerate(prefix) if c})
                )
                return
            for c in range(self.q):
                rec(prefix + [c])

        for c0 in range(1, self.q):
            rec([c0])
        return units

    def compose(self, v: int, unit: LaurentPoly, negate: bool) -> LaurentPoly:
        return unit.shift(v)


def parse_field(selector: str) -> FieldBackend:
    """Build a backend from its CLI selector string."""
    parts = selector.strip().split(":")
    kind = parts[0]
    if kind == "padic":
        if len(parts) != 2:
            raise ValueError("expected padic:<prime>")
        return PadicField(int(parts[1]))
    if kind == "trivial":
        if len(parts) != 1:
            raise ValueError("expected bare 'trivial'")
        return TrivialField()
    if kind == "tadic":
        if len(parts) == 2:
            return TadicField(int(parts[1]))
        if len(parts) == 3:
            return TadicField(int(parts[1]), Fraction(parts[2]))
        raise ValueError("expected tadic:<prime>[:<base>]")
    if kind == "rationals":
        if len(parts) != 1:
            raise ValueError("expected bare 'rationals'")
        return RationalField()
    raise ValueError(f"unknown field selector: {selector!r}")


def abs_value(scalar, backend: FieldBackend) -> Fraction:
    """|scalar| in the given backend, as an exact Fraction."""
    return backend.abs_value(backend.coerce(scalar))


def two_magnitude(backend: FieldBackend) -> Fraction:
    """|1+1| in a non-Archimedean backend; 0 < result <= 1 when defined."""
    if not backend.is_non_archimedean:
        raise SpecMismatch("|2| normalization is only used on ultrametric backends")
    m = backend.abs_value(backend.add(backend.one(), backend.one()))
    if m == 0:
        raise CharacteristicTwo(
            f"characteristic 2 in {backend.selector()}: |2| = 0, "
            "the 2/|2| inequality chains are undefined"
        )
    return m


def prime_power_annotation(value: Fraction, base: int) -> str | None:
    """Render value as base^k when it is an exact power, else None."""
    value = Fraction(value)
    if value <= 0:
        return None
    for intpart, sign in ((value, 1), (1 / value, -1)):
        if intpart.denominator == 1:
            n, k = intpart.numerator, 0
            while n % base == 0:
                n //= base
                k += 1
            if n == 1 and k >= 0:
                return f"{base}^{sign * k}"
    return None


def check_valuation_axioms(
    backend: FieldBackend, samples: Sequence[tuple]
) -> AxiomReport:
    """Exact check of the absolute-value axioms on a sample of scalar pairs.

    Per pair (a, b): |a| = 0 only at 0; |ab| = |a||b|; and the ultrametric
    inequality |a+b| <= max(|a|,|b|) on non-Archimedean backends.  The
    Archimedean backend checks the ordinary triangle inequality instead and
    reports the ultrametric clause as not applicable, with |1+1| = 2 > 1 as
    the standing counterexample.
    """
    definite = {"holds": True, "checked": 0, "cex": None}
    multiplicative = {"holds": True, "checked": 0, "cex": None}
    ultra = {"holds": True, "checked": 0, "cex": None}
    triangle = {"holds": True, "checked": 0, "cex": None}

    def fail(slot, text):
        if slot["holds"]:
            slot["holds"] = False
            slot["cex"] = text

    n = 0
    for a, b in samples:
        a = backend.coerce(a)
        b = backend.coerce(b)
        n += 1
        fa, fb = backend.abs_value(a), backend.abs_value(b)
        for s, m in ((a, fa), (b, fb)):
            definite["checked"] += 1
            if m == 0 and not backend.is_zero(s):
                fail(definite, f"|{backend.format_scalar(s)}| = 0 but the scalar is nonzero")
        multiplicative["checked"] += 1
        prod = backend.mul(a, b)
        if backend.abs_value(prod) != fa * fb:
            fail(
                multiplicative,
                f"|{backend.format_scalar(a)} * {backend.format_scalar(b)}| = "
                f"{fraction_str(backend.abs_value(prod))} != "
                f"{fraction_str(fa)} * {fraction_str(fb)}",
            )
        total = backend.abs_value(backend.add(a, b))
        if backend.is_non_archimedean:
            ultra["checked"] += 1
            if total > max(fa, fb):
                fail(
                    ultra,
                    f"|a+b| = {fraction_str(total)} > max = {fraction_str(max(fa, fb))} "
                    f"for a = {backend.format_scalar(a)}, b = {backend.format_scalar(b)}",
                )
        else:
            triangle["checked"] += 1
            if total > fa + fb:
                fail(
                    triangle,
                    f"|a+b| = {fraction_str(total)} > |a|+|b| for "
                    f"a = {backend.format_scalar(a)}, b = {backend.format_scalar(b)}",
                )

    clauses = [
        AxiomClause(
            "definiteness", True, definite["holds"], definite["checked"], definite["cex"]
        ),
        AxiomClause(
            "multiplicativity",
            True,
            multiplicative["holds"],
            multiplicative["checked"],
            multiplicative["cex"],
        ),
    ]
    if backend.is_non_archimedean:
        clauses.append(
            AxiomClause("ultrametric", True, ultra["holds"], ultra["checked"], ultra["cex"])
        )
    else:
        two = backend.abs_value(backend.coerce(2))
        clauses.append(
            AxiomClause(
                "ultrametric",
                False,
                None,
                0,
                counterexample=f"|1+1| = {fraction_str(two)} > max{{|1|,|1|}} = 1",
                note="NOT-APPLICABLE: this backend is Archimedean",
            )
        )
        clauses.append(
            AxiomClause("triangle", True, triangle["holds"], triangle["checked"], triangle["cex"])
        )

    return AxiomReport(
        kind="valuation",
        clauses=tuple(clauses),
        samples=n,
        context={"field": backend.selector()},
    )

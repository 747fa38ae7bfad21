"""Exact scalars: the cyclotomic field Q(zeta_r), Laurent polynomial rings and
quantum integers, binomials and their relatives.

Elements of Q(zeta_r) are stored in the power basis 1, zeta, ..., zeta^{phi(r)-1}
as integer numerators over one positive common denominator, always reduced
modulo the r-th cyclotomic polynomial.
"""

from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .checks import Report, check_all

__all__ = [
    "cyclotomic_polynomial",
    "CycScalar",
    "LaurentScalar",
    "q_var",
    "qint",
    "qbrace",
    "qfact",
    "qbinom",
    "qmultinom",
    "qbrace_falling",
    "specialize",
    "gauss_sum",
    "murakami_sum",
    "scalars_suite",
    "zeta",
]


# ---------------------------------------------------------------------------
# integer polynomials (coefficient lists, lowest degree first)


def _poly_trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _poly_trim(out)


def _poly_divmod_monic(p: Sequence[int], d: Sequence[int]) -> tuple[list[int], list[int]]:
    """Divide integer polynomial p by the monic integer polynomial d."""
    rem = list(p)
    deg_d = len(d) - 1
    if len(rem) - 1 < deg_d:
        return [0], _poly_trim(rem)
    quo = [0] * (len(rem) - deg_d)
    for k in range(len(rem) - 1, deg_d - 1, -1):
        c = rem[k]
        if c:
            quo[k - deg_d] = c
            for i in range(deg_d + 1):
                rem[k - deg_d + i] -= c * d[i]
    return _poly_trim(quo), _poly_trim(rem[:deg_d] or [0])


@lru_cache(maxsize=None)
def _cyclo(n: int) -> tuple[int, ...]:
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p, rem = _poly_divmod_monic(p, _cyclo(d))
            assert rem == [0]
    return tuple(p)


def cyclotomic_polynomial(r: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the r-th cyclotomic polynomial."""
    if not isinstance(r, int) or r < 3 or r % 2 == 0:
        raise ValueError("r must be odd >= 3")
    return _cyclo(r)


def _check_r(r: int) -> None:
    if not isinstance(r, int) or r < 3 or r % 2 == 0:
        raise ValueError("r must be odd >= 3")


# ---------------------------------------------------------------------------
# the field Q(zeta_r)


class _Field:
    """Per-r tables: reduction of x^k modulo Phi_r and the powers of zeta."""

    def __init__(self, r: int) -> None:
        self.r = r
        self.phi_poly = _cyclo(r)
        self.dim = len(self.phi_poly) - 1
        n = self.dim
        # red[k] = x^k mod Phi_r, for 0 <= k < max(2n - 1, r)
        top = max(2 * n - 1, r)
        red: list[tuple[int, ...]] = []
        cur = [0] * n
        cur[0] = 1
        for _ in range(top):
            red.append(tuple(cur))
            # multiply by x and reduce
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                for i in range(n):
                    cur[i] -= lead * self.phi_poly[i]
        self.red = red
        self.pow = tuple(red[k] for k in range(r))  # zeta^k for 0 <= k < r
        self.one = self.pow[0]
        self.products: dict = {}


_FIELDS: dict[int, _Field] = {}
_PRODUCT_CACHE_LIMIT = 1 << 18


def _field(r: int) -> _Field:
    F = _FIELDS.get(r)
    if F is None:
        F = _FIELDS[r] = _Field(r)
    return F


Rational = Union[int, Fraction]


class CycScalar:
    """An element of Q(zeta_r) in canonical reduced form.

    ``num`` holds phi(r) integers and ``den`` a positive integer with
    gcd(num, den) = 1; the value is sum(num[i] zeta^i) / den.
    """

    __slots__ = ("r", "num", "den", "_hash")

    def __init__(self, r: int, num: Sequence[int], den: int = 1, _canonical: bool = False) -> None:
        self.r = r
        if _canonical:
            self.num = num  # type: ignore[assignment]
            self.den = den
        elif den == 1 and len(num) == _field(r).dim:
            self.num = tuple(num)
            self.den = 1
        else:
            F = _field(r)
            if len(num) != F.dim:
                raise ValueError(f"expected {F.dim} coefficients for r={r}")
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            if den < 0:
                num = [-x for x in num]
                den = -den
            g = den
            for x in num:
                g = math.gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                num = [x // g for x in num]
                den //= g
            self.num = tuple(num)
            self.den = den
        self._hash = None

    # -- constructors -----------------------------------------------------

    @staticmethod
    def from_int(r: int, value: int) -> CycScalar:
        return _const(r, value)

    @staticmethod
    def from_rational(r: int, value: Rational) -> CycScalar:
        value = Fraction(value)
        n = _field(r).dim
        return CycScalar(r, [value.numerator] + [0] * (n - 1), value.denominator)

    @staticmethod
    def zeta_power(r: int, k: int) -> CycScalar:
        return _zpow(r, k % r)

    @staticmethod
    def from_poly(r: int, coeffs: Sequence[Rational]) -> CycScalar:
        """Reduce sum coeffs[i] zeta^i (any length) to canonical form."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in fr]
        F = _field(r)
        acc = [0] * F.dim
        for k, c in enumerate(ints):
            if c:
                for i, v in enumerate(F.pow[k % r]):
                    if v:
                        acc[i] += c * v
        return CycScalar(r, acc, den)

    @staticmethod
    def from_coeffs(r: int, coeffs: Sequence[Rational]) -> CycScalar:
        """Build from exactly phi(r) power-basis coordinates."""
        if len(coeffs) != _field(r).dim:
            raise ValueError("wrong number of coefficients")
        return CycScalar.from_poly(r, coeffs)

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def is_integral(self) -> bool:
        """True when the element lies in Z[zeta]."""
        return self.den == 1

    def __bool__(self) -> bool:
        return any(self.num)

    def _coerce(self, other: object) -> CycScalar:
        if isinstance(other, CycScalar):
            if other.r != self.r:
                raise ValueError(f"mismatched r: {self.r} vs {other.r}")
            return other
        if isinstance(other, int):
            return _const(self.r, other)
        if isinstance(other, Fraction):
            return CycScalar.from_rational(self.r, other)
        return NotImplemented  # type: ignore[return-value]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycScalar):
            return self.r == other.r and self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            o = self._coerce(other)
            return self.den == o.den and self.num == o.num
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.r, self.num, self.den))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: object) -> CycScalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return CycScalar(self.r, [a + b for a, b in zip(self.num, o.num)], self.den)
        return CycScalar(
            self.r,
            [a * o.den + b * self.den for a, b in zip(self.num, o.num)],
            self.den * o.den,
        )

    __radd__ = __add__

    def __neg__(self) -> CycScalar:
        return CycScalar(self.r, tuple(-a for a in self.num), self.den, _canonical=True)

    def __sub__(self, other: object) -> CycScalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> CycScalar:
        return (-self) + other

    def __mul__(self, other: object) -> CycScalar:
        if type(other) is CycScalar:
            if other.r != self.r:
                raise ValueError(f"mismatched r: {self.r} vs {other.r}")
            o = other
        elif isinstance(other, int):
            if other == 0:
                return _const(self.r, 0)
            return CycScalar(self.r, [a * other for a in self.num], self.den)
        else:
            o = self._coerce(other)
            if o is NotImplemented:
                return NotImplemented
        F = _FIELDS.get(self.r) or _field(self.r)
        if o.den == 1 and o.num == F.one:
            return self
        if self.den == 1 and self.num == F.one:
            return o
        key = (self.num, self.den, o.num, o.den)
        hit = F.products.get(key)
        if hit is not None:
            return hit
        res = self._mul_slow(o, F)
        if len(F.products) >= _PRODUCT_CACHE_LIMIT:
            F.products.clear()
        F.products[key] = res
        return res

    def _mul_slow(self, o: CycScalar, F: _Field) -> CycScalar:
        n = F.dim
        conv = [0] * (2 * n - 1)
        onum = [(j, b) for j, b in enumerate(o.num) if b]
        for i, a in enumerate(self.num):
            if a:
                for j, b in onum:
                    conv[i + j] += a * b
        acc = conv[:n]
        red = F.red
        for k in range(n, 2 * n - 1):
            c = conv[k]
            if c:
                for i, v in enumerate(red[k]):
                    if v:
                        acc[i] += c * v
        return CycScalar(self.r, acc, self.den * o.den)

    __rmul__ = __mul__

    def mul_zeta(self, k: int) -> CycScalar:
        """Multiply by zeta^k."""
        return self * _zpow(self.r, k % self.r)

    def __pow__(self, e: int) -> CycScalar:
        if e < 0:
            return self.inv() ** (-e)
        result = _const(self.r, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self) -> CycScalar:
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        F = _field(self.r)
        a = [Fraction(x) for x in self.num]
        m = [Fraction(x) for x in F.phi_poly]
        # s*a + t*m = gcd; track s only
        u0, u1 = [Fraction(0)], [Fraction(1)]
        r0, r1 = m, _frac_trim(a)
        while not (len(r1) == 1 and r1[0] == 0) and len(r1) > 1:
            q, rem = _frac_divmod(r0, r1)
            r0, r1 = r1, rem
            u0, u1 = u1, _frac_sub(u0, _frac_mul(q, u1))
        # r1 is a nonzero constant
        c = r1[0]
        s = [x / c for x in u1]
        res = CycScalar.from_poly(self.r, s)
        return res * self.den

    def __truediv__(self, other: object) -> CycScalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.den == 1 and o.num[0] != 0 and not any(o.num[1:]):
            return CycScalar(self.r, self.num, self.den * o.num[0])
        return self * o.inv()

    def __rtruediv__(self, other: object) -> CycScalar:
        return self._coerce(other) / self

    def conj(self, k: int) -> CycScalar:
        """Apply the Galois automorphism zeta -> zeta^k."""
        if math.gcd(k, self.r) != 1:
            raise ValueError("k must be coprime to r")
        image = CycScalar.from_poly(self.r, _spread(self.num, k, self.r))
        return CycScalar(self.r, image.num, self.den)

    # -- output -----------------------------------------------------------

    def to_complex(self) -> complex:
        """Debug-only complex embedding zeta -> exp(2 pi i / r)."""
        z = cmath.exp(2j * cmath.pi / self.r)
        return sum(c * z**i for i, c in enumerate(self.num)) / self.den

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @staticmethod
    def from_json(r: int, data: Sequence[str]) -> CycScalar:
        return CycScalar.from_coeffs(r, [Fraction(s) for s in data])

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if mono == "":
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"CycScalar(r={self.r}, {self})"


def _spread(num: Sequence[int], k: int, r: int) -> list[int]:
    out = [0] * r
    for i, c in enumerate(num):
        out[(i * k) % r] += c
    return out


def _frac_trim(p: list[Fraction]) -> list[Fraction]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _frac_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _frac_trim(out)


def _frac_sub(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    n = max(len(p), len(q))
    p = p + [Fraction(0)] * (n - len(p))
    q = q + [Fraction(0)] * (n - len(q))
    return _frac_trim([a - b for a, b in zip(p, q)])


def _frac_divmod(p: list[Fraction], d: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(p)
    dd = len(d) - 1
    if len(rem) - 1 < dd:
        return [Fraction(0)], _frac_trim(rem)
    quo = [Fraction(0)] * (len(rem) - dd)
    lead = d[-1]
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k] / lead
        if c:
            quo[k - dd] = c
            for i in range(dd + 1):
                rem[k - dd + i] -= c * d[i]
    return _frac_trim(quo), _frac_trim(rem[:dd] or [Fraction(0)])


@lru_cache(maxsize=None)
def _const(r: int, value: int) -> CycScalar:
    n = _field(r).dim
    return CycScalar(r, [value] + [0] * (n - 1))


@lru_cache(maxsize=None)
def _zpow(r: int, k: int) -> CycScalar:
    return CycScalar(r, _field(r).pow[k], 1)


def zeta(r: int, k: int = 1) -> CycScalar:
    """The power zeta_r^k."""
    _check_r(r)
    return _zpow(r, k % r)


# ---------------------------------------------------------------------------
# Laurent polynomial rings


Coeff = Union[int, CycScalar]


def _coeff_is_zero(c: Coeff) -> bool:
    return c == 0 if isinstance(c, int) else c.is_zero()


class LaurentScalar:
    """A Laurent polynomial in named invertible variables.

    Coefficients are integers or CycScalar values (the ring Z[zeta][X^{+-1}]).
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple[int, ...], Coeff] | None = None) -> None:
        self.variables = tuple(variables)
        clean: dict[tuple[int, ...], Coeff] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != len(self.variables):
                    raise ValueError("exponent length mismatch")
                if not _coeff_is_zero(c):
                    clean[tuple(e)] = c
        self.terms = clean

    @staticmethod
    def constant(variables: Sequence[str], c: Coeff) -> LaurentScalar:
        return LaurentScalar(variables, {(0,) * len(variables): c})

    @staticmethod
    def monomial(variables: Sequence[str], exps: Sequence[int], c: Coeff = 1) -> LaurentScalar:
        return LaurentScalar(variables, {tuple(exps): c})

    def _coerce(self, other: object) -> LaurentScalar:
        if isinstance(other, LaurentScalar):
            if other.variables != self.variables:
                raise ValueError("mismatched variables")
            return other
        if isinstance(other, (int, CycScalar)):
            return LaurentScalar.constant(self.variables, other)
        return NotImplemented  # type: ignore[return-value]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def __add__(self, other: object) -> LaurentScalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            if e in out:
                s = out[e] + c
                if _coeff_is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        res = LaurentScalar(self.variables)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> LaurentScalar:
        res = LaurentScalar(self.variables)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other: object) -> LaurentScalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> LaurentScalar:
        return (-self) + other

    def __mul__(self, other: object) -> LaurentScalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, ...], Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                if e in out:
                    out[e] = out[e] + c
                else:
                    out[e] = c
        return LaurentScalar(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> LaurentScalar:
        if e < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (ex, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            return LaurentScalar(self.variables, {tuple(-x * (-e) for x in ex): c ** (-e)})
        result = LaurentScalar.constant(self.variables, 1)
        for _ in range(e):
            result = result * self
        return result

    def exact_div(self, other: LaurentScalar) -> LaurentScalar:
        """Exact division in the one-variable ring Z[q^{+-1}]; raises if inexact."""
        if len(self.variables) != 1 or other.variables != self.variables:
            raise ValueError("exact division is implemented for one variable")
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentScalar(self.variables)
        ns = min(e[0] for e in self.terms)
        nd = min(e[0] for e in other.terms)
        p = [0] * (max(e[0] for e in self.terms) - ns + 1)
        for e, c in self.terms.items():
            p[e[0] - ns] = c
        d = [0] * (max(e[0] for e in other.terms) - nd + 1)
        for e, c in other.terms.items():
            d[e[0] - nd] = c
        lead = d[-1]
        rem = list(p)
        dd = len(d) - 1
        if len(rem) - 1 < dd:
            raise ArithmeticError("inexact division")
        quo = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c:
                if c % lead:
                    raise ArithmeticError("inexact division")
                qc = c // lead
                quo[k - dd] = qc
                for i in range(dd + 1):
                    rem[k - dd + i] -= qc * d[i]
        if any(rem):
            raise ArithmeticError("inexact division")
        shift = ns - nd
        return LaurentScalar(self.variables, {(i + shift,): c for i, c in enumerate(quo) if c})

    def substitute(self, values: Sequence[Coeff | LaurentScalar], target_variables: Sequence[str] | None = None):
        """Evaluate each variable at a unit value (variables must be invertible there)."""
        total: object = 0
        for e, c in self.terms.items():
            term: object = c
            for v, x in zip(values, e):
                term = term * (v ** x)
            total = term + total
        return total

    def to_json(self) -> list[dict]:
        out = []
        for e in sorted(self.terms):
            c = self.terms[e]
            out.append({"exp": list(e), "coeff": c if isinstance(c, int) else c.to_json()})
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                (v if x == 1 else f"{v}^{x}") for v, x in zip(self.variables, e) if x != 0
            )
            cs = str(c)
            if isinstance(c, CycScalar) and len([x for x in c.num if x]) > 1:
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentScalar({self})"


Q_VARS = ("q",)


def q_var(e: int = 1) -> LaurentScalar:
    """The generic monomial q^e."""
    return LaurentScalar(Q_VARS, {(e,): 1})


_ONE_Q = LaurentScalar(Q_VARS, {(0,): 1})


# ---------------------------------------------------------------------------
# quantum integers and binomials


@lru_cache(maxsize=None)
def _qbrace_gen(n: int) -> LaurentScalar:
    return LaurentScalar(Q_VARS, {(n,): 1, (-n,): -1}) if n else LaurentScalar(Q_VARS)


@lru_cache(maxsize=None)
def _qint_gen(n: int) -> LaurentScalar:
    return _qbrace_gen(n).exact_div(_qbrace_gen(1))


@lru_cache(maxsize=None)
def _qfact_gen(k: int) -> LaurentScalar:
    if k < 0:
        raise ValueError("factorial of a negative integer")
    out = _ONE_Q
    for i in range(1, k + 1):
        out = out * _qint_gen(i)
    return out


@lru_cache(maxsize=None)
def _qbinom_gen(k: int, l: int) -> LaurentScalar:
    if l < 0 or l > k:
        return LaurentScalar(Q_VARS)
    return _qfact_gen(k).exact_div(_qfact_gen(l) * _qfact_gen(k - l))


@lru_cache(maxsize=None)
def _qmultinom_gen(k: int, parts: tuple[int, ...]) -> LaurentScalar:
    if any(p < 0 for p in parts) or sum(parts) > k:
        return LaurentScalar(Q_VARS)
    den = _qfact_gen(k - sum(parts))
    for p in parts:
        den = den * _qfact_gen(p)
    return _qfact_gen(k).exact_div(den)


@lru_cache(maxsize=None)
def _qbrace_falling_gen(n: int, k: int) -> LaurentScalar:
    out = _ONE_Q
    for j in range(k):
        out = out * _qbrace_gen(n - j)
    return out


@lru_cache(maxsize=None)
def _specialize_cached(p: LaurentScalar, r: int) -> CycScalar:
    F = _field(r)
    acc = [0] * F.dim
    for (e,), c in p.terms.items():
        for i, v in enumerate(F.pow[e % r]):
            if v:
                acc[i] += c * v
    return CycScalar(r, acc)


def specialize(p: LaurentScalar, r: int) -> CycScalar:
    """Substitute q = zeta_r in a one-variable integer Laurent polynomial."""
    _check_r(r)
    if p.variables != Q_VARS:
        raise ValueError("specialize expects the generic-q ring")
    return _specialize_cached(p, r)


def _maybe(p: LaurentScalar, r: int | None):
    return p if r is None else specialize(p, r)


def qbrace(n: int, r: int | None = None):
    """{n} = q^n - q^{-n}."""
    return _maybe(_qbrace_gen(n), r)


def qint(n: int, r: int | None = None):
    """[n] = {n}/{1}."""
    return _maybe(_qint_gen(n), r)


def qfact(k: int, r: int | None = None):
    """[k]! = [1][2]...[k]."""
    return _maybe(_qfact_gen(k), r)


def qbinom(k: int, l: int, r: int | None = None):
    """Quantum binomial, computed in the generic ring and then specialized."""
    if k < 0:
        raise ValueError("binomial top argument must be nonnegative")
    return _maybe(_qbinom_gen(k, l), r)


def qmultinom(k: int, parts: Iterable[int], r: int | None = None):
    """[k]! / ([l_1]! ... [l_j]! [k - l_1 - ... - l_j]!)."""
    if k < 0:
        raise ValueError("multinomial top argument must be nonnegative")
    return _maybe(_qmultinom_gen(k, tuple(parts)), r)


def qbrace_falling(n: int, k: int, r: int | None = None):
    """{n;k} = {n}{n-1}...{n-k+1}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if r is not None:
        return _qbrace_falling_zeta(n % r, k, r)
    return _qbrace_falling_gen(n, k)


@lru_cache(maxsize=None)
def _qbrace_falling_zeta(n: int, k: int, r: int) -> CycScalar:
    # {n}_zeta only depends on n mod r
    out = _const(r, 1)
    for j in range(k):
        out = out * qbrace(n - j, r)
    return out


def gauss_sum(c: int, r: int) -> CycScalar:
    """G(c) = sum_{l=0}^{r-1} zeta^{-2l(l-1) + 4cl}."""
    _check_r(r)
    F = _field(r)
    acc = [0] * F.dim
    for l in range(r):
        for i, v in enumerate(F.pow[(-2 * l * (l - 1) + 4 * c * l) % r]):
            acc[i] += v
    return CycScalar(r, acc)


# ---------------------------------------------------------------------------
# suite


def _random_scalar(rng, r: int) -> CycScalar:
    dim = len(cyclotomic_polynomial(r)) - 1
    return CycScalar.from_coeffs(r, [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(dim)])


def murakami_sum(n: int, k: int) -> LaurentScalar:
    """sum_l (-1)^{k+l} [k choose l] q^{k(k-1)/2 - n(k-2l) - (k-1)l}."""
    out = LaurentScalar(Q_VARS)
    for l in range(k + 1):
        e = k * (k - 1) // 2 - n * (k - 2 * l) - (k - 1) * l
        out = out + qbinom(k, l) * q_var(e) * (-1) ** (k + l)
    return out


def scalars_suite(rs: Sequence[int] = (3, 5, 7, 9), samples: int = 200, seed: int = 0) -> Report:
    rep = Report("scalars", {"rs": list(rs), "samples": samples, "seed": seed})
    rep.add(check_all("cyclotomic polynomials", [
        (3, lambda: cyclotomic_polynomial(3) == (1, 1, 1)),
        (5, lambda: cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)),
        (9, lambda: cyclotomic_polynomial(9) == (1, 0, 0, 1, 0, 0, 1)),
    ]))
    rng = random.Random(seed)
    for r in rs:
        triples = [tuple(_random_scalar(rng, r) for _ in range(3)) for _ in range(samples)]
        rep.add(check_all(f"ring axioms, r={r}", (
            (i, lambda t=t: (t[0] * t[1]) * t[2] == t[0] * (t[1] * t[2])
             and t[0] * (t[1] + t[2]) == t[0] * t[1] + t[0] * t[2]
             and (t[0] + t[1]) + t[2] == t[0] + (t[1] + t[2])
             and t[0] * t[1] == t[1] * t[0])
            for i, t in enumerate(triples))))
        rep.add(check_all(f"a inv(a) = 1, r={r}", (
            (i, lambda a=t[0]: a.is_zero() or (a * a.inv()).is_one()) for i, t in enumerate(triples))))
        rep.add(check_all(f"zeta^r = 1 and the conjugation zeta -> zeta^-1, r={r}", [
            ("zeta^r", lambda r=r: zeta(r) ** r == 1),
            ("conj", lambda r=r: all(zeta(r, a).conj(r - 1) == zeta(r, -a) for a in range(r))),
            ("inv", lambda r=r: zeta(r).inv() == zeta(r, r - 1)),
        ]))
        if r in (3, 5, 7):
            rep.add(check_all(f"[k+l choose k] vanishes at zeta when k+l >= r, r={r}", (
                ((k, l), lambda k=k, l=l, r=r: qbinom(k + l, k, r).is_zero())
                for k in range(r) for l in range(r) if k + l >= r)))
            rep.add(check_all(f"[r-1 choose n] = (-1)^n at zeta, r={r}", (
                (n, lambda n=n, r=r: qbinom(r - 1, n, r) == (-1) ** n) for n in range(r))))
            rep.add(check_all(f"Gauss sum G(c) conj(G(c)) = r, r={r}", (
                (c, lambda c=c, r=r: gauss_sum(c, r) * gauss_sum(c, r).conj(r - 1) == r) for c in range(r))))
            rep.add(check_all(f"Gauss sum G(c) = zeta^{{2c(c+1)}} G(0), r={r}", (
                (c, lambda c=c, r=r: gauss_sum(c, r) == zeta(r, 2 * c * (c + 1)) * gauss_sum(0, r)) for c in range(r))))
            rep.add(check_all(f"specialize([r]) = 0, r={r}", [("r", lambda r=r: qint(r, r).is_zero())]))
    rep.add(check_all("Pascal identity", (
        ((k, l), lambda k=k, l=l: qbinom(k, l) == qbinom(k - 1, l - 1) * q_var(-k + l) + qbinom(k - 1, l) * q_var(l))
        for k in range(1, 9) for l in range(k + 1))))
    rep.add(check_all("Murakami formula for {n;k}", (
        ((n, k), lambda n=n, k=k: qbrace_falling(n, k) == murakami_sum(n, k))
        for n in range(-5, 6) for k in range(7))))
    rep.add(check_all("qbinom(4, 2) = q^4 + q^2 + 2 + q^-2 + q^-4", [
        ("4,2", lambda: qbinom(4, 2) == LaurentScalar(Q_VARS, {(4,): 1, (2,): 1, (0,): 2, (-2,): 1, (-4,): 1}))]))
    return rep

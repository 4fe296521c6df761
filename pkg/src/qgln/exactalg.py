"""Exact scalar arithmetic: Laurent polynomials, rational functions, q-integers.

Every scalar in the package lives in one ring

    QQ[q^{+-1}, L^{+-1}, lambda, t, mu]

where ``L`` stands for the formal weight exponential q^lambda.  ``q`` and
``L`` are Laurent variables; their exponents may even be rational numbers
(the Cartan bookkeeping of the eta-twisted module basis produces exponents
with denominator n+1, which cancel in every final result).  ``lambda``,
``t`` and ``mu`` are ordinary polynomial variables; division by them is
pushed to the RatFun level.  There is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Rat = Fraction

VARS = ("q", "L", "lambda", "t", "mu")
NVARS = len(VARS)
VAR_INDEX = {name: i for i, name in enumerate(VARS)}
# q and L admit negative / rational exponents, the rest do not.
LAURENT = (True, True, False, False, False)

ZERO_EXP = (0,) * NVARS


class DenominatorZero(ZeroDivisionError):
    """Raised when an exact evaluation hits a vanishing denominator."""


def _norm_exp(e):
    if isinstance(e, Fraction) and e.denominator == 1:
        return int(e)
    return e


def _norm_key(key) -> tuple:
    return tuple(_norm_exp(e) for e in key)


def _grlex(key) -> tuple:
    return (sum(key), key)


class MPoly:
    """Multivariate polynomial over QQ with Laurent exponents on q and L.

    Immutable by convention; ``terms`` maps exponent tuples to nonzero
    Fractions.  Two equal polynomials have identical stored form.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                if not coeff:
                    continue
                key = _norm_key(key)
                for i, e in enumerate(key):
                    if not LAURENT[i] and (e < 0 or isinstance(e, Fraction)):
                        raise ValueError(
                            "negative/fractional exponent on %s" % VARS[i]
                        )
                clean[key] = Fraction(coeff)
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, c) -> "MPoly":
        c = Fraction(c)
        return cls({ZERO_EXP: c}) if c else cls()

    @classmethod
    def var(cls, name: str, exp=1) -> "MPoly":
        i = VAR_INDEX[name]
        key = [0] * NVARS
        key[i] = _norm_exp(Fraction(exp))
        return cls({tuple(key): Fraction(1)})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ZERO_EXP in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def const_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return self.terms[ZERO_EXP]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "MPoly") -> "MPoly":
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        p = MPoly.__new__(MPoly)
        p.terms = out
        p._hash = None
        return p

    def __neg__(self) -> "MPoly":
        p = MPoly.__new__(MPoly)
        p.terms = {k: -c for k, c in self.terms.items()}
        p._hash = None
        return p

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other: "MPoly") -> "MPoly":
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = _norm_key(tuple(a + b for a, b in zip(k1, k2)))
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        p = MPoly.__new__(MPoly)
        p.terms = out
        p._hash = None
        return p

    def scale(self, c) -> "MPoly":
        c = Fraction(c)
        if not c:
            return MPoly()
        p = MPoly.__new__(MPoly)
        p.terms = {k: v * c for k, v in self.terms.items()}
        p._hash = None
        return p

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, MPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- structure ---------------------------------------------------------

    def leading_key(self) -> tuple:
        return max(self.terms, key=_grlex)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex(kv[0]), reverse=True)

    def content(self) -> Fraction:
        """Positive rational c with self/c integer-coefficient and coprime."""
        from math import gcd

        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den) if num else Fraction(1)

    def shift(self, key) -> "MPoly":
        key = tuple(key)
        p = MPoly.__new__(MPoly)
        p.terms = {
            _norm_key(tuple(a + b for a, b in zip(k, key))): c
            for k, c in self.terms.items()
        }
        p._hash = None
        return p

    def min_laurent_exponents(self) -> tuple:
        """Per-variable minimum exponent, zero for non-Laurent variables."""
        mins = None
        for key in self.terms:
            if mins is None:
                mins = [key[i] if LAURENT[i] else 0 for i in range(NVARS)]
            else:
                for i in range(NVARS):
                    if LAURENT[i] and key[i] < mins[i]:
                        mins[i] = key[i]
        return tuple(mins) if mins is not None else ZERO_EXP

    def try_div(self, divisor: "MPoly") -> "MPoly | None":
        """Exact quotient self/divisor in the Laurent ring, or None."""
        if divisor.is_zero():
            raise DenominatorZero("division by zero polynomial")
        if self.is_zero():
            return MPoly()
        if divisor.is_monomial():
            (dkey, dc), = divisor.terms.items()
            quot = {}
            for k, c in self.terms.items():
                key = _norm_key(tuple(a - b for a, b in zip(k, dkey)))
                for i, e in enumerate(key):
                    if not LAURENT[i] and e < 0:
                        return None
                quot[key] = c / dc
            return MPoly(quot)
        # Strip Laurent monomial content (a unit) from both sides, divide in
        # the ordinary polynomial ring where grlex exact division terminates,
        # then restore the shift.
        smin = self.min_laurent_exponents()
        dmin = divisor.min_laurent_exponents()
        num = self.shift(tuple(-a for a in smin)) if any(smin) else self
        den = divisor.shift(tuple(-a for a in dmin)) if any(dmin) else divisor
        dkey = den.leading_key()
        dc = den.terms[dkey]
        quot = {}
        rem = num
        while not rem.is_zero():
            rkey = rem.leading_key()
            qkey = _norm_key(tuple(a - b for a, b in zip(rkey, dkey)))
            if any(e < 0 for e in qkey):
                return None
            qc = rem.terms[rkey] / dc
            quot[qkey] = qc
            rem = rem - den.shift(qkey).scale(qc)
        back = tuple(a - b for a, b in zip(smin, dmin))
        out = MPoly(quot)
        return out.shift(back) if any(back) else out

    # -- evaluation --------------------------------------------------------

    def eval(self, assignment: Mapping[str, Fraction]) -> Fraction:
        vals = []
        for name in VARS:
            vals.append(Fraction(assignment[name]) if name in assignment else None)
        total = Fraction(0)
        for key, c in self.terms.items():
            term = c
            for i, e in enumerate(key):
                if e == 0:
                    continue
                v = vals[i]
                if v is None:
                    raise KeyError("missing value for %s" % VARS[i])
                if isinstance(e, Fraction):
                    raise ValueError("cannot evaluate fractional exponent exactly")
                if e < 0 and v == 0:
                    raise DenominatorZero("0 raised to negative power")
                term *= v ** e
            total += term
        return total

    def variables(self) -> set:
        used = set()
        for key in self.terms:
            for i, e in enumerate(key):
                if e != 0:
                    used.add(VARS[i])
        return used

    def __repr__(self):
        from .parse import render_mpoly

        return render_mpoly(self)


MP_ZERO = MPoly()
MP_ONE = MPoly.const(1)


class RatFun:
    """Rational function num/den over the common ring.

    The representation is normalized by clearing rational content, fixing a
    positive leading coefficient of the denominator and absorbing monomial
    or exactly-dividing denominators.  Equality is decided by
    cross-multiplication, so no multivariate gcd is ever required.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly = MP_ONE):
        if den.is_zero():
            raise DenominatorZero("zero denominator")
        if num.is_zero():
            self.num = MP_ZERO
            self.den = MP_ONE
            return
        if not den.is_const() or den.const_value() != 1:
            quot = num.try_div(den)
            if quot is not None:
                num, den = quot, MP_ONE
        if not (den.is_const() and den.const_value() == 1):
            # strip Laurent monomial content of the denominator (a unit)
            dmin = den.min_laurent_exponents()
            if any(dmin):
                sh = tuple(-a for a in dmin)
                den = den.shift(sh)
                num = num.shift(sh)
            # cancel shared ordinary-variable monomial content
            common = None
            for p in (num, den):
                mins = None
                for key in p.terms:
                    if mins is None:
                        mins = [0 if LAURENT[i] else key[i] for i in range(NVARS)]
                    else:
                        for i in range(NVARS):
                            if not LAURENT[i] and key[i] < mins[i]:
                                mins[i] = key[i]
                mins = mins or [0] * NVARS
                common = mins if common is None else [
                    min(a, b) for a, b in zip(common, mins)
                ]
            if common and any(common):
                sh = tuple(-a for a in common)
                num = num.shift(sh)
                den = den.shift(sh)
        if not (den.is_const() and den.const_value() == 1):
            c = den.content()
            if den.terms[den.leading_key()] < 0:
                c = -c
            if c != 1:
                den = den.scale(Fraction(1) / c)
                num = num.scale(Fraction(1) / c)
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, c) -> "RatFun":
        return cls(MPoly.const(c))

    @classmethod
    def var(cls, name: str, exp=1) -> "RatFun":
        if LAURENT[VAR_INDEX[name]]:
            return cls(MPoly.var(name, exp))
        if exp >= 0:
            return cls(MPoly.var(name, exp))
        return cls(MP_ONE, MPoly.var(name, -exp))

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    # -- field operations --------------------------------------------------

    def __add__(self, other: "RatFun") -> "RatFun":
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFun":
        out = RatFun.__new__(RatFun)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other: "RatFun") -> "RatFun":
        return self + (-other)

    def __mul__(self, other: "RatFun") -> "RatFun":
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        # cheap cross-cancellation keeps chained products small
        if not d2.is_const():
            q = n1.try_div(d2)
            if q is not None:
                n1, d2 = q, MP_ONE
        if not d1.is_const():
            q = n2.try_div(d1)
            if q is not None:
                n2, d1 = q, MP_ONE
        return RatFun(n1 * n2, d1 * d2)

    def inv(self) -> "RatFun":
        if self.is_zero():
            raise DenominatorZero("inverse of zero")
        return RatFun(self.den, self.num)

    def __truediv__(self, other: "RatFun") -> "RatFun":
        return self * other.inv()

    def __pow__(self, n: int) -> "RatFun":
        if n < 0:
            return self.inv() ** (-n)
        out = RF_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "RatFun":
        return RatFun(self.num.scale(c), self.den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    # RatFun representatives are not canonical, so no __hash__.
    __hash__ = None

    # -- evaluation --------------------------------------------------------

    def eval(self, assignment: Mapping[str, Fraction]) -> Fraction:
        den = self.den.eval(assignment)
        if den == 0:
            raise DenominatorZero("denominator vanishes at the given point")
        return self.num.eval(assignment) / den

    def __repr__(self):
        from .parse import render_ratfun

        return render_ratfun(self)


RF_ZERO = RatFun(MP_ZERO)
RF_ONE = RatFun(MP_ONE)


def rf(c) -> RatFun:
    """Rational constant as a RatFun."""
    return RatFun.const(c)


def q_pow(exp) -> RatFun:
    return RatFun(MPoly.var("q", exp)) if exp else RF_ONE


def L_pow(exp) -> RatFun:
    return RatFun(MPoly.var("L", exp)) if exp else RF_ONE


def var(name: str, exp=1) -> RatFun:
    return RatFun.var(name, exp)


def eval_ratfun(f: RatFun, assignment: Mapping[str, Fraction]) -> Fraction:
    return f.eval(assignment)


# -- q-combinatorics --------------------------------------------------------


def qint(k: int) -> RatFun:
    """Symmetric q-integer [k] = (q^k - q^{-k})/(q - q^{-1}); [-k] = -[k]."""
    if k == 0:
        return RF_ZERO
    sign = 1 if k > 0 else -1
    k = abs(k)
    terms = {}
    for i in range(k):
        e = [0] * NVARS
        e[0] = k - 1 - 2 * i
        terms[tuple(e)] = Fraction(sign)
    return RatFun(MPoly(terms))


def qhat(k: int) -> RatFun:
    """One-sided q-integer q^{k-1}[k] = 1 + q^2 + ... + q^{2(k-1)}."""
    if k < 0:
        raise ValueError("qhat needs k >= 0")
    terms = {}
    for i in range(k):
        e = [0] * NVARS
        e[0] = 2 * i
        terms[tuple(e)] = Fraction(1)
    return RatFun(MPoly(terms))


def qfact(k: int) -> RatFun:
    """q-factorial [k]! = [1][2]...[k]."""
    if k < 0:
        raise ValueError("qfact needs k >= 0")
    out = RF_ONE
    for j in range(1, k + 1):
        out = out * qint(j)
    return out


def qhatfact(k: int) -> RatFun:
    """One-sided q-factorial; equals q^{k(k-1)/2} [k]!."""
    if k < 0:
        raise ValueError("qhatfact needs k >= 0")
    out = RF_ONE
    for j in range(1, k + 1):
        out = out * qhat(j)
    return out


def qbracket_weight(j: int) -> RatFun:
    """The bracket [lambda - j] rendered with L = q^lambda:
    (L q^{-j} - L^{-1} q^{j}) / (q - q^{-1})."""
    num = {}
    e = [0] * NVARS
    e[0], e[1] = -j, 1
    num[tuple(e)] = Fraction(1)
    e = [0] * NVARS
    e[0], e[1] = j, -1
    num[tuple(e)] = Fraction(-1)
    den = {}
    e = [0] * NVARS
    e[0] = 1
    den[tuple(e)] = Fraction(1)
    e = [0] * NVARS
    e[0] = -1
    den[tuple(e)] = Fraction(-1)
    return RatFun(MPoly(num), MPoly(den))


def zq(m: int, shift: int = 0) -> RatFun:
    """[m] [z - m + 1] with z = lambda - shift, both encoded through L."""
    if m < 0:
        raise ValueError("zq needs m >= 0")
    if m == 0:
        return RF_ZERO
    return qint(m) * qbracket_weight(shift + m - 1)

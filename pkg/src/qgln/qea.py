"""The quantized enveloping algebra of gl(n+1) as a concrete rewriting algebra.

Elements are canonical linear combinations of PBW normal monomials

    f-part (descending root order) * Cartan exponential * e-part (ascending),

stored as ``(ftuple, weight, etuple) -> RatFun``.  Multiplication rewrites
products into this basis with three memoized straightening engines: pure
e-words, pure f-words, and the e-past-f cross moves, whose commutators are
derived mechanically by recursion on root height from the simple-generator
relations alone.  Root vectors, the involution omega, the antipode and the
coproduct on generators are built on top.

All values are immutable after construction.  The per-rank caches are filled
lazily; concurrent reads after a warm-up are safe, and a cold concurrent
start merely recomputes idempotent entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import RF_ONE, RF_ZERO, RatFun, q_pow, rf
from .roots import (
    Root,
    eps1_pairing,
    height,
    inner,
    is_root,
    normalize_weight,
    positive_roots,
    root_weight,
    simple,
    wadd,
    wneg,
    wzero,
)


class RankError(ValueError):
    """A root or weight does not fit the rank of the algebra."""


# -- expression trees --------------------------------------------------------


@dataclass(frozen=True)
class EGen:
    i: int
    j: int


@dataclass(frozen=True)
class FGen:
    i: int
    j: int


@dataclass(frozen=True)
class TEGen:
    i: int
    j: int


@dataclass(frozen=True)
class KGen:
    coords: tuple


@dataclass(frozen=True)
class Scalar:
    value: RatFun


@dataclass(frozen=True)
class Sum:
    items: tuple


@dataclass(frozen=True)
class Prod:
    items: tuple


@dataclass(frozen=True)
class QBr:
    """Quasi-commutator [x, y]_a = x y - a y x."""

    x: object
    y: object
    a: RatFun


def root_e(mu: Root):
    """Nested bracket expression for the raising root vector of mu."""
    i, j = mu
    expr = EGen(j - 1, j)
    for s in range(j - 2, i - 1, -1):
        expr = QBr(EGen(s, s + 1), expr, q_pow(1))
    return expr


def root_e_tilde(mu: Root):
    """The antipode-twin raising vector: q^{2(h-1)} times the qbar-nested bracket."""
    i, j = mu
    expr = EGen(j - 1, j)
    for s in range(j - 2, i - 1, -1):
        expr = QBr(EGen(s, s + 1), expr, q_pow(-1))
    h = height(mu)
    if h == 1:
        return expr
    return Prod((Scalar(q_pow(2 * (h - 1))), expr))


def root_f(mu: Root):
    """Nested bracket expression for the lowering root vector of mu."""
    i, j = mu
    expr = FGen(i, i + 1)
    for s in range(i + 1, j):
        expr = QBr(FGen(s, s + 1), expr, q_pow(-1))
    return expr


# -- elements ----------------------------------------------------------------


class AlgElt:
    """Canonical linear combination of PBW normal monomials."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: "Algebra", terms: dict):
        self.alg = alg
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "AlgElt") -> "AlgElt":
        assert self.alg is other.alg
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            out[k] = c if s is None else s + c
        return AlgElt(self.alg, out)

    def __neg__(self) -> "AlgElt":
        return AlgElt(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "AlgElt") -> "AlgElt":
        return self + (-other)

    def scale(self, c: RatFun) -> "AlgElt":
        if c.is_zero():
            return AlgElt(self.alg, {})
        return AlgElt(self.alg, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: "AlgElt") -> "AlgElt":
        assert self.alg is other.alg
        alg = self.alg
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c = c1 * c2
                for k, c3 in alg.mono_mul(k1, k2).items():
                    s = out.get(k)
                    v = c * c3
                    out[k] = v if s is None else s + v
        return AlgElt(alg, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgElt):
            return NotImplemented
        if self.alg is not other.alg:
            return False
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _term_sort_key(kv[0]))

    def to_json_obj(self) -> list:
        from .parse import render_ratfun

        out = []
        for (f, w, e), c in self.sorted_terms():
            out.append(
                {
                    "f": [[r[0], r[1], m] for r, m in _group(f)],
                    "k": [str(Fraction(x)) for x in w],
                    "e": [[r[0], r[1], m] for r, m in _group(e)],
                    "coeff": render_ratfun(c),
                }
            )
        return out

    def __repr__(self):
        from .parse import render_algelt

        return render_algelt(self)


def _group(word):
    out = []
    for r in word:
        if out and out[-1][0] == r:
            out[-1][1] += 1
        else:
            out.append([r, 1])
    return [(r, m) for r, m in out]


def _term_sort_key(key):
    f, w, e = key
    return (len(f), f, tuple(Fraction(x) for x in w), len(e), e)


def qbr(x: AlgElt, y: AlgElt, a: RatFun) -> AlgElt:
    """[x, y]_a = x y - a y x."""
    return x * y - (y * x).scale(a)


class TensorElt:
    """Element of the twofold tensor product, multiplied componentwise."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: "Algebra", terms: dict):
        self.alg = alg
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    @classmethod
    def tensor(cls, a: AlgElt, b: AlgElt) -> "TensorElt":
        assert a.alg is b.alg
        out = {}
        for k1, c1 in a.terms.items():
            for k2, c2 in b.terms.items():
                out[(k1, k2)] = c1 * c2
        return cls(a.alg, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TensorElt") -> "TensorElt":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            out[k] = c if s is None else s + c
        return TensorElt(self.alg, out)

    def __neg__(self) -> "TensorElt":
        return TensorElt(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorElt") -> "TensorElt":
        return self + (-other)

    def scale(self, c: RatFun) -> "TensorElt":
        if c.is_zero():
            return TensorElt(self.alg, {})
        return TensorElt(self.alg, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: "TensorElt") -> "TensorElt":
        alg = self.alg
        out = {}
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                c = c1 * c2
                for kl, cl in alg.mono_mul(l1, l2).items():
                    ccl = c * cl
                    for kr, cr in alg.mono_mul(r1, r2).items():
                        k = (kl, kr)
                        v = ccl * cr
                        s = out.get(k)
                        out[k] = v if s is None else s + v
        return TensorElt(alg, out)

    def __pow__(self, m: int) -> "TensorElt":
        if m < 0:
            raise ValueError("negative tensor power")
        out = self.alg.tensor_unit()
        for _ in range(m):
            out = out * self
        return out

    def map_components(self, fn_left, fn_right) -> "TensorElt":
        out = TensorElt(self.alg, {})
        for (l, r), c in self.terms.items():
            a = fn_left(AlgElt(self.alg, {l: RF_ONE}))
            b = fn_right(AlgElt(self.alg, {r: RF_ONE}))
            out = out + TensorElt.tensor(a, b).scale(c)
        return out

    def multiply_components(self) -> AlgElt:
        out = AlgElt(self.alg, {})
        for (l, r), c in self.terms.items():
            out = out + (
                AlgElt(self.alg, {l: RF_ONE}) * AlgElt(self.alg, {r: RF_ONE})
            ).scale(c)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElt):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None


# -- the algebra -------------------------------------------------------------


class Algebra:
    """U_q of gl(n+1), rank parameter n >= 1.

    Instances are unique per rank so that elements of equal rank always
    share one straightening cache.
    """

    _instances: dict = {}

    def __new__(cls, n: int):
        if not isinstance(n, int) or n < 1:
            raise RankError("rank must be a positive integer")
        if n not in cls._instances:
            cls._instances[n] = super().__new__(cls)
        return cls._instances[n]

    def __init__(self, n: int):
        if getattr(self, "_initialized", False):
            return
        self._initialized = True
        self.n = n
        self.roots = positive_roots(n)
        self._w0 = wzero(n)
        self._rweight = {mu: root_weight(mu, n) for mu in self.roots}
        self._cross = {}
        self._cross_busy = set()
        self._ef1 = {}
        self._ef = {}
        self._ee = {}
        self._ff = {}
        self._gamma_e = {}
        self._gamma_f = {}
        self._etilde = {}

    # -- element constructors ------------------------------------------

    def check_root(self, mu) -> Root:
        mu = tuple(mu)
        if not is_root(mu, self.n):
            raise RankError("%r is not a positive root for rank %d" % (mu, self.n))
        return mu

    def zero(self) -> AlgElt:
        return AlgElt(self, {})

    def one(self) -> AlgElt:
        return self.mono()

    def scalar(self, c: RatFun) -> AlgElt:
        return self.mono(coeff=c)

    def mono(self, f=(), k=None, e=(), coeff: RatFun = RF_ONE) -> AlgElt:
        w = self._w0 if k is None else normalize_weight(k)
        if len(w) != self.n:
            raise RankError("weight has %d coordinates, expected %d" % (len(w), self.n))
        return AlgElt(self, {(tuple(f), w, tuple(e)): coeff})

    def e(self, i, j=None) -> AlgElt:
        mu = self.check_root((i, j) if j is not None else i)
        return self.mono(e=(mu,))

    def f(self, i, j=None) -> AlgElt:
        mu = self.check_root((i, j) if j is not None else i)
        return self.mono(f=(mu,))

    def k(self, coords) -> AlgElt:
        return self.mono(k=coords)

    def k_root(self, mu, sign=1) -> AlgElt:
        """The Cartan exponential q^{sign * h_mu}."""
        mu = self.check_root(mu)
        w = self._rweight[mu]
        return self.mono(k=w if sign > 0 else wneg(w))

    def e_tilde(self, mu) -> AlgElt:
        mu = self.check_root(mu)
        if mu not in self._etilde:
            self._etilde[mu] = self.evaluate(root_e_tilde(mu))
        return self._etilde[mu]

    def tensor_unit(self) -> TensorElt:
        key = ((), self._w0, ())
        return TensorElt(self, {(key, key): RF_ONE})

    def tensor(self, a: AlgElt, b: AlgElt) -> TensorElt:
        return TensorElt.tensor(a, b)

    # -- straightening rules ---------------------------------------------

    def _ee_rule(self, nu: Root, mu: Root):
        """Rewrite the out-of-order pair e_nu e_mu (nu > mu lexicographically)."""
        if mu[0] == nu[0] or mu[1] == nu[1]:
            return ((q_pow(1), (mu, nu)),)
        if nu[0] > mu[1]:
            return ((RF_ONE, (mu, nu)),)
        if nu[0] == mu[1]:
            return (
                (q_pow(-1), (mu, nu)),
                (q_pow(-1).scale(-1), ((mu[0], nu[1]),)),
            )
        if nu[1] < mu[1]:
            return ((RF_ONE, (mu, nu)),)
        return (
            (RF_ONE, (mu, nu)),
            (q_pow(1) - q_pow(-1), ((mu[0], nu[1]), (nu[0], mu[1]))),
        )

    def _ff_rule(self, mu: Root, nu: Root):
        """Rewrite the out-of-order pair f_mu f_nu (mu < nu lexicographically)."""
        if mu[0] == nu[0] or mu[1] == nu[1]:
            return ((q_pow(-1), (nu, mu)),)
        if nu[0] > mu[1]:
            return ((RF_ONE, (nu, mu)),)
        if nu[0] == mu[1]:
            return (
                (q_pow(1), (nu, mu)),
                (q_pow(1).scale(-1), ((mu[0], nu[1]),)),
            )
        if nu[1] < mu[1]:
            return ((RF_ONE, (nu, mu)),)
        return (
            (RF_ONE, (nu, mu)),
            ((q_pow(1) - q_pow(-1)).scale(-1), ((nu[0], mu[1]), (mu[0], nu[1]))),
        )

    def ee_merge(self, w1: tuple, w2: tuple) -> dict:
        """Normal form of the concatenated e-word w1 w2."""
        if not w1:
            return {w2: RF_ONE}
        if not w2:
            return {w1: RF_ONE}
        key = (w1, w2)
        hit = self._ee.get(key)
        if hit is not None:
            return hit
        out = {}
        stack = [(RF_ONE, w1 + w2)]
        while stack:
            c, w = stack.pop()
            for i in range(len(w) - 1):
                if w[i] > w[i + 1]:
                    for c2, seg in self._ee_rule(w[i], w[i + 1]):
                        stack.append((c * c2, w[:i] + seg + w[i + 2 :]))
                    break
            else:
                s = out.get(w)
                out[w] = c if s is None else s + c
        out = {w: c for w, c in out.items() if not c.is_zero()}
        self._ee[key] = out
        return out

    def ff_merge(self, w1: tuple, w2: tuple) -> dict:
        """Normal form of the concatenated f-word w1 w2."""
        if not w1:
            return {w2: RF_ONE}
        if not w2:
            return {w1: RF_ONE}
        key = (w1, w2)
        hit = self._ff.get(key)
        if hit is not None:
            return hit
        out = {}
        stack = [(RF_ONE, w1 + w2)]
        while stack:
            c, w = stack.pop()
            for i in range(len(w) - 1):
                if w[i] < w[i + 1]:
                    for c2, seg in self._ff_rule(w[i], w[i + 1]):
                        stack.append((c * c2, w[:i] + seg + w[i + 2 :]))
                    break
            else:
                s = out.get(w)
                out[w] = c if s is None else s + c
        out = {w: c for w, c in out.items() if not c.is_zero()}
        self._ff[key] = out
        return out

    # -- cross commutators -------------------------------------------------

    def cross(self, mu: Root, nu: Root) -> AlgElt:
        """The commutator [e_mu, f_nu] in normal form, derived mechanically."""
        mu = self.check_root(mu)
        nu = self.check_root(nu)
        key = (mu, nu)
        hit = self._cross.get(key)
        if hit is not None:
            return hit
        assert key not in self._cross_busy, "cross-table recursion cycle"
        self._cross_busy.add(key)
        try:
            if height(mu) == 1 and height(nu) == 1:
                if mu != nu:
                    out = self.zero()
                else:
                    w = self._rweight[mu]
                    d = (q_pow(1) - q_pow(-1)).inv()
                    out = AlgElt(
                        self, {((), w, ()): d, ((), wneg(w), ()): -d}
                    )
            elif height(mu) > 1:
                a = simple(mu[0])
                b = (mu[0] + 1, mu[1])
                fnu = self.mono(f=(nu,))
                t1 = self.mono(e=(a,)) * (self.mono(e=(b,)) * fnu)
                t2 = self.mono(e=(b,)) * (self.mono(e=(a,)) * fnu)
                out = t1 - t2.scale(q_pow(1)) - self.mono(f=(nu,), e=(mu,))
            else:
                c = simple(nu[1] - 1)
                d = (nu[0], nu[1] - 1)
                emu = self.mono(e=(mu,))
                t1 = (emu * self.mono(f=(c,))) * self.mono(f=(d,))
                t2 = (emu * self.mono(f=(d,))) * self.mono(f=(c,))
                out = t1 - t2.scale(q_pow(-1)) - self.mono(f=(nu,), e=(mu,))
        finally:
            self._cross_busy.discard(key)
        self._cross[key] = out
        return out

    def cross_table(self) -> dict:
        """Full table of [e_mu, f_nu] over all pairs of positive roots."""
        return {
            (mu, nu): self.cross(mu, nu)
            for mu in self.roots
            for nu in self.roots
        }

    # -- the e-past-f engine -------------------------------------------

    def _word_weight(self, word: tuple) -> tuple:
        w = self._w0
        for r in word:
            w = wadd(w, self._rweight[r])
        return w

    def ef_single(self, eps: Root, fword: tuple) -> dict:
        """Normal form of e_eps * (f-word)."""
        if not fword:
            return {((), self._w0, (eps,)): RF_ONE}
        key = (eps, fword)
        hit = self._ef1.get(key)
        if hit is not None:
            return hit
        phi, rest = fword[0], fword[1:]
        out = {}

        def put(k, c):
            s = out.get(k)
            out[k] = c if s is None else s + c

        for (f2, w2, e2), c in self.ef_single(eps, rest).items():
            for f3, c3 in self.ff_merge((phi,), f2).items():
                put((f3, w2, e2), c * c3)
        for (fx, wx, ex), cx in self.cross(eps, phi).terms.items():
            for (f4, w4, e4), c4 in self.ef(ex, rest).items():
                s = q_pow(-inner(wx, self._word_weight(f4)))
                cc = cx * c4 * s
                for f5, c5 in self.ff_merge(fx, f4).items():
                    put((f5, wadd(wx, w4), e4), cc * c5)
        out = {k: c for k, c in out.items() if not c.is_zero()}
        self._ef1[key] = out
        return out

    def ef(self, eword: tuple, fword: tuple) -> dict:
        """Normal form of (e-word) * (f-word)."""
        if not eword:
            return {(fword, self._w0, ()): RF_ONE}
        if not fword:
            return {((), self._w0, eword): RF_ONE}
        key = (eword, fword)
        hit = self._ef.get(key)
        if hit is not None:
            return hit
        eps, rest = eword[-1], eword[:-1]
        out = {}
        for (f1, w1, e1), c1 in self.ef_single(eps, fword).items():
            for (f2, w2, e2), c2 in self.ef(rest, f1).items():
                s = q_pow(-inner(w1, self._word_weight(e2)))
                cc = c1 * c2 * s
                for e3, c3 in self.ee_merge(e2, e1).items():
                    k = (f2, wadd(w2, w1), e3)
                    v = cc * c3
                    sme = out.get(k)
                    out[k] = v if sme is None else sme + v
        out = {k: c for k, c in out.items() if not c.is_zero()}
        self._ef[key] = out
        return out

    def mono_mul(self, m1: tuple, m2: tuple) -> dict:
        """Product of two normal monomials, as a dict of normal monomials."""
        f1, w1, e1 = m1
        f2, w2, e2 = m2
        if not e1 and not f2:
            # the junction is already normal; just merge the Cartan parts
            return {(f1, wadd(w1, w2), e2): RF_ONE}
        out = {}
        for (fc, wc, ec), c in self.ef(e1, f2).items():
            s = c
            if any(w1):
                s = s * q_pow(-inner(w1, self._word_weight(fc)))
            if any(w2):
                s = s * q_pow(-inner(w2, self._word_weight(ec)))
            w = wadd(wadd(w1, wc), w2)
            for fa, ca in self.ff_merge(f1, fc).items():
                cca = s * ca
                for ea, cb in self.ee_merge(ec, e2).items():
                    k = (fa, w, ea)
                    v = cca * cb
                    prev = out.get(k)
                    out[k] = v if prev is None else prev + v
        return {k: c for k, c in out.items() if not c.is_zero()}

    # -- expression evaluation -------------------------------------------

    def evaluate(self, expr) -> AlgElt:
        if isinstance(expr, AlgElt):
            return expr
        if isinstance(expr, Scalar):
            return self.scalar(expr.value)
        if isinstance(expr, EGen):
            return self.e((expr.i, expr.j))
        if isinstance(expr, FGen):
            return self.f((expr.i, expr.j))
        if isinstance(expr, TEGen):
            return self.e_tilde((expr.i, expr.j))
        if isinstance(expr, KGen):
            return self.k(expr.coords)
        if isinstance(expr, Sum):
            out = self.zero()
            for item in expr.items:
                out = out + self.evaluate(item)
            return out
        if isinstance(expr, Prod):
            out = self.one()
            for item in expr.items:
                out = out * self.evaluate(item)
            return out
        if isinstance(expr, QBr):
            if expr.a.is_zero():
                raise ValueError("quasi-commutator needs a nonzero scalar")
            return qbr(self.evaluate(expr.x), self.evaluate(expr.y), expr.a)
        raise TypeError("not an algebra expression: %r" % (expr,))

    # -- (anti)automorphisms ----------------------------------------------

    def omega(self, x: AlgElt) -> AlgElt:
        """The involution exchanging e_alpha with -f_alpha and negating h."""
        out = self.zero()
        for (f, w, e), c in x.terms.items():
            elt = self.scalar(c)
            for nu in f:
                elt = elt * self.mono(e=(nu,), coeff=q_pow(1 - height(nu)).scale(-1))
            if any(w):
                elt = elt * self.mono(k=wneg(w))
            for mu in e:
                elt = elt * self.mono(f=(mu,), coeff=q_pow(height(mu) - 1).scale(-1))
            out = out + elt
        return out

    def _gamma_e_letter(self, mu: Root) -> AlgElt:
        hit = self._gamma_e.get(mu)
        if hit is not None:
            return hit
        if height(mu) == 1:
            w = self._rweight[mu]
            out = AlgElt(self, {((), wneg(w), (mu,)): RF_ONE.scale(-1)})
        else:
            a = simple(mu[0])
            b = (mu[0] + 1, mu[1])
            ga, gb = self._gamma_e_letter(a), self._gamma_e_letter(b)
            out = gb * ga - (ga * gb).scale(q_pow(1))
        self._gamma_e[mu] = out
        return out

    def _gamma_f_letter(self, nu: Root) -> AlgElt:
        hit = self._gamma_f.get(nu)
        if hit is not None:
            return hit
        if height(nu) == 1:
            w = self._rweight[nu]
            out = AlgElt(self, {((nu,), w, ()): RF_ONE.scale(-1)})
        else:
            c = simple(nu[1] - 1)
            d = (nu[0], nu[1] - 1)
            gc, gd = self._gamma_f_letter(c), self._gamma_f_letter(d)
            out = gd * gc - (gc * gd).scale(q_pow(-1))
        self._gamma_f[nu] = out
        return out

    def antipode(self, x: AlgElt) -> AlgElt:
        """The antipode gamma, anti-multiplicative on PBW words."""
        out = self.zero()
        for (f, w, e), c in x.terms.items():
            elt = self.scalar(c)
            for mu in reversed(e):
                elt = elt * self._gamma_e_letter(mu)
            if any(w):
                elt = elt * self.mono(k=wneg(w))
            for nu in reversed(f):
                elt = elt * self._gamma_f_letter(nu)
            out = out + elt
        return out

    def counit(self, x: AlgElt) -> RatFun:
        out = RF_ZERO
        for (f, w, e), c in x.terms.items():
            if not f and not e:
                out = out + c
        return out

    # -- coproduct on generator letters ------------------------------------

    def coproduct_letter(self, kind: str, arg) -> TensorElt:
        """Coproduct of a simple generator ('e' or 'f') or Cartan weight ('k')."""
        if kind == "k":
            key = ((), normalize_weight(arg), ())
            return TensorElt(self, {(key, key): RF_ONE})
        mu = self.check_root(arg)
        if height(mu) != 1:
            raise ValueError("coproduct letters must be simple generators")
        w = self._rweight[mu]
        unit = ((), self._w0, ())
        if kind == "e":
            ek = ((), self._w0, (mu,))
            kk = ((), w, ())
            return TensorElt(self, {(ek, unit): RF_ONE, (kk, ek): RF_ONE})
        if kind == "f":
            fk = ((mu,), self._w0, ())
            kinv = ((), wneg(w), ())
            return TensorElt(self, {(fk, kinv): RF_ONE, (unit, fk): RF_ONE})
        raise ValueError("unknown generator kind %r" % kind)

    def coproduct_word(self, letters) -> TensorElt:
        out = self.tensor_unit()
        for kind, arg in letters:
            out = out * self.coproduct_letter(kind, arg)
        return out

    # -- misc ---------------------------------------------------------------

    def term_weight(self, key) -> tuple:
        f, w, e = key
        out = self._w0
        for mu in e:
            out = wadd(out, self._rweight[mu])
        for nu in f:
            out = wadd(out, wneg(self._rweight[nu]))
        return out

    def character_exponent(self, w: tuple):
        return eps1_pairing(w)

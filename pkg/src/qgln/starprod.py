"""Invariant star products on the big cell of GL(n+1)/GL(n)xGL(1).

Four layers live here: exact polynomial differential operators on the chart
coordinates, the classical invariant star product and the realized gl(n+1)
vector fields, formal operator series in one tensor symbol (the deformed
series against its delation-invariant counterpart), and the quantum twist
element in the twofold tensor product together with its inverse-pairing
property.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product as iproduct

from .exactalg import (
    MP_ONE,
    MPoly,
    RF_ONE,
    RF_ZERO,
    RatFun,
    VAR_INDEX,
    q_pow,
    qfact,
    qhatfact,
    rf,
    var,
)
from .qea import AlgElt, Algebra, TensorElt
from .verma import (
    VermaVector,
    _pair_monomials,
    _x_word,
    act,
    closed_form_coeff,
    context,
    eta_compute,
    exponent_vectors,
    plane_tensor,
)


# -- chart polynomials and differential operators -----------------------------


class ChartRing:
    """Polynomial coordinates zt1..ztn (row) and om1..omn (column) on the
    cell, with RatFun coefficients."""

    _instances: dict = {}

    def __new__(cls, n: int):
        if n not in cls._instances:
            cls._instances[n] = super().__new__(cls)
        return cls._instances[n]

    def __init__(self, n: int):
        if getattr(self, "_initialized", False):
            return
        self._initialized = True
        if n < 1:
            raise ValueError("rank must be positive")
        self.n = n
        self.names = tuple(
            ["zt%d" % i for i in range(1, n + 1)]
            + ["om%d" % i for i in range(1, n + 1)]
        )
        self.index = {name: i for i, name in enumerate(self.names)}
        self.zero_key = (0,) * (2 * n)

    def zero(self) -> "ChartPoly":
        return ChartPoly(self, {})

    def const(self, c: RatFun) -> "ChartPoly":
        return ChartPoly(self, {self.zero_key: c})

    def one(self) -> "ChartPoly":
        return self.const(RF_ONE)

    def gen(self, name_or_index) -> "ChartPoly":
        i = self.index[name_or_index] if isinstance(name_or_index, str) else name_or_index
        key = [0] * (2 * self.n)
        key[i] = 1
        return ChartPoly(self, {tuple(key): RF_ONE})

    def zt(self, i: int) -> "ChartPoly":
        return self.gen(i - 1)

    def om(self, i: int) -> "ChartPoly":
        return self.gen(self.n + i - 1)


class ChartPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: ChartRing, terms: dict):
        self.ring = ring
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "ChartPoly") -> "ChartPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            out[k] = c if s is None else s + c
        return ChartPoly(self.ring, out)

    def __neg__(self) -> "ChartPoly":
        return ChartPoly(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "ChartPoly") -> "ChartPoly":
        return self + (-other)

    def __mul__(self, other: "ChartPoly") -> "ChartPoly":
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                v = c1 * c2
                s = out.get(k)
                out[k] = v if s is None else s + v
        return ChartPoly(self.ring, out)

    def __pow__(self, m: int) -> "ChartPoly":
        if m < 0:
            raise ValueError("negative power of a chart polynomial")
        out = self.ring.one()
        for _ in range(m):
            out = out * self
        return out

    def scale(self, c: RatFun) -> "ChartPoly":
        if c.is_zero():
            return self.ring.zero()
        return ChartPoly(self.ring, {k: v * c for k, v in self.terms.items()})

    def scale_div(self, other: "ChartPoly") -> "ChartPoly":
        if list(other.terms.keys()) not in ([], [self.ring.zero_key]):
            raise ValueError("can only divide by scalar chart polynomials")
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        return self.scale(other.terms[self.ring.zero_key].inv())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChartPoly):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None

    def diff(self, i: int) -> "ChartPoly":
        out = {}
        for k, c in self.terms.items():
            if k[i]:
                key = list(k)
                key[i] -= 1
                out[tuple(key)] = c.scale(k[i])
        return ChartPoly(self.ring, out)

    def diff_multi(self, alpha) -> "ChartPoly":
        out = self
        for i, a in enumerate(alpha):
            for _ in range(a):
                out = out.diff(i)
                if out.is_zero():
                    return out
        return out

    def zeta_degree(self) -> int:
        n = self.ring.n
        return max((sum(k[:n]) for k in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def __repr__(self):
        from .parse import render_chartpoly

        return render_chartpoly(self)


class DiffOp:
    """Finite sum of chart-polynomial coefficients times partial derivatives."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: ChartRing, terms: dict):
        self.ring = ring
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    @classmethod
    def zero(cls, ring: ChartRing) -> "DiffOp":
        return cls(ring, {})

    @classmethod
    def partial(cls, ring: ChartRing, i: int, coeff: ChartPoly | None = None) -> "DiffOp":
        key = [0] * (2 * ring.n)
        key[i] = 1
        return cls(ring, {tuple(key): coeff if coeff is not None else ring.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "DiffOp") -> "DiffOp":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            out[k] = c if s is None else s + c
        return DiffOp(self.ring, out)

    def __neg__(self) -> "DiffOp":
        return DiffOp(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return self + (-other)

    def scale(self, c: RatFun) -> "DiffOp":
        return DiffOp(self.ring, {k: v.scale(c) for k, v in self.terms.items()})

    def mul_poly(self, p: ChartPoly) -> "DiffOp":
        return DiffOp(self.ring, {k: p * v for k, v in self.terms.items()})

    def apply(self, f: ChartPoly) -> ChartPoly:
        out = self.ring.zero()
        for alpha, c in self.terms.items():
            d = f.diff_multi(alpha)
            if not d.is_zero():
                out = out + c * d
        return out

    def compose(self, other: "DiffOp") -> "DiffOp":
        """Operator composition self after other, by the Leibniz rule."""
        out = {}
        for alpha, ca in self.terms.items():
            for beta, cb in other.terms.items():
                ranges = [range(a + 1) for a in alpha]
                for gamma in iproduct(*ranges):
                    dcb = cb.diff_multi(gamma)
                    if dcb.is_zero():
                        continue
                    mult = 1
                    for a, g in zip(alpha, gamma):
                        mult *= math.comb(a, g)
                    key = tuple(a - g + b for a, g, b in zip(alpha, gamma, beta))
                    v = (ca * dcb).scale(mult)
                    s = out.get(key)
                    out[key] = v if s is None else s + v
        return DiffOp(self.ring, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffOp):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None


def vf_x(ring: ChartRing, i: int) -> DiffOp:
    """The raising leg: plain d/dzt_i."""
    return DiffOp.partial(ring, i - 1)

def euler_zeta(ring: ChartRing) -> DiffOp:
    out = DiffOp.zero(ring)
    for k in range(1, ring.n + 1):
        out = out + DiffOp.partial(ring, k - 1, ring.zt(k))
    return out


def vf_y(ring: ChartRing, i: int) -> DiffOp:
    """The lowering leg: d/dom_i + zt_i sum_k zt_k d/dzt_k."""
    return DiffOp.partial(ring, ring.n + i - 1) + euler_zeta(ring).mul_poly(ring.zt(i))


def _shift_table(g: ChartPoly, depth: int) -> dict:
    """Taylor table of the lowering flow.

    The joint lowering exponential moves the cell point by
    zt -> (1 + (zt, S)) zt and om -> om + S / (1 + (zt, S)); the table maps
    each multi-index m with |m| <= depth to the S^m coefficient of
    g(shifted point).  The lowering-word operator value is prod m_i! times
    that coefficient."""
    ring = g.ring
    n = ring.n
    zero_s = (0,) * n

    def smul(p1: dict, p2: dict) -> dict:
        out = {}
        for k1, c1 in p1.items():
            d1 = sum(k1)
            for k2, c2 in p2.items():
                if d1 + sum(k2) > depth:
                    continue
                k = tuple(a + b for a, b in zip(k1, k2))
                v = c1 * c2
                s = out.get(k)
                out[k] = v if s is None else s + v
        return {k: c for k, c in out.items() if not c.is_zero()}

    # powers of u = sum zt_j S_j as S-polynomials with chart coefficients
    u = {}
    for j in range(n):
        key = [0] * n
        key[j] = 1
        u[tuple(key)] = ring.zt(j + 1)
    u_pow = [{zero_s: ring.one()}]
    for _ in range(depth):
        u_pow.append(smul(u_pow[-1], u))

    def one_plus_u_pow(e: int, cap: int) -> dict:
        out = {}
        if e >= 0:
            top = min(e, cap)
            for p in range(top + 1):
                c = math.comb(e, p)
                for k, v in u_pow[p].items():
                    s = out.get(k)
                    vv = v.scale(rf(c))
                    out[k] = vv if s is None else s + vv
        else:
            for p in range(cap + 1):
                c = (-1) ** p * math.comb(-e + p - 1, p)
                for k, v in u_pow[p].items():
                    s = out.get(k)
                    vv = v.scale(rf(c))
                    out[k] = vv if s is None else s + vv
        return out

    table = {}
    for key, coeff in g.terms.items():
        a, b = key[:n], key[n:]
        # choose the om-derivative pattern c <= b; each om_k spends c_k
        # lowering directions and leaves om_k^{b_k - c_k}
        for c in iproduct(*[range(bk + 1) for bk in b]):
            csum = sum(c)
            if csum > depth:
                continue
            mult = 1
            for bk, ck in zip(b, c):
                mult *= math.comb(bk, ck)
            mono_key = list(key)
            for k in range(n):
                mono_key[n + k] = b[k] - c[k]
            base = ChartPoly(ring, {tuple(mono_key): coeff.scale(mult)})
            spoly = one_plus_u_pow(sum(a) - csum, depth - csum)
            for skey, sval in spoly.items():
                full = tuple(x + y for x, y in zip(skey, c))
                v = base * sval
                s = table.get(full)
                table[full] = v if s is None else s + v
    return {k: v for k, v in table.items() if not v.is_zero()}


def lowering_word(g: ChartPoly, m) -> ChartPoly:
    """The left-invariant lowering-word operator y_n^{m_n} ... y_1^{m_1}
    applied to g (the joint-exponential Taylor coefficient times m!)."""
    m = tuple(m)
    table = _shift_table(g, sum(m))
    fact = 1
    for mi in m:
        fact *= math.factorial(mi)
    got = table.get(m)
    if got is None:
        return g.ring.zero()
    return got.scale(rf(fact))


def _star_prefactor(mm: int) -> RatFun:
    """(-t)^{mm} / prod_{j<mm} (lambda - j t); the 1/m! of the coefficient
    cancels against the factorials of the Taylor table."""
    num = MPoly.var("t", mm).scale((-1) ** mm) if mm else MP_ONE
    den = MP_ONE
    lam = MPoly.var("lambda")
    tpoly = MPoly.var("t")
    for j in range(mm):
        den = den * (lam - tpoly.scale(j))
    return RatFun(num, den)


def star_classical(f: ChartPoly, g: ChartPoly) -> ChartPoly:
    """The invariant star product: sum over multi-indices of the raising
    word applied to f times the lowering word applied to g, with the
    (-t)^{|m|} / (prod m_i! prod (lambda - j t)) coefficients.  The sum is
    finite because the raising word kills f beyond its zt-degree."""
    ring = f.ring
    n = ring.n
    depth = f.zeta_degree()
    table = _shift_table(g, depth)
    out = ring.zero()
    for m in exponent_vectors(n, depth):
        yg = table.get(tuple(m))
        if yg is None:
            continue
        xf = f
        for i in range(n):
            for _ in range(m[i]):
                xf = xf.diff(i)
        if xf.is_zero():
            continue
        out = out + (xf * yg).scale(_star_prefactor(sum(m)))
    return out


# -- realized gl(n+1) vector fields -------------------------------------------


def _group_matrix(ring: ChartRing):
    """The cell representative: unipotent lower(om) times unipotent
    upper(zt), as an (n+1)x(n+1) matrix of chart polynomials."""
    n = ring.n
    g = [[ring.zero() for _ in range(n + 1)] for _ in range(n + 1)]
    g[0][0] = ring.one()
    for j in range(1, n + 1):
        g[0][j] = ring.zt(j)
    for i in range(1, n + 1):
        g[i][0] = ring.om(i)
        for j in range(1, n + 1):
            g[i][j] = ring.om(i) * ring.zt(j)
            if i == j:
                g[i][j] = g[i][j] + ring.one()
    return g


def _field_from_matrix(ring: ChartRing, M) -> DiffOp:
    """Solve the unipotent-times-Levi factorization linearization for the
    chart increments and assemble the first-order operator."""
    n = ring.n
    alpha = M[0][0]
    dom = [M[i][0] - alpha * ring.om(i) for i in range(1, n + 1)]
    A = [
        [
            M[i][j]
            - M[i][0] * ring.zt(j)
            + alpha * ring.om(i) * ring.zt(j)
            - ring.om(i) * M[0][j]
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]
    dzt = []
    for j in range(1, n + 1):
        acc = M[0][j]
        for i in range(1, n + 1):
            acc = acc - ring.zt(i) * A[i - 1][j - 1]
        dzt.append(acc)
    out = DiffOp.zero(ring)
    for j in range(1, n + 1):
        if not dzt[j - 1].is_zero():
            out = out + DiffOp.partial(ring, j - 1, dzt[j - 1])
    for i in range(1, n + 1):
        if not dom[i - 1].is_zero():
            out = out + DiffOp.partial(ring, n + i - 1, dom[i - 1])
    return out


def gl_field(ring_or_n, a: int, b: int) -> DiffOp:
    """The realized action of the (a, b) matrix unit of gl(n+1) on chart
    functions: the generator of left translations, computed exactly from
    the factorization of minus (matrix unit) times (cell representative)."""
    ring = ring_or_n if isinstance(ring_or_n, ChartRing) else ChartRing(ring_or_n)
    n = ring.n
    if not (0 <= a <= n and 0 <= b <= n):
        raise IndexError("matrix unit indices must lie in 0..n")
    g = _group_matrix(ring)
    M = [[ring.zero() for _ in range(n + 1)] for _ in range(n + 1)]
    for c in range(n + 1):
        M[a][c] = -g[b][c]
    return _field_from_matrix(ring, M)


def gl_field_right_legs(ring_or_n, a: int, b: int) -> DiffOp:
    """Companion family generating right translations; the star-product legs
    vf_x and vf_y are its values on the two nilradical directions."""
    ring = ring_or_n if isinstance(ring_or_n, ChartRing) else ChartRing(ring_or_n)
    n = ring.n
    if not (0 <= a <= n and 0 <= b <= n):
        raise IndexError("matrix unit indices must lie in 0..n")
    g = _group_matrix(ring)
    # (g * E_ab)_{rc} = g_{ra} delta_{bc}: column b equals column a of g
    M = [[ring.zero() for _ in range(n + 1)] for _ in range(n + 1)]
    for r in range(n + 1):
        M[r][b] = g[r][a]
    return _field_from_matrix(ring, M)


def leibniz_holds(X: DiffOp, f: ChartPoly, g: ChartPoly) -> bool:
    lhs = X.apply(star_classical(f, g))
    rhs = star_classical(X.apply(f), g) + star_classical(f, X.apply(g))
    return lhs == rhs


# -- coordinate-field transport ------------------------------------------------


class BiOp:
    """Bidifferential operator sum c_{ab} d^a (x) d^b in canonical form:
    the function coefficients of both legs are multiplied into one
    chart polynomial, since the two legs act on separate factors."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: ChartRing, terms: dict):
        self.ring = ring
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    @classmethod
    def from_pair(cls, left: DiffOp, right: DiffOp) -> "BiOp":
        out = {}
        for a, ca in left.terms.items():
            for b, cb in right.terms.items():
                key = (a, b)
                v = ca * cb
                s = out.get(key)
                out[key] = v if s is None else s + v
        return cls(left.ring, out)

    def __add__(self, other: "BiOp") -> "BiOp":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            out[k] = c if s is None else s + c
        return BiOp(self.ring, out)

    def __neg__(self) -> "BiOp":
        return BiOp(self.ring, {k: -c for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiOp):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None

    def apply(self, f: ChartPoly, g: ChartPoly) -> ChartPoly:
        out = self.ring.zero()
        for (a, b), c in self.terms.items():
            df = f.diff_multi(a)
            if df.is_zero():
                continue
            dg = g.diff_multi(b)
            if dg.is_zero():
                continue
            out = out + c * df * dg
        return out


def coordinate_field_images(ring_or_n) -> dict:
    """Chart images of the ambient coordinate vector fields on invariant
    homogeneous functions, with the pairing variable frozen at 1.  Keys:
    ('z', c) and ('w', c) for c = 0..n."""
    ring = ring_or_n if isinstance(ring_or_n, ChartRing) else ChartRing(ring_or_n)
    n = ring.n
    euler = euler_zeta(ring)
    zeta_omega = ring.zero()
    for k in range(1, n + 1):
        zeta_omega = zeta_omega + ring.zt(k) * ring.om(k)
    out = {}
    z0 = DiffOp.zero(ring)
    z0 = z0 - euler.mul_poly(zeta_omega)
    for k in range(1, n + 1):
        z0 = z0 - DiffOp.partial(ring, n + k - 1, ring.om(k))
    out[("z", 0)] = z0
    for i in range(1, n + 1):
        out[("z", i)] = vf_y(ring, i)
    out[("w", 0)] = -euler
    for i in range(1, n + 1):
        out[("w", i)] = -(vf_x(ring, i) + euler.mul_poly(ring.om(i)))
    return out


def transport_tensor_identity(n: int) -> bool:
    """The contracted coordinate bitensor equals minus the star-product
    tensor: sum_c image(d/dz_c) (x) image(d/dw_c) = - sum_i y_i (x) x_i."""
    ring = ChartRing(n)
    images = coordinate_field_images(ring)
    lhs = BiOp(ring, {})
    for c in range(n + 1):
        lhs = lhs + BiOp.from_pair(images[("z", c)], images[("w", c)])
    rhs = BiOp(ring, {})
    for i in range(1, n + 1):
        rhs = rhs + BiOp.from_pair(vf_y(ring, i), vf_x(ring, i))
    return lhs == -rhs


# -- operator series in one tensor symbol --------------------------------------


class MismatchAt(AssertionError):
    def __init__(self, r, s, left, right):
        super().__init__(
            "series coefficients differ at (r=%d, s=%d): %r vs %r" % (r, s, left, right)
        )
        self.r, self.s, self.left, self.right = r, s, left, right


class OperatorSeries:
    """Truncated series: coefficient of t^r (tensor power s), RatFun in mu."""

    __slots__ = ("R", "entries")

    def __init__(self, R: int, entries: dict):
        self.R = R
        self.entries = {k: c for k, c in entries.items() if not c.is_zero()}
        for (r, s) in self.entries:
            if not (0 <= s <= r <= R):
                raise ValueError("entries must satisfy 0 <= s <= r <= R")

    def coeff(self, r: int, s: int) -> RatFun:
        return self.entries.get((r, s), RF_ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OperatorSeries):
            return NotImplemented
        keys = set(self.entries) | set(other.entries)
        return all(self.coeff(*k) == other.coeff(*k) for k in keys)

    __hash__ = None

    def perturbed(self, r: int, s: int, delta: RatFun) -> "OperatorSeries":
        entries = dict(self.entries)
        entries[(r, s)] = self.coeff(r, s) + delta
        return OperatorSeries(self.R, entries)

    def to_json_obj(self) -> dict:
        from .parse import render_ratfun

        return {
            "R": self.R,
            "entries": [
                {"r": r, "s": s, "coeff": render_ratfun(c)}
                for (r, s), c in sorted(self.entries.items())
            ],
        }


def _two_mu_pow(r: int) -> MPoly:
    return MPoly.var("mu", r).scale(2 ** r) if r else MP_ONE


def bordemann_series(R: int) -> OperatorSeries:
    """Coefficient table of the delation-invariant product restricted to the
    invariant tensor: (-t/2mu)^r sum_k (-1)^{r-k} k^{r-1} / (s!(s-k)!(k-1)!)."""
    if R < 0:
        raise ValueError("order must be nonnegative")
    entries = {(0, 0): RF_ONE}
    for r in range(1, R + 1):
        for s in range(1, r + 1):
            total = Fraction(0)
            for k in range(1, s + 1):
                total += (
                    Fraction((-1) ** (r - k) * k ** (r - 1))
                    / (
                        math.factorial(s)
                        * math.factorial(s - k)
                        * math.factorial(k - 1)
                    )
                )
            if total:
                num = MPoly.const(total * (-1) ** r)
                entries[(r, s)] = RatFun(num, _two_mu_pow(r))
    return OperatorSeries(R, entries)


def twist_series(R: int) -> OperatorSeries:
    """The classical twist series with the weight eliminated by
    lambda = 2mu - t, re-expanded exactly in powers of t."""
    if R < 0:
        raise ValueError("order must be nonnegative")
    entries = {(0, 0): RF_ONE}
    for s in range(1, R + 1):
        # t-series of prod_{j=1..s} 1/(2mu - jt) up to order R - s
        coeffs = [RF_ONE]
        for j in range(1, s + 1):
            limit = R - s
            geo = [
                RatFun(MPoly.const(j ** p), _two_mu_pow(p + 1))
                for p in range(limit + 1)
            ]
            new = [RF_ZERO] * (limit + 1)
            for p1, c1 in enumerate(coeffs):
                if c1.is_zero():
                    continue
                for p2 in range(0, limit + 1 - p1):
                    new[p1 + p2] = new[p1 + p2] + c1 * geo[p2]
            coeffs = new
        sign = rf((-1) ** s) / rf(math.factorial(s))
        for p, c in enumerate(coeffs):
            if not c.is_zero():
                entries[(s + p, s)] = sign * c
    return OperatorSeries(R, entries)


def compare_series(R: int) -> bool:
    """Coefficientwise equality of the two series; raises MismatchAt."""
    left = bordemann_series(R)
    right = twist_series(R)
    keys = sorted(set(left.entries) | set(right.entries))
    for (r, s) in keys:
        a, b = left.coeff(r, s), right.coeff(r, s)
        if a != b:
            raise MismatchAt(r, s, a, b)
    return True


# -- symmetric-function identities ---------------------------------------------


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def hsym_partial_fraction(avals, k: int) -> bool:
    """Complete homogeneous sum h_k(a_1..a_m) equals
    sum_i a_i^{k+m-1} / prod_{j != i} (a_i - a_j), for distinct a_i."""
    avals = [Fraction(a) for a in avals]
    m = len(avals)
    if len(set(avals)) != m:
        raise ValueError("sample values must be distinct")
    lhs = sum(
        (math.prod(a ** e for a, e in zip(avals, comp)) for comp in _compositions(k, m)),
        Fraction(0),
    )
    rhs = Fraction(0)
    for i, ai in enumerate(avals):
        den = Fraction(1)
        for j, aj in enumerate(avals):
            if j != i:
                den *= ai - aj
        rhs += ai ** (k + m - 1) / den
    return lhs == rhs


def hsym_factorial_form(m: int, r: int) -> bool:
    """h_{r-m}(1, 2, ..., m) = sum_k (-1)^{m-k} k^{r-1} / ((k-1)!(m-k)!)."""
    if r < m or m < 1:
        raise ValueError("need r >= m >= 1")
    lhs = sum(
        (
            math.prod((i + 1) ** e for i, e in enumerate(comp))
            for comp in _compositions(r - m, m)
        ),
        Fraction(0),
    )
    rhs = Fraction(0)
    for k in range(1, m + 1):
        rhs += Fraction((-1) ** (m - k) * k ** (r - 1)) / (
            math.factorial(k - 1) * math.factorial(m - k)
        )
    return lhs == rhs


def hsym_identities(m: int, r: int, samples: int, rng) -> bool:
    """Both identities: the factorial form exactly, and the partial-fraction
    form on random distinct rational tuples."""
    if not hsym_factorial_form(m, r):
        return False
    for _ in range(samples):
        seen = set()
        vals = []
        while len(vals) < m:
            a = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
            if a not in seen:
                seen.add(a)
                vals.append(a)
        if not hsym_partial_fraction(vals, rng.randint(0, 4)):
            return False
    return True


# -- abstract quantum plane and the q-multinomial -------------------------------


class QPlaneElt:
    """Combination of ordered monomials in n symbols subject to
    D_j D_i = q^2 D_i D_j for j < i; normal form is descending index order."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict):
        self.n = n
        self.terms = {tuple(k): c for k, c in terms.items() if not c.is_zero()}

    @classmethod
    def gen(cls, n: int, i: int) -> "QPlaneElt":
        key = [0] * n
        key[i - 1] = 1
        return cls(n, {tuple(key): RF_ONE})

    @classmethod
    def one(cls, n: int) -> "QPlaneElt":
        return cls(n, {(0,) * n: RF_ONE})

    def __add__(self, other: "QPlaneElt") -> "QPlaneElt":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            out[k] = c if s is None else s + c
        return QPlaneElt(self.n, out)

    def scale(self, c: RatFun) -> "QPlaneElt":
        return QPlaneElt(self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: "QPlaneElt") -> "QPlaneElt":
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                swaps = 0
                for i in range(self.n):
                    for j in range(i + 1, self.n):
                        swaps += k1[i] * k2[j]
                key = tuple(a + b for a, b in zip(k1, k2))
                v = c1 * c2 * q_pow(2 * swaps)
                s = out.get(key)
                out[key] = v if s is None else s + v
        return QPlaneElt(self.n, out)

    def __pow__(self, m: int) -> "QPlaneElt":
        out = QPlaneElt.one(self.n)
        for _ in range(m):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPlaneElt):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None


def q_multinomial(vec) -> RatFun:
    out = qhatfact(sum(vec))
    for v in vec:
        out = out / qhatfact(v)
    return out


def q_binomial_check(n: int, m: int, concrete: bool = True) -> bool:
    """(D_1 + ... + D_n)^m expands with one-sided q-multinomial coefficients
    over descending monomials, abstractly and for the module tensors."""
    total = QPlaneElt(n, {})
    for i in range(1, n + 1):
        total = total + QPlaneElt.gen(n, i)
    lhs = total ** m
    rhs = QPlaneElt(n, {})
    for vec in exponent_vectors(n, m):
        if sum(vec) == m:
            rhs = rhs + QPlaneElt(n, {tuple(vec): q_multinomial(vec)})
    if lhs != rhs:
        return False
    if not concrete:
        return True
    alg = Algebra(n)
    eta = eta_compute(n)
    ds = {i: plane_tensor(alg, i, eta) for i in range(1, n + 1)}
    tsum = alg.tensor_unit().scale(RF_ZERO)
    for i in range(1, n + 1):
        tsum = tsum + ds[i]
    lhs_t = tsum ** m
    rhs_t = alg.tensor_unit().scale(RF_ZERO)
    for vec in exponent_vectors(n, m):
        if sum(vec) != m:
            continue
        mono = alg.tensor_unit()
        for i in range(n, 0, -1):
            for _ in range(vec[i - 1]):
                mono = mono * ds[i]
        rhs_t = rhs_t + mono.scale(q_multinomial(vec))
    return lhs_t == rhs_t


# -- the quantum twist element ---------------------------------------------------


def twist_coefficient(m: int) -> RatFun:
    """Coefficient of the m-th tensor power in the inverse-form lift:
    (-1)^m q^{(lambda+1)m - m^2} / ([m]! prod_{j<m} [lambda - j]),
    with q^{lambda m} carried by L^m."""
    from .exactalg import qbracket_weight

    num = rf((-1) ** m) * RatFun(MPoly.var("L", m)) * q_pow(m - m * m)
    den = qfact(m)
    for j in range(m):
        den = den * qbracket_weight(j)
    return num / den


def twist_coefficient_classical(m: int) -> RatFun:
    """(-t)^m / (m! prod_{j<m} (lambda - j t))."""
    num = MPoly.var("t", m).scale((-1) ** m) if m else MP_ONE
    den = MPoly.const(math.factorial(m))
    lam = MPoly.var("lambda")
    tpoly = MPoly.var("t")
    for j in range(m):
        den = den * (lam - tpoly.scale(j))
    return RatFun(num, den)


def _subst_lambda_over_t(f: RatFun) -> RatFun:
    """Exact substitution lambda -> lambda / t."""
    il = VAR_INDEX["lambda"]
    it = VAR_INDEX["t"]

    def hom(p: MPoly):
        deg = max((k[il] for k in p.terms), default=0)
        out = {}
        for k, c in p.terms.items():
            key = list(k)
            key[it] += deg - k[il]
            out[tuple(key)] = c
        return MPoly(out), deg

    num, dn = hom(f.num)
    den, dd = hom(f.den)
    if dd >= dn:
        num = num * MPoly.var("t", dd - dn) if dd > dn else num
    else:
        den = den * MPoly.var("t", dn - dd)
    return RatFun(num, den)


def twist_coefficient_limit(m: int) -> RatFun:
    """Factorwise classical limit of the quantum coefficient: every q-power
    tends to 1, [k]! to k!, [lambda - j] to (lambda - j); the weight is then
    rescaled by lambda -> lambda / t."""
    den = MPoly.const(math.factorial(m))
    lam = MPoly.var("lambda")
    for j in range(m):
        den = den * (lam - MPoly.const(j))
    limit = RatFun(MPoly.const((-1) ** m), den)
    return _subst_lambda_over_t(limit)


def invariant_tensor(n: int) -> TensorElt:
    alg = Algebra(n)
    eta = eta_compute(n)
    out = alg.tensor_unit().scale(RF_ZERO)
    for i in range(1, n + 1):
        out = out + plane_tensor(alg, i, eta)
    return out


def twist_element(M: int, n: int) -> TensorElt:
    """Truncated inverse-form lift: sum_m twist_coefficient(m) T^m with T
    the invariant tensor."""
    alg = Algebra(n)
    T = invariant_tensor(n)
    out = alg.tensor_unit().scale(RF_ZERO)
    power = alg.tensor_unit()
    for m in range(M + 1):
        if m:
            power = power * T
        out = out + power.scale(twist_coefficient(m))
    return out


def inverse_form_coefficient_check(M: int, n: int) -> bool:
    """The coefficient identity making the lift invert the pairing diagonal:
    c_{|m|} qhatfact(|m|)/prod qhatfact(m_i) = 1 / closed_form_coeff(m)."""
    for vec in exponent_vectors(n, M):
        lhs = twist_coefficient(sum(vec)) * q_multinomial(vec)
        if lhs != closed_form_coeff(vec).inv():
            return False
    return True


def inverse_form_reproducing_check(M: int, n: int) -> bool:
    """Concrete dual-basis property of the truncated lift: pairing the left
    legs against a fixed minus-basis vector reproduces that vector from the
    right legs, up to the truncation degree."""
    alg = Algebra(n)
    ctx = context(n)
    S = twist_element(M, n)
    v = VermaVector.highest("plus", n)
    for vec in exponent_vectors(n, M):
        got = alg.zero()
        for (kl, kr), c in S.terms.items():
            u = AlgElt(alg, {kl: RF_ONE})
            av = act(u, v)
            val = RF_ZERO
            for m, cm in av.terms.items():
                p = _pair_monomials(ctx, tuple(vec), m, "plain")
                if not p.is_zero():
                    val = val + cm * p
            if not val.is_zero():
                got = got + AlgElt(alg, {kr: c * val})
        if got != _x_word(ctx, tuple(vec)):
            return False
    return True


def inverse_form_check(M: int, n: int, reproducing_degree: int | None = None) -> bool:
    if not inverse_form_coefficient_check(M, n):
        return False
    deg = M if reproducing_degree is None else reproducing_degree
    return inverse_form_reproducing_check(deg, n)

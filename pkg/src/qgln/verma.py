"""Scalar parabolic Verma modules for the Levi gl(n) + gl(1) inside gl(n+1),
their invariant pairing, the closed-form diagonal coefficients, and the
eta-twisted basis generating the quantum plane.

The plus module has basis y_n^{m_n} ... y_1^{m_1} v with y_i the lowering
vector of the nilradical root (1, i+1); the minus module has the analogous
basis in the twisted raising vectors.  The highest-weight parameter stays
formal throughout: the Cartan exponential of weight w acts on v as
L^{(eps_1, w)}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactalg import MPoly, RF_ONE, RF_ZERO, RatFun, q_pow, qbracket_weight, qhatfact, rf
from .qea import AlgElt, Algebra, TensorElt
from .roots import eps1_pairing, inner, normalize_weight, wadd, wneg, wscale, wzero


class SingularSystem(ArithmeticError):
    pass


def nilradical_root(i: int):
    return (1, i + 1)


# -- eta data -----------------------------------------------------------------


@dataclass(frozen=True)
class EtaData:
    """The Cartan twists eta_i = sum_k B[i][k] beta_k of the quantum plane."""

    n: int
    B: tuple  # rows of exact rationals
    eta: tuple  # rows as weight tuples, = B

    def pair_beta(self, i: int, j: int):
        """(eta_i, beta_j)."""
        from .roots import root_weight

        return inner(self.eta[i - 1], root_weight(nilradical_root(j), self.n))


def eta_compute(n: int) -> EtaData:
    """Solve (eta_i, beta_j) = 2 for i < j and 0 for i >= j.

    With the Gram matrix G = I + J the inverse is I - J/(n+1), so the
    coordinate matrix is S G^{-1} with S strictly upper triangular filled
    with 2.  The solution is unique because G is invertible; this is
    re-checked below and a failure raises SingularSystem.
    """
    rows = []
    for i in range(1, n + 1):
        # row of S: 2 in columns k > i
        row = []
        for k in range(1, n + 1):
            # (S G^{-1})_{ik} = S_{ik} - (sum_s S_{is}) / (n+1)
            s_ik = 2 if k > i else 0
            total = 2 * (n - i)
            row.append(Fraction(s_ik) - Fraction(total, n + 1))
        rows.append(normalize_weight(row))
    data = EtaData(n=n, B=tuple(rows), eta=tuple(rows))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            want = 2 if i < j else 0
            if data.pair_beta(i, j) != want:
                raise SingularSystem(
                    "eta system not satisfied at (%d, %d)" % (i, j)
                )
    return data


# -- distinguished algebra elements ------------------------------------------


def y_vector(alg: Algebra, i: int) -> AlgElt:
    return alg.f(nilradical_root(i))


def x_tilde(alg: Algebra, i: int) -> AlgElt:
    return alg.e_tilde(nilradical_root(i))


def tilde_y(alg: Algebra, i: int, eta: EtaData | None = None) -> AlgElt:
    """The twisted lowering vector: scalar L^{(eta_i, eps_1)} times
    y_i q^{-eta_i}.  The scalar exponent is rational with denominator n+1
    and cancels in every complete pairing."""
    if eta is None:
        eta = eta_compute(alg.n)
    w = eta.eta[i - 1]
    scalar = RatFun(MPoly.var("L", Fraction(eps1_pairing(w)))) if any(w) else RF_ONE
    return alg.mono(f=(nilradical_root(i),), k=wneg(w), coeff=scalar)


def plane_tensor(alg: Algebra, i: int, eta: EtaData | None = None) -> TensorElt:
    """D_i = tilde_y_i (x) x_tilde_i in the twofold tensor product."""
    return TensorElt.tensor(tilde_y(alg, i, eta), x_tilde(alg, i))


def quantum_plane_check(n: int) -> bool:
    """D_j D_i = q^2 D_i D_j for all j < i, on the concrete tensors."""
    alg = Algebra(n)
    eta = eta_compute(n)
    ds = {i: plane_tensor(alg, i, eta) for i in range(1, n + 1)}
    q2 = q_pow(2)
    for i in range(1, n + 1):
        for j in range(1, i):
            if ds[j] * ds[i] != (ds[i] * ds[j]).scale(q2):
                return False
    return True


# -- module vectors ------------------------------------------------------------


@dataclass
class VermaVector:
    """Finite combination of basis monomials of a scalar parabolic Verma
    module, keyed by exponent vectors."""

    side: str  # 'plus' | 'minus'
    basis: str  # 'plain' | 'tilde'
    n: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.side not in ("plus", "minus"):
            raise ValueError("side must be 'plus' or 'minus'")
        if self.basis not in ("plain", "tilde"):
            raise ValueError("basis must be 'plain' or 'tilde'")
        if self.side == "minus" and self.basis != "tilde":
            raise ValueError("the minus module uses the tilde basis")
        self.terms = {
            tuple(m): c for m, c in self.terms.items() if not c.is_zero()
        }

    @classmethod
    def highest(cls, side: str, n: int, basis: str = "plain") -> "VermaVector":
        basis = "tilde" if side == "minus" else basis
        return cls(side, basis, n, {(0,) * n: RF_ONE})

    @classmethod
    def monomial(cls, side: str, n: int, m, basis: str = "plain", coeff: RatFun = RF_ONE):
        basis = "tilde" if side == "minus" else basis
        return cls(side, basis, n, {tuple(m): coeff})

    def __add__(self, other: "VermaVector") -> "VermaVector":
        assert (self.side, self.basis, self.n) == (other.side, other.basis, other.n)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            out[m] = c if s is None else s + c
        return VermaVector(self.side, self.basis, self.n, out)

    def scale(self, c: RatFun) -> "VermaVector":
        return VermaVector(
            self.side, self.basis, self.n, {m: v * c for m, v in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, VermaVector):
            return NotImplemented
        if (self.side, self.basis, self.n) != (other.side, other.basis, other.n):
            return False
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[m] == other.terms[m] for m in self.terms)

    def is_zero(self) -> bool:
        return not self.terms


class _Ctx:
    """Per-rank workspace shared by the module operations."""

    _pool: dict = {}

    def __new__(cls, n: int):
        if n not in cls._pool:
            obj = super().__new__(cls)
            obj.alg = Algebra(n)
            obj.eta = eta_compute(n)
            obj.pair_cache = {}
            obj.xword_cache = {}
            obj.gamma_x_cache = {}
            cls._pool[n] = obj
        return cls._pool[n]


def context(n: int) -> _Ctx:
    return _Ctx(n)


def _y_word(alg: Algebra, m) -> AlgElt:
    letters = []
    for i in range(alg.n, 0, -1):
        letters += [nilradical_root(i)] * m[i - 1]
    return alg.mono(f=tuple(letters))


def _tilde_y_word(ctx: _Ctx, m) -> AlgElt:
    out = ctx.alg.one()
    for i in range(ctx.alg.n, 0, -1):
        ty = tilde_y(ctx.alg, i, ctx.eta)
        for _ in range(m[i - 1]):
            out = out * ty
    return out


def _x_word(ctx: _Ctx, k) -> AlgElt:
    k = tuple(k)
    hit = ctx.xword_cache.get(k)
    if hit is None:
        out = ctx.alg.one()
        for i in range(ctx.alg.n, 0, -1):
            xt = x_tilde(ctx.alg, i)
            for _ in range(k[i - 1]):
                out = out * xt
        ctx.xword_cache[k] = hit = out
    return hit


def _plus_word(ctx: _Ctx, m, basis: str) -> AlgElt:
    if basis == "plain":
        return _y_word(ctx.alg, m)
    return _tilde_y_word(ctx, m)


def highest_weight_eval(alg: Algebra, elt: AlgElt, side: str = "plus") -> dict:
    """Project u * v onto the module basis: raising letters and Levi letters
    die, the Cartan exponential contributes a power of L (negated on the
    minus side), nilradical letters become exponent vectors."""
    out = {}
    sgn = 1 if side == "plus" else -1
    for (f, w, e), c in elt.terms.items():
        if side == "plus":
            if e:
                continue
            word = f
        else:
            if f:
                continue
            word = e
        m = [0] * alg.n
        levi = False
        for root in word:
            if root[0] != 1:
                levi = True
                break
            m[root[1] - 2] += 1
        if levi:
            continue
        exp = sgn * eps1_pairing(w)
        val = c * RatFun(MPoly.var("L", exp)) if exp else c
        key = tuple(m)
        s = out.get(key)
        out[key] = val if s is None else s + val
    return {m: c for m, c in out.items() if not c.is_zero()}


def act(u: AlgElt, v: VermaVector) -> VermaVector:
    """Action of an algebra element on a plus-module vector."""
    if v.side != "plus":
        raise ValueError("act is defined on the plus module")
    ctx = context(v.n)
    assert u.alg.n == v.n
    out = {}
    for m, c in v.terms.items():
        word = _plus_word(ctx, m, v.basis)
        res = highest_weight_eval(ctx.alg, u * word, "plus")
        for key, val in res.items():
            s = out.get(key)
            t = val * c
            out[key] = t if s is None else s + t
    # tilde and plain basis vectors coincide in the plus module, so the
    # coefficients transfer unchanged
    return VermaVector(v.side, v.basis, v.n, out)


def _pair_monomials(ctx: _Ctx, k: tuple, m: tuple, basis: str) -> RatFun:
    key = (k, m, basis)
    hit = ctx.pair_cache.get(key)
    if hit is not None:
        return hit
    gx = ctx.gamma_x_cache.get(k)
    if gx is None:
        gx = ctx.alg.antipode(_x_word(ctx, k))
        ctx.gamma_x_cache[k] = gx
    prod = gx * _plus_word(ctx, m, basis)
    val = RF_ZERO
    for (f, w, e), c in prod.terms.items():
        if f or e:
            continue
        exp = eps1_pairing(w)
        val = val + (c * RatFun(MPoly.var("L", exp)) if exp else c)
    ctx.pair_cache[key] = val
    return val


def pairing(u: VermaVector, w: VermaVector) -> RatFun:
    """Invariant pairing of a minus-module vector with a plus-module vector:
    expand, apply the antipode, multiply, keep the pure Cartan part and
    evaluate it on the highest weight."""
    if u.side != "minus" or w.side != "plus":
        raise ValueError("pairing takes (minus, plus)")
    if u.n != w.n:
        raise ValueError("rank mismatch")
    ctx = context(u.n)
    out = RF_ZERO
    for k, ck in u.terms.items():
        for m, cm in w.terms.items():
            val = _pair_monomials(ctx, k, m, w.basis)
            if not val.is_zero():
                out = out + ck * cm * val
    return out


def closed_form_coeff(m) -> RatFun:
    """Diagonal value of the pairing:
    (-1)^{|m|} L^{-|m|} q^{(|m|^2-|m|)/2} prod qhatfact(m_i)
    prod_{j<|m|} [lambda - j]."""
    m = tuple(m)
    if any(x < 0 for x in m):
        raise ValueError("exponents must be nonnegative")
    mm = sum(m)
    out = rf((-1) ** mm)
    if mm:
        out = out * RatFun(MPoly.var("L", -mm)) * q_pow((mm * mm - mm) // 2)
    for mi in m:
        out = out * qhatfact(mi)
    for j in range(mm):
        out = out * qbracket_weight(j)
    return out


def exponent_vectors(n: int, max_total: int):
    if n == 0:
        yield ()
        return
    for head in range(max_total + 1):
        for tail in exponent_vectors(n - 1, max_total - head):
            yield (head,) + tail


def shapovalov_matrix(n: int, degree: int, basis: str = "plain") -> dict:
    """Diagonal pairing values for all |m| <= degree in the chosen basis."""
    ctx = context(n)
    out = {}
    for m in exponent_vectors(n, degree):
        out[m] = _pair_monomials(ctx, m, m, basis)
    return out


def mixed_pairings_zero(n: int, degree: int, basis: str = "plain") -> list:
    """Brute-force check that mismatched pairings vanish; returns violations."""
    ctx = context(n)
    bad = []
    vecs = list(exponent_vectors(n, degree))
    for k in vecs:
        for m in vecs:
            if k == m:
                continue
            val = _pair_monomials(ctx, k, m, basis)
            if not val.is_zero():
                bad.append((k, m, val))
    return bad

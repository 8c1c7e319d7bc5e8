"""Polynomials in x over Q(q) and the q-difference machinery.

The central operator is the Hahn difference

    delta(f)(x) = (f(1 + q x) - f(x)) / (1 + (q - 1) x),

which lowers the q-binomial-coefficient basis by one step:
delta({x choose k}_q) = {x choose k-1}_q.  Expanding a polynomial in that
basis therefore amounts to iterating delta and reading off values at 0,
and the inverse expansion is a Newton-form evaluation.  Both directions
are exact; any non-exact division here indicates a programming error and
raises ExactnessError.

Two distinct q-binomial families live here and must not be confused:

* gauss_binom(n, k): the classical Gaussian polynomial in Z[q];
* qbinom_x(k): the polynomial {x choose k}_q in x over Q(q), which
  interpolates the first family via {[n]_q choose k}_q =
  q^(k(k-1)/2) * gauss_binom(n, k).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import comb
from typing import Iterable, Mapping, Sequence, Union

from .qlaurent import (
    ONE,
    Q,
    ZERO,
    BigRat,
    ExactnessError,
    QLaurent,
    QRatFunc,
    RF_ONE,
    RF_ZERO,
    _coerce_ratfunc,
    ql_divexact,
)

ScalarLike = Union[int, Fraction, QLaurent, QRatFunc]


# -- q-integers, factorials, binomials ----------------------------------------


@cache
def q_int(n: int) -> QLaurent:
    """[n]_q = (q^n - 1)/(q - 1); for n < 0 this is -q^n [(-n)]_q."""
    if n == 0:
        return ZERO
    if n < 0:
        return QLaurent({e: -1 for e in range(n, 0)})
    return QLaurent({e: 1 for e in range(n)})


@cache
def q_factorial(n: int) -> QLaurent:
    """[n]_q! = [1]_q [2]_q ... [n]_q."""
    if n < 0:
        raise ValueError("q-factorial needs n >= 0")
    if n <= 1:
        return ONE
    return q_factorial(n - 1) * q_int(n)


@cache
def q_pochhammer(k: int) -> QLaurent:
    """(q; q)_k = (1 - q)(1 - q^2)...(1 - q^k)."""
    if k < 0:
        raise ValueError("(q;q)_k needs k >= 0")
    if k == 0:
        return ONE
    return q_pochhammer(k - 1) * (ONE - Q**k)


@cache
def gauss_binom(n: int, k: int) -> QLaurent:
    """The Gaussian binomial [n, k]_q as a polynomial in Z[q]."""
    if n < 0:
        raise ValueError("gauss_binom needs n >= 0")
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    # Pascal recurrence keeps everything in Z[q], no division required.
    return gauss_binom(n - 1, k - 1) + gauss_binom(n - 1, k).shifted(k)


@cache
def cyclotomic(d: int) -> QLaurent:
    """The d-th cyclotomic polynomial, via (q^d - 1) / prod of lower ones."""
    if d < 1:
        raise ValueError("cyclotomic index must be >= 1")
    num = Q**d - ONE
    for e in range(1, d):
        if d % e == 0:
            num = ql_divexact(num, cyclotomic(e))
    return num


@cache
def _cyclo_dense(d: int) -> tuple[int, ...]:
    phi = cyclotomic(d)
    out = [0] * (phi.max_exp + 1)
    for e, c in phi.items():
        out[e] = int(c)
    return tuple(out)


@cache
def _cyclo_at2(d: int) -> int:
    return int(cyclotomic(d).eval_at(2))


# -- polynomials in x over Q(q) -----------------------------------------------


class XPoly:
    """A polynomial in x with coefficients in Q(q), stored densely by x-degree."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        cs = []
        for c in coeffs:
            r = _coerce_ratfunc(c)
            if r is NotImplemented:
                raise TypeError(f"not a Q(q) scalar: {c!r}")
            cs.append(r)
        while cs and cs[-1].is_zero:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: tuple[QRatFunc, ...]) -> "XPoly":
        p = cls.__new__(cls)
        p._coeffs = coeffs
        return p

    @classmethod
    def zero(cls) -> "XPoly":
        return _XP_ZERO

    @classmethod
    def const(cls, c: ScalarLike) -> "XPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "XPoly":
        return _XP_X

    # -- queries ---------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[QRatFunc, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree in x; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def coeff(self, k: int) -> QRatFunc:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return RF_ZERO

    @property
    def leading(self) -> QRatFunc:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: object) -> "XPoly":
        other = _coerce_xpoly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        while out and out[-1].is_zero:
            out.pop()
        return XPoly._raw(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        return XPoly._raw(tuple(-c for c in self._coeffs))

    def __sub__(self, other: object) -> "XPoly":
        other = _coerce_xpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "XPoly":
        other = _coerce_xpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "XPoly":
        if isinstance(other, XPoly):
            a, b = self._coeffs, other._coeffs
            if not a or not b:
                return _XP_ZERO
            out = [RF_ZERO] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if ca.is_zero:
                    continue
                for j, cb in enumerate(b):
                    out[i + j] = out[i + j] + ca * cb
            while out and out[-1].is_zero:
                out.pop()
            return XPoly._raw(tuple(out))
        s = _coerce_ratfunc(other)
        if s is NotImplemented:
            return NotImplemented
        if s.is_zero:
            return _XP_ZERO
        return XPoly._raw(tuple(c * s for c in self._coeffs))

    __rmul__ = __mul__

    def eval(self, point: ScalarLike) -> QRatFunc:
        """Evaluate at x = point in Q(q) by Horner's rule."""
        p = _coerce_ratfunc(point)
        if p is NotImplemented:
            raise TypeError(f"not a Q(q) point: {point!r}")
        acc = RF_ZERO
        for c in reversed(self._coeffs):
            acc = acc * p + c
        return acc

    # -- comparison, hashing, display -----------------------------------------

    def __eq__(self, other: object) -> bool:
        other = _coerce_xpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self._coeffs):
            if c.is_zero:
                continue
            xs = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            cs = str(c)
            if xs:
                if cs == "1":
                    cs = ""
                elif cs == "-1":
                    cs = "-"
                elif len(c.num) > 1 or not c.is_polynomial:
                    cs = f"({cs})"
            parts.append(cs + xs if xs else cs)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"XPoly({self})"

    def to_json(self) -> dict:
        return {"coeffs": [c.to_json() for c in self._coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "XPoly":
        return cls(QRatFunc.from_json(c) for c in data["coeffs"])


_XP_ZERO = XPoly._raw(())
_XP_X = XPoly._raw((RF_ZERO, RF_ONE))


def _coerce_xpoly(x: object):
    if isinstance(x, XPoly):
        return x
    r = _coerce_ratfunc(x)
    if r is NotImplemented:
        return NotImplemented
    return XPoly._raw(()) if r.is_zero else XPoly._raw((r,))


def xpoly_from_laurent(coeffs: Sequence[QLaurent]) -> XPoly:
    """Build an XPoly from Laurent-polynomial coefficients (denominator 1)."""
    return XPoly([QRatFunc(c) for c in coeffs])


# -- the two interpolating bases ----------------------------------------------


@cache
def qbinom_x(k: int) -> XPoly:
    """{x choose k}_q = (x - [0]_q)(x - [1]_q)...(x - [k-1]_q) / [k]_q!."""
    if k < 0:
        raise ValueError("qbinom_x needs k >= 0")
    if k == 0:
        return XPoly.const(1)
    prev = qbinom_x(k - 1)
    num = _mul_linear(prev, RF_ONE, QRatFunc(-q_int(k - 1)))
    inv = QRatFunc(ONE, q_int(k))
    return num * inv


@cache
def newton_p(k: int) -> XPoly:
    """p_k(x) = (-1)^k q^(-k(k-1)/2) (x-1)(x-q)...(x-q^(k-1)) / (q;q)_k.

    Satisfies p_k(q^n) = gauss_binom(n, k).
    """
    if k < 0:
        raise ValueError("newton_p needs k >= 0")
    if k == 0:
        return XPoly.const(1)
    prev_num = XPoly.const(1)
    for i in range(k):
        prev_num = _mul_linear(prev_num, RF_ONE, QRatFunc(-(Q**i)))
    scale = QRatFunc(
        QLaurent.monomial(-comb(k, 2), (-1) ** k),
        q_pochhammer(k),
    )
    return prev_num * scale


def _mul_linear(f: XPoly, a: QRatFunc, b: QRatFunc) -> XPoly:
    """(a x + b) * f without building a throwaway XPoly."""
    if f.is_zero:
        return f
    cs = f.coeffs
    out = [RF_ZERO] * (len(cs) + 1)
    for i, c in enumerate(cs):
        if c.is_zero:
            continue
        out[i] = out[i] + b * c
        out[i + 1] = out[i + 1] + a * c
    while out and out[-1].is_zero:
        out.pop()
    return XPoly._raw(tuple(out))


# -- q-difference operators ---------------------------------------------------


def subst_affine(f: XPoly, a: ScalarLike, b: ScalarLike) -> XPoly:
    """f(a x + b), computed by Horner's rule over Q(q)."""
    ra = _coerce_ratfunc(a)
    rb = _coerce_ratfunc(b)
    if ra is NotImplemented or rb is NotImplemented:
        raise TypeError("affine substitution needs Q(q) scalars")
    if f.degree <= 0:
        return f
    acc = XPoly.const(f.leading)
    for k in range(f.degree - 1, -1, -1):
        acc = _mul_linear(acc, ra, rb)
        c = f.coeff(k)
        if not c.is_zero:
            acc = acc + XPoly.const(c)
    return acc


_QM1 = QRatFunc(Q - ONE)


def hahn_delta(f: XPoly) -> XPoly:
    """(f(1 + qx) - f(x)) / (1 + (q-1) x); exact for every polynomial f."""
    if f.degree <= 0:
        return _XP_ZERO
    num = subst_affine(f, QRatFunc(Q), RF_ONE) - f
    d = num.degree
    # Divide from the constant term up: the divisor 1 + (q-1)x is a unit
    # at x = 0, so the quotient is determined term by term.
    g = [num.coeff(0)]
    for k in range(1, d):
        g.append(num.coeff(k) - _QM1 * g[k - 1])
    if num.coeff(d) != _QM1 * g[d - 1]:
        raise ExactnessError("Hahn difference left a remainder; internal invariant broken")
    return XPoly(g)


def q_derivative(f: XPoly) -> XPoly:
    """(f(qx) - f(x)) / ((q-1) x); termwise this is c_k [k]_q x^(k-1)."""
    if f.degree <= 0:
        return _XP_ZERO
    return XPoly(
        [f.coeff(k) * QRatFunc(q_int(k)) for k in range(1, f.degree + 1)]
    )


# -- q-binomial-basis expansions ----------------------------------------------


class QBinomExpansion:
    """Coefficients c_j of f = sum_j c_j {x choose j}_q."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike]):
        cs = []
        for c in coeffs:
            r = _coerce_ratfunc(c)
            if r is NotImplemented:
                raise TypeError(f"not a Q(q) scalar: {c!r}")
            cs.append(r)
        if not cs:
            cs = [RF_ZERO]
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[QRatFunc, ...]:
        return self._coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QBinomExpansion):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        parts = []
        for j, c in enumerate(self._coeffs):
            if c.is_zero and len(self._coeffs) > 1:
                continue
            cs = str(c)
            if j == 0:
                parts.append(cs)
            else:
                if len(c.num) > 1 or not c.is_polynomial:
                    cs = f"({cs})"
                parts.append(f"{cs}*C(x,{j})_q")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"QBinomExpansion({self})"

    def to_json(self) -> dict:
        return {"basis": "qbinom", "coeffs": [c.to_json() for c in self._coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "QBinomExpansion":
        if data.get("basis") != "qbinom":
            raise ValueError("expected a qbinom-basis expansion")
        return cls(QRatFunc.from_json(c) for c in data["coeffs"])


def _clear_denominators(f: XPoly) -> tuple[list[QLaurent], QLaurent]:
    """Write f = (sum n_k x^k) / den with all n_k Laurent and one shared den."""
    from .qlaurent import poly_gcd

    den = ONE
    for c in f.coeffs:
        if c.den != ONE and c.den != den:
            g = poly_gcd(den, c.den)
            den = den * ql_divexact(c.den, g)
    nums = []
    for c in f.coeffs:
        scale = den if c.den == ONE else ql_divexact(den, c.den)
        nums.append(c.num if scale == ONE else c.num * scale)
    return nums, den


def _hahn_laurent(cs: list[QLaurent]) -> list[QLaurent]:
    """One Hahn step on a dense x-coefficient list over Q[q, q^-1]."""
    d = len(cs) - 1
    acc = [cs[d]]
    for k in range(d - 1, -1, -1):
        nxt = [ZERO] * (len(acc) + 1)
        for i, c in enumerate(acc):
            nxt[i] = nxt[i] + c
            nxt[i + 1] = nxt[i + 1] + c.shifted(1)
        nxt[0] = nxt[0] + cs[k]
        acc = nxt
    num = [acc[i] - cs[i] for i in range(d + 1)]
    qm1 = Q - ONE
    g = [num[0]]
    for k in range(1, d):
        g.append(num[k] - qm1 * g[k - 1])
    if (num[d] - qm1 * g[d - 1]) if d >= 1 else num[0]:
        raise ExactnessError("Hahn difference left a remainder; internal invariant broken")
    return g


def to_qbinom_basis(f: XPoly) -> QBinomExpansion:
    """Expansion coefficients c_j = (delta^j f)(0) in the {x choose j}_q basis."""
    if f.is_zero:
        return QBinomExpansion([RF_ZERO])
    nums, den = _clear_denominators(f)
    bs = [nums[0]]
    cur = nums
    while len(cur) > 1:
        cur = _hahn_laurent(cur)
        bs.append(cur[0])
    return QBinomExpansion([QRatFunc(b, den) for b in bs])


def from_qbinom_basis(e: QBinomExpansion) -> XPoly:
    """Reassemble sum_j c_j {x choose j}_q as a polynomial in the monomial basis."""
    coeffs = list(e.coeffs)
    while len(coeffs) > 1 and coeffs[-1].is_zero:
        coeffs.pop()
    if all(c.den == ONE for c in coeffs):
        return _from_qbinom_laurent([c.num for c in coeffs])
    out = XPoly.zero()
    for j, c in enumerate(coeffs):
        if not c.is_zero:
            out = out + qbinom_x(j) * c
    return out


def _from_qbinom_laurent(bs: list[QLaurent]) -> XPoly:
    """Fast path: coefficients are Laurent, so work over the single
    denominator [d]_q! in Newton-Horner form and reduce once per x-degree."""
    d = len(bs) - 1
    if d == 0:
        return XPoly([QRatFunc(bs[0])])
    # c_j = b_j * [d]_q!/[j]_q!, accumulated from the top down.
    u = ONE
    cs: list[QLaurent] = [ZERO] * (d + 1)
    for j in range(d, -1, -1):
        cs[j] = bs[j] * u if u != ONE else bs[j]
        if j:
            u = u * q_int(j)
    acc: list[QLaurent] = [cs[d]]
    for j in range(d - 1, -1, -1):
        nxt = [ZERO] * (len(acc) + 1)
        mj = q_int(j)
        for i, c in enumerate(acc):
            nxt[i + 1] = nxt[i + 1] + c
            if mj:
                nxt[i] = nxt[i] - c * mj
        nxt[0] = nxt[0] + cs[j]
        acc = nxt
    return XPoly._raw(tuple(reduce_by_qfactorial(c, d) for c in acc))


def reduce_by_qfactorial(num: QLaurent, d: int) -> QRatFunc:
    """num / [d]_q! in lowest terms, dividing out cyclotomic factors.

    [d]_q! factors as prod over e >= 2 of Phi_e^floor(d/e), and each Phi_e is
    irreducible over Q, so peeling those factors off num yields exactly the
    reduced fraction.  An integer evaluation at q = 2 filters hopeless
    division attempts cheaply.
    """
    if num.is_zero:
        return RF_ZERO
    if d <= 1:
        return QRatFunc._make(num, ONE)
    v = num.min_exp
    shifted = num.shifted(-v) if v else num
    cont = shifted.content()
    prim = shifted.primitive()
    dense = [0] * (prim.max_exp + 1)
    for e, c in prim._terms.items():
        dense[e] = int(c)
    val2 = sum(c << e for e, c in enumerate(dense))
    den = ONE
    for e in range(2, d + 1):
        mult = d // e
        phi2 = _cyclo_at2(e)
        phi_dense = _cyclo_dense(e)
        while mult and val2 % phi2 == 0:
            quot = _divexact_int(dense, phi_dense)
            if quot is None:
                break
            dense = quot
            val2 //= phi2
            mult -= 1
        if mult:
            den = den * cyclotomic(e) ** mult
    red = QLaurent((i + v, c * cont) for i, c in enumerate(dense))
    return QRatFunc._make(red, den)


def qfactorial_coprime(cols: Sequence[QLaurent], d: int):
    """Is the gcd of the given Laurent polynomials coprime to [d]_q!?

    [d]_q! is a product of cyclotomics Phi_e (e >= 2), each irreducible
    over Q, so the gcd shares a factor with it iff some Phi_e divides every
    column; that is decided by an exact integer division per column, with a
    q = 2 evaluation as a cheap necessary filter.  Returns None when a
    column has non-integer coefficients (caller must fall back to a
    generic gcd).
    """
    if d <= 1:
        return True
    prepared = []
    for col in cols:
        if col.is_zero:
            continue
        v = col.min_exp
        shifted = col.shifted(-v) if v else col
        dense = [0] * (shifted.max_exp + 1)
        for e, c in shifted._terms.items():
            if not isinstance(c, int):
                return None
            dense[e] = c
        prepared.append((sum(c << e for e, c in enumerate(dense)), dense))
    if not prepared:
        return True
    for e in range(2, d + 1):
        phi2 = _cyclo_at2(e)
        if any(v2 % phi2 for v2, _ in prepared):
            continue
        if all(
            _divexact_int(dense, _cyclo_dense(e)) is not None
            for _, dense in prepared
        ):
            return False
    return True


def _divexact_int(a: list[int], b: tuple[int, ...]):
    """Exact ascending division of integer dense lists; b[0] must be 1."""
    n = len(a) - len(b) + 1
    if n <= 0:
        return None
    rem = list(a)
    quot = [0] * n
    for k in range(n):
        c = rem[k]
        if c:
            quot[k] = c
            for j, bc in enumerate(b):
                rem[k + j] -= c * bc
    if any(rem):
        return None
    while quot and quot[-1] == 0:
        quot.pop()
    return quot


# -- q-Stirling numbers -------------------------------------------------------


@cache
def q_stirling(n: int, k: int) -> QLaurent:
    """S_q(n, k) = S_q(n-1, k-1) + [k]_q S_q(n-1, k), S_q(0, 0) = 1."""
    if n < 0 or k < 0:
        raise ValueError("q_stirling needs n, k >= 0")
    if n == 0 or k == 0:
        return ONE if n == k else ZERO
    if k > n:
        return ZERO
    return q_stirling(n - 1, k - 1) + q_int(k) * q_stirling(n - 1, k)


# -- Newton interpolation over Q(q) -------------------------------------------


def newton_interpolate(nodes: Sequence[ScalarLike], values: Sequence[ScalarLike]) -> XPoly:
    """The unique polynomial of degree < len(nodes) through the given points.

    Uses divided differences; repeated nodes are rejected.
    """
    xs = [_coerce_ratfunc(x) for x in nodes]
    ys = [_coerce_ratfunc(y) for y in values]
    if NotImplemented in xs or NotImplemented in ys:
        raise TypeError("interpolation needs Q(q) nodes and values")
    if len(xs) != len(ys):
        raise ValueError("nodes and values differ in length")
    if len(set(xs)) != len(xs):
        raise ValueError("repeated interpolation nodes")
    if not xs:
        return XPoly.zero()
    table = list(ys)
    n = len(xs)
    coefs = [table[0]]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - j])
        coefs.append(table[j])
    acc = XPoly.const(coefs[-1])
    for j in range(n - 2, -1, -1):
        acc = _mul_linear(acc, RF_ONE, -xs[j])
        acc = acc + XPoly.const(coefs[j])
    return acc


def q1_specialize(f: XPoly) -> XPoly:
    """The polynomial over Q obtained by evaluating every coefficient at q = 1."""
    return XPoly([QRatFunc(QLaurent.monomial(0, c.eval_at(1))) for c in f.coeffs])

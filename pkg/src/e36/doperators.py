"""Operators on S (x) M, where S = C[dh1,dh2,dh3] and M is the sl(3) model.

Elements are polynomials in nine slots, dh1..dh3, d1..d3, x1..x3, reduced
modulo P in the last six. sl(3) acts diagonally, the hatted letters
transforming like d1..d3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from . import linalg
from .model import SL3_MATRIX, ModelElement, NV as MODEL_NV, _reduce_monomial, canonical_monomials
from .scalar import Polynomial, _norm

NS = 9
SM_NAMES = ("dh1", "dh2", "dh3", "del1", "del2", "del3", "x1", "x2", "x3")
Exp = Tuple[int, ...]


def _reduce9(e: Exp) -> Tuple[Tuple[Exp, int], ...]:
    head = e[:3]
    return tuple((head + t, c) for t, c in _reduce_monomial(e[3:]))


def _clean(acc: Dict[Exp, object]) -> Polynomial:
    return Polynomial._raw({k: _norm(v) for k, v in acc.items() if v}, NS)


class SMElement:
    """sum_alpha dh^alpha t_alpha with t_alpha in M."""

    __slots__ = ("poly",)

    def __init__(self, poly: Polynomial, reduced: bool = False):
        if poly.nvars != NS:
            raise ValueError("S (x) M elements have nine variable slots")
        if not reduced:
            acc: Dict[Exp, object] = {}
            for e, c in poly.items():
                for t, k in _reduce9(e):
                    acc[t] = acc.get(t, 0) + c * k
            poly = _clean(acc)
        self.poly = poly

    @classmethod
    def from_parts(cls, parts: Mapping[Tuple[int, int, int], ModelElement]) -> "SMElement":
        acc: Dict[Exp, object] = {}
        for alpha, m in parts.items():
            for e, c in m.poly.items():
                acc[tuple(alpha) + e] = c
        return cls(_clean(acc), reduced=True)

    @classmethod
    def of_model(cls, m: ModelElement, alpha=(0, 0, 0)) -> "SMElement":
        return cls.from_parts({tuple(alpha): m})

    @classmethod
    def monomial(cls, alpha, dexp, xexp, c=1) -> "SMElement":
        return cls(Polynomial.monomial(tuple(alpha) + tuple(dexp) + tuple(xexp), c))

    def parts(self) -> Dict[Tuple[int, int, int], ModelElement]:
        acc: Dict[Tuple[int, int, int], Dict[Exp, object]] = {}
        for e, c in self.poly.items():
            acc.setdefault(e[:3], {})[e[3:]] = c
        return {a: ModelElement(Polynomial._raw(t, MODEL_NV), reduced=True) for a, t in sorted(acc.items())}

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __bool__(self) -> bool:
        return not self.poly.is_zero()

    def __add__(self, other: "SMElement") -> "SMElement":
        return SMElement(self.poly + other.poly, reduced=True)

    def __sub__(self, other: "SMElement") -> "SMElement":
        return SMElement(self.poly - other.poly, reduced=True)

    def __neg__(self) -> "SMElement":
        return SMElement(-self.poly, reduced=True)

    def scale(self, c) -> "SMElement":
        return SMElement(self.poly.scale(c), reduced=True)

    def __mul__(self, other):
        """Product in the commutative ring S (x) M."""
        if isinstance(other, SMElement):
            return SMElement(self.poly * other.poly)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, SMElement) and self.poly == other.poly

    def __hash__(self) -> int:
        return hash(self.poly)

    def __str__(self) -> str:
        return self.poly.to_string(SM_NAMES)

    def __repr__(self) -> str:
        return f"SMElement({self})"


def hat(i: int) -> SMElement:
    return SMElement(Polynomial.var(i - 1, NS), reduced=True)


def sm_d(i: int) -> SMElement:
    return SMElement(Polynomial.var(2 + i, NS), reduced=True)


def sm_x(i: int) -> SMElement:
    return SMElement(Polynomial.var(5 + i, NS), reduced=True)


SM_ONE = SMElement(Polynomial.const(1, NS), reduced=True)


@lru_cache(maxsize=None)
def _unit9(i: int, j: int, e: Exp) -> Tuple[Tuple[Exp, object], ...]:
    """x_i d/dx_j on a monomial of S (x) M, reduced."""
    acc: Dict[Exp, object] = {}

    def bump(src: int, dst: int, k: int, sign: int):
        t = list(e)
        t[src] -= 1
        t[dst] += 1
        t = tuple(t)
        acc[t] = acc.get(t, 0) + sign * k

    if e[5 + j]:
        bump(5 + j, 5 + i, e[5 + j], 1)
    if e[2 + i]:
        bump(2 + i, 2 + j, e[2 + i], -1)
    if e[i - 1]:
        bump(i - 1, j - 1, e[i - 1], -1)
    out: Dict[Exp, object] = {}
    for t, c in acc.items():
        for u, m in _reduce9(t):
            out[u] = out.get(u, 0) + c * m
    return tuple((u, c) for u, c in out.items() if c)


def sl3_apply(name: str, v: SMElement) -> SMElement:
    acc: Dict[Exp, object] = {}
    for (i, j), g in SL3_MATRIX[name].items():
        for e, c in v.poly.items():
            for u, m in _unit9(i, j, e):
                acc[u] = acc.get(u, 0) + g * c * m
    return SMElement(_clean(acc), reduced=True)


# -- operator words -------------------------------------------------------------


class Op:
    """Formal operator on S (x) M; call it on an SMElement to evaluate."""

    def __call__(self, v: SMElement) -> SMElement:
        raise NotImplementedError

    def __mul__(self, other: "Op") -> "Op":
        if isinstance(other, (int, Fraction)):
            return Scale(other, self)
        return Compose((self, other))

    def __rmul__(self, c) -> "Op":
        return Scale(c, self)

    def __add__(self, other: "Op") -> "Op":
        return Sum((self, other))

    def __sub__(self, other: "Op") -> "Op":
        return Sum((self, Scale(-1, other)))

    def shift(self, m) -> "Op":
        """self + m * identity"""
        return Sum((self, Scale(m, IDENTITY))) if m else self


@dataclass(frozen=True)
class Hat(Op):
    i: int

    def __call__(self, v):
        return hat(self.i) * v

    def __str__(self):
        return f"dh{self.i}"


@dataclass(frozen=True)
class Mult(Op):
    """Left multiplication by a fixed element of S (x) M."""

    m: SMElement
    label: str = ""

    def __call__(self, v):
        return self.m * v

    def __str__(self):
        return self.label or f"[{self.m}]"


@dataclass(frozen=True)
class Act(Op):
    name: str

    def __call__(self, v):
        return sl3_apply(self.name, v) if self.name in SL3_MATRIX else SMElement(Polynomial.zero(NS), reduced=True)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Compose(Op):
    """Product of factors; the rightmost factor is applied first."""

    factors: Tuple[Op, ...]

    def __call__(self, v):
        for f in reversed(self.factors):
            if v.is_zero():
                break
            v = f(v)
        return v

    def __str__(self):
        return "*".join(f"({f})" if isinstance(f, Sum) else str(f) for f in self.factors) or "1"


@dataclass(frozen=True)
class Sum(Op):
    terms: Tuple[Op, ...]

    def __call__(self, v):
        out = SMElement(Polynomial.zero(NS), reduced=True)
        for t in self.terms:
            out = out + t(v)
        return out

    def __str__(self):
        return " + ".join(str(t) for t in self.terms)


@dataclass(frozen=True)
class Scale(Op):
    c: object
    op: Op

    def __call__(self, v):
        return self.op(v).scale(self.c)

    def __str__(self):
        return f"{self.c}*{self.op}" if not isinstance(self.op, Compose) or self.op.factors else str(self.c)


IDENTITY = Compose(())
OperatorWord = Op


def falling(op: Op, n: int) -> Op:
    """op^[n] = op (op - 1) ... (op - n + 1)"""
    return Compose(tuple(op.shift(-k) for k in range(n)))


def power(op: Op, n: int) -> Op:
    return Compose((op,) * n)


H1, H2 = Act("h1"), Act("h2")
F1, F2, F12, F3 = Act("f1"), Act("f2"), Act("f12"), Act("f3")
H = Sum((H1, H2, IDENTITY))  # h = h1 + h2 + 1
A_OP = Sum((Compose((Hat(1), H1)), Compose((Hat(2), F1))))
B_OP = Sum((Compose((F12, H1)), Compose((F2, F1))))

DBAR: Dict[int, Op] = {
    1: Sum(tuple(Compose((Hat(i), Mult(sm_x(i), f"[x{i}]"))) for i in (1, 2, 3))),
    2: Sum((Compose((Hat(2), Mult(sm_d(3), "[del3]"))), Scale(-1, Compose((Hat(3), Mult(sm_d(2), "[del2]")))))),
    3: Hat(3),
}


def d2_shift(m) -> Op:
    """D2{+m} = dh2 (h2 + m) + dh3 f2"""
    return Sum((Compose((Hat(2), H2.shift(m))), Compose((Hat(3), F2))))


D_OPS: Dict[int, Op] = {
    1: Sum((Compose((A_OP, H)), Compose((Hat(3), B_OP)))),
    2: d2_shift(0),
    3: Hat(3),
}

# variant with f12 h in the dh2 slot and f3 h1 + f2 f1 in the dh3 slot; f3 acts by 0 here
D1_PRINTED: Op = Sum((
    Compose((Hat(1), H1, H)),
    Compose((Hat(2), F12, H)),
    Compose((Hat(3), Sum((Compose((F3, H1)), Compose((F2, F1)))))),
))


def dbar_apply(i: int, v: SMElement) -> SMElement:
    return DBAR[i](v)


def d_apply(i: int, v: SMElement) -> SMElement:
    return D_OPS[i](v)


def d_power(alpha: Sequence[int]) -> Op:
    """D^alpha = D1^a1 D2^a2 D3^a3"""
    return Compose(tuple([D_OPS[1]] * alpha[0] + [D_OPS[2]] * alpha[1] + [D_OPS[3]] * alpha[2]))


def dbar_power(alpha: Sequence[int]) -> Op:
    """Dbar^alpha = Dbar3^a3 Dbar2^a2 Dbar1^a1 (all commute)."""
    return Compose(tuple([DBAR[3]] * alpha[2] + [DBAR[2]] * alpha[1] + [DBAR[1]] * alpha[0]))


# each operator as D = a h + del b: (a, b, del, h)
EXPANSION_DATA: Dict[str, Tuple[Op, Op, Op, Op]] = {
    "D1": (A_OP, B_OP, Hat(3), H),
    "D2": (Hat(2), F2, Hat(3), H2),
    "A": (Hat(1), F1, Hat(2), H1),
}


def expansion_base(which: str) -> Op:
    a, b, dl, h = EXPANSION_DATA[which]
    return Sum((Compose((a, h)), Compose((dl, b))))


def dpow_expand(k: int, which: str) -> Op:
    """sum_m binom(k,m) del^m b^m a^(k-m) (h-m)^[k-m]"""
    if k < 1:
        raise ValueError("k must be positive")
    if which not in EXPANSION_DATA:
        raise ValueError(f"unknown operator {which!r}; expected one of {sorted(EXPANSION_DATA)}")
    a, b, dl, h = EXPANSION_DATA[which]
    terms = []
    for m in range(k + 1):
        word = (dl,) * m + (b,) * m + (a,) * (k - m) + (falling(h.shift(-m), k - m),)
        terms.append(Scale(comb(k, m), Compose(word)))
    return Sum(tuple(terms))


# -- leading terms and decompositions --------------------------------------------


@dataclass(frozen=True)
class LhtResult:
    sigma: Tuple[int, int, int]
    leading: ModelElement


def lht(v: SMElement) -> LhtResult:
    if v.is_zero():
        raise ValueError("the zero element has no leading term")
    parts = v.parts()
    sigma = max(parts)
    return LhtResult(sigma, parts[sigma])


def hwv_vector(p: int, q: int) -> SMElement:
    return SMElement.monomial((0, 0, 0), (0, 0, q), (p, 0, 0))


def sm_weight(e: Exp) -> Tuple[int, int]:
    from .model import monomial_weight

    a, b = monomial_weight(e[3:])
    h1, h2, h3 = e[:3]
    return a + h2 - h1, b + h3 - h2


def is_sl3_hwv(v: SMElement) -> bool:
    if v.is_zero():
        return False
    if not sl3_apply("e1", v).is_zero() or not sl3_apply("e2", v).is_zero():
        return False
    return len({sm_weight(e) for e in v.poly.terms}) == 1


def hwv_decompose(w: SMElement, p: int, q: int) -> Dict[Tuple[int, int, int], Fraction]:
    """Coefficients c_alpha with w = sum c_alpha D^alpha m0, m0 = [del3^q x1^p]."""
    if not is_sl3_hwv(w):
        raise ValueError("input is not an sl(3) highest weight vector")
    degs = {sum(e[:3]) for e in w.poly.terms}
    if len(degs) != 1:
        raise ValueError("input is not homogeneous in S")
    n = degs.pop()
    target = sm_weight(next(iter(w.poly.terms)))
    m0 = hwv_vector(p, q)
    alphas, cols = [], []
    for a1 in range(min(p, n) + 1):
        for a2 in range(min(q, n - a1) + 1):
            alpha = (a1, a2, n - a1 - a2)
            # weight of D^alpha m0 is (p,q) - (a1,a2) + (a2,a3)
            if (p - a1 + a2, q - a2 + alpha[2]) != target:
                continue
            img = d_power(alpha)(m0)
            if img:
                alphas.append(alpha)
                cols.append(dict(img.poly.items()))
    try:
        sol = linalg.solve(cols, dict(w.poly.items()))
    except ValueError as exc:
        raise ValueError("coefficient system is singular") from exc
    if sol is None:
        raise ValueError("vector is not in the span of the D^alpha m0")
    return {a: _norm(c) for a, c in zip(alphas, sol) if c}


def reconstruct(coeffs: Mapping[Tuple[int, int, int], object], p: int, q: int) -> SMElement:
    m0 = hwv_vector(p, q)
    out = SMElement(Polynomial.zero(NS), reduced=True)
    for alpha, c in coeffs.items():
        out = out + d_power(alpha)(m0).scale(c)
    return out


def ff(x, n: int):
    """Falling factorial x^[n] of a number."""
    out = 1
    for k in range(n):
        out *= x - k
    return out


def sm_basis(p: int, q: int, sdeg: int) -> List[SMElement]:
    """Monomial basis of S^{<= sdeg} (x) F(p,q)."""
    out = []
    for n in range(sdeg + 1):
        for a1 in range(n, -1, -1):
            for a2 in range(n - a1, -1, -1):
                alpha = (a1, a2, n - a1 - a2)
                for e in canonical_monomials(p, q):
                    out.append(SMElement(Polynomial._raw({alpha + e: 1}, NS), reduced=True))
    return out

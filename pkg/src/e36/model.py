"""The sl(3) model M = C[d1,d2,d3,x1,x2,x3]/(P), P = d1 x1 + d2 x2 + d3 x3,
and the finite-dimensional g0-modules F(p,q;r;y) built from it.

Model polynomials live in six commuting slots: d1,d2,d3 (slots 0-2) then
x1,x2,x3 (slots 3-5). Canonical representatives contain no monomial that is
divisible by d1*x1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from .algebra import G0_BASIS, SL2, SL3, Weight, g0_decompose
from .e510 import SuperElement
from .scalar import Polynomial, _norm

NV = 6
MODEL_NAMES = ("del1", "del2", "del3", "x1", "x2", "x3")

Exp = Tuple[int, ...]
Vector = Dict[object, object]


def dvar(i: int) -> Polynomial:
    return Polynomial.var(i - 1, NV)


def xvar(i: int) -> Polynomial:
    return Polynomial.var(i + 2, NV)


P = dvar(1) * xvar(1) + dvar(2) * xvar(2) + dvar(3) * xvar(3)
_TAIL = -(dvar(2) * xvar(2) + dvar(3) * xvar(3))


@lru_cache(maxsize=None)
def _tail_power(c: int) -> Polynomial:
    return _TAIL ** c


@lru_cache(maxsize=None)
def _reduce_monomial(e: Exp) -> Tuple[Tuple[Exp, int], ...]:
    c = min(e[0], e[3])
    if c == 0:
        return ((e, 1),)
    rest = (e[0] - c, e[1], e[2], e[3] - c, e[4], e[5])
    out = []
    for t, k in _tail_power(c).items():
        out.append((tuple(a + b for a, b in zip(rest, t)), k))
    return tuple(out)


def reduce_poly(p: Polynomial) -> Polynomial:
    acc: Dict[Exp, object] = {}
    for e, c in p.items():
        for t, k in _reduce_monomial(e):
            acc[t] = acc.get(t, 0) + c * k
    return Polynomial._raw({t: _norm(c) for t, c in acc.items() if c}, NV)


class ModelElement:
    """A coset of C[d,x] modulo (P), stored by its canonical representative."""

    __slots__ = ("poly",)

    def __init__(self, poly: Polynomial, reduced: bool = False):
        if poly.nvars != NV:
            raise ValueError("model polynomials have six variables")
        self.poly = poly if reduced else reduce_poly(poly)

    @classmethod
    def monomial(cls, dexp: Iterable[int], xexp: Iterable[int], c=1) -> "ModelElement":
        return cls(Polynomial.monomial(tuple(dexp) + tuple(xexp), c))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __bool__(self) -> bool:
        return not self.poly.is_zero()

    def __add__(self, other: "ModelElement") -> "ModelElement":
        return ModelElement(self.poly + other.poly, reduced=True)

    def __sub__(self, other: "ModelElement") -> "ModelElement":
        return ModelElement(self.poly - other.poly, reduced=True)

    def __neg__(self) -> "ModelElement":
        return ModelElement(-self.poly, reduced=True)

    def scale(self, c) -> "ModelElement":
        return ModelElement(self.poly.scale(c), reduced=True)

    def __mul__(self, other):
        if isinstance(other, ModelElement):
            return ModelElement(self.poly * other.poly)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, ModelElement) and self.poly == other.poly

    def __hash__(self) -> int:
        return hash(self.poly)

    def bidegrees(self) -> set:
        return {(sum(e[3:]), sum(e[:3])) for e in self.poly.terms}

    def __str__(self) -> str:
        return self.poly.to_string(MODEL_NAMES)

    def __repr__(self) -> str:
        return f"[{self}]"


def model_reduce(p: Polynomial) -> ModelElement:
    return ModelElement(p)


# sl(3) elements as matrices {(i, j): c} meaning sum c * x_i d/dx_j
SL3_MATRIX: Dict[str, Dict[Tuple[int, int], int]] = {
    "h1": {(1, 1): 1, (2, 2): -1},
    "h2": {(2, 2): 1, (3, 3): -1},
    "e1": {(1, 2): 1},
    "e2": {(2, 3): 1},
    "e12": {(1, 3): 1},
    "f1": {(2, 1): 1},
    "f2": {(3, 2): 1},
    "f12": {(3, 1): 1},
}


@lru_cache(maxsize=None)
def _unit_act(i: int, j: int, e: Exp) -> Tuple[Tuple[Exp, object], ...]:
    """x_i d/dx_j applied to the monomial e, then reduced."""
    acc: Dict[Exp, object] = {}
    # on x-part: x_i * d/dx_j
    k = e[2 + j]
    if k:
        t = list(e)
        t[2 + j] -= 1
        t[2 + i] += 1
        acc[tuple(t)] = acc.get(tuple(t), 0) + k
    # on d-part: -d_j * d/d(d_i)
    k = e[i - 1]
    if k:
        t = list(e)
        t[i - 1] -= 1
        t[j - 1] += 1
        acc[tuple(t)] = acc.get(tuple(t), 0) - k
    out: Dict[Exp, object] = {}
    for t, c in acc.items():
        for u, m in _reduce_monomial(t):
            out[u] = out.get(u, 0) + c * m
    return tuple((u, c) for u, c in out.items() if c)


def sl3_matrix(g) -> Dict[Tuple[int, int], object]:
    """Normalize a name, a SuperElement or a matrix to matrix form."""
    if isinstance(g, str):
        if g not in SL3_MATRIX:
            raise ValueError(f"{g} is not an sl(3) generator")
        return SL3_MATRIX[g]
    if isinstance(g, SuperElement):
        coords = g0_decompose(g)
        if any(k not in SL3 for k in coords):
            raise ValueError(f"{g} is not in sl(3)")
        mat: Dict[Tuple[int, int], object] = {}
        for name, c in coords.items():
            for ij, v in SL3_MATRIX[name].items():
                mat[ij] = mat.get(ij, 0) + c * v
        return {ij: v for ij, v in mat.items() if v}
    return dict(g)


def sl3_act_poly(mat: Mapping[Tuple[int, int], object], p: Polynomial) -> Polynomial:
    acc: Dict[Exp, object] = {}
    for (i, j), g in mat.items():
        for e, c in p.items():
            for u, m in _unit_act(i, j, e):
                acc[u] = acc.get(u, 0) + g * c * m
    return Polynomial._raw({u: _norm(c) for u, c in acc.items() if c}, NV)


def model_act(g, m: ModelElement) -> ModelElement:
    return ModelElement(sl3_act_poly(sl3_matrix(g), m.poly), reduced=True)


def monomial_weight(e: Exp) -> Tuple[int, int]:
    """sl(3) weight (h1, h2) of the model monomial d^e[:3] x^e[3:]."""
    a = e[3] - e[4] + e[1] - e[0]
    b = e[4] - e[5] + e[2] - e[1]
    return a, b


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for k in range(total, -1, -1):
        for rest in _compositions(total - k, parts - 1):
            yield (k,) + rest


def canonical_monomials(p: int, q: int) -> List[Exp]:
    """Basis of the bigraded component F(p,q): x-degree p, d-degree q."""
    out = []
    for dexp in _compositions(q, 3):
        for xexp in _compositions(p, 3):
            if dexp[0] and xexp[0]:
                continue
            out.append(dexp + xexp)
    return sorted(out, reverse=True)


def weyl_dimension(p: int, q: int) -> int:
    return (p + 1) * (q + 1) * (p + q + 2) // 2


def bigraded_dimension(m: int, n: int) -> int:
    return comb(m + 2, 2) * comb(n + 2, 2) - comb(m + 1, 2) * comb(n + 1, 2)


class IrrepF:
    """F(p,q;r;y): the model component of bidegree (p,q) tensor the (r+1)-dim
    sl(2)-irrep, with Y acting by the scalar y.

    Basis index n corresponds to (monos[n // (r+1)], n % (r+1)). The scalar y
    may be a Fraction or a univariate polynomial (parametric searches).
    """

    def __init__(self, p: int, q: int, r: int = 0, y=0):
        if min(p, q, r) < 0:
            raise ValueError("p, q, r must be non-negative")
        self.p, self.q, self.r, self.y = p, q, r, y
        self.monos = canonical_monomials(p, q)
        self.index = {e: n for n, e in enumerate(self.monos)}
        self.dim = len(self.monos) * (r + 1)
        self._cache: Dict[Tuple[str, int], Vector] = {}

    def key(self, n: int) -> Tuple[Exp, int]:
        return self.monos[n // (self.r + 1)], n % (self.r + 1)

    def idx(self, e: Exp, k: int) -> int:
        return self.index[e] * (self.r + 1) + k

    @property
    def hwv(self) -> int:
        return self.idx((0, 0, self.q, self.p, 0, 0), 0)

    def weight(self, n: int) -> Weight:
        e, k = self.key(n)
        a, b = monomial_weight(e)
        return Weight(a, b, self.r - 2 * k, self.y)

    def act_basis(self, name: str, n: int) -> Vector:
        """Image of basis vector n under a named g0 basis element."""
        ck = (name, n)
        hit = self._cache.get(ck)
        if hit is not None:
            return hit
        e, k = self.key(n)
        out: Vector = {}
        if name in SL3_MATRIX:
            for u, c in sl3_act_poly(SL3_MATRIX[name], Polynomial._raw({e: 1}, NV)).items():
                out[self.idx(u, k)] = c
        elif name == "h3":
            if self.r - 2 * k:
                out[n] = self.r - 2 * k
        elif name == "f3":
            if k < self.r:
                out[n + 1] = 1
        elif name == "e3":
            if k > 0:
                out[n - 1] = k * (self.r - k + 1)
        elif name == "Y":
            if self.y:
                out[n] = self.y
        else:
            raise ValueError(f"unknown g0 basis element {name!r}")
        self._cache[ck] = out
        return out

    def act(self, g, vec: Mapping[int, object]) -> Vector:
        """Action of a name, a g0 SuperElement or a coordinate map {name: c}."""
        coords = _g0_coords(g)
        out: Vector = {}
        for name, c in coords.items():
            for n, v in vec.items():
                for m, w in self.act_basis(name, n).items():
                    out[m] = out.get(m, 0) + c * v * w
        return {m: v for m, v in out.items() if v}

    def vector_of(self, m: ModelElement, k: int = 0) -> Vector:
        out = {}
        for e, c in m.poly.items():
            if e not in self.index:
                raise ValueError(f"{m} is not in F({self.p},{self.q})")
            out[self.idx(e, k)] = c
        return out

    def element_of(self, vec: Mapping[int, object]) -> Dict[int, ModelElement]:
        """Split a vector into model elements per sl(2) index."""
        parts: Dict[int, Dict[Exp, object]] = {}
        for n, c in vec.items():
            e, k = self.key(n)
            parts.setdefault(k, {})[e] = c
        return {k: ModelElement(Polynomial._raw(t, NV), reduced=True) for k, t in sorted(parts.items())}

    def __repr__(self) -> str:
        return f"IrrepF({self.p},{self.q};{self.r};{self.y})"


def _g0_coords(g) -> Dict[str, object]:
    if isinstance(g, str):
        return {g: 1}
    if isinstance(g, SuperElement):
        return g0_decompose(g)
    return dict(g)


def build_irrep(p: int, q: int, r: int = 0, y=0) -> IrrepF:
    return IrrepF(p, q, r, y)


def hwv_test(v: Mapping, module) -> bool:
    """e1, e2, e3 kill v and v is an eigenvector of h1, h2, h3 (and Y)."""
    if not v:
        return False
    for name in ("e1", "e2", "e3"):
        if module.act(name, v):
            return False
    for name in ("h1", "h2", "h3", "Y"):
        img = module.act(name, v)
        n0, c0 = next(iter(v.items()))
        lam = img.get(n0, 0) * Fraction(1) / c0
        if img != {m: _norm(lam * c) for m, c in v.items() if lam * c}:
            return False
    return True


def hwv_lines(m: int, n: int) -> List[ModelElement]:
    """Highest weight vectors of the bigraded component, one per weight space."""
    from . import linalg

    monos = canonical_monomials(m, n)
    by_weight: Dict[Tuple[int, int], List[Exp]] = {}
    for e in monos:
        by_weight.setdefault(monomial_weight(e), []).append(e)
    out = []
    for w, es in sorted(by_weight.items()):
        rows: Dict[Tuple[str, Exp], Dict[int, object]] = {}
        for col, e in enumerate(es):
            for name in ("e1", "e2"):
                for u, c in _unit_act(*next(iter(SL3_MATRIX[name])), e):
                    rows.setdefault((name, u), {})[col] = c
        for vec in linalg.nullspace(list(rows.values()), len(es)):
            out.append(ModelElement(Polynomial._raw({e: _norm(c) for e, c in zip(es, vec) if c}, NV), reduced=True))
    return out

"""Exact linear algebra: fraction-free elimination over Q and over Q[y].

Matrices are sparse: a list of rows, each a ``{column: coefficient}`` dict.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

Row = Dict[int, object]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _integer_row(row: Row) -> Dict[int, int]:
    den = 1
    for c in row.values():
        den = _lcm(den, Fraction(c).denominator)
    out = {k: int(Fraction(v) * den) for k, v in row.items() if v}
    return _primitive(out)


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def echelon(rows: Sequence[Row], ncols: int) -> Tuple[List[Tuple[int, Dict[int, int]]], List[int]]:
    """Reduced echelon form by integer (fraction-free) row operations.

    Pivoting is deterministic: columns left to right, lowest row index first.
    Returns ``(pivots, free_columns)`` with ``pivots`` a list of
    ``(pivot_column, integer_row)``.
    """
    work = [_integer_row(r) for r in rows]
    work = [r for r in work if r]
    pivots: List[Tuple[int, Dict[int, int]]] = []
    free: List[int] = []
    for c in range(ncols):
        pi = next((i for i, r in enumerate(work) if c in r), None)
        if pi is None:
            free.append(c)
            continue
        prow = work.pop(pi)
        pv = prow[c]
        for i, r in enumerate(work):
            rv = r.get(c)
            if rv:
                work[i] = _combine(r, pv, prow, -rv)
        for k, (pc, r) in enumerate(pivots):
            rv = r.get(c)
            if rv:
                pivots[k] = (pc, _combine(r, pv, prow, -rv))
        pivots.append((c, prow))
        work = [r for r in work if r]
    return pivots, free


def _combine(r: Dict[int, int], a: int, s: Dict[int, int], b: int) -> Dict[int, int]:
    # a*r + b*s, content-reduced
    out = {k: a * v for k, v in r.items()}
    for k, v in s.items():
        t = out.get(k, 0) + b * v
        if t:
            out[k] = t
        else:
            out.pop(k, None)
    return _primitive(out)


def rank(rows: Sequence[Row], ncols: int) -> int:
    return len(echelon(rows, ncols)[0])


def nullspace(rows: Sequence[Row], ncols: int) -> List[List[Fraction]]:
    """Basis of {v : M v = 0} as primitive integer vectors (as Fractions)."""
    pivots, free = echelon(rows, ncols)
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for pc, r in pivots:
            v = r.get(f)
            if v:
                vec[pc] = Fraction(-v, r[pc])
        basis.append(_primitive_vector(vec))
    return basis


def _primitive_vector(vec: List[Fraction]) -> List[Fraction]:
    den = 1
    for v in vec:
        den = _lcm(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = reduce(gcd, ints, 0) or 1
    lead = next((v for v in ints if v), 1)
    if lead < 0:
        g = -g
    return [Fraction(v, g) for v in ints]


def solve(columns: Sequence[Row], target: Row) -> Optional[List[Fraction]]:
    """Unique exact solution c of ``sum_k c_k * columns[k] = target``.

    Columns and target are sparse vectors keyed by arbitrary hashable
    coordinates. Returns None when inconsistent; raises ValueError when the
    columns are linearly dependent.
    """
    n = len(columns)
    keys = set(target)
    for col in columns:
        keys.update(col)
    index = {key: i for i, key in enumerate(sorted(keys, key=repr))}
    rows: Dict[int, Row] = {}
    for k, col in enumerate(columns):
        for key, v in col.items():
            if v:
                rows.setdefault(index[key], {})[k] = v
    for key, v in target.items():
        if v:
            rows.setdefault(index[key], {})[n] = -Fraction(v)
    kernel = nullspace(list(rows.values()), n + 1)
    if any(v[n] == 0 for v in kernel):
        raise ValueError("linear system has no unique solution (columns are dependent)")
    if not kernel:
        return None
    v = kernel[0]
    return [x / v[n] for x in v[:n]]


class UPoly:
    """Univariate polynomial in ``y`` over Q; coefficients low degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [Fraction(x) for x in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.c = tuple(cs)

    @classmethod
    def y(cls) -> "UPoly":
        return cls((0, 1))

    @classmethod
    def lift(cls, x) -> "UPoly":
        return x if isinstance(x, UPoly) else cls((x,))

    def degree(self) -> int:
        return len(self.c) - 1

    def __bool__(self) -> bool:
        return bool(self.c)

    def coeff(self, k: int) -> Fraction:
        return self.c[k] if k < len(self.c) else Fraction(0)

    def __add__(self, other) -> "UPoly":
        if not isinstance(other, (UPoly, int, Fraction)):
            return NotImplemented
        o = UPoly.lift(other).c
        n = max(len(self.c), len(o))
        return UPoly([(self.c[i] if i < len(self.c) else 0) + (o[i] if i < len(o) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "UPoly":
        return UPoly([-x for x in self.c])

    def __sub__(self, other) -> "UPoly":
        return self + (-UPoly.lift(other))

    def __rsub__(self, other) -> "UPoly":
        return UPoly.lift(other) - self

    def __mul__(self, other) -> "UPoly":
        if isinstance(other, (int, Fraction)):
            return UPoly([x * other for x in self.c])
        if not isinstance(other, UPoly):
            return NotImplemented
        if not self.c or not other.c:
            return UPoly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            for j, b in enumerate(other.c):
                out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "UPoly") -> Tuple["UPoly", "UPoly"]:
        other = UPoly.lift(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.c)
        q = [Fraction(0)] * max(len(rem) - len(other.c) + 1, 0)
        lead = other.c[-1]
        for k in range(len(rem) - len(other.c), -1, -1):
            t = rem[k + len(other.c) - 1] / lead
            q[k] = t
            if t:
                for j, b in enumerate(other.c):
                    rem[k + j] -= t * b
        return UPoly(q), UPoly(rem[: len(other.c) - 1])

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UPoly.lift(other)
        return isinstance(other, UPoly) and self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def monic(self) -> "UPoly":
        if not self.c:
            return self
        return self * (1 / self.c[-1])

    def __call__(self, value) -> Fraction:
        acc = Fraction(0)
        for x in reversed(self.c):
            acc = acc * value + x
        return acc

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    def rational_roots(self) -> List[Tuple[Fraction, int]]:
        """Rational roots with multiplicity (rational root theorem)."""
        if not self.c:
            raise ValueError("the zero polynomial vanishes everywhere")
        roots = []
        p = self
        while p.degree() >= 1 and p.c[0] == 0:
            p = UPoly(p.c[1:])
            roots.append(Fraction(0))
        if p.degree() >= 1:
            den = reduce(_lcm, (x.denominator for x in p.c), 1)
            ints = [int(x * den) for x in p.c]
            a0, an = abs(ints[0]), abs(ints[-1])
            cands = set()
            for num in _divisors(a0):
                for d in _divisors(an):
                    cands.add(Fraction(num, d))
                    cands.add(Fraction(-num, d))
            for r in sorted(cands):
                while p.degree() >= 1 and p(r) == 0:
                    p, _ = divmod(p, UPoly((-r, 1)))
                    roots.append(r)
        out: Dict[Fraction, int] = {}
        for r in roots:
            out[r] = out.get(r, 0) + 1
        return sorted(out.items())

    def __str__(self) -> str:
        from .scalar import join_terms

        if not self.c:
            return "0"
        parts = []
        for k in range(len(self.c) - 1, -1, -1):
            x = self.c[k]
            if x:
                parts.append((x, "" if k == 0 else ("y" if k == 1 else f"y^{k}")))
        return join_terms(parts)

    def __repr__(self) -> str:
        return f"UPoly({str(self)!r})"


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0] if n else [1]


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    while b:
        a, b = b, divmod(a, b)[1]
    return a.monic()


def pencil_echelon(rows: Sequence[Dict[int, UPoly]], ncols: int):
    """Euclidean (unimodular) row reduction over Q[y].

    Returns ``(pivots, free)``; pivot rows are triangular in their pivot
    columns. No division by polynomials ever happens.
    """
    work = [{k: UPoly.lift(v) for k, v in r.items() if v} for r in rows]
    work = [r for r in work if r]
    pivots: List[Tuple[int, Dict[int, UPoly]]] = []
    free: List[int] = []
    for c in range(ncols):
        while True:
            cand = [i for i, r in enumerate(work) if c in r]
            if not cand:
                free.append(c)
                break
            pi = min(cand, key=lambda i: (work[i][c].degree(), i))
            prow = work[pi]
            clean = True
            for i in cand:
                if i == pi:
                    continue
                q, rem = divmod(work[i][c], prow[c])
                work[i] = _upoly_axpy(work[i], -q, prow)
                if rem:
                    clean = False
            if clean:
                pivots.append((c, prow))
                work.pop(pi)
                work = [r for r in work if r]
                break
            work = [r for r in work if r]
    return pivots, free


def _upoly_axpy(r: Dict[int, UPoly], a: UPoly, s: Dict[int, UPoly]) -> Dict[int, UPoly]:
    out = dict(r)
    for k, v in s.items():
        t = out.get(k, UPoly()) + a * v
        if t:
            out[k] = t
        else:
            out.pop(k, None)
    return out


def pencil_condition(rows: Sequence[Dict[int, UPoly]], ncols: int) -> Optional[UPoly]:
    """Monic gcd of the maximal minors, i.e. the y-values where the kernel is nonzero.

    Returns None when the kernel is nonzero for every y (generic rank deficit)
    and the constant 1 when it is zero for every y.
    """
    pivots, free = pencil_echelon(rows, ncols)
    if free:
        return None
    cond = UPoly((1,))
    for c, r in pivots:
        cond = cond * r[c].monic()
    return cond


def pencil_kernel(rows: Sequence[Dict[int, UPoly]], ncols: int) -> List[List[UPoly]]:
    """Kernel basis over Q(y), returned with polynomial entries."""
    pivots, free = pencil_echelon(rows, ncols)
    basis = []
    for f in free:
        vec = [UPoly() for _ in range(ncols)]
        vec[f] = UPoly((1,))
        for pc, r in reversed(pivots):
            acc = UPoly()
            for k, v in r.items():
                if k != pc:
                    acc = acc + v * vec[k]
            if not acc:
                continue
            piv = r[pc]
            q, rem = divmod(acc, piv)
            if rem:
                vec = [x * piv for x in vec]
                acc = acc * piv
                q, rem = divmod(acc, piv)
            vec[pc] = -q
        g = UPoly()
        for x in vec:
            if x:
                g = upoly_gcd(g, x) if g else x.monic()
        if g and g.degree() > 0:
            vec = [divmod(x, g)[0] for x in vec]
        basis.append(vec)
    return basis

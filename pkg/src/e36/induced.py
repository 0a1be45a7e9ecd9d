"""Induced modules M(F) = U(L-) (x) F, PBW normal ordering and singular vectors.

L- is spanned by the hatted even letters dh1..dh3 (degree -2) and the odd
letters d-_i = d_i5, d+_i = d_i4 (degree -1). A PBW monomial is stored as
(alpha, I, J): exponents of dh, the increasing d- subset and the increasing
d+ subset. In the (-+) order it reads dh^alpha d-_I d+_J, in the (+-) order
dh^alpha d+_J d-_I.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import linalg
from .algebra import NAMED, Weight, g0_decompose, g0_weight
from .e510 import SuperElement, consistent_degree, dminus, dp, dplus, homogeneous_components, super_bracket
from .linalg import UPoly
from .model import IrrepF
from .scalar import _norm, format_rational

Letter = Tuple[str, int]  # ("h", i) for dh_i, ("-", i) for d-_i, ("+", i) for d+_i
Mono = Tuple[Tuple[int, int, int], Tuple[int, ...], Tuple[int, ...]]
Key = Tuple[Mono, int]
ORDERS = ("-+", "+-")
ONE: Mono = ((0, 0, 0), (), ())


def letter_element(l: Letter) -> SuperElement:
    kind, i = l
    return dp(i) if kind == "h" else (dminus(i) if kind == "-" else dplus(i))


def letter_parity(l: Letter) -> int:
    return 0 if l[0] == "h" else 1


def lminus_expand(b: SuperElement) -> Dict[Letter, object]:
    """Coordinates of an element of L- in the letter basis."""
    out: Dict[Letter, object] = {}
    for kind, idx, e, c in b.monomials():
        if any(e):
            raise ValueError(f"{b} is not in L-")
        if kind == "field":
            if idx[0] > 3:
                raise ValueError(f"{b} is not in E(3,6)")
            out[("h", idx[0])] = c
        else:
            j, k = idx
            if j > 3 or k < 4:
                raise ValueError(f"{b} is not in E(3,6)")
            out[("+" if k == 4 else "-", j)] = c
    return out


LETTERS: Tuple[Letter, ...] = tuple(
    [("h", i) for i in (1, 2, 3)] + [("-", i) for i in (1, 2, 3)] + [("+", i) for i in (1, 2, 3)]
)
LETTER_WEIGHT: Dict[Letter, Weight] = {l: g0_weight(letter_element(l)) for l in LETTERS}

# [d+_j, d-_i] as a combination of dh letters; every other pair of letters commutes
_CROSS: Dict[Tuple[int, int], Dict[Letter, object]] = {
    (j, i): lminus_expand(super_bracket(dplus(j), dminus(i))) for j in (1, 2, 3) for i in (1, 2, 3)
}


def mono_depth(m: Mono) -> int:
    return 2 * sum(m[0]) + len(m[1]) + len(m[2])


def mono_weight(m: Mono) -> Tuple[int, int, int, Fraction]:
    a = b = r = 0
    y = Fraction(0)
    for l in mono_word(m, "-+"):
        w = LETTER_WEIGHT[l]
        a, b, r, y = a + w.a, b + w.b, r + w.r, y + w.y
    return a, b, r, y


def mono_word(m: Mono, order: str) -> Tuple[Letter, ...]:
    alpha, I, J = m
    hs = tuple(("h", i) for i in (1, 2, 3) for _ in range(alpha[i - 1]))
    minus = tuple(("-", i) for i in I)
    plus = tuple(("+", j) for j in J)
    return hs + (minus + plus if order == "-+" else plus + minus)


def _insert(s: Tuple[int, ...], i: int) -> Tuple[int, Optional[Tuple[int, ...]]]:
    """i * (wedge of s) = sign * wedge of sorted(s + i)."""
    if i in s:
        return 0, None
    pos = sum(1 for t in s if t < i)
    return (-1) ** pos, s[:pos] + (i,) + s[pos:]


_LEFT: Dict[Tuple[Letter, Mono, str], Dict[Mono, int]] = {}


def left_mul(l: Letter, m: Mono, order: str = "-+") -> Dict[Mono, int]:
    """l * m re-expressed in the given order."""
    ck = (l, m, order)
    hit = _LEFT.get(ck)
    if hit is not None:
        return hit
    alpha, I, J = m
    kind, i = l
    out: Dict[Mono, int] = {}
    first = "-" if order == "-+" else "+"
    if kind == "h":
        a = list(alpha)
        a[i - 1] += 1
        out[(tuple(a), I, J)] = 1
    elif kind == first:
        grp = I if kind == "-" else J
        s, new = _insert(grp, i)
        if s:
            out[(alpha, new, J) if kind == "-" else (alpha, I, new)] = s
    else:
        # l belongs to the second group and must pass the first group
        grp = I if first == "-" else J
        if not grp:
            other = J if kind == "+" else I
            s, new = _insert(other, i)
            if s:
                out[(alpha, I, new) if kind == "+" else (alpha, new, J)] = s
        else:
            g1, rest = grp[0], grp[1:]
            tail = (alpha, rest, J) if first == "-" else (alpha, I, rest)
            # l g1 X = -g1 (l X) + [l, g1] X
            for mm, c in left_mul(l, tail, order).items():
                for m2, c2 in left_mul((first, g1), mm, order).items():
                    out[m2] = out.get(m2, 0) - c * c2
            cross = _CROSS[(i, g1)] if kind == "+" else _CROSS[(g1, i)]
            for h, c in cross.items():
                for m2, c2 in left_mul(h, tail, order).items():
                    out[m2] = out.get(m2, 0) + c * c2
    out = {k: v for k, v in out.items() if v}
    _LEFT[ck] = out
    return out


def normal_order(word: Sequence[Letter], order: str = "-+") -> Dict[Mono, int]:
    """Expand a product of letters in the PBW basis of the given order."""
    acc: Dict[Mono, int] = {ONE: 1}
    for l in reversed(word):
        nxt: Dict[Mono, int] = {}
        for m, c in acc.items():
            for m2, c2 in left_mul(l, m, order).items():
                nxt[m2] = nxt.get(m2, 0) + c * c2
        acc = {k: v for k, v in nxt.items() if v}
    return acc


def monomials_at_depth(depth: int) -> List[Mono]:
    out = []
    subsets = [s for k in range(4) for s in combinations((1, 2, 3), k)]
    for na in range(depth // 2 + 1):
        odd = depth - 2 * na
        for a1 in range(na + 1):
            for a2 in range(na - a1 + 1):
                alpha = (a1, a2, na - a1 - a2)
                for I in subsets:
                    for J in subsets:
                        if len(I) + len(J) == odd:
                            out.append((alpha, I, J))
    return sorted(out)


def _add(out: dict, key, c):
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class InducedElement:
    """Finite combination of PBW monomials tensor basis vectors of F."""

    __slots__ = ("module", "order", "terms")

    def __init__(self, module: "InducedModule", terms: Mapping[Key, object], order: str = "-+"):
        if order not in ORDERS:
            raise ValueError(f"unknown order tag {order!r}")
        self.module = module
        self.order = order
        self.terms: Dict[Key, object] = {k: _norm(v) for k, v in terms.items() if v}

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _same(self, other: "InducedElement"):
        if other.module is not self.module or other.order != self.order:
            raise ValueError("elements live in different modules or orders")

    def __add__(self, other: "InducedElement") -> "InducedElement":
        self._same(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add(out, k, v)
        return InducedElement(self.module, out, self.order)

    def __neg__(self) -> "InducedElement":
        return self.scale(-1)

    def __sub__(self, other: "InducedElement") -> "InducedElement":
        return self + (-other)

    def scale(self, c) -> "InducedElement":
        return InducedElement(self.module, {k: v * c for k, v in self.terms.items()}, self.order)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, InducedElement)
            and other.module is self.module
            and other.order == self.order
            and self.terms == other.terms
        )

    def depths(self) -> set:
        return {mono_depth(m) for m, _ in self.terms}

    def to_json(self) -> List[dict]:
        out = []
        for (m, n), c in sorted(self.terms.items()):
            out.append({
                "alpha": list(m[0]),
                "dminus": list(m[1]),
                "dplus": list(m[2]),
                "fIndex": n,
                "coeff": format_rational(c) if not isinstance(c, UPoly) else str(c),
            })
        return out

    def __str__(self) -> str:
        parts = []
        for (m, n), c in sorted(self.terms.items()):
            word = "*".join(_letter_name(l) for l in mono_word(m, self.order)) or "1"
            parts.append(f"({c})*{word}(x)v{n}")
        return " + ".join(parts) or "0"

    def __repr__(self) -> str:
        return f"InducedElement[{self.order}]({self})"


def _letter_name(l: Letter) -> str:
    return {"h": "dh", "-": "dm", "+": "dpl"}[l[0]] + str(l[1])


class InducedModule:
    """M(F) for a given g0-module F; L+ acts on F by zero."""

    def __init__(self, F: IrrepF):
        self.F = F
        self._act: Dict[Tuple[SuperElement, Tuple[Letter, ...], int], Dict[Key, object]] = {}
        self._br: Dict[Tuple[SuperElement, Letter], Dict[int, SuperElement]] = {}
        self._deg: Dict[SuperElement, int] = {}

    def element(self, terms: Mapping[Key, object], order: str = "-+") -> InducedElement:
        return InducedElement(self, terms, order)

    def basis(self, depth: int) -> List[Key]:
        return [(m, n) for m in monomials_at_depth(depth) for n in range(self.F.dim)]

    def weight(self, key: Key) -> Weight:
        m, n = key
        a, b, r, y = mono_weight(m)
        fw = self.F.weight(n)
        return Weight(a + fw.a, b + fw.b, r + fw.r, fw.y + y)

    # -- action ---------------------------------------------------------------

    def _degree(self, a: SuperElement) -> int:
        d = self._deg.get(a)
        if d is None:
            d = self._deg[a] = consistent_degree(a)
        return d

    def _bracket(self, a: SuperElement, l: Letter) -> Dict[int, SuperElement]:
        ck = (a, l)
        hit = self._br.get(ck)
        if hit is None:
            b = super_bracket(a, letter_element(l))
            hit = self._br[ck] = homogeneous_components(b) if b else {}
        return hit

    def _act_word(self, a: SuperElement, word: Tuple[Letter, ...], n: int) -> Dict[Key, object]:
        """a . (word (x) v_n) for homogeneous a and a (-+)-ordered word."""
        ck = (a, word, n)
        hit = self._act.get(ck)
        if hit is not None:
            return hit
        deg = self._degree(a)
        out: Dict[Key, object] = {}
        if not word:
            if deg == 0:
                for m, c in self.F.act(g0_decompose(a), {n: 1}).items():
                    _add(out, (ONE, m), c)
            elif deg < 0:
                for l, c in lminus_expand(a).items():
                    for m, c2 in left_mul(l, ONE).items():
                        _add(out, (m, n), c * c2)
        else:
            u, rest = word[0], word[1:]
            for bdeg, b in self._bracket(a, u).items():
                if bdeg < 0:
                    for l, c in lminus_expand(b).items():
                        for m, c2 in left_mul(l, _word_mono(rest)).items():
                            _add(out, (m, n), c * c2)
                else:
                    for k, c in self._act_word(b, rest, n).items():
                        _add(out, k, c)
            sign = -1 if (deg % 2 and letter_parity(u)) else 1
            for (m, k), c in self._act_word(a, rest, n).items():
                for m2, c2 in left_mul(u, m).items():
                    _add(out, (m2, k), sign * c * c2)
        self._act[ck] = out
        return out

    def act_key(self, a: SuperElement, key: Key) -> Dict[Key, object]:
        m, n = key
        out: Dict[Key, object] = {}
        for _, part in sorted(homogeneous_components(a).items()):
            for k, c in self._act_word(part, mono_word(m, "-+"), n).items():
                _add(out, k, c)
        return out

    def act(self, a, w: InducedElement) -> InducedElement:
        if isinstance(a, str):
            a = NAMED[a]
        src = w if w.order == "-+" else reorder(w, "-+")
        out: Dict[Key, object] = {}
        parts = sorted(homogeneous_components(a).items())
        for (m, n), c in src.terms.items():
            word = mono_word(m, "-+")
            for _, part in parts:
                for k, v in self._act_word(part, word, n).items():
                    _add(out, k, c * v)
        res = InducedElement(self, out, "-+")
        return res if w.order == "-+" else reorder(res, w.order)

    def left_letter(self, l: Letter, w: InducedElement) -> InducedElement:
        out: Dict[Key, object] = {}
        for (m, n), c in w.terms.items():
            for m2, c2 in left_mul(l, m, w.order).items():
                _add(out, (m2, n), c * c2)
        return InducedElement(self, out, w.order)


_WORD_MONO: Dict[Tuple[Letter, ...], Mono] = {}


def _word_mono(word: Tuple[Letter, ...]) -> Mono:
    """Inverse of mono_word for (-+)-ordered words."""
    hit = _WORD_MONO.get(word)
    if hit is None:
        alpha = [0, 0, 0]
        I, J = [], []
        for kind, i in word:
            if kind == "h":
                alpha[i - 1] += 1
            elif kind == "-":
                I.append(i)
            else:
                J.append(i)
        hit = _WORD_MONO[word] = (tuple(alpha), tuple(I), tuple(J))
    return hit


def act_on_induced(a, w: InducedElement) -> InducedElement:
    return w.module.act(a, w)


def reorder(w: InducedElement, target: str) -> InducedElement:
    if target not in ORDERS:
        raise ValueError(f"unknown order tag {target!r}")
    if target == w.order:
        return w
    out: Dict[Key, object] = {}
    for (m, n), c in w.terms.items():
        for m2, c2 in normal_order(mono_word(m, w.order), target).items():
            _add(out, (m2, n), c * c2)
    return InducedElement(w.module, out, target)


def component_project(w: InducedElement, m: int, i: int, j: int) -> InducedElement:
    """The part of a (-+)-ordered element lying in S^m Lambda-_i Lambda+_j F."""
    if w.order != "-+":
        raise ValueError("projections are defined in the (-+) order")
    terms = {
        k: c for k, c in w.terms.items()
        if sum(k[0][0]) == m and len(k[0][1]) == i and len(k[0][2]) == j
    }
    return InducedElement(w.module, terms, "-+")


# -- singular vectors ---------------------------------------------------------

SEARCH_OPS = ("e1", "e2", "e3", "e0prime", "e0")


@dataclass
class SingularVector:
    vector: InducedElement
    depth: int
    weight: Weight

    def to_json(self) -> dict:
        return {"depth": self.depth, "weight": self.weight.as_list(), "terms": self.vector.to_json()}


def weight_groups(module: InducedModule, depth: int) -> Dict[Tuple[int, int, int], List[Key]]:
    """Basis of the depth piece split by (h1, h2, h3) weight.

    Each depth piece is a finite-dimensional g0-module, so highest weights
    are dominant and other weight spaces are skipped.
    """
    groups: Dict[Tuple[int, int, int], List[Key]] = {}
    for key in module.basis(depth):
        w = module.weight(key)
        if w.a >= 0 and w.b >= 0 and w.r >= 0:
            groups.setdefault((w.a, w.b, w.r), []).append(key)
    return dict(sorted(groups.items()))


def _equation_rows(module: InducedModule, keys: Sequence[Key], ops: Sequence[str]) -> Dict[Tuple[str, Key], Dict[int, object]]:
    rows: Dict[Tuple[str, Key], Dict[int, object]] = {}
    for col, key in enumerate(keys):
        for op in ops:
            for out_key, c in module.act_key(NAMED[op], key).items():
                rows.setdefault((op, out_key), {})[col] = c
    return rows


def is_singular(v: InducedElement) -> bool:
    """Recompute e1, e2, e3, e0, e0prime annihilation and the H-eigen condition."""
    from .model import hwv_test

    mod = v.module
    if any(mod.act(op, v) for op in SEARCH_OPS):
        return False
    return hwv_test(v.terms, _InducedView(mod))


class _InducedView:
    """Adapter so hwv_test can run on induced vectors given as dicts."""

    def __init__(self, module: InducedModule):
        self.module = module

    def act(self, name: str, vec: Mapping[Key, object]) -> Dict[Key, object]:
        return self.module.act(name, self.module.element(vec)).terms


def solve_weight(module: InducedModule, depth: int, keys: Sequence[Key]) -> List[InducedElement]:
    rows = _equation_rows(module, keys, SEARCH_OPS)
    basis = linalg.nullspace(list(rows.values()), len(keys))
    return [module.element({k: c for k, c in zip(keys, vec) if c}) for vec in basis]


def singular_search(F: IrrepF, max_depth: int) -> List[SingularVector]:
    if max_depth < 1:
        raise ValueError("maxDepth must be at least 1")
    module = InducedModule(F)
    found = []
    for depth in range(1, max_depth + 1):
        for wt, keys in weight_groups(module, depth).items():
            for vec in solve_weight(module, depth, keys):
                if not is_singular(vec):
                    raise AssertionError(f"solver returned a non-singular vector {vec}")
                found.append(SingularVector(vec, depth, module.weight(next(iter(vec.terms)))))
    return found


@dataclass
class ParametricCondition:
    """A y-condition at one (depth, weight): poly is None when every y works."""

    depth: int
    weight: Tuple[int, int, int]
    poly: Optional[UPoly]
    roots: List[Tuple[Fraction, List[SingularVector]]] = field(default_factory=list)
    irrational: Optional[UPoly] = None

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "weight": list(self.weight),
            "poly-in-y": "0" if self.poly is None else str(self.poly),
            "rational-roots": [format_rational(r) for r, _ in self.roots],
            "irrational-factor": None if self.irrational is None else str(self.irrational),
            "vectors": [[v.to_json() for v in vs] for _, vs in self.roots],
        }


def _split_rows(rows: Iterable[Dict[int, object]]):
    const_rows, poly_rows = [], []
    for r in rows:
        if any(isinstance(v, UPoly) and v.degree() > 0 for v in r.values()):
            poly_rows.append(r)
        else:
            const_rows.append({k: (v.coeff(0) if isinstance(v, UPoly) else v) for k, v in r.items()})
    return const_rows, poly_rows


def parametric_y_search(p: int, q: int, r: int, max_depth: int) -> List[ParametricCondition]:
    """Find every y for which F(p,q;r;y) has a singular vector of depth <= max_depth."""
    if max_depth < 1:
        raise ValueError("maxDepth must be at least 1")
    module = InducedModule(IrrepF(p, q, r, UPoly.y()))
    out: List[ParametricCondition] = []
    for depth in range(1, max_depth + 1):
        for wt, keys in weight_groups(module, depth).items():
            rows = _equation_rows(module, keys, SEARCH_OPS).values()
            const_rows, poly_rows = _split_rows(rows)
            K = linalg.nullspace(const_rows, len(keys))
            if not K:
                continue
            # restrict the y-dependent equations to the y-free kernel
            restricted = []
            for row in poly_rows:
                rr = {}
                for j, kv in enumerate(K):
                    acc = UPoly()
                    for col, v in row.items():
                        if kv[col]:
                            acc = acc + UPoly.lift(v) * kv[col]
                    if acc:
                        rr[j] = acc
                if rr:
                    restricted.append(rr)
            cond = linalg.pencil_condition(restricted, len(K))
            if cond is not None and cond.degree() == 0:
                continue
            pc = ParametricCondition(depth, wt, cond)
            if cond is not None:
                rest = cond
                for root, mult in cond.rational_roots():
                    concrete = InducedModule(IrrepF(p, q, r, root))
                    vecs = solve_weight(concrete, depth, keys)
                    for v in vecs:
                        if not is_singular(v):
                            raise AssertionError(f"specialized vector fails re-verification: {v}")
                    pc.roots.append((root, [SingularVector(v, depth, concrete.weight(next(iter(v.terms)))) for v in vecs]))
                    for _ in range(mult):
                        rest = divmod(rest, UPoly((-root, 1)))[0]
                if rest.degree() > 0:
                    pc.irrational = rest
            out.append(pc)
    return out

"""Named elements of E(3,6) inside E(5,10), weights and the relation tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Dict, List, Optional, Tuple

from . import linalg
from .e510 import (
    Form,
    SuperElement,
    VectorField,
    ZERO,
    N,
    const,
    consistent_degree,
    d,
    divergence,
    dminus,
    dp,
    dplus,
    secondary_degree_of,
    super_bracket,
    x,
)
from .scalar import Polynomial, format_rational


def _xd(i: int, j: int, c=1) -> SuperElement:
    """c * x_i d/dx_j"""
    return dp(j, x(i).scale(c), check=False)


def _build_table() -> Dict[str, SuperElement]:
    t: Dict[str, SuperElement] = {}
    t["h1"] = _xd(1, 1) - _xd(2, 2)
    t["h2"] = _xd(2, 2) - _xd(3, 3)
    t["h3"] = _xd(4, 4) - _xd(5, 5)
    t["Y"] = (_xd(1, 1) + _xd(2, 2) + _xd(3, 3)).scale(Fraction(2, 3)) - _xd(4, 4) - _xd(5, 5)
    t["e1"] = _xd(1, 2)
    t["e2"] = _xd(2, 3)
    t["e12"] = _xd(1, 3)
    t["f1"] = _xd(2, 1)
    t["f2"] = _xd(3, 2)
    t["f12"] = _xd(3, 1)
    t["e3"] = _xd(4, 5)
    t["f3"] = _xd(5, 4)
    t["f0"] = d(1, 4)
    t["e0prime"] = d(3, 5, x(3))
    t["e0"] = d(2, 5, x(3), False) + d(3, 5, -x(2), False) + d(2, 3, x(5).scale(2), False)
    t["e1prime"] = d(3, 4, x(3))
    t["h0"] = (
        t["h1"].scale(Fraction(2, 3)) + t["h2"].scale(Fraction(1, 3)) - t["h3"] - t["Y"]
    )
    for i in (1, 2, 3):
        t[f"dplus{i}"] = dplus(i)
        t[f"dminus{i}"] = dminus(i)
    for name, el in t.items():
        el.validate()
    return t


NAMED: Dict[str, SuperElement] = _build_table()

G0_BASIS = ("h1", "h2", "h3", "Y", "e1", "e2", "e12", "f1", "f2", "f12", "e3", "f3")
SL3 = ("h1", "h2", "e1", "e2", "e12", "f1", "f2", "f12")
SL2 = ("h3", "e3", "f3")


class UnknownNameError(KeyError):
    pass


def named_element(name: str) -> SuperElement:
    try:
        return NAMED[name]
    except KeyError:
        raise UnknownNameError(f"unknown element name {name!r}") from None


def e36_membership(a: SuperElement) -> bool:
    return all(secondary_degree_of(kind, idx, e) == 0 for kind, idx, e, _ in a.monomials())


@dataclass(frozen=True, order=True)
class Weight:
    a: int
    b: int
    r: int
    y: Fraction

    def as_list(self) -> list:
        return [self.a, self.b, self.r, format_rational(self.y)]

    def __str__(self) -> str:
        return f"({self.a},{self.b};{self.r};{format_rational(self.y)})"


class NotEigenvectorError(ValueError):
    pass


def ad_eigenvalue(h: SuperElement, a: SuperElement) -> Fraction:
    """lambda with [h, a] = lambda * a."""
    if a.is_zero():
        raise NotEigenvectorError("zero element")
    b = super_bracket(h, a)
    kind, idx, e, c = next(a.monomials())
    if kind == "field":
        other = b.even.coeffs[idx[0] - 1].coeff(e)
    else:
        other = b.odd.comps.get(idx, ZERO).coeff(e)
    lam = Fraction(other) / Fraction(c)
    if b != a.scale(lam):
        raise NotEigenvectorError(f"{a} is not an eigenvector of ad {h}")
    return lam


def g0_weight(a: SuperElement) -> Weight:
    vals = [ad_eigenvalue(NAMED[n], a) for n in ("h1", "h2", "h3", "Y")]
    for v in vals[:3]:
        if v.denominator != 1:
            raise NotEigenvectorError("non-integral Cartan eigenvalue")
    return Weight(int(vals[0]), int(vals[1]), int(vals[2]), vals[3])


def g_plus_one(i: int, j: int) -> SuperElement:
    """x_i d_j5 + x_j d_i5"""
    return (d(j, 5, x(i), False) + d(i, 5, x(j), False)).validate()


def g_minus_one(i: int, j: int) -> SuperElement:
    """x_i d_j4 + x_j d_i4"""
    return (d(j, 4, x(i), False) + d(i, 4, x(j), False)).validate()


PAIRS = list(combinations_with_replacement((1, 2, 3), 2))


def spanning_set() -> List[Tuple[str, SuperElement]]:
    """A fixed 30-element set of homogeneous elements of degrees -2..1."""
    out = [(f"dp{i}", dp(i)) for i in (1, 2, 3)]
    out += [(f"dminus{i}", dminus(i)) for i in (1, 2, 3)]
    out += [(f"dplus{i}", dplus(i)) for i in (1, 2, 3)]
    out += [(n, NAMED[n]) for n in G0_BASIS]
    out += [(n, NAMED[n]) for n in ("e0", "e0prime", "e1prime")]
    out += [(f"gplus{i}{j}", g_plus_one(i, j)) for i, j in ((1, 1), (1, 2), (2, 3))]
    out += [(f"gminus{i}{j}", g_minus_one(i, j)) for i, j in ((1, 1), (2, 2), (1, 3))]
    return out


def _exponents(nvars: int, total: int):
    if nvars == 1:
        yield (total,)
        return
    for k in range(total, -1, -1):
        for rest in _exponents(nvars - 1, total - k):
            yield (k,) + rest


def graded_dimension(k: int) -> int:
    """dim of the consistent-degree-k part of E(3,6), by exact kernel computation."""
    if k % 2 == 0:
        xdeg = (k + 2) // 2
        if xdeg < 0:
            return 0
        cols = []
        for e in _exponents(N, xdeg):
            for i in range(1, N + 1):
                if secondary_degree_of("field", (i,), e) == 0:
                    cs = [ZERO] * N
                    cs[i - 1] = Polynomial.monomial(e)
                    cols.append(divergence(cs))
        keys = sorted({m for p in cols for m in p.terms})
    else:
        xdeg = (k + 1) // 2
        if xdeg < 0:
            return 0
        cols = []
        for e in _exponents(N, xdeg):
            for jk in ((j, l) for j in range(1, N + 1) for l in range(j + 1, N + 1)):
                if secondary_degree_of("form", jk, e) == 0:
                    df = Form(2, {jk: Polynomial.monomial(e)}).d()
                    cols.append({(idx, m): c for idx, p in df.comps.items() for m, c in p.items()})
        keys = sorted({key for col in cols for key in (col.terms if isinstance(col, Polynomial) else col)})
        cols = [col for col in cols]
    index = {key: n for n, key in enumerate(keys)}
    # rows of the transposed system: one row per column vector
    rows = []
    for col in cols:
        items = col.items() if isinstance(col, Polynomial) else col.items()
        rows.append({index[m]: c for m, c in items})
    return len(cols) - linalg.rank(rows, len(keys))


@dataclass
class RelationResult:
    name: str
    computed: SuperElement
    expected: SuperElement
    status: str  # "pass", "fail" or "deviation"
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "relation": self.name,
            "computed": self.computed.to_string(),
            "expected": self.expected.to_string(),
            "status": self.status,
            **({"note": self.note} if self.note else {}),
        }


# (relation label, left, right, printed value, value the epsilon rule forces if different)
def _relation_table():
    n = NAMED
    zero = SuperElement()
    rows = [
        ("[e0prime,f0] = f2", n["e0prime"], n["f0"], n["f2"], None),
        ("[e0,f0] = h0", n["e0"], n["f0"], n["h0"], None),
    ]
    for sgn, lows, highs in (("+,-", dplus, g_minus_one), ("-,+", dminus, g_plus_one)):
        for i in (1, 2, 3):
            for p in PAIRS:
                rows.append((f"odd degree -1/+1 pairing ({sgn}) [d{sgn[0]}{i}, g{p[0]}{p[1]}]", lows(i), highs(*p), zero, None))
    e0p = [n["f2"], -n["f12"], zero]
    for i, val in zip((1, 2, 3), e0p):
        rows.append((f"e0prime.dplus{i}", n["e0prime"], dplus(i), val, None))
    printed = [-n["f2"], n["f3"], zero]
    forced = [None, n["f12"], None]
    for i, val, alt in zip((1, 2, 3), printed, forced):
        rows.append((f"e1prime.dminus{i}", n["e1prime"], dminus(i), val, alt))
    e0prime_letters = {
        "dp1": zero, "dminus1": zero, "dplus1": n["f2"],
        "dp2": zero, "dminus2": zero, "dplus2": -n["f12"],
        "dp3": -dminus(3), "dminus3": zero, "dplus3": zero,
    }
    for name, val in e0prime_letters.items():
        rows.append((f"filtration table [e0prime,{name}]", n["e0prime"], _letter(name), val, None))
    return rows


def _letter(name: str) -> SuperElement:
    i = int(name[-1])
    if name.startswith("dplus"):
        return dplus(i)
    return dminus(i) if name.startswith("dminus") else dp(i)


def check_relation_suite() -> List[RelationResult]:
    out = []
    for name, a, b, printed, forced in _relation_table():
        got = super_bracket(a, b)
        if got == printed:
            out.append(RelationResult(name, got, printed, "pass"))
        elif forced is not None and got == forced:
            out.append(RelationResult(
                name, got, printed, "deviation",
                f"printed {printed}, epsilon rule gives {forced}",
            ))
        else:
            out.append(RelationResult(name, got, printed, "fail"))
    return out


def g0_decompose(a: SuperElement) -> Dict[str, Fraction]:
    """Coordinates of a g0 element in the basis G0_BASIS."""
    if not a.odd.is_zero():
        raise ValueError("g0 elements are even")
    c = [[Fraction(0)] * N for _ in range(N)]  # c[i][j]: coefficient of x_j d/dx_i
    for i, p in enumerate(a.even.coeffs):
        for e, v in p.items():
            if sum(e) != 1:
                raise ValueError(f"{a} is not in g0")
            c[i][e.index(1)] += Fraction(v)
    if any(c[i][j] for i in range(3) for j in range(3, 5)) or any(c[i][j] for i in range(3, 5) for j in range(3)):
        raise ValueError(f"{a} is not in g0")
    tr3 = c[0][0] + c[1][1] + c[2][2]
    tr2 = c[3][3] + c[4][4]
    if tr3 + tr2:
        raise ValueError(f"{a} has nonzero divergence")
    y = tr3 / 2
    s = [c[k][k] - tr3 / 3 for k in range(3)]
    t = c[3][3] + tr3 / 2
    coords = {
        "h1": s[0], "h2": s[0] + s[1], "h3": t, "Y": y,
        "e1": c[1][0], "e2": c[2][1], "e12": c[2][0],
        "f1": c[0][1], "f2": c[1][2], "f12": c[0][2],
        "e3": c[4][3], "f3": c[3][4],
    }
    return {k: v for k, v in coords.items() if v}

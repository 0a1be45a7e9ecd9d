"""Verification harness: reports for each checkable statement and the scan."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import linalg
from .algebra import (
    G0_BASIS,
    NAMED,
    SL3,
    ad_eigenvalue,
    check_relation_suite,
    graded_dimension,
    spanning_set,
)
from .doperators import (
    D1_PRINTED,
    D_OPS,
    DBAR,
    EXPANSION_DATA,
    H,
    SM_ONE,
    Hat,
    SMElement,
    d2_shift,
    d_power,
    dbar_power,
    dpow_expand,
    expansion_base,
    ff,
    hat,
    hwv_decompose,
    hwv_vector,
    is_sl3_hwv,
    lht,
    power,
    reconstruct,
    sl3_apply,
    sm_basis,
    sm_weight,
)
from .e510 import SuperElement, consistent_degree, dp, super_bracket, x
from .induced import (
    ONE,
    InducedElement,
    InducedModule,
    component_project,
    mono_depth,
    parametric_y_search,
    reorder,
)
from .model import (
    IrrepF,
    ModelElement,
    bigraded_dimension,
    canonical_monomials,
    dvar,
    hwv_lines,
    model_act,
    monomial_weight,
    sl3_act_poly,
    weyl_dimension,
    xvar,
    P as MODEL_P,
    SL3_MATRIX,
)
from .scalar import Polynomial, format_rational, sort_sign


# -- reports --------------------------------------------------------------------


@dataclass
class Record:
    claim: str
    computed: object
    expected: object
    status: str  # "pass", "fail" or "deviation"

    def as_dict(self) -> dict:
        return {"claim": self.claim, "computed": _jsonable(self.computed), "expected": _jsonable(self.expected), "status": self.status}


def _jsonable(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(t) for t in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(t) for k, t in v.items()}
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    return str(v)


@dataclass
class LemmaReport:
    lemma_id: str
    parameters: Dict[str, object]
    details: List[Record] = field(default_factory=list)

    @property
    def status(self) -> str:
        states = {r.status for r in self.details}
        if "fail" in states:
            return "fail"
        return "deviation" if "deviation" in states else "pass"

    def check(self, claim: str, computed, expected, ok: Optional[bool] = None) -> bool:
        if ok is None:
            ok = computed == expected
        self.details.append(Record(claim, computed, expected, "pass" if ok else "fail"))
        return ok

    def deviation(self, claim: str, computed, expected):
        self.details.append(Record(claim, computed, expected, "deviation"))

    def failures(self) -> List[Record]:
        return [r for r in self.details if r.status == "fail"]

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma_id,
            "parameters": _jsonable(self.parameters),
            "status": self.status,
            "details": [r.as_dict() for r in self.details],
        }


class UnknownLemmaError(KeyError):
    pass


# -- exterior part tensor F, realised inside the induced module ------------------


def M(q: int, p: int) -> ModelElement:
    """[del3^q x1^p]"""
    return ModelElement.monomial((0, 0, q), (p, 0, 0))


def MX(i: int) -> ModelElement:
    return ModelElement(xvar(i))


def MD(i: int) -> ModelElement:
    return ModelElement(dvar(i))


def _key(sign: str, subset: Sequence[int]):
    s, S = sort_sign(subset)
    mono = ((0, 0, 0), S, ()) if sign == "-" else ((0, 0, 0), (), S)
    return s, mono


def lam_vector(module: InducedModule, sign: str, parts) -> Dict:
    """sum c * d_S (x) m over parts (c, S, m); S may be unsorted."""
    out: Dict = {}
    F = module.F
    for c, S, m in parts:
        s, mono = _key(sign, S)
        if not s or m.is_zero():
            continue
        for n, v in F.vector_of(m).items():
            k = (mono, n)
            out[k] = out.get(k, 0) + s * c * v
    return {k: v for k, v in out.items() if v}


def mixed_vector(module: InducedModule, parts) -> Dict:
    """sum c * d-_I d+_J (x) m over parts (c, I, J, m), in the (-+) order."""
    out: Dict = {}
    for c, I, J, m in parts:
        s1, I2 = sort_sign(I)
        s2, J2 = sort_sign(J)
        if not s1 or not s2 or m.is_zero():
            continue
        try:
            coords = module.F.vector_of(m)
        except ValueError:
            # a term outside F(p,q) means the formula has the wrong weight
            return None
        for n, v in coords.items():
            k = (((0, 0, 0), I2, J2), n)
            out[k] = out.get(k, 0) + s1 * s2 * c * v
    return {k: v for k, v in out.items() if v}


def lam_keys(module: InducedModule, sign: str) -> List:
    keys = []
    for k in range(4):
        for S in combinations((1, 2, 3), k):
            _, mono = _key(sign, S)
            keys.extend((mono, n) for n in range(module.F.dim))
    return keys


def _sl3_weight(module: InducedModule, key) -> Tuple[int, int]:
    w = module.weight(key)
    return w.a, w.b


def _kernel_by_weight(module: InducedModule, keys, ops) -> Dict[Tuple[int, int], Tuple[List, List[List[Fraction]]]]:
    groups: Dict[Tuple[int, int], List] = {}
    for k in keys:
        groups.setdefault(_sl3_weight(module, k), []).append(k)
    out = {}
    for wt, ks in sorted(groups.items()):
        if wt[0] < 0 or wt[1] < 0:
            continue
        rows: Dict = {}
        for col, k in enumerate(ks):
            for op in ops:
                for ok, c in module.act_key(NAMED[op], k).items():
                    rows.setdefault((op, ok), {})[col] = c
        K = linalg.nullspace(list(rows.values()), len(ks))
        if K:
            out[wt] = (ks, K)
    return out


def _span_match(keys: Sequence, K: List[List[Fraction]], vecs: List[Dict]) -> bool:
    """span(vecs) == span(K), both read as vectors over ``keys``."""
    index = {k: i for i, k in enumerate(keys)}
    rows = []
    for v in vecs:
        if any(k not in index for k in v):
            return False
        rows.append({index[k]: c for k, c in v.items()})
    krows = [{i: c for i, c in enumerate(vec) if c} for vec in K]
    r_v = linalg.rank(rows, len(keys))
    return r_v == len(K) == linalg.rank(rows + krows, len(keys))


@dataclass
class HwvLine:
    tag: Optional[str]
    weight: Tuple[int, int]
    vector: Dict


def lambda_families(p: int, q: int) -> Dict[str, Tuple[Tuple[int, int], list]]:
    """Printed highest weight families in Lambda (x) F(p,q): tag -> (weight, parts)."""
    fam = {
        "(00)'": ((p, q), [(1, (), M(q, p))]),
        "(+0)": ((p + 1, q), [(1, (1,), M(q, p))]),
        "(0+)": ((p, q + 1), [(1, (1, 2), M(q, p))]),
        "(00)''": ((p, q), [(1, (1, 2, 3), M(q, p))]),
    }
    if p >= 1:
        m = M(q, p - 1)
        fam["(-+)"] = ((p - 1, q + 1), [(1, (1,), MX(2) * m), (-1, (2,), MX(1) * m)])
        fam["(-0)"] = ((p - 1, q), [(1, (1, 2), MX(3) * m), (1, (3, 1), MX(2) * m), (1, (2, 3), MX(1) * m)])
    if q >= 1:
        m = M(q - 1, p)
        fam["(0-)"] = ((p, q - 1), [(1, (i,), MD(i) * m) for i in (1, 2, 3)])
        fam["(+-)"] = ((p + 1, q - 1), [(1, (1, 2), MD(2) * m), (1, (1, 3), MD(3) * m)])
    order = ["(00)'", "(+0)", "(-+)", "(0-)", "(0+)", "(-0)", "(+-)", "(00)''"]
    return {t: fam[t] for t in order if t in fam}


def _match_lines(module, sign, kernels, families) -> List[HwvLine]:
    lines: List[HwvLine] = []
    for wt, (ks, K) in kernels.items():
        here = [(t, lam_vector(module, sign, parts)) for t, (w, parts) in families.items() if w == wt]
        here = [(t, v) for t, v in here if v]
        if here and _span_match(ks, K, [v for _, v in here]):
            lines.extend(HwvLine(t, wt, v) for t, v in here)
        else:
            for vec in K:
                lines.append(HwvLine(None, wt, {k: c for k, c in zip(ks, vec) if c}))
    return lines


def enumerate_hwv_lambda(p: int, q: int, sign: str = "+") -> List[HwvLine]:
    """All sl(3) highest weight lines of Lambda^sign (x) F(p,q), tagged by family."""
    module = InducedModule(IrrepF(p, q, 0, 0))
    kernels = _kernel_by_weight(module, lam_keys(module, sign), ("e1", "e2"))
    return _match_lines(module, sign, kernels, lambda_families(p, q))


def t_families(p: int, q: int) -> Dict[str, Tuple[Tuple[int, int], list]]:
    fam = {"T0": ((p, q), [(1, (), M(q, p))])}
    if q == 0:
        fam["T1"] = ((p + 1, 0), [(1, (1,), M(0, p))])
    if p == 0 and q >= 1:
        fam["T2"] = ((0, q - 1), [(1, (i,), MD(i) * M(q - 1, 0)) for i in (1, 2, 3)])
    if (p, q) == (0, 1):
        fam["T3"] = ((1, 0), [(1, (1, 2), MD(2)), (1, (1, 3), MD(3))])
    if (p, q) == (0, 0):
        fam["T4"] = ((0, 0), [(1, (1, 2, 3), M(0, 0))])
    return fam


def kernel_e0prime(p: int, q: int, variant: str = "e0prime") -> List[HwvLine]:
    """hwv lines of Lambda^+ (x) F killed by e0prime, or of Lambda^- killed by e1prime."""
    if variant not in ("e0prime", "e1prime"):
        raise ValueError("variant is 'e0prime' (on Lambda+) or 'e1prime' (on Lambda-)")
    sign = "+" if variant == "e0prime" else "-"
    module = InducedModule(IrrepF(p, q, 0, 0))
    kernels = _kernel_by_weight(module, lam_keys(module, sign), ("e1", "e2", variant))
    return _match_lines(module, sign, kernels, t_families(p, q))


def weyl_group():
    """Elements of the sl(3) Weyl group acting on (a,b) weight coordinates, with signs."""
    s1 = lambda w: (-w[0], w[0] + w[1])
    s2 = lambda w: (w[0] + w[1], -w[1])
    elems = {(): (lambda w: w)}
    frontier = [()]
    while frontier:
        nxt = []
        for word in frontier:
            for name, s in (("1", s1), ("2", s2)):
                new = word + (name,)
                f = (lambda g, s: (lambda w: s(g(w))))(elems[word], s)
                sig = tuple(f(t) for t in ((1, 0), (0, 1)))
                if all(tuple(g(t) for t in ((1, 0), (0, 1))) != sig for g in elems.values()):
                    elems[new] = f
                    nxt.append(new)
        frontier = nxt
    return [((-1) ** len(w), f) for w, f in elems.items()]


def weyl_multiplicities(weights: Iterable[Tuple[int, int]]) -> Dict[Tuple[int, int], int]:
    """Irreducible multiplicities from a weight multiset: m_l = sum_w sign(w) mult(l + rho - w rho)."""
    mult: Dict[Tuple[int, int], int] = {}
    for w in weights:
        mult[w] = mult.get(w, 0) + 1
    rho = (1, 1)
    W = weyl_group()
    out = {}
    for lam in mult:
        if lam[0] < 0 or lam[1] < 0:
            continue
        total = 0
        for sgn, f in W:
            wr = f(rho)
            total += sgn * mult.get((lam[0] + rho[0] - wr[0], lam[1] + rho[1] - wr[1]), 0)
        if total:
            out[lam] = total
    return out


def lambda_weight_count(p: int, q: int) -> int:
    """Number of hwv lines of Lambda (x) F(p,q), by character arithmetic alone."""
    lam_w = []
    xw = {1: (1, 0), 2: (-1, 1), 3: (0, -1)}
    for k in range(4):
        for S in combinations((1, 2, 3), k):
            lam_w.append((sum(xw[i][0] for i in S), sum(xw[i][1] for i in S)))
    fw = [monomial_weight(e) for e in canonical_monomials(p, q)]
    allw = [(a[0] + b[0], a[1] + b[1]) for a in lam_w for b in fw]
    return sum(weyl_multiplicities(allw).values())


# -- scan -------------------------------------------------------------------------


def _scan_row(args) -> dict:
    p, q, r, max_depth = args
    conds = parametric_y_search(p, q, r, max_depth)
    return {"p": p, "q": q, "r": r, "conditions": [c.to_json() for c in conds]}


def theorem41_scan(pmax: int, qmax: int, rs: Sequence[int], max_depth: int,
                   pmin: int = 1, qmin: int = 1, jobs: int = 1) -> List[dict]:
    if max_depth < 1 or min(pmin, qmin) < 0 or pmax < pmin or qmax < qmin:
        raise ValueError("need maxDepth >= 1 and 0 <= pmin <= pmax, 0 <= qmin <= qmax")
    tasks = sorted((p, q, r, max_depth) for p in range(pmin, pmax + 1) for q in range(qmin, qmax + 1) for r in rs)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_scan_row, tasks))
    else:
        rows = [_scan_row(t) for t in tasks]
    return sorted(rows, key=lambda row: (row["p"], row["q"], row["r"]))


# -- individual checks ------------------------------------------------------------


def _p(params, name, default):
    v = params.get(name, default)
    return type(default)(v) if not isinstance(default, (list, tuple)) else v


def check_relations(params) -> LemmaReport:
    rep = LemmaReport("relations", dict(params))
    for res in check_relation_suite():
        if res.status == "deviation":
            rep.deviation(res.name, res.computed.to_string(), res.expected.to_string())
        else:
            rep.check(res.name, res.computed.to_string(), res.expected.to_string(), res.status == "pass")
    devs = sum(1 for r in rep.details if r.status == "deviation")
    rep.check("exactly one documented deviation", devs, 1)
    return rep


def _super_jacobi(a, b, c) -> SuperElement:
    pa, pb, pc = (consistent_degree(t) % 2 for t in (a, b, c))
    t1 = super_bracket(a, super_bracket(b, c)).scale((-1) ** (pa * pc))
    t2 = super_bracket(b, super_bracket(c, a)).scale((-1) ** (pb * pa))
    t3 = super_bracket(c, super_bracket(a, b)).scale((-1) ** (pc * pb))
    return t1 + t2 + t3


def check_jacobi(params) -> LemmaReport:
    rep = LemmaReport("jacobi", dict(params))
    S = spanning_set()
    bad = []
    for (na, a), (nb, b), (nc, c) in product(S, repeat=3):
        if not _super_jacobi(a, b, c).is_zero():
            bad.append(f"{na},{nb},{nc}")
    rep.check(f"super Jacobi identity on all {len(S) ** 3} triples", bad, [])
    return rep


def check_dims(params) -> LemmaReport:
    rep = LemmaReport("dims", dict(params))
    for k, want in zip((-2, -1, 0, 1), (3, 6, 12, 18)):
        rep.check(f"dim g_{k}", graded_dimension(k), want)
    return rep


def check_hypercharge(params) -> LemmaReport:
    rep = LemmaReport("hypercharge", dict(params))
    Y = NAMED["Y"]
    for name, a in spanning_set():
        deg = consistent_degree(a)
        rep.check(f"[Y,{name}] = ({deg}/3) {name}", super_bracket(Y, a).to_string(), a.scale(Fraction(deg, 3)).to_string())
    return rep


def check_model(params) -> LemmaReport:
    mmax = _p(params, "mmax", 4)
    rep = LemmaReport("3.1", {"mmax": mmax})
    for m in range(mmax + 1):
        for n in range(mmax + 1):
            lines = hwv_lines(m, n)
            rep.check(f"hwv lines in bidegree ({m},{n})", [str(l) for l in lines], [str(M(n, m))])
            rep.check(f"dim of bidegree ({m},{n})", len(canonical_monomials(m, n)), weyl_dimension(m, n))
            rep.check(f"binomial count of bidegree ({m},{n})", bigraded_dimension(m, n), weyl_dimension(m, n))
    for name in SL3_MATRIX:
        rep.check(f"{name} kills P in the model", str(model_act(name, ModelElement(MODEL_P))), "0")
    rng = random.Random(_p(params, "seed", 0))
    for _ in range(_p(params, "samples", 20)):
        g, h = rng.sample(sorted(SL3_MATRIX), 2)
        e = rng.choice(canonical_monomials(rng.randint(0, 3), rng.randint(0, 3)))
        m = ModelElement(Polynomial._raw({e: 1}, 6), reduced=True)
        lhs = model_act(g, model_act(h, m)) - model_act(h, model_act(g, m))
        br = super_bracket(NAMED[g], NAMED[h])
        rhs = model_act(br, m) if br else ModelElement(Polynomial.zero(6), reduced=True)
        rep.check(f"[{g},{h}] acts as the commutator on {m}", str(lhs), str(rhs))
    return rep


def _sm(alpha, e) -> SMElement:
    return SMElement(Polynomial._raw({tuple(alpha) + tuple(e): 1}, 9), reduced=True)


def _sm_component_basis(k: int, mx: int, md: int):
    out = []
    for a1 in range(k, -1, -1):
        for a2 in range(k - a1, -1, -1):
            alpha = (a1, a2, k - a1 - a2)
            out.extend(_sm(alpha, e) for e in canonical_monomials(mx, md))
    return out


def _kernel_dim_sm(basis: List[SMElement], ops=("e1", "e2")) -> Dict[Tuple[int, int], int]:
    groups: Dict[Tuple[int, int], List[SMElement]] = {}
    for v in basis:
        groups.setdefault(sm_weight(next(iter(v.poly.terms))), []).append(v)
    out = {}
    for wt, vs in groups.items():
        rows: Dict = {}
        for col, v in enumerate(vs):
            for op in ops:
                for e, c in sl3_apply(op, v).poly.items():
                    rows.setdefault((op, e), {})[col] = c
        dim = len(vs) - linalg.rank(list(rows.values()), len(vs))
        if dim:
            out[wt] = dim
    return out


def check_dbar(params) -> LemmaReport:
    """Dbar_i are highest weight vectors and generate every hwv of S (x) M."""
    kmax = _p(params, "kmax", 2)
    mmax = _p(params, "mmax", 2)
    rep = LemmaReport("3.2", {"kmax": kmax, "mmax": mmax})
    for i in (1, 2, 3):
        rep.check(f"Dbar{i} is an sl(3) hwv", is_sl3_hwv(DBAR[i](SM_ONE)), True)
    for k in range(kmax + 1):
        for mx in range(mmax + 1):
            for md in range(mmax + 1):
                counts = _kernel_dim_sm(_sm_component_basis(k, mx, md))
                predicted: Dict[Tuple[int, int], int] = {}
                vecs = []
                for a1 in range(min(k, mx) + 1):
                    for a2 in range(min(k - a1, md) + 1):
                        alpha = (a1, a2, k - a1 - a2)
                        m, n = mx - a1, md - a2
                        v = dbar_power(alpha)(_sm((0, 0, 0), (0, 0, n, m, 0, 0)))
                        wt = (m + a2, n + alpha[2])
                        predicted[wt] = predicted.get(wt, 0) + 1
                        vecs.append(v)
                        lt = lht(v)
                        rep.check(
                            f"leading term of Dbar^{alpha}[del3^{n} x1^{m}]",
                            (lt.sigma, str(lt.leading)),
                            (alpha, str(M(n + a2, m + a1))),
                        )
                rep.check(f"hwv count of S^{k} (x) M({mx},{md}) by weight", counts, predicted)
                rep.check(f"Dbar monomials in S^{k} (x) M({mx},{md}) are hwv", all(is_sl3_hwv(v) for v in vecs), True)
    return rep


def _commutant_samples(which: int) -> List[SMElement]:
    """Elements of S commuting with D_which."""
    gens = {1: [(0, 0, 1), (0, 0, 2)], 2: [(1, 0, 0), (0, 0, 1), (1, 0, 1), (2, 0, 0)], 3: [(1, 0, 0), (0, 1, 0), (0, 1, 1), (1, 1, 0)]}
    return [SM_ONE] + [_sm(a, (0,) * 6) for a in gens[which]]


def check_intertwining(params) -> LemmaReport:
    pmax = _p(params, "pmax", 3)
    rep = LemmaReport("3.3", {"pmax": pmax})
    for p in range(pmax + 1):
        for q in range(pmax + 1):
            m = hwv_vector(p, q)
            for i, factor, lower in (
                (1, p * (p + q + 1), hwv_vector(p - 1, q) if p else None),
                (2, q, hwv_vector(p, q - 1) if q else None),
                (3, 1, m),
            ):
                for s in _commutant_samples(i):
                    got = D_OPS[i](s * m)
                    want = DBAR[i](s * lower).scale(factor) if lower is not None else got.scale(0)
                    rep.check(f"D{i}(s m) for s={s}, (p,q)=({p},{q})", str(got), str(want))
            if p:
                got = D1_PRINTED(m)
                want = DBAR[1](hwv_vector(p - 1, q)).scale(p * (p + q + 1))
                if got != want:
                    rep.deviation(f"displayed D1 formula on [del3^{q} x1^{p}]", str(got), str(want))
                else:
                    rep.check(f"displayed D1 formula on [del3^{q} x1^{p}]", str(got), str(want))
            # D_i commutes with left multiplication by Dbar_j for j < i
            for v in sm_basis(p, q, 1):
                for i, j in ((2, 1), (3, 1), (3, 2)):
                    dj = DBAR[j](SM_ONE)
                    rep.check(
                        f"D{i} Dbar{j} = Dbar{j} D{i} on {v}",
                        str(D_OPS[i](dj * v)),
                        str(dj * D_OPS[i](v)),
                    )
    return rep


def check_decompose(params) -> LemmaReport:
    pmax = _p(params, "pmax", 2)
    rep = LemmaReport("3.4", {"pmax": pmax})
    for p in range(pmax + 1):
        for q in range(pmax + 1):
            m0 = hwv_vector(p, q)
            rep.check(f"decompose m0 in F({p},{q})", hwv_decompose(m0, p, q), {(0, 0, 0): 1})
            for a1 in range(p + 1):
                for a2 in range(q + 1):
                    for a3 in range(2):
                        alpha = (a1, a2, a3)
                        if sum(alpha) > 3 or not sum(alpha):
                            continue
                        wbar = dbar_power(alpha)(M_to_sm(q - a2, p - a1))
                        coeffs = hwv_decompose(wbar, p, q)
                        rep.check(f"reconstruct Dbar^{alpha} image in F({p},{q})", str(reconstruct(coeffs, p, q)), str(wbar))
                        scale = ff(p, a1) * ff(p + q + 1, a1) * ff(q, a2)
                        rep.check(f"coefficient link for alpha={alpha}, (p,q)=({p},{q})", coeffs, {alpha: Fraction(1, scale)})
            if p and q:
                w = d_power((1, 1, 0))(m0).scale(3)
                w2 = d_power((1, 0, 1))(m0)
                rep.check(f"decompose 3 D1 D2 m0 in F({p},{q})", hwv_decompose(w, p, q), {(1, 1, 0): 3})
                rep.check(f"decompose D1 D3 m0 in F({p},{q})", hwv_decompose(w2, p, q), {(1, 0, 1): 1})
    return rep


def M_to_sm(q: int, p: int) -> SMElement:
    return _sm((0, 0, 0), (0, 0, q, p, 0, 0))


def _falling_weight_factor(a: int, b: int, alpha) -> int:
    return ff(a + b + 1, alpha[0]) * ff(a, alpha[0]) * ff(b, alpha[1])


def check_lht_formula(params) -> LemmaReport:
    pmax = _p(params, "pmax", 3)
    kmax = _p(params, "kmax", 2)
    rep = LemmaReport("3.5", {"pmax": pmax, "kmax": kmax})
    for p in range(pmax + 1):
        for q in range(pmax + 1):
            for v in sm_basis(p, q, 0):
                e = next(iter(v.poly.terms))
                a, b = monomial_weight(e[3:])
                for k in range(1, kmax + 1):
                    for a1 in range(k + 1):
                        for a2 in range(k - a1 + 1):
                            alpha = (a1, a2, k - a1 - a2)
                            parts = d_power(alpha)(v).parts()
                            higher = [s for s in parts if s > alpha]
                            got = parts.get(alpha)
                            c = _falling_weight_factor(a, b, alpha)
                            want = v.scale(c).parts().get((0, 0, 0)) if c else None
                            rep.check(
                                f"leading term of D^{alpha} on {v}",
                                (higher, str(got) if got is not None else "0"),
                                ([], str(want) if want is not None else "0"),
                            )
    return rep


def check_dbar_image(params) -> LemmaReport:
    pmax = _p(params, "pmax", 3)
    rep = LemmaReport("3.6", {"pmax": pmax})
    for p in range(pmax + 1):
        for q in range(pmax + 1):
            m0 = hwv_vector(p, q)
            for a1 in range(p + 1):
                for a2 in range(q + 1):
                    for a3 in range(2):
                        alpha = (a1, a2, a3)
                        if sum(alpha) > 3:
                            continue
                        lhs = d_power(alpha)(m0)
                        rhs = dbar_power(alpha)(M_to_sm(q - a2, p - a1)).scale(ff(p, a1) * ff(p + q + 1, a1) * ff(q, a2))
                        rep.check(f"D^{alpha}[del3^{q} x1^{p}] against the Dbar image", str(lhs), str(rhs))
                        if rhs:
                            lt = lht(rhs)
                            rep.check(f"leading exponent for alpha={alpha}", lt.sigma, alpha)
    return rep


def check_commute(params) -> LemmaReport:
    pmax = _p(params, "pmax", 3)
    sdeg = _p(params, "sdeg", 2)
    rep = LemmaReport("3.7", {"pmax": pmax, "sdeg": sdeg})
    for p in range(pmax + 1):
        for q in range(pmax + 1):
            bad = 0
            basis = sm_basis(p, q, sdeg)
            for v in basis:
                for i, j in ((1, 2), (1, 3), (2, 3)):
                    if D_OPS[i](D_OPS[j](v)) != D_OPS[j](D_OPS[i](v)):
                        bad += 1
            rep.check(f"[Di,Dj] = 0 on S^<={sdeg} (x) F({p},{q}) ({len(basis)} vectors)", bad, 0)
    return rep


def check_expansion(params) -> LemmaReport:
    kmax = _p(params, "kmax", 4)
    pmax = _p(params, "pmax", 3)
    sdeg = _p(params, "sdeg", 2)
    rep = LemmaReport("3.8", {"kmax": kmax, "pmax": pmax, "sdeg": sdeg})
    for which in EXPANSION_DATA:
        base = expansion_base(which)
        for k in range(1, kmax + 1):
            expanded = dpow_expand(k, which)
            iterated = power(base, k)
            bad = 0
            for p in range(pmax + 1):
                for q in range(pmax + 1):
                    for v in sm_basis(p, q, sdeg):
                        if expanded(v) != iterated(v):
                            bad += 1
            rep.check(f"expansion of {which}^{k} equals iteration", bad, 0)
    return rep


def check_single_powers(params) -> LemmaReport:
    pmax = _p(params, "pmax", 3)
    kmax = _p(params, "kmax", 3)
    rep = LemmaReport("3.9", {"pmax": pmax, "kmax": kmax})
    for p in range(pmax + 1):
        for q in range(pmax + 1):
            for v in sm_basis(p, q, 0):
                e = next(iter(v.poly.terms))
                a, b = monomial_weight(e[3:])
                for k in range(1, kmax + 1):
                    for i, alpha, c in ((1, (k, 0, 0), ff(a + b + 1, k) * ff(a, k)), (2, (0, k, 0), ff(b, k))):
                        parts = power(D_OPS[i], k)(v).parts()
                        got = parts.get(alpha)
                        want = v.scale(c).parts().get((0, 0, 0)) if c else None
                        rep.check(
                            f"leading term of D{i}^{k} on {v}",
                            ([s for s in parts if s > alpha], str(got) if got is not None else "0"),
                            ([], str(want) if want is not None else "0"),
                        )
    return rep


def check_d2_shift(params) -> LemmaReport:
    pmax = _p(params, "pmax", 2)
    rep = LemmaReport("3.10", {"pmax": pmax})
    D2 = D_OPS[2]
    printed_ok = True
    for p in range(pmax + 1):
        for q in range(pmax + 1):
            for v in sm_basis(p, q, 1):
                rep.check(f"D2 dh3 = dh3 D2 on {v}", str(D2(Hat(3)(v))), str(Hat(3)(D2(v))))
                rep.check(f"D2 dh1 = dh1 D2 on {v}", str(D2(Hat(1)(v))), str(Hat(1)(D2(v))))
                rep.check(f"D2 dh2 = dh2 D2{{-1}} on {v}", str(D2(Hat(2)(v))), str(Hat(2)(d2_shift(-1)(v))))
                if D2(Hat(2)(v)) != Hat(2)(d2_shift(1)(v)):
                    printed_ok = False
    if printed_ok:
        rep.check("D2 dh2 = dh2 D2{+1}", True, True)
    else:
        rep.deviation("D2 dh2 = dh2 D2{+1} (shift sign as displayed)", "fails", "holds")
    return rep


def check_d2_leading(params) -> LemmaReport:
    """Leading term of D2 f from the leading term of f.

    The statement carries content only when the dh2-part of the leading
    term survives, i.e. (h2 - alpha2) u != 0; other samples are counted
    but not compared.
    """
    samples = _p(params, "samples", 30)
    rng = random.Random(_p(params, "seed", 1))
    rep = LemmaReport("3.11", {"samples": samples})
    D2 = D_OPS[2]
    printed_ok = True
    degenerate = 0
    for _ in range(samples):
        p, q = rng.randint(0, 2), rng.randint(0, 2)
        basis = sm_basis(p, q, 2)
        f = SMElement(Polynomial.zero(9), reduced=True)
        for v in rng.sample(basis, min(4, len(basis))):
            f = f + v.scale(rng.randint(-3, 3) or 1)
        if f.is_zero():
            continue
        lt = lht(f)
        u = SMElement.of_model(lt.leading)
        a = lt.sigma
        top = (a[0], a[1] + 1, a[2])
        rhs = Compose_hat(a, d2_shift(-a[1])(u))
        if top not in rhs.parts():
            degenerate += 1
            continue
        rep.check(f"leading term of D2 f for f = {f}", _lht_str(lht(D2(f))), _lht_str(lht(rhs)))
        alt = Compose_hat(a, d2_shift(a[1])(u))
        if a[1] and (not alt or _lht_str(lht(alt)) != _lht_str(lht(D2(f)))):
            printed_ok = False
    rep.check("samples where the leading dh2-part vanishes (not compared)", degenerate, degenerate)
    if printed_ok:
        rep.check("shift +alpha2 also matches", True, True)
    else:
        rep.deviation("leading term with the shift +alpha2 (as displayed)", "fails", "holds")
    return rep


def Compose_hat(alpha, v: SMElement) -> SMElement:
    out = v
    for i, k in enumerate(alpha):
        for _ in range(k):
            out = hat(i + 1) * out
    return out


def _lht_str(r):
    return None if r is None else (r.sigma, str(r.leading))


def check_lambda_families(params) -> LemmaReport:
    grid = params.get("grid") or [(1, 1), (2, 1), (2, 2)]
    signs = params.get("signs") or ["+", "-"]
    rep = LemmaReport("3.12", {"grid": grid, "signs": signs})
    for p, q in grid:
        expected_tags = list(lambda_families(p, q))
        for sign in signs:
            lines = enumerate_hwv_lambda(p, q, sign)
            tags = [l.tag for l in lines]
            rep.check(f"every line of Lambda{sign} (x) F({p},{q}) matches a family", None in tags, False)
            rep.check(f"families found in Lambda{sign} (x) F({p},{q})", sorted(t for t in tags if t), sorted(expected_tags))
            rep.check(f"line count equals character count for F({p},{q})", len(lines), lambda_weight_count(p, q))
            if p >= 1 and q >= 1:
                rep.check(f"eight families for F({p},{q})", len(lines), 8)
    return rep


def _expected_t(p: int, q: int) -> List[str]:
    return sorted(t_families(p, q))


def check_t_tables(params, variant: str) -> LemmaReport:
    pmax = _p(params, "pmax", 4)
    lid = "3.13" if variant == "e0prime" else "3.14"
    rep = LemmaReport(lid, {"pmax": pmax})
    for p in range(pmax + 1):
        for q in range(pmax + 1):
            lines = kernel_e0prime(p, q, variant)
            tags = sorted(l.tag or "unmatched" for l in lines)
            rep.check(f"{variant} kernel tags for F({p},{q})", tags, _expected_t(p, q))
            nontriv = [t for t in tags if t != "T0"]
            rep.check(f"p = 0 or q = 0 when F({p},{q}) has extra lines", not nontriv or p == 0 or q == 0, True)
    return rep


# -- properties of the induced module ----------------------------------------------


def _default_module(params) -> InducedModule:
    p, q, r = _p(params, "p", 1), _p(params, "q", 1), _p(params, "r", 1)
    y = Fraction(params.get("y", "5/7"))
    return InducedModule(IrrepF(p, q, r, y))


def _part_keys(module, m, i, j):
    out = []
    for mono in _monos(m, i, j):
        out.extend((mono, n) for n in range(module.F.dim))
    return out


def _monos(m, i, j):
    alphas = [(a, b, m - a - b) for a in range(m + 1) for b in range(m - a + 1)]
    return [(al, I, J) for al in alphas for I in combinations((1, 2, 3), i) for J in combinations((1, 2, 3), j)]


def _shape(key):
    mono = key[0]
    return sum(mono[0]), len(mono[1]), len(mono[2])


def check_filtration(params) -> LemmaReport:
    bound = _p(params, "bound", 2)
    module = _default_module(params)
    rep = LemmaReport("4.2-filtration", {"bound": bound, "F": repr(module.F)})
    e0p = NAMED["e0prime"]
    for m in range(bound + 1):
        for i in range(min(bound, 3) + 1):
            for j in range(min(bound, 3) + 1):
                allowed = {(m - 1, i + 1, j), (m, i, j - 1)}
                bad = 0
                for key in _part_keys(module, m, i, j):
                    if any(_shape(k) not in allowed for k in module.act_key(e0p, key)):
                        bad += 1
                rep.check(f"e0prime maps S^{m} L-_{i} L+_{j} into the two allowed pieces", bad, 0)
    return rep


def check_reorder(params) -> LemmaReport:
    module = _default_module(params)
    rep = LemmaReport("4.2-reorder", {"F": repr(module.F)})
    for i in range(4):
        for j in range(4):
            bad = 0
            trip = 0
            for I in combinations((1, 2, 3), i):
                for J in combinations((1, 2, 3), j):
                    w = module.element({(((0, 0, 0), I, J), 0): 1}, "+-")
                    v = reorder(w, "-+")
                    if any(_shape(k) != (s, i - s, j - s) for k in v.terms for s in [_shape(k)[0]]):
                        bad += 1
                    if reorder(v, "+-") != w:
                        trip += 1
            rep.check(f"L+_{j} L-_{i} lies in sum_s S^s L-_(i-s) L+_(j-s)", bad, 0)
            rep.check(f"round trip of reordering for i={i}, j={j}", trip, 0)
    return rep


def check_y_eigen(params) -> LemmaReport:
    bound = _p(params, "bound", 2)
    module = _default_module(params)
    rep = LemmaReport("4.3-hypercharge", {"bound": bound, "F": repr(module.F)})
    Y = NAMED["Y"]
    y = module.F.y
    for m in range(bound + 1):
        for i in range(4):
            for j in range(4):
                want = y - Fraction(i + j, 3) - Fraction(2 * m, 3)
                bad = 0
                for key in _part_keys(module, m, i, j)[:: max(1, module.F.dim // 3)]:
                    img = module.act_key(Y, key)
                    if img != ({key: want} if want else {}):
                        bad += 1
                rep.check(f"Y eigenvalue on S^{m} L-_{i} L+_{j} is {format_rational(want)}", bad, 0)
    return rep


def _x_monomials(n: int):
    for a in range(n + 1):
        for b in range(n - a + 1):
            yield (a, b, n - a - b)


def check_annihilation(params) -> LemmaReport:
    nmax = _p(params, "nmax", 3)
    module = _default_module(params)
    rep = LemmaReport("4.4", {"nmax": nmax, "F": repr(module.F)})
    for n in range(1, nmax + 1):
        for e in _x_monomials(n):
            h = Polynomial.monomial(e + (0, 0))
            g = dp(4, h * x(5))
            for k in range(1, min(n, 3) + 1):
                bad = 0
                for key in _part_keys(module, n - k, k, k):
                    if module.act_key(g, key):
                        bad += 1
                rep.check(f"{g} kills S^{n - k} L-_{k} L+_{k}", bad, 0)
    return rep


SIX_LAMBDAS = [(2, 0), (0, 1), (1, -1), (-2, 2), (-1, 0), (0, -2)]
SIX_SHIFTS = [(-1, 1, 1), (0, 0, 1), (0, 1, 0), (1, -1, 1), (1, 0, 0), (1, 1, -1)]


def check_shifts(params) -> LemmaReport:
    rep = LemmaReport("4.6", dict(params))
    got = []
    for lam in SIX_LAMBDAS:
        # (-d1+d2, -d2+d3) = lam and d1+d2+d3 = 1, with lam the weight of T minus (p,q)
        cols = [{0: -1, 2: 1}, {0: 1, 1: -1, 2: 1}, {1: 1, 2: 1}]
        sol = linalg.solve(cols, {0: lam[0], 1: lam[1], 2: 1})
        got.append(tuple(int(s) for s in sol))
    rep.check("sigma - beta for the six weights", got, SIX_SHIFTS)
    xw = {1: (1, 0), 2: (-1, 1), 3: (0, -1)}
    weights = sorted({(xw[i][0] + xw[j][0], xw[i][1] + xw[j][1]) for i in (1, 2, 3) for j in (1, 2, 3)})
    rep.check("distinct weights of L-_1 L+_1", weights, sorted(SIX_LAMBDAS))
    for p, q in params.get("grid") or [(2, 2), (3, 2)]:
        module = InducedModule(IrrepF(p, q, 0, 0))
        keys = [(((0, 0, 0), (i,), (j,)), n) for i in (1, 2, 3) for j in (1, 2, 3) for n in range(module.F.dim)]
        ker = _kernel_by_weight(module, keys, ("e1", "e2"))
        found = sorted((a - p, b - q) for a, b in ker)
        rep.check(f"hwv weights of L-_1 L+_1 (x) F({p},{q}) minus (p,q)", set(found) <= set(SIX_LAMBDAS), True)
    return rep


def _delta(sign: str, m: ModelElement):
    return [(i, MD(i) * m) for i in (1, 2, 3)]


def t_beta_families(p: int, q: int, printed: bool = False) -> Dict[int, Tuple[Tuple[int, int], List[list]]]:
    """hwv families of L-_1 L+_1 (x) F(p,q) by case number; each family is a parts list
    (c, I, J, model) for mixed_vector."""
    fam: Dict[int, Tuple[Tuple[int, int], List[list]]] = {}
    X1, X2, X3 = MX(1), MX(2), MX(3)
    fam[1] = ((p + 2, q), [[(1, (1,), (1,), M(q, p))]])
    if printed:
        m = M(q, p)
        two_a = [(1, (1,), (1,), X2 * m), (-1, (1,), (3,), X1 * m)]
    else:
        m = M(q, p - 1) if p >= 1 else None
        two_a = [(1, (1,), (1,), X2 * m), (-1, (1,), (2,), X1 * m)] if m else []
    fam[2] = ((p, q + 1), [two_a, [(1, (1,), (2,), M(q, p)), (-1, (2,), (1,), M(q, p))]])
    if q >= 1:
        m = M(q - 1, p)
        fam[3] = ((p + 1, q - 1), [
            [(1, (1,), (i,), MD(i) * m) for i in (1, 2, 3)],
            [(1, (i,), (1,), MD(i) * m) for i in (1, 2, 3)],
        ])
    if p >= 2:
        m = M(q, p - 2)
        second = [(X2, 1), (X1, 2)]
        parts = []
        for ca, ia, ma in ((1, 1, X2), (-1, 2, X1)):
            if printed:
                # the displayed second factor reads (d+_1[x2] - d-_2[x1])
                parts.append((ca, (ia,), (1,), ma * X2 * m))
            else:
                parts.extend([(ca, (ia,), (1,), ma * X2 * m), (-ca, (ia,), (2,), ma * X1 * m)])
        fam[4] = ((p - 2, q + 2), [parts])
    if p >= 1:
        m = M(q, p - 1)
        first = [
            (1, (1,), (2,), X3 * m), (-1, (1,), (3,), X2 * m),
            (1, (2,), (3,), X1 * m), (-1, (2,), (1,), X3 * m),
            (1, (3,), (1,), X2 * m), (-1, (3,), (2,), X1 * m),
        ]
        fams = [first]
        if q >= 1:
            m2 = M(q - 1, p - 1)
            fams.append([(1, (1,), (i,), X2 * MD(i) * m2) for i in (1, 2, 3)]
                        + [(-1, (2,), (i,), X1 * MD(i) * m2) for i in (1, 2, 3)])
        fam[5] = ((p - 1, q), fams)
    if q >= 2:
        m = M(q - 2, p)
        fam[6] = ((p, q - 2), [[(1, (i,), (j,), MD(i) * MD(j) * m) for i in (1, 2, 3) for j in (1, 2, 3)]])
    return fam


def check_t_beta(params) -> LemmaReport:
    grid = params.get("grid") or [(2, 2), (3, 2), (2, 3)]
    rep = LemmaReport("4.7", {"grid": grid})
    for p, q in grid:
        module = InducedModule(IrrepF(p, q, 0, 0))
        keys = [(((0, 0, 0), (i,), (j,)), n) for i in (1, 2, 3) for j in (1, 2, 3) for n in range(module.F.dim)]
        ker = _kernel_by_weight(module, keys, ("e1", "e2"))
        fixed = t_beta_families(p, q)
        shown = t_beta_families(p, q, printed=True)
        for case in sorted(fixed):
            wt, fams = fixed[case]
            ks, K = ker.get(wt, (keys, []))
            vecs = [v for v in (mixed_vector(module, f) for f in fams) if v]
            ok = _span_match(ks, K, vecs)
            rep.check(f"case {case}: families span the hwv space of weight {wt} in F({p},{q})", ok, True)
            pw, pf = shown[case]
            pvecs = [v for v in (mixed_vector(module, f) for f in pf) if v]
            if ok and not _span_match(ks, K, pvecs):
                rep.deviation(f"case {case}: displayed formula for F({p},{q})", "does not span", "spans")
    return rep


# D operators realised on the induced module through the g0 action


def _ind_D(module: InducedModule, i: int, w: InducedElement) -> InducedElement:
    act = module.act
    left = module.left_letter
    if i == 3:
        return left(("h", 3), w)
    if i == 2:
        return left(("h", 2), act("h2", w)) + left(("h", 3), act("f2", w))
    hw = act("h1", w) + act("h2", w) + w
    A = lambda u: left(("h", 1), act("h1", u)) + left(("h", 2), act("f1", u))
    B = lambda u: act("f12", act("h1", u)) + act("f2", act("f1", u))
    return A(hw) + left(("h", 3), B(w))


def _ind_lht(w: InducedElement):
    alphas = {k[0][0] for k in w.terms}
    sigma = max(alphas)
    return sigma, {k: c for k, c in w.terms.items() if k[0][0] == sigma}


def check_e0prime_leading(params) -> LemmaReport:
    grid = params.get("grid") or [(2, 2), (3, 2)]
    bmax = _p(params, "bmax", 1)
    rep = LemmaReport("4.8", {"grid": grid, "bmax": bmax})
    e0p = NAMED["e0prime"]
    for p, q in grid:
        module = InducedModule(IrrepF(p, q, 0, 0))
        for case, (wt, fams) in sorted(t_beta_families(p, q).items()):
            for fam in fams:
                vec = mixed_vector(module, fam)
                if not vec:
                    continue
                T = module.element(vec)
                a, b = wt
                for nb in range(bmax + 1):
                    for b1 in range(nb + 1):
                        for b2 in range(nb - b1 + 1):
                            beta = (b1, b2, nb - b1 - b2)
                            w = T
                            for i, k in ((3, beta[2]), (2, beta[1]), (1, beta[0])):
                                for _ in range(k):
                                    w = _ind_D(module, i, w)
                            img = module.act(e0p, w)
                            proj = module.element({k: c for k, c in img.terms.items() if sum(k[0][0]) == nb})
                            c = _falling_weight_factor(a, b, beta)
                            rhs = module.act(e0p, T).scale(c)
                            for i, k in enumerate(beta):
                                for _ in range(k):
                                    rhs = module.left_letter(("h", i + 1), rhs)
                            if proj.is_zero():
                                rep.check(f"case {case}, beta={beta}, F({p},{q}): both sides vanish", rhs.is_zero(), True)
                                continue
                            sigma, lead = _ind_lht(proj)
                            rep.check(
                                f"case {case}, beta={beta}, F({p},{q}): leading term",
                                (sigma, sorted(lead.items())),
                                (beta, sorted(rhs.terms.items())),
                            )
    return rep


def check_scan(params) -> LemmaReport:
    pmax, qmax = _p(params, "pmax", 2), _p(params, "qmax", 2)
    max_depth = _p(params, "maxDepth", 3)
    rs = [int(t) for t in str(params.get("r", "0,1")).split(",")]
    jobs = _p(params, "jobs", 1)
    rep = LemmaReport("4.1", {"pmax": pmax, "qmax": qmax, "r": rs, "maxDepth": max_depth})
    for row in theorem41_scan(pmax, qmax, rs, max_depth, jobs=jobs):
        rep.check(f"no y-conditions for (p,q,r) = ({row['p']},{row['q']},{row['r']})", row["conditions"], [])
    return rep


LEMMAS: Dict[str, Callable[[Mapping], LemmaReport]] = {
    "relations": check_relations,
    "jacobi": check_jacobi,
    "dims": check_dims,
    "hypercharge": check_hypercharge,
    "3.1": check_model,
    "3.2": check_dbar,
    "3.3": check_intertwining,
    "3.4": check_decompose,
    "3.5": check_lht_formula,
    "3.6": check_dbar_image,
    "3.7": check_commute,
    "3.8": check_expansion,
    "3.9": check_single_powers,
    "3.10": check_d2_shift,
    "3.11": check_d2_leading,
    "3.12": check_lambda_families,
    "3.13": lambda params: check_t_tables(params, "e0prime"),
    "3.14": lambda params: check_t_tables(params, "e1prime"),
    "4.1": check_scan,
    "4.2-filtration": check_filtration,
    "4.2-reorder": check_reorder,
    "4.3-hypercharge": check_y_eigen,
    "4.4": check_annihilation,
    "4.6": check_shifts,
    "4.7": check_t_beta,
    "4.8": check_e0prime_leading,
}


def verify_lemma(lemma_id: str, params: Optional[Mapping] = None) -> LemmaReport:
    try:
        fn = LEMMAS[lemma_id]
    except KeyError:
        raise UnknownLemmaError(f"unknown lemma id {lemma_id!r}") from None
    rep = fn(dict(params or {}))
    rep.lemma_id = lemma_id
    return rep

"""Elements of E(5,10): divergence-free vector fields plus closed 2-forms.

Coefficients are polynomials in x1..x5. ``d_jk`` stands for dx_j ^ dx_k and
the volume form is dx1 ^ ... ^ dx5.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from .scalar import Polynomial, join_terms, perm_sign, sort_sign

N = 5
SECONDARY_X = (0, 0, 0, 1, 1)  # secondary degree of x1..x5
ZERO = Polynomial.zero(N)


class InvariantError(ValueError):
    """An element violates divergence-freeness or closedness."""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        self.detail = detail
        super().__init__(f"{invariant}: {detail}" if detail else invariant)


def x(i: int) -> Polynomial:
    return Polynomial.var(i - 1, N)


def const(c) -> Polynomial:
    return Polynomial.const(c, N)


# epsilon_{ijklm}; computed once from permutations of 1..5
_EPS: Dict[Tuple[int, ...], int] = {p: perm_sign(p) for p in permutations(range(1, N + 1))}


def epsilon(*idx: int) -> int:
    return _EPS.get(tuple(idx), 0)


class Form:
    """A differential form of fixed degree: {increasing index tuple: Polynomial}."""

    __slots__ = ("degree", "comps")

    def __init__(self, degree: int, comps: Optional[Mapping[Tuple[int, ...], Polynomial]] = None):
        self.degree = degree
        self.comps: Dict[Tuple[int, ...], Polynomial] = {}
        for idx, p in (comps or {}).items():
            self._add(idx, p)

    def _add(self, idx: Sequence[int], p: Polynomial, sign: int = 1):
        if len(idx) != self.degree:
            raise ValueError(f"index {idx} does not match form degree {self.degree}")
        s, key = sort_sign(idx)
        if s == 0 or not p:
            return
        cur = self.comps.get(key, ZERO) + (p if s * sign == 1 else -p)
        if cur:
            self.comps[key] = cur
        else:
            self.comps.pop(key, None)

    def is_zero(self) -> bool:
        return not self.comps

    def wedge(self, other: "Form") -> "Form":
        out = Form(self.degree + other.degree)
        for i1, p1 in self.comps.items():
            for i2, p2 in other.comps.items():
                out._add(i1 + i2, p1 * p2)
        return out

    def d(self) -> "Form":
        out = Form(self.degree + 1)
        for idx, p in self.comps.items():
            for i in range(1, N + 1):
                if i not in idx:
                    dp = p.partial(i - 1)
                    if dp:
                        out._add((i,) + idx, dp)
        return out

    def contract(self, field: Sequence[Polynomial]) -> "Form":
        """Interior product i_X with X = sum field[i-1] * d/dx_i."""
        out = Form(self.degree - 1)
        for idx, p in self.comps.items():
            for pos, i in enumerate(idx):
                a = field[i - 1]
                if a:
                    rest = idx[:pos] + idx[pos + 1:]
                    out._add(rest, a * p, -1 if pos % 2 else 1)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Form) and self.degree == other.degree and self.comps == other.comps

    def __repr__(self) -> str:
        body = " + ".join(f"({p})*d{''.join(map(str, idx))}" for idx, p in sorted(self.comps.items()))
        return f"Form[{self.degree}]({body or '0'})"


def divergence(coeffs: Sequence[Polynomial]) -> Polynomial:
    """sum_i d a_i / d x_i for an unchecked field candidate."""
    out = ZERO
    for i, a in enumerate(coeffs):
        if a:
            out = out + a.partial(i)
    return out


def exterior_derivative(b) -> Form:
    """d of an unchecked 2-form given as a Form, TwoForm or {(j,k): poly} map."""
    if isinstance(b, TwoForm):
        b = b.as_form()
    elif not isinstance(b, Form):
        b = Form(2, b)
    return b.d()


class VectorField:
    """sum_i a_i d/dx_i with sum_i d_i a_i = 0."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Sequence[Polynomial] = (), check: bool = True):
        cs = list(coeffs) + [ZERO] * (N - len(coeffs))
        if len(cs) != N:
            raise ValueError("a vector field has five coefficients")
        self.coeffs: Tuple[Polynomial, ...] = tuple(cs)
        self._hash = None
        if check:
            div = divergence(self.coeffs)
            if div:
                raise InvariantError("divergence-zero vector field", f"divergence is {div}")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "VectorField") -> "VectorField":
        return VectorField([a + b for a, b in zip(self.coeffs, other.coeffs)], check=False)

    def __neg__(self) -> "VectorField":
        return VectorField([-a for a in self.coeffs], check=False)

    def scale(self, c) -> "VectorField":
        return VectorField([a.scale(c) for a in self.coeffs], check=False)

    def times(self, p: Polynomial) -> "VectorField":
        return VectorField([a * p for a in self.coeffs], check=False)

    def apply(self, p: Polynomial) -> Polynomial:
        """The field as a derivation: sum a_i dp/dx_i."""
        out = ZERO
        for i, a in enumerate(self.coeffs):
            if a:
                dp = p.partial(i)
                if dp:
                    out = out + a * dp
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, VectorField) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash


class TwoForm:
    """sum_{j<k} b_jk d_jk with d(sum b_jk d_jk) = 0."""

    __slots__ = ("comps", "_hash")

    def __init__(self, comps: Optional[Mapping[Tuple[int, int], Polynomial]] = None, check: bool = True):
        form = comps if isinstance(comps, Form) else Form(2, comps or {})
        if form.degree != 2:
            raise ValueError("not a 2-form")
        self.comps: Dict[Tuple[int, int], Polynomial] = dict(form.comps)
        self._hash = None
        if check:
            dB = form.d()
            if not dB.is_zero():
                raise InvariantError("closed 2-form", f"exterior derivative is {dB!r}")

    def as_form(self) -> Form:
        return Form(2, self.comps)

    def is_zero(self) -> bool:
        return not self.comps

    def __add__(self, other: "TwoForm") -> "TwoForm":
        f = Form(2, self.comps)
        for idx, p in other.comps.items():
            f._add(idx, p)
        return TwoForm(f, check=False)

    def __neg__(self) -> "TwoForm":
        return TwoForm({k: -p for k, p in self.comps.items()}, check=False)

    def scale(self, c) -> "TwoForm":
        return TwoForm({k: p.scale(c) for k, p in self.comps.items()}, check=False)

    def times(self, p: Polynomial) -> "TwoForm":
        return TwoForm({k: q * p for k, q in self.comps.items()}, check=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, TwoForm) and self.comps == other.comps

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.comps.items()))
        return self._hash


class SuperElement:
    """even (vector field) + odd (closed 2-form) element of E(5,10)."""

    __slots__ = ("even", "odd", "_hash")

    def __init__(self, even: Optional[VectorField] = None, odd: Optional[TwoForm] = None):
        self.even = even if even is not None else VectorField(check=False)
        self.odd = odd if odd is not None else TwoForm(check=False)
        self._hash = None

    @classmethod
    def field(cls, coeffs: Mapping[int, Polynomial], check: bool = True) -> "SuperElement":
        """Build sum coeffs[i] * d/dx_i from a 1-based index map."""
        cs = [ZERO] * N
        for i, p in coeffs.items():
            cs[i - 1] = cs[i - 1] + p
        return cls(even=VectorField(cs, check=check))

    @classmethod
    def form(cls, comps: Mapping[Tuple[int, int], Polynomial], check: bool = True) -> "SuperElement":
        return cls(odd=TwoForm(Form(2, comps), check=check))

    def validate(self) -> "SuperElement":
        VectorField(self.even.coeffs, check=True)
        TwoForm(self.odd.comps, check=True)
        return self

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.odd.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    @property
    def parity(self) -> Optional[int]:
        """0 (even), 1 (odd), or None for mixed or zero elements."""
        e, o = not self.even.is_zero(), not self.odd.is_zero()
        if e and not o:
            return 0
        if o and not e:
            return 1
        return None

    def __add__(self, other: "SuperElement") -> "SuperElement":
        return SuperElement(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "SuperElement") -> "SuperElement":
        return self + (-other)

    def __neg__(self) -> "SuperElement":
        return SuperElement(-self.even, -self.odd)

    def scale(self, c) -> "SuperElement":
        return SuperElement(self.even.scale(c), self.odd.scale(c))

    def __mul__(self, c) -> "SuperElement":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def times(self, p: Polynomial) -> "SuperElement":
        """Multiply coefficients by a polynomial (result is not re-validated)."""
        return SuperElement(self.even.times(p), self.odd.times(p))

    def __eq__(self, other) -> bool:
        return isinstance(other, SuperElement) and self.even == other.even and self.odd == other.odd

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.even, self.odd))
        return self._hash

    def monomials(self) -> Iterator[Tuple[str, Tuple[int, ...], Tuple[int, ...], object]]:
        """Yield (kind, index, exponent, coeff) with kind 'field' or 'form'."""
        for i, a in enumerate(self.even.coeffs):
            for e, c in a.items():
                yield "field", (i + 1,), e, c
        for jk, b in self.odd.comps.items():
            for e, c in b.items():
                yield "form", jk, e, c

    def to_string(self) -> str:
        parts = []
        for i, a in enumerate(self.even.coeffs):
            for e, c in a.sorted_terms():
                parts.append((c, _mono(e, f"dp{i + 1}")))
        for jk in sorted(self.odd.comps):
            for e, c in self.odd.comps[jk].sorted_terms():
                parts.append((c, _mono(e, f"d{jk[0]}{jk[1]}")))
        return join_terms(parts)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"SuperElement({self.to_string()!r})"


def _mono(exp: Sequence[int], tail: str) -> str:
    factors = []
    for i, k in enumerate(exp):
        if k == 1:
            factors.append(f"x{i + 1}")
        elif k > 1:
            factors.append(f"x{i + 1}^{k}")
    factors.append(tail)
    return "*".join(factors)


def d(j: int, k: int, coeff: Optional[Polynomial] = None, check: bool = True) -> SuperElement:
    """The odd element coeff * d_jk (coeff defaults to 1)."""
    return SuperElement.form({(j, k): coeff if coeff is not None else const(1)}, check=check)


def dplus(i: int) -> SuperElement:
    return d(i, 4)


def dminus(i: int) -> SuperElement:
    return d(i, 5)


def dp(i: int, coeff: Optional[Polynomial] = None, check: bool = True) -> SuperElement:
    """The even element coeff * d/dx_i."""
    return SuperElement.field({i: coeff if coeff is not None else const(1)}, check=check)


def _field_bracket(X: VectorField, Y: VectorField) -> list:
    out = [ZERO] * N
    if X.is_zero() or Y.is_zero():
        return out
    for i in range(N):
        out[i] = X.apply(Y.coeffs[i]) - Y.apply(X.coeffs[i])
    return out


def lie_derivative(X: VectorField, omega: Form) -> Form:
    """L_X omega computed as d(i_X omega); valid for closed omega."""
    if X.is_zero() or omega.is_zero():
        return Form(omega.degree)
    return omega.contract(X.coeffs).d()


def _odd_odd(A: TwoForm, B: TwoForm) -> list:
    out = [ZERO] * N
    for (j, k), a in A.comps.items():
        for (l, m), b in B.comps.items():
            if len({j, k, l, m}) < 4:
                continue
            ab = a * b
            for i in range(1, N + 1):
                e = _EPS.get((i, j, k, l, m), 0)
                if e:
                    out[i - 1] = out[i - 1] + (ab if e > 0 else -ab)
    return out


def super_bracket(a: SuperElement, b: SuperElement) -> SuperElement:
    """[a, b] = ab - (-1)^{|a||b|} ba, extended bilinearly to mixed inputs."""
    ff = _field_bracket(a.even, b.even)
    oo = _odd_odd(a.odd, b.odd)
    even = [p + q for p, q in zip(ff, oo)]
    odd = lie_derivative(a.even, b.odd.as_form())
    for idx, p in lie_derivative(b.even, a.odd.as_form()).comps.items():
        odd._add(idx, -p)
    # the bracket is closed by construction; a failure here is a bug
    return SuperElement(VectorField(even, check=True), TwoForm(odd, check=True))


def wedge_bracket(a: TwoForm, b: TwoForm) -> VectorField:
    """Cross-check for the odd-odd bracket: a ^ b read through the volume form.

    Returns Z with i_Z(dx1^...^dx5) = a ^ b.
    """
    four = a.as_form().wedge(b.as_form())
    cs = [ZERO] * N
    for idx, p in four.comps.items():
        (i,) = [t for t in range(1, N + 1) if t not in idx]
        # i_{d/dx_i} vol = (-1)^(i-1) * (product of the other dx's)
        cs[i - 1] = p if (i - 1) % 2 == 0 else -p
    return VectorField(cs, check=False)


def consistent_degree_of(kind: str, idx: Tuple[int, ...], exp: Sequence[int]) -> int:
    """deg x_i = 2, deg d/dx_i = -2, deg dx_i = -1/2."""
    return 2 * sum(exp) - (2 if kind == "field" else 1)


def secondary_degree_of(kind: str, idx: Tuple[int, ...], exp: Sequence[int]) -> int:
    base = sum(s * k for s, k in zip(SECONDARY_X, exp))
    if kind == "field":
        return base - SECONDARY_X[idx[0] - 1]
    j, k = idx
    return base + SECONDARY_X[j - 1] + SECONDARY_X[k - 1] - 1


def _degree(a: SuperElement, fn, label: str) -> int:
    degs = {fn(kind, idx, e) for kind, idx, e, _ in a.monomials()}
    if not degs:
        raise ValueError(f"the zero element has no {label} degree")
    if len(degs) > 1:
        raise ValueError(f"element is not homogeneous for the {label} grading (degrees {sorted(degs)})")
    return degs.pop()


def consistent_degree(a: SuperElement) -> int:
    return _degree(a, consistent_degree_of, "consistent")


def secondary_degree(a: SuperElement) -> int:
    return _degree(a, secondary_degree_of, "secondary")


def homogeneous_components(a: SuperElement, grading: str = "consistent") -> Dict[int, SuperElement]:
    """Split a into graded pieces (pieces are not re-validated individually)."""
    fn = consistent_degree_of if grading == "consistent" else secondary_degree_of
    fields: Dict[int, list] = {}
    forms: Dict[int, Form] = {}
    for kind, idx, e, c in a.monomials():
        deg = fn(kind, idx, e)
        mono = Polynomial.monomial(e, c)
        if kind == "field":
            cs = fields.setdefault(deg, [ZERO] * N)
            cs[idx[0] - 1] = cs[idx[0] - 1] + mono
        else:
            forms.setdefault(deg, Form(2))._add(idx, mono)
    out = {}
    for deg in sorted(set(fields) | set(forms)):
        out[deg] = SuperElement(
            VectorField(fields.get(deg, [ZERO] * N), check=False),
            TwoForm(forms.get(deg, Form(2)), check=False),
        )
    return out

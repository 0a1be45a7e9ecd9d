"""Exact rational scalars, sparse polynomials and exterior-monomial signs."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

Rational = Fraction
Exponent = Tuple[int, ...]

X_NAMES = ("x1", "x2", "x3", "x4", "x5")


def as_rational(value) -> Fraction:
    """Coerce int, Fraction or a string like ``"-2/3"`` to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(value) -> str:
    """Serialize as an exact ``num/den`` string (denominator always shown)."""
    value = as_rational(value)
    return f"{value.numerator}/{value.denominator}"


def _norm(c):
    # keep integral coefficients as plain ints; Fraction arithmetic is slow
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def perm_sign(seq: Sequence[int]) -> int:
    """Sign of a sequence read as a permutation of its sorted values; 0 on repeats."""
    if len(set(seq)) != len(seq):
        return 0
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


def sort_sign(indices: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Bubble-sort anticommuting symbols; returns (sign, sorted indices).

    A repeated symbol squares to zero, reported as sign 0.
    """
    items = list(indices)
    sign = 1
    n = len(items)
    for i in range(n):
        for j in range(n - 1 - i):
            if items[j] == items[j + 1]:
                return 0, tuple(sorted(items))
            if items[j] > items[j + 1]:
                items[j], items[j + 1] = items[j + 1], items[j]
                sign = -sign
    if any(items[k] == items[k + 1] for k in range(n - 1)):
        return 0, tuple(items)
    return sign, tuple(items)


class ExteriorMonomial:
    """A product of distinct anticommuting symbols, stored in increasing order."""

    __slots__ = ("indices",)

    def __init__(self, indices: Iterable[int] = ()):
        indices = tuple(indices)
        if any(indices[k] >= indices[k + 1] for k in range(len(indices) - 1)):
            raise ValueError(f"indices must be strictly increasing, got {indices}")
        self.indices = indices

    @classmethod
    def from_product(cls, indices: Sequence[int]) -> Tuple[int, Optional["ExteriorMonomial"]]:
        sign, ordered = sort_sign(indices)
        if sign == 0:
            return 0, None
        return sign, cls(ordered)

    def __mul__(self, other: "ExteriorMonomial") -> Tuple[int, Optional["ExteriorMonomial"]]:
        return ExteriorMonomial.from_product(self.indices + other.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __eq__(self, other) -> bool:
        return isinstance(other, ExteriorMonomial) and self.indices == other.indices

    def __hash__(self) -> int:
        return hash(("ExteriorMonomial", self.indices))

    def __repr__(self) -> str:
        return f"ExteriorMonomial({self.indices})"


class Polynomial:
    """Sparse polynomial in commuting variables with exact rational coefficients.

    Values are immutable; the term map never stores zero coefficients.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Exponent, object]] = None, nvars: int = 5):
        self.nvars = nvars
        clean: Dict[Exponent, object] = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} does not have {nvars} slots")
                if c:
                    clean[exp] = _norm(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exponent, object], nvars: int) -> "Polynomial":
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int = 5) -> "Polynomial":
        return cls._raw({}, nvars)

    @classmethod
    def const(cls, c, nvars: int = 5) -> "Polynomial":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def var(cls, i: int, nvars: int = 5) -> "Polynomial":
        """The variable with 0-based slot ``i``."""
        if not 0 <= i < nvars:
            raise IndexError(f"variable slot {i} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw({tuple(exp): 1}, nvars)

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> "Polynomial":
        return cls({tuple(exp): c}, len(exp))

    @property
    def terms(self) -> Dict[Exponent, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exp: Sequence[int]):
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degrees(self) -> set:
        return {sum(e) for e in self._terms}

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(e) for e in self._terms)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials over different variable sets")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(other, self.nvars)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return Polynomial._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw({e: _norm(v * c) for e, v in self._terms.items()}, self.nvars)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Exponent, object] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw({e: _norm(c) for e, c in out.items()}, self.nvars)

    def __rmul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.const(1, self.nvars)
        for _ in range(n):
            result = result * self
        return result

    def partial(self, var: int) -> "Polynomial":
        """Formal partial derivative in the 0-based variable slot ``var``."""
        if not isinstance(var, int) or not 0 <= var < self.nvars:
            raise IndexError(f"unknown variable slot {var!r} for {self.nvars} variables")
        out: Dict[Exponent, object] = {}
        for e, c in self._terms.items():
            k = e[var]
            if k:
                ne = e[:var] + (k - 1,) + e[var + 1:]
                out[ne] = _norm(out.get(ne, 0) + k * c)
        return Polynomial._raw({e: c for e, c in out.items() if c}, self.nvars)

    def evaluate_constant(self):
        """Coefficient of the constant monomial."""
        return self._terms.get((0,) * self.nvars, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def sorted_terms(self):
        """Terms in a deterministic order: higher total degree first, then lex."""
        return sorted(self._terms.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0])))

    def to_string(self, names: Optional[Sequence[str]] = None) -> str:
        names = names or (X_NAMES if self.nvars == 5 else tuple(f"v{i + 1}" for i in range(self.nvars)))
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = []
            for name, k in zip(names, exp):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            parts.append((c, "*".join(factors)))
        return join_terms(parts)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string()!r})"


def join_terms(parts) -> str:
    """Render ``[(coeff, monomial_string)]`` as ``a*m1 - b*m2 + ...``."""
    out = []
    for c, mono in parts:
        c = Fraction(c)
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
        else:
            body = _fmt_coeff(a)
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


def _fmt_coeff(a: Fraction) -> str:
    return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

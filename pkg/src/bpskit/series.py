"""Exact formal-series engine.

Three value types, all immutable, all over arbitrary-precision integers:

* LaurentPoly -- finite-support Laurent polynomial in one variable.
* TruncSeries -- Laurent series in q known exactly on a tracked window
  of exponents [min_exp, order].  Coefficients below min_exp are zero
  (min_exp bounds the valuation) and coefficients above order are
  unknown and never reported.
* BiSeries -- series in q up to a fixed order whose coefficients are
  Laurent polynomials in a second variable.

Every operation derives the largest output window its inputs certify,
so a reported coefficient is always exact.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Mapping

from . import kernels
from .errors import EmptyWindow, InputError, InsufficientWindow, NonUnitLeading


def _as_int(x, what="coefficient"):
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"{what} must be an int, not {type(x).__name__}")
    return x


class LaurentPoly:
    """Finite-support Laurent polynomial with integer coefficients.

    Zero coefficients are never stored, so equality is plain term-map
    equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        data: dict[int, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                c = _as_int(c)
                if c:
                    e = _as_int(e, "exponent")
                    s = data.get(e, 0) + c
                    if s:
                        data[e] = s
                    elif e in data:
                        del data[e]
        self._terms = data

    @classmethod
    def _raw(cls, data: dict[int, int]) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._terms = data
        return p

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def items(self):
        """Terms as (exponent, coefficient) pairs in increasing exponent order."""
        return sorted(self._terms.items())

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    @property
    def min_exp(self) -> int | None:
        return min(self._terms) if self._terms else None

    @property
    def max_exp(self) -> int | None:
        return max(self._terms) if self._terms else None

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        data = dict(self._terms)
        for e, c in other._terms.items():
            s = data.get(e, 0) + c
            if s:
                data[e] = s
            elif e in data:
                del data[e]
        return LaurentPoly._raw(data)

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        data: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = data.get(e, 0) + c1 * c2
                if s:
                    data[e] = s
                elif e in data:
                    del data[e]
        return LaurentPoly._raw(data)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are defined")
        out = LaurentPoly({0: 1})
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: int) -> "LaurentPoly":
        c = _as_int(c)
        if not c:
            return LaurentPoly()
        return LaurentPoly._raw({e: c * v for e, v in self._terms.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by the k-th power of the variable."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def involution(self) -> "LaurentPoly":
        """Substitute the variable by its reciprocal."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def is_symmetric(self) -> bool:
        """True when invariant under the variable <-> reciprocal involution."""
        return all(self._terms.get(-e, 0) == c for e, c in self._terms.items())

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    def __repr__(self):
        if not self._terms:
            return "LaurentPoly(0)"
        bits = []
        for e, c in self.items():
            if e == 0:
                bits.append(f"{c}")
            elif e == 1:
                bits.append(f"{c}*z")
            else:
                bits.append(f"{c}*z^{e}")
        return "LaurentPoly(" + " + ".join(bits) + ")"

    def to_json(self) -> dict:
        return {"terms": {str(e): str(c) for e, c in self.items()}}

    @classmethod
    def from_json(cls, obj) -> "LaurentPoly":
        if not isinstance(obj, dict) or "terms" not in obj or not isinstance(obj["terms"], dict):
            raise InputError("Laurent polynomial JSON must be an object with a 'terms' map")
        data = {}
        for k, v in obj["terms"].items():
            try:
                data[int(k)] = int(v)
            except (TypeError, ValueError):
                raise InputError(f"bad Laurent term {k!r}: {v!r}") from None
        return cls(data)


class TruncSeries:
    """Laurent series in q, exact on the exponent window [min_exp, order].

    The stored coefficient array is dense over the window with no leading
    zeros; an all-zero series is stored with an empty array and
    min_exp == order + 1.  order == min_exp - 1 is legal and means the
    window determines no coefficient.
    """

    __slots__ = ("_min", "_order", "_coeffs")

    def __init__(self, min_exp: int, coeffs, order: int | None = None):
        coeffs = [_as_int(c) for c in coeffs]
        if order is None:
            order = min_exp + len(coeffs) - 1
        if len(coeffs) != order - min_exp + 1:
            raise ValueError(
                f"window [{min_exp}, {order}] needs {order - min_exp + 1} "
                f"coefficients, got {len(coeffs)}"
            )
        lead = 0
        while lead < len(coeffs) and not coeffs[lead]:
            lead += 1
        self._min = min_exp + lead
        self._order = order
        self._coeffs = tuple(coeffs[lead:])

    @classmethod
    def _raw(cls, min_exp: int, coeffs: list, order: int) -> "TruncSeries":
        lead = 0
        while lead < len(coeffs) and not coeffs[lead]:
            lead += 1
        s = cls.__new__(cls)
        s._min = min_exp + lead
        s._order = order
        s._coeffs = tuple(coeffs[lead:])
        return s

    @classmethod
    def from_terms(cls, terms: Mapping[int, int], order: int | None = None,
                   min_exp: int | None = None) -> "TruncSeries":
        """Series whose complete list of nonzero terms up to `order` is given.

        The caller asserts exactness: exponents not listed are zero on the
        whole window.
        """
        nz = {e: c for e, c in terms.items() if c}
        top = max(nz) if nz else None
        if order is None:
            if top is None:
                raise ValueError("an all-zero series needs an explicit order")
            order = top
        elif top is not None and top > order:
            raise ValueError(f"term at exponent {top} lies above order {order}")
        lo = min(nz) if nz else order + 1
        if min_exp is not None:
            lo = min(lo, min_exp)
        coeffs = [0] * (order - lo + 1)
        for e, c in nz.items():
            coeffs[e - lo] = c
        return cls(lo, coeffs, order)

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls(order + 1, [], order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls.from_terms({0: 1}, order=order)

    @property
    def min_exp(self) -> int:
        return self._min

    @property
    def order(self) -> int:
        return self._order

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, n: int) -> int:
        """Exact coefficient of q**n; n may lie anywhere at or below order."""
        if n > self._order:
            raise InsufficientWindow(
                f"coefficient of q^{n} lies beyond the exact window (order {self._order})"
            )
        if n < self._min:
            return 0
        return self._coeffs[n - self._min]

    def __getitem__(self, n: int) -> int:
        return self.coeff(n)

    def coeff_list(self) -> list[int]:
        """Dense coefficients over [min_exp, order]."""
        return list(self._coeffs)

    def items(self):
        """Nonzero (exponent, coefficient) pairs in increasing exponent order."""
        return [(self._min + i, c) for i, c in enumerate(self._coeffs) if c]

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self._min, self._order, self._coeffs) == (other._min, other._order, other._coeffs)

    def __hash__(self):
        return hash((self._min, self._order, self._coeffs))

    def __neg__(self):
        return TruncSeries._raw(self._min, [-c for c in self._coeffs], self._order)

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        lo = min(self._min, other._min)
        order = min(self._order, other._order)
        out = [0] * (order - lo + 1)
        for src in (self, other):
            for i, c in enumerate(src._coeffs):
                e = src._min + i
                if e > order:
                    break
                out[e - lo] += c
        return TruncSeries._raw(lo, out, order)

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        lo = self._min + other._min
        order = min(self._order + other._min, other._order + self._min)
        out = kernels.mul_trunc(list(self._coeffs), list(other._coeffs), order - lo + 1)
        return TruncSeries._raw(lo, out, order)

    def scale(self, c: int) -> "TruncSeries":
        c = _as_int(c)
        if not c:
            return TruncSeries.zero(self._order)
        return TruncSeries._raw(self._min, [c * v for v in self._coeffs], self._order)

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by q**k."""
        s = TruncSeries.__new__(TruncSeries)
        s._min = self._min + k
        s._order = self._order + k
        s._coeffs = self._coeffs
        return s

    def truncate(self, order: int) -> "TruncSeries":
        """Forget coefficients above `order` (which must not exceed self.order)."""
        if order > self._order:
            raise InsufficientWindow(
                f"cannot extend window: order {order} exceeds known order {self._order}"
            )
        keep = list(self._coeffs[: max(0, order - self._min + 1)])
        return TruncSeries._raw(min(self._min, order + 1), keep, order)

    def negate_q(self) -> "TruncSeries":
        """Substitute q -> -q."""
        out = [(-c if (self._min + i) % 2 else c) for i, c in enumerate(self._coeffs)]
        return TruncSeries._raw(self._min, out, self._order)

    def inverse(self, order: int) -> "TruncSeries":
        """Multiplicative inverse, exact through q**order.

        Needs a lowest nonzero coefficient of +1 or -1.  With valuation v,
        an input exact to q**o certifies the inverse only through
        q**(o - 2v); asking beyond that raises InsufficientWindow.
        """
        if not self._coeffs:
            raise NonUnitLeading("the zero series has no multiplicative inverse")
        lead = self._coeffs[0]
        if lead not in (1, -1):
            raise NonUnitLeading(
                f"leading coefficient must be +1 or -1 to invert exactly, got {lead}"
            )
        v = self._min
        provable = self._order - 2 * v
        if order > provable:
            raise InsufficientWindow(
                f"inverse is certified only through q^{provable}; "
                f"q^{order} needs the input exact through q^{order + 2 * v}"
            )
        if order < -v:
            raise InsufficientWindow(
                f"requested order {order} lies below the inverse's leading exponent {-v}"
            )
        out = kernels.inverse_unit(list(self._coeffs), order + v + 1)
        return TruncSeries._raw(-v, out, order)

    def __repr__(self):
        bits = []
        for e, c in self.items()[:6]:
            if e == 0:
                bits.append(f"{c}")
            elif e == 1:
                bits.append(f"{c}*q")
            else:
                bits.append(f"{c}*q^{e}")
        if len(self.items()) > 6:
            bits.append("...")
        body = " + ".join(bits) if bits else "0"
        return f"TruncSeries({body} + O(q^{self._order + 1}))"

    def to_json(self) -> dict:
        return {
            "min_exp": self._min,
            "order": self._order,
            "coeffs": [str(c) for c in self._coeffs],
        }

    @classmethod
    def from_json(cls, obj) -> "TruncSeries":
        if not isinstance(obj, dict):
            raise InputError("series JSON must be an object")
        try:
            lo = int(obj["min_exp"])
            order = int(obj["order"])
            coeffs = [int(c) for c in obj["coeffs"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad series JSON: {exc}") from None
        if len(coeffs) != order - lo + 1:
            raise InputError(
                f"series JSON window [{lo}, {order}] needs {order - lo + 1} "
                f"coefficients, got {len(coeffs)}"
            )
        return cls(lo, coeffs, order)


class BiSeries:
    """Series in q to a fixed order, with Laurent-polynomial coefficients."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[LaurentPoly]):
        rows = tuple(rows)
        for r in rows:
            if not isinstance(r, LaurentPoly):
                raise TypeError("BiSeries rows must be LaurentPoly values")
        self._rows = rows

    @property
    def order_q(self) -> int:
        return len(self._rows) - 1

    def coeff(self, h: int) -> LaurentPoly:
        if not 0 <= h <= self.order_q:
            raise InsufficientWindow(f"q^{h} lies outside the exact window [0, {self.order_q}]")
        return self._rows[h]

    def rows(self) -> tuple[LaurentPoly, ...]:
        return self._rows

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self._rows == other._rows

    def __repr__(self):
        return f"BiSeries(order_q={self.order_q})"

    def to_json(self) -> dict:
        return {"order_q": self.order_q, "rows": [r.to_json() for r in self._rows]}


# -- operation layer ---------------------------------------------------------


def lp_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    """Add or multiply Laurent polynomials; op is 'add' or 'mul'."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"op must be 'add' or 'mul', not {op!r}")


def series_arith(a: TruncSeries, b: TruncSeries, op: str) -> TruncSeries:
    """Windowed add or multiply; raises EmptyWindow when the result
    determines no coefficient."""
    if op == "add":
        out, floor = a + b, min(a.min_exp, b.min_exp)
    elif op == "mul":
        out, floor = a * b, a.min_exp + b.min_exp
    else:
        raise ValueError(f"op must be 'add' or 'mul', not {op!r}")
    if out.order < floor:
        raise EmptyWindow(
            f"operands certify no coefficient of the {op} result "
            f"(window collapses at q^{out.order + 1})"
        )
    return out


def series_inverse(a: TruncSeries, order: int) -> TruncSeries:
    """Multiplicative inverse of a, exact through q**order."""
    return a.inverse(order)


def _one_minus_x_pow(e: int, top: int) -> list[int]:
    """Coefficients of (1 - x)**e through x**top, for any integer e."""
    if e >= 0:
        return [(-1) ** k * comb(e, k) for k in range(top + 1)]
    return [comb(-e + k - 1, k) for k in range(top + 1)]


def binom_pow(e: int, sign: str, order: int) -> TruncSeries:
    """(1 + q)**e when sign is 'plus', (1 - q)**e when sign is 'minus'.

    Exact on [0, order] for any integer e.
    """
    if sign not in ("plus", "minus"):
        raise ValueError(f"sign must be 'plus' or 'minus', not {sign!r}")
    if order < 0:
        raise ValueError("order must be non-negative")
    cs = _one_minus_x_pow(e, order)
    if sign == "plus":
        cs = [(-c if k % 2 else c) for k, c in enumerate(cs)]
    return TruncSeries._raw(0, cs, order)


def q_negate(a: TruncSeries) -> TruncSeries:
    """Substitute q -> -q."""
    return a.negate_q()


def involution_check(p: LaurentPoly) -> bool:
    """True when p is invariant under the variable <-> reciprocal involution."""
    return p.is_symmetric()


def _univariate_product(factors3, order_q: int) -> list[int]:
    """Dense coefficients of prod_n prod_(0,e,c) (1 - c*q^n)^e over [0, order_q]."""
    acc = [0] * (order_q + 1)
    acc[0] = 1
    grouped: dict[int, int] = {}
    for _a, e, c in factors3:
        grouped[c] = grouped.get(c, 0) + e
    for n in range(1, order_q + 1):
        top = order_q // n
        offsets = list(range(n, order_q + 1, n))
        for c, e_total in grouped.items():
            if not e_total:
                continue
            base = _one_minus_x_pow(e_total, top)
            coeffs = [base[k] * (c ** k) for k in range(1, top + 1)]
            kernels.mul_sparse_unit_inplace(acc, offsets, coeffs)
    return acc


def _expand_product(factors3, order_q: int) -> BiSeries:
    """Expand prod_{n=1..order_q} prod_{(a,e,c)} (1 - c z^a q^n)^e through q**order_q.

    c must be +1 or -1.  The q^h coefficient has z-support within
    [-A*h, A*h] where A = max|a|.
    """
    if order_q < 0:
        raise ValueError("order_q must be non-negative")
    factors3 = [(int(a), int(e), int(c)) for a, e, c in factors3]
    for _a, _e, c in factors3:
        if c not in (1, -1):
            raise ValueError("factor coefficient must be +1 or -1")
    amax = max((abs(a) for a, _e, _c in factors3), default=0)
    if amax == 0:
        acc = _univariate_product(factors3, order_q)
        return BiSeries(LaurentPoly({0: v}) for v in acc)

    width = 2 * amax * order_q + 1
    center = amax * order_q
    rows = [[0] * width for _ in range(order_q + 1)]
    rows[0][center] = 1
    for n in range(1, order_q + 1):
        top = order_q // n
        for a, e, c in factors3:
            if not e:
                continue
            base = _one_minus_x_pow(e, top)
            # in place, highest q-row first: row h gains c_k * z^(a k) * row (h - n k)
            for h in range(order_q, 0, -1):
                for k in range(1, h // n + 1):
                    ck = base[k] * (c ** k)
                    if not ck:
                        continue
                    hsrc = h - n * k
                    half = amax * hsrc
                    kernels.axpy_shift(rows[h], rows[hsrc], a * k, ck,
                                       center - half, center + half)
    out = []
    for row in rows:
        out.append(LaurentPoly._raw({i - center: v for i, v in enumerate(row) if v}))
    return BiSeries(out)


def product_family(factors, order_q: int) -> BiSeries:
    """Expand prod_{n>=1} prod_{(a,e)} (1 - z^a q^n)^e exactly through q**order_q.

    factors is an iterable of (a, e) pairs: z-exponent and integer power.
    """
    return _expand_product([(a, e, 1) for a, e in factors], order_q)


def eta_power(e: int, order: int) -> TruncSeries:
    """prod_{n>=1} (1 - q^n)**e, exact on [0, order]."""
    if order < 0:
        raise ValueError("order must be non-negative")
    acc = _univariate_product([(0, e, 1)], order)
    return TruncSeries._raw(0, acc, order)

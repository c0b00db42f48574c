"""Change of basis between stable-pairs series and integer BPS vectors.

A pairs series of genus g is an integer combination of the basis elements

    B_0 = q / (1 + q)^2,    B_r = q^(1-r) (1 + q)^(2r-2)   for r >= 1,

with multiplicities n_0 .. n_g.  B_r has lowest exponent 1 - r with unit
leading coefficient, so the decomposition is a triangular peel starting
at q^(1-g).  The module also validates the three defining identities of
that basis and decomposes Hilbert-scheme generating series over the
unsigned basis q^(g-r) (1 - q)^(2r-2).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InputError, InsufficientWindow, NotBpsForm
from .series import TruncSeries


@dataclass(frozen=True)
class BpsVector:
    """Integer multiplicities n_0 .. n_g, lowest genus first."""

    g: int
    n: tuple[int, ...]

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("g must be non-negative")
        object.__setattr__(self, "n", tuple(int(v) for v in self.n))
        if len(self.n) != self.g + 1:
            raise ValueError(f"genus {self.g} needs {self.g + 1} entries, got {len(self.n)}")

    def __getitem__(self, r: int) -> int:
        return self.n[r]

    def to_json(self) -> dict:
        return {"g": self.g, "n": list(self.n)}

    @classmethod
    def from_json(cls, obj) -> "BpsVector":
        try:
            return cls(int(obj["g"]), tuple(int(v) for v in obj["n"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad BPS vector JSON: {exc}") from None


@dataclass(frozen=True)
class PairsSeries:
    """A truncated pairs series together with its declared genus."""

    series: TruncSeries
    g: int

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("g must be non-negative")

    def to_json(self) -> dict:
        return {"g": self.g, "series": self.series.to_json()}

    @classmethod
    def from_json(cls, obj) -> "PairsSeries":
        try:
            return cls(TruncSeries.from_json(obj["series"]), int(obj["g"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad pairs-series JSON: {exc}") from None


def pairs_basis_element(r: int, order: int) -> TruncSeries:
    """B_r truncated to `order`: q(1+q)^-2 for r = 0, else q^(1-r)(1+q)^(2r-2)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        terms = {k: (-1) ** (k - 1) * k for k in range(1, order + 1)}
        return TruncSeries.from_terms(terms, order=order, min_exp=min(1, order + 1))
    terms = {}
    for k in range(2 * r - 1):
        e = 1 - r + k
        if e > order:
            break
        terms[e] = comb(2 * r - 2, k)
    return TruncSeries.from_terms(terms, order=order, min_exp=1 - r)


def bps_recompose(v: BpsVector, order: int) -> PairsSeries:
    """Sum n_r * B_r, exact on the window [1 - g, order]."""
    g = v.g
    if order < 1 - g:
        raise InsufficientWindow(f"order {order} is below the base exponent {1 - g}")
    lo = 1 - g
    acc = [0] * (order - lo + 1)
    for r in range(g + 1):
        nr = v[r]
        if not nr:
            continue
        if r == 0:
            for k in range(1, order + 1):
                acc[k - lo] += nr * (-1) ** (k - 1) * k
        else:
            for k in range(2 * r - 1):
                e = 1 - r + k
                if e > order:
                    break
                acc[e - lo] += nr * comb(2 * r - 2, k)
    return PairsSeries(TruncSeries(lo, acc, order), g)


def _peel(series: TruncSeries, g: int):
    """Triangular peel of n_g .. n_0 off the dense residual.

    Returns (n, residual, base) where residual is the dense remainder over
    exponents [base, series.order].  Callers decide what to do with a
    nonzero residual.
    """
    if series.order < 1:
        raise InsufficientWindow(
            f"decomposition to genus {g} needs the window to reach q^1 "
            f"(order is {series.order}); {g + 1} leading coefficients are required"
        )
    base = min(series.min_exp, 1 - g)
    order = series.order
    res = [0] * (order - base + 1)
    for e, c in series.items():
        res[e - base] = c
    n = [0] * (g + 1)
    for r in range(g, -1, -1):
        nr = res[(1 - r) - base]
        n[r] = nr
        if not nr:
            continue
        if r == 0:
            for k in range(1, order + 1):
                res[k - base] -= nr * (-1) ** (k - 1) * k
        else:
            for k in range(2 * r - 1):
                e = 1 - r + k
                if e > order:
                    break
                res[e - base] -= nr * comb(2 * r - 2, k)
    return n, res, base


def bps_decompose(Z: PairsSeries) -> BpsVector:
    """Recover the unique BPS vector whose recomposition matches Z exactly.

    Raises NotBpsForm if any residual coefficient survives the peel, and
    InsufficientWindow if the window stops short of q^1.
    """
    n, res, base = _peel(Z.series, Z.g)
    for i, c in enumerate(res):
        if c:
            raise NotBpsForm(
                f"residual coefficient {c} at q^{base + i} is not generated "
                f"by the genus-{Z.g} basis",
                exponent=base + i,
            )
    return BpsVector(Z.g, tuple(n))


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of one defining identity over the checked window."""

    passed: bool
    first_fail_exponent: int | None = None

    def to_json(self) -> dict:
        return {"pass": self.passed, "first_fail_exponent": self.first_fail_exponent}


@dataclass(frozen=True)
class GgtcReport:
    """Results of the three defining identities of the pairs basis.

    n0 is the candidate count peeled off the series; the identities are
    checked against it on every exponent the window certifies.
    """

    passed: bool
    identity_g0: IdentityCheck
    identity_gg: IdentityCheck
    identity_0: IdentityCheck
    checked_order: int
    n0: int

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "identity_g0": self.identity_g0.to_json(),
            "identity_gg": self.identity_gg.to_json(),
            "identity_0": self.identity_0.to_json(),
            "checked_order": self.checked_order,
        }


def validate_ggtc(Z: PairsSeries) -> GgtcReport:
    """Check the three identities that characterise genus-g pairs series.

    With N the candidate degree-zero count (obtained by the triangular
    peel, without demanding the peel close), the identities are:

    * identity_0:  P_n = 0 for n <= -g;
    * identity_gg: P_n - P_(-n) = (-1)^(n-1) n N for 0 < n < g;
    * identity_g0: P_n = (-1)^(n-1) n N for g <= n <= order.

    The report never raises on failure; a window not reaching q^1 raises
    InsufficientWindow.
    """
    s, g = Z.series, Z.g
    n, _res, _base = _peel(s, g)
    N = n[0]

    fail_0 = None
    for e, c in s.items():
        if e > -g:
            break
        if c:
            fail_0 = e
            break

    fail_gg = None
    for m in range(1, min(g - 1, s.order) + 1):
        if s.coeff(m) - s.coeff(-m) != (-1) ** (m - 1) * m * N:
            fail_gg = m
            break

    fail_g0 = None
    for m in range(g, s.order + 1):
        if s.coeff(m) != (-1) ** (m - 1) * m * N:
            fail_g0 = m
            break

    checks = {
        "identity_0": IdentityCheck(fail_0 is None, fail_0),
        "identity_gg": IdentityCheck(fail_gg is None, fail_gg),
        "identity_g0": IdentityCheck(fail_g0 is None, fail_g0),
    }
    return GgtcReport(
        passed=all(c.passed for c in checks.values()),
        identity_g0=checks["identity_g0"],
        identity_gg=checks["identity_gg"],
        identity_0=checks["identity_0"],
        checked_order=s.order,
        n0=N,
    )


def hilbert_basis_element(r: int, g: int, order: int) -> TruncSeries:
    """q^(g-r) (1-q)^(2r-2) truncated to `order`."""
    if r == 0:
        terms = {g + k: k + 1 for k in range(order - g + 1)}
    else:
        terms = {}
        for k in range(2 * r - 1):
            e = g - r + k
            if e > order:
                break
            terms[e] = (-1) ** k * comb(2 * r - 2, k)
    return TruncSeries.from_terms(terms, order=order, min_exp=g - r)


def hilbert_decompose(H: TruncSeries, g: int) -> BpsVector:
    """Decompose a Hilbert-scheme generating series over q^(g-r)(1-q)^(2r-2).

    The element of index r has lowest exponent g - r with unit leading
    coefficient, so the peel starts at q^0 with r = g.  The window must
    reach q^(g+1); any surviving residual raises NotBpsForm.
    """
    if g < 0:
        raise ValueError("g must be non-negative")
    if H.order < g + 1:
        raise InsufficientWindow(
            f"genus-{g} Hilbert decomposition needs the window to reach q^{g + 1} "
            f"(order is {H.order})"
        )
    base = min(H.min_exp, 0)
    order = H.order
    res = [0] * (order - base + 1)
    for e, c in H.items():
        res[e - base] = c
    n = [0] * (g + 1)
    for r in range(g, -1, -1):
        nr = res[(g - r) - base]
        n[r] = nr
        if not nr:
            continue
        if r == 0:
            for k in range(order - g + 1):
                res[(g + k) - base] -= nr * (k + 1)
        else:
            for k in range(2 * r - 1):
                e = g - r + k
                if e > order:
                    break
                res[e - base] -= nr * (-1) ** k * comb(2 * r - 2, k)
    for i, c in enumerate(res):
        if c:
            raise NotBpsForm(
                f"residual coefficient {c} at q^{base + i} is not generated "
                f"by the genus-{g} Hilbert basis",
                exponent=base + i,
            )
    return BpsVector(g, tuple(n))

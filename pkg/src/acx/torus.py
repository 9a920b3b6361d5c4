"""Torus-family models: exact trigonometric polynomials, plurigenera,
irregularity, Riemann-Roch curve profiles, products, and Kodaira dimension.

Coefficient bookkeeping is exact throughout: trigonometric polynomials carry
Gaussian-rational-times-pi-power coefficients, Fourier-mode solvability is
decided in closed form, and growth classification uses exact finite
differences -- never floating point.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import InputError, RefusalError
from .scalars import PiParam, Scalar, SymScalar, S_ZERO

Freq = Tuple[int, ...]

DEFAULT_PROFILE_LENGTH = 12
DEFAULT_MODE_WINDOW = 32


def mode_window() -> int:
    """Enumeration window for the Fourier-mode cross-check oracles.

    Overridable through the ACX_MODE_WINDOW environment variable; the main
    solvers never enumerate, so the window only affects cross-checks.
    """
    raw = os.environ.get("ACX_MODE_WINDOW")
    if raw is None:
        return DEFAULT_MODE_WINDOW
    try:
        value = int(raw)
    except ValueError as exc:
        raise InputError(f"ACX_MODE_WINDOW must be an integer, got {raw!r}") from exc
    if value < 1:
        raise InputError("ACX_MODE_WINDOW must be a positive integer")
    return value


# ---------------------------------------------------------------------------
# Trigonometric polynomials
# ---------------------------------------------------------------------------


class TrigPoly:
    """A finite Fourier sum sum_nu c_nu exp(2*pi*i nu.x) on a k-torus.

    Coefficients are SymScalar values whose symbol stands for pi, so the
    coordinate derivatives (multiplication by 2*pi*i*nu_j) stay exact.
    """

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Dict[Freq, Union[SymScalar, Scalar, int]]):
        k = int(k)
        if k < 1:
            raise InputError("torus dimension must be at least 1")
        clean: Dict[Freq, SymScalar] = {}
        for freq, coeff in terms.items():
            freq = tuple(int(n) for n in freq)
            if len(freq) != k:
                raise InputError(
                    f"frequency {freq} does not match torus dimension {k}"
                )
            value = SymScalar.coerce(coeff)
            if not value.is_zero():
                clean[freq] = value
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TrigPoly is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(k: int) -> "TrigPoly":
        return TrigPoly(k, {})

    @staticmethod
    def constant(k: int, value) -> "TrigPoly":
        return TrigPoly(k, {(0,) * k: SymScalar.coerce(value)})

    @staticmethod
    def exponential(k: int, freq: Sequence[int], coeff=1) -> "TrigPoly":
        """coeff * exp(2*pi*i freq.x)."""
        return TrigPoly(k, {tuple(freq): SymScalar.coerce(coeff)})

    @staticmethod
    def cos2pi(k: int, freq: Sequence[int]) -> "TrigPoly":
        """cos(2*pi freq.x) = (e_+ + e_-)/2."""
        nu = tuple(int(n) for n in freq)
        neg = tuple(-n for n in nu)
        half = SymScalar.const(Scalar(Fraction(1, 2)))
        if nu == neg:
            return TrigPoly(k, {nu: SymScalar.const(1)})
        return TrigPoly(k, {nu: half, neg: half})

    @staticmethod
    def sin2pi(k: int, freq: Sequence[int]) -> "TrigPoly":
        """sin(2*pi freq.x) = (e_+ - e_-)/(2i)."""
        nu = tuple(int(n) for n in freq)
        neg = tuple(-n for n in nu)
        if nu == neg:
            return TrigPoly.zero(k)
        c = SymScalar.const(Scalar(0, Fraction(-1, 2)))  # 1/(2i) = -i/2
        return TrigPoly(k, {nu: c, neg: -c})

    # -- ring structure ------------------------------------------------------

    def _check_same_torus(self, other: "TrigPoly") -> None:
        if self.k != other.k:
            raise InputError("trigonometric polynomials live on different tori")

    def __add__(self, other: "TrigPoly") -> "TrigPoly":
        self._check_same_torus(other)
        terms = dict(self.terms)
        for freq, coeff in other.terms.items():
            terms[freq] = terms.get(freq, SymScalar.const(0)) + coeff
        return TrigPoly(self.k, terms)

    def __neg__(self) -> "TrigPoly":
        return TrigPoly(self.k, {f: -c for f, c in self.terms.items()})

    def __sub__(self, other: "TrigPoly") -> "TrigPoly":
        return self + (-other)

    def scale(self, value) -> "TrigPoly":
        value = SymScalar.coerce(value)
        return TrigPoly(self.k, {f: c * value for f, c in self.terms.items()})

    def __mul__(self, other: "TrigPoly") -> "TrigPoly":
        self._check_same_torus(other)
        terms: Dict[Freq, SymScalar] = {}
        for fa, ca in self.terms.items():
            for fb, cb in other.terms.items():
                freq = tuple(a + b for a, b in zip(fa, fb))
                prod = ca * cb
                terms[freq] = terms.get(freq, SymScalar.const(0)) + prod
        return TrigPoly(self.k, terms)

    def conjugate(self) -> "TrigPoly":
        return TrigPoly(
            self.k,
            {
                tuple(-n for n in freq): coeff.conjugate()
                for freq, coeff in self.terms.items()
            },
        )

    # -- calculus ------------------------------------------------------------

    def partial(self, j: int) -> "TrigPoly":
        """d/dx_j: multiplies each coefficient by 2*pi*i*nu_j, exactly."""
        if not 0 <= j < self.k:
            raise InputError(f"coordinate index {j} out of range for k={self.k}")
        terms: Dict[Freq, SymScalar] = {}
        for freq, coeff in self.terms.items():
            factor = SymScalar.symbol(coeff=Scalar(0, 2 * freq[j]))
            terms[freq] = coeff * factor
        return TrigPoly(self.k, terms)

    def wirtinger(self, j1: int = 0, j2: int = 1) -> "TrigPoly":
        """d/dw for w = x_{j1} + i x_{j2}: (1/2)(d/dx_{j1} - i d/dx_{j2})."""
        half = SymScalar.const(Scalar(Fraction(1, 2)))
        minus_half_i = SymScalar.const(Scalar(0, Fraction(-1, 2)))
        return self.partial(j1).scale(half) + self.partial(j2).scale(minus_half_i)

    def wirtinger_bar(self, j1: int = 0, j2: int = 1) -> "TrigPoly":
        """d/dwbar for w = x_{j1} + i x_{j2}: (1/2)(d/dx_{j1} + i d/dx_{j2})."""
        half = SymScalar.const(Scalar(Fraction(1, 2)))
        half_i = SymScalar.const(Scalar(0, Fraction(1, 2)))
        return self.partial(j1).scale(half) + self.partial(j2).scale(half_i)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_real(self) -> bool:
        """True when c_{-nu} = conjugate(c_nu) for every frequency."""
        for freq, coeff in self.terms.items():
            neg = tuple(-n for n in freq)
            mirrored = self.terms.get(neg, SymScalar.const(0))
            if mirrored != coeff.conjugate():
                return False
        return True

    def is_constant(self) -> bool:
        return all(all(n == 0 for n in freq) for freq in self.terms)

    def coefficient(self, freq: Sequence[int]) -> SymScalar:
        return self.terms.get(tuple(int(n) for n in freq), SymScalar.const(0))

    def depends_only_on(self, coords: Iterable[int]) -> bool:
        allowed = set(coords)
        return all(
            all(n == 0 for j, n in enumerate(freq) if j not in allowed)
            for freq in self.terms
        )

    def __eq__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def __repr__(self):
        return f"TrigPoly(k={self.k}, {len(self.terms)} terms)"

    def to_str(self, symbol: str = "pi") -> str:
        if not self.terms:
            return "0"
        parts = []
        for freq in sorted(self.terms):
            coeff = self.terms[freq].to_str(symbol)
            parts.append(f"({coeff})*e{list(freq)}")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# Kodaira-Thurston family: closed-form Fourier-mode solvability
# ---------------------------------------------------------------------------
#
# Pluricanonical and irregularity data reduce, after the fiber-constancy
# reduction (an analytic fact on the compact fiber, applied as a rule, not
# re-proved), to mode equations of the shape
#
#     coeff * a + pi*(i*k - l) = 0          over modes (k, l) in Z^2
#
# for a rational coefficient `coeff`.  The solvable modes are closed-form.


def kt_solvable_modes(a: PiParam, coeff: Fraction) -> List[Tuple[int, int]]:
    """All (k, l) in Z^2 with coeff*a + pi*(i*k - l) = 0, in closed form.

    The real part forces l = coeff*(a/pi) and the imaginary part forces
    k = 0; on the generic branch a/pi is irrational so only coeff = 0
    contributes (the constants).
    """
    coeff = Fraction(coeff)
    if coeff == 0:
        return [(0, 0)]
    if a.kind == "rational_pi":
        l = coeff * a.q
        if l.denominator == 1:
            return [(0, int(l))]
        return []
    return []


def _mode_multiplier_vanishes(a: PiParam, coeff: Fraction, k: int, l: int) -> bool:
    """Exact zero test for coeff*a + pi*(i*k - l) at one mode.

    On the rational branch the value is pi*((coeff*q - l) + i*k); on the
    generic branch a and pi are rationally independent, so the value vanishes
    only when both rational coordinates do.
    """
    coeff = Fraction(coeff)
    if a.kind == "rational_pi":
        return k == 0 and coeff * a.q == l
    return coeff == 0 and k == 0 and l == 0


def kt_mode_oracle(
    a: PiParam, coeff: Fraction, window: Optional[int] = None
) -> List[Tuple[int, int]]:
    """Cross-check oracle: enumerate the window and test each mode exactly."""
    if window is None:
        window = mode_window()
    hits = []
    for k in range(-window, window + 1):
        for l in range(-window, window + 1):
            if _mode_multiplier_vanishes(a, coeff, k, l):
                hits.append((k, l))
    return hits


def kt_plurigenus(a: PiParam, m: int) -> int:
    """Dimension of the invariant-fiber pluricanonical kernel at level m.

    The section equation reduces to the mode condition with coefficient m/4;
    the count is 1 exactly when a = q*pi with m*q/4 an integer, else 0.
    """
    if not isinstance(a, PiParam):
        raise InputError("parameter must be a PiParam")
    m = int(m)
    if m < 1:
        raise InputError("plurigenus level m must be at least 1")
    return len(kt_solvable_modes(a, Fraction(m, 4)))


def kt_first_nonzero(a: PiParam) -> Optional[int]:
    """Smallest m with a nonzero plurigenus, in closed form (None if all zero).

    For a = q*pi this is the smallest positive m with m*q/4 integral, i.e.
    m*num divisible by 4*den for q = num/den in lowest terms.
    """
    if a.kind != "rational_pi":
        return None
    num = abs(a.q.numerator)
    den = 4 * a.q.denominator
    return den // _gcd(num, den)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def kt_irregularity(a: PiParam) -> int:
    """Dimension of the space of invariant-reduced dbar-closed (1,0)-forms.

    A closed form g1*phi1 + g2*phi2 yields, after the fiber-constancy
    reduction: a mode equation with coefficient -1/4 for g2, the closed-mode
    equation (coefficient 0) for g1, and a coupling that multiplies each
    surviving g2 mode by a/4.  The elimination is executed exactly.
    """
    if not isinstance(a, PiParam):
        raise InputError("parameter must be a PiParam")
    g2_modes = kt_solvable_modes(a, Fraction(-1, 4))
    g1_modes = kt_solvable_modes(a, Fraction(0))
    quarter_a = a.a_value() / SymScalar.const(4)
    surviving_g2 = [mode for mode in g2_modes if quarter_a.is_zero()]
    return len(g1_modes) + len(surviving_g2)


# ---------------------------------------------------------------------------
# Four-torus family with trigonometric coefficients
# ---------------------------------------------------------------------------


def t4_standard_pair() -> Tuple[TrigPoly, TrigPoly]:
    """The reference coefficient pair alpha = cos 2pi(x1+x2), beta = sin 2pi(x1+x2)."""
    return TrigPoly.cos2pi(4, (1, 1, 0, 0)), TrigPoly.sin2pi(4, (1, 1, 0, 0))


def t4_family_pair(t1, t2) -> Tuple[TrigPoly, TrigPoly]:
    """The deformation-family member (t1*alpha, t2*beta); (0,0) is integrable."""
    alpha, beta = t4_standard_pair()
    return (
        alpha.scale(Scalar(Fraction(t1))),
        beta.scale(Scalar(Fraction(t2))),
    )


def _check_t4_pair(alpha: TrigPoly, beta: TrigPoly) -> None:
    if not isinstance(alpha, TrigPoly) or not isinstance(beta, TrigPoly):
        raise InputError("coefficients must be trigonometric polynomials")
    if alpha.k != beta.k:
        raise InputError("coefficient polynomials live on different tori")
    if alpha.k not in (2, 4):
        raise InputError("coefficients must live on T^2 (x1,x2) or T^4")
    if not alpha.is_real() or not beta.is_real():
        raise InputError("coefficient polynomials must be real")


def t4_obstruction(alpha: TrigPoly, beta: TrigPoly) -> TrigPoly:
    """The section obstruction d^2(beta + i*alpha)/dw dwbar, exactly.

    Nonzero as a trigonometric polynomial exactly when it is nonzero on a
    dense open set of the torus.
    """
    _check_t4_pair(alpha, beta)
    gamma = beta + alpha.scale(Scalar(0, 1))
    return gamma.wirtinger(0, 1).wirtinger_bar(0, 1)


def t4_plurigenus(alpha: TrigPoly, beta: TrigPoly, m: int) -> int:
    """Plurigenus of the four-torus family member, on the two settled branches.

    Nonzero obstruction kills every pluricanonical section; constant
    coefficients give the integrable structure with trivial canonical bundle.
    Anything else is outside the settled derivation and is refused.
    """
    m = int(m)
    if m < 1:
        raise InputError("plurigenus level m must be at least 1")
    _check_t4_pair(alpha, beta)
    if not t4_obstruction(alpha, beta).is_zero():
        return 0
    if alpha.is_constant() and beta.is_constant():
        return 1
    raise RefusalError(
        "the settled derivation does not cover this coefficient pair: "
        "obstruction vanishes but the coefficients are not constant"
    )


def t4_irregularity(alpha: TrigPoly, beta: TrigPoly) -> int:
    """Irregularity h^{1,0} of the four-torus family member, same branches."""
    _check_t4_pair(alpha, beta)
    if not t4_obstruction(alpha, beta).is_zero():
        return 1
    if alpha.is_constant() and beta.is_constant():
        return 2
    raise RefusalError(
        "the settled derivation does not cover this coefficient pair: "
        "obstruction vanishes but the coefficients are not constant"
    )


# ---------------------------------------------------------------------------
# Riemann-Roch on the twisted product of a torus and a curve
# ---------------------------------------------------------------------------


class IntInterval:
    """A closed integer interval [lo, hi] of candidate dimensions."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: int, hi: int):
        lo = int(lo)
        hi = int(hi)
        if lo > hi:
            raise InputError(f"empty interval [{lo}, {hi}]")
        if lo < 0:
            raise InputError("dimension intervals are nonnegative")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("IntInterval is immutable")

    def is_point(self) -> bool:
        return self.lo == self.hi

    def __eq__(self, other):
        if isinstance(other, int):
            return self.lo == other and self.hi == other
        if isinstance(other, IntInterval):
            return self.lo == other.lo and self.hi == other.hi
        return NotImplemented

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"


ProfileValue = Union[int, IntInterval]


def _value_mul(u: ProfileValue, v: ProfileValue) -> ProfileValue:
    """Product of plurigenus values; nonnegativity makes interval product monotone."""
    ulo, uhi = (u.lo, u.hi) if isinstance(u, IntInterval) else (u, u)
    vlo, vhi = (v.lo, v.hi) if isinstance(v, IntInterval) else (v, v)
    lo, hi = ulo * vlo, uhi * vhi
    if lo == hi:
        return lo
    return IntInterval(lo, hi)


def _normalize_value(v: ProfileValue) -> ProfileValue:
    if isinstance(v, IntInterval):
        return v.lo if v.is_point() else v
    v = int(v)
    if v < 0:
        raise InputError("plurigenera are nonnegative")
    return v


def rr_plurigenus(g: int, m: int) -> ProfileValue:
    """Plurigenus of the twisted torus-times-curve model of fiber genus g.

    The degree count gives (2m-1)(g-1) exactly for m >= 2; at m = 1 only the
    two-sided bound [g-1, g] is determined, reported as an interval.
    """
    g = int(g)
    m = int(m)
    if g < 2:
        raise InputError("fiber genus must be at least 2")
    if m < 1:
        raise InputError("plurigenus level m must be at least 1")
    if m == 1:
        return IntInterval(g - 1, g)
    return (2 * m - 1) * (g - 1)


# ---------------------------------------------------------------------------
# Plurigenera profiles and Kodaira dimension
# ---------------------------------------------------------------------------

ALL_ZERO = "all-zero"
BOUNDED = "bounded"
POLYNOMIAL = "polynomial"


def _poly_degree(values: Sequence[int]) -> Optional[int]:
    """Exact finite-difference degree of a value window.

    Returns -1 for the identically-zero window, d when some difference row
    vanishes identically (certifying a degree-d polynomial on the window),
    and None when the differences never stabilize inside the window.
    """
    rows = [[int(v) for v in values]]
    while len(rows[-1]) >= 2:
        prev = rows[-1]
        rows.append([b - a for a, b in zip(prev, prev[1:])])
    last_nonzero = -1
    for idx, row in enumerate(rows):
        if any(v != 0 for v in row):
            last_nonzero = idx
    if last_nonzero == -1:
        return -1
    if last_nonzero >= len(rows) - 1:
        return None
    return last_nonzero


class PlurigeneraProfile:
    """Exact plurigenera P_1..P_M with a growth classification.

    The classification is one of all-zero, bounded, or polynomial of a given
    degree.  Family constructors supply it from closed-form knowledge;
    otherwise it is fitted by exact finite differences on the tail window
    m in [ceil(M/2), M], refusing when the tail is not polynomial.
    """

    __slots__ = ("values", "kind", "degree")

    def __init__(
        self,
        values: Sequence[ProfileValue],
        kind: Optional[str] = None,
        degree: Optional[int] = None,
    ):
        values = tuple(_normalize_value(v) for v in values)
        if len(values) < 4:
            raise InputError("profiles need at least four values to classify")
        if kind is None:
            kind, degree = self._classify(values)
        else:
            self._check_consistent(values, kind, degree)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "degree", degree)

    def __setattr__(self, name, value):
        raise AttributeError("PlurigeneraProfile is immutable")

    # -- classification ------------------------------------------------------

    @staticmethod
    def _tail(values: Sequence[ProfileValue]) -> Sequence[ProfileValue]:
        start = -(-len(values) // 2)  # ceil(M/2), 1-based
        return values[start - 1 :]

    @classmethod
    def _classify(cls, values) -> Tuple[str, Optional[int]]:
        if all(v == 0 for v in values):
            return ALL_ZERO, None
        tail = cls._tail(values)
        if any(isinstance(v, IntInterval) for v in tail):
            raise RefusalError(
                "cannot classify growth through undetermined interval values"
            )
        degree = _poly_degree(tail)
        if degree is None:
            raise RefusalError(
                "stored plurigenera are not polynomial on the tail window; "
                "supply the classification from family knowledge"
            )
        if degree == -1:
            raise RefusalError(
                "tail window is identically zero but earlier values are not; "
                "growth cannot be inferred from the window"
            )
        if degree == 0:
            return BOUNDED, None
        return POLYNOMIAL, degree

    @classmethod
    def _check_consistent(cls, values, kind, degree) -> None:
        if kind not in (ALL_ZERO, BOUNDED, POLYNOMIAL):
            raise InputError(f"unknown profile classification {kind!r}")
        if kind == ALL_ZERO:
            if any(v != 0 for v in values):
                raise InputError("all-zero classification with a nonzero value")
            if degree is not None:
                raise InputError("all-zero classification carries no degree")
        elif kind == BOUNDED:
            if degree is not None:
                raise InputError("bounded classification carries no degree")
        else:
            if not isinstance(degree, int) or degree < 1:
                raise InputError("polynomial classification needs a degree >= 1")
            tail = cls._tail(values)
            if not any(isinstance(v, IntInterval) for v in tail):
                fitted = _poly_degree(tail)
                if fitted is not None and fitted >= 0 and fitted != degree:
                    raise InputError(
                        f"stored tail fits degree {fitted}, "
                        f"inconsistent with declared degree {degree}"
                    )

    # -- access ---------------------------------------------------------------

    @property
    def length(self) -> int:
        return len(self.values)

    def value(self, m: int) -> ProfileValue:
        if not 1 <= m <= len(self.values):
            raise InputError(f"level m={m} outside stored range 1..{len(self.values)}")
        return self.values[m - 1]

    def __eq__(self, other):
        if not isinstance(other, PlurigeneraProfile):
            return NotImplemented
        return (
            self.values == other.values
            and self.kind == other.kind
            and self.degree == other.degree
        )

    def __repr__(self):
        label = self.kind if self.degree is None else f"{self.kind}({self.degree})"
        return f"PlurigeneraProfile({list(self.values)!r}, {label})"


def kunneth(pa: PlurigeneraProfile, pb: PlurigeneraProfile) -> PlurigeneraProfile:
    """Product profile: plurigenera multiply level-by-level.

    The growth classification combines accordingly: an all-zero factor
    absorbs, a bounded factor is neutral, polynomial degrees add.
    """
    if pa.length != pb.length:
        raise InputError("profiles must store the same number of levels")
    values = [_value_mul(u, v) for u, v in zip(pa.values, pb.values)]
    if pa.kind == ALL_ZERO or pb.kind == ALL_ZERO:
        kind, degree = ALL_ZERO, None
        values = [0] * len(values)
    elif pa.kind == BOUNDED:
        kind, degree = pb.kind, pb.degree
    elif pb.kind == BOUNDED:
        kind, degree = pa.kind, pa.degree
    else:
        kind, degree = POLYNOMIAL, pa.degree + pb.degree
    return PlurigeneraProfile(values, kind=kind, degree=degree)


def kodaira_dimension(profile: PlurigeneraProfile) -> Union[float, int]:
    """Growth exponent of the profile: -inf, 0, or the polynomial degree."""
    if profile.kind == ALL_ZERO:
        return float("-inf")
    if profile.kind == BOUNDED:
        return 0
    return profile.degree


# ---------------------------------------------------------------------------
# Preset profiles for the worked families
# ---------------------------------------------------------------------------


def kt_profile(a: PiParam, length: int = DEFAULT_PROFILE_LENGTH) -> PlurigeneraProfile:
    """Plurigenera profile of the solvmanifold family at parameter a.

    Rational multiples of pi give a bounded profile (some level is 1 in
    closed form, possibly beyond the stored window); generic parameters give
    the zero profile.
    """
    values = [kt_plurigenus(a, m) for m in range(1, length + 1)]
    if a.kind == "rational_pi":
        return PlurigeneraProfile(values, kind=BOUNDED)
    return PlurigeneraProfile(values, kind=ALL_ZERO)


def t4_profile(
    alpha: TrigPoly, beta: TrigPoly, length: int = DEFAULT_PROFILE_LENGTH
) -> PlurigeneraProfile:
    """Plurigenera profile of the four-torus family member."""
    values = [t4_plurigenus(alpha, beta, m) for m in range(1, length + 1)]
    if values[0] == 0:
        return PlurigeneraProfile(values, kind=ALL_ZERO)
    return PlurigeneraProfile(values, kind=BOUNDED)


def rr_profile(g: int, length: int = DEFAULT_PROFILE_LENGTH) -> PlurigeneraProfile:
    """Profile of the twisted torus-times-curve model: linear growth."""
    values = [rr_plurigenus(g, m) for m in range(1, length + 1)]
    return PlurigeneraProfile(values, kind=POLYNOMIAL, degree=1)


def curve_profile(g: int, length: int = DEFAULT_PROFILE_LENGTH) -> PlurigeneraProfile:
    """Classical profile of a genus-g curve: P_1 = g, P_m = (2m-1)(g-1)."""
    g = int(g)
    if g < 2:
        raise InputError("curve profiles require genus at least 2")
    values: List[ProfileValue] = [g]
    values += [(2 * m - 1) * (g - 1) for m in range(2, length + 1)]
    return PlurigeneraProfile(values, kind=POLYNOMIAL, degree=1)


def torus_profile(length: int = DEFAULT_PROFILE_LENGTH) -> PlurigeneraProfile:
    """Profile of the standard complex torus: trivial canonical bundle."""
    return PlurigeneraProfile([1] * length, kind=BOUNDED)

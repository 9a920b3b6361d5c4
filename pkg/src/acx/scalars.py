"""Exact scalars: Gaussian rationals and rational functions in one formal symbol.

Scalar is Q(i) with fractions.Fraction components.  SymScalar is the field
Q(i)(x) of rational functions in a single formal symbol x, which stands for
pi in rational-multiple-of-pi contexts and for a generic structure parameter
otherwise; a given model only ever uses one meaning, so zero testing is a
polynomial identity test.
"""

from __future__ import annotations

from fractions import Fraction


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or an integer literal into a Fraction."""
    if not isinstance(text, str):
        raise ValueError(f"expected rational string, got {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational literal {text!r}") from exc


class Scalar:
    """A Gaussian rational re + im*i."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @staticmethod
    def coerce(value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(value)
        raise TypeError(f"cannot coerce {value!r} to Scalar")

    def __add__(self, other):
        other = Scalar.coerce(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other):
        return Scalar.coerce(other) + (-self)

    def __mul__(self, other):
        other = Scalar.coerce(other)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero Scalar")
        return Scalar(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"Scalar({self.re!r}, {self.im!r})"

    def __str__(self):
        return scalar_str(self)


S_ZERO = Scalar(0)
S_ONE = Scalar(1)
S_I = Scalar(0, 1)


def _frac_str(f: Fraction) -> str:
    return str(f)


def scalar_str(s: Scalar) -> str:
    """Canonical compact rendering, e.g. '3/4', '-i', '1+2i', '2-1/3i'."""
    if s.im == 0:
        return _frac_str(s.re)
    if s.re == 0:
        if s.im == 1:
            return "i"
        if s.im == -1:
            return "-i"
        return f"{_frac_str(s.im)}i"
    sign = "+" if s.im > 0 else "-"
    mag = abs(s.im)
    imag = "i" if mag == 1 else f"{_frac_str(mag)}i"
    return f"{_frac_str(s.re)}{sign}{imag}"


# --- polynomials over Scalar, coefficients low degree -> high, no trailing zeros


def _pstrip(coeffs):
    i = len(coeffs)
    while i > 0 and coeffs[i - 1].is_zero():
        i -= 1
    return tuple(coeffs[:i])


def _padd(a, b):
    n = max(len(a), len(b))
    out = []
    for k in range(n):
        x = a[k] if k < len(a) else S_ZERO
        y = b[k] if k < len(b) else S_ZERO
        out.append(x + y)
    return _pstrip(out)


def _pneg(a):
    return tuple(-c for c in a)

def _pmul(a, b):
    if not a or not b:
        return ()
    out = [S_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _pstrip(out)


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [S_ZERO] * max(0, len(a) - len(b) + 1)
    r = list(a)
    binv = b[-1].inverse()
    while len(r) >= len(b) and _pstrip(r):
        r = list(_pstrip(r))
        if len(r) < len(b):
            break
        c = r[-1] * binv
        k = len(r) - len(b)
        q[k] = c
        for j, y in enumerate(b):
            r[k + j] = r[k + j] - c * y
        r = list(_pstrip(r))
    return _pstrip(q), _pstrip(r)


def _pgcd(a, b):
    a, b = _pstrip(a), _pstrip(b)
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    if a:
        lead_inv = a[-1].inverse()
        a = tuple(c * lead_inv for c in a)
    return a


_P_ONE = (S_ONE,)


class SymScalar:
    """An element of Q(i)(x): num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=_P_ONE):
        num = _pstrip(tuple(Scalar.coerce(c) for c in num))
        den = _pstrip(tuple(Scalar.coerce(c) for c in den))
        if not den:
            raise ZeroDivisionError("SymScalar with zero denominator")
        if num:
            g = _pgcd(num, den)
            if len(g) > 1:
                num, _ = _pdivmod(num, g)
                den, _ = _pdivmod(den, g)
        else:
            den = _P_ONE
        lead = den[-1]
        if lead != S_ONE:
            inv = lead.inverse()
            num = tuple(c * inv for c in num)
            den = tuple(c * inv for c in den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("SymScalar is immutable")

    @staticmethod
    def const(value) -> "SymScalar":
        return SymScalar((Scalar.coerce(value),))

    @staticmethod
    def symbol(coeff=1, power: int = 1) -> "SymScalar":
        """coeff * x^power (power may be negative: Laurent via the denominator)."""
        c = Scalar.coerce(coeff)
        if power >= 0:
            return SymScalar((S_ZERO,) * power + (c,))
        return SymScalar((c,), (S_ZERO,) * (-power) + (S_ONE,))

    @staticmethod
    def coerce(value) -> "SymScalar":
        if isinstance(value, SymScalar):
            return value
        if isinstance(value, (int, Fraction, Scalar)):
            return SymScalar.const(value)
        raise TypeError(f"cannot coerce {value!r} to SymScalar")

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and self.den == _P_ONE

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num[0] if self.num else S_ZERO

    def __add__(self, other):
        other = SymScalar.coerce(other)
        if self.is_constant() and other.is_constant():
            return SymScalar.const(self.constant_value() + other.constant_value())
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return SymScalar(num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return SymScalar(_pneg(self.num), self.den)

    def __sub__(self, other):
        return self + (-SymScalar.coerce(other))

    def __rsub__(self, other):
        return SymScalar.coerce(other) + (-self)

    def __mul__(self, other):
        other = SymScalar.coerce(other)
        if self.is_constant() and other.is_constant():
            return SymScalar.const(self.constant_value() * other.constant_value())
        return SymScalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = SymScalar.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero SymScalar")
        if self.is_constant() and other.is_constant():
            return SymScalar.const(self.constant_value() / other.constant_value())
        return SymScalar(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        return SymScalar.coerce(other) / self

    def conjugate(self) -> "SymScalar":
        # The symbol is real (pi, or a real structure parameter).
        return SymScalar(
            tuple(c.conjugate() for c in self.num),
            tuple(c.conjugate() for c in self.den),
        )

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            other = SymScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"SymScalar({self.num!r}, {self.den!r})"

    def __str__(self):
        return self.to_str()

    def to_str(self, symbol: str = "x") -> str:
        num = _poly_str(self.num, symbol)
        if self.den == _P_ONE:
            return num
        return f"({num})/({_poly_str(self.den, symbol)})"


def _poly_str(coeffs, symbol: str) -> str:
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c.is_zero():
            continue
        cs = scalar_str(c)
        if k == 0:
            parts.append(cs)
        else:
            xs = symbol if k == 1 else f"{symbol}^{k}"
            if cs == "1":
                parts.append(xs)
            elif cs == "-1":
                parts.append(f"-{xs}")
            elif ("+" in cs[1:]) or ("-" in cs[1:]):
                parts.append(f"({cs})*{xs}")
            else:
                parts.append(f"{cs}*{xs}")
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


SS_ZERO = SymScalar(())
SS_ONE = SymScalar.const(1)
SS_I = SymScalar.const(S_I)


class PiParam:
    """The structure parameter a: either a rational multiple of pi or generic.

    RationalPi(q) carries a = q*pi with the formal symbol meaning pi;
    Generic carries a itself as the formal symbol.  a = 0 is rejected.
    """

    __slots__ = ("kind", "q")

    def __init__(self, kind: str, q: Fraction | None = None):
        if kind not in ("rational_pi", "generic"):
            raise ValueError(f"unknown PiParam kind {kind!r}")
        if kind == "rational_pi":
            q = Fraction(q)
            if q == 0:
                raise ValueError("a = 0 is not an almost complex structure parameter")
        else:
            q = None
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("PiParam is immutable")

    @staticmethod
    def rational_pi(q) -> "PiParam":
        return PiParam("rational_pi", Fraction(q))

    @staticmethod
    def generic() -> "PiParam":
        return PiParam("generic")

    @staticmethod
    def parse(text: str) -> "PiParam":
        """Parse 'q*pi', 'pi', '-pi', or 'generic'."""
        t = text.strip().lower()
        if t == "generic":
            return PiParam.generic()
        if t.endswith("*pi"):
            return PiParam.rational_pi(parse_rational(t[:-3]))
        if t == "pi":
            return PiParam.rational_pi(1)
        if t == "-pi":
            return PiParam.rational_pi(-1)
        raise ValueError(f"bad parameter literal {text!r}; want 'q*pi' or 'generic'")

    @property
    def symbol_name(self) -> str:
        return "pi" if self.kind == "rational_pi" else "a"

    def a_value(self) -> SymScalar:
        """The parameter as a SymScalar in this parameter's symbol."""
        if self.kind == "rational_pi":
            return SymScalar.symbol(coeff=self.q)
        return SymScalar.symbol()

    def pi_value(self) -> SymScalar:
        """pi as a SymScalar; only available on the rational_pi branch."""
        if self.kind != "rational_pi":
            raise ValueError("pi is not expressible on the generic branch")
        return SymScalar.symbol()

    def __eq__(self, other):
        if not isinstance(other, PiParam):
            return NotImplemented
        return self.kind == other.kind and self.q == other.q

    def __hash__(self):
        return hash((self.kind, self.q))

    def __repr__(self):
        if self.kind == "rational_pi":
            return f"PiParam.rational_pi({self.q!r})"
        return "PiParam.generic()"

    def __str__(self):
        if self.kind == "rational_pi":
            return f"{self.q}*pi"
        return "generic"

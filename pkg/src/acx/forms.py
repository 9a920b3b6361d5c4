"""Exterior algebra over a complex coframe phi^1..phi^n, phibar^1..phibar^n.

A Form is a finite sum of monomials phi_alpha wedge phibar_beta with SymScalar
coefficients, stored against the canonical monomial order: holomorphic indices
ascending, then antiholomorphic indices ascending.  Coefficients of value zero
are never stored.
"""

from __future__ import annotations

from .scalars import SS_ONE, SymScalar


class MultiIndex(tuple):
    """A strictly increasing tuple of indices in 1..n."""

    def __new__(cls, indices=()):
        idx = tuple(indices)
        for k in idx:
            if not isinstance(k, int) or k < 1:
                raise ValueError(f"multi-index entries must be positive ints, got {k!r}")
        if any(idx[t] >= idx[t + 1] for t in range(len(idx) - 1)):
            raise ValueError(f"multi-index must be strictly increasing, got {idx}")
        return super().__new__(cls, idx)

    @property
    def degree(self) -> int:
        return len(self)


EMPTY = MultiIndex()


def merge_indices(a, b):
    """Merge two increasing index tuples; return (merged, sign) or None on overlap.

    The sign is that of the permutation sorting a + b.
    """
    out = []
    sign = 1
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return None
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            # b[j] jumps over the remaining len(a) - i entries of a
            if (len(a) - i) % 2:
                sign = -sign
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return MultiIndex(out), sign


def complement(alpha, n):
    inside = set(alpha)
    return MultiIndex(tuple(k for k in range(1, n + 1) if k not in inside))


class Form:
    """A form of mixed bidegree over an n-dimensional complex coframe."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"bad coframe dimension {n!r}")
        clean = {}
        for key, coeff in (terms or {}).items():
            alpha, beta = key
            alpha = alpha if isinstance(alpha, MultiIndex) else MultiIndex(alpha)
            beta = beta if isinstance(beta, MultiIndex) else MultiIndex(beta)
            if alpha and alpha[-1] > n:
                raise ValueError(f"holomorphic index {alpha[-1]} exceeds n={n}")
            if beta and beta[-1] > n:
                raise ValueError(f"antiholomorphic index {beta[-1]} exceeds n={n}")
            c = SymScalar.coerce(coeff)
            if not c.is_zero():
                clean[(alpha, beta)] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Form is immutable")

    # --- constructors

    @staticmethod
    def zero(n: int) -> "Form":
        return Form(n, {})

    @staticmethod
    def monomial(n: int, alpha=(), beta=(), coeff=1) -> "Form":
        return Form(n, {(MultiIndex(alpha), MultiIndex(beta)): SymScalar.coerce(coeff)})

    @staticmethod
    def one(n: int) -> "Form":
        return Form.monomial(n)

    @staticmethod
    def phi(n: int, i: int) -> "Form":
        return Form.monomial(n, (i,), ())

    @staticmethod
    def phibar(n: int, i: int) -> "Form":
        return Form.monomial(n, (), (i,))

    # --- ring structure

    def _require_same_frame(self, other: "Form"):
        if not isinstance(other, Form):
            raise TypeError(f"expected Form, got {other!r}")
        if self.n != other.n:
            raise ValueError(f"coframe dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        self._require_same_frame(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            acc = terms.get(key)
            terms[key] = c if acc is None else acc + c
        return Form(self.n, terms)

    def __neg__(self):
        return Form(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff) -> "Form":
        c = SymScalar.coerce(coeff)
        return Form(self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, coeff):
        return self.scale(coeff)

    __rmul__ = __mul__

    def wedge(self, other: "Form") -> "Form":
        self._require_same_frame(other)
        terms = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                ma = merge_indices(a1, a2)
                if ma is None:
                    continue
                mb = merge_indices(b1, b2)
                if mb is None:
                    continue
                alpha, sa = ma
                beta, sb = mb
                # move the phi block of the second factor past phibar_b1
                sign = sa * sb * (-1 if (len(b1) * len(a2)) % 2 else 1)
                c = c1 * c2
                if sign < 0:
                    c = -c
                key = (alpha, beta)
                acc = terms.get(key)
                terms[key] = c if acc is None else acc + c
        return Form(self.n, terms)

    # --- structure queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def coefficient(self, alpha=(), beta=()) -> SymScalar:
        from .scalars import SS_ZERO

        return self.terms.get((MultiIndex(alpha), MultiIndex(beta)), SS_ZERO)

    def bidegrees(self):
        return sorted({(len(a), len(b)) for (a, b) in self.terms})

    def is_homogeneous(self) -> bool:
        return len(self.bidegrees()) <= 1

    def bidegree(self):
        degs = self.bidegrees()
        if len(degs) != 1:
            raise ValueError(f"form is not bidegree-homogeneous: {degs}")
        return degs[0]

    def project(self, p: int, q: int) -> "Form":
        return Form(
            self.n,
            {k: c for k, c in self.terms.items() if len(k[0]) == p and len(k[1]) == q},
        )

    def components(self):
        """Split into bidegree-homogeneous pieces, keyed by (p, q)."""
        out = {}
        for (a, b), c in self.terms.items():
            out.setdefault((len(a), len(b)), {})[(a, b)] = c
        return {pq: Form(self.n, t) for pq, t in out.items()}

    def conjugate(self) -> "Form":
        terms = {}
        for (a, b), c in self.terms.items():
            # conj(phi_a phibar_b) = phibar_a phi_b = (-1)^(|a||b|) phi_b phibar_a
            cc = c.conjugate()
            if (len(a) * len(b)) % 2:
                cc = -cc
            terms[(b, a)] = cc
        return Form(self.n, terms)

    def map_coefficients(self, fn) -> "Form":
        return Form(self.n, {k: fn(c) for k, c in self.terms.items()})

    def monomials(self):
        return sorted(self.terms.keys())

    def __repr__(self):
        return f"Form({self.n}, {self.terms!r})"

    def __str__(self):
        return self.to_str()

    def to_str(self, symbol: str = "x") -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in self.monomials():
            c = self.terms[(a, b)]
            factors = [f"phi{i}" for i in a] + [f"phibar{j}" for j in b]
            mono = "^".join(factors) if factors else "1"
            cs = c.to_str(symbol)
            if cs == "1" and factors:
                parts.append(mono)
            elif cs == "-1" and factors:
                parts.append(f"-{mono}")
            else:
                wrap = f"({cs})" if (" " in cs or "+" in cs[1:] or "-" in cs[1:]) else cs
                parts.append(f"{wrap}*{mono}" if factors else wrap)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def wedge(x: Form, y: Form) -> Form:
    return x.wedge(y)


def wedge_all(factors, n=None) -> Form:
    """Wedge a sequence of Forms left to right; empty product is 1."""
    factors = list(factors)
    if not factors:
        if n is None:
            raise ValueError("empty wedge needs an explicit coframe dimension")
        return Form.one(n)
    out = factors[0]
    for f in factors[1:]:
        out = out.wedge(f)
    return out


def project_bidegree(x: Form, p: int, q: int) -> Form:
    return x.project(p, q)


def conjugate(x: Form) -> Form:
    return x.conjugate()


def basis_monomials(n: int, p: int, q: int):
    """All (alpha, beta) with |alpha| = p, |beta| = q, in canonical order."""
    from itertools import combinations

    alphas = [MultiIndex(c) for c in combinations(range(1, n + 1), p)]
    betas = [MultiIndex(c) for c in combinations(range(1, n + 1), q)]
    return [(a, b) for a in alphas for b in betas]

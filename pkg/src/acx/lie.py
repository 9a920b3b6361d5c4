"""Invariant frames: Lie algebras, almost complex structures, complex coframes.

Everything is exact.  A LieAlgebra is given by structure constants on a real
basis e_1..e_N (Jacobi is checked on construction).  An ACStructure is a
matrix J with J^2 = -I.  build_coframe produces the (1,0) coframe
phi^i = eta - i*(eta o J), normalized so the leading real-dual coefficient is
one, together with the dual (1,0) frame X_i and the complexified structure
constants, from which the Chevalley-Eilenberg differential is assembled on
the exterior algebra of the coframe.

Conventions.  d(xi)(x, y) = -xi([x, y]) on invariant 1-forms.  The Nijenhuis
tensor is N(x, y) = [x, y] + J[Jx, y] + J[x, Jy] - [Jx, Jy]; J is integrable
iff N = 0 iff the (0,2) parts of all d(phi^i) vanish iff the (1,0) frame is
closed under the bracket.  All three tests are implemented and cross-checked.
"""

from __future__ import annotations

from itertools import combinations

from .errors import InputError
from .forms import Form, MultiIndex, merge_indices, wedge_all
from .linalg import mat_inverse, mat_vec, rank
from .scalars import SS_ONE, SS_ZERO, S_I, SymScalar


# --- exterior forms over the real dual basis (no bidegree structure)


class AltForm:
    """A sparse alternating form over a real dual basis e^1..e^N."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim, terms=None):
        clean = {}
        for idx, c in (terms or {}).items():
            idx = tuple(idx)
            if any(not (1 <= k <= dim) for k in idx):
                raise ValueError(f"index out of range in {idx}")
            if any(idx[t] >= idx[t + 1] for t in range(len(idx) - 1)):
                raise ValueError(f"indices must be strictly increasing: {idx}")
            c = SymScalar.coerce(c)
            if not c.is_zero():
                clean[idx] = c
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("AltForm is immutable")

    @staticmethod
    def zero(dim):
        return AltForm(dim, {})

    @staticmethod
    def basis(dim, *indices):
        return AltForm(dim, {tuple(indices): SS_ONE})

    def __add__(self, other):
        terms = dict(self.terms)
        for k, c in other.terms.items():
            acc = terms.get(k)
            terms[k] = c if acc is None else acc + c
        return AltForm(self.dim, terms)

    def __neg__(self):
        return AltForm(self.dim, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = SymScalar.coerce(c)
        return AltForm(self.dim, {k: v * c for k, v in self.terms.items()})

    def wedge(self, other):
        terms = {}
        for i1, c1 in self.terms.items():
            for i2, c2 in other.terms.items():
                merged = merge_indices(i1, i2)
                if merged is None:
                    continue
                idx, sign = merged
                c = c1 * c2
                if sign < 0:
                    c = -c
                key = tuple(idx)
                acc = terms.get(key)
                terms[key] = c if acc is None else acc + c
        return AltForm(self.dim, terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, AltForm):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def __repr__(self):
        return f"AltForm({self.dim}, {self.terms!r})"

    def to_str(self, names=None, symbol="x"):
        if not self.terms:
            return "0"
        names = names or [f"e{k}" for k in range(1, self.dim + 1)]
        parts = []
        for idx in sorted(self.terms):
            c = self.terms[idx]
            mono = "^".join(names[k - 1] for k in idx) if idx else "1"
            cs = c.to_str(symbol)
            if cs == "1" and idx:
                parts.append(mono)
            elif cs == "-1" and idx:
                parts.append(f"-{mono}")
            else:
                wrap = f"({cs})" if (" " in cs or "+" in cs[1:] or "-" in cs[1:]) else cs
                parts.append(f"{wrap}*{mono}" if idx else wrap)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


# --- Lie algebras


class LieAlgebra:
    """A real Lie algebra by structure constants; Jacobi checked on construction.

    brackets maps (i, j) with i < j to {k: coeff} meaning
    [e_i, e_j] = sum_k coeff * e_k.  Indices are 1-based.
    """

    def __init__(self, dim, brackets=None, *, basis_names=None, name=""):
        if not isinstance(dim, int) or dim < 1:
            raise InputError(f"bad dimension {dim!r}")
        self.dim = dim
        self.name = name
        self.basis_names = list(basis_names) if basis_names else [f"e{k}" for k in range(1, dim + 1)]
        if len(self.basis_names) != dim:
            raise InputError("basis_names length must match dim")
        clean = {}
        for (i, j), out in (brackets or {}).items():
            if not (1 <= i < j <= dim):
                raise InputError(f"bracket key ({i},{j}) must satisfy 1 <= i < j <= dim")
            vec = {k: SymScalar.coerce(c) for k, c in out.items() if not SymScalar.coerce(c).is_zero()}
            for k in vec:
                if not (1 <= k <= dim):
                    raise InputError(f"bracket output index {k} out of range")
            if vec:
                clean[(i, j)] = vec
        self.brackets = clean
        self._check_jacobi()

    def bracket_basis(self, i, j):
        """[e_i, e_j] as a 0-based coefficient list."""
        out = [SS_ZERO] * self.dim
        if i == j:
            return out
        sign = 1
        if i > j:
            i, j = j, i
            sign = -1
        for k, c in self.brackets.get((i, j), {}).items():
            out[k - 1] = c if sign > 0 else -c
        return out

    def bracket_vectors(self, u, v):
        """[u, v] for coefficient lists u, v (0-based, SymScalar entries)."""
        out = [SS_ZERO] * self.dim
        for (i, j), vec in self.brackets.items():
            f = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1]
            if f.is_zero():
                continue
            for k, c in vec.items():
                out[k - 1] = out[k - 1] + f * c
        return out

    def _check_jacobi(self):
        basis = []
        for i in range(self.dim):
            v = [SS_ZERO] * self.dim
            v[i] = SS_ONE
            basis.append(v)
        for i, j, k in combinations(range(self.dim), 3):
            acc = [SS_ZERO] * self.dim
            for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                inner = self.bracket_vectors(basis[a], basis[b])
                outer = self.bracket_vectors(inner, basis[c])
                acc = [x + y for x, y in zip(acc, outer)]
            if any(not x.is_zero() for x in acc):
                raise InputError(
                    f"Jacobi identity fails on basis triple ({i + 1},{j + 1},{k + 1})"
                )

    def is_unimodular(self):
        """tr(ad e_i) = 0 for every i."""
        for i in range(1, self.dim + 1):
            tr = SS_ZERO
            for j in range(1, self.dim + 1):
                tr = tr + self.bracket_basis(i, j)[j - 1]
            if not tr.is_zero():
                return False
        return True

    def d_generator(self, k):
        """Chevalley-Eilenberg d of e^k: d(xi)(x,y) = -xi([x,y])."""
        terms = {}
        for (i, j), vec in self.brackets.items():
            c = vec.get(k)
            if c is not None:
                terms[(i, j)] = -c
        return AltForm(self.dim, terms)

    def ce_d(self, form: AltForm) -> AltForm:
        """Extend d to the real exterior algebra by the graded Leibniz rule."""
        out = AltForm.zero(self.dim)
        gens = {a: self.d_generator(a) for a in range(1, self.dim + 1)}
        for idx, c in form.terms.items():
            for r, a in enumerate(idx):
                piece = AltForm(self.dim, {tuple(idx[:r]): c if r % 2 == 0 else -c})
                piece = piece.wedge(gens[a])
                piece = piece.wedge(AltForm.basis(self.dim, *idx[r + 1:]))
                out = out + piece
        return out


def chevalley_eilenberg_d(alg: LieAlgebra, xi) -> AltForm:
    """d of an invariant form.  xi may be a basis index, a covector
    coefficient list (1-form), or an AltForm."""
    if isinstance(xi, int):
        return alg.d_generator(xi)
    if isinstance(xi, AltForm):
        return alg.ce_d(xi)
    out = AltForm.zero(alg.dim)
    for a, c in enumerate(xi, start=1):
        c = SymScalar.coerce(c)
        if not c.is_zero():
            out = out + alg.d_generator(a).scale(c)
    return out


# --- almost complex structures


class ACStructure:
    """A matrix J on the algebra with J^2 = -I; J[a][b] = e_a-component of J(e_b)."""

    def __init__(self, matrix):
        self.matrix = [[SymScalar.coerce(c) for c in row] for row in matrix]
        n = len(self.matrix)
        if n == 0 or any(len(row) != n for row in self.matrix):
            raise InputError("J must be square")
        if n % 2:
            raise InputError("J needs an even-dimensional algebra")
        for a in range(n):
            for b in range(n):
                want = SS_ONE if a == b else SS_ZERO
                got = sum((self.matrix[a][k] * self.matrix[k][b] for k in range(n)), SS_ZERO)
                if not (got + want).is_zero():
                    raise InputError(f"J^2 != -I at entry ({a + 1},{b + 1})")

    @property
    def dim(self):
        return len(self.matrix)

    def apply(self, v):
        return mat_vec(self.matrix, v)


def nijenhuis_entry(alg: LieAlgebra, J: ACStructure, i: int, j: int):
    """N(e_i, e_j) = [e_i,e_j] + J[Je_i,e_j] + J[e_i,Je_j] - [Je_i,Je_j]."""
    ei = [SS_ONE if k == i - 1 else SS_ZERO for k in range(alg.dim)]
    ej = [SS_ONE if k == j - 1 else SS_ZERO for k in range(alg.dim)]
    Jei = J.apply(ei)
    Jej = J.apply(ej)
    t1 = alg.bracket_vectors(ei, ej)
    t2 = J.apply(alg.bracket_vectors(Jei, ej))
    t3 = J.apply(alg.bracket_vectors(ei, Jej))
    t4 = alg.bracket_vectors(Jei, Jej)
    return [a + b + c - d for a, b, c, d in zip(t1, t2, t3, t4)]


class NijenhuisTensor:
    def __init__(self, alg, J):
        self.alg = alg
        self.values = {}
        for i in range(1, alg.dim + 1):
            for j in range(i + 1, alg.dim + 1):
                v = nijenhuis_entry(alg, J, i, j)
                if any(not c.is_zero() for c in v):
                    self.values[(i, j)] = v

    def entry(self, i, j):
        if i == j:
            return [SS_ZERO] * self.alg.dim
        if i < j:
            return self.values.get((i, j), [SS_ZERO] * self.alg.dim)
        return [-c for c in self.entry(j, i)]

    def is_zero(self):
        return not self.values


def nijenhuis(alg: LieAlgebra, J: ACStructure) -> NijenhuisTensor:
    if J.dim != alg.dim:
        raise InputError("J dimension does not match the algebra")
    return NijenhuisTensor(alg, J)


# --- the complex coframe


class ComplexCoframe:
    """The (1,0) coframe, its dual frame, and the differential on Forms.

    Rows of C are the coordinates of phi^1..phi^n, phibar^1..phibar^n over
    the real dual basis; columns of C^{-1} are the dual frame
    X_1..X_n, Xbar_1..Xbar_n over the real basis.
    """

    def __init__(self, alg: LieAlgebra, J: ACStructure, phi_rows):
        self.alg = alg
        self.J = J
        self.n = alg.dim // 2
        rows = [list(r) for r in phi_rows]
        self.C = rows + [[c.conjugate() for c in r] for r in rows]
        self.Cinv = mat_inverse(self.C)
        self._complex_constants = None
        self._d_gen_cache = None
        self._d_mono_cache = {}

    def phi_row(self, i):
        """phi^i over the real dual basis (1 <= i <= n)."""
        return list(self.C[i - 1])

    def x_vector(self, B):
        """Column B (0-based, 0..2n-1) of C^{-1}: X_{B+1} or Xbar_{B+1-n}."""
        return [self.Cinv[a][B] for a in range(2 * self.n)]

    def complex_constants(self):
        """[X_A, X_B] = sum_C K[(A,B)][C] X_C over the complexified frame."""
        if self._complex_constants is None:
            N = 2 * self.n
            K = {}
            for A in range(N):
                for B in range(A + 1, N):
                    v = self.alg.bracket_vectors(self.x_vector(A), self.x_vector(B))
                    coords = mat_vec(self.C, v)
                    K[(A, B)] = coords
            self._complex_constants = K
        return self._complex_constants

    def _gen_form(self, A):
        if A < self.n:
            return Form.phi(self.n, A + 1)
        return Form.phibar(self.n, A - self.n + 1)

    def d_generator(self, A) -> Form:
        """d(Phi^A) = -sum_{B<C} K^A_{BC} Phi^B wedge Phi^C."""
        if self._d_gen_cache is None:
            self._d_gen_cache = [None] * (2 * self.n)
        if self._d_gen_cache[A] is None:
            K = self.complex_constants()
            out = Form.zero(self.n)
            for (B, Cc), coords in K.items():
                c = coords[A]
                if c.is_zero():
                    continue
                out = out + self._gen_form(B).wedge(self._gen_form(Cc)).scale(-c)
            self._d_gen_cache[A] = out
        return self._d_gen_cache[A]

    def d_phi(self, i) -> Form:
        return self.d_generator(i - 1)

    def d_phibar(self, i) -> Form:
        return self.d_generator(self.n + i - 1)

    def _d_monomial(self, alpha, beta) -> Form:
        key = (alpha, beta)
        cached = self._d_mono_cache.get(key)
        if cached is not None:
            return cached
        gens = [a - 1 for a in alpha] + [self.n + b - 1 for b in beta]
        out = Form.zero(self.n)
        for r, A in enumerate(gens):
            prefix = wedge_all(
                [self._gen_form(g) for g in gens[:r]], self.n
            )
            suffix = wedge_all(
                [self._gen_form(g) for g in gens[r + 1:]], self.n
            )
            piece = prefix.wedge(self.d_generator(A)).wedge(suffix)
            out = out + (piece if r % 2 == 0 else -piece)
        self._d_mono_cache[key] = out
        return out

    def d(self, x: Form, lam: Form | None = None) -> Form:
        """d on constant-coefficient forms; with lam, d(chi x) = chi(lam^x + dx)."""
        out = Form.zero(self.n)
        for (alpha, beta), c in x.terms.items():
            out = out + self._d_monomial(alpha, beta).scale(c)
        if lam is not None:
            out = out + lam.wedge(x)
        return out

    def dbar(self, x: Form, lam: Form | None = None) -> Form:
        out = Form.zero(self.n)
        for (p, q), comp in x.components().items():
            out = out + self.d(comp, lam).project(p, q + 1)
        return out

    def del_op(self, x: Form, lam: Form | None = None) -> Form:
        out = Form.zero(self.n)
        for (p, q), comp in x.components().items():
            out = out + self.d(comp, lam).project(p + 1, q)
        return out

    def real_covector_form(self, a) -> Form:
        """e^a expressed over the complex coframe."""
        out = Form.zero(self.n)
        for A in range(2 * self.n):
            c = self.Cinv[a - 1][A]
            if not c.is_zero():
                out = out + self._gen_form(A).scale(c)
        return out

    def to_complex(self, x: AltForm) -> Form:
        """Rewrite a real-basis form over the complex coframe."""
        out = Form.zero(self.n)
        for idx, c in x.terms.items():
            piece = wedge_all([self.real_covector_form(a) for a in idx], self.n)
            out = out + piece.scale(c)
        return out


def build_coframe(alg: LieAlgebra, J: ACStructure) -> ComplexCoframe:
    """Select the (1,0) coframe eta - i*(eta o J) over eta = e^1, e^2, ...

    Greedy: keep the first n candidates that are independent; scale each so
    its leading (lowest-index) nonzero real-dual coefficient is one.
    """
    if J.dim != alg.dim:
        raise InputError("J dimension does not match the algebra")
    N = alg.dim
    n = N // 2
    chosen = []
    for a in range(1, N + 1):
        row = []
        for b in range(N):
            c = SS_ONE if b == a - 1 else SS_ZERO
            row.append(c - SymScalar.const(S_I) * J.matrix[a - 1][b])
        if rank(chosen + [row]) > len(chosen):
            lead = next(c for c in row if not c.is_zero())
            inv = SS_ONE / lead
            chosen.append([c * inv for c in row])
        if len(chosen) == n:
            break
    if len(chosen) != n:
        raise InputError("could not build a full (1,0) coframe")
    return ComplexCoframe(alg, J, chosen)


class StructureEquations:
    """d(phi^i) with its bidegree split, plus the integrability verdict."""

    def __init__(self, coframe: ComplexCoframe):
        self.coframe = coframe
        self.d_phi = [coframe.d_phi(i) for i in range(1, coframe.n + 1)]

    def component(self, i, p, q) -> Form:
        return self.d_phi[i - 1].project(p, q)

    def dbar_phi(self, i) -> Form:
        return self.component(i, 1, 1)

    def integrable(self) -> bool:
        return all(self.component(i, 0, 2).is_zero() for i in range(1, self.coframe.n + 1))


def structure_equations(coframe: ComplexCoframe) -> StructureEquations:
    return StructureEquations(coframe)


def is_integrable(alg: LieAlgebra, J: ACStructure) -> bool:
    """Three equivalent tests, cross-checked: N = 0; no (0,2) parts; the
    (1,0) frame closes under the bracket."""
    by_nijenhuis = nijenhuis(alg, J).is_zero()
    coframe = build_coframe(alg, J)
    eqs = StructureEquations(coframe)
    by_forms = eqs.integrable()
    K = coframe.complex_constants()
    n = coframe.n
    by_frame = all(
        all(K[(A, B)][Cc].is_zero() for Cc in range(n, 2 * n))
        for A in range(n)
        for B in range(A + 1, n)
    )
    if not (by_nijenhuis == by_forms == by_frame):
        raise AssertionError(
            "integrability tests disagree: "
            f"N=0:{by_nijenhuis} (0,2)-parts:{by_forms} frame-closed:{by_frame}"
        )
    return by_nijenhuis


# --- characters (for Fourier mode blocks on nilmanifold models)


class Character:
    """A Lie-algebra character lambda (vanishing on [g,g]), the derivative of
    a unitary character chi; d(chi x) = chi(lambda ^ x + dx)."""

    def __init__(self, alg: LieAlgebra, values):
        self.alg = alg
        self.values = [SymScalar.coerce(v) for v in values]
        if len(self.values) != alg.dim:
            raise InputError("character length must match the algebra dimension")
        for (i, j), vec in alg.brackets.items():
            acc = SS_ZERO
            for k, c in vec.items():
                acc = acc + self.values[k - 1] * c
            if not acc.is_zero():
                raise InputError(f"character does not vanish on [e_{i}, e_{j}]")

    def is_trivial(self):
        return all(v.is_zero() for v in self.values)

    def conjugate(self):
        return Character(self.alg, [v.conjugate() for v in self.values])

    def lambda_form(self, coframe: ComplexCoframe) -> Form:
        out = Form.zero(coframe.n)
        for a, v in enumerate(self.values, start=1):
            if not v.is_zero():
                out = out + coframe.real_covector_form(a).scale(v)
        return out

    def key(self):
        return tuple(self.values)


class LieACS:
    """An invariant almost complex model: algebra + J + coframe + metadata.

    characters lists the Fourier blocks the model supplies for harmonic-space
    computations (always at least the trivial one); basic, when set, restricts
    section monomials to the given holomorphic/antiholomorphic index set.
    """

    def __init__(self, alg, J, *, name="", symbol="x", param=None,
                 characters=None, basic=None):
        self.alg = alg
        self.J = J
        self.coframe = build_coframe(alg, J)
        self.name = name
        self.symbol = symbol
        self.param = param
        self._characters = characters
        self.basic = frozenset(basic) if basic is not None else None

    @property
    def n(self):
        return self.coframe.n

    def characters(self, bundle_power=0):
        trivial = Character(self.alg, [SS_ZERO] * self.alg.dim)
        if self._characters is None:
            return [trivial]
        extra = self._characters(bundle_power) if callable(self._characters) else list(self._characters)
        out = [trivial]
        seen = {trivial.key()}
        for ch in extra:
            if ch.key() not in seen:
                out.append(ch)
                seen.add(ch.key())
        return out

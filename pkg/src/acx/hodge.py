"""Hodge theory on the invariant complex of an almost complex model.

Conventions (all exact, all verified against each other in the tests):

  h(phi_alpha ^ phibar_beta, phi_alpha ^ phibar_beta) = 2^(p+q), monomials
  orthogonal; the frame is unitary.

  dV = (i/2)^n phi^1 ^ phibar^1 ^ ... ^ phi^n ^ phibar^n, total volume 1.

  star(phi_alpha ^ phibar_beta)
      = 2^(p+q-n) (-i)^n eps phi_betahat ^ phibar_alphahat,
  where eps is the sign of the permutation taking the source order
  (alpha unprimed, beta primed, betahat primed, alphahat unprimed) to the
  interleaved order (1, 1', 2, 2', ..., n, n').  star is characterized by
  h(x, y) dV = x ^ conj(star y), which star_oracle solves directly.

  dbar* = -star del star on forms; on bundle-valued forms del is replaced by
  the (1,0) part of the Hermitian connection of the unitary frame.  The
  Laplacian is dbar dbar* + dbar* dbar, and its kernel is
  ker dbar intersect ker dbar* (both sides computed).

Invariant integration (top coefficient times total volume) is a Stokes-exact
substitute for integration only on unimodular algebras; everything here
refuses non-unimodular input.
"""

from __future__ import annotations

from fractions import Fraction

from .bundles import CanonicalPower, PseudoholStructure, trivial_structure
from .errors import InputError
from .forms import Form, MultiIndex, basis_monomials, complement
from .lie import Character, LieACS
from .linalg import in_span, is_nonsingular, kernel_basis, solve
from .scalars import SS_ZERO, Scalar, SymScalar


def _interleave_sign(source):
    """Sign of the permutation (source order) -> (1, 1', 2, 2', ..., n, n').

    source is a list of (index, barred) pairs; position of (k, barred) in the
    target is 2(k-1) + barred.
    """
    seq = [2 * (k - 1) + (1 if barred else 0) for (k, barred) in source]
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def star_monomial(n: int, alpha, beta):
    """star of phi_alpha ^ phibar_beta: returns (betahat, alphahat, coeff)."""
    alpha = MultiIndex(alpha)
    beta = MultiIndex(beta)
    p, q = len(alpha), len(beta)
    ahat = complement(alpha, n)
    bhat = complement(beta, n)
    source = (
        [(i, False) for i in alpha]
        + [(j, True) for j in beta]
        + [(j, True) for j in bhat]
        + [(i, False) for i in ahat]
    )
    eps = _interleave_sign(source)
    minus_i_pow = Scalar(0, -1)
    c = Scalar(1)
    for _ in range(n):
        c = c * minus_i_pow
    coeff = Scalar(Fraction(2) ** (p + q - n)) * c
    if eps < 0:
        coeff = -coeff
    return bhat, ahat, coeff


def volume_form(n: int) -> Form:
    """dV as a Form: (i/2)^n interleaved top monomial, canonically ordered."""
    c = Scalar(1)
    half_i = Scalar(0, Fraction(1, 2))
    for _ in range(n):
        c = c * half_i
    if (n * (n - 1) // 2) % 2:
        c = -c
    full = tuple(range(1, n + 1))
    return Form.monomial(n, full, full, c)


class HermitianData:
    """Metric data of a model: h, dV, integration, and the star operator."""

    def __init__(self, model: LieACS):
        self.model = model
        self.n = model.n
        self.dV = volume_form(self.n)
        full = tuple(range(1, self.n + 1))
        self.vol_coeff = self.dV.coefficient(full, full)

    def h(self, x: Form, y: Form) -> SymScalar:
        """Pointwise Hermitian pairing, linear in x, antilinear in y."""
        acc = SS_ZERO
        for key, cx in x.terms.items():
            cy = y.terms.get(key)
            if cy is None:
                continue
            weight = Fraction(2) ** (len(key[0]) + len(key[1]))
            acc = acc + cx * cy.conjugate() * SymScalar.const(weight)
        return acc

    def integral(self, x: Form) -> SymScalar:
        """Integral of an (n,n)-form over the model (total volume 1)."""
        full = tuple(range(1, self.n + 1))
        return x.coefficient(full, full) / self.vol_coeff

    def star(self, x: Form) -> Form:
        out = Form.zero(self.n)
        for (alpha, beta), c in x.terms.items():
            bhat, ahat, coeff = star_monomial(self.n, alpha, beta)
            out = out + Form.monomial(self.n, bhat, ahat, c * SymScalar.const(coeff))
        return out

    def star_oracle(self, x: Form) -> Form:
        """Solve h(w, x) dV = w ^ conj(star x) for star x, monomial by monomial.

        Independent of the closed star formula; used to pin it down.
        """
        if x.is_zero():
            return Form.zero(self.n)
        (p, q) = x.bidegree()
        target = basis_monomials(self.n, self.n - q, self.n - p)
        probes = basis_monomials(self.n, p, q)
        full = tuple(range(1, self.n + 1))
        # unknowns: conj(coefficients) of star x over target monomials
        rows = []
        rhs = []
        for (wa, wb) in probes:
            w = Form.monomial(self.n, wa, wb)
            row = []
            for (ta, tb) in target:
                candidate = Form.monomial(self.n, ta, tb).conjugate()
                row.append(w.wedge(candidate).coefficient(full, full))
            rows.append(row)
            rhs.append(self.h(w, x) * self.vol_coeff)
        sol = solve(rows, rhs)
        if sol is None:
            raise AssertionError("star oracle system is inconsistent")
        out = Form.zero(self.n)
        for (ta, tb), c in zip(target, sol):
            out = out + Form.monomial(self.n, ta, tb, c.conjugate())
        return out


def star(data: HermitianData, x: Form) -> Form:
    return data.star(x)


class SectionContext:
    """Bundle-valued invariant (p,q)-forms in one character block.

    A section is a list of Forms, one per frame element of the bundle
    (trivial bundle: rank one, theta = 0).  All operators act blockwise in
    the character chi with d(chi x) = chi(lambda ^ x + dx).
    """

    def __init__(self, model: LieACS, bundle: PseudoholStructure | None = None,
                 character: Character | None = None):
        self.model = model
        self.data = HermitianData(model)
        self.bundle = bundle if bundle is not None else trivial_structure(model)
        self.rank = self.bundle.rank
        self.character = character
        self.lam = None
        if character is not None and not character.is_trivial():
            self.lam = character.lambda_form(model.coframe)

    def wrap(self, x):
        if isinstance(x, Form):
            if self.rank != 1:
                raise InputError("bare Form only valid for rank-1 bundles")
            return [x]
        return list(x)

    def dbar(self, comps):
        return self.bundle.dbar_section(self.wrap(comps), self.lam)

    def nabla10(self, comps):
        return self.bundle.nabla10_section(self.wrap(comps), self.lam)

    def star_section(self, comps):
        return [self.data.star(x) for x in self.wrap(comps)]

    def dbar_star(self, comps):
        starred = self.star_section(comps)
        moved = self.nabla10(starred)
        return [-self.data.star(x) for x in moved]

    def laplacian(self, comps):
        comps = self.wrap(comps)
        a = self.dbar(self.dbar_star(comps))
        b = self.dbar_star(self.dbar(comps))
        return [x + y for x, y in zip(a, b)]

    def inner(self, x_comps, y_comps) -> SymScalar:
        acc = SS_ZERO
        for x, y in zip(self.wrap(x_comps), self.wrap(y_comps)):
            acc = acc + self.data.h(x, y)
        return acc


def dbar_star(model: LieACS, x: Form, *, bundle: PseudoholStructure | None = None,
              character: Character | None = None):
    ctx = SectionContext(model, bundle, character)
    out = ctx.dbar_star(x)
    return out[0] if isinstance(x, Form) else out


def laplacian(model: LieACS, x: Form, *, bundle: PseudoholStructure | None = None,
              character: Character | None = None):
    ctx = SectionContext(model, bundle, character)
    out = ctx.laplacian(x)
    return out[0] if isinstance(x, Form) else out


def _section_monomials(model: LieACS, p: int, q: int):
    monos = basis_monomials(model.n, p, q)
    if model.basic is not None:
        monos = [
            (a, b)
            for (a, b) in monos
            if set(a) <= model.basic and set(b) <= model.basic
        ]
    return monos


class HarmonicBlock:
    def __init__(self, character, monomials, rank, basis):
        self.character = character
        self.monomials = monomials
        self.rank = rank
        self.basis = basis

    @property
    def dimension(self):
        return len(self.basis)

    def basis_sections(self, n):
        """Each basis vector as a list of rank Forms."""
        out = []
        for vec in self.basis:
            comps = [Form.zero(n) for _ in range(self.rank)]
            for col, c in enumerate(vec):
                mono_idx, frame_idx = divmod(col, self.rank)
                a, b = self.monomials[mono_idx]
                comps[frame_idx] = comps[frame_idx] + Form.monomial(n, a, b, c)
            out.append(comps)
        return out


class HarmonicSpace:
    def __init__(self, model, p, q, blocks):
        self.model = model
        self.p = p
        self.q = q
        self.blocks = blocks

    @property
    def dimension(self):
        return sum(b.dimension for b in self.blocks)


def _operator_matrix(ctx: SectionContext, monomials, op):
    """Columns: op applied to each (monomial, frame) basis section."""
    n = ctx.model.n
    images = []
    for (a, b) in monomials:
        for i in range(ctx.rank):
            comps = [Form.zero(n)] * ctx.rank
            comps = list(comps)
            comps[i] = Form.monomial(n, a, b)
            images.append(op(comps))
    keys = []
    seen = set()
    for img in images:
        for j, f in enumerate(img):
            for key in f.terms:
                if (j, key) not in seen:
                    seen.add((j, key))
                    keys.append((j, key))
    rows = []
    for (j, key) in sorted(keys):
        rows.append([img[j].terms.get(key, SS_ZERO) for img in images])
    return rows, len(images)


def invariant_harmonic_space(model: LieACS, p: int, q: int, *,
                             bundle_power: int = 0,
                             characters=None) -> HarmonicSpace:
    """ker Laplacian on invariant (p,q)-forms valued in K^bundle_power,
    over the model's character blocks.

    The kernel is computed twice, as ker(Laplacian) and as
    ker(dbar) intersect ker(dbar*), and the two must agree.
    """
    if not model.alg.is_unimodular():
        raise InputError(
            "invariant Hodge theory requires a unimodular algebra: "
            "integration by parts fails otherwise"
        )
    if bundle_power == 0:
        bundle = None
    else:
        bundle = CanonicalPower(model, bundle_power).structure()
    if characters is None:
        characters = model.characters(bundle_power)
    monomials = _section_monomials(model, p, q)
    blocks = []
    for ch in characters:
        ctx = SectionContext(model, bundle, ch)
        if not monomials:
            blocks.append(HarmonicBlock(ch, monomials, ctx.rank, []))
            continue
        lap_rows, ncols = _operator_matrix(ctx, monomials, ctx.laplacian)
        lap_kernel = kernel_basis(lap_rows, ncols=ncols)
        db_rows, _ = _operator_matrix(ctx, monomials, ctx.dbar)
        ds_rows, _ = _operator_matrix(ctx, monomials, ctx.dbar_star)
        both_kernel = kernel_basis(db_rows + ds_rows, ncols=ncols)
        if len(lap_kernel) != len(both_kernel):
            raise AssertionError(
                "Laplacian kernel disagrees with ker dbar intersect ker dbar*"
            )
        for v in both_kernel:
            if not in_span(lap_kernel, v):
                raise AssertionError("harmonic kernels span different spaces")
        blocks.append(HarmonicBlock(ch, monomials, ctx.rank, both_kernel))
    return HarmonicSpace(model, p, q, blocks)


class SerreReport:
    def __init__(self, ok, dim_source, dim_target, detail=""):
        self.ok = ok
        self.dim_source = dim_source
        self.dim_target = dim_target
        self.detail = detail

    def __bool__(self):
        return self.ok


def serre_pairing_check(model: LieACS, p: int, q: int, *,
                        bundle_power: int = 0) -> SerreReport:
    """Does s -> conj(star s) carry harmonic (p,q) E-forms isomorphically
    onto harmonic (n-p, n-q) E*-forms with nonsingular wedge pairing?
    """
    n = model.n
    data = HermitianData(model)
    source = invariant_harmonic_space(model, p, q, bundle_power=bundle_power)
    target = invariant_harmonic_space(model, n - p, n - q, bundle_power=-bundle_power)
    if source.dimension != target.dimension:
        return SerreReport(False, source.dimension, target.dimension, "dimension mismatch")
    full = tuple(range(1, n + 1))
    for sblock in source.blocks:
        ch_bar_key = tuple(v.conjugate() for v in sblock.character.values)
        tblock = next(
            (b for b in target.blocks if b.character.key() == ch_bar_key), None
        )
        if sblock.dimension == 0:
            continue
        if tblock is None:
            return SerreReport(False, source.dimension, target.dimension,
                               "missing conjugate character block in target")
        if tblock.dimension != sblock.dimension:
            return SerreReport(False, source.dimension, target.dimension,
                               "character block dimensions differ")
        sources = sblock.basis_sections(n)
        targets = tblock.basis_sections(n)
        images = [[data.star(x).conjugate() for x in s] for s in sources]
        # each image must lie in the span of the target harmonic basis
        keys = []
        seen = set()
        for sec in targets + images:
            for j, f in enumerate(sec):
                for key in f.terms:
                    if (j, key) not in seen:
                        seen.add((j, key))
                        keys.append((j, key))
        keys.sort()
        tvecs = [
            [sec[j].terms.get(key, SS_ZERO) for (j, key) in keys] for sec in targets
        ]
        for img in images:
            vec = [img[j].terms.get(key, SS_ZERO) for (j, key) in keys]
            if not in_span(tvecs, vec):
                return SerreReport(False, source.dimension, target.dimension,
                                   "Serre image is not harmonic")
        # pairing matrix between the source basis and its images
        pairing = []
        for s in sources:
            row = []
            for img in images:
                acc = SS_ZERO
                for x, y in zip(s, img):
                    acc = acc + data.integral(x.wedge(y))
                row.append(acc)
            pairing.append(row)
        if not is_nonsingular(pairing):
            return SerreReport(False, source.dimension, target.dimension,
                               "pairing matrix is singular")
    return SerreReport(True, source.dimension, target.dimension)

"""Pseudoholomorphic structures on trivialized bundles over invariant models.

A PseudoholStructure on a rank-r bundle with fixed unitary frame s_1..s_r is
the matrix theta of invariant (0,1)-forms with dbar_E s_i = sum_j theta[i][j]
tensor s_j, extended to bundle-valued (p,q)-forms by

    dbar_E(x tensor s_i) = dbar(x) tensor s_i + (-1)^(p+q) sum_j x ^ theta[i][j] tensor s_j.

The canonical power K^m is the rank-1 case trivialized by vol^m with
vol = phi^1 ^ ... ^ phi^n; its structure form is beta_m = m * beta_1 where
dbar(vol) = beta_1 ^ vol (the product rule, exposed for verification).

The Hermitian connection of a unitary frame is omega = theta - conj(theta)^T;
its (1,0) part drives the codifferential.  The dual structure on E* over the
dual frame is theta* = -theta^T.
"""

from __future__ import annotations

from .errors import InputError
from .forms import Form, basis_monomials
from .lie import LieACS
from .linalg import kernel_basis
from .scalars import SS_ZERO, SymScalar


def _check_01(entry: Form, n: int):
    if entry.is_zero():
        return Form.zero(n)
    if entry.bidegrees() != [(0, 1)]:
        raise InputError(f"structure entries must be (0,1)-forms, got bidegrees {entry.bidegrees()}")
    return entry


class PseudoholStructure:
    def __init__(self, model: LieACS, theta):
        self.model = model
        self.rank = len(theta)
        if self.rank == 0 or any(len(row) != self.rank for row in theta):
            raise InputError("theta must be a square matrix of (0,1)-forms")
        self.theta = [[_check_01(e, model.n) for e in row] for row in theta]

    def dbar_section(self, comps, lam_form=None):
        """dbar_E of sum_i comps[i] tensor s_i; comps are Forms, possibly mixed."""
        coframe = self.model.coframe
        out = [Form.zero(self.model.n) for _ in range(self.rank)]
        for i, x in enumerate(comps):
            if x.is_zero():
                continue
            out[i] = out[i] + coframe.dbar(x, lam_form)
            for (p, q), piece in x.components().items():
                sign = -1 if (p + q) % 2 else 1
                for j in range(self.rank):
                    t = self.theta[i][j]
                    if t.is_zero():
                        continue
                    w = piece.wedge(t)
                    out[j] = out[j] + (w if sign > 0 else -w)
        return out

    def connection(self):
        """omega = theta - conj(theta)^T for the unitary frame."""
        r = self.rank
        return [
            [self.theta[i][j] - self.theta[j][i].conjugate() for j in range(r)]
            for i in range(r)
        ]

    def connection_10(self):
        """The (1,0) part of the connection: -conj(theta)^T."""
        r = self.rank
        return [[-self.theta[j][i].conjugate() for j in range(r)] for i in range(r)]

    def nabla10_section(self, comps, lam_form=None):
        """The (1,0) covariant derivative of sum_i comps[i] tensor s_i."""
        coframe = self.model.coframe
        omega10 = self.connection_10()
        out = [Form.zero(self.model.n) for _ in range(self.rank)]
        for i, x in enumerate(comps):
            if x.is_zero():
                continue
            out[i] = out[i] + coframe.del_op(x, lam_form)
            for (p, q), piece in x.components().items():
                sign = -1 if (p + q) % 2 else 1
                for j in range(self.rank):
                    w10 = omega10[i][j]
                    if w10.is_zero():
                        continue
                    w = piece.wedge(w10)
                    out[j] = out[j] + (w if sign > 0 else -w)
        return out

    def dual(self) -> "PseudoholStructure":
        """theta* = -theta^T on the dual frame."""
        r = self.rank
        return PseudoholStructure(
            self.model, [[-self.theta[j][i] for j in range(r)] for i in range(r)]
        )


def trivial_structure(model: LieACS, rank: int = 1) -> PseudoholStructure:
    z = Form.zero(model.n)
    return PseudoholStructure(model, [[z] * rank for _ in range(rank)])


def hermitian_connection(ps: PseudoholStructure):
    return ps.connection()


def dual_structure(ps: PseudoholStructure) -> PseudoholStructure:
    return ps.dual()


class CanonicalPower:
    """K^m over a model, trivialized by vol^m, with beta_m = m * beta_1."""

    def __init__(self, model: LieACS, m: int):
        if not isinstance(m, int):
            raise InputError(f"bad canonical power {m!r}")
        self.model = model
        self.m = m
        self.vol = Form.monomial(model.n, tuple(range(1, model.n + 1)), ())
        dvol = model.coframe.dbar(self.vol)
        sign = -1 if model.n % 2 else 1
        full = tuple(range(1, model.n + 1))
        beta_terms = {}
        for i in range(1, model.n + 1):
            c = dvol.coefficient(full, (i,))
            if not c.is_zero():
                beta_terms[((), (i,))] = c if sign > 0 else -c
        self.beta1 = Form(model.n, beta_terms)
        if self.beta1.wedge(self.vol) != dvol:
            raise AssertionError("beta_1 does not reproduce dbar(vol)")

    def beta(self, m: int | None = None) -> Form:
        m = self.m if m is None else m
        return self.beta1.scale(m)

    def beta_by_product_rule(self, m: int | None = None) -> Form:
        """Rebuild beta_m by the inductive Leibniz expansion; equals m*beta_1."""
        m = self.m if m is None else m
        acc = Form.zero(self.model.n)
        step = self.beta1 if m >= 0 else -self.beta1
        for _ in range(abs(m)):
            acc = acc + step
        return acc

    def structure(self) -> PseudoholStructure:
        return PseudoholStructure(self.model, [[self.beta()]])


def canonical_dbar(model: LieACS, m: int) -> CanonicalPower:
    return CanonicalPower(model, m)


class InvariantSections:
    def __init__(self, dimension, monomials, basis):
        self.dimension = dimension
        self.monomials = monomials
        self.basis = basis


def invariant_sections(ps: PseudoholStructure, p: int) -> InvariantSections:
    """Kernel of dbar_E on constant-coefficient (p,0)-valued sections.

    When the model carries a basic index restriction, section monomials are
    drawn from that index set only; the differential still acts in the full
    complex, so obstructions living in non-basic directions are seen.
    """
    model = ps.model
    monos = basis_monomials(model.n, p, 0)
    if model.basic is not None:
        monos = [
            (a, b)
            for (a, b) in monos
            if set(a) <= model.basic and set(b) <= model.basic
        ]
    columns = []
    images = []
    for (a, b) in monos:
        for i in range(ps.rank):
            comps = [Form.zero(model.n)] * ps.rank
            comps = list(comps)
            comps[i] = Form.monomial(model.n, a, b)
            images.append(ps.dbar_section(comps))
            columns.append(((a, b), i))
    target_keys = []
    seen = set()
    for img in images:
        for j, f in enumerate(img):
            for key in f.terms:
                if (j, key) not in seen:
                    seen.add((j, key))
                    target_keys.append((j, key))
    rows = []
    for (j, key) in sorted(target_keys):
        rows.append([img[j].terms.get(key, SS_ZERO) for img in images])
    basis = kernel_basis(rows, ncols=len(columns)) if columns else []
    return InvariantSections(len(basis), columns, basis)

"""Rota-Baxter operators, quadratic structures, and the pipeline to r-matrices.

Two different adjoints coexist and are kept apart throughout: the plain
dual-basis transpose (for maps to/from the dual space) and the S-adjoint
R^{*,S} = I_S∘Rᵀ∘I_S⁻¹ inside one quadratic space.  The compatibility
gate B∘R^{*,S} = −R∘B is exactly equivalent to (R⊗Id+Id⊗R)(r^{B,S}) = 0;
the plain-transpose comparison is reported alongside for inspection.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .bialgebra import LieBialgebra, ReynoldsLieBialgebra
from .certificates import Certificate, CheckFailed, residual_from_mat, residual_from_vec
from .cybe import ad_invariance_cert, is_cybe_solution, r_plus
from .exact import Mat, Tensor2, flip, rat, vbasis, vis_zero, vsub
from .lie import BilinForm, LieAlgebra, dual_basis, is_quadratic, s_sharp
from .reynolds import is_reynolds, operator_form_compat


class RotaBaxterAlg:
    """[Bx,By] = B([Bx,y] + [x,By] + λ[x,y])."""

    __slots__ = ("L", "B", "lam")

    def __init__(self, L: LieAlgebra, B: Mat, lam, check: bool = True):
        if B.rows != L.dim or B.cols != L.dim:
            raise ValueError("operator shape does not match the algebra")
        self.L = L
        self.B = B
        self.lam = rat(lam)
        if check:
            cert = is_rota_baxter(L, B, self.lam)
            if not cert.ok:
                raise CheckFailed(cert)

    @classmethod
    def unchecked(cls, L, B, lam) -> "RotaBaxterAlg":
        return cls(L, B, lam, check=False)


def is_rota_baxter(L: LieAlgebra, B: Mat, lam) -> Certificate:
    lam = rat(lam)
    first = None
    count = 0
    for i, j in combinations(range(L.dim), 2):
        x, y = vbasis(L.dim, i), vbasis(L.dim, j)
        bx, by = B.apply(x), B.apply(y)
        lhs = L.bracket(bx, by)
        inner = [
            a + b + lam * c
            for a, b, c in zip(L.bracket(bx, y), L.bracket(x, by), L.bracket(x, y))
        ]
        res = vsub(lhs, B.apply(tuple(inner)))
        if not vis_zero(res):
            count += 1
            if first is None:
                first = ((i, j), res)
    if first is None:
        return Certificate.passed("rota-baxter")
    return Certificate.failed("rota-baxter", first[0], residual_from_vec(first[1]), count)


def descendent(rb: RotaBaxterAlg) -> LieAlgebra:
    """[x,y]_B = [Bx,y] + [x,By] + λ[x,y]; B becomes a homomorphism to g."""
    cert = is_rota_baxter(rb.L, rb.B, rb.lam)
    if not cert.ok:
        raise CheckFailed(cert)
    L, B, lam = rb.L, rb.B, rb.lam
    sc: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i, j in combinations(range(L.dim), 2):
        x, y = vbasis(L.dim, i), vbasis(L.dim, j)
        out = [
            a + b + lam * c
            for a, b, c in zip(
                L.bracket(B.apply(x), y), L.bracket(x, B.apply(y)), L.bracket(x, y)
            )
        ]
        comp = {k: c for k, c in enumerate(out) if c != 0}
        if comp:
            sc[(i, j)] = comp
    return LieAlgebra(L.dim, L.basis, sc)


def reynolds_descends(rb: RotaBaxterAlg, R: Mat) -> Certificate:
    """Whether R stays Reynolds on the descendent algebra.

    Commuting R∘B = B∘R is the sufficient hypothesis; when it fails the
    check still runs and the outcome is reported as found.
    """
    base = is_reynolds(rb.L, R)
    commutes = (R @ rb.B - rb.B @ R).is_zero()
    desc_cert = is_reynolds(descendent(rb), R)
    note = "R and B commute" if commutes else "R and B do not commute (hypothesis unmet)"
    return Certificate.combine(
        "reynolds-descends",
        [Certificate.combine("reynolds-on-base", [base]),
         Certificate.combine("reynolds-on-descendent", [desc_cert])],
        note=note,
    )


class QuadraticRB:
    """Quadratic Rota-Baxter Lie algebra: S invariant, nondegenerate, B-compatible."""

    __slots__ = ("rb", "S")

    def __init__(self, rb: RotaBaxterAlg, S: BilinForm, check: bool = True):
        self.rb = rb
        self.S = S
        if check:
            cert = is_quadratic_rb(rb, S)
            if not cert.ok:
                raise CheckFailed(cert)

    @classmethod
    def unchecked(cls, rb, S) -> "QuadraticRB":
        return cls(rb, S, check=False)


def is_quadratic_rb(rb: RotaBaxterAlg, S: BilinForm) -> Certificate:
    """Quadratic (L,S) plus S(x,By) + S(Bx,y) + λS(x,y) = 0 over pairs."""
    quad = is_quadratic(rb.L, S)
    compat = operator_form_compat(rb.L, S, rb.B, "rb-compat", lam=rb.lam)
    rbc = is_rota_baxter(rb.L, rb.B, rb.lam)
    return Certificate.combine("quadratic-rb", [rbc, quad, compat])


def r_from_qrb(qrb: QuadraticRB) -> Tensor2:
    """The tensor with r_+ = B∘I_S; a CYBE solution with descendent compatibility.

    Entry convention: r_+(e_i*) = Σ_j r_ij e_j, i.e. the tensor is the
    transpose-indexed matrix of B∘I_S.
    """
    cert = is_quadratic_rb(qrb.rb, qrb.S)
    if not cert.ok:
        raise CheckFailed(cert)
    L = qrb.rb.L
    n = L.dim
    m = qrb.rb.B @ qrb.S.gram.inverse()
    entries = {
        (i, j): m.entries[j][i]
        for i in range(n)
        for j in range(n)
        if m.entries[j][i] != 0
    }
    r = Tensor2(n, n, entries)

    cy = is_cybe_solution(L, r)
    if not cy.ok:
        raise CheckFailed(cy)
    dual = dual_bracket_from_r(L, r)
    sharp = s_sharp(qrb.S)
    desc = descendent(qrb.rb)
    for i, j in combinations(range(n), 2):
        lhs = dual.bracket(sharp.apply(vbasis(n, i)), sharp.apply(vbasis(n, j)))
        rhs = sharp.apply(desc.bracket_basis(i, j))
        if lhs != rhs:
            raise CheckFailed(
                Certificate.failed(
                    "descendent-compatibility", (i, j),
                    residual_from_vec(vsub(lhs, rhs)), 1,
                )
            )
    return r


def dual_bracket_from_r(g: LieAlgebra, r: Tensor2) -> LieAlgebra:
    """[ξ,η]_r = ad*_{r₊ξ}η − ad*_{r₋η}ξ on dual coordinates, r₋ = −r₊ᵀ."""
    inv = ad_invariance_cert(g, r + flip(r), name="symmetric-part-invariance")
    if not inv.ok:
        raise CheckFailed(inv)
    n = g.dim
    rp = r_plus(r)
    rm = -rp.transpose()
    sc: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a, b in combinations(range(n), 2):
        xi, eta = vbasis(n, a), vbasis(n, b)
        coad_rp = -g.ad_vec(rp.apply(xi)).transpose()
        coad_rm = -g.ad_vec(rm.apply(eta)).transpose()
        out = vsub(coad_rp.apply(eta), coad_rm.apply(xi))
        comp = {k: c for k, c in enumerate(out) if c != 0}
        if comp:
            sc[(a, b)] = comp
    return LieAlgebra(n, dual_basis(g.basis), sc)


def i_operator(r: Tensor2) -> Mat:
    """I = r₊ − r₋ = r₊ + r₊ᵀ; symmetric part of r (doubled)."""
    rp = r_plus(r)
    return rp + rp.transpose()


def is_factorizable(g: LieAlgebra, r: Tensor2) -> Certificate:
    """Quasi-triangular conditions plus invertibility of I, with I∘ad* = ad∘I."""
    parts = [
        ad_invariance_cert(g, r + flip(r), name="symmetric-part-invariance"),
        is_cybe_solution(g, r),
    ]
    i_mat = i_operator(r)
    if i_mat.det() != 0:
        parts.append(Certificate.passed("i-invertible"))
    else:
        parts.append(Certificate(check="i-invertible", ok=False,
                                 note="I = r₊ − r₋ is singular"))
    first = None
    count = 0
    for k in range(g.dim):
        ad_k = g.ad(k)
        diff = i_mat @ (-ad_k.transpose()) - ad_k @ i_mat
        if not diff.is_zero():
            count += 1
            if first is None:
                first = ((k,), diff)
    if first is None:
        parts.append(Certificate.passed("i-intertwines"))
    else:
        parts.append(
            Certificate.failed("i-intertwines", first[0], residual_from_mat(first[1]), count)
        )
    return Certificate.combine("factorizable", parts)


def s_adjoint(S: BilinForm, R: Mat) -> Mat:
    """R^{*,S} = I_S∘Rᵀ∘I_S⁻¹ = gram⁻¹·Rᵀ·gram."""
    gram = S.gram
    return gram.inverse() @ R.transpose() @ gram


def is_reynolds_on_qrb(qrb: QuadraticRB, R: Mat) -> Certificate:
    """R Reynolds on L and B∘R^{*,S} = −R∘B (S-adjoint reading).

    The note reports the plain-transpose comparison B∘Rᵀ vs −R∘B and
    whether λ(R + R^{*,S}) = 0, both for inspection only.
    """
    rey = is_reynolds(qrb.rb.L, R)
    rs = s_adjoint(qrb.S, R)
    diff = qrb.rb.B @ rs + R @ qrb.rb.B
    if diff.is_zero():
        compat = Certificate.passed("adjoint-compat")
    else:
        compat = Certificate.failed("adjoint-compat", (0,), residual_from_mat(diff), 1)
    plain = (qrb.rb.B @ R.transpose() + R @ qrb.rb.B).is_zero()
    lam_skew = (rs + R).scale(qrb.rb.lam).is_zero()
    note = (
        f"plain-transpose variant {'holds' if plain else 'fails'}; "
        f"lambda-skewness {'holds' if lam_skew else 'fails'}"
    )
    return Certificate.combine(
        "reynolds-on-qrb",
        [Certificate.combine("reynolds", [rey]), compat],
        note=note,
    )


def minus_rstar_on_descendent(qrb: QuadraticRB, R: Mat) -> Certificate:
    """−R^{*,S} is Reynolds on the descendent algebra."""
    gate = is_reynolds_on_qrb(qrb, R)
    desc = descendent(qrb.rb)
    rs = s_adjoint(qrb.S, R)
    cert = is_reynolds(desc, -rs)
    return Certificate.combine(
        "minus-rstar-on-descendent",
        [gate, Certificate.combine("reynolds-on-descendent", [cert])],
    )


def thmFL_bialgebra(qrb: QuadraticRB, R: Mat) -> ReynoldsLieBialgebra:
    """Assemble (g, dual-from-r^{B,S}, R); a Reynolds Lie bialgebra."""
    gate = is_reynolds_on_qrb(qrb, R)
    if not gate.ok:
        raise CheckFailed(gate)
    r = r_from_qrb(qrb)
    dual = dual_bracket_from_r(qrb.rb.L, r)
    return ReynoldsLieBialgebra(LieBialgebra(qrb.rb.L, dual), R)

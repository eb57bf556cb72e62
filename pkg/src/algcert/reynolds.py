"""Reynolds operators on Lie algebras and the structures they induce.

A Reynolds operator R satisfies [Rx,Ry] = R([Rx,y] + [x,Ry] - [Rx,Ry]).
All identity checks run exhaustively over basis tuples: bilinearity turns
the universally quantified identities into finite, exact decision
procedures.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .certificates import (
    Certificate,
    CheckFailed,
    residual_from_mat,
    residual_from_vec,
)
from .exact import Mat, Vec, rat, vbasis, vis_zero, vsub
from .lie import (
    BilinForm,
    LieAlgebra,
    Representation,
    adjoint_rep,
    coadjoint_rep,
    dual_rep,
    is_quadratic,
    is_representation,
    s_sharp,
    semidirect,
)


class ReynoldsLieAlgebra:
    """A Lie algebra together with a Reynolds operator."""

    __slots__ = ("L", "R")

    def __init__(self, L: LieAlgebra, R: Mat, check: bool = True):
        if R.rows != L.dim or R.cols != L.dim:
            raise ValueError("operator shape does not match the algebra")
        self.L = L
        self.R = R
        if check:
            cert = is_reynolds(L, R)
            if not cert.ok:
                raise CheckFailed(cert)

    @classmethod
    def unchecked(cls, L: LieAlgebra, R: Mat) -> "ReynoldsLieAlgebra":
        return cls(L, R, check=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ReynoldsLieAlgebra)
            and self.L == other.L
            and self.R == other.R
        )

    def __repr__(self) -> str:
        return f"ReynoldsLieAlgebra({self.L!r})"


def _reynolds_residual(L: LieAlgebra, R: Mat, x: Vec, y: Vec) -> Vec:
    rx, ry = R.apply(x), R.apply(y)
    lhs = L.bracket(rx, ry)
    inner = vsub(
        tuple(a + b for a, b in zip(L.bracket(rx, y), L.bracket(x, ry))),
        L.bracket(rx, ry),
    )
    return vsub(lhs, R.apply(inner))


def is_reynolds(L: LieAlgebra, R: Mat) -> Certificate:
    """Exhaustive basis-pair check of the Reynolds identity."""
    if R.rows != L.dim or R.cols != L.dim:
        raise ValueError("operator shape does not match the algebra")
    first = None
    count = 0
    for i, j in combinations(range(L.dim), 2):
        res = _reynolds_residual(L, R, vbasis(L.dim, i), vbasis(L.dim, j))
        if not vis_zero(res):
            count += 1
            if first is None:
                first = ((i, j), res)
    if first is None:
        return Certificate.passed("reynolds")
    return Certificate.failed("reynolds", first[0], residual_from_vec(first[1]), count)


def induced_algebra(A: ReynoldsLieAlgebra) -> ReynoldsLieAlgebra:
    """New bracket [x,y]_R = [Rx,y] + [x,Ry] - [Rx,Ry] with the same operator."""
    L, R = A.L, A.R
    sc: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i, j in combinations(range(L.dim), 2):
        out = _induced_bracket(L, R, vbasis(L.dim, i), vbasis(L.dim, j))
        comp = {k: c for k, c in enumerate(out) if c != 0}
        if comp:
            sc[(i, j)] = comp
    induced = LieAlgebra(L.dim, L.basis, sc)
    return ReynoldsLieAlgebra(induced, R)


def _induced_bracket(L: LieAlgebra, R: Mat, x: Vec, y: Vec) -> Vec:
    rx, ry = R.apply(x), R.apply(y)
    return vsub(
        tuple(a + b for a, b in zip(L.bracket(rx, y), L.bracket(x, ry))),
        L.bracket(rx, ry),
    )


class ReynoldsRep:
    """A pair (T, rho): rho a representation on W, T compatible with R."""

    __slots__ = ("base", "rep", "T")

    def __init__(self, base: ReynoldsLieAlgebra, rep: Representation, T: Mat, check: bool = True):
        if rep.algebra != base.L:
            raise ValueError("representation is not over the Reynolds algebra's space")
        if T.rows != rep.module_dim or T.cols != rep.module_dim:
            raise ValueError("T shape does not match the module")
        self.base = base
        self.rep = rep
        self.T = T
        if check:
            cert = is_reynolds_rep(self)
            if not cert.ok:
                raise CheckFailed(cert)

    @classmethod
    def unchecked(cls, base, rep, T) -> "ReynoldsRep":
        return cls(base, rep, T, check=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ReynoldsRep)
            and self.base == other.base
            and self.rep == other.rep
            and self.T == other.T
        )


def reynolds_adjoint_rep(A: ReynoldsLieAlgebra) -> ReynoldsRep:
    """(g; R, ad), always a Reynolds representation."""
    return ReynoldsRep(A, adjoint_rep(A.L), A.R, check=False)


def reynolds_coadjoint_rep(A: ReynoldsLieAlgebra) -> ReynoldsRep:
    """(g*; -Rᵀ, ad*), the dual of the adjoint representation."""
    return ReynoldsRep(A, coadjoint_rep(A.L), -A.R.transpose(), check=False)


def compat_certificate(R: Mat, rep: Representation, T: Mat,
                       name: str = "compatibility") -> Certificate:
    """rho(Rx)(Tu) = T(rho(x)(Tu) + rho(Rx)u - rho(Rx)(Tu)) over basis (x, u)."""
    L = rep.algebra
    first = None
    count = 0
    for i in range(L.dim):
        rho_rx = rep.rho_vec(R.apply(vbasis(L.dim, i)))
        rho_x = rep.rho[i]
        diff = rho_rx @ T - T @ (rho_x @ T + rho_rx - rho_rx @ T)
        if diff.is_zero():
            continue
        for a in range(rep.module_dim):
            col = diff.col(a)
            if not vis_zero(col):
                count += 1
                if first is None:
                    first = ((i, a), col)
    if first is None:
        return Certificate.passed(name)
    return Certificate.failed(name, first[0], residual_from_vec(first[1]), count)


def is_reynolds_rep(rr: ReynoldsRep) -> Certificate:
    """Underlying representation validity, then the (T, rho) compatibility."""
    rep_ok = is_representation(rr.rep)
    if not rep_ok.ok:
        return Certificate.combine(
            "reynolds-rep", [rep_ok], note="underlying representation invalid"
        )
    compat = compat_certificate(rr.base.R, rr.rep, rr.T)
    return Certificate.combine("reynolds-rep", [rep_ok, compat])


def dual_reynolds_rep(rr: ReynoldsRep) -> ReynoldsRep:
    """(W*; -Tᵀ, rho*)."""
    return ReynoldsRep(rr.base, dual_rep(rr.rep), -rr.T.transpose(), check=False)


def semidirect_reynolds(rr: ReynoldsRep) -> ReynoldsLieAlgebra:
    """g⋉W with the block-diagonal operator R⊕T."""
    cert = is_reynolds_rep(rr)
    if not cert.ok:
        raise CheckFailed(cert)
    big = semidirect(rr.base.L, rr.rep)
    return ReynoldsLieAlgebra(big, Mat.block_diag(rr.base.R, rr.T))


class QuadraticReynolds:
    """Reynolds Lie algebra with an invariant form satisfying S(Rx,y)+S(x,Ry)=0."""

    __slots__ = ("base", "S")

    def __init__(self, base: ReynoldsLieAlgebra, S: BilinForm, check: bool = True):
        self.base = base
        self.S = S
        if check:
            cert = is_quadratic_reynolds(base, S)
            if not cert.ok:
                raise CheckFailed(cert)

    @classmethod
    def unchecked(cls, base, S) -> "QuadraticReynolds":
        return cls(base, S, check=False)


def operator_form_compat(L: LieAlgebra, S: BilinForm, R: Mat, name: str,
                         lam: Fraction | None = None) -> Certificate:
    """S(Re_i,e_j) + S(e_i,Re_j) (+ lam·S(e_i,e_j)) = 0 over all pairs."""
    first = None
    count = 0
    for i in range(L.dim):
        for j in range(L.dim):
            ei, ej = vbasis(L.dim, i), vbasis(L.dim, j)
            val = S.eval(R.apply(ei), ej) + S.eval(ei, R.apply(ej))
            if lam is not None:
                val += lam * S.eval(ei, ej)
            if val != 0:
                count += 1
                if first is None:
                    first = ((i, j), val)
    if first is None:
        return Certificate.passed(name)
    return Certificate.failed(name, first[0], ((first[0], first[1]),), count)


def is_quadratic_reynolds(A: ReynoldsLieAlgebra, S: BilinForm) -> Certificate:
    """Quadratic (invariant + nondegenerate) plus the R-compatibility of S."""
    quad = is_quadratic(A.L, S)
    compat = operator_form_compat(A.L, S, A.R, "reynolds-compat")
    return Certificate.combine("quadratic-reynolds", [quad, compat])


def check_ssharp_intertwiner(Q: QuadraticReynolds) -> Certificate:
    """S♯ intertwines ad with ad* and satisfies S♯R = -RᵀS♯."""
    L, R = Q.base.L, Q.base.R
    sharp = s_sharp(Q.S)
    parts = []
    first = None
    count = 0
    for i in range(L.dim):
        diff = sharp @ L.ad(i) - (-L.ad(i).transpose()) @ sharp
        if not diff.is_zero():
            count += 1
            if first is None:
                first = ((i,), diff)
    if first is None:
        parts.append(Certificate.passed("ad-intertwiner"))
    else:
        parts.append(
            Certificate.failed("ad-intertwiner", first[0], residual_from_mat(first[1]), count)
        )
    diff = sharp @ R + R.transpose() @ sharp
    if diff.is_zero():
        parts.append(Certificate.passed("operator-skew"))
    else:
        parts.append(
            Certificate.failed("operator-skew", (0,), residual_from_mat(diff), 1)
        )
    return Certificate.combine("ssharp-intertwiner", parts)


# ---------------------------------------------------------------------------
# the Block-algebra family, checked on finite index windows
# ---------------------------------------------------------------------------

def block_window_check(q, lo: int, hi: int, skip_singular: bool = False) -> Certificate:
    """Verify the Reynolds identity for the Block family on a finite window.

    Basis symbols L_{m,i} for lo <= m,i <= hi with bracket
    [L_{m,i}, L_{n,j}] = (n(i+q)-m(j+q)) L_{m+n,i+j} and
    R(L_{m,i}) = L_{m,i}/(m+i+1).  Window indices with m+i+1 = 0 are an
    input error unless skip_singular is set, in which case they are dropped
    and counted.  Pairs whose target index has m+n+i+j+1 = 0 cannot be fed
    through R and are skipped and counted, never silently dropped.  The
    induced-bracket coefficient is checked against its closed form
    (m+n+i+j+1)(n(i+q)-m(j+q))/((m+i+1)(n+j+1)) on every checked pair.
    """
    q = rat(q)
    if lo > hi:
        raise ValueError("empty window: lo > hi")
    window = [(m, i) for m in range(lo, hi + 1) for i in range(lo, hi + 1)]
    singular = [(m, i) for (m, i) in window if m + i + 1 == 0]
    if singular and not skip_singular:
        raise ValueError(f"window contains singular index {singular[0]} (m+i+1=0)")
    active = [(m, i) for (m, i) in window if m + i + 1 != 0]

    first = None
    count = 0
    skipped_pairs = 0
    first_ind = None
    count_ind = 0
    for m, i in active:
        for n, j in active:
            a = Fraction(m + i + 1)
            b = Fraction(n + j + 1)
            s = Fraction(m + n + i + j + 1)
            coeff = Fraction(n) * (i + q) - Fraction(m) * (j + q)

            induced = coeff * (1 / a + 1 / b - 1 / (a * b))
            closed = s * coeff / (a * b)
            if induced != closed:
                count_ind += 1
                if first_ind is None:
                    first_ind = ((m, i, n, j), induced - closed)

            if s == 0:
                skipped_pairs += 1
                continue
            lhs = coeff / (a * b)
            rhs = coeff / (a * s) + coeff / (b * s) - coeff / (a * b * s)
            if lhs != rhs:
                count += 1
                if first is None:
                    first = ((m, i, n, j), lhs - rhs)

    if first is None:
        rey = Certificate.passed("block-reynolds-identity", skipped=skipped_pairs)
    else:
        rey = Certificate.failed(
            "block-reynolds-identity", first[0], ((first[0], first[1]),), count,
            skipped=skipped_pairs,
        )
    if first_ind is None:
        ind = Certificate.passed("block-induced-closed-form")
    else:
        ind = Certificate.failed(
            "block-induced-closed-form", first_ind[0], ((first_ind[0], first_ind[1]),), count_ind
        )
    note = f"q={q}, window=[{lo},{hi}]"
    if singular:
        note += f", singular indices skipped={len(singular)}"
    return Certificate.combine("block-window", [rey, ind], note=note)

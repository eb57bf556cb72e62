"""Lie bialgebras, Reynolds Lie bialgebras, Drinfeld doubles and coboundary theory.

A bialgebra is stored as two structure-constant tables (g, dual); the
cobracket is derived, never stored, under the pairing
⟨Δ(x), ξ⊗η⟩ = ⟨x, [ξ,η]⟩ with Δ skew, i.e.
Δ(e_k) = Σ_{i<j} c*_{ij}^k (e_i⊗e_j − e_j⊗e_i) from the one-sided dual
table.  Any uniform rescaling of Δ leaves every verdict unchanged, so the
wedge-normalization ambiguity cannot affect a certificate.
"""

from __future__ import annotations

from fractions import Fraction

from .certificates import Certificate, CheckFailed, residual_from_tensor
from .exact import Mat, Tensor2, Tensor3, flip, tensor2_map, tensor3_map
from .lie import LieAlgebra, Representation, coadjoint_rep, dual_basis, jacobi_check
from .matched import MatchedPair, ReynoldsMatchedPair, reynolds_double
from .reynolds import ReynoldsLieAlgebra, is_reynolds


class LieBialgebra:
    """(g, dual): two Lie algebras on dual coordinate spaces, cocycle-compatible."""

    __slots__ = ("g", "dual")

    def __init__(self, g: LieAlgebra, dual: LieAlgebra, check: bool = True):
        if g.dim != dual.dim:
            raise ValueError("g and its dual must have equal dimension")
        self.g = g
        self.dual = dual
        if check:
            cert = is_lie_bialgebra(g, dual)
            if not cert.ok:
                raise CheckFailed(cert)

    @classmethod
    def unchecked(cls, g, dual) -> "LieBialgebra":
        return cls(g, dual, check=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieBialgebra)
            and self.g == other.g
            and self.dual == other.dual
        )

    def cobracket(self) -> list[Tensor2]:
        return cobracket_from_dual(self.dual)


def cobracket_from_dual(dual: LieAlgebra) -> list[Tensor2]:
    """Δ(e_k) as a skew tensor read off the dual structure constants."""
    n = dual.dim
    deltas = []
    for k in range(n):
        entries: dict[tuple[int, int], Fraction] = {}
        for (i, j), comp in dual.sc.items():
            c = comp.get(k)
            if c:
                entries[(i, j)] = entries.get((i, j), Fraction(0)) + c
                entries[(j, i)] = entries.get((j, i), Fraction(0)) - c
        deltas.append(Tensor2(n, n, entries))
    return deltas


def dual_from_cobracket(deltas: list[Tensor2], basis=None) -> LieAlgebra:
    """Recover the dual structure constants; exact inverse of cobracket_from_dual."""
    if not deltas:
        raise ValueError("empty cobracket list")
    n = len(deltas)
    for k, d in enumerate(deltas):
        if d.dim_left != n or d.dim_right != n:
            raise ValueError("cobracket tensor shape mismatch")
        if not d.is_skew():
            raise ValueError(f"cobracket of basis vector {k} is not skew")
    sc: dict[tuple[int, int], dict[int, Fraction]] = {}
    for k, d in enumerate(deltas):
        for (i, j), c in d.entries.items():
            if i < j:
                sc.setdefault((i, j), {})[k] = c
    labels = tuple(basis) if basis is not None else None
    return LieAlgebra(n, labels, sc, check=False)


def delta_vec(deltas: list[Tensor2], v) -> Tensor2:
    """Δ extended linearly to an arbitrary vector."""
    n = deltas[0].dim_left
    out = Tensor2(n, n)
    for k, c in enumerate(v):
        if c != 0:
            out = out + deltas[k].scale(c)
    return out


def _eps(t: Tensor3) -> Tensor3:
    """x⊗y⊗z ↦ z⊗x⊗y."""
    d = t.dims
    return Tensor3((d[2], d[0], d[1]), {(c, a, b): v for (a, b, c), v in t.entries.items()})


def is_lie_coalgebra(deltas: list[Tensor2]) -> Certificate:
    """Skewness plus the co-Jacobi identity (Id+ε+ε²)(Id⊗Δ)Δ = 0 per basis vector."""
    n = len(deltas)
    for k, d in enumerate(deltas):
        if not d.is_skew():
            return Certificate(check="coalgebra", ok=False, where=(k,),
                               note="cobracket is not skew")
    first = None
    count = 0
    for k in range(n):
        t = Tensor3((n, n, n))
        for (i, j), c in deltas[k].entries.items():
            for (a, b), c2 in deltas[j].entries.items():
                t = t + Tensor3((n, n, n), {(i, a, b): c * c2})
        e1 = _eps(t)
        res = t + e1 + _eps(e1)
        if not res.is_zero():
            count += 1
            if first is None:
                first = ((k,), res)
    if first is None:
        return Certificate.passed("coalgebra")
    return Certificate.failed("coalgebra", first[0], residual_from_tensor(first[1]), count)


def is_reynolds_coalgebra(deltas: list[Tensor2], R: Mat) -> Certificate:
    """(R⊗R)Δ = (R⊗Id + Id⊗R − R⊗R)ΔR per basis vector."""
    n = len(deltas)
    ident = Mat.identity(n)
    first = None
    count = 0
    for k in range(n):
        delta_rk = delta_vec(deltas, R.col(k))
        lhs = tensor2_map(R, R, deltas[k])
        rhs = (
            tensor2_map(R, ident, delta_rk)
            + tensor2_map(ident, R, delta_rk)
            - tensor2_map(R, R, delta_rk)
        )
        res = lhs - rhs
        if not res.is_zero():
            count += 1
            if first is None:
                first = ((k,), res)
    if first is None:
        return Certificate.passed("reynolds-coalgebra")
    return Certificate.failed("reynolds-coalgebra", first[0],
                              residual_from_tensor(first[1]), count)


def cocycle_check(g: LieAlgebra, deltas: list[Tensor2]) -> Certificate:
    """Δ[x,y] = (ad_x⊗Id+Id⊗ad_x)Δy − (ad_y⊗Id+Id⊗ad_y)Δx over basis pairs."""
    n = g.dim
    ident = Mat.identity(n)
    first = None
    count = 0
    for i in range(n):
        ad_i = g.ad(i)
        for j in range(i + 1, n):
            ad_j = g.ad(j)
            lhs = delta_vec(deltas, g.bracket_basis(i, j))
            rhs = (
                tensor2_map(ad_i, ident, deltas[j])
                + tensor2_map(ident, ad_i, deltas[j])
                - tensor2_map(ad_j, ident, deltas[i])
                - tensor2_map(ident, ad_j, deltas[i])
            )
            res = lhs - rhs
            if not res.is_zero():
                count += 1
                if first is None:
                    first = ((i, j), res)
    if first is None:
        return Certificate.passed("cocycle")
    return Certificate.failed("cocycle", first[0], residual_from_tensor(first[1]), count)


def is_lie_bialgebra(g: LieAlgebra, dual: LieAlgebra) -> Certificate:
    """Jacobi on both sides plus the 1-cocycle condition."""
    parts = [
        Certificate.combine("jacobi-primal", [jacobi_check(g)]),
        Certificate.combine("jacobi-dual", [jacobi_check(dual)]),
        cocycle_check(g, cobracket_from_dual(dual)),
    ]
    return Certificate.combine("lie-bialgebra", parts)


class ReynoldsLieBialgebra:
    __slots__ = ("bialg", "R")

    def __init__(self, bialg: LieBialgebra, R: Mat, check: bool = True):
        if R.rows != bialg.g.dim or R.cols != bialg.g.dim:
            raise ValueError("operator shape does not match the bialgebra")
        self.bialg = bialg
        self.R = R
        if check:
            cert = is_reynolds_bialgebra(bialg, R)
            if not cert.ok:
                raise CheckFailed(cert)

    @classmethod
    def unchecked(cls, bialg, R) -> "ReynoldsLieBialgebra":
        return cls(bialg, R, check=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ReynoldsLieBialgebra)
            and self.bialg == other.bialg
            and self.R == other.R
        )


def is_reynolds_bialgebra(bialg: LieBialgebra, R: Mat) -> Certificate:
    """R Reynolds on g and −Rᵀ Reynolds on the dual (bialgebra axioms included)."""
    parts = [
        is_lie_bialgebra(bialg.g, bialg.dual),
        Certificate.combine("reynolds-primal", [is_reynolds(bialg.g, R)]),
        Certificate.combine("reynolds-dual",
                            [is_reynolds(bialg.dual, -R.transpose())]),
    ]
    return Certificate.combine("reynolds-bialgebra", parts)


def canonical_pair(rb: ReynoldsLieBialgebra) -> ReynoldsMatchedPair:
    """((g,R), (g*,−Rᵀ); ad*, ad-of-dual*) — the pair behind every equivalence."""
    g, dual = rb.bialg.g, rb.bialg.dual
    rho = Representation(g, dual.dim, coadjoint_rep(g).rho, labels=dual.basis, check=False)
    mu = Representation(dual, g.dim, coadjoint_rep(dual).rho, labels=g.basis, check=False)
    pair = MatchedPair.unchecked(g, dual, rho, mu)
    return ReynoldsMatchedPair.unchecked(pair, rb.R, -rb.R.transpose())


def drinfeld_double(rb: ReynoldsLieBialgebra) -> ReynoldsLieAlgebra:
    """g⋈g* with mixed bracket via the two coadjoint actions; operator R⊕(−Rᵀ)."""
    cert = is_reynolds_bialgebra(rb.bialg, rb.R)
    if not cert.ok:
        raise CheckFailed(cert)
    return reynolds_double(canonical_pair(rb))


def double_quasitriangular(rb: ReynoldsLieBialgebra) -> ReynoldsLieBialgebra:
    """The double as a Reynolds Lie bialgebra (D, D*_r, R⊕(−Rᵀ)).

    The bracket on D* is (−[ξ,η]_dual, [x,y]_g) blockwise: the first block
    of D* carries the negated dual bracket, the second carries g's bracket,
    mixed brackets vanish.
    """
    dd = drinfeld_double(rb)
    g, dual = rb.bialg.g, rb.bialg.dual
    n = g.dim
    sc: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), comp in dual.sc.items():
        sc[(i, j)] = {k: -c for k, c in comp.items()}
    for (i, j), comp in g.sc.items():
        sc[(n + i, n + j)] = {n + k: c for k, c in comp.items()}
    dual_of_double = LieAlgebra(2 * n, dual_basis(dd.L.basis), sc)
    return ReynoldsLieBialgebra(LieBialgebra(dd.L, dual_of_double), dd.R)


# ---------------------------------------------------------------------------
# coboundary theory
# ---------------------------------------------------------------------------

def coboundary_cobracket(g: LieAlgebra, r: Tensor2) -> list[Tensor2]:
    """Δ(e_k) = (ad_{e_k}⊗Id + Id⊗ad_{e_k}) r."""
    if r.dim_left != g.dim or r.dim_right != g.dim:
        raise ValueError("tensor must live on g⊗g")
    ident = Mat.identity(g.dim)
    out = []
    for k in range(g.dim):
        ad_k = g.ad(k)
        out.append(tensor2_map(ad_k, ident, r) + tensor2_map(ident, ad_k, r))
    return out


def coboundary_conditions(g: LieAlgebra, r: Tensor2) -> Certificate:
    """Invariance of r+σ(r) and ad-invariance of [[r,r]], per basis vector."""
    from .cybe import cybe_bracket

    n = g.dim
    ident = Mat.identity(n)
    sym = r + flip(r)
    first = None
    count = 0
    for k in range(n):
        ad_k = g.ad(k)
        res = tensor2_map(ad_k, ident, sym) + tensor2_map(ident, ad_k, sym)
        if not res.is_zero():
            count += 1
            if first is None:
                first = ((k,), res)
    if first is None:
        inv = Certificate.passed("symmetric-part-invariance")
    else:
        inv = Certificate.failed("symmetric-part-invariance", first[0],
                                 residual_from_tensor(first[1]), count)

    rr = cybe_bracket(g, r)
    first = None
    count = 0
    for k in range(n):
        ad_k = g.ad(k)
        res = (
            tensor3_map(ad_k, ident, ident, rr)
            + tensor3_map(ident, ad_k, ident, rr)
            + tensor3_map(ident, ident, ad_k, rr)
        )
        if not res.is_zero():
            count += 1
            if first is None:
                first = ((k,), res)
    if first is None:
        cy = Certificate.passed("cybe-bracket-invariance")
    else:
        cy = Certificate.failed("cybe-bracket-invariance", first[0],
                                residual_from_tensor(first[1]), count)
    return Certificate.combine("coboundary-conditions", [inv, cy])


def reynolds_coboundary_condition(g: LieAlgebra, R: Mat, r: Tensor2) -> Certificate:
    """The coboundary Reynolds criterion applied to (R⊗Id+Id⊗R)(r).

    Vanishing for every basis x is equivalent to −Rᵀ being a Reynolds
    operator on the dual algebra of the coboundary bialgebra.
    """
    n = g.dim
    ident = Mat.identity(n)
    s = tensor2_map(R, ident, r) + tensor2_map(ident, R, r)
    first = None
    count = 0
    for k in range(n):
        ad_rk = g.ad_vec(R.col(k))
        ad_k = g.ad(k)
        res = (
            tensor2_map(ad_rk, ident, s)
            + tensor2_map(ident, ad_rk, s)
            + tensor2_map(R @ ad_rk, ident, s)
            + tensor2_map(ident, R @ ad_rk, s)
            - tensor2_map(R @ ad_k, ident, s)
            - tensor2_map(ident, R @ ad_k, s)
        )
        if not res.is_zero():
            count += 1
            if first is None:
                first = ((k,), res)
    if first is None:
        return Certificate.passed("reynolds-coboundary")
    return Certificate.failed("reynolds-coboundary", first[0],
                              residual_from_tensor(first[1]), count)

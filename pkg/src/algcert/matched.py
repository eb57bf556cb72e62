"""Matched pairs of (Reynolds) Lie algebras, doubles and Manin triples.

A matched pair carries two algebras acting on each other compatibly; its
double g⋈h is a Lie algebra on g⊕h (g block first).  Manin triples live
inside one ambient quadratic Reynolds algebra and are described by
basis-index subsets, which keeps closure and isotropy exhaustively
checkable.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .certificates import Certificate, CheckFailed, residual_from_vec
from .exact import Mat, vadd, vbasis, vis_zero, vsub
from .lie import (
    BilinForm,
    LieAlgebra,
    Representation,
    coadjoint_rep,
    is_representation,
    jacobi_check,
)
from .reynolds import (
    QuadraticReynolds,
    ReynoldsLieAlgebra,
    compat_certificate,
    is_quadratic_reynolds,
    is_reynolds,
)


class MatchedPair:
    """(g, h; rho, mu): rho acts on h's space, mu on g's space."""

    __slots__ = ("g", "h", "rho", "mu")

    def __init__(self, g: LieAlgebra, h: LieAlgebra, rho: Representation,
                 mu: Representation, check: bool = True):
        if rho.algebra != g or rho.module_dim != h.dim:
            raise ValueError("rho must represent g on h's space")
        if mu.algebra != h or mu.module_dim != g.dim:
            raise ValueError("mu must represent h on g's space")
        self.g = g
        self.h = h
        self.rho = rho
        self.mu = mu
        if check:
            cert = is_matched_pair(g, h, rho, mu)
            if not cert.ok:
                raise CheckFailed(cert)

    @classmethod
    def unchecked(cls, g, h, rho, mu) -> "MatchedPair":
        return cls(g, h, rho, mu, check=False)

    @classmethod
    def trivial(cls, g: LieAlgebra, h: LieAlgebra) -> "MatchedPair":
        return cls(g, h, Representation.zero(g, h.dim, labels=h.basis),
                   Representation.zero(h, g.dim, labels=g.basis), check=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatchedPair)
            and self.g == other.g
            and self.h == other.h
            and self.rho == other.rho
            and self.mu == other.mu
        )


def is_matched_pair(g: LieAlgebra, h: LieAlgebra, rho: Representation,
                    mu: Representation) -> Certificate:
    """Representation validity, then both compatibility identities."""
    rep_g = is_representation(rho)
    rep_h = is_representation(mu)
    if not (rep_g.ok and rep_h.ok):
        return Certificate.combine(
            "matched-pair",
            [Certificate.combine("rho-representation", [rep_g]),
             Certificate.combine("mu-representation", [rep_h])],
            note="invalid action representation",
        )

    first1 = first2 = None
    c1 = c2 = 0
    for i in range(g.dim):
        x = vbasis(g.dim, i)
        rho_x = rho.rho[i]
        for a, b in combinations(range(h.dim), 2):
            xi, eta = vbasis(h.dim, a), vbasis(h.dim, b)
            lhs = rho_x.apply(h.bracket_basis(a, b))
            rhs = vadd(
                vadd(h.bracket(rho_x.apply(xi), eta), h.bracket(xi, rho_x.apply(eta))),
                vsub(
                    rho.rho_vec(mu.rho[b].apply(x)).apply(xi),
                    rho.rho_vec(mu.rho[a].apply(x)).apply(eta),
                ),
            )
            res = vsub(lhs, rhs)
            if not vis_zero(res):
                c1 += 1
                if first1 is None:
                    first1 = ((i, a, b), res)
    for a in range(h.dim):
        xi = vbasis(h.dim, a)
        mu_xi = mu.rho[a]
        for i, j in combinations(range(g.dim), 2):
            x, y = vbasis(g.dim, i), vbasis(g.dim, j)
            lhs = mu_xi.apply(g.bracket_basis(i, j))
            rhs = vadd(
                vadd(g.bracket(mu_xi.apply(x), y), g.bracket(x, mu_xi.apply(y))),
                vsub(
                    mu.rho_vec(rho.rho[j].apply(xi)).apply(x),
                    mu.rho_vec(rho.rho[i].apply(xi)).apply(y),
                ),
            )
            res = vsub(lhs, rhs)
            if not vis_zero(res):
                c2 += 1
                if first2 is None:
                    first2 = ((a, i, j), res)

    parts = [Certificate.combine("rho-representation", [rep_g]),
             Certificate.combine("mu-representation", [rep_h])]
    if first1 is None:
        parts.append(Certificate.passed("compat-on-h"))
    else:
        parts.append(Certificate.failed("compat-on-h", first1[0], residual_from_vec(first1[1]), c1))
    if first2 is None:
        parts.append(Certificate.passed("compat-on-g"))
    else:
        parts.append(Certificate.failed("compat-on-g", first2[0], residual_from_vec(first2[1]), c2))
    return Certificate.combine("matched-pair", parts)


def double(mp: MatchedPair) -> LieAlgebra:
    """g⋈h: [x+xi, y+eta] = ([x,y] + mu(xi)y - mu(eta)x) + ([xi,eta] + rho(x)eta - rho(y)xi)."""
    cert = is_matched_pair(mp.g, mp.h, mp.rho, mp.mu)
    if not cert.ok:
        raise CheckFailed(cert)
    n, m = mp.g.dim, mp.h.dim
    sc: dict[tuple[int, int], dict[int, Fraction]] = {}
    for key, comp in mp.g.sc.items():
        sc[key] = dict(comp)
    for (a, b), comp in mp.h.sc.items():
        sc[(n + a, n + b)] = {n + k: c for k, c in comp.items()}
    for i in range(n):
        for a in range(m):
            gpart = mp.mu.rho[a].col(i)  # mu(h_a) e_i, negated below
            hpart = mp.rho.rho[i].col(a)  # rho(e_i) h_a
            comp = {k: -c for k, c in enumerate(gpart) if c != 0}
            comp.update({n + k: c for k, c in enumerate(hpart) if c != 0})
            if comp:
                sc[(i, n + a)] = comp
    return LieAlgebra(n + m, mp.g.basis + mp.h.basis, sc)


class ReynoldsMatchedPair:
    __slots__ = ("pair", "Rg", "Rh")

    def __init__(self, pair: MatchedPair, Rg: Mat, Rh: Mat, check: bool = True):
        if Rg.rows != pair.g.dim or Rg.cols != pair.g.dim:
            raise ValueError("Rg shape does not match g")
        if Rh.rows != pair.h.dim or Rh.cols != pair.h.dim:
            raise ValueError("Rh shape does not match h")
        self.pair = pair
        self.Rg = Rg
        self.Rh = Rh
        if check:
            cert = is_reynolds_matched_pair(self)
            if not cert.ok:
                raise CheckFailed(cert)

    @classmethod
    def unchecked(cls, pair, Rg, Rh) -> "ReynoldsMatchedPair":
        return cls(pair, Rg, Rh, check=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ReynoldsMatchedPair)
            and self.pair == other.pair
            and self.Rg == other.Rg
            and self.Rh == other.Rh
        )


def is_reynolds_matched_pair(rmp: ReynoldsMatchedPair) -> Certificate:
    """Matched pair, both operators Reynolds, and the two cross compatibilities."""
    mp = rmp.pair
    parts = [
        is_matched_pair(mp.g, mp.h, mp.rho, mp.mu),
        Certificate.combine("reynolds-g", [is_reynolds(mp.g, rmp.Rg)]),
        Certificate.combine("reynolds-h", [is_reynolds(mp.h, rmp.Rh)]),
        compat_certificate(rmp.Rg, mp.rho, rmp.Rh, name="cross-compat-rho"),
        compat_certificate(rmp.Rh, mp.mu, rmp.Rg, name="cross-compat-mu"),
    ]
    return Certificate.combine("reynolds-matched-pair", parts)


def reynolds_double(rmp: ReynoldsMatchedPair) -> ReynoldsLieAlgebra:
    """The double with the block-diagonal operator Rg⊕Rh."""
    cert = is_reynolds_matched_pair(rmp)
    if not cert.ok:
        raise CheckFailed(cert)
    return ReynoldsLieAlgebra(double(rmp.pair), Mat.block_diag(rmp.Rg, rmp.Rh))


def induced_matched_pair(rmp: ReynoldsMatchedPair) -> MatchedPair:
    """The induced pair (g_R, h_R'; rho', mu') of a Reynolds matched pair."""
    from .reynolds import induced_algebra

    cert = is_reynolds_matched_pair(rmp)
    if not cert.ok:
        raise CheckFailed(cert)
    mp, Rg, Rh = rmp.pair, rmp.Rg, rmp.Rh
    g_ind = induced_algebra(ReynoldsLieAlgebra(mp.g, Rg, check=False)).L
    h_ind = induced_algebra(ReynoldsLieAlgebra(mp.h, Rh, check=False)).L
    rho_new = []
    for i in range(mp.g.dim):
        rho_rx = mp.rho.rho_vec(Rg.apply(vbasis(mp.g.dim, i)))
        rho_new.append(mp.rho.rho[i] @ Rh + rho_rx - rho_rx @ Rh)
    mu_new = []
    for a in range(mp.h.dim):
        mu_rxi = mp.mu.rho_vec(Rh.apply(vbasis(mp.h.dim, a)))
        mu_new.append(mp.mu.rho[a] @ Rg + mu_rxi - mu_rxi @ Rg)
    rho2 = Representation(g_ind, mp.h.dim, rho_new, labels=mp.rho.labels, check=False)
    mu2 = Representation(h_ind, mp.g.dim, mu_new, labels=mp.mu.labels, check=False)
    return MatchedPair(g_ind, h_ind, rho2, mu2)


class ManinTripleReynolds:
    """A quadratic Reynolds algebra split into two isotropic index blocks."""

    __slots__ = ("G", "part_g", "part_h")

    def __init__(self, G: QuadraticReynolds, part_g, part_h, check: bool = True):
        self.G = G
        self.part_g = tuple(part_g)
        self.part_h = tuple(part_h)
        if check:
            cert = is_manin_triple(G.base.L, G.base.R, G.S, self.part_g, self.part_h)
            if not cert.ok:
                raise CheckFailed(cert)

    @classmethod
    def unchecked(cls, G, part_g, part_h) -> "ManinTripleReynolds":
        return cls(G, part_g, part_h, check=False)


def _closure_cert(L: LieAlgebra, R: Mat, part: tuple[int, ...], name: str) -> Certificate:
    inside = set(part)
    first = None
    count = 0
    for i in part:
        for j in part:
            if i >= j:
                continue
            out = L.bracket_basis(i, j)
            bad = {k: c for k, c in enumerate(out) if c != 0 and k not in inside}
            if bad:
                count += 1
                if first is None:
                    first = ((i, j), tuple(((k,), c) for k, c in sorted(bad.items())))
    for i in part:
        col = R.col(i)
        bad = {k: c for k, c in enumerate(col) if c != 0 and k not in inside}
        if bad:
            count += 1
            if first is None:
                first = ((i,), tuple(((k,), c) for k, c in sorted(bad.items())))
    if first is None:
        return Certificate.passed(name)
    return Certificate.failed(name, first[0], first[1], count)


def _isotropy_cert(S: BilinForm, part: tuple[int, ...], name: str) -> Certificate:
    first = None
    count = 0
    for i in part:
        for j in part:
            val = S.gram.entries[i][j]
            if val != 0:
                count += 1
                if first is None:
                    first = ((i, j), (((i, j), val),))
    if first is None:
        return Certificate.passed(name)
    return Certificate.failed(name, first[0], first[1], count)


def is_manin_triple(L: LieAlgebra, R: Mat, S: BilinForm,
                    part_g, part_h) -> Certificate:
    """Quadratic Reynolds ambient + partition + closure + isotropy."""
    part_g, part_h = tuple(part_g), tuple(part_h)
    parts = [jacobi_check(L),
             Certificate.combine("reynolds", [is_reynolds(L, R)])]
    parts.append(is_quadratic_reynolds(ReynoldsLieAlgebra.unchecked(L, R), S))
    if sorted(part_g + part_h) == list(range(L.dim)):
        parts.append(Certificate.passed("partition"))
    else:
        parts.append(Certificate(check="partition", ok=False,
                                 note="index parts do not partition the basis"))
    parts.append(_closure_cert(L, R, part_g, "closure-g"))
    parts.append(_closure_cert(L, R, part_h, "closure-h"))
    parts.append(_isotropy_cert(S, part_g, "isotropy-g"))
    parts.append(_isotropy_cert(S, part_h, "isotropy-h"))
    return Certificate.combine("manin-triple", parts)


def standard_pairing_form(n: int) -> BilinForm:
    """S(x+xi, y+eta) = xi(y) + eta(x) on g⊕g* coordinates."""
    gram = Mat.block_diag(Mat.zeros(n, n), Mat.zeros(n, n))
    rows = [list(r) for r in gram.entries]
    for i in range(n):
        rows[i][n + i] = Fraction(1)
        rows[n + i][i] = Fraction(1)
    return BilinForm(Mat(rows))


def _require_dual_shape(rmp: ReynoldsMatchedPair) -> None:
    mp = rmp.pair
    if mp.h.dim != mp.g.dim:
        raise ValueError("dual-shaped pair needs h.dim == g.dim")
    ad_star = coadjoint_rep(mp.g)
    if tuple(mp.rho.rho) != tuple(ad_star.rho):
        raise ValueError("rho is not the coadjoint action of g under the canonical pairing")
    coad_h = coadjoint_rep(mp.h)
    if tuple(mp.mu.rho) != tuple(coad_h.rho):
        raise ValueError("mu is not the coadjoint action of h under the canonical pairing")
    if rmp.Rh != -rmp.Rg.transpose():
        raise ValueError("dual-shaped pair needs Rh == -Rgᵀ")


def matched_to_manin(rmp: ReynoldsMatchedPair) -> ManinTripleReynolds:
    """Dual-shaped Reynolds matched pair -> Manin triple on g⊕g*."""
    _require_dual_shape(rmp)
    cert = is_reynolds_matched_pair(rmp)
    if not cert.ok:
        raise CheckFailed(cert)
    n = rmp.pair.g.dim
    D = double(rmp.pair)
    op = Mat.block_diag(rmp.Rg, rmp.Rh)
    S = standard_pairing_form(n)
    ambient = QuadraticReynolds(ReynoldsLieAlgebra(D, op), S)
    return ManinTripleReynolds(ambient, tuple(range(n)), tuple(range(n, 2 * n)))


def _restrict_algebra(L: LieAlgebra, offset: int, n: int) -> LieAlgebra:
    sc = {}
    for (i, j), comp in L.sc.items():
        if offset <= i < offset + n and offset <= j < offset + n:
            kept = {k - offset: c for k, c in comp.items()
                    if offset <= k < offset + n}
            if kept:
                sc[(i - offset, j - offset)] = kept
    return LieAlgebra(n, L.basis[offset:offset + n], sc)


def manin_to_matched(mt: ManinTripleReynolds) -> ReynoldsMatchedPair:
    """Extract the two Reynolds subalgebras and the induced dual actions."""
    L = mt.G.base.L
    n = L.dim // 2
    if mt.part_g != tuple(range(n)) or mt.part_h != tuple(range(n, 2 * n)):
        raise ValueError("standard-form triple expected: contiguous g then g* blocks")
    if mt.G.S != standard_pairing_form(n):
        raise ValueError("standard-form triple expected: the canonical pairing form")
    cert = is_manin_triple(L, mt.G.base.R, mt.G.S, mt.part_g, mt.part_h)
    if not cert.ok:
        raise CheckFailed(cert)
    g = _restrict_algebra(L, 0, n)
    h = _restrict_algebra(L, n, n)
    rho_mats = []
    for i in range(n):
        cols = [L.bracket_basis(i, n + a)[n:] for a in range(n)]
        rho_mats.append(Mat.from_cols(cols))
    mu_mats = []
    for a in range(n):
        cols = [tuple(-c for c in L.bracket_basis(i, n + a)[:n]) for i in range(n)]
        mu_mats.append(Mat.from_cols(cols))
    rho = Representation(g, n, rho_mats, labels=h.basis, check=False)
    mu = Representation(h, n, mu_mats, labels=g.basis, check=False)
    Rg = mt.G.base.R.submatrix(range(n), range(n))
    Rh = mt.G.base.R.submatrix(range(n, 2 * n), range(n, 2 * n))
    return ReynoldsMatchedPair(MatchedPair(g, h, rho, mu), Rg, Rh)

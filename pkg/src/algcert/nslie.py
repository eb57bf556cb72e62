"""NS-Lie algebras: two products, one skew, generalizing Lie and pre-Lie.

The product x◁y (stored as a full table `left`) carries no symmetry; x▷y
(stored one-sided as `wedge`) is skew.  The commutator
[x,y] = x◁y - y◁x + x▷y is a Lie bracket whenever the two NS identities
hold.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .certificates import Certificate, CheckFailed, residual_from_vec
from .exact import Mat, Vec, ZERO, rat, vadd, vbasis, vis_zero, vsub, vzero
from .lie import LieAlgebra, default_basis
from .reynolds import ReynoldsLieAlgebra, ReynoldsRep

FullTable = dict[tuple[int, int], dict[int, Fraction]]


def _clean_full(dim: int, table) -> FullTable:
    out: FullTable = {}
    for (i, j), comp in table.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise ValueError(f"product key ({i},{j}) out of range")
        cleaned = {int(k): rat(c) for k, c in comp.items() if rat(c) != 0}
        for k in cleaned:
            if not 0 <= k < dim:
                raise ValueError(f"product output index {k} out of range")
        if cleaned:
            out[(i, j)] = cleaned
    return out


def _clean_skew(dim: int, table) -> FullTable:
    out = _clean_full(dim, table)
    for i, j in out:
        if i >= j:
            raise ValueError(f"skew product key ({i},{j}) must satisfy i<j")
    return out


class NSLieAlgebra:
    __slots__ = ("dim", "basis", "left", "wedge")

    def __init__(self, dim: int, basis=None, left=None, wedge=None, check: bool = True):
        self.dim = dim
        self.basis = tuple(basis) if basis is not None else default_basis(dim)
        if len(self.basis) != dim:
            raise ValueError("basis label count must equal dim")
        self.left = _clean_full(dim, left or {})
        self.wedge = _clean_skew(dim, wedge or {})
        if check:
            cert = is_nslie(self)
            if not cert.ok:
                raise CheckFailed(cert)

    @classmethod
    def unchecked(cls, dim, basis=None, left=None, wedge=None) -> "NSLieAlgebra":
        return cls(dim, basis, left, wedge, check=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NSLieAlgebra)
            and self.dim == other.dim
            and self.basis == other.basis
            and self.left == other.left
            and self.wedge == other.wedge
        )

    def left_basis(self, i: int, j: int) -> Vec:
        comp = self.left.get((i, j))
        out = [ZERO] * self.dim
        if comp:
            for k, c in comp.items():
                out[k] = c
        return tuple(out)

    def wedge_basis(self, i: int, j: int) -> Vec:
        if i == j:
            return vzero(self.dim)
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        comp = self.wedge.get((i, j))
        out = [ZERO] * self.dim
        if comp:
            for k, c in comp.items():
                out[k] = sign * c
        return tuple(out)

    def left_prod(self, x: Vec, y: Vec) -> Vec:
        out = [ZERO] * self.dim
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if b == 0:
                    continue
                for k, c in enumerate(self.left_basis(i, j)):
                    if c != 0:
                        out[k] += a * b * c
        return tuple(out)

    def wedge_prod(self, x: Vec, y: Vec) -> Vec:
        out = [ZERO] * self.dim
        for (i, j), comp in self.wedge.items():
            coeff = x[i] * y[j] - x[j] * y[i]
            if coeff == 0:
                continue
            for k, c in comp.items():
                out[k] += coeff * c
        return tuple(out)

    def comm(self, x: Vec, y: Vec) -> Vec:
        """[x,y] = x◁y - y◁x + x▷y."""
        return vadd(vsub(self.left_prod(x, y), self.left_prod(y, x)), self.wedge_prod(x, y))


def is_nslie(A: NSLieAlgebra) -> Certificate:
    """Both NS identities over all ordered basis triples."""
    n = A.dim
    first1 = first2 = None
    c1 = c2 = 0
    basis = [vbasis(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = basis[i], basis[j], basis[k]
                r1 = vadd(
                    vsub(
                        vsub(
                            A.left_prod(A.left_prod(x, y), z),
                            A.left_prod(x, A.left_prod(y, z)),
                        ),
                        vsub(
                            A.left_prod(A.left_prod(y, x), z),
                            A.left_prod(y, A.left_prod(x, z)),
                        ),
                    ),
                    A.left_prod(A.wedge_prod(x, y), z),
                )
                if not vis_zero(r1):
                    c1 += 1
                    if first1 is None:
                        first1 = ((i, j, k), r1)
                r2 = vzero(n)
                for (u, v, w) in ((x, y, z), (y, z, x), (z, x, y)):
                    r2 = vadd(r2, A.wedge_prod(u, A.comm(v, w)))
                    r2 = vadd(r2, A.left_prod(u, A.wedge_prod(v, w)))
                if not vis_zero(r2):
                    c2 += 1
                    if first2 is None:
                        first2 = ((i, j, k), r2)
    parts = []
    if first1 is None:
        parts.append(Certificate.passed("ns-identity-1"))
    else:
        parts.append(
            Certificate.failed("ns-identity-1", first1[0], residual_from_vec(first1[1]), c1)
        )
    if first2 is None:
        parts.append(Certificate.passed("ns-identity-2"))
    else:
        parts.append(
            Certificate.failed("ns-identity-2", first2[0], residual_from_vec(first2[1]), c2)
        )
    return Certificate.combine("nslie", parts)


def ns_from_reynolds(A: ReynoldsLieAlgebra) -> NSLieAlgebra:
    """x◁y = [Rx,y], x▷y = -[Rx,Ry]."""
    L, R = A.L, A.R
    n = L.dim
    left: FullTable = {}
    wedge: FullTable = {}
    for i in range(n):
        for j in range(n):
            out = L.bracket(R.apply(vbasis(n, i)), vbasis(n, j))
            comp = {k: c for k, c in enumerate(out) if c != 0}
            if comp:
                left[(i, j)] = comp
    for i, j in combinations(range(n), 2):
        out = L.bracket(R.apply(vbasis(n, i)), R.apply(vbasis(n, j)))
        comp = {k: -c for k, c in enumerate(out) if c != 0}
        if comp:
            wedge[(i, j)] = comp
    return NSLieAlgebra(n, L.basis, left, wedge, check=False)


def ns_commutator(A: NSLieAlgebra) -> LieAlgebra:
    """The commutator Lie algebra of a (valid) NS-Lie algebra."""
    sc: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i, j in combinations(range(A.dim), 2):
        out = A.comm(vbasis(A.dim, i), vbasis(A.dim, j))
        comp = {k: c for k, c in enumerate(out) if c != 0}
        if comp:
            sc[(i, j)] = comp
    return LieAlgebra(A.dim, A.basis, sc)


class NSRep:
    __slots__ = ("base", "module_dim", "varrho", "mu", "nu", "labels")

    def __init__(self, base: NSLieAlgebra, module_dim: int, varrho, mu, nu,
                 labels=None, check: bool = True):
        self.base = base
        self.module_dim = module_dim
        self.varrho = tuple(varrho)
        self.mu = tuple(mu)
        self.nu = tuple(nu)
        self.labels = tuple(labels) if labels is not None else default_basis(module_dim, "w")
        for group in (self.varrho, self.mu, self.nu):
            if len(group) != base.dim:
                raise ValueError("need one matrix per basis vector")
            for m in group:
                if m.rows != module_dim or m.cols != module_dim:
                    raise ValueError("action matrix shape mismatch")
        if check:
            cert = is_ns_rep(self)
            if not cert.ok:
                raise CheckFailed(cert)

    @classmethod
    def unchecked(cls, base, module_dim, varrho, mu, nu, labels=None) -> "NSRep":
        return cls(base, module_dim, varrho, mu, nu, labels, check=False)


def _lin(mats, v: Vec, module_dim: int) -> Mat:
    out = Mat.zeros(module_dim, module_dim)
    for i, c in enumerate(v):
        if c != 0:
            out = out + mats[i].scale(c)
    return out


def is_ns_rep(rep: NSRep) -> Certificate:
    """The three NS-representation identities over all basis pairs."""
    A, md = rep.base, rep.module_dim
    n = A.dim
    results = {"ns-rep-1": None, "ns-rep-2": None, "ns-rep-3": None}
    counts = {"ns-rep-1": 0, "ns-rep-2": 0, "ns-rep-3": 0}
    basis = [vbasis(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            x, y = basis[i], basis[j]
            vr_x, vr_y = rep.varrho[i], rep.varrho[j]
            mu_x, mu_y = rep.mu[i], rep.mu[j]
            nu_x, nu_y = rep.nu[i], rep.nu[j]
            lw = A.wedge_prod(x, y)
            ll = A.left_prod(x, y)
            lr = A.left_prod(y, x)

            d1 = _lin(rep.mu, lw, md) - (
                mu_x @ mu_y - mu_y @ mu_x - _lin(rep.mu, ll, md) + _lin(rep.mu, lr, md)
            )
            d2 = _lin(rep.nu, ll, md) - (
                mu_x @ nu_y - nu_y @ mu_x + nu_y @ nu_x - nu_y @ vr_x
            )
            d3 = _lin(rep.nu, lw, md) - (
                mu_y @ vr_x - vr_x @ mu_y + vr_x @ nu_y - vr_y @ nu_x
                + vr_y @ vr_x - vr_x @ vr_y + vr_y @ mu_x - mu_x @ vr_y
                + _lin(rep.varrho, A.comm(x, y), md)
            )
            for name, diff in (("ns-rep-1", d1), ("ns-rep-2", d2), ("ns-rep-3", d3)):
                if not diff.is_zero():
                    counts[name] += 1
                    if results[name] is None:
                        results[name] = ((i, j), diff)
    parts = []
    from .certificates import residual_from_mat

    for name in ("ns-rep-1", "ns-rep-2", "ns-rep-3"):
        hit = results[name]
        if hit is None:
            parts.append(Certificate.passed(name))
        else:
            parts.append(Certificate.failed(name, hit[0], residual_from_mat(hit[1]), counts[name]))
    return Certificate.combine("ns-rep", parts)


def regular_rep(A: NSLieAlgebra) -> NSRep:
    """(G; Ad, left-◁, right-◁): Ad_x y = x▷y, mu(x)y = x◁y, nu(x)y = y◁x."""
    n = A.dim
    varrho = [Mat.from_cols([A.wedge_basis(i, j) for j in range(n)]) for i in range(n)]
    mu = [Mat.from_cols([A.left_basis(i, j) for j in range(n)]) for i in range(n)]
    nu = [Mat.from_cols([A.left_basis(j, i) for j in range(n)]) for i in range(n)]
    return NSRep(A, n, varrho, mu, nu, labels=A.basis, check=False)


def ns_semidirect(rep: NSRep) -> NSLieAlgebra:
    """Semidirect product NS-Lie algebra on G⊕W."""
    cert = is_ns_rep(rep)
    if not cert.ok:
        raise CheckFailed(cert)
    A, m = rep.base, rep.module_dim
    if m == 0:
        return A
    n = A.dim
    left: FullTable = {k: dict(v) for k, v in A.left.items()}
    wedge: FullTable = {k: dict(v) for k, v in A.wedge.items()}
    for i in range(n):
        for b in range(m):
            col = rep.mu[i].col(b)  # e_i ◁ w_b
            comp = {n + k: c for k, c in enumerate(col) if c != 0}
            if comp:
                left[(i, n + b)] = comp
            col = rep.nu[i].col(b)  # w_b ◁ e_i
            comp = {n + k: c for k, c in enumerate(col) if c != 0}
            if comp:
                left[(n + b, i)] = comp
            col = rep.varrho[i].col(b)  # e_i ▷ w_b, skew storage needs i < n+b
            comp = {n + k: c for k, c in enumerate(col) if c != 0}
            if comp:
                wedge[(i, n + b)] = comp
    return NSLieAlgebra(n + m, A.basis + rep.labels, left, wedge, check=False)


def ns_rep_from_reynolds_rep(rr: ReynoldsRep) -> NSRep:
    """varrho(x) = -rho(Rx)T, mu(x) = rho(Rx), nu(x) = -rho(x)T on the induced NS-Lie algebra."""
    from .reynolds import is_reynolds_rep

    cert = is_reynolds_rep(rr)
    if not cert.ok:
        raise CheckFailed(cert)
    base = ns_from_reynolds(rr.base)
    L, R, T = rr.base.L, rr.base.R, rr.T
    n = L.dim
    varrho = []
    mu = []
    nu = []
    for i in range(n):
        rho_rx = rr.rep.rho_vec(R.apply(vbasis(n, i)))
        varrho.append(-(rho_rx @ T))
        mu.append(rho_rx)
        nu.append(-(rr.rep.rho[i] @ T))
    return NSRep(base, rr.rep.module_dim, varrho, mu, nu, labels=rr.rep.labels, check=False)

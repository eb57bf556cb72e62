"""Lie algebras by exact structure constants, representations and bilinear forms.

Structure constants are stored sparsely for i<j only; the bracket is skew
by reconstruction, so [e_j,e_i] = -[e_i,e_j] and [e_i,e_i] = 0 hold by
construction.  Checked constructors enforce the Jacobi identity; check
operations accept unchecked data so they can report violations.

Composite spaces always order blocks first factor then second factor.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .certificates import Certificate, CheckFailed, residual_from_vec
from .exact import (
    Mat,
    Vec,
    ZERO,
    rat,
    vadd,
    vbasis,
    vis_zero,
    vzero,
)

ScTable = dict[tuple[int, int], dict[int, Fraction]]


def _clean_sc(dim: int, sc) -> ScTable:
    """Normalize a structure-constant table: i<j keys, no stored zeros."""
    out: ScTable = {}
    for (i, j), comp in sc.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise ValueError(f"bracket key ({i},{j}) out of range for dim {dim}")
        if i >= j:
            raise ValueError(f"bracket key ({i},{j}) must satisfy i<j (skew storage)")
        cleaned = {}
        for k, c in comp.items():
            c = rat(c)
            if not 0 <= int(k) < dim:
                raise ValueError(f"bracket output index {k} out of range")
            if c != 0:
                cleaned[int(k)] = c
        if cleaned:
            out[(i, j)] = cleaned
    return out


def default_basis(dim: int, prefix: str = "e") -> tuple[str, ...]:
    return tuple(f"{prefix}{k}" for k in range(dim))


def dual_basis(basis: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(f"{b}*" for b in basis)


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q given by structure constants."""

    __slots__ = ("dim", "basis", "sc")

    def __init__(self, dim: int, basis=None, sc=None, check: bool = True):
        self.dim = dim
        self.basis = tuple(basis) if basis is not None else default_basis(dim)
        if len(self.basis) != dim:
            raise ValueError("basis label count must equal dim")
        self.sc = _clean_sc(dim, sc or {})
        if check:
            cert = jacobi_check(self)
            if not cert.ok:
                raise CheckFailed(cert)

    @classmethod
    def unchecked(cls, dim: int, basis=None, sc=None) -> "LieAlgebra":
        return cls(dim, basis, sc, check=False)

    @classmethod
    def abelian(cls, dim: int, basis=None) -> "LieAlgebra":
        return cls(dim, basis, {})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieAlgebra)
            and self.dim == other.dim
            and self.basis == other.basis
            and self.sc == other.sc
        )

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, basis={self.basis})"

    def bracket_basis(self, i: int, j: int) -> Vec:
        """[e_i, e_j] as a coordinate vector."""
        if i == j:
            return vzero(self.dim)
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        comp = self.sc.get((i, j))
        out = [ZERO] * self.dim
        if comp:
            for k, c in comp.items():
                out[k] = sign * c
        return tuple(out)

    def bracket(self, x: Vec, y: Vec) -> Vec:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector dimension does not match the algebra")
        out = [ZERO] * self.dim
        for (i, j), comp in self.sc.items():
            coeff = x[i] * y[j] - x[j] * y[i]
            if coeff == 0:
                continue
            for k, c in comp.items():
                out[k] += coeff * c
        return tuple(out)

    def ad(self, i: int) -> Mat:
        """Adjoint-action matrix of e_i; columns are [e_i, e_j]."""
        return Mat.from_cols([self.bracket_basis(i, j) for j in range(self.dim)])

    def ad_vec(self, x: Vec) -> Mat:
        m = Mat.zeros(self.dim, self.dim)
        for i, c in enumerate(x):
            if c != 0:
                m = m + self.ad(i).scale(c)
        return m


def bracket(L: LieAlgebra, x: Vec, y: Vec) -> Vec:
    return L.bracket(x, y)


def jacobi_check(L: LieAlgebra) -> Certificate:
    """[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0 for all i<j<k."""
    first = None
    count = 0
    for i, j, k in combinations(range(L.dim), 3):
        ei, ej, ek = vbasis(L.dim, i), vbasis(L.dim, j), vbasis(L.dim, k)
        res = vadd(
            vadd(L.bracket(L.bracket(ei, ej), ek), L.bracket(L.bracket(ej, ek), ei)),
            L.bracket(L.bracket(ek, ei), ej),
        )
        if not vis_zero(res):
            count += 1
            if first is None:
                first = ((i, j, k), res)
    if first is None:
        return Certificate.passed("jacobi")
    return Certificate.failed("jacobi", first[0], residual_from_vec(first[1]), count)


class Representation:
    """Matrices rho(e_i) acting on a module space W."""

    __slots__ = ("algebra", "module_dim", "rho", "labels")

    def __init__(self, algebra: LieAlgebra, module_dim: int, rho, labels=None, check: bool = True):
        self.algebra = algebra
        self.module_dim = module_dim
        self.rho = tuple(rho)
        self.labels = tuple(labels) if labels is not None else default_basis(module_dim, "w")
        if len(self.rho) != algebra.dim:
            raise ValueError("need one matrix per basis vector of the algebra")
        for m in self.rho:
            if m.rows != module_dim or m.cols != module_dim:
                raise ValueError("representation matrix shape mismatch")
        if len(self.labels) != module_dim:
            raise ValueError("module label count must equal module_dim")
        if check:
            cert = is_representation(self)
            if not cert.ok:
                raise CheckFailed(cert)

    @classmethod
    def unchecked(cls, algebra, module_dim, rho, labels=None) -> "Representation":
        return cls(algebra, module_dim, rho, labels, check=False)

    @classmethod
    def zero(cls, algebra: LieAlgebra, module_dim: int, labels=None) -> "Representation":
        z = Mat.zeros(module_dim, module_dim)
        return cls(algebra, module_dim, [z] * algebra.dim, labels, check=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Representation)
            and self.algebra == other.algebra
            and self.module_dim == other.module_dim
            and self.rho == other.rho
        )

    def rho_vec(self, x: Vec) -> Mat:
        """rho extended linearly to an arbitrary vector of the algebra."""
        m = Mat.zeros(self.module_dim, self.module_dim)
        for i, c in enumerate(x):
            if c != 0:
                m = m + self.rho[i].scale(c)
        return m


def is_representation(rep: Representation) -> Certificate:
    """rho([e_i,e_j]) == rho(e_i)rho(e_j) − rho(e_j)rho(e_i) for all i<j."""
    L = rep.algebra
    first = None
    count = 0
    for i, j in combinations(range(L.dim), 2):
        lhs = rep.rho_vec(L.bracket_basis(i, j))
        rhs = rep.rho[i] @ rep.rho[j] - rep.rho[j] @ rep.rho[i]
        diff = lhs - rhs
        if not diff.is_zero():
            count += 1
            if first is None:
                first = ((i, j), diff)
    if first is None:
        return Certificate.passed("representation")
    from .certificates import residual_from_mat

    return Certificate.failed("representation", first[0], residual_from_mat(first[1]), count)


def adjoint_rep(L: LieAlgebra) -> Representation:
    return Representation(L, L.dim, [L.ad(i) for i in range(L.dim)],
                          labels=L.basis, check=False)


def coadjoint_rep(L: LieAlgebra) -> Representation:
    """ad*(x) = −ad(x)ᵀ on dual coordinates."""
    return Representation(L, L.dim, [-L.ad(i).transpose() for i in range(L.dim)],
                          labels=dual_basis(L.basis), check=False)


def dual_rep(rep: Representation) -> Representation:
    """rho*(e_i) = −rho(e_i)ᵀ on W*."""
    return Representation(
        rep.algebra,
        rep.module_dim,
        [-m.transpose() for m in rep.rho],
        labels=dual_basis(rep.labels),
        check=False,
    )


def semidirect(L: LieAlgebra, rep: Representation) -> LieAlgebra:
    """Semidirect product on g⊕W: [x+u, y+v] = [x,y] + rho(x)v − rho(y)u."""
    cert = is_representation(rep)
    if not cert.ok:
        raise CheckFailed(cert)
    n, m = L.dim, rep.module_dim
    sc: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), comp in L.sc.items():
        sc[(i, j)] = dict(comp)
    for i in range(n):
        for a in range(m):
            col = rep.rho[i].col(a)  # rho(e_i) w_a
            comp = {n + k: c for k, c in enumerate(col) if c != 0}
            if comp:
                sc[(i, n + a)] = comp
    return LieAlgebra(n + m, L.basis + rep.labels, sc, check=False)


class BilinForm:
    """Symmetric bilinear form by its Gram matrix."""

    __slots__ = ("gram",)

    def __init__(self, gram: Mat):
        if not gram.is_symmetric():
            raise ValueError("gram matrix must be symmetric")
        self.gram = gram

    def __eq__(self, other) -> bool:
        return isinstance(other, BilinForm) and self.gram == other.gram

    @property
    def dim(self) -> int:
        return self.gram.rows

    def eval(self, x: Vec, y: Vec) -> Fraction:
        return _form_eval(self.gram, x, y)

    def is_nondegenerate(self) -> bool:
        return self.gram.det() != 0


def _form_eval(gram: Mat, x: Vec, y: Vec) -> Fraction:
    gy = gram.apply(y)
    return sum((a * b for a, b in zip(x, gy)), ZERO)


def is_invariant_form(L: LieAlgebra, S: BilinForm) -> Certificate:
    """S([e_i,e_j],e_k) + S(e_j,[e_i,e_k]) = 0 over all basis triples."""
    if S.dim != L.dim:
        raise ValueError("form dimension does not match the algebra")
    first = None
    count = 0
    for i in range(L.dim):
        for j in range(L.dim):
            for k in range(L.dim):
                ej = vbasis(L.dim, j)
                ek = vbasis(L.dim, k)
                val = _form_eval(S.gram, L.bracket_basis(i, j), ek) + _form_eval(
                    S.gram, ej, L.bracket_basis(i, k)
                )
                if val != 0:
                    count += 1
                    if first is None:
                        first = ((i, j, k), val)
    if first is None:
        return Certificate.passed("invariant-form")
    return Certificate.failed("invariant-form", first[0], (((first[0]), first[1]),), count)


def is_quadratic(L: LieAlgebra, S: BilinForm) -> Certificate:
    """Invariance plus nondegeneracy (exact determinant ≠ 0)."""
    inv = is_invariant_form(L, S)
    if S.gram.det() == 0:
        nd = Certificate(check="nondegenerate", ok=False, note="gram determinant is 0")
    else:
        nd = Certificate.passed("nondegenerate")
    return Certificate.combine("quadratic", [inv, nd])


def s_sharp(S: BilinForm) -> Mat:
    """The gram matrix viewed as the map g→g*, x ↦ S(x,·)."""
    if S.gram.det() == 0:
        raise ValueError("degenerate form has no musical isomorphism")
    return S.gram


def i_s(S: BilinForm) -> Mat:
    """Inverse musical map g*→g (called I_S below the r-matrix pipeline)."""
    if S.gram.det() == 0:
        raise ValueError("degenerate form has no musical isomorphism")
    return S.gram.inverse()

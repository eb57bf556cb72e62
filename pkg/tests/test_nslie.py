import pytest

from algcert.certificates import CheckFailed
from algcert.exact import Mat, vec
from algcert.lie import jacobi_check
from algcert.nslie import (
    NSLieAlgebra,
    NSRep,
    is_ns_rep,
    is_nslie,
    ns_commutator,
    ns_from_reynolds,
    ns_rep_from_reynolds_rep,
    ns_semidirect,
    regular_rep,
)
from algcert.reynolds import (
    ReynoldsLieAlgebra,
    induced_algebra,
    reynolds_adjoint_rep,
)


def test_pure_wedge_is_lie_bracket(sl2):
    ns = NSLieAlgebra(3, sl2.basis, {}, sl2.sc)
    assert is_nslie(ns).ok
    assert ns_commutator(ns).sc == sl2.sc


def test_pure_left_is_prelie():
    # associative product e0*e0 = e0 has vanishing associator
    ns = NSLieAlgebra(2, None, {(0, 0): {0: 1}}, {})
    assert is_nslie(ns).ok


def test_non_prelie_left_fails():
    left = {(0, 0): {1: 1}, (1, 0): {0: 1}}
    ns = NSLieAlgebra.unchecked(2, None, left, {})
    cert = is_nslie(ns)
    assert not cert.ok
    bad = cert.first_failure()
    assert bad.check == "ns-identity-1"


def test_ns_from_reynolds_values(sl2_reynolds):
    ns = ns_from_reynolds(sl2_reynolds)
    assert is_nslie(ns).ok
    # H <| Y = [2X, Y] = 2H  and  H |> Y = -[2X, -H] = -4X
    assert ns.left_basis(0, 2) == vec([2, 0, 0])
    assert ns.wedge_basis(0, 2) == vec([0, -4, 0])


def test_ns_from_zero_and_identity(sl2):
    ns0 = ns_from_reynolds(ReynoldsLieAlgebra(sl2, Mat.zeros(3, 3)))
    assert ns0.left == {} and ns0.wedge == {}
    ns1 = ns_from_reynolds(ReynoldsLieAlgebra(sl2, Mat.identity(3)))
    for i in range(3):
        for j in range(3):
            assert ns1.left_basis(i, j) == sl2.bracket_basis(i, j)
            assert ns1.wedge_basis(i, j) == tuple(-c for c in sl2.bracket_basis(i, j))


def test_ns_commutator_equals_induced(sl2_reynolds):
    ns = ns_from_reynolds(sl2_reynolds)
    assert ns_commutator(ns).sc == induced_algebra(sl2_reynolds).L.sc
    assert ns_commutator(ns).bracket_basis(0, 2) == vec([2, -4, 0])
    assert jacobi_check(ns_commutator(ns)).ok


def test_regular_rep_valid(sl2_reynolds):
    ns = ns_from_reynolds(sl2_reynolds)
    assert is_ns_rep(regular_rep(ns)).ok


def test_zero_maps_on_abelian_ns():
    ns = NSLieAlgebra(2, None, {}, {})
    z = Mat.zeros(2, 2)
    rep = NSRep(ns, 2, [z, z], [z, z], [z, z])
    assert is_ns_rep(rep).ok


def test_regular_rep_with_nu_zeroed_fails(sl2_reynolds):
    ns = ns_from_reynolds(sl2_reynolds)
    reg = regular_rep(ns)
    z = Mat.zeros(3, 3)
    broken = NSRep.unchecked(ns, 3, reg.varrho, reg.mu, [z, z, z])
    cert = is_ns_rep(broken)
    assert not cert.ok
    assert cert.first_failure().check in ("ns-rep-2", "ns-rep-3")


def test_ns_semidirect(sl2_reynolds):
    ns = ns_from_reynolds(sl2_reynolds)
    out = ns_semidirect(regular_rep(ns))
    assert out.dim == 6
    assert is_nslie(out).ok


def test_ns_semidirect_zero_rep(sl2_reynolds):
    ns = ns_from_reynolds(sl2_reynolds)
    z = Mat.zeros(2, 2)
    rep = NSRep(ns, 2, [z] * 3, [z] * 3, [z] * 3)
    out = ns_semidirect(rep)
    assert out.dim == 5
    assert out.left == ns.left and out.wedge == ns.wedge


def test_ns_semidirect_empty_module(sl2_reynolds):
    ns = ns_from_reynolds(sl2_reynolds)
    rep = NSRep(ns, 0, [Mat.zeros(0, 0)] * 3, [Mat.zeros(0, 0)] * 3, [Mat.zeros(0, 0)] * 3)
    assert ns_semidirect(rep) is ns


def test_ns_rep_from_reynolds_rep(sl2_reynolds):
    nsr = ns_rep_from_reynolds_rep(reynolds_adjoint_rep(sl2_reynolds))
    assert is_ns_rep(nsr).ok


def test_ns_rep_from_reynolds_rep_t_zero(sl2):
    from algcert.lie import adjoint_rep
    from algcert.reynolds import ReynoldsRep

    A = ReynoldsLieAlgebra(sl2, Mat.zeros(3, 3))
    rr = ReynoldsRep(A, adjoint_rep(sl2), Mat.zeros(3, 3))
    nsr = ns_rep_from_reynolds_rep(rr)
    assert all(m.is_zero() for m in nsr.varrho)
    assert all(m.is_zero() for m in nsr.nu)
    assert all(m.is_zero() for m in nsr.mu)  # rho(0 x) = 0
    assert is_ns_rep(nsr).ok


def test_ns_rep_from_reynolds_rep_identity(sl2):
    from algcert.lie import adjoint_rep
    from algcert.reynolds import ReynoldsRep

    A = ReynoldsLieAlgebra(sl2, Mat.identity(3))
    rr = ReynoldsRep(A, adjoint_rep(sl2), Mat.identity(3))
    nsr = ns_rep_from_reynolds_rep(rr)
    rep = adjoint_rep(sl2)
    assert tuple(nsr.varrho) == tuple(-m for m in rep.rho)
    assert tuple(nsr.mu) == tuple(rep.rho)
    assert tuple(nsr.nu) == tuple(-m for m in rep.rho)
    assert is_ns_rep(nsr).ok


def test_ns_semidirect_rejects_invalid_rep(sl2_reynolds):
    ns = ns_from_reynolds(sl2_reynolds)
    reg = regular_rep(ns)
    z = Mat.zeros(3, 3)
    broken = NSRep.unchecked(ns, 3, reg.varrho, reg.mu, [z, z, z])
    with pytest.raises(CheckFailed):
        ns_semidirect(broken)


def test_regular_rep_valid_across_roster(sl2, b_op):
    rosters = [
        ReynoldsLieAlgebra(sl2, b_op),
        ReynoldsLieAlgebra(sl2, Mat.zeros(3, 3)),
        ReynoldsLieAlgebra(sl2, Mat.identity(3)),
    ]
    for a in rosters:
        ns = ns_from_reynolds(a)
        assert is_ns_rep(regular_rep(ns)).ok

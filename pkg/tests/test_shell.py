import json
from fractions import Fraction

import pytest

from algcert import fileio as fio
from algcert.catalog import catalog, names
from algcert.cli import main_block, main_build, main_cat, main_check
from algcert.exact import Mat
from algcert.nslie import ns_from_reynolds, regular_rep
from algcert.reynolds import reynolds_coadjoint_rep
from algcert.cybe import RelativeRB, prelie_from_relrb, r_plus
from algcert.rotabaxter import r_from_qrb


# --------------------------------------------------------------------------
# catalog
# --------------------------------------------------------------------------

def test_catalog_sl2_family():
    assert catalog("sl2").ok
    assert catalog("sl2.B").ok
    assert catalog("sl2.S").ok
    assert catalog("sl2.r").ok
    entry = catalog("sl2.km_dual")
    assert entry.ok  # paper-asserted verdict recorded as a pass
    dual = entry.payload
    assert dual.bracket_basis(0, 1) == (Fraction(0), Fraction(1, 4), Fraction(0))
    assert dual.bracket_basis(0, 2) == (Fraction(0), Fraction(0), Fraction(1, 4))
    assert dual.bracket_basis(1, 2) == (Fraction(0), Fraction(0), Fraction(0))


def test_catalog_r_has_two_unit_entries():
    r = catalog("sl2.r").payload
    assert sorted(r.entries.values()) == [Fraction(-1), Fraction(1)]


def test_catalog_parametric():
    assert catalog("abelian(3)").payload.sc == {}
    assert catalog("block(1/2,1,3)").ok
    assert catalog("block(2,1,2)").ok
    assert catalog("trivial_matched(sl2,abelian(2))").ok


def test_catalog_unknown_name():
    with pytest.raises(fio.InputError):
        catalog("nope")
    with pytest.raises(fio.InputError):
        catalog("block(1/0,1,2)")


def test_catalog_names_listing():
    assert "sl2" in names()


# --------------------------------------------------------------------------
# document round trips
# --------------------------------------------------------------------------

def roundtrip(doc):
    return json.loads(json.dumps(doc))


def test_algebra_roundtrip(sl2):
    doc = roundtrip(fio.algebra_to_doc(sl2))
    back = fio.doc_to_algebra(doc)
    assert back == sl2


def test_reynolds_algebra_roundtrip(sl2_reynolds):
    doc = roundtrip(fio.reynolds_algebra_to_doc(sl2_reynolds))
    back = fio.doc_to_reynolds_algebra(doc)
    assert back.L == sl2_reynolds.L and back.R == sl2_reynolds.R


def test_tensor_and_form_roundtrip(r_tensor, s_form):
    assert fio.doc_to_tensor(roundtrip(fio.tensor_to_doc(r_tensor))) == r_tensor
    assert fio.doc_to_form(roundtrip(fio.form_to_doc(s_form))) == s_form


def test_ns_roundtrip(sl2_reynolds):
    ns = ns_from_reynolds(sl2_reynolds)
    back = fio.doc_to_ns(roundtrip(fio.ns_to_doc(ns)))
    assert back == ns


def test_ns_rep_roundtrip(sl2_reynolds):
    rep = regular_rep(ns_from_reynolds(sl2_reynolds))
    doc = roundtrip(fio.ns_rep_to_doc(rep))
    back = fio.doc_to_ns_rep(doc)
    assert back.base == rep.base
    assert tuple(back.varrho) == tuple(rep.varrho)
    assert tuple(back.mu) == tuple(rep.mu)
    assert tuple(back.nu) == tuple(rep.nu)


def test_reynolds_rep_and_relrb_roundtrip(sl2_reynolds, sl2_qrb):
    rr = reynolds_coadjoint_rep(sl2_reynolds)
    back = fio.doc_to_reynolds_rep(roundtrip(fio.reynolds_rep_to_doc(rr)))
    assert back.base.L == rr.base.L and back.T == rr.T
    assert tuple(back.rep.rho) == tuple(rr.rep.rho)
    rel = RelativeRB(rr, r_plus(r_from_qrb(sl2_qrb)))
    back = fio.doc_to_relative_rb(roundtrip(fio.relative_rb_to_doc(rel)))
    assert back.K == rel.K


def test_matched_roundtrip(thmfl):
    from algcert.bialgebra import canonical_pair

    rmp = canonical_pair(thmfl)
    back = fio.doc_to_matched(roundtrip(fio.matched_to_doc(rmp)))
    assert back == rmp


def test_bialgebra_qrb_prelie_roundtrips(thmfl, sl2_qrb, sl2_reynolds, b_op):
    doc = roundtrip(fio.bialgebra_to_doc(thmfl.bialg, thmfl.R))
    bialg, R = fio.doc_to_bialgebra(doc)
    assert bialg == thmfl.bialg and R == thmfl.R

    doc = roundtrip(fio.qrb_to_doc(sl2_qrb, b_op))
    qrb, R = fio.doc_to_qrb(doc)
    assert qrb.rb.B == sl2_qrb.rb.B and qrb.rb.lam == 0 and qrb.S == sl2_qrb.S
    assert R == b_op

    rel = RelativeRB(reynolds_coadjoint_rep(sl2_reynolds), r_plus(r_from_qrb(sl2_qrb)))
    rp = prelie_from_relrb(rel)
    doc = roundtrip(fio.prelie_to_doc(rp.A, rp.R))
    A, R = fio.doc_to_prelie(doc)
    assert A == rp.A and R == rp.R


def test_malformed_documents_raise_input_error():
    with pytest.raises(fio.InputError):
        fio.doc_to_algebra({"dim": 2})
    with pytest.raises(fio.InputError):
        fio.doc_to_algebra({"dim": 2, "brackets": [{"i": 0, "j": 1, "out": {"0": "1/0"}}]})
    with pytest.raises(fio.InputError):
        fio.doc_to_operator({})
    with pytest.raises(fio.InputError):
        fio.read_doc("/nonexistent/path.json")


# --------------------------------------------------------------------------
# CLI
# --------------------------------------------------------------------------

def write(tmp_path, name, doc):
    path = tmp_path / name
    fio.write_doc(str(path), doc)
    return str(path)


def sl2_file(tmp_path, sl2):
    return write(tmp_path, "sl2.json", fio.algebra_to_doc(sl2))


def test_cli_check_reynolds(tmp_path, sl2, b_op, capsys):
    alg = sl2_file(tmp_path, sl2)
    op = write(tmp_path, "B.json", fio.operator_to_doc(b_op))
    code = main_check(["reynolds", alg, "--op", op])
    out = capsys.readouterr().out
    assert code == 0
    assert "[PASS] reynolds" in out and "verdict: pass" in out


def test_cli_check_jacobi_failure(tmp_path, broken_jacobi, capsys):
    bad = write(tmp_path, "bad.json", fio.algebra_to_doc(broken_jacobi))
    code = main_check(["jacobi", bad])
    out = capsys.readouterr().out
    assert code == 1
    assert "[FAIL] jacobi at (0, 1, 2)" in out
    assert "verdict: fail" in out


def test_cli_exit_2_on_bad_input(tmp_path, capsys):
    assert main_check(["jacobi", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "garbage.json"
    bad.write_text("{not json")
    assert main_check(["jacobi", str(bad)]) == 2


def test_cli_thmfl_pipeline(tmp_path, sl2_qrb, b_op, capsys):
    qrb = write(tmp_path, "qrb.json", fio.qrb_to_doc(sl2_qrb))
    op = write(tmp_path, "B.json", fio.operator_to_doc(b_op))
    out_file = str(tmp_path / "bialg.json")
    assert main_build(["thmfl", qrb, "--reynolds", op, "-o", out_file]) == 0
    capsys.readouterr()
    assert main_check(["reynolds-bialgebra", out_file]) == 0
    report = capsys.readouterr().out
    assert "verdict: pass" in report
    doc = fio.read_doc(out_file)
    assert doc["provenance"]["construction"] == "thmfl"


def test_cli_build_r_from_qrb_matches_catalog(tmp_path, sl2_qrb, capsys):
    qrb = write(tmp_path, "qrb.json", fio.qrb_to_doc(sl2_qrb))
    out_file = str(tmp_path / "r.json")
    assert main_build(["r-from-qrb", qrb, "-o", out_file]) == 0
    capsys.readouterr()
    built = fio.doc_to_tensor(fio.read_doc(out_file))
    assert built == catalog("sl2.r").payload


def test_cli_build_outputs_reload_and_reverify(tmp_path, sl2_qrb, sl2_reynolds, b_op, capsys):
    qrb = write(tmp_path, "qrb.json", fio.qrb_to_doc(sl2_qrb, b_op))
    ra = write(tmp_path, "ra.json",
               fio.reynolds_algebra_to_doc(sl2_reynolds))
    plans = [
        (["induced", ra], "reynolds"),
        (["descendent", qrb], "jacobi"),
        (["ns-from-reynolds", ra], "nslie"),
        (["r-from-qrb", qrb], None),
        (["thmfl", qrb], "reynolds-bialgebra"),
    ]
    for argv, recheck in plans:
        out_file = str(tmp_path / (argv[0] + ".out.json"))
        assert main_build(argv + ["-o", out_file]) == 0, argv
        capsys.readouterr()
        if recheck:
            assert main_check([recheck, out_file]) == 0, (argv, recheck)
            capsys.readouterr()


def test_cli_rk_build(tmp_path, sl2_reynolds, sl2_qrb, capsys):
    rel = RelativeRB(reynolds_coadjoint_rep(sl2_reynolds), r_plus(r_from_qrb(sl2_qrb)))
    rel_file = write(tmp_path, "rel.json", fio.relative_rb_to_doc(rel))
    out_file = str(tmp_path / "rk.json")
    assert main_build(["rk", rel_file, "-o", out_file]) == 0
    capsys.readouterr()
    doc = fio.read_doc(out_file)
    amb = fio.doc_to_reynolds_algebra(doc["g"])
    r = fio.doc_to_tensor(doc["r"])
    from algcert.cybe import is_cybe_solution_reynolds

    assert is_cybe_solution_reynolds(amb, r).ok


def test_cli_json_report_agrees_with_human(tmp_path, sl2, capsys):
    alg = sl2_file(tmp_path, sl2)
    assert main_check(["jacobi", alg, "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "pass"
    assert payload["checks"][0]["check"] == "jacobi"
    assert payload["checks"][0]["ok"] is True


def test_cli_reports_are_byte_stable(tmp_path, sl2, capsys):
    alg = sl2_file(tmp_path, sl2)
    main_check(["jacobi", alg])
    first = capsys.readouterr().out
    main_check(["jacobi", alg])
    second = capsys.readouterr().out
    assert first == second


def test_cli_first_only(tmp_path, broken_jacobi, capsys):
    from algcert.bialgebra import cobracket_from_dual

    deltas = cobracket_from_dual(broken_jacobi)
    doc = fio.coalgebra_to_doc(deltas, Mat.identity(3))
    path = write(tmp_path, "co.json", doc)
    assert main_check(["coalgebra", path]) == 1
    full = capsys.readouterr().out
    assert main_check(["coalgebra", path, "--first-only"]) == 1
    trimmed = capsys.readouterr().out
    assert full.count("[") > trimmed.count("[")


def test_cli_algcat(tmp_path, capsys):
    assert main_cat(["sl2"]) == 0
    out = capsys.readouterr().out
    assert "[PASS] jacobi" in out
    dest = str(tmp_path / "sl2.json")
    assert main_cat(["sl2", "-o", dest]) == 0
    capsys.readouterr()
    assert fio.doc_to_algebra(fio.read_doc(dest)).dim == 3
    assert main_cat(["unknown-entry"]) == 2


def test_cli_algblock(capsys):
    assert main_block(["--q", "1/2", "--lo", "1", "--hi", "3"]) == 0
    out = capsys.readouterr().out
    assert "block-window" in out and "verdict: pass" in out
    assert main_block(["--q", "1", "--lo", "-1", "--hi", "0"]) == 2
    capsys.readouterr()
    assert main_block(["--q", "1", "--lo", "-1", "--hi", "0", "--skip-singular"]) == 0
    capsys.readouterr()
    assert main_block(["--q", "x", "--lo", "0", "--hi", "1"]) == 2


def test_cli_double_builds(tmp_path, thmfl, capsys):
    from algcert.bialgebra import canonical_pair

    rmp = canonical_pair(thmfl)
    mp_file = write(tmp_path, "mp.json", fio.matched_to_doc(rmp))
    for kind, recheck in (
        ("double", "jacobi"),
        ("reynolds-double", "reynolds"),
        ("induced-matched", "reynolds-matched"),
    ):
        out_file = str(tmp_path / f"{kind}.json")
        assert main_build([kind, mp_file, "-o", out_file]) == 0, kind
        capsys.readouterr()
        assert main_check([recheck, out_file]) == 0, kind
        capsys.readouterr()


def test_cli_bialgebra_builds(tmp_path, thmfl, capsys):
    bi_file = write(tmp_path, "bi.json", fio.bialgebra_to_doc(thmfl.bialg, thmfl.R))
    for kind, recheck in (
        ("drinfeld-double", "reynolds"),
        ("quasitriangular-double", "reynolds-bialgebra"),
    ):
        out_file = str(tmp_path / f"{kind}.json")
        assert main_build([kind, bi_file, "-o", out_file]) == 0, kind
        capsys.readouterr()
        assert main_check([recheck, out_file]) == 0, kind
        capsys.readouterr()


def test_cli_dual_from_r_and_cobracket(tmp_path, sl2, r_tensor, capsys):
    alg = sl2_file(tmp_path, sl2)
    r_file = write(tmp_path, "r.json", fio.tensor_to_doc(r_tensor))
    out_file = str(tmp_path / "dual.json")
    assert main_build(["dual-from-r", alg, "--tensor", r_file, "-o", out_file]) == 0
    capsys.readouterr()
    dual = fio.doc_to_algebra(fio.read_doc(out_file))
    assert dual.bracket_basis(0, 1) == (Fraction(2), Fraction(0), Fraction(0))
    co_file = str(tmp_path / "co.json")
    assert main_build(["cobracket", alg, "--tensor", r_file, "-o", co_file]) == 0
    capsys.readouterr()
    assert main_check(["coalgebra", co_file]) == 0
    capsys.readouterr()


def test_cli_build_gate_failure_exits_1(tmp_path, sl2, capsys):
    doc = fio.algebra_to_doc(sl2)
    doc["reynolds"] = fio.operator_to_doc(Mat([[0, 1, 0], [0, 1, 0], [0, 0, 0]]))
    bad = write(tmp_path, "badrey.json", doc)
    code = main_build(["induced", bad, "-o", str(tmp_path / "out.json")])
    capsys.readouterr()
    assert code == 1


def test_cli_every_kind_dispatches(tmp_path, sl2, b_op, s_form, sl2_reynolds,
                                   sl2_qrb, thmfl, capsys):
    from algcert.bialgebra import canonical_pair, cobracket_from_dual
    from algcert.matched import matched_to_manin

    rmp = canonical_pair(thmfl)
    mt = matched_to_manin(rmp)
    rr = reynolds_coadjoint_rep(sl2_reynolds)
    rel = RelativeRB(rr, r_plus(r_from_qrb(sl2_qrb)))
    rp = prelie_from_relrb(rel)
    ns = ns_from_reynolds(sl2_reynolds)

    alg = write(tmp_path, "alg.json", fio.algebra_to_doc(sl2))
    ra = write(tmp_path, "ra.json", fio.reynolds_algebra_to_doc(sl2_reynolds))
    rrep = write(tmp_path, "rrep.json", fio.reynolds_rep_to_doc(rr))
    nsf = write(tmp_path, "ns.json", fio.ns_to_doc(ns))
    nsrep = write(tmp_path, "nsrep.json", fio.ns_rep_to_doc(regular_rep(ns)))
    mpf = write(tmp_path, "mp.json", fio.matched_to_doc(rmp))
    maninf = write(tmp_path, "manin.json",
                   fio.manin_to_doc(mt.G.base.L, mt.G.base.R, mt.G.S,
                                    mt.part_g, mt.part_h))
    co = write(tmp_path, "co.json",
               fio.coalgebra_to_doc(cobracket_from_dual(thmfl.bialg.dual), -thmfl.R))
    bia = write(tmp_path, "bia.json", fio.bialgebra_to_doc(thmfl.bialg, thmfl.R))
    qrbf = write(tmp_path, "qrb.json", fio.qrb_to_doc(sl2_qrb, b_op))
    relf = write(tmp_path, "rel.json", fio.relative_rb_to_doc(rel))
    pre = write(tmp_path, "pre.json", fio.prelie_to_doc(rp.A, rp.R))
    rten = write(tmp_path, "r.json", fio.tensor_to_doc(r_from_qrb(sl2_qrb)))

    checks = {
        "jacobi": [alg], "reynolds": [ra], "reynolds-rep": [rrep],
        "nslie": [nsf], "ns-rep": [nsrep], "matched": [mpf],
        "reynolds-matched": [mpf], "manin": [maninf], "coalgebra": [co],
        "bialgebra": [bia], "reynolds-bialgebra": [bia], "rb": [qrbf],
        "quadratic-rb": [qrbf], "reynolds-on-qrb": [qrbf],
        "cybe": [alg, "--tensor", rten], "reynolds-cybe": [ra, "--tensor", rten],
        "relative-rb": [relf], "prelie": [pre], "reynolds-prelie": [pre],
    }
    from algcert.cli import CHECK_KINDS, BUILD_KINDS

    assert set(checks) == set(CHECK_KINDS)
    for kind, argv in checks.items():
        assert main_check([kind] + argv) == 0, kind
        capsys.readouterr()

    builds = {
        "induced": [ra], "descendent": [qrbf], "ns-from-reynolds": [ra],
        "semidirect": [rrep], "double": [mpf], "reynolds-double": [mpf],
        "induced-matched": [mpf], "drinfeld-double": [bia],
        "quasitriangular-double": [bia],
        "cobracket": [alg, "--tensor", rten], "r-from-qrb": [qrbf],
        "thmfl": [qrbf], "rk": [relf], "canonical-r": [pre],
        "dual-from-r": [alg, "--tensor", rten],
    }
    assert set(builds) == set(BUILD_KINDS)
    for kind, argv in builds.items():
        out = str(tmp_path / f"out-{kind}.json")
        assert main_build([kind] + argv + ["-o", out]) == 0, kind
        capsys.readouterr()


def test_cli_shape_mismatch_is_input_error(tmp_path, sl2, capsys):
    alg = sl2_file(tmp_path, sl2)
    op = write(tmp_path, "op2.json", fio.operator_to_doc(Mat.identity(2)))
    assert main_check(["reynolds", alg, "--op", op]) == 2
    err = capsys.readouterr().err
    assert "input error" in err
    assert main_build(["induced", alg, "--op", op, "-o", str(tmp_path / "o.json")]) == 2


def test_cli_matched_check_without_operators(tmp_path, thmfl, capsys):
    from algcert.bialgebra import canonical_pair

    doc = fio.matched_to_doc(canonical_pair(thmfl))
    del doc["Rg"], doc["Rh"]
    path = write(tmp_path, "mp_noops.json", doc)
    assert main_check(["matched", path]) == 0
    capsys.readouterr()
    assert main_check(["reynolds-matched", path]) == 2  # ops required here
    capsys.readouterr()


def test_catalog_degenerate_abelian_sizes(capsys):
    assert main_cat(["abelian(1)"]) == 0
    capsys.readouterr()
    assert main_cat(["abelian(0)"]) == 0
    capsys.readouterr()


def test_catalog_block_skip_variant():
    entry = catalog("block(1/2,-3,3,skip)")
    assert entry.ok
    assert entry.payload["skip_singular"] is True
    with pytest.raises(fio.InputError):
        catalog("block(1/2,-3,3)")  # strict form hits the singular index

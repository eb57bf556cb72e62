"""One JSON document format for every structure; rationals as "p/q" strings.

Loaders return unchecked objects (check commands must be able to load
violating data); constructors and builders re-validate.  Writers emit a
canonical layout (sorted bracket keys, fixed key order, 2-space indent)
so build outputs are byte-stable and diffable.  Build documents carry a
provenance header naming the source files and the construction; loaders
ignore it.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cybe import PreLieAlgebra, RelativeRB
from .bialgebra import LieBialgebra
from .exact import Mat, Tensor2, rat, rat_str
from .lie import BilinForm, LieAlgebra, Representation
from .matched import MatchedPair, ReynoldsMatchedPair
from .nslie import NSLieAlgebra, NSRep
from .reynolds import ReynoldsLieAlgebra, ReynoldsRep
from .rotabaxter import QuadraticRB, RotaBaxterAlg


class InputError(ValueError):
    """Malformed document or value; maps to CLI exit code 2."""


def _need(doc: dict, key: str, context: str):
    if key not in doc:
        raise InputError(f"{context}: missing key '{key}'")
    return doc[key]


def _rat(value, context: str) -> Fraction:
    try:
        return rat(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{context}: bad rational {value!r}") from exc


# -- matrices, forms, tensors ------------------------------------------------

def matrix_to_json(m: Mat) -> list[list[str]]:
    return [[rat_str(c) for c in row] for row in m.entries]


def json_to_matrix(rows, context: str = "matrix") -> Mat:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError(f"{context}: expected a list of rows")
    return Mat([[_rat(c, context) for c in row] for row in rows])


def operator_to_doc(m: Mat) -> dict:
    return {"matrix": matrix_to_json(m)}


def doc_to_operator(doc: dict) -> Mat:
    return json_to_matrix(_need(doc, "matrix", "operator"), "operator")


def form_to_doc(S: BilinForm) -> dict:
    return {"gram": matrix_to_json(S.gram)}


def doc_to_form(doc: dict) -> BilinForm:
    gram = json_to_matrix(_need(doc, "gram", "form"), "gram")
    try:
        return BilinForm(gram)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def tensor_to_doc(t: Tensor2) -> dict:
    return {
        "dim_left": t.dim_left,
        "dim_right": t.dim_right,
        "entries": [
            {"i": i, "j": j, "c": rat_str(c)} for (i, j), c in t.items()
        ],
    }


def doc_to_tensor(doc: dict, dim: int | None = None) -> Tensor2:
    entries = {}
    for cell in _need(doc, "entries", "tensor"):
        i, j = int(_need(cell, "i", "tensor entry")), int(_need(cell, "j", "tensor entry"))
        entries[(i, j)] = entries.get((i, j), Fraction(0)) + _rat(_need(cell, "c", "tensor entry"), "tensor entry")
    dl = int(doc.get("dim_left", dim if dim is not None else 0))
    dr = int(doc.get("dim_right", dim if dim is not None else 0))
    if dl == 0 and entries:
        dl = dr = max(max(i, j) for i, j in entries) + 1
    try:
        return Tensor2(dl, dr, entries)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


# -- bracket tables and algebras ----------------------------------------------

def _table_to_json(table) -> list[dict]:
    out = []
    for (i, j) in sorted(table):
        comp = table[(i, j)]
        out.append(
            {"i": i, "j": j, "out": {str(k): rat_str(c) for k, c in sorted(comp.items())}}
        )
    return out


def _json_to_table(items, context: str):
    table = {}
    for cell in items:
        i, j = int(_need(cell, "i", context)), int(_need(cell, "j", context))
        comp = {}
        for k, c in _need(cell, "out", context).items():
            comp[int(k)] = _rat(c, context)
        table[(i, j)] = comp
    return table


def algebra_to_doc(L: LieAlgebra) -> dict:
    return {
        "dim": L.dim,
        "basis": list(L.basis),
        "brackets": _table_to_json(L.sc),
    }


def doc_to_algebra(doc: dict) -> LieAlgebra:
    dim = int(_need(doc, "dim", "algebra"))
    basis = doc.get("basis")
    table = _json_to_table(_need(doc, "brackets", "algebra"), "algebra brackets")
    try:
        return LieAlgebra.unchecked(dim, basis, table)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def reynolds_algebra_to_doc(A: ReynoldsLieAlgebra) -> dict:
    doc = algebra_to_doc(A.L)
    doc["reynolds"] = operator_to_doc(A.R)
    return doc


def doc_to_reynolds_algebra(doc: dict, op: Mat | None = None) -> ReynoldsLieAlgebra:
    L = doc_to_algebra(doc)
    if op is None:
        op = doc_to_operator(_need(doc, "reynolds", "reynolds algebra"))
    if op.rows != L.dim or op.cols != L.dim:
        raise InputError("operator shape does not match the algebra")
    return ReynoldsLieAlgebra.unchecked(L, op)


# -- NS-Lie -------------------------------------------------------------------

def ns_to_doc(A: NSLieAlgebra) -> dict:
    return {
        "dim": A.dim,
        "basis": list(A.basis),
        "left": _table_to_json(A.left),
        "wedge": _table_to_json(A.wedge),
    }


def doc_to_ns(doc: dict) -> NSLieAlgebra:
    dim = int(_need(doc, "dim", "ns algebra"))
    basis = doc.get("basis")
    left = _json_to_table(_need(doc, "left", "ns algebra"), "left table")
    wedge = _json_to_table(_need(doc, "wedge", "ns algebra"), "wedge table")
    try:
        return NSLieAlgebra.unchecked(dim, basis, left, wedge)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _mats_to_json(mats) -> list[list[list[str]]]:
    return [matrix_to_json(m) for m in mats]


def _json_to_mats(items, context: str) -> list[Mat]:
    return [json_to_matrix(m, context) for m in items]


def ns_rep_to_doc(rep: NSRep) -> dict:
    return {
        "ns": ns_to_doc(rep.base),
        "rep": {
            "module_dim": rep.module_dim,
            "labels": list(rep.labels),
            "varrho": _mats_to_json(rep.varrho),
            "mu": _mats_to_json(rep.mu),
            "nu": _mats_to_json(rep.nu),
        },
    }


def doc_to_ns_rep(doc: dict) -> NSRep:
    base = doc_to_ns(_need(doc, "ns", "ns-rep"))
    rep = _need(doc, "rep", "ns-rep")
    varrho = _json_to_mats(_need(rep, "varrho", "ns-rep"), "varrho")
    mu = _json_to_mats(_need(rep, "mu", "ns-rep"), "mu")
    nu = _json_to_mats(_need(rep, "nu", "ns-rep"), "nu")
    md = int(rep.get("module_dim", varrho[0].rows if varrho else 0))
    try:
        return NSRep.unchecked(base, md, varrho, mu, nu, rep.get("labels"))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


# -- representations over Reynolds algebras ------------------------------------

def reynolds_rep_to_doc(rr: ReynoldsRep) -> dict:
    return {
        "g": reynolds_algebra_to_doc(rr.base),
        "rep": {
            "module_dim": rr.rep.module_dim,
            "labels": list(rr.rep.labels),
            "rho": _mats_to_json(rr.rep.rho),
            "T": matrix_to_json(rr.T),
        },
    }


def doc_to_reynolds_rep(doc: dict) -> ReynoldsRep:
    base = doc_to_reynolds_algebra(_need(doc, "g", "reynolds-rep"))
    rep = _need(doc, "rep", "reynolds-rep")
    rho = _json_to_mats(_need(rep, "rho", "reynolds-rep"), "rho")
    T = json_to_matrix(_need(rep, "T", "reynolds-rep"), "T")
    md = int(rep.get("module_dim", T.rows))
    try:
        inner = Representation.unchecked(base.L, md, rho, rep.get("labels"))
        return ReynoldsRep.unchecked(base, inner, T)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def relative_rb_to_doc(rel: RelativeRB) -> dict:
    doc = reynolds_rep_to_doc(rel.rr)
    doc["K"] = matrix_to_json(rel.K)
    return doc


def doc_to_relative_rb(doc: dict) -> RelativeRB:
    rr = doc_to_reynolds_rep(doc)
    K = json_to_matrix(_need(doc, "K", "relative-rb"), "K")
    try:
        return RelativeRB.unchecked(rr, K)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


# -- matched pairs --------------------------------------------------------------

def matched_to_doc(rmp: ReynoldsMatchedPair) -> dict:
    mp = rmp.pair
    return {
        "g": algebra_to_doc(mp.g),
        "h": algebra_to_doc(mp.h),
        "rho": _mats_to_json(mp.rho.rho),
        "mu": _mats_to_json(mp.mu.rho),
        "Rg": matrix_to_json(rmp.Rg),
        "Rh": matrix_to_json(rmp.Rh),
    }


def doc_to_matched(doc: dict, need_ops: bool = True) -> ReynoldsMatchedPair:
    g = doc_to_algebra(_need(doc, "g", "matched pair"))
    h = doc_to_algebra(_need(doc, "h", "matched pair"))
    rho_mats = _json_to_mats(_need(doc, "rho", "matched pair"), "rho")
    mu_mats = _json_to_mats(_need(doc, "mu", "matched pair"), "mu")
    try:
        rho = Representation.unchecked(g, h.dim, rho_mats, h.basis)
        mu = Representation.unchecked(h, g.dim, mu_mats, g.basis)
        pair = MatchedPair.unchecked(g, h, rho, mu)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if not need_ops and "Rg" not in doc:
        Rg = Mat.zeros(g.dim, g.dim)
        Rh = Mat.zeros(h.dim, h.dim)
    else:
        Rg = json_to_matrix(_need(doc, "Rg", "matched pair"), "Rg")
        Rh = json_to_matrix(_need(doc, "Rh", "matched pair"), "Rh")
    try:
        return ReynoldsMatchedPair.unchecked(pair, Rg, Rh)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


# -- bialgebras ------------------------------------------------------------------

def bialgebra_to_doc(bialg: LieBialgebra, R: Mat | None = None) -> dict:
    doc = {"g": algebra_to_doc(bialg.g), "dual": algebra_to_doc(bialg.dual)}
    if R is not None:
        doc["reynolds"] = operator_to_doc(R)
    return doc


def doc_to_bialgebra(doc: dict) -> tuple[LieBialgebra, Mat | None]:
    g = doc_to_algebra(_need(doc, "g", "bialgebra"))
    dual = doc_to_algebra(_need(doc, "dual", "bialgebra"))
    if g.dim != dual.dim:
        raise InputError("bialgebra: g and dual dimensions differ")
    R = None
    if "reynolds" in doc:
        R = doc_to_operator(doc["reynolds"])
    return LieBialgebra.unchecked(g, dual), R


# -- quadratic Rota-Baxter --------------------------------------------------------

def qrb_to_doc(qrb: QuadraticRB, R: Mat | None = None) -> dict:
    doc = algebra_to_doc(qrb.rb.L)
    doc["rb"] = {"matrix": matrix_to_json(qrb.rb.B), "lambda": rat_str(qrb.rb.lam)}
    doc["gram"] = matrix_to_json(qrb.S.gram)
    if R is not None:
        doc["reynolds"] = operator_to_doc(R)
    return doc


def doc_to_qrb(doc: dict) -> tuple[QuadraticRB, Mat | None]:
    L = doc_to_algebra(doc)
    rb_doc = _need(doc, "rb", "quadratic-rb")
    B = json_to_matrix(_need(rb_doc, "matrix", "rb"), "rb matrix")
    lam = _rat(rb_doc.get("lambda", "0"), "rb lambda")
    gram = json_to_matrix(_need(doc, "gram", "quadratic-rb"), "gram")
    try:
        rb = RotaBaxterAlg.unchecked(L, B, lam)
        S = BilinForm(gram)
        qrb = QuadraticRB.unchecked(rb, S)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    R = None
    if "reynolds" in doc:
        R = doc_to_operator(doc["reynolds"])
    return qrb, R


def doc_to_rb(doc: dict) -> RotaBaxterAlg:
    L = doc_to_algebra(doc)
    rb_doc = _need(doc, "rb", "rota-baxter")
    B = json_to_matrix(_need(rb_doc, "matrix", "rb"), "rb matrix")
    lam = _rat(rb_doc.get("lambda", "0"), "rb lambda")
    try:
        return RotaBaxterAlg.unchecked(L, B, lam)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


# -- pre-Lie -----------------------------------------------------------------------

def prelie_to_doc(A: PreLieAlgebra, R: Mat | None = None) -> dict:
    doc = {"dim": A.dim, "basis": list(A.basis), "prod": _table_to_json(A.prod)}
    if R is not None:
        doc["reynolds"] = operator_to_doc(R)
    return doc


def doc_to_prelie(doc: dict) -> tuple[PreLieAlgebra, Mat | None]:
    dim = int(_need(doc, "dim", "pre-lie"))
    basis = doc.get("basis")
    prod = _json_to_table(_need(doc, "prod", "pre-lie"), "pre-lie product")
    try:
        A = PreLieAlgebra.unchecked(dim, basis, prod)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    R = None
    if "reynolds" in doc:
        R = doc_to_operator(doc["reynolds"])
    return A, R


# -- coalgebra (delta list) ---------------------------------------------------------

def coalgebra_to_doc(deltas: list[Tensor2], R: Mat | None = None) -> dict:
    doc = {
        "dim": len(deltas),
        "deltas": [tensor_to_doc(d) for d in deltas],
    }
    if R is not None:
        doc["reynolds"] = operator_to_doc(R)
    return doc


def doc_to_coalgebra(doc: dict) -> tuple[list[Tensor2], Mat | None]:
    dim = int(_need(doc, "dim", "coalgebra"))
    deltas = [doc_to_tensor(d, dim) for d in _need(doc, "deltas", "coalgebra")]
    if len(deltas) != dim:
        raise InputError("coalgebra: need one cobracket tensor per basis vector")
    R = None
    if "reynolds" in doc:
        R = doc_to_operator(doc["reynolds"])
    return deltas, R


# -- Manin triple ---------------------------------------------------------------------

def manin_to_doc(L: LieAlgebra, R: Mat, S: BilinForm, part_g, part_h) -> dict:
    doc = algebra_to_doc(L)
    doc["reynolds"] = operator_to_doc(R)
    doc["gram"] = matrix_to_json(S.gram)
    doc["part_g"] = list(part_g)
    doc["part_h"] = list(part_h)
    return doc


def doc_to_manin(doc: dict):
    A = doc_to_reynolds_algebra(doc)
    gram = json_to_matrix(_need(doc, "gram", "manin"), "gram")
    try:
        S = BilinForm(gram)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    part_g = tuple(int(i) for i in _need(doc, "part_g", "manin"))
    part_h = tuple(int(i) for i in _need(doc, "part_h", "manin"))
    return A.L, A.R, S, part_g, part_h


# -- document reading/writing -----------------------------------------------------------

def read_doc(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    return doc


def render_doc(doc: dict, provenance: dict | None = None) -> str:
    if provenance:
        doc = {"provenance": provenance, **doc}
    return json.dumps(doc, indent=2) + "\n"


def write_doc(path: str, doc: dict, provenance: dict | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_doc(doc, provenance))

"""Duplicator definitions, rendered to the JSON files under ``catalog/data/duplicators``.

Each definition is the JSON document itself (built with small helpers to
keep the shared parts in one place). Witness terms are written in the
Gamma-language; ``defs`` introduce derived operations such as the merge v.
"""

from __future__ import annotations

import copy

from . import signatures as S


def ix(sym: str, width: int, *idx: int) -> str:
    return f"{sym}/{width}[{','.join(map(str, idx))}]"


def e(name: str, arity: int, *terms: str) -> dict:
    return {"name": name, "arity": arity, "terms": list(terms)}


def binary_pair(name: str, op1: str, op2: str) -> dict:
    """(op1 x1 x3, op2 x2 x4)."""
    return e(name, 2, ix(op1, 4, 1, 3), ix(op2, 4, 2, 4))


def quad(name: str, *ops: str) -> dict:
    """Four-factor entry with coordinate j combining x_j and x_{4+j}."""
    return e(name, 2, *[ix(op, 8, j, 4 + j) for j, op in enumerate(ops, start=1)])


def merge_def(meet: str, join: str, meet_x: str, join_x: str) -> str:
    """(x meet (x join_x y)) join (y meet (x meet_x y)), the generic merge shape."""
    return f"({join} ({meet} x1 ({join_x} x1 x2)) ({meet} x2 ({meet_x} x1 x2)))"


BLU = [binary_pair("join_t", "join", "meet"), binary_pair("meet_t", "meet", "join"),
       binary_pair("join_k", "join", "join"), binary_pair("meet_k", "meet", "meet"),
       e("neg", 1, "x2", "x1")]
BOUNDS = [e("bot_t", 0, "zero", "one"), e("top_t", 0, "one", "zero"),
          e("bot_k", 0, "zero", "zero"), e("top_k", 0, "one", "one")]

V_DEF = {"v": {"arity": 2, "term": merge_def("meet_k", "join_k", "meet_t", "join_t")}}
BLU_WITNESSES = {
    "defs": V_DEF,
    "L": {"join": {"1": "(join_k x1 x2)", "2": "(join_k x1 x2)"},
          "meet": {"1": "(meet_k x1 x2)", "2": "(meet_k x1 x2)"}},
    "M": "(v x1 x2)",
    "P": {"2,1": "(neg x1)"},
}
BOUND_WITNESSES = {"zero": {"1": "bot_k", "2": "bot_k"}, "one": {"1": "top_k", "2": "top_k"}}


def witnesses(base: dict, L: dict | None = None, defs: dict | None = None, **rest) -> dict:
    w = copy.deepcopy(base)
    w.setdefault("L", {}).update(copy.deepcopy(L or {}))
    if defs:
        w.setdefault("defs", {}).update(defs)
    w.update(rest)
    return w


BL_WITNESSES = witnesses(BLU_WITNESSES, BOUND_WITNESSES)


def dup(name, sig, entries, wit=None, m=2, mode="linked", provenance="") -> dict:
    out = {"name": name, "base_signature": sig.to_json(), "m": m, "mode": mode,
           "entries": copy.deepcopy(entries)}
    if wit:
        out["witnesses"] = wit
    if provenance:
        out["provenance"] = provenance
    return out


# --- trilattice duplicators -------------------------------------------------------------------

def _tl_binary(k_join_f, k_meet_f, k_join_i, k_meet_i):
    return [binary_pair("join_t", "join_t", "join_t"), binary_pair("meet_t", "meet_t", "meet_t"),
            binary_pair("join_f", *k_join_f), binary_pair("meet_f", *k_meet_f),
            binary_pair("join_i", *k_join_i), binary_pair("meet_i", *k_meet_i)]


TLTF_ENTRIES = _tl_binary(("join_k", "meet_k"), ("meet_k", "join_k"),
                          ("join_k", "join_k"), ("meet_k", "meet_k")) + [
    e("inv_t", 1, "(neg x1)", "(neg x2)"), e("inv_f", 1, "x2", "x1")]
TLTF_WITNESSES = {
    "defs": {"v": {"arity": 2, "term": merge_def("meet_i", "join_i", "meet_f", "join_f")}},
    "L": {"join_t": {"1": "(join_t x1 x2)"}, "meet_t": {"1": "(meet_t x1 x2)"},
          "join_k": {"1": "(join_i x1 x2)"}, "meet_k": {"1": "(meet_i x1 x2)"},
          "neg": {"1": "(inv_t x1)"}},
    "M": "(v x1 x2)",
    "P": {"2,1": "(inv_f x1)"},
}

TLTFI_BIN_ENTRIES = _tl_binary(("join_k", "join_k"), ("meet_k", "meet_k"),
                               ("join_k", "meet_k"), ("meet_k", "join_k")) + [
    e("inv_t", 1, "(neg x1)", "(neg x2)"), e("inv_f", 1, "(conf x2)", "(conf x1)"),
    e("inv_i", 1, "x2", "x1")]
TLTFI_BIN_WITNESSES = {
    "defs": {"v": {"arity": 2, "term": merge_def("meet_f", "join_f", "meet_i", "join_i")}},
    "L": {"join_t": {"1": "(join_t x1 x2)"}, "meet_t": {"1": "(meet_t x1 x2)"},
          "join_k": {"1": "(join_f x1 x2)"}, "meet_k": {"1": "(meet_f x1 x2)"},
          "neg": {"1": "(inv_t x1)"}, "conf": {"1": "(inv_f x1)"}},
    "M": "(v x1 x2)",
    "P": {"2,1": "(inv_i x1)"},
}


def _four_merge(amb_meet, amb_join, lat_a, lat_b):
    """Merge for m = 4 from two two-way merges.

    ``lat_a`` acts as join on coordinates {1,3} and as meet on {2,4};
    ``lat_b`` as join on {1,2} and meet on {3,4} (or the other way round).
    u_a(x, y) = (x1, y2, x3, y4) and u_b(p, q) = (p1, p2, q3, q4).
    """
    ua = merge_def(amb_meet, amb_join, f"meet_{lat_a}", f"join_{lat_a}")
    ub = merge_def(amb_meet, amb_join, f"meet_{lat_b}", f"join_{lat_b}")
    return {"ua": {"arity": 2, "term": ua}, "ub": {"arity": 2, "term": ub},
            "M4": {"arity": 4, "term": "(ub (ua x1 x2) (ua x3 x4))"}}


def _klein_perms(a: str, b: str) -> dict:
    """Generators of S_4 from the Klein group {id, a, b, ab} and the merge.

    ``a`` realizes (2,1,4,3) and ``b`` realizes (3,4,1,2).
    """
    return {"2,1,3,4": f"(M4 ({a} x1) ({a} x1) x1 x1)",
            "2,3,4,1": f"(M4 ({a} x1) ({a} ({b} x1)) ({a} x1) ({a} ({b} x1)))"}


TLTFI_4_ENTRIES = [
    quad("join_t", "join", "meet", "join", "meet"), quad("meet_t", "meet", "join", "meet", "join"),
    quad("join_f", "join", "join", "join", "join"), quad("meet_f", "meet", "meet", "meet", "meet"),
    quad("join_i", "join", "join", "meet", "meet"), quad("meet_i", "meet", "meet", "join", "join"),
    e("inv_t", 1, "x2", "x1", "x4", "x3"),
    e("inv_f", 1, "(neg x4)", "(neg x3)", "(neg x2)", "(neg x1)"),
    e("inv_i", 1, "x3", "x4", "x1", "x2"),
]
TLTFI_4_WITNESSES = {
    "defs": _four_merge("meet_f", "join_f", "t", "i"),
    "L": {"join": {"1": "(join_f x1 x2)"}, "meet": {"1": "(meet_f x1 x2)"}, "neg": {"1": "(inv_f x1)"}},
    "M": "(M4 x1 x2 x3 x4)",
    "P": _klein_perms("inv_t", "inv_i"),
}

TLTF_4_ENTRIES = [
    quad("join_t", "join", "meet", "join", "meet"), quad("meet_t", "meet", "join", "meet", "join"),
    quad("join_f", "join", "join", "meet", "meet"), quad("meet_f", "meet", "meet", "join", "join"),
    quad("join_i", "join", "join", "join", "join"), quad("meet_i", "meet", "meet", "meet", "meet"),
    e("inv_t", 1, "x2", "x1", "x4", "x3"),
    e("inv_f", 1, "x3", "x4", "x1", "x2"),
]
TLTF_4_WITNESSES = {
    "defs": _four_merge("meet_i", "join_i", "t", "f"),
    "L": {"join": {"1": "(join_i x1 x2)"}, "meet": {"1": "(meet_i x1 x2)"}},
    "M": "(M4 x1 x2 x3 x4)",
    "P": _klein_perms("inv_t", "inv_f"),
}

# four factors 2++, 2+-, 2-+, 2-- side by side: t reversed on the last two,
# f reversed on the second and fourth, i never reversed
TL4_ENTRIES = [
    quad("join_t", "join", "join", "meet", "meet"), quad("meet_t", "meet", "meet", "join", "join"),
    quad("join_f", "join", "meet", "join", "meet"), quad("meet_f", "meet", "join", "meet", "join"),
    quad("join_i", "join", "join", "join", "join"), quad("meet_i", "meet", "meet", "meet", "meet"),
]
_ALL4 = {str(j): None for j in range(1, 5)}
TL4_WITNESSES = {
    "defs": {**_four_merge("meet_i", "join_i", "f", "t")},
    "L": {"join": {j: "(join_i x1 x2)" for j in _ALL4}, "meet": {j: "(meet_i x1 x2)" for j in _ALL4}},
    "M": "(M4 x1 x2 x3 x4)",
}

PBL_ENTRIES = BLU[:4]
PBL_WITNESSES = {"defs": V_DEF, "L": copy.deepcopy(BLU_WITNESSES["L"]), "M": "(v x1 x2)"}

IT_ENTRIES = _tl_binary(("join_k", "meet_k"), ("meet_k", "join_k"), ("join_k", "join_k"),
                        ("meet_k", "meet_k"))
IT_WITNESSES = {
    "defs": {"v": {"arity": 2, "term": merge_def("meet_i", "join_i", "meet_f", "join_f")}},
    "L": {"join_t": {"1": "(join_t x1 x2)", "2": "(join_t x1 x2)"},
          "meet_t": {"1": "(meet_t x1 x2)", "2": "(meet_t x1 x2)"},
          "join_k": {"1": "(join_i x1 x2)", "2": "(join_i x1 x2)"},
          "meet_k": {"1": "(meet_i x1 x2)", "2": "(meet_i x1 x2)"}},
    "M": "(v x1 x2)",
}
IT_T_WITNESSES = witnesses(IT_WITNESSES, {"neg": {"1": "(inv_t x1)", "2": "(inv_t x1)"}})

# --- Example pair that fails one condition each --------------------------------------------------

GAMMA_1 = [binary_pair("join", "join", "join"), binary_pair("meet", "meet", "meet"),
           e("neg", 1, "(neg x2)", "(neg x1)"), e("zero", 0, "zero", "zero"), e("one", 0, "one", "one")]
GAMMA_2 = [binary_pair("join", "join", "meet"), binary_pair("meet", "meet", "join"),
           e("neg", 1, "x2", "x1"), e("zero", 0, "zero", "one"), e("one", 0, "one", "zero")]

# --- implication-like expansions ---------------------------------------------------------------------

IMP_ENTRY = e("imp", 2, "(join (neg x1) x3)", ix("meet", 4, 1, 4))
IMP_WITNESSES = witnesses(BL_WITNESSES, {"neg": {"1": "(imp x1 bot_k)"}})
BOX_ENTRY = e("box", 1, "(meet (box_p x1) (box_m (neg x2)))", "(neg (box_p (neg x2)))")

DUPLICATORS: dict[str, dict] = {
    "Gamma_BLu": dup("Gamma_BLu", S.LAT, BLU, BLU_WITNESSES,
                     provenance="bilattice product L (.) L over lattices"),
    "Gamma_b": dup("Gamma_b", S.BLAT, BOUNDS, provenance="the four bounds (0,1), (1,0), (0,0), (1,1)"),
    "Gamma_BL": dup("Gamma_BL", S.BLAT, BLU + BOUNDS, BL_WITNESSES,
                    provenance="Gamma_BLu with the bounds Gamma_b"),
    "Gamma_pBL": dup("Gamma_pBL", S.LAT, PBL_ENTRIES, PBL_WITNESSES, mode="disjoint",
                     provenance="pre-bilattice product P (.) Q"),
    "Gamma_DBCu": dup("Gamma_DBCu", S.DMU, BLU + [e("conf", 1, "(neg x2)", "(neg x1)")],
                      witnesses(BLU_WITNESSES, {"neg": {"1": "(conf x1)"}}),
                      provenance="bilattices with conflation over De Morgan lattices"),
    "Gamma_DBC": dup("Gamma_DBC", S.BOOL, BLU + [e("conf", 1, "(neg x2)", "(neg x1)")] + BOUNDS,
                     witnesses(BL_WITNESSES, {"neg": {"1": "(conf x1)"}}),
                     provenance="bounded version of Gamma_DBCu over De Morgan algebras"),
    "Gamma_TLtf": dup("Gamma_TLtf", S.DBU, TLTF_ENTRIES, TLTF_WITNESSES,
                      provenance="16_TLtf as a duplicate of 4_DBu"),
    "Gamma_TLtfi_binary": dup("Gamma_TLtfi_binary", S.DBCU, TLTFI_BIN_ENTRIES, TLTFI_BIN_WITNESSES,
                              provenance="256 as a duplicate of 16_DBCu, read off its definition"),
    "Gamma_TLtfi_4ary": dup("Gamma_TLtfi_4ary", S.DMU, TLTFI_4_ENTRIES, TLTFI_4_WITNESSES, m=4,
                            provenance="256 as a fourth power of 4_DMu"),
    "Gamma_TLtf_4ary": dup("Gamma_TLtf_4ary", S.LAT, TLTF_4_ENTRIES, TLTF_4_WITNESSES, m=4,
                           provenance="16_TLtf as a fourth power of the two-element lattice"),
    "Gamma_TL_4": dup("Gamma_TL_4", S.LAT, TL4_ENTRIES, TL4_WITNESSES, m=4, mode="disjoint",
                      provenance="trilattices as four-factor products of lattices"),
    "Gamma_IT": dup("Gamma_IT", S.PBL, IT_ENTRIES, IT_WITNESSES, mode="disjoint",
                    provenance="interlaced trilattices over pre-bilattices"),
    "Gamma_IT_t": dup("Gamma_IT_t", S.DBU, IT_ENTRIES + [e("inv_t", 1, "(neg x1)", "(neg x2)")],
                      IT_T_WITNESSES, mode="disjoint",
                      provenance="interlaced trilattices with t-involution over bilattices"),
    "Gamma_H": dup("Gamma_H", S.HEYT, BLU + BOUNDS + [binary_pair("imp_k", "imp", "imp")],
                   witnesses(BL_WITNESSES, {"imp": {"1": "(imp_k x1 x2)"}}),
                   provenance="bilattices with knowledge implication over Heyting algebras"),
    "Gamma_H_prime": dup("Gamma_H_prime", S.HEYT,
                         BLU + BOUNDS + [e("bimp", 2, ix("imp", 4, 1, 3), ix("meet", 4, 1, 4))],
                         witnesses(BL_WITNESSES, {"imp": {"1": "(bimp x1 x2)"}}),
                         provenance="bounded Brouwerian bilattices over Heyting algebras"),
    "Gamma_BR": dup("Gamma_BR", S.BROUW, BLU + [e("imp", 2, ix("imp", 4, 1, 3), ix("meet", 4, 1, 4))],
                    witnesses(BLU_WITNESSES, {"imp": {"1": "(imp x1 x2)"}}),
                    provenance="Brouwerian bilattices over Brouwerian lattices"),
    "Gamma_bH": dup("Gamma_bH", S.BIHEYT, BLU + BOUNDS + [binary_pair("imp_t", "imp", "coimp")],
                    witnesses(BL_WITNESSES, {"imp": {"1": "(imp_t x1 x2)"},
                                             "coimp": {"2": "(imp_t x1 x2)"}}),
                    provenance="bilattices with truth implication over bi-Heyting algebras"),
    "Gamma_bH_k": dup("Gamma_bH_k", S.BIHEYT,
                      BLU + BOUNDS + [binary_pair("imp_t", "imp", "coimp"),
                                      binary_pair("imp_k", "imp", "imp")],
                      witnesses(BL_WITNESSES, {"imp": {"1": "(imp_t x1 x2)"},
                                               "coimp": {"2": "(imp_t x1 x2)"}}),
                      provenance="Gamma_bH with the knowledge implication added"),
    "Gamma_guard": dup("Gamma_guard", S.BLAT,
                       BLU + BOUNDS + [e("guard", 2, ix("meet", 4, 1, 3), ix("meet", 4, 1, 4))],
                       BL_WITNESSES, provenance="guard operation over distributive lattices"),
    "Gamma_slash": dup("Gamma_slash", S.BOOL, BLU + BOUNDS + [e("slash", 1, "(neg x1)", "x2")],
                       witnesses(BL_WITNESSES, {"neg": {"1": "(slash x1)"}}),
                       provenance="negation-by-failure over Kleene algebras"),
    "Gamma_imp": dup("Gamma_imp", S.BOOL, BLU + BOUNDS + [IMP_ENTRY], IMP_WITNESSES,
                     provenance="implicative bilattices over Boolean algebras"),
    "Gamma_imp_u": dup("Gamma_imp_u", S.BROUW,
                       BLU + [e("imp", 2, ix("imp", 4, 1, 3), ix("meet", 4, 1, 4))],
                       witnesses(BLU_WITNESSES, {"imp": {"1": "(imp x1 x2)"}}),
                       provenance="unbounded implicative bilattices over generalised Boolean lattices"),
    "Gamma_L": dup("Gamma_L", S.BOOL, BLU + BOUNDS + [e("L", 1, "x1", "(neg x1)")],
                   witnesses(BL_WITNESSES, {"neg": {"2": "(L x1)"}}),
                   provenance="epistemic operator over Boolean algebras"),
    "Gamma_RBL": dup("Gamma_RBL", S.RL,
                     BLU + BOUNDS + [e("ldiv", 2, ix("ldiv", 4, 1, 3), ix("mul", 4, 4, 1)),
                                     e("rdiv", 2, ix("rdiv", 4, 1, 3), ix("mul", 4, 3, 2))],
                     witnesses(BL_WITNESSES, {"mul": {"2": "(ldiv x2 x1)"},
                                              "ldiv": {"1": "(ldiv x1 x2)"},
                                              "rdiv": {"1": "(rdiv x1 x2)"}}),
                     provenance="residuated bilattices over residuated lattices"),
    "Gamma_MBL": dup("Gamma_MBL", S.BM, BLU + BOUNDS + [IMP_ENTRY, BOX_ENTRY],
                     witnesses(IMP_WITNESSES, {
                         "box_p": {"1": "(box (v x1 bot_k))"},
                         "box_m": {"1": "(box (v top_k (neg (imp x1 bot_k))))"}}),
                     provenance="modal bilattices over bimodal algebras"),
    "Gamma_1": dup("Gamma_1", S.BOOL, GAMMA_1,
                   provenance="satisfies (L') but not (P); product is the four-element De Morgan algebra"),
    "Gamma_2": dup("Gamma_2", S.BOOL, GAMMA_2,
                   provenance="satisfies (P) but not (L'); product is the four-element De Morgan algebra"),
}

"""Builders for every catalog algebra.

These functions are the source of truth; the JSON files under
``catalog/data/algebras`` are generated from them (see tools/build_catalog.py).
Most builders tabulate explicit formulas so that they stay independent of
the duplication engine; the few defined *as* duplicates say so.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..algebra import INDEX, FiniteAlgebra, from_functions
from ..properties import residuum
from . import signatures as S

CHAIN_LABELS = {2: ("0", "1"), 3: ("0", "u", "1")}


# --- lattices from orders --------------------------------------------------------------

def lattice_from_order(name: str, labels, leq: np.ndarray, sig=S.LAT) -> FiniteAlgebra:
    """Join and meet tables of a finite lattice given by its order matrix."""
    n = len(labels)
    join = np.empty(n * n, dtype=INDEX)
    meet = np.empty(n * n, dtype=INDEX)
    for a in range(n):
        for b in range(n):
            ups = [u for u in range(n) if leq[a, u] and leq[b, u]]
            downs = [d for d in range(n) if leq[d, a] and leq[d, b]]
            join[a * n + b] = next(u for u in ups if all(leq[u, v] for v in ups))
            meet[a * n + b] = next(d for d in downs if all(leq[v, d] for v in downs))
    tables = {"join": join, "meet": meet}
    if "zero" in sig:
        tables["zero"] = np.array([_least(leq)], dtype=INDEX)
        tables["one"] = np.array([_least(leq.T)], dtype=INDEX)
    return FiniteAlgebra(name, sig, n, tables, tuple(labels))


def _least(leq) -> int:
    return next(a for a in range(leq.shape[0]) if leq[a].all())


def _order(n, pairs) -> np.ndarray:
    leq = np.eye(n, dtype=bool)
    for a, b in pairs:
        leq[a, b] = True
    changed = True
    while changed:
        nxt = leq | ((leq.astype(int) @ leq.astype(int)) > 0)
        changed = bool((nxt != leq).any())
        leq = nxt
    return leq


def chain_order(n: int) -> np.ndarray:
    return np.triu(np.ones((n, n), dtype=bool))


def chain(n: int, sig=S.LAT, name: str | None = None) -> FiniteAlgebra:
    labels = CHAIN_LABELS.get(n, tuple(str(i) for i in range(n)))
    return lattice_from_order(name or f"{n}-chain", labels, chain_order(n), sig)


SQUARE_LABELS = ("(0,0)", "(0,1)", "(1,0)", "(1,1)")
SQUARE_ORDER = _order(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
M3_LABELS = ("0", "a", "b", "c", "1")
M3_ORDER = _order(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
# N5 with the chain 0 < a < c < 1 and b off to the side
N5_LABELS = ("0", "a", "b", "c", "1")
N5_ORDER = _order(5, [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)])


def with_ops(alg: FiniteAlgebra, sig, extra: dict, name: str | None = None) -> FiniteAlgebra:
    tables = {s: alg.tables[s] for s in alg.sig.names}
    tables.update({k: np.asarray(v, dtype=INDEX) for k, v in extra.items()})
    return FiniteAlgebra(name or alg.name, sig, alg.size, {s: tables[s] for s in sig.names}, alg.labels)


# --- residuated expansions ---------------------------------------------------------------

def heyting_from(L: FiniteAlgebra, name: str, bi: bool = False, bounded: bool = True) -> FiniteAlgebra:
    imp = residuum(L, "meet")
    if not imp.ok:
        raise ValueError(f"{L.name} is not a Heyting lattice (pair {imp.witness})")
    extra = {"imp": imp.table}
    if bi:
        # least b with a v b >= c: the residual of join in the reversed order
        dual = FiniteAlgebra(L.name, L.sig, L.size, {**L.tables, "join": L.tables["meet"],
                                                     "meet": L.tables["join"]}, L.labels)
        co = residuum(dual, "meet")
        extra["coimp"] = co.table
    sig = S.BIHEYT if bi else (S.HEYT if bounded else S.BROUW)
    return with_ops(L, sig, extra, name)


def residuated_chain(name: str, mul: Callable[[int, int], int]) -> FiniteAlgebra:
    L = chain(3, S.BLAT)
    tab = np.array([mul(a, b) for a in range(3) for b in range(3)], dtype=INDEX)
    tmp = FiniteAlgebra(name, S.Signature.of(("join", 2), ("meet", 2), ("mul", 2)), 3,
                        {"join": L.tables["join"], "meet": L.tables["meet"], "mul": tab}, L.labels)
    left = residuum(tmp, "meet", "mul", "left")
    right = residuum(tmp, "meet", "mul", "right")
    if not (left.ok and right.ok):
        raise ValueError(f"{name}: multiplication is not residuated")
    return with_ops(L, S.RL, {"mul": tab, "ldiv": left.table, "rdiv": right.table}, name)


def _lukasiewicz(a, b):
    return max(0, a + b - 2)


def _goedel(a, b):
    return min(a, b)


def _skewed(a, b):
    # x . y = x meet f(y) with f collapsing the middle element to 0
    return min(a, {0: 0, 1: 0, 2: 2}[b])


def bimodal_frame() -> FiniteAlgebra:
    """Powerset of a two-point frame {p, q} with two accessibility relations."""
    worlds = (0, 1)
    r_plus = {(0, 1), (1, 1)}
    r_minus = {(0, 0), (0, 1)}

    def box(rel):
        def f(x):
            return sum(1 << w for w in worlds
                       if all(x >> v & 1 for v in worlds if (w, v) in rel))
        return f

    labels = ("{}", "{p}", "{q}", "{p,q}")
    return from_functions("BM_2", S.BM, [0, 1, 2, 3], {
        "join": lambda a, b: a | b, "meet": lambda a, b: a & b, "neg": lambda a: 3 ^ a,
        "box_p": box(r_plus), "box_m": box(r_minus), "zero": lambda: 0, "one": lambda: 3,
    }, labels)


# --- De Morgan ------------------------------------------------------------------------------

def boolean2() -> FiniteAlgebra:
    return from_functions("2_B", S.BOOL, [0, 1], {
        "join": max, "meet": min, "neg": lambda a: 1 - a, "zero": lambda: 0, "one": lambda: 1})


def kleene3() -> FiniteAlgebra:
    return from_functions("3_DM", S.BOOL, [0, 1, 2], {
        "join": max, "meet": min, "neg": lambda a: 2 - a, "zero": lambda: 0, "one": lambda: 2},
        CHAIN_LABELS[3])


def de_morgan4(bounded: bool) -> FiniteAlgebra:
    elems = [(0, 0), (0, 1), (1, 0), (1, 1)]
    funcs = {
        "join": lambda a, b: (max(a[0], b[0]), max(a[1], b[1])),
        "meet": lambda a, b: (min(a[0], b[0]), min(a[1], b[1])),
        "neg": lambda a: (1 - a[1], 1 - a[0]),
        "zero": lambda: (0, 0), "one": lambda: (1, 1),
    }
    return from_functions("4_DM" if bounded else "4_DMu", S.BOOL if bounded else S.DMU, elems, funcs)


# --- bilattices L (.) L ----------------------------------------------------------------------

def bilattice_funcs(L: FiniteAlgebra) -> dict:
    """Product formulas of the bilattice L (.) L over a lattice L."""
    J, M = L.cube("join"), L.cube("meet")
    out = {
        "join_t": lambda a, b: (J[a[0], b[0]], M[a[1], b[1]]),
        "meet_t": lambda a, b: (M[a[0], b[0]], J[a[1], b[1]]),
        "join_k": lambda a, b: (J[a[0], b[0]], J[a[1], b[1]]),
        "meet_k": lambda a, b: (M[a[0], b[0]], M[a[1], b[1]]),
        "neg": lambda a: (a[1], a[0]),
    }
    if "zero" in L.sig:
        z, o = int(L.tables["zero"][0]), int(L.tables["one"][0])
        out.update({"bot_t": lambda: (z, o), "top_t": lambda: (o, z),
                    "bot_k": lambda: (z, z), "top_k": lambda: (o, o)})
    return {k: _intify(f) for k, f in out.items()}


def _intify(f):
    def g(*args):
        return tuple(int(v) for v in f(*args))
    return g


def _pairs(L: FiniteAlgebra):
    return [(a, b) for a in range(L.size) for b in range(L.size)]


def _pair_labels(L: FiniteAlgebra):
    return tuple(f"({L.label(a)},{L.label(b)})" for a, b in _pairs(L))


def bilattice(L: FiniteAlgebra, name: str, sig, extra: dict | None = None) -> FiniteAlgebra:
    funcs = bilattice_funcs(L)
    funcs.update(extra or {})
    return from_functions(name, sig, _pairs(L), funcs, _pair_labels(L))


def guard4() -> FiniteAlgebra:
    designated = {(1, 1), (1, 0)}
    return bilattice(chain(2, S.BLAT), "4_guard", S.extend(S.DB, ("guard", 2)), {
        "guard": lambda a, b: b if a in designated else (0, 0)})


def implication4(bounded: bool = True) -> FiniteAlgebra:
    designated = {(1, 1), (1, 0)}
    imp = {"imp": lambda a, b: b if a in designated else (1, 0)}
    if bounded:
        return bilattice(chain(2, S.BLAT), "4_imp", S.extend(S.DB, ("imp", 2)), imp)
    return bilattice(chain(2), "4_DBu_imp", S.extend(S.DBU, ("imp", 2)), imp)


def moore4() -> FiniteAlgebra:
    return bilattice(chain(2, S.BLAT), "4_L", S.extend(S.DB, ("L", 1)), {
        "L": lambda a: (a[0], 1 - a[0])})


def slash9() -> FiniteAlgebra:
    return bilattice(chain(3, S.BLAT), "9_slash", S.extend(S.DB, ("slash", 1)), {
        "slash": lambda a: (2 - a[0], a[1]) if a[0] in (0, 2) else a})


def slash4() -> FiniteAlgebra:
    return bilattice(chain(2, S.BLAT), "4_slash", S.extend(S.DB, ("slash", 1)), {
        "slash": lambda a: (1 - a[0], a[1])})


# --- trilattices --------------------------------------------------------------------------------

def _two_lattice(sign: str):
    return (max, min) if sign == "+" else (min, max)


def two_trilattice(t_sign: str, f_sign: str) -> FiniteAlgebra:
    tj, tm = _two_lattice(t_sign)
    fj, fm = _two_lattice(f_sign)
    name = "2" + {"+": "p", "-": "m"}[t_sign] + {"+": "p", "-": "m"}[f_sign]
    return from_functions(name, S.TL, [0, 1], {
        "join_t": tj, "meet_t": tm, "join_f": fj, "meet_f": fm, "join_i": max, "meet_i": min})


def four_trilattice(plus: bool) -> FiniteAlgebra:
    def co(f, g):
        return lambda a, b: (f(a[0], b[0]), g(a[1], b[1]))
    fj, fm = (max, min) if plus else (min, max)
    return from_functions("4plus" if plus else "4minus", S.TLT, [(0, 0), (0, 1), (1, 0), (1, 1)], {
        "join_t": co(max, min), "meet_t": co(min, max),
        "join_f": co(fj, fj), "meet_f": co(fm, fm),
        "join_i": co(max, max), "meet_i": co(min, min),
        "inv_t": lambda a: (a[1], a[0])})


def square_of(B: FiniteAlgebra, name: str, sig, spec: dict) -> FiniteAlgebra:
    """Algebra on B x B whose operations act coordinatewise.

    ``spec[sym]`` is ``(op1, op2)`` (binary or unary B-symbols applied per
    coordinate), ``"swap"``, or ``("swap", u)``: (a, b) -> (u(b), u(a)).
    """
    n = B.size
    N = n * n
    a1, a2 = np.divmod(np.arange(N, dtype=INDEX), n)
    tables = {}
    for sym, k in sig:
        how = spec[sym]
        if how == "swap":
            tables[sym] = a2 * n + a1
        elif how[0] == "swap":
            u = B.tables[how[1]]
            tables[sym] = u[a2] * n + u[a1]
        elif k == 1:
            u1, u2 = B.tables[how[0]], B.tables[how[1]]
            tables[sym] = u1[a1] * n + u2[a2]
        else:
            c1, c2 = B.cube(how[0]), B.cube(how[1])
            tables[sym] = (c1[a1[:, None], a1[None, :]] * n + c2[a2[:, None], a2[None, :]]).ravel()
    labels = tuple(f"({B.label(int(x))},{B.label(int(y))})" for x, y in zip(a1, a2))
    return FiniteAlgebra(name, sig, N, tables, labels)


def tl16() -> FiniteAlgebra:
    from . import catalog_algebra
    B = catalog_algebra("4_DBu")
    return square_of(B, "16_TLtf", S.TLTF, {
        "join_t": ("join_t", "join_t"), "meet_t": ("meet_t", "meet_t"),
        "join_f": ("join_k", "meet_k"), "meet_f": ("meet_k", "join_k"),
        "join_i": ("join_k", "join_k"), "meet_i": ("meet_k", "meet_k"),
        "inv_t": ("neg", "neg"), "inv_f": "swap"})


def tl256() -> FiniteAlgebra:
    from . import catalog_algebra
    B = catalog_algebra("16_DBCu")
    return square_of(B, "256", S.TLTFI, {
        "join_t": ("join_t", "join_t"), "meet_t": ("meet_t", "meet_t"),
        "join_f": ("join_k", "join_k"), "meet_f": ("meet_k", "meet_k"),
        "join_i": ("join_k", "meet_k"), "meet_i": ("meet_k", "join_k"),
        "inv_t": ("neg", "neg"), "inv_f": ("swap", "conf"), "inv_i": "swap"})


def dbc16() -> FiniteAlgebra:
    from ..duplicator import duplicate
    from . import catalog_algebra, catalog_duplicator
    return duplicate(catalog_duplicator("Gamma_DBCu"), catalog_algebra("4_DMu"), name="16_DBCu")


# --- registry -------------------------------------------------------------------------------------

@dataclass(frozen=True)
class AlgebraSpec:
    build: Callable[[], FiniteAlgebra]
    provenance: str
    suite: str | None = None


ALGEBRAS: dict[str, AlgebraSpec] = {
    "2Du": AlgebraSpec(lambda: chain(2, name="2Du"), "two-element lattice", "distributive-lattice"),
    "3Du": AlgebraSpec(lambda: chain(3, name="3Du"), "three-element chain 0 < u < 1", "distributive-lattice"),
    "2x2": AlgebraSpec(lambda: lattice_from_order("2x2", SQUARE_LABELS, SQUARE_ORDER),
                       "four-element Boolean lattice", "distributive-lattice"),
    "M3": AlgebraSpec(lambda: lattice_from_order("M3", M3_LABELS, M3_ORDER),
                      "diamond: modular, non-distributive", "lattice"),
    "N5": AlgebraSpec(lambda: lattice_from_order("N5", N5_LABELS, N5_ORDER),
                      "pentagon: non-modular", "lattice"),
    "2_D": AlgebraSpec(lambda: chain(2, S.BLAT, "2_D"), "bounded two-element lattice",
                       "bounded-distributive-lattice"),
    "3_D": AlgebraSpec(lambda: chain(3, S.BLAT, "3_D"), "bounded chain 0 < u < 1",
                       "bounded-distributive-lattice"),
    "2x2_D": AlgebraSpec(lambda: lattice_from_order("2x2_D", SQUARE_LABELS, SQUARE_ORDER, S.BLAT),
                         "bounded four-element Boolean lattice", "bounded-distributive-lattice"),
    "M3_D": AlgebraSpec(lambda: lattice_from_order("M3_D", M3_LABELS, M3_ORDER, S.BLAT),
                        "bounded diamond", "bounded-lattice"),
    "N5_D": AlgebraSpec(lambda: lattice_from_order("N5_D", N5_LABELS, N5_ORDER, S.BLAT),
                        "bounded pentagon", "bounded-lattice"),
    "2_B": AlgebraSpec(boolean2, "two-element Boolean algebra", "boolean-algebra"),
    "3_DM": AlgebraSpec(kleene3, "three-element Kleene algebra, ~u = u", "kleene-algebra"),
    "4_DM": AlgebraSpec(lambda: de_morgan4(True), "four-element De Morgan algebra",
                        "de-morgan-algebra"),
    "4_DMu": AlgebraSpec(lambda: de_morgan4(False), "bound-free reduct of 4_DM", "de-morgan-lattice"),
    "4_pDBu": AlgebraSpec(lambda: bilattice(chain(2), "4_pDBu", S.PBL),
                          "negation-free reduct of 4_DBu", "pre-bilattice-interlaced"),
    "4_DBu": AlgebraSpec(lambda: bilattice(chain(2), "4_DBu", S.DBU),
                         "four-element distributive bilattice (no bounds)", "distributive-bilattice"),
    "4_DB": AlgebraSpec(lambda: bilattice(chain(2, S.BLAT), "4_DB", S.DB),
                        "four-element bounded distributive bilattice", "bounded-distributive-bilattice"),
    "9_DB": AlgebraSpec(lambda: bilattice(chain(3, S.BLAT), "9_DB", S.DB),
                        "bilattice product of the bounded three-chain", "bounded-distributive-bilattice"),
    "16_DBCu": AlgebraSpec(dbc16, "duplicate of 4_DMu under Gamma_DBCu", "conflation"),
    "2pp": AlgebraSpec(lambda: two_trilattice("+", "+"), "two-element trilattice, t and f as 2", "trilattice"),
    "2pm": AlgebraSpec(lambda: two_trilattice("+", "-"), "two-element trilattice, f reversed", "trilattice"),
    "2mp": AlgebraSpec(lambda: two_trilattice("-", "+"), "two-element trilattice, t reversed", "trilattice"),
    "2mm": AlgebraSpec(lambda: two_trilattice("-", "-"), "two-element trilattice, t and f reversed",
                       "trilattice"),
    "4plus": AlgebraSpec(lambda: four_trilattice(True), "four-element trilattice with t-involution, f = 2 x 2",
                         "trilattice-t"),
    "4minus": AlgebraSpec(lambda: four_trilattice(False),
                          "four-element trilattice with t-involution, f reversed", "trilattice-t"),
    "16_TLtf": AlgebraSpec(tl16, "sixteen-element trilattice with t- and f-involutions", "trilattice-tf"),
    "256": AlgebraSpec(tl256, "trilattice with t-, f- and i-involutions on 16_DBCu squared", "trilattice-tfi"),
    "2_H": AlgebraSpec(lambda: heyting_from(chain(2, S.BLAT), "2_H"), "two-element Heyting algebra", "heyting"),
    "3_H": AlgebraSpec(lambda: heyting_from(chain(3, S.BLAT), "3_H"), "three-element Heyting chain", "heyting"),
    "2x2_H": AlgebraSpec(lambda: heyting_from(
        lattice_from_order("2x2", SQUARE_LABELS, SQUARE_ORDER, S.BLAT), "2x2_H"),
        "four-element Boolean lattice as Heyting algebra", "heyting"),
    "2_bH": AlgebraSpec(lambda: heyting_from(chain(2, S.BLAT), "2_bH", bi=True),
                        "two-element bi-Heyting algebra", "bi-heyting"),
    "3_bH": AlgebraSpec(lambda: heyting_from(chain(3, S.BLAT), "3_bH", bi=True),
                        "three-element bi-Heyting chain", "bi-heyting"),
    "2x2_bH": AlgebraSpec(lambda: heyting_from(
        lattice_from_order("2x2", SQUARE_LABELS, SQUARE_ORDER, S.BLAT), "2x2_bH", bi=True),
        "four-element Boolean lattice as bi-Heyting algebra", "bi-heyting"),
    "3_Br": AlgebraSpec(lambda: heyting_from(chain(3), "3_Br", bounded=False),
                        "three-element Brouwerian chain", "brouwerian"),
    "2_GB": AlgebraSpec(lambda: heyting_from(chain(2), "2_GB", bounded=False),
                        "two-element generalised Boolean lattice", "generalised-boolean"),
    "3_RL_G": AlgebraSpec(lambda: residuated_chain("3_RL_G", _goedel),
                          "three-element Goedel chain, mul = meet", "residuated-lattice"),
    "3_RL_L": AlgebraSpec(lambda: residuated_chain("3_RL_L", _lukasiewicz),
                          "three-element Lukasiewicz chain", "residuated-lattice"),
    "3_RL_nc": AlgebraSpec(lambda: residuated_chain("3_RL_nc", _skewed),
                           "three-element chain with non-commutative mul(x, y) = x meet f(y)",
                           "residuated-lattice"),
    "BM_2": AlgebraSpec(bimodal_frame, "powerset of a two-point bimodal frame", "bimodal"),
    "4_guard": AlgebraSpec(guard4, "4_DB with the guard operation, by cases", "bounded-distributive-bilattice"),
    "4_imp": AlgebraSpec(implication4, "4_DB with the designated-filter implication, by cases",
                         "bounded-distributive-bilattice"),
    "4_DBu_imp": AlgebraSpec(lambda: implication4(False), "4_DBu with the same implication, by cases",
                             "distributive-bilattice"),
    "4_L": AlgebraSpec(moore4, "4_DB with the epistemic operator L(a1, a2) = (a1, a1')",
                       "bounded-distributive-bilattice"),
    "9_slash": AlgebraSpec(slash9, "9_DB with negation-by-failure, by cases", "bounded-distributive-bilattice"),
    "4_slash": AlgebraSpec(slash4, "4_DB with negation-by-failure, by cases", "bounded-distributive-bilattice"),
}

ALIASES = {"2-chain": "2Du", "3-chain": "3Du", "2_Du": "2Du", "3_Du": "3Du", "2x2u": "2x2"}

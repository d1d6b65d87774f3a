"""Named axiom suites. Symbol names follow the catalog signatures."""

from __future__ import annotations

from itertools import permutations

from ..axioms import Obligation, adjoint, coadjoint, identity, monotone, radjoint

LATTICE_PAIRS = {
    "": ("join", "meet"),
    "t": ("join_t", "meet_t"),
    "k": ("join_k", "meet_k"),
    "f": ("join_f", "meet_f"),
    "i": ("join_i", "meet_i"),
}


def lattice_laws(join: str, meet: str, tag: str = "") -> list[Obligation]:
    p = f"{tag}:" if tag else ""
    out = []
    for op in (join, meet):
        out.append(identity(f"{p}{op}-comm", f"({op} x1 x2)", f"({op} x2 x1)"))
        out.append(identity(f"{p}{op}-assoc", f"({op} ({op} x1 x2) x3)", f"({op} x1 ({op} x2 x3))"))
    out.append(identity(f"{p}absorb-{join}", f"({join} x1 ({meet} x1 x2))", "x1"))
    out.append(identity(f"{p}absorb-{meet}", f"({meet} x1 ({join} x1 x2))", "x1"))
    return out


def distributes(op: str, over: str) -> Obligation:
    return identity(f"{op}-over-{over}", f"({op} x1 ({over} x2 x3))",
                    f"({over} ({op} x1 x2) ({op} x1 x3))")


def mutual_distributivity(ops) -> list[Obligation]:
    return [distributes(a, b) for a, b in permutations(ops, 2)]


def bounds_laws(join: str, meet: str, bot: str, top: str) -> list[Obligation]:
    return [identity(f"{bot}-bottom", f"({meet} x1 {bot})", bot),
            identity(f"{top}-top", f"({join} x1 {top})", top)]


def interlacing(pairs) -> list[Obligation]:
    """Every operation of every pair monotone for every pair's order."""
    out = []
    for _, meet_order in pairs:
        for pair in pairs:
            for op in pair:
                out.append(monotone(f"{op}-mono-{meet_order}", op, meet_order))
    return out


# --- lattices and lattice expansions -------------------------------------------------

def lattice() -> list[Obligation]:
    return lattice_laws("join", "meet")


def bounded_lattice() -> list[Obligation]:
    return lattice() + bounds_laws("join", "meet", "zero", "one")


def distributive_lattice() -> list[Obligation]:
    return lattice() + [distributes("meet", "join"), distributes("join", "meet")]


def bounded_distributive_lattice() -> list[Obligation]:
    return distributive_lattice() + bounds_laws("join", "meet", "zero", "one")


def de_morgan_lattice() -> list[Obligation]:
    return distributive_lattice() + [
        identity("neg-involution", "(neg (neg x1))", "x1"),
        identity("neg-de-morgan", "(neg (join x1 x2))", "(meet (neg x1) (neg x2))"),
    ]


def de_morgan_algebra() -> list[Obligation]:
    return de_morgan_lattice() + bounds_laws("join", "meet", "zero", "one") + [
        identity("neg-zero", "(neg zero)", "one")]


def kleene_algebra() -> list[Obligation]:
    return de_morgan_algebra() + [
        identity("kleene", "(meet (meet x1 (neg x1)) (join x2 (neg x2)))", "(meet x1 (neg x1))")]


def boolean_algebra() -> list[Obligation]:
    return de_morgan_algebra() + [
        identity("complement-meet", "(meet x1 (neg x1))", "zero"),
        identity("complement-join", "(join x1 (neg x1))", "one")]


def heyting() -> list[Obligation]:
    return bounded_distributive_lattice() + [adjoint("imp-adjoint", "meet", "imp", "meet")]


def bi_heyting() -> list[Obligation]:
    return heyting() + [coadjoint("coimp-coadjoint", "join", "coimp", "meet")]


def brouwerian() -> list[Obligation]:
    return distributive_lattice() + [adjoint("imp-adjoint", "meet", "imp", "meet")]


def generalised_boolean() -> list[Obligation]:
    return brouwerian() + [
        identity("gb-double", "(imp (imp x1 x2) x1)", "x1"),
    ]


def residuated_lattice() -> list[Obligation]:
    return lattice() + bounds_laws("join", "meet", "zero", "one") + [
        identity("mul-assoc", "(mul (mul x1 x2) x3)", "(mul x1 (mul x2 x3))"),
        adjoint("ldiv-adjoint", "mul", "ldiv", "meet"),
        radjoint("rdiv-adjoint", "mul", "rdiv", "meet"),
    ]


def bimodal() -> list[Obligation]:
    out = boolean_algebra()
    for box in ("box_p", "box_m"):
        out.append(identity(f"{box}-top", f"({box} one)", "one"))
        out.append(identity(f"{box}-meet", f"({box} (meet x1 x2))", f"(meet ({box} x1) ({box} x2))"))
    return out


# --- bilattices -----------------------------------------------------------------------

BL_PAIRS = (LATTICE_PAIRS["t"], LATTICE_PAIRS["k"])
BL_OPS = ("join_t", "meet_t", "join_k", "meet_k")

NEGATION_LAWS = [
    identity("neg-involution", "(neg (neg x1))", "x1"),
    identity("neg-join_t", "(neg (join_t x1 x2))", "(meet_t (neg x1) (neg x2))"),
    identity("neg-join_k", "(neg (join_k x1 x2))", "(join_k (neg x1) (neg x2))"),
    identity("neg-meet_k", "(neg (meet_k x1 x2))", "(meet_k (neg x1) (neg x2))"),
]

BILATTICE_BOUNDS = (bounds_laws("join_t", "meet_t", "bot_t", "top_t")
                    + bounds_laws("join_k", "meet_k", "bot_k", "top_k"))


def pre_bilattice_interlaced() -> list[Obligation]:
    return lattice_laws(*BL_PAIRS[0], "t") + lattice_laws(*BL_PAIRS[1], "k") + interlacing(BL_PAIRS)


def bilattice() -> list[Obligation]:
    """Interlaced bilattice with negation (unbounded)."""
    return pre_bilattice_interlaced() + NEGATION_LAWS


def bounded_bilattice() -> list[Obligation]:
    return bilattice() + BILATTICE_BOUNDS


def distributive_bilattice() -> list[Obligation]:
    return (lattice_laws(*BL_PAIRS[0], "t") + lattice_laws(*BL_PAIRS[1], "k")
            + mutual_distributivity(BL_OPS) + NEGATION_LAWS)


def bounded_distributive_bilattice() -> list[Obligation]:
    return distributive_bilattice() + BILATTICE_BOUNDS


def conflation() -> list[Obligation]:
    return distributive_bilattice() + [
        identity("conf-involution", "(conf (conf x1))", "x1"),
        identity("conf-join_t", "(conf (join_t x1 x2))", "(join_t (conf x1) (conf x2))"),
        identity("conf-meet_t", "(conf (meet_t x1 x2))", "(meet_t (conf x1) (conf x2))"),
        identity("conf-join_k", "(conf (join_k x1 x2))", "(meet_k (conf x1) (conf x2))"),
        identity("conf-meet_k", "(conf (meet_k x1 x2))", "(join_k (conf x1) (conf x2))"),
        monotone("conf-preserves-t", "conf", "meet_t"),
        monotone("conf-reverses-k", "conf", "meet_k", antitone=(1,)),
        identity("conf-neg-commute", "(conf (neg x1))", "(neg (conf x1))"),
    ]


def bilattice_k_implication() -> list[Obligation]:
    return bounded_distributive_bilattice() + [adjoint("imp_k-adjoint", "meet_k", "imp_k", "meet_k")]


def bilattice_t_implication() -> list[Obligation]:
    return bounded_distributive_bilattice() + [adjoint("imp_t-adjoint", "meet_t", "imp_t", "meet_t")]


def modal_bilattice() -> list[Obligation]:
    return bounded_distributive_bilattice() + [
        identity("box-top_t", "(box top_t)", "top_t"),
        identity("box-meet_t", "(box (meet_t x1 x2))", "(meet_t (box x1) (box x2))"),
        identity("box-imp", "(box (imp bot_k x1))", "(imp bot_k (box x1))"),
    ]


def residuated_bilattice() -> list[Obligation]:
    """Product axioms checked for the residuated duplicate: divisions are t-monotone
    in the numerator and t-antitone in the denominator."""
    return bounded_bilattice() + [
        monotone("ldiv-t-monotone", "ldiv", "meet_t", antitone=(1,)),
        monotone("rdiv-t-monotone", "rdiv", "meet_t", antitone=(2,)),
    ]


# --- trilattices ------------------------------------------------------------------------

TL_PAIRS = (LATTICE_PAIRS["t"], LATTICE_PAIRS["f"], LATTICE_PAIRS["i"])
TL_OPS = tuple(op for pair in TL_PAIRS for op in pair)


def trilattice_lattices() -> list[Obligation]:
    out = []
    for v, (j, m) in zip("tfi", TL_PAIRS):
        out += lattice_laws(j, m, v)
    return out


def trilattice() -> list[Obligation]:
    """Distributive trilattice: all 30 distributive laws among the six operations."""
    return trilattice_lattices() + mutual_distributivity(TL_OPS)


def interlaced_trilattice() -> list[Obligation]:
    return trilattice_lattices() + interlacing(TL_PAIRS)


def involution(v: str) -> list[Obligation]:
    inv = f"inv_{v}"
    out = [identity(f"{inv}-involution", f"({inv} ({inv} x1))", "x1")]
    for w, (j, m) in zip("tfi", TL_PAIRS):
        if w == v:
            out.append(identity(f"{inv}-reverses-{j}", f"({inv} ({j} x1 x2))", f"({m} ({inv} x1) ({inv} x2))"))
            out.append(identity(f"{inv}-reverses-{m}", f"({inv} ({m} x1 x2))", f"({j} ({inv} x1) ({inv} x2))"))
        else:
            for op in (j, m):
                out.append(identity(f"{inv}-preserves-{op}", f"({inv} ({op} x1 x2))",
                                    f"({op} ({inv} x1) ({inv} x2))"))
    return out


def commuting(vs: str) -> list[Obligation]:
    out = []
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            p, q = f"inv_{vs[a]}", f"inv_{vs[b]}"
            out.append(identity(f"{p}-{q}-commute", f"({p} ({q} x1))", f"({q} ({p} x1))"))
    return out


def trilattice_with(vs: str, base=trilattice) -> list[Obligation]:
    out = base()
    for v in vs:
        out += involution(v)
    return out + commuting(vs)


SUITES = {
    "lattice": (lattice, "lattice laws"),
    "bounded-lattice": (bounded_lattice, "lattice with least and greatest element"),
    "distributive-lattice": (distributive_lattice, "distributive lattice"),
    "bounded-distributive-lattice": (bounded_distributive_lattice, "bounded distributive lattice"),
    "de-morgan-lattice": (de_morgan_lattice, "De Morgan lattice"),
    "de-morgan-algebra": (de_morgan_algebra, "De Morgan algebra"),
    "kleene-algebra": (kleene_algebra, "Kleene algebra"),
    "boolean-algebra": (boolean_algebra, "Boolean algebra"),
    "heyting": (heyting, "Heyting algebra (adjointness of imp)"),
    "bi-heyting": (bi_heyting, "bi-Heyting algebra (imp and coimp residuals)"),
    "brouwerian": (brouwerian, "Brouwerian lattice"),
    "generalised-boolean": (generalised_boolean, "generalised Boolean lattice"),
    "residuated-lattice": (residuated_lattice, "residuated lattice with bounds"),
    "bimodal": (bimodal, "Boolean algebra with two meet-preserving boxes"),
    "pre-bilattice-interlaced": (pre_bilattice_interlaced, "interlaced pre-bilattice"),
    "bilattice": (bilattice, "interlaced bilattice with negation"),
    "bounded-bilattice": (bounded_bilattice, "bounded interlaced bilattice"),
    "distributive-bilattice": (distributive_bilattice, "12 distributive laws and negation laws"),
    "bounded-distributive-bilattice": (bounded_distributive_bilattice, "bounded distributive bilattice"),
    "conflation": (conflation, "distributive bilattice with conflation"),
    "bilattice-k-implication": (bilattice_k_implication, "imp_k adjoint to meet_k"),
    "bilattice-t-implication": (bilattice_t_implication, "imp_t adjoint to meet_t"),
    "modal-bilattice": (modal_bilattice, "box equations"),
    "residuated-bilattice": (residuated_bilattice, "bounded bilattice with t-monotone divisions"),
    "trilattice": (trilattice, "distributive trilattice"),
    "interlaced-trilattice": (interlaced_trilattice, "interlaced trilattice"),
    "trilattice-t": (lambda: trilattice_with("t"), "trilattice with t-involution"),
    "trilattice-tf": (lambda: trilattice_with("tf"), "trilattice with t- and f-involutions"),
    "trilattice-tfi": (lambda: trilattice_with("tfi"), "trilattice with three involutions"),
    "interlaced-trilattice-t": (lambda: trilattice_with("t", interlaced_trilattice),
                                "interlaced trilattice with t-involution"),
}

"""Rows of the two summary tables, as data for :mod:`.verify`.

Rows marked finite-witness concern varieties that are not finitely
generated (or whose generators are not all in the catalog); for those the
conditions are checked over a list of finite members and the claim is
limited to them.
"""

from __future__ import annotations

from .verify import BIG_CAP, FINITE_WITNESS, Claim, RowSpec

LATTICES = ("2Du", "3Du", "2x2", "M3", "N5")
BOUNDED_LATTICES = ("2_D", "3_D", "2x2_D", "M3_D", "N5_D")
HEYTING = ("2_H", "3_H", "2x2_H")
BIHEYTING = ("2_bH", "3_bH", "2x2_bH")
RL_CHAINS = ("3_RL_G", "3_RL_L", "3_RL_nc")
SIGNED = ("2pp", "2pm", "2mp", "2mm")
V = "(join_k (meet_k {a} (join_t {a} {b})) (meet_k {b} (meet_t {a} {b})))"


def c(id, kind, **args) -> Claim:
    return Claim(id, kind, args)


def conds(g, bases, **extra) -> Claim:
    return c(f"conditions {g} over {','.join(bases)}", "conditions", duplicator=g, bases=list(bases),
             **extra)


def iso(*refs) -> Claim:
    return c("isomorphic " + " ~ ".join(refs), "isomorphism", algebras=list(refs))


def suite(ref, name, cap=None) -> Claim:
    args = {"algebra": ref, "suite": name}
    if cap:
        args["cap"] = cap
    return c(f"suite {name} on {ref}", "suite", **args)


def formula(ref, cases, ops, checks) -> Claim:
    return c(f"{ref} agrees with {cases} on {','.join(ops)}", "formula-consistency",
             formula=ref, cases=cases, ops=list(ops), checks=checks)


def condition(g, cond, expect, bases, mode="search") -> Claim:
    return c(f"{cond} {expect}s for {g} ({mode})", "condition", duplicator=g, condition=cond,
             expect=expect, bases=list(bases), mode=mode)


TABLE1 = (
    RowSpec(
        "BL/L", "bilattices over lattices", "table1", "Gamma_BLu", LATTICES, "bilattice",
        scope=FINITE_WITNESS,
        claims=(
            conds("Gamma_BL", BOUNDED_LATTICES),
            suite("P(Gamma_BL;M3_D)", "bounded-bilattice"),
            c("equivalence smoke test Gamma_BLu 2Du -> 2Du", "smoke-test",
              duplicator="Gamma_BLu", source="2Du", target="2Du"),
        )),
    RowSpec(
        "DB/D", "distributive bilattices over distributive lattices", "table1", "Gamma_BL", ("2_D",),
        "bounded-distributive-bilattice",
        claims=(
            conds("Gamma_BLu", ("2Du",)),
            iso("P(Gamma_BLu;2Du)", "4_DBu"),
            iso("P(Gamma_BL;2_D)", "4_DB"),
            iso("P(Gamma_BL;3_D)", "9_DB"),
            suite("P(Gamma_BLu;2Du)", "distributive-bilattice"),
            c("congruences transfer for 3Du", "congruence-transfer", duplicator="Gamma_BLu",
              base="3Du", count=4),
            c("3Du has 4 congruences", "congruence-count", algebra="3Du", count=4),
            c("subdirect irreducibility transfers for 2Du", "si-transfer", duplicator="Gamma_BLu",
              base="2Du", expect=True),
            c("subdirect irreducibility transfers for 3Du", "si-transfer", duplicator="Gamma_BLu",
              base="3Du", expect=False),
            c("free algebra on one generator", "free-algebra", duplicator="Gamma_BLu", base="2Du",
              k=1, size=16),
            c("equivalence smoke test Gamma_BLu 2Du -> 3Du", "smoke-test",
              duplicator="Gamma_BLu", source="2Du", target="3Du"),
            c("equivalence smoke test Gamma_BLu 3Du -> 2Du", "smoke-test",
              duplicator="Gamma_BLu", source="3Du", target="2Du"),
        )),
    RowSpec(
        "DBC/DM", "distributive bilattices with conflation over De Morgan algebras", "table1",
        "Gamma_DBC", ("4_DM", "3_DM", "2_B"), "conflation",
        claims=(
            suite("P(Gamma_DBC;4_DM)", "bounded-distributive-bilattice"),
            conds("Gamma_DBCu", ("4_DMu",)),
            iso("P(Gamma_DBCu;4_DMu)", "16_DBCu"),
            condition("Gamma_1", "P", "fail", ("2_B",)),
            condition("Gamma_1", "L'", "pass", ("2_B",)),
            condition("Gamma_2", "P", "pass", ("2_B",)),
            condition("Gamma_2", "L'", "fail", ("2_B",)),
            iso("P(Gamma_1;2_B)", "4_DM"),
            iso("P(Gamma_2;2_B)", "4_DM"),
        )),
    RowSpec(
        "TLtf/DBu", "t/f-distributive trilattices over distributive bilattices", "table1",
        "Gamma_TLtf", ("4_DBu",), "trilattice-tf",
        claims=(iso("P(Gamma_TLtf;4_DBu)", "16_TLtf"),)),
    RowSpec(
        "TLtfi/DBCu", "trilattices with t, f and i involutions over distributive bilattices "
        "with conflation", "table1", "Gamma_TLtfi_binary", ("16_DBCu",), "trilattice-tfi",
        suite_cap=BIG_CAP,
        claims=(iso("P(Gamma_TLtfi_binary;16_DBCu)", "256", "P(Gamma_TLtfi_4ary;4_DMu)"),)),
    RowSpec(
        "BLk/H", "bilattices with knowledge implication over Heyting algebras", "table1",
        "Gamma_H", HEYTING, "bilattice-k-implication", scope=FINITE_WITNESS,
        claims=(
            c("meet has a residuum on 2_D", "residuum", algebra="2_D", meet="meet"),
            c("meet has a residuum on 3Du", "residuum", algebra="3Du", meet="meet"),
            c("meet has a residuum on 2x2", "residuum", algebra="2x2", meet="meet"),
            c("imp is the residuum of meet on 3_H", "residuum", algebra="3_H", meet="meet",
              imp="imp"),
            c("N5 has no residuum", "residuum", algebra="N5", meet="meet", expect="none"),
            c("imp_k is the residuum of meet_k on P(Gamma_H;3_H)", "residuum",
              algebra="P(Gamma_H;3_H)", meet="meet_k", imp="imp_k"),
            c("imp_k is (imp, imp) coordinatewise", "coordinatewise", duplicator="Gamma_H",
              base="3_H", op="imp_k", coordinates=["imp", "imp"]),
            conds("Gamma_BR", ("3_Br",)),
            conds("Gamma_H_prime", HEYTING),
            c("bimp is term-definable from imp_k", "identity",
              algebra="P(Gamma_H+Gamma_H_prime;3_H)", lhs="(bimp x1 x2)",
              rhs=V.format(a="(imp_k x1 x2)", b="(meet_k (neg x1) x2)")),
            c("imp_k is term-definable from bimp", "identity",
              algebra="P(Gamma_H+Gamma_H_prime;3_H)", lhs="(imp_k x1 x2)",
              rhs=V.format(a="(bimp x1 x2)", b="(neg (bimp (neg x1) (neg x2)))")),
        )),
    RowSpec(
        "BLt/bH", "bilattices with truth implication over bi-Heyting algebras", "table1",
        "Gamma_bH", BIHEYTING, "bilattice-t-implication", scope=FINITE_WITNESS,
        claims=(
            conds("Gamma_bH_k", BIHEYTING),
            c("imp_k is term-definable from imp_t", "identity", algebra="P(Gamma_bH_k;2x2_bH)",
              lhs="(imp_k x1 x2)",
              rhs="(join_k (meet_k (imp_t x1 x2) top_t) "
                  "(meet_k (neg (imp_t (neg x1) (neg x2))) bot_t))"),
            c("imp_t is the residuum of meet_t on P(Gamma_bH;3_bH)", "residuum",
              algebra="P(Gamma_bH;3_bH)", meet="meet_t", imp="imp_t"),
        )),
    RowSpec(
        "guard/D", "bilattices with guard over distributive lattices", "table1", "Gamma_guard",
        ("2_D", "3_D"), "bounded-distributive-bilattice",
        claims=(formula("P(Gamma_guard;2_D)", "4_guard", ["guard"], 16),)),
    RowSpec(
        "slash/KL", "bilattices with slash over Kleene algebras", "table1", "Gamma_slash",
        ("3_DM", "2_B"), "bounded-distributive-bilattice",
        claims=(
            formula("P(Gamma_slash;3_DM)", "9_slash", ["slash"], 9),
            formula("P(Gamma_slash;2_B)", "4_slash", ["slash"], 4),
        )),
    RowSpec(
        "implicative/B", "implicative bilattices over Boolean algebras", "table1", "Gamma_imp",
        ("2_B",), "bounded-distributive-bilattice",
        claims=(
            formula("P(Gamma_imp;2_B)", "4_imp", ["imp"], 16),
            conds("Gamma_imp_u", ("2_GB",)),
            iso("P(Gamma_imp_u;2_GB)", "4_DBu_imp"),
            formula("P(Gamma_imp_u;2_GB)", "4_DBu_imp", ["imp"], 16),
        )),
    RowSpec(
        "Moore/B", "bilattices with an epistemic operator over Boolean algebras", "table1",
        "Gamma_L", ("2_B",), "bounded-distributive-bilattice",
        claims=(formula("P(Gamma_L;2_B)", "4_L", ["L"], 4),)),
    RowSpec(
        "RBL/RL", "residuated bilattices over residuated lattices", "table1", "Gamma_RBL",
        RL_CHAINS, "residuated-bilattice", scope=FINITE_WITNESS),
    RowSpec(
        "MBL/BM", "modal bilattices over bimodal algebras", "table1", "Gamma_MBL", ("BM_2",),
        "modal-bilattice", scope=FINITE_WITNESS),
)

TABLE2 = (
    RowSpec(
        "TLtf/Du", "t/f-distributive trilattices over distributive lattices (four factors)",
        "table2", "Gamma_TLtf_4ary", ("2Du",), "trilattice-tf",
        claims=(iso("P(Gamma_TLtf_4ary;2Du)", "16_TLtf"),)),
    RowSpec(
        "TLtfi/DMu", "trilattices with involutions over De Morgan lattices (four factors)",
        "table2", "Gamma_TLtfi_4ary", ("4_DMu",), "trilattice-tfi", suite_cap=BIG_CAP,
        claims=(iso("P(Gamma_TLtfi_4ary;4_DMu)", "256"),)),
    RowSpec(
        "pBL/LxL", "interlaced pre-bilattices over pairs of lattices", "table2", "Gamma_pBL",
        ("2Du", "3Du", "M3"), "pre-bilattice-interlaced", scope=FINITE_WITNESS,
        claims=(
            c("construct Mixed(Gamma_pBL;2Du,3Du)", "construct",
              algebra="Mixed(Gamma_pBL;2Du,3Du)", size=6),
            suite("Mixed(Gamma_pBL;2Du,3Du)", "pre-bilattice-interlaced"),
            c("mixed product of equal factors is the duplicate", "mixed-equals-duplicate",
              duplicator="Gamma_pBL", base="3Du"),
            condition("Gamma_BLu", "D", "fail", (), mode="witness"),
        )),
    RowSpec(
        "IT/pBLxpBL", "interlaced trilattices over pairs of pre-bilattices", "table2", "Gamma_IT",
        ("4_pDBu", "Mixed(Gamma_pBL;2Du,3Du)"), "interlaced-trilattice", scope=FINITE_WITNESS,
        claims=(
            suite("Mixed(Gamma_IT;4_pDBu,Mixed(Gamma_pBL;2Du,3Du))", "interlaced-trilattice"),
            conds("Gamma_TL_4", LATTICES),
            suite("Mixed(Gamma_TL_4;2Du,3Du,M3,2Du)", "interlaced-trilattice"),
        )),
    RowSpec(
        "TL/pDBuxpDBu", "distributive trilattices over pairs of distributive pre-bilattices",
        "table2", "Gamma_IT", ("4_pDBu",), "trilattice",
        claims=(
            c("P(Gamma_IT;4_pDBu) separates into the signed two-element trilattices",
              "separation", algebra="P(Gamma_IT;4_pDBu)", into=list(SIGNED)),
            c("Sub(Prod(2pp,2pm);1,2) separates into the signed two-element trilattices",
              "separation", algebra="Sub(Prod(2pp,2pm);1,2)", into=list(SIGNED)),
            conds("Gamma_TL_4", ("2Du",)),
            iso("P(Gamma_TL_4;2Du)", "Prod(2pp,2pm,2mp,2mm)"),
        )),
    RowSpec(
        "ITt/BLxBL", "interlaced trilattices with t-negation over pairs of bilattices", "table2",
        "Gamma_IT_t", ("4_DBu", "P(Gamma_BLu;3Du)"), "interlaced-trilattice-t",
        scope=FINITE_WITNESS,
        claims=(conds("Gamma_IT_t", ("P(Gamma_BLu;M3)",)),
                suite("Mixed(Gamma_IT_t;4_DBu,P(Gamma_BLu;M3))", "interlaced-trilattice-t"),)),
    RowSpec(
        "TLt/DBuxDBu", "trilattices with t-negation over pairs of distributive bilattices",
        "table2", "Gamma_IT_t", ("4_DBu",), "trilattice-t",
        claims=(
            c("P(Gamma_IT_t;4_DBu) separates into 4plus and 4minus", "separation",
              algebra="P(Gamma_IT_t;4_DBu)", into=["4plus", "4minus"]),
            iso("P(Gamma_IT_t;4_DBu)", "P(Gamma_IT_t;P(Gamma_BLu;2Du))"),
        )),
)

TABLES = {"table1": TABLE1, "table2": TABLE2}

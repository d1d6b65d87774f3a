"""Signatures used by catalog algebras and duplicators. Order is significant."""

from ..terms import Signature

_BIN = 2

LAT = Signature.of(("join", _BIN), ("meet", _BIN))
BLAT = Signature(LAT.symbols + (("zero", 0), ("one", 0)))
BOOL = Signature.of(("join", _BIN), ("meet", _BIN), ("neg", 1), ("zero", 0), ("one", 0))
DMU = Signature.of(("join", _BIN), ("meet", _BIN), ("neg", 1))
HEYT = Signature.of(("join", _BIN), ("meet", _BIN), ("imp", _BIN), ("zero", 0), ("one", 0))
BIHEYT = Signature.of(("join", _BIN), ("meet", _BIN), ("imp", _BIN), ("coimp", _BIN),
                      ("zero", 0), ("one", 0))
BROUW = Signature.of(("join", _BIN), ("meet", _BIN), ("imp", _BIN))
RL = Signature.of(("join", _BIN), ("meet", _BIN), ("mul", _BIN), ("ldiv", _BIN), ("rdiv", _BIN),
                  ("zero", 0), ("one", 0))
BM = Signature.of(("join", _BIN), ("meet", _BIN), ("neg", 1), ("box_p", 1), ("box_m", 1),
                  ("zero", 0), ("one", 0))

PBL = Signature.of(("join_t", _BIN), ("meet_t", _BIN), ("join_k", _BIN), ("meet_k", _BIN))
DBU = Signature(PBL.symbols + (("neg", 1),))
BL_BOUNDS = (("bot_t", 0), ("top_t", 0), ("bot_k", 0), ("top_k", 0))
DB = Signature(DBU.symbols + BL_BOUNDS)
DBCU = Signature(DBU.symbols + (("conf", 1),))


def extend(sig: Signature, *extra) -> Signature:
    return Signature(sig.symbols + tuple(extra))


TL = Signature.of(("join_t", _BIN), ("meet_t", _BIN), ("join_f", _BIN), ("meet_f", _BIN),
                  ("join_i", _BIN), ("meet_i", _BIN))
TLT = extend(TL, ("inv_t", 1))
TLTF = extend(TLT, ("inv_f", 1))
TLTFI = extend(TLTF, ("inv_i", 1))

BY_NAME = {
    "LAT": LAT, "BLAT": BLAT, "BOOL": BOOL, "DMU": DMU, "HEYT": HEYT, "BIHEYT": BIHEYT,
    "BROUW": BROUW, "RL": RL, "BM": BM, "PBL": PBL, "DBU": DBU, "DB": DB, "DBCU": DBCU,
    "TL": TL, "TLT": TLT, "TLTF": TLTF, "TLTFI": TLTFI,
}

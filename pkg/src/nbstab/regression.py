"""The shipped regression corpus: stored codes with expected parameters."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from . import derive, families, puncture
from . import stabilizer as st

CORPUS_DIR = Path(__file__).with_name("corpus")
MANIFEST = "manifest.json"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    path: str
    params: str
    pure_to: int | None
    mode: str

    def load(self, root: Path | None = None) -> st.StabilizerCode:
        with open((root or CORPUS_DIR) / self.path) as fh:
            return st.StabilizerCode.from_json(json.load(fh))


def _five() -> st.StabilizerCode:
    return families.hamming_hermitian(2, 2)


def _punctured_bch() -> st.StabilizerCode:
    code = families.bch_euclidean(2, 4, 3)
    word = puncture.find_weight_word(puncture.bch_puncture_code(2, 4, 3), 7)
    return puncture.puncture_to(code, word)


def _four_two_two() -> st.StabilizerCode:
    return derive.shorten_pure(_five())


RECIPES: dict[str, tuple[Callable[[], st.StabilizerCode], str]] = {
    "five_qubit": (_five, "exact"),
    "hexacode": (families.hexacode, "exact"),
    "hamming_e_2_3": (lambda: families.hamming_euclidean(2, 3), "exact"),
    "hamming_e_2_4": (lambda: families.hamming_euclidean(2, 4), "exact"),
    "qr_2_7": (lambda: families.qr(2, 7), "exact"),
    "qr_3_13": (lambda: families.qr(3, 13), "exact"),
    "qr_4_5": (lambda: families.qr(4, 5), "exact"),
    "melas_2_2": (lambda: families.melas(2, 2), "exact"),
    "melas_4_1": (lambda: families.melas(4, 1, mode="bound"), "bound"),
    "bch_e_2_4_3": (lambda: families.bch_euclidean(2, 4, 3), "exact"),
    "bch_e_3_3_2": (lambda: families.bch_euclidean(3, 3, 2, mode="bound"), "bound"),
    "bch_h_2_2_3": (lambda: families.bch_hermitian(2, 2, 3), "exact"),
    "bch_ext_2_2_3": (lambda: families.extend_bch(families.bch_hermitian(2, 2, 3)), "exact"),
    "character_3_2_0_1": (lambda: families.quantum_character(3, 2, 0, 1), "exact"),
    "character_5_3_0_2": (lambda: families.quantum_character(5, 3, 0, 2), "exact"),
    "lengthened_five": (lambda: derive.lengthen(_five()), "exact"),
    "shortened_five": (_four_two_two, "exact"),
    "sum_five_five": (lambda: derive.direct_sum(_five(), _five()), "exact"),
    "combined_422": (lambda: derive.nested_combine(_four_two_two(), _four_two_two()), "exact"),
    "expanded_qr_4_5": (lambda: derive.expand_field(families.qr(4, 5)), "exact"),
    "punctured_bch_2_4_3": (_punctured_bch, "exact"),
}


def build(directory: str | Path | None = None) -> list[CorpusEntry]:
    """Construct every recipe and write the code files plus a manifest."""
    root = Path(directory) if directory else CORPUS_DIR
    root.mkdir(parents=True, exist_ok=True)
    entries = []
    for name, (recipe, mode) in RECIPES.items():
        code = recipe()
        path = f"{name}.json"
        (root / path).write_text(json.dumps(code.to_json(), sort_keys=True, indent=1) + "\n")
        entries.append(CorpusEntry(name, path, code.params(), code.pure_to, mode))
    manifest = [e.__dict__ for e in entries]
    (root / MANIFEST).write_text(json.dumps(manifest, indent=1) + "\n")
    return entries


def entries(directory: str | Path | None = None) -> list[CorpusEntry]:
    root = Path(directory) if directory else CORPUS_DIR
    return [CorpusEntry(**e) for e in json.loads((root / MANIFEST).read_text())]


def check(directory: str | Path | None = None) -> list[dict]:
    """Re-verify every corpus code and compare with the manifest."""
    root = Path(directory) if directory else CORPUS_DIR
    out = []
    for e in entries(root):
        code = e.load(root)
        report = st.verify(code, e.mode)
        params = report.params
        ok = report.ok and params == e.params
        if e.mode == "exact":
            ok = ok and report.purity == e.pure_to
        out.append({"name": e.name, "params": params, "expected": e.params, "ok": ok, "notes": report.notes})
    return out

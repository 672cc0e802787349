import pytest

from nbstab import regression

ENTRIES = regression.entries()


def test_corpus_size_and_family_coverage():
    assert len(ENTRIES) >= 15
    fams = set()
    for e in ENTRIES:
        prov = e.load().provenance
        fams.add(prov.get("family") or prov.get("construction"))
    for fam in ("hamming-h", "hamming-e", "qr", "melas", "bch-e", "bch-h", "bch-ext", "character"):
        assert fam in fams


@pytest.mark.parametrize("entry", ENTRIES, ids=[e.name for e in ENTRIES])
def test_corpus_entry_reverifies(entry):
    result = {r["name"]: r for r in regression.check()}[entry.name]
    assert result["ok"], result

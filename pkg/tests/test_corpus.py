"""Tests for the embedded benchmark corpus."""
import hashlib
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from zbasis.corpus import (CORPUS_REGISTRY, DATA_DIR, UnknownCorpusEntry, get_corpus_entry, list_corpus,
                           load_corpus_source, resolve_source)

# sha256 of the shipped files; a change here means the benchmark inputs changed
CHECKSUMS = {
    "A1": "66093613db1466d612992d82d516118c6009f237f62829417d587dfb14d4e3fe",
    "A2": "b63d32809e8c62b3b71bac5a48bc1a44ef915a12f7793e7d02333a8d733bacbb",
    "A3": "3bbaebca0d6ff573a8d55449ca9bb414c344bdf084c335ed0d158445e9ae8189",
    "A4": "b4200bc5e059fba2f4c9d6c2267db6d70bd4612fbe9ba30d12b969c817f8a255",
    "A5": "cf30fe5825cb5a27661fe933d3aafe6c28fec0781d8c04ea00166ce32e99021f",
    "A6": "d644b156a8f0f8aa278a3f6c8dd03503a39f122ea5381773297f3f891d4def27",
    "A7": "7bf4f97d0f3908b18ff6642b08f0d13e9bc835e9a5b259efec9dc3642595b06e",
    "A8": "5148661435712c1ad536fbebd21218a2b4b961bab979e17458365ef44166cd25",
    "A9": "19bb3779282477735ebb1c6f61019b289cae02d61bea8112eefec7750a096464",
    "A10": "fd27ddb3a9d15584d8fa09aaf21655d0b78d8748ee4c83e2f690b2d68cde1b5b",
    "B1": "640c7e829f41ba255a1e74e5d591e5904964e20df09175e881aac6541efac626",
    "B2": "9ecf147b95be5732ce799dfa3ffc346ce72df01857f25237db8145e26961a35c",
    "B3": "294df5e9fa481ce0274f3abb699735924b7f7012a6832d5c87b71802a6514c6b",
    "B4": "9353a64ad51146c7af5ca719072ca2ae7a89033cbe03ab53cc580287643215ed",
    "B5": "a44383256bf38218e65bb6da8dd4d0d421d1b746552bb7e18cf3170bffff9fad",
    "B1_mod_2e100": "87439cb20cc92b3710e5f70280bd21eb63eb1881d98f5bc82086c100b144e2cb",
    "B1_mod_10e200": "f2317a2c1ef106a65490f75f8e359043320460390f1aaf6f620a6ee84a09a77f",
    "B1_mod_10e1000": "abffa372d1238f309cc30e049bcce8ee547ef46a0be73b2fe2564995c45f0523",
    "ex33": "fddc4aa0128a4873a493a7de0f83346689357ba160ac1e94c3dfed65f721fab7",
    "ex42": "cff970c9b34eec4d49f4b15da8085fe441bb454d229fc317a9391e0164bef4c0",
    "ex70": "773fadb585d5421a31432f348c6a9292595432349e19a87c268c964b0992c955",
}


@pytest.mark.parametrize("name", sorted(CHECKSUMS))
def test_data_files_unchanged(name):
    data = (DATA_DIR / CORPUS_REGISTRY[name]["file"]).read_bytes()
    assert hashlib.sha256(data).hexdigest() == CHECKSUMS[name]


def test_registry_covers_every_file():
    assert set(CORPUS_REGISTRY) == set(CHECKSUMS)
    assert sorted(p.stem for p in DATA_DIR.glob("*.ideal")) == sorted(CHECKSUMS)


def test_families():
    assert len(list_corpus()) == 21
    assert len(list_corpus("A")) == 10
    assert len(list_corpus("B")) == 5
    assert len(list_corpus("all")) == 15
    assert list_corpus("finite") == ["B1_mod_2e100", "B1_mod_10e200", "B1_mod_10e1000"]
    assert list_corpus("worked") == ["ex33", "ex42", "ex70"]


def test_favourable_strategy_matches_reference_timings():
    for name in list_corpus("all"):
        entry = get_corpus_entry(name)
        ref = entry["reference_ms"]
        faster = "all" if ref["all"] < ref["just"] else "just"
        assert entry["favourable"] == faster


def test_unknown_entry():
    with pytest.raises(UnknownCorpusEntry) as excinfo:
        get_corpus_entry("Z9")
    assert "zbasis corpus" in str(excinfo.value)


def test_seventy_generators():
    source = load_corpus_source("ex70")
    assert len(source.generators) == 70
    assert source.expected is None
    assert source.variables == ("x", "y", "z")


def test_finite_variants_share_generators():
    """The ZZ/n variants are B1 with coefficients reduced mod n."""
    b1 = load_corpus_source("B1")
    for name, modulus in (("B1_mod_2e100", 2 ** 100), ("B1_mod_10e200", 10 ** 200),
                          ("B1_mod_10e1000", 10 ** 1000)):
        variant = load_corpus_source(name)
        assert variant.ring.modulus == modulus
        assert variant.generators == [g.change_ring(variant.ring) for g in b1.generators]


def test_resolve_source(tmp_path):
    assert resolve_source("corpus:ex33").name == "ex33"
    path = tmp_path / "mine.ideal"
    path.write_text("ring ZZ[x] order dp; ideal I = 2*x;")
    source = resolve_source(str(path))
    assert source.name == "mine"
    assert len(source.generators) == 1
    with pytest.raises(UnknownCorpusEntry):
        resolve_source("corpus:nope")

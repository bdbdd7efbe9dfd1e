import itertools
import unicodedata

import pytest

from kannada_ime import phonology as ph
from kannada_ime.phonology import ConsonantId as C, Varga, VowelId as V


def test_traits_examples():
    t = ph.consonant_traits(C.KHA)
    assert (t.varga, t.position_in_varga, t.aspirated, t.nasal) == (Varga.VELAR, 2, True, False)
    t = ph.consonant_traits(C.NA)
    assert (t.varga, t.position_in_varga, t.aspirated, t.nasal) == (Varga.DENTAL, 5, False, True)
    t = ph.consonant_traits(C.YA)
    assert (t.varga, t.position_in_varga, t.aspirated, t.nasal) == (Varga.UNCLASSIFIED, None, False, False)


def test_traits_total_and_consistent():
    for c in C:
        t = ph.consonant_traits(c)
        assert t.aspirated == (t.position_in_varga in (2, 4))
        assert t.nasal == (t.position_in_varga == 5)


def test_every_varga_nasal_is_fifth_member():
    nasals = [c for c in C if ph.consonant_traits(c).nasal]
    assert sorted(n.value for n in nasals) == ["ma", "na", "nga", "nna", "nya"]


def test_cluster_legality_examples():
    assert ph.is_legal_cluster(C.THA, C.THA) is False
    assert ph.is_legal_cluster(C.KA, C.KA) is True
    assert ph.is_legal_cluster(C.TA, C.THA) is True


def test_cluster_legality_against_brute_force():
    # independent oracle: trait table enumerated by varga position
    aspirated = set()
    for row in (
        (C.KA, C.KHA, C.GA, C.GHA, C.NGA),
        (C.CA, C.CHA, C.JA, C.JHA, C.NYA),
        (C.TTA, C.TTHA, C.DDA, C.DDHA, C.NNA),
        (C.TA, C.THA, C.DA, C.DHA, C.NA),
        (C.PA, C.PHA, C.BA, C.BHA, C.MA),
    ):
        aspirated.add(row[1])
        aspirated.add(row[3])
    for a, b in itertools.product(C, C):
        expected = not (a in aspirated and b in aspirated)
        assert ph.is_legal_cluster(a, b) is expected


def test_render_cluster_with_inherent_vowel():
    s = ph.Syllable(onset=(C.KA, C.KA))
    assert ph.render_syllable(s) == "ಕ್ಕ"  # ಕ್ಕ


def test_render_pure_vowel():
    assert ph.render_syllable(ph.Syllable(vowel=V.A)) == "ಅ"  # ಅ


def test_render_ki_nfc_stable():
    out = ph.render_syllable(ph.Syllable(onset=(C.KA,), vowel=V.II))
    assert out == "ಕೀ"  # ಕೀ
    assert unicodedata.normalize("NFC", out) == out


def test_render_totality_and_nfc():
    for c in C:
        for v in V:
            out = ph.render_syllable(ph.Syllable(onset=(c,), vowel=v))
            assert out
            assert unicodedata.normalize("NFC", out) == out


def test_render_structural_invariants():
    for c in C:
        for k in (1, 2, 3):
            out = ph.render_syllable(ph.Syllable(onset=(c,) * k, trailing_virama=True))
            assert ph.VIRAMA_SIGN * 2 not in out
            for sign in ph.VOWEL_SIGN.values():
                if sign:
                    assert ph.VIRAMA_SIGN + sign not in out


def test_render_rejects_malformed():
    with pytest.raises(ph.MalformedSyllableError):
        ph.render_syllable(ph.Syllable())
    with pytest.raises(ph.MalformedSyllableError):
        ph.render_syllable(ph.Syllable(onset=(C.KA,), vowel=V.I, trailing_virama=True))


def test_end_virama_rendering():
    assert ph.render_syllable(ph.Syllable(onset=(C.NA,), trailing_virama=True)) == "ನ್"


def test_final_marks():
    from kannada_ime.phonology import PhonemeKind

    assert ph.render_syllable(ph.Syllable(vowel=V.A, final_mark=PhonemeKind.ANUSVARA)) == "ಅಂ"
    assert ph.render_syllable(ph.Syllable(onset=(C.KA,), final_mark=PhonemeKind.VISARGA)) == "ಕಃ"


def test_phoneme_validation():
    from kannada_ime.phonology import Phoneme, PhonemeKind

    with pytest.raises(ValueError):
        Phoneme(PhonemeKind.VOWEL)
    with pytest.raises(ValueError):
        Phoneme(PhonemeKind.CONSONANT, vowel=V.A, consonant=C.KA)
    with pytest.raises(ValueError):
        Phoneme(PhonemeKind.NULL_VOWEL, vowel=V.A)


def test_char_round_trip():
    for c in C:
        p = ph.char_to_phoneme(ph.CONSONANT_LETTER[c])
        assert p is not None and p.consonant is c
    for v in V:
        p = ph.char_to_phoneme(ph.INDEPENDENT_VOWEL[v])
        assert p is not None and p.vowel is v
    assert ph.char_to_phoneme("x") is None

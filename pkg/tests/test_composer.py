import pytest

from conftest import drive

from kannada_ime import composer as cp
from kannada_ime.composer import ComposerConfig, DefaultVowel, NoticeKind, OhokMode
from kannada_ime.phonology import ConsonantId as C, VowelId as V

A_CFG = ComposerConfig()
NULL_CFG = ComposerConfig(default_vowel=DefaultVowel.NULL)


def cfg(**kw):
    return ComposerConfig(**kw)


def test_conjunct_entry_a_default():
    _, text, trace, _ = drive("k f k")
    assert text == "ಕ್ಕ"
    assert trace == ["ಕ", "ಕ್", "ಕ್ಕ"]


def test_conjunct_entry_null_default():
    _, text, trace, _ = drive("k k a", NULL_CFG)
    assert text == "ಕ್ಕ"
    assert trace == ["ಕ್", "ಕ್ಕ್", "ಕ್ಕ"]


def test_sva_ottu_kannada():
    _, text, _, notices = drive("k n+ w", cfg(ohok_mode=OhokMode.SVA_OTTU))
    assert text == "ಕನ್ನಡ"
    assert not notices


def test_sva_ottu_equivalent_to_taps():
    held, _, _, _ = drive("k n+ w", cfg(ohok_mode=OhokMode.SVA_OTTU))
    tapped, _, _, _ = drive("k n f n w")
    assert held.tokens == tapped.tokens


def test_andante_stri():
    _, text, _, _ = drive("s+ t+ r I", cfg(ohok_mode=OhokMode.ANDANTE))
    assert text == "ಸ್ತ್ರೀ"


def test_kandante_stri():
    _, text, _, _ = drive("s t+ r+ I", cfg(ohok_mode=OhokMode.KANDANTE))
    assert text == "ಸ್ತ್ರೀ"


def test_three_mode_traces_render_identically():
    normal = drive("s f t f r I")[1]
    ao = drive("s+ t+ r I", cfg(ohok_mode=OhokMode.ANDANTE))[1]
    ko = drive("s t+ r+ I", cfg(ohok_mode=OhokMode.KANDANTE))[1]
    assert normal == ao == ko == "ಸ್ತ್ರೀ"


def test_andante_equals_tap_then_virama():
    for key in "ktgpsn":
        held = drive("%s+" % key, cfg(ohok_mode=OhokMode.ANDANTE))[0]
        tapped = drive("%s f" % key)[0]
        assert held.tokens == tapped.tokens


def test_hold_ignored_when_mode_off():
    held = drive("k+")[0]
    tapped = drive("k")[0]
    assert held.tokens == tapped.tokens


def test_vowel_after_consonant_sets_vowel():
    assert drive("k i")[1] == "ಕಿ"
    assert drive("k I")[1] == "ಕೀ"


def test_vowel_replaces_open_virama():
    assert drive("k f i")[1] == "ಕಿ"
    assert drive("k i", NULL_CFG)[1] == "ಕಿ"


def test_second_vowel_blocked():
    _, text, _, notices = drive("k a i")
    assert text == "ಕ"
    assert notices and notices[0].kind is NoticeKind.NON_INITIAL_VOWEL


def test_mid_word_standalone_vowel_allowed_when_lenient():
    _, text, _, notices = drive("k a i", cfg(strict_rules=False))
    assert text == "ಕಇ"
    assert not notices


def test_aspirated_cluster_blocked():
    _, text, _, notices = drive("T f T")
    assert text == "ಥ್"
    assert notices[-1].kind is NoticeKind.ILLEGAL_ASPIRATED_CLUSTER


def test_aspirated_sva_ottu_blocked():
    _, text, _, notices = drive("T+", cfg(ohok_mode=OhokMode.SVA_OTTU))
    assert text == ""
    assert notices[-1].kind is NoticeKind.ILLEGAL_ASPIRATED_CLUSTER


def test_kandante_without_host_falls_back_to_tap():
    buf, text, _, notices = drive("k+", cfg(ohok_mode=OhokMode.KANDANTE))
    assert text == "ಕ"
    assert notices[-1].kind is NoticeKind.HOLD_WITHOUT_HOST


def test_kandante_blocked_after_explicit_vowel():
    _, text, _, notices = drive("k a k+", cfg(ohok_mode=OhokMode.KANDANTE))
    assert text == "ಕಕ"
    assert notices[-1].kind is NoticeKind.HOLD_WITHOUT_HOST


def test_kandante_null_self_conjunct_after_vowel():
    _, text, _, _ = drive("a k+ a", cfg(default_vowel=DefaultVowel.NULL, ohok_mode=OhokMode.KANDANTE))
    assert text == "ಅಕ್ಕ"


def test_null_end_virama():
    assert drive("n", NULL_CFG)[1] == "ನ್"


def test_word_initial_pure_vowel():
    assert drive("a")[1] == "ಅ"
    assert drive("k a <SP> e")[1] == "ಕ ಎ"


def test_digits_and_passthrough():
    assert drive("1 2")[1] == "೧೨"


def test_render_empty():
    assert cp.render(cp.EditorBuffer.empty()) == ""


def test_segment_examples():
    buf = drive("a k f k")[0]
    syls = cp.segment(buf)
    assert len(syls) == 2
    assert syls[0].onset == () and syls[0].vowel is V.A
    assert syls[1].onset == (C.KA, C.KA)

    buf = drive("s f t f r I")[0]
    syls = cp.segment(buf)
    assert len(syls) == 1
    assert syls[0].onset == (C.SA, C.TA, C.RA) and syls[0].vowel is V.II

    buf = drive("n f")[0]
    syls = cp.segment(buf)
    assert len(syls) == 1 and syls[0].trailing_virama


def test_render_agrees_with_syllable_rendering():
    from kannada_ime.phonology import render_syllable

    for script in ("k f k", "a k f k", "s f t f r I", "k I", "a n f k a"):
        buf = drive(script)[0]
        joined = "".join(render_syllable(s) for s in cp.segment(buf))
        assert joined == cp.render(buf)


def test_apply_is_pure():
    buf = drive("k f")[0]
    before = buf.tokens
    drive("k", layout=None)
    assert buf.tokens == before


def test_cursor_bounds_validated():
    with pytest.raises(ValueError):
        cp.EditorBuffer(tokens=(), cursor=1)

"""End-to-end edit extraction, application, projection, and segregation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from editgec.errors import ValidationError
from editgec.extract import (
    apply_tags,
    compress_sentence,
    extract_edits,
    punct_only_ops,
    rebuild_source,
    segregate,
    word_level_ops,
)
from editgec.synth import build_subword_vocab, make_corpus
from editgec.tags import parse
from editgec.textcore import SubwordVocab, tokenize

FIG_SRC = tokenize("يجب الإهتمام ب لصحه وخصوصا ً الصحه النفسيه")
FIG_TGT = tokenize("يجب الاهتمام بالصحة وخصوصًا الصحة النفسية .")


def _seg(vocab, tokens):
    return [vocab.segment(t) for t in tokens]


class TestExtractWordLevel:
    def test_figure_sentence_tags(self):
        tagged = extract_edits(FIG_SRC, FIG_TGT)
        tags = tagged.tags()
        assert tags[1] == "KKR_[ا]KKKKK"
        assert tags[3] == "MI_[ا]KKKR_[ة]"
        # Final word: fix the taa marbuta, then append " ." as new tokens.
        assert tags[7] == "KKKKKKR_[ة]A_[ ]A_[.]"
        assert apply_tags(FIG_SRC, tagged) == FIG_TGT

    def test_identity_is_all_keeps(self):
        src = ["يجب", "الاهتمام", "."]
        tagged = extract_edits(src, src)
        assert tagged.tags() == ["KKK", "KKKKKKKK", "K"]

    def test_token_merge(self):
        tagged = extract_edits(["ab", "cd"], ["abcd"])
        assert tagged.tags() == ["KK", "MKK"]

    def test_token_split(self):
        tagged = extract_edits(["abcd"], ["ab", "cd"])
        assert tagged.tags() == ["KKI_[ ]KK"]
        assert apply_tags(["abcd"], tagged) == ["ab", "cd"]

    def test_sentence_initial_insertion(self):
        tagged = extract_edits(["b"], ["a", "b"])
        assert tagged.tags() == ["I_[a]I_[ ]K"]
        assert apply_tags(["b"], tagged) == ["a", "b"]

    def test_token_deletion(self):
        tagged = extract_edits(["a", "xy", "b"], ["a", "b"])
        assert tagged.tags() == ["K", "DD", "K"]
        assert apply_tags(["a", "xy", "b"], tagged) == ["a", "b"]

    def test_empty_source_with_target_rejected(self):
        with pytest.raises(ValidationError):
            extract_edits([], ["a"])

    def test_empty_pair(self):
        tagged = extract_edits([], [])
        assert tagged.units == []
        assert apply_tags([], tagged) == []


class TestApply:
    def test_compressed_merge_tags(self):
        src = ["ab", "cd"]
        tagged = extract_edits(src, ["abcd"])
        compressed = compress_sentence(tagged)
        assert compressed.tags() == ["K*", "MK*"]
        assert apply_tags(src, compressed) == ["abcd"]

    def test_all_keep_star_is_identity(self):
        from editgec.tags import TaggedSentence, TagUnit

        src = ["abc", "de"]
        tagged = TaggedSentence(
            [TagUnit("abc", 0, parse("K*")), TagUnit("de", 1, parse("K*"))],
            "word", True,
        )
        assert apply_tags(src, tagged) == src

    def test_surface_mismatch_rejected(self):
        tagged = extract_edits(["ab"], ["ab"])
        with pytest.raises(ValidationError):
            apply_tags(["xy"], tagged)


corpus_pairs = st.integers(0, 10_000)


class TestRoundTrip:
    @given(corpus_pairs)
    @settings(max_examples=150, deadline=None)
    def test_word_level(self, seed):
        srcs, tgts = make_corpus(1, seed=seed)
        tagged = extract_edits(srcs[0], tgts[0])
        assert apply_tags(srcs[0], tagged) == tgts[0]

    @given(corpus_pairs)
    @settings(max_examples=150, deadline=None)
    def test_word_level_compressed(self, seed):
        srcs, tgts = make_corpus(1, seed=seed)
        tagged = compress_sentence(extract_edits(srcs[0], tgts[0]))
        assert apply_tags(srcs[0], tagged) == tgts[0]

    @given(corpus_pairs)
    @settings(max_examples=150, deadline=None)
    def test_subword_level(self, seed):
        srcs, tgts = make_corpus(4, seed=seed)
        vocab = build_subword_vocab(srcs + tgts, limit=100)
        for src, tgt in zip(srcs, tgts):
            tagged = extract_edits(src, tgt, granularity="subword",
                                   seg=_seg(vocab, src))
            assert apply_tags(src, tagged) == tgt
            assert rebuild_source(tagged) == src


class TestSubwordProjection:
    VOCAB = SubwordVocab(["ال", "بال", "##صح", "##ه", "##تمام", "##إه", "##اه"])

    def test_concatenation_equals_word_ops(self):
        srcs, tgts = make_corpus(30, seed=7)
        vocab = build_subword_vocab(srcs + tgts, limit=150)
        for src, tgt in zip(srcs, tgts):
            word = extract_edits(src, tgt)
            sub = extract_edits(src, tgt, granularity="subword",
                                seg=_seg(vocab, src))
            assert word_level_ops(sub) == [list(u.ops) for u in word.units]

    def test_unit_surfaces_follow_segmentation(self):
        src = ["بالصحه"]
        tagged = extract_edits(src, ["بالصحة"], granularity="subword",
                               seg=_seg(self.VOCAB, src))
        assert [u.surface for u in tagged.units] == ["بال", "صح", "ه"]
        assert tagged.tags() == ["KKK", "KK", "R_[ة]"]

    def test_merge_attaches_to_first_subword(self):
        src = ["ب", "الصحه"]
        seg = [[(0, 1)], [(0, 2), (2, 5)]]
        tagged = extract_edits(src, ["بالصحه"], granularity="subword", seg=seg)
        assert tagged.tags() == ["K", "MKK", "KKK"]
        assert apply_tags(src, tagged) == ["بالصحه"]

    def test_trailing_append_attaches_to_last_subword(self):
        src = ["بالصحه"]
        tagged = extract_edits(src, ["بالصحه", "."], granularity="subword",
                               seg=_seg(self.VOCAB, src))
        assert tagged.tags() == ["KKK", "KK", "KA_[ ]A_[.]"]

    def test_inconsistent_segmentation_rejected(self):
        with pytest.raises(ValidationError):
            extract_edits(["abc"], ["abc"], granularity="subword", seg=[[(0, 2)]])
        with pytest.raises(ValidationError):
            extract_edits(["abc"], ["abc"], granularity="subword", seg=[])


class TestSegregation:
    def test_appended_period_goes_to_pnx(self):
        src, tgt = ["جيده"], ["جيدة", "."]
        tagged = extract_edits(src, tgt)
        nopnx, intermediate, pnx = segregate(tagged, src, tgt)
        assert nopnx.tags() == ["KKKR_[ة]"]
        assert intermediate == ["جيدة"]
        assert pnx.tags() == ["KKKKA_[ ]A_[.]"]
        assert punct_only_ops(pnx)

    def test_letter_fix_stays_in_nopnx(self):
        src, tgt = ["جيده"], ["جيدة"]
        nopnx, intermediate, pnx = segregate(extract_edits(src, tgt), src, tgt)
        assert nopnx.tags() == ["KKKR_[ة]"]
        assert pnx.tags() == ["KKKK"]

    def test_punct_replacement_goes_to_pnx(self):
        src, tgt = ["كتاب", "،"], ["كتاب", "."]
        nopnx, intermediate, pnx = segregate(extract_edits(src, tgt), src, tgt)
        assert nopnx.tags() == ["KKKK", "K"]
        assert intermediate == src
        assert pnx.tags() == ["KKKK", "R_[.]"]

    def test_no_punct_edits_means_all_keep_pnx(self):
        src, tgt = ["ab"], ["ax"]
        _, intermediate, pnx = segregate(extract_edits(src, tgt), src, tgt)
        assert intermediate == tgt
        assert pnx.tags() == ["KK"]

    @given(corpus_pairs)
    @settings(max_examples=150, deadline=None)
    def test_composition(self, seed):
        srcs, tgts = make_corpus(1, seed=seed)
        src, tgt = srcs[0], tgts[0]
        tagged = extract_edits(src, tgt)
        nopnx, intermediate, pnx = segregate(tagged, src, tgt)
        assert apply_tags(src, nopnx) == intermediate
        assert apply_tags(intermediate, pnx) == tgt
        assert punct_only_ops(pnx)

    def test_compressed_input_rejected(self):
        src, tgt = ["ab"], ["ax"]
        tagged = compress_sentence(extract_edits(src, tgt))
        with pytest.raises(ValidationError):
            segregate(tagged, src, tgt)

"""Edit extraction from sentence pairs, tag application, and segregation."""

from .align import char_align, refine_alignment, word_align
from .errors import TagError, ValidationError
from .tags import (
    TaggedSentence,
    TagUnit,
    expand,
    merge_payload_runs,
    parse,
    serialize,
    star_count,
)
from .textcore import DEFAULT_PUNCT


def extract_edits(src, tgt, granularity="word", seg=None):
    """Extract per-unit uncompressed edit tags turning src into tgt.

    seg maps each src token index to its subword spans and is required at
    subword granularity.
    """
    if not src and tgt:
        raise ValidationError("cannot tag an empty source sentence with a non-empty target")
    if granularity not in ("word", "subword"):
        raise ValidationError(f"unknown granularity {granularity!r}")
    if granularity == "subword":
        if seg is None or len(seg) != len(src):
            raise ValidationError("subword granularity requires a segmentation covering src")
        for i, spans in enumerate(seg):
            if _spans_bad(spans, len(src[i])):
                raise ValidationError(f"segmentation inconsistent with token {i}")

    alignment = refine_alignment(word_align(src, tgt))
    word_ops = [[] for _ in src]
    initial_insert = []

    for pair in alignment.pairs:
        if pair.src_start == pair.src_end:
            inserted = tgt[pair.tgt_start:pair.tgt_end]
            if pair.src_start == 0:
                initial_insert.extend(inserted)
            else:
                payload = " " + " ".join(inserted)
                word_ops[pair.src_start - 1].extend(("A", c) for c in payload)
            continue
        steps = char_align(pair.src_text(src), pair.tgt_text(tgt))
        _distribute(steps, src, pair, word_ops)

    if initial_insert:
        payload = " ".join(initial_insert) + " "
        word_ops[0][:0] = [("I", c) for c in payload]

    if granularity == "word":
        units = [TagUnit(src[i], i, tuple(ops)) for i, ops in enumerate(word_ops)]
    else:
        units = []
        for i, ops in enumerate(word_ops):
            units.extend(_project(src[i], i, ops, seg[i]))
    return TaggedSentence(units=units, granularity=granularity, compressed=False)


def _spans_bad(spans, length):
    if not spans and length:
        return True
    pos = 0
    for s, e in spans:
        if s != pos or e <= s:
            return True
        pos = e
    return pos != length


def _distribute(steps, src, pair, word_ops):
    """Assign char-alignment steps of one pair to its source tokens.

    Separator spaces between merged source tokens carry the merge semantics:
    a deleted separator becomes M on the following token, a replaced one
    becomes M plus an insertion of the replacement character.
    """
    tok = pair.src_start
    tok_len = len(src[tok])
    pos = 0
    last = pair.src_end - 1
    for step in steps:
        kind = step[0]
        if kind == "I":
            if pos < tok_len or tok == last:
                # Attach to the unit owning the next consumed char; trailing
                # inserts ride as appends on the last token.
                op = ("I", step[1]) if pos < tok_len else ("A", step[1])
                word_ops[tok].append(op)
            else:
                # Inserted right before a kept separator: append to the
                # current token, the boundary re-forms on application.
                word_ops[tok].append(("A", step[1]))
            continue
        # Consuming step.
        if pos < tok_len:
            if kind == "K":
                word_ops[tok].append(("K",))
            elif kind == "D":
                word_ops[tok].append(("D",))
            else:
                word_ops[tok].append(("R", step[2]))
            pos += 1
        else:
            # Separator space between source tokens of a merged span.
            merge = False
            insert_after = None
            if kind == "D":
                merge = True
            elif kind == "R":
                if step[2] == " ":
                    merge = False
                else:
                    merge = True
                    insert_after = step[2]
            # kind == 'K': boundary preserved, nothing to record.
            tok += 1
            tok_len = len(src[tok])
            pos = 0
            if merge:
                word_ops[tok].append(("M",))
            if insert_after is not None:
                word_ops[tok].append(("I", insert_after))


def _project(token, word_index, ops, spans):
    """Split one word's ops at subword boundaries."""
    n_sub = len(spans)
    if n_sub == 0:
        return []
    sub_ops = [[] for _ in range(n_sub)]
    remaining = sum(1 for op in ops if op[0] in ("K", "D", "R"))
    cur = 0
    filled = 0  # consumed chars in current subword
    for op in ops:
        kind = op[0]
        if kind == "M":
            sub_ops[0].insert(0, op)
        elif kind in ("K", "D", "R"):
            while filled == spans[cur][1] - spans[cur][0] and cur < n_sub - 1:
                cur += 1
                filled = 0
            sub_ops[cur].append(op)
            filled += 1
            remaining -= 1
        elif kind == "I":
            if remaining:
                while filled == spans[cur][1] - spans[cur][0] and cur < n_sub - 1:
                    cur += 1
                    filled = 0
                sub_ops[cur].append(op)
            else:
                sub_ops[n_sub - 1].append(op)
        else:  # A
            sub_ops[n_sub - 1].append(op)
    return [
        TagUnit(token[s:e], word_index, tuple(sub_ops[k]))
        for k, (s, e) in enumerate(spans)
    ]


def replay(surface, ops):
    """Apply expanded ops over one unit's characters."""
    out = []
    i = 0
    for op in ops:
        kind = op[0]
        if kind == "K":
            out.append(surface[i])
            i += 1
        elif kind == "D":
            i += 1
        elif kind == "R":
            out.append(op[1])
            i += 1
        elif kind in ("I", "A"):
            out.append(op[1])
        elif kind == "M":
            pass
        else:
            raise TagError(f"cannot replay op {op!r}")
    if i != len(surface):
        raise TagError(f"tag consumed {i} of {len(surface)} chars of {surface!r}")
    return "".join(out)


def apply_tags(src, tagged):
    """Apply a TaggedSentence to its source; returns the corrected tokens."""
    _check_units_match(src, tagged)
    groups = []
    prev_word = None
    for idx, unit in enumerate(tagged.units):
        try:
            ops = expand(unit.ops, len(unit.surface))
            text = replay(unit.surface, ops)
        except TagError as exc:
            raise TagError(f"unit {idx} ({unit.surface!r}): {exc}") from exc
        merge = bool(unit.ops) and unit.ops[0][0] == "M"
        same_word = (
            tagged.granularity == "subword"
            and prev_word is not None
            and unit.word_index == prev_word
        )
        if (merge or same_word) and groups:
            groups[-1] += text
        else:
            groups.append(text)
        prev_word = unit.word_index
    return " ".join(groups).split()


def _check_units_match(src, tagged):
    if tagged.granularity == "word":
        if len(tagged.units) != len(src):
            raise ValidationError(
                f"{len(tagged.units)} units for {len(src)} source tokens"
            )
        for i, unit in enumerate(tagged.units):
            if unit.surface != src[i]:
                raise ValidationError(
                    f"unit {i} surface {unit.surface!r} != token {src[i]!r}"
                )
    else:
        rebuilt = rebuild_source(tagged)
        if rebuilt != list(src):
            raise ValidationError("subword units do not concatenate to the source tokens")


def rebuild_source(tagged):
    """Source tokens reconstructed from a tagged sentence's surfaces."""
    tokens = []
    prev_word = None
    for unit in tagged.units:
        if tagged.granularity == "subword" and unit.word_index == prev_word:
            tokens[-1] += unit.surface
        else:
            tokens.append(unit.surface)
        prev_word = unit.word_index
    return tokens


def _op_chars(surface_iter, op):
    """(consumed_chars, produced_chars) of one uncompressed op."""
    kind = op[0]
    if kind == "K":
        c = next(surface_iter)
        return c, c
    if kind == "D":
        return next(surface_iter), ""
    if kind == "R":
        return next(surface_iter), op[1]
    if kind in ("I", "A"):
        return "", op[1]
    return "", ""  # M


def _op_groups(ops):
    """Group consecutive I ops (and consecutive A ops) into runs."""
    groups = []
    for op in ops:
        if groups and op[0] in ("I", "A") and groups[-1][0][0] == op[0]:
            groups[-1].append(op)
        else:
            groups.append([op])
    return groups


def _is_punct_op(consumed, produced, punct):
    """Spaces are token boundaries, neutral for the classification."""
    chars = [c for c in consumed + produced if c != " "]
    if not chars:
        return False
    return all(c in punct for c in chars)


def segregate(tagged, src, tgt, punct=DEFAULT_PUNCT, seg_fn=None):
    """Split extracted edits into non-punctuation and punctuation layers.

    Returns (nopnx over src, intermediate sentence, pnx over intermediate).
    Modifying ops whose affected characters are all punctuation move to the
    pnx layer; keeps are neutral; merges and mixed ops stay in nopnx. The
    pnx layer is re-extracted from (apply(nopnx), tgt) and verified to
    compose back to tgt. At subword granularity seg_fn must map a token
    list to its segmentation so the intermediate can be re-segmented.
    """
    if tagged.compressed:
        raise ValidationError("segregate expects uncompressed tags")
    if tagged.granularity == "subword" and seg_fn is None:
        raise ValidationError("subword segregation requires seg_fn")
    nopnx_units = []
    for unit in tagged.units:
        it = iter(unit.surface)
        kept = []
        # Classify per payload run (a run of I ops or of A ops is one edit:
        # an appended " ." must move to pnx as a whole, boundary space
        # included), everything else per op.
        for group in _op_groups(unit.ops):
            consumed = ""
            produced = ""
            for op in group:
                c, p = _op_chars(it, op)
                consumed += c
                produced += p
            kind = group[0][0]
            if kind in ("K", "M"):
                kept.extend(group)
                continue
            chars = [c for c in consumed + produced if c != " "]
            if not chars:
                # Pure separator-space edit (token split): not punctuation.
                kept.extend(group)
            elif all(c in punct for c in chars):
                # Punctuation edit: neutralize (keep source chars, drop
                # insertions) so only non-punct corrections remain.
                kept.extend(("K",) for op in group if op[0] in ("D", "R"))
            else:
                kept.extend(group)
        nopnx_units.append(TagUnit(unit.surface, unit.word_index, tuple(kept)))
    nopnx = TaggedSentence(nopnx_units, tagged.granularity, compressed=False)
    intermediate = apply_tags(src, nopnx)
    seg = seg_fn(intermediate) if tagged.granularity == "subword" else None
    pnx = extract_edits(intermediate, tgt, granularity=tagged.granularity, seg=seg)
    if apply_tags(intermediate, pnx) != list(tgt):
        raise ValidationError("segregation layers do not compose back to the target")
    return nopnx, intermediate, pnx


def punct_only_ops(tagged, punct=DEFAULT_PUNCT):
    """True iff every modifying op in the tagged sentence is a punctuation op."""
    for unit in tagged.units:
        it = iter(unit.surface)
        for op in unit.ops:
            consumed, produced = _op_chars(it, op)
            if op[0] in ("K", "K*"):
                continue
            if op[0] == "M":
                return False
            if not any(c != " " for c in consumed + produced):
                continue  # pure separator-space op, neutral like keeps
            if not _is_punct_op(consumed, produced, punct):
                return False
    return True


def parse_tag(text):
    return parse(text)


def compress_sentence(tagged, selector=None):
    """Compress every unit tag of a sentence."""
    from .tags import compress

    units = [
        TagUnit(u.surface, u.word_index, compress(u.ops, selector))
        for u in tagged.units
    ]
    return TaggedSentence(units, tagged.granularity, compressed=True)


def tag_roundtrip_ok(src, tgt, granularity="word", seg=None, selector=None,
                     compressed=False):
    """Convenience: extract (optionally compress) and check application."""
    tagged = extract_edits(src, tgt, granularity=granularity, seg=seg)
    if compressed:
        tagged = compress_sentence(tagged, selector)
    return apply_tags(src, tagged) == list(tgt)


def word_level_ops(tagged):
    """Concatenate a word's subword ops back into word-level ops."""
    if tagged.granularity != "subword":
        return [list(u.ops) for u in tagged.units]
    out = []
    prev_word = None
    for unit in tagged.units:
        if unit.word_index == prev_word:
            out[-1].extend(unit.ops)
        else:
            out.append(list(unit.ops))
        prev_word = unit.word_index
    return out


def sentence_serialized_tags(tagged):
    return [serialize(u.ops) for u in tagged.units]


def has_star(tagged):
    return any(star_count(u.ops) for u in tagged.units)

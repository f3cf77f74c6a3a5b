"""Command-line surface wiring the pipeline.

Exit codes: 0 success, 1 validation failure, 2 I/O or format failure.
"""

import sys

import click

from . import kernels, pipeline, synth, tagio
from .errors import FormatError, ValidationError
from .extract import apply_tags, rebuild_source
from .score import (
    gold_from_references,
    m2_score,
    parse_m2,
    significance as ar_significance,
)
from .tags import CompressionSelector
from .taggers import InferenceConfig, LookupModel, ensemble, infer, lookup_tag, lookup_train
from .textcore import DEFAULT_PUNCT, PunctSet, SubwordVocab, tokenize
from .vocab import coverage_stats, vocab_from_sentences


def _read_lines(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read().splitlines()


def _read_sentences(path):
    return [tokenize(line) for line in _read_lines(path)]


def _write_sentences(path, sentences):
    with open(path, "w", encoding="utf-8") as fh:
        for s in sentences:
            fh.write(" ".join(s) + "\n")


def _load_config(path):
    default_map = {}
    for lineno, line in enumerate(_read_lines(path), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise FormatError(f"{path}:{lineno}: expected command.option = value")
        key, value = (part.strip() for part in line.split("=", 1))
        if "." not in key:
            raise FormatError(f"{path}:{lineno}: key must be command.option")
        command, option = key.split(".", 1)
        default_map.setdefault(command, {})[option.replace("-", "_")] = value
    return default_map


@click.group()
@click.option("--config", type=click.Path(exists=True), default=None,
              help="Flat key-value config file (command.option = value); "
                   "CLI flags take precedence.")
@click.pass_context
def cli(ctx, config):
    """Data-driven text editing for grammatical error correction."""
    if config:
        ctx.default_map = _load_config(config)


def _punct(punct_file):
    return PunctSet.from_file(punct_file) if punct_file else DEFAULT_PUNCT


@cli.command()
@click.argument("files", nargs=-1, required=True, type=click.Path(exists=True))
@click.option("-o", "--output", required=True, type=click.Path())
@click.option("--granularity", type=click.Choice(["word", "subword"]), default="word",
              show_default=True)
@click.option("--subword-vocab", type=click.Path(exists=True), default=None)
@click.option("--compress/--no-compress", default=False, show_default=True)
@click.option("--segregate", "mode", type=click.Choice(["all", "nopnx", "pnx"]),
              default="all", show_default=True)
@click.option("--prune", "prune_threshold", type=int, default=0, show_default=True,
              help="Rewrite tags rarer than this to the keep tag.")
@click.option("--upsample", default=None,
              help="Comma list, one repeat factor per corpus pair.")
@click.option("--vocab-out", type=click.Path(), default=None)
@click.option("--selector-out", type=click.Path(), default=None)
@click.option("--selector-in", type=click.Path(exists=True), default=None,
              help="Reuse a training-time compression selector.")
@click.option("--punct-file", type=click.Path(exists=True), default=None)
@click.option("--workers", type=int, default=1, show_default=True)
def extract(files, output, granularity, subword_vocab, compress, mode,
            prune_threshold, upsample, vocab_out, selector_out, selector_in,
            punct_file, workers):
    """Extract edit tags from line-aligned SRC TGT file pairs."""
    if len(files) % 2 != 0:
        raise ValidationError("files must come in SRC TGT pairs")
    pairs = [(files[i], files[i + 1]) for i in range(0, len(files), 2)]
    factors = None
    if upsample:
        try:
            factors = [int(x) for x in upsample.split(",")]
        except ValueError as exc:
            raise ValidationError(f"bad --upsample {upsample!r}") from exc
    if prune_threshold < 0:
        raise ValidationError("--prune must be >= 0")
    srcs, tgts = pipeline.read_parallel_corpora(pairs, factors)
    vocab = SubwordVocab.from_file(subword_vocab) if subword_vocab else None
    selector = CompressionSelector.load(selector_in) if selector_in else None
    sentences, vocabulary, selector = pipeline.extract_corpus(
        srcs, tgts,
        granularity=granularity, subword_vocab=vocab, compress=compress,
        mode=mode, prune_threshold=prune_threshold, selector=selector,
        punct=_punct(punct_file), workers=workers,
    )
    tagio.write_tag_file(output, sentences, granularity, compress)
    if vocab_out:
        vocabulary.save(vocab_out)
    if selector_out and selector is not None:
        selector.save(selector_out)
    click.echo(f"wrote {len(sentences)} sentences to {output}")


@cli.command()
@click.argument("train_tags", type=click.Path(exists=True))
@click.argument("dev_tags", type=click.Path(exists=True))
@click.option("--tsv", is_flag=True, help="Machine-readable output.")
def stats(train_tags, dev_tags, tsv):
    """Edit-vocabulary statistics: unique edits, dev OOV%, oracle F0.5."""
    t_gran, t_comp, train_sents = tagio.read_tag_file(train_tags)
    d_gran, d_comp, dev_sents = tagio.read_tag_file(dev_tags)
    if (t_gran, t_comp) != (d_gran, d_comp):
        raise ValidationError(
            f"granularity/compression mismatch: train is {t_gran}/{t_comp}, "
            f"dev is {d_gran}/{d_comp}"
        )
    vocabulary = vocab_from_sentences(train_sents)
    report = coverage_stats(vocabulary, dev_sents)
    dev_src = [rebuild_source(s) for s in dev_sents]
    dev_tgt = [apply_tags(s, t) for s, t in zip(dev_src, dev_sents)]
    oracle_hyp = [
        apply_tags(s, t) for s, t in zip(dev_src, report.oracle_sentences)
    ]
    score = m2_score(dev_src, gold_from_references(dev_src, dev_tgt), oracle_hyp)
    if tsv:
        click.echo(
            f"{report.unique_edits}\t{report.oov_pct:.2f}\t{score.f05:.4f}"
        )
    else:
        click.echo(f"unique edits:  {report.unique_edits:,}")
        click.echo(f"dev OOV%:      {report.oov_pct:.2f}%")
        click.echo(f"oracle F0.5:   {score.f05:.4f}")


@cli.command("apply")
@click.argument("src_file", type=click.Path(exists=True))
@click.argument("tags_file", type=click.Path(exists=True))
@click.option("-o", "--output", required=True, type=click.Path())
def apply_cmd(src_file, tags_file, output):
    """Apply a tag file (e.g. external predictions) to a source corpus."""
    srcs = _read_sentences(src_file)
    _, _, tagged = tagio.read_tag_file(tags_file)
    if len(srcs) != len(tagged):
        raise ValidationError(
            f"{src_file} has {len(srcs)} sentences, {tags_file} has {len(tagged)}"
        )
    out = []
    for i, (src, sent) in enumerate(zip(srcs, tagged)):
        try:
            out.append(apply_tags(src, sent))
        except ValidationError as exc:
            raise ValidationError(f"sentence {i}: {exc}") from exc
    _write_sentences(output, out)


@cli.command("lookup-train")
@click.argument("tags_file", type=click.Path(exists=True))
@click.option("-o", "--output", required=True, type=click.Path())
def lookup_train_cmd(tags_file, output):
    """Train the lookup baseline from a subword tag file."""
    _, compressed, sentences = tagio.read_tag_file(tags_file)
    model = lookup_train(sentences, compressed=compressed)
    model.save(output)
    click.echo(
        f"trained lookup model: {len(model.trigram)} trigrams, "
        f"{len(model.unigram)} unigrams"
    )


@cli.command()
@click.argument("src_file", type=click.Path(exists=True))
@click.option("--model", required=True, type=click.Path(exists=True))
@click.option("--subword-vocab", required=True, type=click.Path(exists=True))
@click.option("--iterations", type=int, default=1, show_default=True)
@click.option("--pnx-model", type=click.Path(exists=True), default=None,
              help="Cascade: punctuation model applied once after the main phase.")
@click.option("-o", "--output", required=True, type=click.Path())
def tag(src_file, model, subword_vocab, iterations, pnx_model, output):
    """Correct a corpus with the lookup tagger (iterative, optionally cascaded)."""
    vocab = SubwordVocab.from_file(subword_vocab)
    lookup = LookupModel.load(model)
    tagger = lambda tokens: lookup_tag(lookup, tokens, vocab)  # noqa: E731
    pnx_tagger = None
    if pnx_model:
        pnx = LookupModel.load(pnx_model)
        pnx_tagger = lambda tokens: lookup_tag(pnx, tokens, vocab)  # noqa: E731
    cfg = InferenceConfig(iterations=iterations, pnx_tagger=pnx_tagger)
    out = [infer(src, tagger, cfg) for src in _read_sentences(src_file)]
    _write_sentences(output, out)


@cli.command("ensemble")
@click.argument("src_file", type=click.Path(exists=True))
@click.argument("hyp_files", nargs=-1, required=True, type=click.Path(exists=True))
@click.option("--min-votes", type=int, default=None,
              help="Defaults to k - 1 for k systems.")
@click.option("-o", "--output", required=True, type=click.Path())
def ensemble_cmd(src_file, hyp_files, min_votes, output):
    """Majority-vote ensembling of corrected corpora against the source."""
    srcs = _read_sentences(src_file)
    hyps = [_read_sentences(p) for p in hyp_files]
    for path, h in zip(hyp_files, hyps):
        if len(h) != len(srcs):
            raise ValidationError(f"{path}: {len(h)} sentences, expected {len(srcs)}")
    out = [
        ensemble(src, [h[i] for h in hyps], min_votes=min_votes)
        for i, src in enumerate(srcs)
    ]
    _write_sentences(output, out)


def _gold(src_file, ref_file, m2_file):
    if m2_file:
        parsed = parse_m2(m2_file)
        return [s for s, _ in parsed], [g for _, g in parsed]
    if not (src_file and ref_file):
        raise ValidationError("provide either --m2 or both --src and --ref")
    srcs = _read_sentences(src_file)
    refs = _read_sentences(ref_file)
    if len(srcs) != len(refs):
        raise ValidationError(f"{len(srcs)} source vs {len(refs)} reference sentences")
    return srcs, gold_from_references(srcs, refs)


@cli.command()
@click.argument("hyp_file", type=click.Path(exists=True))
@click.option("--src", "src_file", type=click.Path(exists=True), default=None)
@click.option("--ref", "ref_file", type=click.Path(exists=True), default=None)
@click.option("--m2", "m2_file", type=click.Path(exists=True), default=None)
@click.option("--machine", is_flag=True, help="Only the single-line format.")
def score(hyp_file, src_file, ref_file, m2_file, machine):
    """M2-style evaluation of a corrected corpus."""
    srcs, golds = _gold(src_file, ref_file, m2_file)
    hyps = _read_sentences(hyp_file)
    report = m2_score(srcs, golds, hyps)
    if not machine:
        click.echo(f"TP        {report.tp}")
        click.echo(f"FP        {report.fp}")
        click.echo(f"FN        {report.fn}")
        click.echo(f"Precision {report.precision:.4f}")
        click.echo(f"Recall    {report.recall:.4f}")
        click.echo(f"F1        {report.f1:.4f}")
        click.echo(f"F0.5      {report.f05:.4f}")
    click.echo(report.machine_line())


@cli.command("significance")
@click.argument("hyp_a", type=click.Path(exists=True))
@click.argument("hyp_b", type=click.Path(exists=True))
@click.option("--src", "src_file", type=click.Path(exists=True), default=None)
@click.option("--ref", "ref_file", type=click.Path(exists=True), default=None)
@click.option("--m2", "m2_file", type=click.Path(exists=True), default=None)
@click.option("--trials", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=42, show_default=True)
def significance_cmd(hyp_a, hyp_b, src_file, ref_file, m2_file, trials, seed):
    """Two-sided approximate randomization test between two systems."""
    srcs, golds = _gold(src_file, ref_file, m2_file)
    a = _read_sentences(hyp_a)
    b = _read_sentences(hyp_b)
    p = ar_significance(srcs, golds, a, b, trials=trials, seed=seed)
    click.echo(f"p = {p:.6f}")


@cli.command("punct-dump")
@click.option("-o", "--output", type=click.Path(), default=None)
def punct_dump(output):
    """Emit the default punctuation set, one U+XXXX code point per line."""
    lines = [f"U+{ord(c):04X}" for c in DEFAULT_PUNCT.materialize()]
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    else:
        click.echo("\n".join(lines))


@cli.command("synth")
@click.option("-n", "--sentences", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--src-out", required=True, type=click.Path())
@click.option("--tgt-out", required=True, type=click.Path())
@click.option("--subword-vocab-out", type=click.Path(), default=None)
def synth_cmd(sentences, seed, src_out, tgt_out, subword_vocab_out):
    """Generate a seeded synthetic parallel corpus."""
    srcs, tgts = synth.make_corpus(sentences, seed=seed)
    synth.write_corpus(srcs, tgts, src_out, tgt_out)
    if subword_vocab_out:
        synth.build_subword_vocab(srcs + tgts).to_file(subword_vocab_out)
    click.echo(f"wrote {sentences} sentence pairs (kernel backend: {kernels.BACKEND})")


def main(argv=None):
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        return 2
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.Abort:
        return 1
    except FormatError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except ValidationError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

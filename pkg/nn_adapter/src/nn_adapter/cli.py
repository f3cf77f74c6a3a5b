"""nn-adapter command line: train and predict."""

import sys

import click

from . import predict as predict_mod
from . import suite as suite_mod
from .data import TrainingDataError
from .scorer import DEFAULT_CMD, EditgecScorer, ScoringError
from .tagfile import FormatError
from .train import TrainSpec, train


@click.group()
def cli():
    """Neural edit tagger exchanging tag files with the editgec CLI."""


@cli.command("train")
@click.argument("train_tags", type=click.Path(exists=True))
@click.option("--labels", "label_file", required=True, type=click.Path(exists=True),
              help="Edit-vocabulary TSV defining the label set.")
@click.option("--subword-vocab", required=True, type=click.Path(exists=True))
@click.option("-o", "--output", required=True, type=click.Path())
@click.option("--dev-src", type=click.Path(exists=True), default=None)
@click.option("--dev-ref", type=click.Path(exists=True), default=None)
@click.option("--encoder", default="tiny", show_default=True)
@click.option("--lr", type=float, default=5e-5, show_default=True)
@click.option("--batch-size", type=int, default=32, show_default=True)
@click.option("--epochs", type=int, default=10, show_default=True,
              help="10 in the standard recipe, 15 for some datasets.")
@click.option("--max-len", type=int, default=512, show_default=True)
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--editgec-cmd", default=None,
              help="Override the editgec CLI invocation used for dev scoring.")
def train_cmd(train_tags, label_file, subword_vocab, output, dev_src, dev_ref,
              encoder, lr, batch_size, epochs, max_len, seed, editgec_cmd):
    """Fine-tune on a subword tag file; best checkpoint by dev F0.5."""
    spec = TrainSpec(encoder=encoder, learning_rate=lr, batch_size=batch_size,
                     epochs=epochs, max_len=max_len, seed=seed,
                     label_file=label_file)
    scorer = None
    if dev_src and dev_ref:
        cmd = editgec_cmd.split() if editgec_cmd else DEFAULT_CMD
        scorer = EditgecScorer(dev_src, dev_ref, cmd=cmd)
    elif dev_src or dev_ref:
        raise click.UsageError("--dev-src and --dev-ref go together")
    best, _ = train(train_tags, spec, subword_vocab, output,
                    scorer=scorer, log=click.echo)
    if best is not None:
        click.echo(f"saved best checkpoint (dev F0.5 {best:.4f}) to {output}")
    else:
        click.echo(f"saved final checkpoint to {output}")


@cli.command("predict")
@click.argument("checkpoint", type=click.Path(exists=True))
@click.argument("src_file", type=click.Path(exists=True))
@click.option("-o", "--output", required=True, type=click.Path())
@click.option("--granularity", type=click.Choice(["subword", "word"]),
              default="subword", show_default=True)
@click.option("--subword-vocab", type=click.Path(exists=True), default=None,
              help="Cross-check against the tokenizer stored in the checkpoint.")
def predict_cmd(checkpoint, src_file, output, granularity, subword_vocab):
    """Tag a whitespace-tokenized corpus, writing a tag file."""
    predict_mod.predict_file(checkpoint, src_file, output,
                             granularity=granularity,
                             tokenizer_file=subword_vocab)
    click.echo(f"wrote predictions to {output}")


@cli.command("synth-suite")
@click.option("-n", "--sentences", type=int, default=300, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--src-out", required=True, type=click.Path())
@click.option("--tgt-out", required=True, type=click.Path())
@click.option("--subword-vocab-out", type=click.Path(), default=None)
def synth_suite_cmd(sentences, seed, src_out, tgt_out, subword_vocab_out):
    """Generate the long-range-dependency demo corpus."""
    srcs, tgts = suite_mod.make_suite(sentences, seed=seed)
    suite_mod.write_suite(srcs, tgts, src_out, tgt_out, subword_vocab_out)
    click.echo(f"wrote {sentences} sentence pairs")


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
    except (FormatError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except (TrainingDataError, ScoringError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Neural edit tagger.

Fine-tunes a token-classification encoder over an edit-tag vocabulary. The
adapter never interprets edit tags: they are opaque labels read from and
written to the tag-file and vocabulary formats of the editgec package, and
all edit application and scoring happens through the editgec CLI.
"""

from .data import LabelSet, TrainingDataError
from .tagfile import FormatError, read_tag_file, write_tag_file
from .train import TrainSpec, train
from .predict import load_checkpoint, predict_file

__all__ = [
    "FormatError",
    "LabelSet",
    "TrainSpec",
    "TrainingDataError",
    "load_checkpoint",
    "predict_file",
    "read_tag_file",
    "train",
    "write_tag_file",
]

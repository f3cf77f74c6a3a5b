"""Tiny Transformer encoder for token classification.

Stands in for a pretrained encoder when none is available: randomly
initialized, trained from scratch. The "encoder" field of TrainSpec selects
the architecture; only "tiny" is currently registered.
"""

import torch
from torch import nn

from .data import PAD_ID

TINY = dict(d_model=64, nhead=4, layers=2, ffn=128)

ENCODERS = {"tiny": TINY}


class TokenTagger(nn.Module):
    def __init__(self, vocab_size, n_labels, max_len, config=TINY):
        super().__init__()
        d = config["d_model"]
        self.config = dict(config)
        self.max_len = max_len
        self.embed = nn.Embedding(vocab_size, d, padding_idx=PAD_ID)
        self.pos = nn.Embedding(max_len, d)
        layer = nn.TransformerEncoderLayer(
            d_model=d, nhead=config["nhead"], dim_feedforward=config["ffn"],
            batch_first=True, dropout=0.1,
        )
        self.encoder = nn.TransformerEncoder(layer, num_layers=config["layers"])
        self.head = nn.Linear(d, n_labels)

    def forward(self, inputs):
        positions = torch.arange(inputs.shape[1], device=inputs.device)
        x = self.embed(inputs) + self.pos(positions)[None, :, :]
        x = self.encoder(x, src_key_padding_mask=inputs == PAD_ID)
        return self.head(x)

"""Speculative decoding returns exactly what the target alone would.

Greedy outputs are compared token by token; sampled outputs are compared
against the target's exact three-token distribution on a small Markov pair.
"""

import itertools
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from tests.conftest import tiny_prompt, tiny_target  # noqa: E402
from tests.markov import MarkovModel, random_tables, text_prompt  # noqa: E402
from vispec.models import DraftModel  # noqa: E402
from vispec.specdec import DecodeConfig, speculative_generate, target_generate  # noqa: E402

target = tiny_target(seed=1)
draft = DraftModel.initialize(target, seed=2)
for mode in ("chain", "tree"):
    same = 0
    for s in range(10):
        prompt = tiny_prompt(target, seed=s)
        ref, _ = target_generate(prompt, target, 16)
        out, stats = speculative_generate(prompt, target, draft, DecodeConfig(mode=mode, max_new_tokens=16))
        same += out.tolist() == ref.tolist()
    print(f"{mode}: {same}/10 greedy outputs identical to the target")

rng = np.random.default_rng(0)
T, D = MarkovModel(random_tables(4, rng, 2.0)), MarkovModel(random_tables(4, rng, 0.5))
n = 20_000
counts = {}
for s in range(n):
    out, _ = speculative_generate(text_prompt([1, 2]), T, D,
                                  DecodeConfig(mode="tree", temperature=1.0, max_new_tokens=3, seed=s,
                                               stop_tokens=(), tree_budget=6, expand_top_k=2))
    counts[tuple(out.tolist())] = counts.get(tuple(out.tolist()), 0) + 1
worst = max(abs(counts.get(c, 0) / n - T.sequence_probability(2, 1, c))
            for c in itertools.product(range(4), repeat=3))
print(f"largest gap between sampled and exact sequence probabilities: {worst:.4f} ({n} runs)")

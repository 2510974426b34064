"""Low-resource MT experiment harness.

Corpus handling, sentence noising, a deterministic statistical translator,
BLEU evaluation, synthetic related-language generation, and a resumable
iterative back-translation pipeline, all runnable on a laptop.
"""

__version__ = "0.1.0"

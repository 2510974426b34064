"""Exception hierarchy, aligned with the CLI exit-code taxonomy.

DataError subclasses map to exit code 2, PipelineError subclasses to 3,
UsageError to 1.
"""

from __future__ import annotations


class LrmtError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(LrmtError):
    """Bad invocation: unknown flags, contradictory options."""


class DataError(LrmtError):
    """Problem with input data or data-level configuration."""


class DecodeError(DataError):
    """Input file is not valid UTF-8."""

    def __init__(self, path: str, byte_offset: int):
        super().__init__(f"{path}: invalid UTF-8 at byte offset {byte_offset}")
        self.path = path
        self.byte_offset = byte_offset


class EmptyCorpusError(DataError):
    """An operation produced or received a corpus with no sentences."""


class AlignmentError(DataError):
    """Side lengths of a would-be parallel corpus disagree."""

    def __init__(self, src_len: int, tgt_len: int):
        super().__init__(f"cannot pair corpora of different sizes: {src_len} vs {tgt_len}")
        self.src_len = src_len
        self.tgt_len = tgt_len


class SizeError(DataError):
    """Requested split sizes exceed the corpus size."""


class FormatError(DataError):
    """A file does not follow its canonical on-disk format."""


class ConfigError(DataError):
    """Invalid parameter value or mismatched language pair."""


class CheckpointError(DataError):
    """A model checkpoint could not be read back."""


class PipelineError(LrmtError):
    """Base class for orchestration failures."""


class StagePreconditionError(PipelineError):
    """A stage's required input artifact is missing."""


class SequencingError(PipelineError):
    """A stage was requested before its prerequisites ran."""


class ResumeError(PipelineError):
    """The on-disk run state cannot be resumed."""


class ConfigMismatchError(ResumeError):
    """Resume was attempted with a config differing from the recorded one."""

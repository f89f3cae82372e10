"""Exception hierarchy shared by the compressor, decoder and CLI."""


class VdwError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class NoInitialProgression(VdwError):
    """No monochromatic progression exists where one is required."""

    exit_code = 1


class QueueExhausted(VdwError):
    """The progression queue emptied before enough replacements were made.

    ``window`` holds the first n symbols of the tape at that moment. When the
    queue invariant holds this window is progression-free, which certifies
    that the chosen n is below the van der Waerden number.
    """

    exit_code = 2

    def __init__(self, message, window=()):
        super().__init__(message)
        self.window = tuple(window)


class TapeExhausted(VdwError):
    """The tape is too short to supply replacement symbols from beyond the window."""

    exit_code = 3


class CorruptArtifact(VdwError):
    """An artifact (or single-shot output) failed validation while decoding."""

    exit_code = 6


class InvalidCode(CorruptArtifact):
    """A relative code decodes to a progression outside the window."""


class ClaimViolated(VdwError):
    """A monochromatic progression escaped the queue, or a decoded one misses the front."""

    exit_code = 6

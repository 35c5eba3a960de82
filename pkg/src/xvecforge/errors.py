"""Exception types shared across the pipeline."""


class XvecForgeError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(XvecForgeError):
    """Tensor or matrix dimensions are incompatible with an operation."""


class NonFiniteError(XvecForgeError):
    """A forward computation produced NaN or Inf."""


class NoSpeechError(XvecForgeError):
    """Voice activity detection removed every frame of an utterance."""


class ConfigError(XvecForgeError):
    """A pipeline configuration file could not be parsed or is invalid."""


class MissingArtifactError(XvecForgeError):
    """A stage requires an upstream artifact that does not exist yet."""


class ContainerFormatError(XvecForgeError):
    """A binary container file is malformed or has the wrong version."""

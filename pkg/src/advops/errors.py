"""Exception hierarchy shared across the toolkit."""


class AdvopsError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(AdvopsError):
    """An input violates a documented precondition or invariant."""


class MissingInput(AdvopsError):
    """A required upstream artifact or file does not exist."""


# --- image operations ---

class EncodingFailure(AdvopsError):
    """The JPEG codec rejected the image."""


class DegenerateOutput(AdvopsError):
    """An operation would produce an image with a zero dimension."""


# --- classifier gateway ---

class BackendUnavailable(AdvopsError):
    """External classifier process is dead or the handshake failed."""


class ProtocolViolation(AdvopsError):
    """External classifier sent a malformed or inconsistent reply."""


class LabelSpaceTooSmall(AdvopsError):
    """Backend label space has fewer than 6 labels; top-5 is ill-defined."""


# --- desk model ---

class NonFiniteLoss(AdvopsError):
    """Training diverged to a non-finite loss value."""

    def __init__(self, epoch, loss):
        super().__init__(f"non-finite loss {loss!r} at epoch {epoch}")
        self.epoch = epoch
        self.loss = loss


# --- attacks ---

class GradientUnavailable(AdvopsError):
    """Backend does not expose input gradients."""


class DegenerateTarget(AdvopsError):
    """Targeted attack where the target equals the current top-1 label."""


# --- detectors ---

class SingularCovariance(AdvopsError):
    """Pooled covariance stayed singular even after shrinkage."""


class ClassMissing(AdvopsError):
    """Training rows contain only one of the two classes."""


class FeatureMismatch(AdvopsError):
    """Feature kind or operation subset differs from what a model expects."""


class EmptySplit(AdvopsError):
    """No rows available for the requested evaluation split."""


# --- dataset pipeline ---

class InsufficientCorrectImages(AdvopsError):
    """Fewer correctly classified pool images than requested."""


class RatioInfeasible(AdvopsError):
    """Dataset too small to honor the requested split ratios."""


class MetadataMissing(AdvopsError):
    """Import directory lacks the sidecar metadata file or required fields."""


class VerificationFailed(AdvopsError):
    """An imported image no longer satisfies its adversarial criterion."""

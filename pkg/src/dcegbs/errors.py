"""Exception and warning types shared across the package."""


class DcegbsError(Exception):
    """Base class for all package errors."""


class DegenerateResonance(DcegbsError):
    """Difference resonance requested for a pair with equal mode frequencies."""


class QuadratureNotConverged(DcegbsError):
    """Successive quadrature refinements disagree beyond tolerance."""


class OffResonance(DcegbsError):
    """Pump frequency matches neither the sum nor the difference resonance."""


class RWAInvalid(DcegbsError):
    """Pulse too short for the rotating-wave (secular) approximation."""


class InvalidModeIndex(DcegbsError):
    """Mode index outside the configured register."""


class NotSymplectifiable(DcegbsError):
    """Bogoliubov pair too far from the symplectic group to project."""


class CutoffTooSmall(DcegbsError):
    """Estimated photon-number tail mass beyond the cutoff exceeds tolerance."""


class StateSpaceTooLarge(DcegbsError):
    """Truncated product basis exceeds the desk-scale enumeration budget."""


class MatrixTooLarge(DcegbsError):
    """Matrix dimension beyond the exact-computation gate."""


class OddDimension(DcegbsError):
    """Hafnian requested for an odd-dimensional matrix."""


class LeakageExceeded(DcegbsError):
    """Truncation leakage of one evolution step above the configured gate."""


class NotUnitary(DcegbsError):
    """Matrix fails the unitarity tolerance."""


class UnreachableCoefficient(DcegbsError):
    """Requested coupling exceeds the perturbative |beta| gate."""


class FrequencyCollision(DcegbsError):
    """Two pump tones coincide within the addressability tolerance."""


class OutOfBranch(DcegbsError):
    """Target coupling outside the first monotonic branch of J1."""


class NoAcceptedSamples(DcegbsError):
    """No sample passed the herald condition."""


class PerturbationWarning(UserWarning):
    """Pulse drives the system outside the validated perturbative regime."""

class KickedTopError(Exception):
    """Base exception for the package"""
    pass

class InputError(KickedTopError):
    """Raised when arrays or arguments have the wrong shape or value"""
    pass

class NotHermitianError(InputError):
    """Raised when a generator handed to the exponential is not Hermitian"""
    pass

class ChartError(KickedTopError):
    """Raised when a point cannot be expressed on the requested chart"""
    pass

class ClosedFormError(KickedTopError):
    """Raised when the Heisenberg closed form is requested away from p=pi/2"""
    pass

class FactorizationError(KickedTopError):
    """Raised when the classical kick factorization does not hold"""
    pass

class ConfigError(KickedTopError):
    """Raised when an experiment configuration is invalid"""

    def __init__(self, message: str, field: str = None):
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)

class ExportError(KickedTopError):
    """Raised when a rotation matrix cannot be exported or imported"""
    pass

class OutputError(KickedTopError):
    """Raised when result files cannot be written"""
    pass

class GridFailure(KickedTopError):
    """Raised when grid points fail; carries (run stem, message) pairs"""

    def __init__(self, failures):
        self.failures = failures
        summary = '; '.join(f"{stem}: {message}" for stem, message in failures)
        super().__init__(f"{len(failures)} grid point(s) failed: {summary}")

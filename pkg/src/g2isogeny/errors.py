"""Exception hierarchy.

Every error carries a machine-readable ``code`` (the class name), the
module it belongs to, and the process exit code the CLI reports for it.
"""


class IsogenyError(Exception):
    module = "core"
    exit_code = 1

    @property
    def code(self):
        return type(self).__name__

    def to_json(self):
        return {"status": "error", "code": self.code, "module": self.module,
                "message": str(self)}


# algebra

class AlgebraError(IsogenyError):
    module = "algebra"
    exit_code = 2


class NoRoot(AlgebraError, ValueError):
    """Raised by square-root routines when the input is a non-residue."""


# curve

class InvalidCurve(IsogenyError, ValueError):
    module = "curve"
    exit_code = 2


class BadModulus(InvalidCurve):
    pass


class NotSquarefree(InvalidCurve):
    pass


# jacobian

class JacobianError(IsogenyError):
    module = "jacobian"
    exit_code = 3


class InvalidElement(JacobianError, ValueError):
    pass


class NotMonic(InvalidElement):
    pass


class DivisibilityFails(InvalidElement):
    pass


class InfinityContactFails(InvalidElement):
    pass


class BadDegreeFlag(InvalidElement):
    pass


class NotOrderThree(JacobianError):
    pass


class GeneratorsDependent(JacobianError):
    pass


class NotIsotropic(JacobianError):
    """The 3-Weil pairing is nontrivial on the kernel."""


# secant / isogeny

class SecantError(IsogenyError):
    module = "secant"
    exit_code = 4


class ZeroElement(SecantError, ValueError):
    pass


class UnexpectedContainment(SecantError):
    pass


class PipelineError(IsogenyError):
    module = "isogeny"
    exit_code = 4


class RankUnexpected(PipelineError):
    pass


class FNotInKernel(PipelineError):
    pass


class KernelDimNotOne(PipelineError):
    pass


class KernelTooSmall(PipelineError):
    pass


class NoValidCubic(PipelineError):
    pass


# recovery

class RecoveryError(IsogenyError):
    module = "recovery"
    exit_code = 5


class Degenerate(RecoveryError):
    pass


class RankTooLow(RecoveryError):
    pass


class SingularConic(RecoveryError, ValueError):
    pass


# verify

class VerifyError(IsogenyError):
    module = "verify"
    exit_code = 6


class TooLarge(VerifyError, ValueError):
    pass


class ParityError(VerifyError):
    pass


class SingularCurve(VerifyError):
    pass


# cli

class ParseError(IsogenyError, ValueError):
    module = "cli"
    exit_code = 2

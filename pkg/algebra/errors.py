class AlgebraError(Exception):
    """Base class for every error raised by the algebra package."""


class ParameterMismatch(AlgebraError, ValueError):
    pass


class IndexOutOfRange(AlgebraError, ValueError):
    pass


class VariantError(AlgebraError):
    """Operation needs the other variant (cyclotomic vs affine)."""


class NotInYoungSubgroup(AlgebraError):
    pass


class SingularGramError(AlgebraError):
    pass


class NotScalarError(AlgebraError):
    """Central element did not act as a scalar: module is not absolutely irreducible."""


class ModuleAxiomError(AlgebraError):
    pass


class DimensionBoundExceeded(AlgebraError):
    pass


class FormatError(AlgebraError, ValueError):
    pass

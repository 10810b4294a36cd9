"""Module containing the exception classes for cregro."""


class CregroError(Exception):
    """Use to capture any cregro error."""


class ArgumentError(CregroError):
    """Use to capture argument error."""


class ArgumentValidationError(ArgumentError):
    """Use to capture argument validation."""


class FieldError(CregroError):
    """Use to capture an invalid coefficient field."""


class RingError(CregroError):
    """Use to capture an invalid ring declaration."""


class FreeModuleError(CregroError):
    """Use to capture an invalid free module declaration."""


class WeightError(CregroError):
    """Use to capture invalid weights (negative entries or wrong length)."""


class ExponentOverflowError(CregroError):
    """Use to capture an exponent leaving the machine-word range."""


class ElementError(CregroError):
    """Use to capture error for ModuleElement instance."""


class ZeroElementError(ElementError):
    """Use to capture an operation that is undefined on the zero element."""


class HomogeneityError(ElementError):
    """Use to capture a standard-inhomogeneous element where a graded one is required."""


class GroebnerError(CregroError):
    """Use to capture error for the Groebner engine."""


class LiftingInstanceError(GroebnerError):
    """Use to capture a lifting diagram whose maps do not fit together."""


class DegreeBoundError(GroebnerError):
    """Use to capture a degree bound that is below the syzygy degree."""


class ResolutionError(CregroError):
    """Use to capture error for FreeResolution instance."""


class ZeroModuleError(ResolutionError):
    """Use to capture an invariant requested for the zero module."""


class ScriptError(CregroError):
    """Use to capture error in a session script.

    Attributes
    ----------
    message (str): a diagnostic message.
    line (int): 1-based line of the offending token.
    column (int): 1-based column of the offending token.
    expected (tuple): the expected-token set, possibly empty.
    """
    def __init__(self, message, line=0, column=0, expected=()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        super().__init__(self.diagnostic)

    @property
    def diagnostic(self):
        """Return the ``line:column: message`` diagnostic."""
        text = '{}:{}: {}'.format(self.line, self.column, self.message)
        if self.expected:
            text += ' (expected one of: {})'.format(', '.join(self.expected))
        return text


class ScriptSyntaxError(ScriptError):
    """Use to capture a lexical or syntactic error in a session script."""


class ScriptSemanticError(ScriptError):
    """Use to capture a semantic error in a session script."""

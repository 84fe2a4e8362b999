"""Exception hierarchy shared by the field modules."""


class ContractError(ValueError):
    """An operation was called outside its precondition."""


class FieldMismatchError(ValueError):
    """Operands belong to different fields."""


class NotInvertibleError(ZeroDivisionError):
    """Inverse requested for zero, or for a value sharing a factor with the modulus."""


class UnknownFieldError(KeyError):
    """Requested field size is not in the catalog."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class SpecParseError(ValueError):
    """A textual polynomial spec is malformed."""


class FieldValidationError(ValueError):
    """Field parameters violate a structural constraint."""


class BenchConfigError(ValueError):
    pass

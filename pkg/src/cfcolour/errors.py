"""Exception hierarchy shared by every cfcolour module."""


class CFColourError(Exception):
    """Base class for all errors raised by this package."""


class InputError(CFColourError):
    """Malformed or out-of-range input (bad instance, bad file, bad argument)."""


class ContractError(CFColourError):
    """A documented precondition was violated by the caller."""


class ResourceBudgetError(CFColourError):
    """An exact-search or enumeration budget was exceeded."""


class RoundingAbort(CFColourError):
    """The rounding loop hit a state it must not reach; carries a full state dump."""

    def __init__(self, message: str, dump: str = ""):
        super().__init__(message + ("\n" + dump if dump else ""))
        self.dump = dump

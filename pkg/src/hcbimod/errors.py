"""Exception hierarchy shared by all modules."""


class HCError(ValueError):
    """Base class for every error raised by hcbimod."""


class OrderMismatch(HCError):
    pass


class RankTooSmall(HCError):
    pass


class NeedMoreOrders(HCError):
    def __init__(self, required, message=None):
        self.required = required
        super().__init__(message or f"at least {required} orders are required")


class NotPureExponential(HCError):
    """Recurrence has a repeated root: the sequence has a polynomial-times-exponential term."""


class NonIntegerWeight(HCError):
    pass


class RankExceedsBound(HCError):
    pass


class InvalidGenerator(HCError):
    pass


class NonGenericWeight(HCError):
    pass

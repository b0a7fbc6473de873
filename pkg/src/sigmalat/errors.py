"""Exception types raised by the engine."""


class SigmaLatError(Exception):
    pass


class CapExceeded(SigmaLatError):
    """A hard size cap was hit; the input is not desk scale."""

    def __init__(self, what, cap, stage=None):
        self.what = what
        self.cap = cap
        self.stage = stage
        msg = f"{what} exceeded cap {cap}"
        if stage:
            msg += f" during {stage}"
        super().__init__(msg)


class NotNormal(SigmaLatError):
    pass


class NotContained(SigmaLatError):
    pass


class NotNormalized(SigmaLatError):
    pass


class BadAction(SigmaLatError):
    pass


class NotSigmaSoluble(SigmaLatError):
    pass


class NotSoluble(SigmaLatError):
    pass


class NotChiefFactor(SigmaLatError):
    pass


class ParseError(SigmaLatError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)

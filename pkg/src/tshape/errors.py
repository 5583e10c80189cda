"""Exception hierarchy. Every error carries a short ``kind`` used by the CLI."""


class ShapeError(ValueError):
    kind = "domain"


class ParseError(ShapeError):
    kind = "parse"


class NotReducedError(ShapeError):
    kind = "not-cyclically-reduced"


class BlockError(ShapeError):
    kind = "invalid-block"


class FullnessError(ShapeError):
    kind = "fullness"


class DerivativeEmptyError(ShapeError):
    kind = "derivative-empty"


class NormalFormError(ShapeError):
    kind = "normal-form"

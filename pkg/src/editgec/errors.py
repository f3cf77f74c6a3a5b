"""Exception hierarchy shared across the package.

ValidationError maps to CLI exit code 1, FormatError to exit code 2.
"""


class EditGecError(Exception):
    pass


class ValidationError(EditGecError):
    """Inputs are well-formed but semantically inconsistent."""


class FormatError(EditGecError):
    """A file or serialized value could not be parsed."""


class TagError(ValidationError):
    """A tag cannot be applied to its unit."""


class TagParseError(FormatError):
    """A serialized edit tag violates the tag grammar."""


class ExpansionUnderflow(TagError):
    """Fixed consuming ops exceed the unit length."""


class AmbiguousTag(TagError):
    """More than one starred consuming op; expansion is not unique."""

"""Error taxonomy shared by the library, CLI and HTTP service.

Every public failure mode maps to one of the closed set of codes so the
CLI and the service report identical diagnostics.
"""


class StudyKinError(Exception):
    code = "bad_input"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def payload(self) -> dict:
        return {"code": self.code, "message": self.message}


class BadInputError(StudyKinError):
    code = "bad_input"


class OffQuadricError(StudyKinError):
    code = "off_quadric"


class GeneratorSpaceError(StudyKinError):
    """Rotation part is zero: the point carries no displacement."""
    code = "on_generator_space"


class DegenerateLineError(StudyKinError):
    code = "degenerate_line"


class NotFoundError(StudyKinError):
    code = "not_found"

"""Exception hierarchy shared by all modules."""


class ValidationError(ValueError):
    """Input does not satisfy the structural contract of an operation."""


class ParseError(ValidationError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class StructureViolation(Exception):
    """A Hamiltonian cycle of the reduced graph does not split into j-blocks.

    ``run`` holds the offending vertex sequence.
    """

    def __init__(self, message: str, run: tuple[str, ...] = ()):
        self.run = tuple(run)
        super().__init__(message)


class InvalidProjection(Exception):
    """The X/j-block substitution produced a pair that is not an edge of B."""

    def __init__(self, message: str, triple: tuple[str, str, str]):
        self.triple = triple
        super().__init__(message)


class ResourceExhausted(RuntimeError):
    """The solver hit its node-expansion budget before deciding."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"node budget exhausted after {nodes} expansions")


class GenerationError(RuntimeError):
    pass


class CliqueTreeError(ValidationError):
    def __init__(self, report):
        self.report = report
        super().__init__(str(report))

"""Exception types raised across the package."""


class BridgekitError(Exception):
    """Base class for all package-specific errors."""


class CodeError(BridgekitError, ValueError):
    """A Gauss code (or text meant to be one) is structurally invalid."""


class ZeroLabel(CodeError):
    """0 appeared where a nonzero crossing label was required."""


class DuplicateOccurrence(CodeError):
    """Some signed entry occurs more than once."""


class MissingPartner(CodeError):
    """An entry +i or -i occurs without its partner."""


class NonContiguousLabels(CodeError):
    """Crossing labels are not exactly 1..n (parse() relabels such input)."""


class MalformedSignBlock(CodeError):
    """The ``| s1 .. sn`` block of a signed code is unreadable or mis-sized."""


class PatternNotPresent(CodeError):
    """A rewrite move was requested at a position where its pattern is absent."""


class LabelAbsent(CodeError, KeyError):
    """A crossing label was named that the code does not contain."""


class TableError(BridgekitError, ValueError):
    """An operation table handed to the coloring machinery is unusable."""


class ShapeMismatch(TableError):
    """Operation tables are not n x n for a common n."""


class OutOfRangeEntry(TableError):
    """An operation table contains a value outside 1..n."""


class AxiomViolation(TableError):
    """Tables failed verification and may not be used for counting."""


class DegenerateOrder(TableError):
    """Coloring bounds need an algebra of order at least 2."""


class InconsistentBounds(BridgekitError, RuntimeError):
    """A computed lower bound exceeded an upper bound; this is a bug, not bad data."""


class PipelineError(BridgekitError):
    """Batch-pipeline I/O failure."""


class FileUnreadable(PipelineError):
    """An input file could not be opened or decoded."""


class NoCodeColumn(PipelineError):
    """The input table has no recognizable Gauss-code column."""


class OutputUnwritable(PipelineError):
    """The output location could not be written."""

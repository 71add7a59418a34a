"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command-line frontend:

==========  =====================================================
exit code   meaning
==========  =====================================================
0           success
1           usage / invalid input (bad topology, bad parameters)
2           grid file could not be parsed
3           numerical failure (singular block, no convergence, ...)
4           an experiment found a counterexample (not an exception)
==========  =====================================================
"""


class GridStabError(Exception):
    exit_code = 1


class InputError(GridStabError, ValueError):
    """Input violates an operation's preconditions."""

    exit_code = 1


class ParseError(GridStabError, ValueError):
    exit_code = 2


class NumericalError(GridStabError, ArithmeticError):
    exit_code = 3


# numerics
class DimensionMismatch(InputError):
    pass


class SingularMatrix(NumericalError):
    pass


class NotSymmetric(InputError):
    pass


class NoConvergence(NumericalError):
    pass


# grid model
class TooFewNodes(InputError):
    pass


class OddRequired(InputError):
    pass


class HopOutOfRange(InputError):
    pass


class InvalidCode(InputError):
    pass


class Disconnected(InputError):
    pass


class Unreachable(InputError):
    pass


class NotATree(InputError):
    pass


class AlreadyAdjacent(InputError):
    pass


# reduction / coupling
class SingularLoadBlock(NumericalError):
    pass


class SingularPivot(NumericalError):
    def __init__(self, message, load_index):
        super().__init__(message)
        self.load_index = load_index


class NotUniform(InputError):
    pass


class ZeroAdmittance(InputError):
    pass


class NonSymmetricResult(NumericalError):
    pass


class MultipleZeroModes(NumericalError):
    pass


class NoZeroMode(NumericalError):
    pass


class TransparencyMismatch(NumericalError):
    def __init__(self, message, max_deviation):
        super().__init__(message)
        self.max_deviation = max_deviation


# circulant / fitting
class RankDeficient(NumericalError):
    pass


# simulation / experiments
class EmptyWindow(InputError):
    pass


class NTooLarge(InputError):
    pass

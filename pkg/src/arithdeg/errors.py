"""Exception hierarchy.

Everything raised on purpose derives from :class:`ArithDegError`.  Hypothesis
violations (bad discriminants, a prime of d_B that is not inert, ...) derive
from :class:`HypothesisError`; the CLI maps those to exit status 2.
"""


class ArithDegError(Exception):
    pass


class InputTooLargeError(ArithDegError, ValueError):
    """An integer exceeds the trial-division factorization bound."""


class OracleOverflowError(ArithDegError, ValueError):
    """A brute-force oracle was asked for a search it cannot finish."""


class HypothesisError(ArithDegError, ValueError):
    pass


class NonNegativeDiscriminantError(HypothesisError):
    pass


class NonFundamentalDiscriminantError(HypothesisError):
    pass


class QuaternionDiscriminantError(HypothesisError):
    pass


class NotInertError(HypothesisError):
    def __init__(self, prime, kind):
        self.prime = prime
        self.kind = kind
        super().__init__(f"prime {prime} dividing d_B {kind}s in K"
                         if kind == "split" else
                         f"prime {prime} dividing d_B is {kind} in K")


class DegenerateQuaternionError(HypothesisError):
    pass


class NonPrimeDiscriminantError(HypothesisError):
    """-d_K is not prime, outside the range of the elliptic-curve formula."""


class SplitPrimeError(HypothesisError):
    def __init__(self, prime):
        self.prime = prime
        super().__init__(f"prime {prime} splits in K; a nonsplit prime is required")


class ConsistencyError(ArithDegError, AssertionError):
    """Two evaluation routes that must agree did not."""

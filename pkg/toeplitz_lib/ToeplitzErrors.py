"""
Copyright 2019 ARM Limited
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.

ToeplitzErrors module contains the exception classes raised by toeplitz_lib.
Exceptions fall in three families which map to the exit codes in ReturnCodes:
ParseError, DomainError and InternalInconsistency.
"""


class ToeplitzLabError(Exception):
    """
    Base class for all toeplitz_lib errors.
    """
    pass


class ParseError(ToeplitzLabError):
    """
    Malformed literal input. Carries the character position where parsing failed and a
    description of what was expected there.
    """
    def __init__(self, position, expected, text=None):
        self.position = position
        self.expected = expected
        self.text = text
        message = "Parse error at position {}: expected {}".format(position, expected)
        if text is not None:
            message += " in {!r}".format(text)
        super(ParseError, self).__init__(message)


class DomainError(ToeplitzLabError):
    """
    An operation was called outside of its precondition, for example a Rat(T)-only command
    given a symbol with poles off the unit circle.
    """
    pass


class ZeroPolynomial(DomainError):
    """
    Operation requires a nonzero polynomial.
    """
    pass


class ZeroSum(DomainError):
    """
    The sum of the two polynomials given to sharp_sum_witness vanishes.
    """
    pass


class DivisionByZeroPolynomial(DomainError, ZeroDivisionError):
    """
    Polynomial division by the zero polynomial.
    """
    pass


class BothZero(DomainError):
    """
    gcd of two zero polynomials is undefined.
    """
    pass


class ZeroDenominator(DomainError, ZeroDivisionError):
    """
    Rational symbol or function with zero denominator.
    """
    pass


class ZeroSymbol(DomainError):
    """
    The zero symbol has no operator profile.
    """
    pass


class NotRatT(DomainError):
    """
    Symbol has poles off the unit circle but the operation needs all poles on it.
    """
    pass


class NotProper(DomainError):
    """
    Operation needs deg(s) <= deg(q).
    """
    pass


class DegreeTooLarge(DomainError):
    """
    Polynomial argument exceeds the allowed degree.
    """
    pass


class PolesInClosedDisk(DomainError):
    """
    Rational function is not in the Hardy space: it has poles in the closed unit disk.
    """
    pass


class LambdaNotInDisk(DomainError):
    """
    Evaluation point must lie in the open unit disk.
    """
    pass


class NonRealCoefficients(DomainError):
    """
    Operation needs a polynomial with real coefficients.
    """
    pass


class NonRealPoles(DomainError):
    """
    Denominator given to the Cayley correspondence has non-real roots.
    """
    pass


class NotCoprime(DomainError):
    """
    Polynomials given to the spectral factorization share a root.
    """
    pass


class DenominatorVanishesAtZero(DomainError):
    """
    Denominator polynomial has a root at the origin.
    """
    pass


class CircleRootDetected(DomainError):
    """
    A polynomial that must be circle-free has a root on the unit circle.
    """
    pass


class InexactFactorization(DomainError):
    """
    An exact basis was requested but the circle split is only available numerically.
    """
    pass


class InternalInconsistency(ToeplitzLabError):
    """
    An identity that must hold exactly did not. Never expected, always a bug.
    """
    pass


class IdentityFailure(InternalInconsistency):
    """
    A certificate identity (for example the Szego eigenrelation) failed to verify.
    """
    pass

"""The skew-field element contract.

Every matrix, solver and quasideterminant routine in this library is generic
over the element type.  An element type qualifies as a skew field here when

* ``+``, unary ``-`` and ``*`` implement ring arithmetic exactly (no
  rounding), with ``*`` associative but not assumed commutative;
* every nonzero element has a two-sided multiplicative inverse, exposed as
  ``inverse()``, and ``inverse()`` of zero raises ``ZeroDivisionError``;
* ``zero()`` and ``one()`` classmethods build the additive and
  multiplicative identities;
* ``==`` is exact and ``is_zero()`` tests equality with ``zero()``.

:class:`skewlin.quaternion.Quaternion` is the reference implementation.
Octonions do not qualify (multiplication is not associative) and are
deliberately unsupported.
"""

from abc import ABC, abstractmethod


class SkewFieldElement(ABC):
    """Abstract base for division-ring elements with exact arithmetic."""

    __slots__ = ()

    @classmethod
    @abstractmethod
    def zero(cls):
        """Additive identity."""

    @classmethod
    @abstractmethod
    def one(cls):
        """Multiplicative identity."""

    @abstractmethod
    def __add__(self, other):
        ...

    @abstractmethod
    def __neg__(self):
        ...

    @abstractmethod
    def __mul__(self, other):
        ...

    @abstractmethod
    def inverse(self):
        """Two-sided multiplicative inverse; raises ZeroDivisionError on zero."""

    @abstractmethod
    def is_zero(self):
        ...

    def __sub__(self, other):
        return self + (-other)

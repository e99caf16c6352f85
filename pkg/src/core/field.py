"""
Prime fields F_p: the characteristic and its scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from core.errors import CharacteristicMismatch, NotPrimeError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True, slots=True)
class PrimeChar:
    """The characteristic p of the field; checked for primality on construction."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool) or not is_prime(self.p):
            raise NotPrimeError(f"characteristic must be a prime, got {self.p!r}")

    def __int__(self) -> int:
        return self.p

    def __str__(self) -> str:
        return str(self.p)

    def inverse(self, value: int) -> int:
        value %= self.p
        if value == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return pow(value, -1, self.p)

    def check(self, other: "PrimeChar") -> None:
        if self.p != other.p:
            raise CharacteristicMismatch(f"characteristic {self.p} vs {other.p}")


@lru_cache(maxsize=None)
def char_of(p: int) -> PrimeChar:
    return PrimeChar(p)


@dataclass(frozen=True, slots=True)
class FpScalar:
    """An element of F_p stored as its least nonnegative residue."""

    value: int
    char: PrimeChar

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.char.p)

    @classmethod
    def of(cls, value: int, p: Union[int, PrimeChar]) -> "FpScalar":
        char = p if isinstance(p, PrimeChar) else char_of(p)
        return cls(value, char)

    def _other(self, other: Union["FpScalar", int]) -> int:
        if isinstance(other, FpScalar):
            self.char.check(other.char)
            return other.value
        return other

    def __add__(self, other):
        return FpScalar(self.value + self._other(other), self.char)

    __radd__ = __add__

    def __sub__(self, other):
        return FpScalar(self.value - self._other(other), self.char)

    def __rsub__(self, other):
        return FpScalar(self._other(other) - self.value, self.char)

    def __mul__(self, other):
        return FpScalar(self.value * self._other(other), self.char)

    __rmul__ = __mul__

    def __neg__(self):
        return FpScalar(-self.value, self.char)

    def __truediv__(self, other):
        return FpScalar(self.value * self.char.inverse(self._other(other)), self.char)

    def __pow__(self, k: int):
        if k < 0:
            return FpScalar(pow(self.char.inverse(self.value), -k, self.char.p), self.char)
        return FpScalar(pow(self.value, k, self.char.p), self.char)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)

    def frobenius(self) -> "FpScalar":
        # Fermat: identity on the prime field.
        return self ** self.char.p

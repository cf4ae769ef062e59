"""Exchange-rate ensembles of the four-good FARM economy.

Rates are stored as exact :class:`~fractions.Fraction` values in the
principal order ``FA, FR, FM, AR, AM, RM``. The reverse rates are never
stored; ``rate(Y, X)`` is always ``1 / rate(X, Y)``.

Ensembles obtained from a balanced base by scaling each principal rate with
an integer power of ``alpha`` are represented by their exponent vector
(a plain tuple of six ints), which is what the search engine works on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

GOODS = ("F", "A", "R", "M")
PRINCIPAL = (("F", "A"), ("F", "R"), ("F", "M"), ("A", "R"), ("A", "M"), ("R", "M"))
PRINCIPAL_NAMES = tuple(x + y for x, y in PRINCIPAL)
PRINCIPAL_INDEX = {pair: i for i, pair in enumerate(PRINCIPAL)}

Exponents = tuple  # six ints, principal order
Code = tuple  # (i, j, k)

START = (1, 0, 0, 0, 0, 0)
ZERO = (0, 0, 0, 0, 0, 0)


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("rates must be exact; got float %r" % value)
    return Fraction(value)


def format_fraction(q: Fraction) -> str:
    return "%d/%d" % (q.numerator, q.denominator)


@dataclass(frozen=True)
class RateEnsemble:
    rates: tuple

    def __post_init__(self):
        if len(self.rates) != 6:
            raise ValueError("an ensemble has exactly six principal rates")
        rates = tuple(to_fraction(r) for r in self.rates)
        if any(r <= 0 for r in rates):
            raise ValueError("exchange rates must be strictly positive")
        object.__setattr__(self, "rates", rates)

    @classmethod
    def of(cls, *rates) -> "RateEnsemble":
        return cls(tuple(rates))

    def rate(self, x: str, y: str) -> Fraction:
        """Units of ``y`` obtained for one unit of ``x``."""
        if x == y:
            raise ValueError("no exchange rate between a good and itself")
        if (x, y) in PRINCIPAL_INDEX:
            return self.rates[PRINCIPAL_INDEX[(x, y)]]
        return 1 / self.rates[PRINCIPAL_INDEX[(y, x)]]

    def with_rate(self, x: str, y: str, value: Fraction) -> "RateEnsemble":
        rates = list(self.rates)
        if (x, y) in PRINCIPAL_INDEX:
            rates[PRINCIPAL_INDEX[(x, y)]] = value
        else:
            rates[PRINCIPAL_INDEX[(y, x)]] = 1 / value
        return RateEnsemble(tuple(rates))

    def to_json(self) -> dict:
        return {name: format_fraction(r) for name, r in zip(PRINCIPAL_NAMES, self.rates)}


def is_balanced(r: RateEnsemble) -> bool:
    fa, fr, fm, ar, am, rm = r.rates
    return fa * ar == fr and ar * rm == am and fa * ar * rm == fm


@dataclass(frozen=True)
class BalancedBase:
    rates: RateEnsemble
    alpha: Fraction

    def __post_init__(self):
        alpha = to_fraction(self.alpha)
        if alpha <= 1:
            raise ValueError("alpha must be > 1, got %s" % alpha)
        if not is_balanced(self.rates):
            raise ValueError("base ensemble is not balanced")
        object.__setattr__(self, "alpha", alpha)

    def to_json(self) -> dict:
        return {"rates": self.rates.to_json(), "alpha": format_fraction(self.alpha)}


DEMO_BASE = BalancedBase(RateEnsemble.of(2, 6, 24, 3, 12, 4), Fraction(2))


def is_balanced_exp(n: Sequence[int]) -> bool:
    n1, n2, n3, n4, n5, n6 = n
    return n1 + n4 == n2 and n4 + n6 == n5 and n1 + n4 + n6 == n3


def code_of(n: Sequence[int]) -> Optional[Code]:
    if not is_balanced_exp(n):
        return None
    return (n[0], n[3], n[5])


def exponents_of(c: Sequence[int]) -> Exponents:
    i, j, k = c
    return (i, i + j, i + j + k, j, j + k, k)


def magnitude(n: Iterable[int]) -> int:
    return max((abs(x) for x in n), default=0)


code_magnitude = magnitude


def realize(n: Sequence[int], base: BalancedBase) -> RateEnsemble:
    """Rates ``alpha**n_i * base_i`` for an exponent vector ``n``."""
    if not is_balanced(base.rates):
        raise ValueError("base ensemble is not balanced")
    return RateEnsemble(tuple(base.alpha ** e * r for e, r in zip(n, base.rates.rates)))


def codes_up_to(nu: int):
    """All codes with magnitude <= nu, in lexicographic order."""
    span = range(-nu, nu + 1)
    return [(i, j, k) for i in span for j in span for k in span]


# JSON helpers

def exponents_to_json(n: Sequence[int]) -> dict:
    return {"exponents": list(n)}


def exponents_from_json(obj) -> Exponents:
    values = obj["exponents"] if isinstance(obj, dict) else obj
    if len(values) != 6 or not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        raise ValueError("exponents must be six integers")
    return tuple(values)


def base_from_json(obj: dict) -> BalancedBase:
    rates = obj["rates"]
    if isinstance(rates, dict):
        missing = [name for name in PRINCIPAL_NAMES if name not in rates]
        if missing:
            raise ValueError("missing rates: %s" % ", ".join(missing))
        values = [rates[name] for name in PRINCIPAL_NAMES]
    else:
        values = list(rates)
    ensemble = RateEnsemble(tuple(parse_rational(v) for v in values))
    return BalancedBase(ensemble, parse_rational(obj.get("alpha", "2/1")))


def parse_rational(text) -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or "." in text or "e" in text.lower():
        raise ValueError("rationals are written as 'p/q' or integers, got %r" % (text,))
    return Fraction(text.strip())

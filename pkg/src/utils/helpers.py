"""Helper functions shared across the package."""

from fractions import Fraction
from math import comb, factorial
from typing import Any, Dict, Union


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever n or k is negative or k > n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def binomial_polynomial(x: int, k: int) -> int:
    """
    Evaluate x(x-1)...(x-k+1)/k! at an integer, negative values included.

    Args:
        x (int): Evaluation point
        k (int): Degree of the polynomial

    Returns:
        int: The value, which is always an integer
    """
    numerator = 1
    for i in range(k):
        numerator *= x - i
    return numerator // factorial(k)


def rational_to_json(value: Union[int, Fraction]) -> Union[int, Dict[str, int]]:
    """Integers stay JSON numbers; other rationals become {"num", "den"}."""
    value = Fraction(value)
    if value.denominator == 1:
        return int(value)
    return {'num': value.numerator, 'den': value.denominator}


def to_jsonable(value: Any) -> Any:
    """Recursively convert Fractions, tuples and dataclass-like objects for json.dumps."""
    if isinstance(value, bool) or value is None or isinstance(value, (str, int)):
        return value
    if isinstance(value, Fraction):
        return rational_to_json(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, 'to_dict'):
        return to_jsonable(value.to_dict())
    return str(value)


def format_rational(value: Union[int, Fraction]) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"

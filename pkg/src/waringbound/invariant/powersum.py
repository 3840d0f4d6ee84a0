"""Signed sums of 2^n-th powers."""

from typing import Any, Dict, Iterable, List, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..algebra.parser import parse_poly
from ..algebra.polyring import Polynomial
from ..core.exceptions import ConfigurationError


class PowerExponent(BaseModel):
    """The exponent k = 2^n; only n >= 2 is allowed."""

    n: int = Field(ge=2)

    model_config = ConfigDict(frozen=True)

    @property
    def k(self) -> int:
        return 2**self.n

    @property
    def half(self) -> int:
        """2^(n-1), the exponent of each variable in the half-power monomial."""
        return 2 ** (self.n - 1)


ExponentLike = Union[int, PowerExponent]

SignedBase = Tuple[int, Polynomial]


def as_exponent(n: ExponentLike) -> PowerExponent:
    """Accept either a PowerExponent or a plain int n."""
    return n if isinstance(n, PowerExponent) else PowerExponent(n=n)


class PowerSum(BaseModel):
    """
    A formal signed sum  sum_t sign_t * base_t^(2^n).

    The empty sum represents 0. Bases may live in different rings; they are compared and
    combined in R_m with m the largest ``num_vars`` among them.
    """

    exponent: PowerExponent
    terms: Tuple[SignedBase, ...] = ()

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("terms")
    @classmethod
    def validate_signs(cls, v: Tuple[SignedBase, ...]) -> Tuple[SignedBase, ...]:
        for sign, base in v:
            if sign not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {sign}")
            if not isinstance(base, Polynomial):
                raise ValueError(f"base must be a Polynomial, got {type(base).__name__}")
        return tuple(v)

    @classmethod
    def of(cls, n: ExponentLike, *bases: Union[Polynomial, Tuple[int, Polynomial]]) -> "PowerSum":
        """Build a sum from bases (sign +1) or explicit (sign, base) pairs."""
        terms = [b if isinstance(b, tuple) else (1, b) for b in bases]
        return cls(exponent=as_exponent(n), terms=tuple(terms))

    @property
    def n(self) -> int:
        return self.exponent.n

    @property
    def num_vars(self) -> int:
        return max((base.num_vars for _, base in self.terms), default=1)

    def bases(self, num_vars: int = 0) -> List[Tuple[int, Polynomial]]:
        """(sign, base) pairs with every base extended to a common ring."""
        m = max(self.num_vars, num_vars)
        return [(sign, base.extend(m)) for sign, base in self.terms]

    def __len__(self) -> int:
        return len(self.terms)

    def to_json_document(self) -> Dict[str, Any]:
        """The power-sum file format: {"n": n, "terms": [{"sign": "+", "base": "..."}]}."""
        return {
            "n": self.n,
            "terms": [
                {"sign": "+" if sign > 0 else "-", "base": base.render()}
                for sign, base in self.terms
            ],
        }

    @classmethod
    def from_json_document(cls, document: Dict[str, Any]) -> "PowerSum":
        """
        Read the power-sum file format.

        Raises:
            ConfigurationError: If the document is not shaped like the file format
            ParseError: If a base expression does not parse
        """
        if not isinstance(document, dict) or "n" not in document:
            raise ConfigurationError('power-sum document needs a top-level "n"')
        entries: Iterable[Any] = document.get("terms", [])
        if not isinstance(entries, list):
            raise ConfigurationError('"terms" must be a list')
        terms = []
        for position, entry in enumerate(entries):
            if not isinstance(entry, dict) or entry.get("sign") not in ("+", "-"):
                raise ConfigurationError(f'term {position} needs "sign": "+" or "-"')
            if not isinstance(entry.get("base"), str):
                raise ConfigurationError(f'term {position} needs a "base" expression')
            sign = 1 if entry["sign"] == "+" else -1
            terms.append((sign, parse_poly(entry["base"])))
        return cls(exponent=PowerExponent(n=document["n"]), terms=tuple(terms))

"""Data models for invariants, certified bounds and finite-ring reports."""

from enum import Enum
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from .exceptions import VariableIndexError


def pair_count(m: int) -> int:
    """Number of pairs (i, j) with 1 <= i < j <= m."""
    return m * (m - 1) // 2


def iter_pairs(m: int) -> Iterator[Tuple[int, int]]:
    """Pairs (i, j), 1 <= i < j <= m, in lexicographic order."""
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            yield i, j


def pair_index(m: int, i: int, j: int) -> int:
    """Bit position of pair (i, j) in lexicographic pair order."""
    if not (1 <= i < j <= m):
        raise VariableIndexError(f"pair ({i}, {j}) is not 1 <= i < j <= {m}")
    return (i - 1) * m - (i - 1) * i // 2 + (j - i - 1)


class PatternMatrix(BaseModel):
    """
    A strictly upper triangular m x m matrix over Z/2, i.e. an element of (Z/2)^(m choose 2).

    Bit (i, j) lives at position ``pair_index(m, i, j)`` of ``mask``.
    """

    m: int = Field(ge=1)
    mask: int = Field(default=0, ge=0)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_mask(self) -> "PatternMatrix":
        if self.mask >> pair_count(self.m):
            raise ValueError(f"mask has bits beyond the {pair_count(self.m)} pairs of m={self.m}")
        return self

    @classmethod
    def zero(cls, m: int) -> "PatternMatrix":
        return cls(m=m)

    @classmethod
    def from_pairs(cls, m: int, pairs: Iterable[Tuple[int, int]]) -> "PatternMatrix":
        """Pattern with exactly the given pairs set (a repeated pair toggles)."""
        mask = 0
        for i, j in pairs:
            mask ^= 1 << pair_index(m, i, j)
        return cls(m=m, mask=mask)

    def get(self, i: int, j: int) -> int:
        return (self.mask >> pair_index(self.m, i, j)) & 1

    def with_bit(self, i: int, j: int, bit: int) -> "PatternMatrix":
        position = 1 << pair_index(self.m, i, j)
        mask = self.mask | position if bit & 1 else self.mask & ~position
        return PatternMatrix(m=self.m, mask=mask)

    def __xor__(self, other: "PatternMatrix") -> "PatternMatrix":
        if not isinstance(other, PatternMatrix):
            return NotImplemented
        if other.m != self.m:
            raise VariableIndexError(f"cannot add patterns of sizes {self.m} and {other.m}")
        return PatternMatrix(m=self.m, mask=self.mask ^ other.mask)

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    @property
    def weight(self) -> int:
        return bin(self.mask).count("1")

    def set_bits(self) -> List[Tuple[int, int]]:
        """Set pairs in lexicographic order."""
        return [(i, j) for i, j in iter_pairs(self.m) if self.get(i, j)]

    def render_text(self) -> str:
        """m lines of 0/1, with '.' on and below the diagonal."""
        lines = []
        for i in range(1, self.m + 1):
            row = ["." if j <= i else str(self.get(i, j)) for j in range(1, self.m + 1)]
            lines.append("".join(row))
        return "\n".join(lines)

    def to_document(self) -> "PatternMatrixDocument":
        return PatternMatrixDocument(m=self.m, bits=[list(p) for p in self.set_bits()])

    @classmethod
    def from_document(cls, document: "PatternMatrixDocument") -> "PatternMatrix":
        return cls.from_pairs(document.m, [tuple(b) for b in document.bits])

    def __str__(self) -> str:
        return self.render_text()


class PatternMatrixDocument(BaseModel):
    """JSON form of a PatternMatrix: set bits as [i, j] pairs in lexicographic order."""

    m: int = Field(ge=1)
    bits: List[List[int]] = Field(default_factory=list)

    def csv_row(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "weight": len(self.bits),
            "bits": " ".join(f"{i}-{j}" for i, j in self.bits),
        }


class BitVectorSpace(BaseModel):
    """
    A list of m-bit row vectors over GF(2).

    Row bit ``i - 1`` holds coordinate i.
    """

    m: int = Field(ge=0)
    rows: List[int] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_rows(self) -> "BitVectorSpace":
        for row in self.rows:
            if row < 0 or row >> self.m:
                raise ValueError(f"row {row} does not fit in {self.m} bits")
        return self

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "BitVectorSpace":
        """Rows written as bit strings, leftmost character = coordinate 1."""
        rows = list(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("all rows must have the same length")
        return cls(m=m, rows=[bits_to_int(r) for r in rows])


def bits_to_int(bits: str) -> int:
    """'110' -> coordinates 1 and 2 set."""
    value = 0
    for position, ch in enumerate(bits):
        if ch not in "01":
            raise ValueError(f"not a bit string: {bits!r}")
        if ch == "1":
            value |= 1 << position
    return value


def int_to_bits(value: int, m: int) -> str:
    """Inverse of :func:`bits_to_int`."""
    return "".join("1" if (value >> position) & 1 else "0" for position in range(m))


class BoundMethod(str, Enum):
    """How a lower bound was certified."""

    COUNTING = "counting"
    RANK_COMPLETION = "rank_completion"
    EXACT_SEARCH = "exact_search"


class CertifiedBound(BaseModel):
    """
    A lower bound on the number of signed 2^n-th powers, with its certificate.

    Witness payloads:
        exact_search: optimal list of generator vectors u as bit strings ("110" = x1 + x2)
        rank_completion: one bit string, the minimizing diagonal
        counting: empty
    """

    lower_bound: int = Field(ge=0)
    method: BoundMethod
    witness: List[str] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_witness_shape(self) -> "CertifiedBound":
        if self.method is BoundMethod.EXACT_SEARCH and len(self.witness) != self.lower_bound:
            raise ValueError("exact_search witness length must equal the lower bound")
        if self.method is BoundMethod.RANK_COMPLETION and len(self.witness) != 1:
            raise ValueError("rank_completion witness is a single diagonal bit string")
        return self

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "lower_bound": self.lower_bound,
            "method": self.method.value,
            "witness": list(self.witness),
        }

    def csv_row(self) -> Dict[str, Any]:
        return {
            "lower_bound": self.lower_bound,
            "method": self.method.value,
            "witness": " ".join(self.witness),
        }


class FiniteRingReport(BaseModel):
    """J(k, Z/q), the minimal term count of each member, and v(k, Z/q)."""

    q: int = Field(ge=2)
    k: int = Field(ge=1)
    powers: List[int]
    subring: List[int]
    distances: Dict[int, int]
    v_value: int = Field(ge=0)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_distances(self) -> "FiniteRingReport":
        if self.distances.get(0) != 0:
            raise ValueError("distance of 0 must be 0")
        if sorted(self.distances) != sorted(self.subring):
            raise ValueError("distances must cover exactly the subring")
        if any(d < 1 for r, d in self.distances.items() if r != 0):
            raise ValueError("nonzero members need at least one term")
        if self.v_value != max(self.distances.values()):
            raise ValueError("v_value must be the largest distance")
        return self

    def csv_row(self) -> Dict[str, int]:
        return {
            "q": self.q,
            "k": self.k,
            "|powers|": len(self.powers),
            "|subring|": len(self.subring),
            "v_value": self.v_value,
        }


class LemmaCounterexample(BaseModel):
    """A single failed check of the randomized Lemma suite."""

    trial: int
    n: int
    num_vars: int
    polynomial: str
    pair: Optional[List[int]] = None
    check: str
    expected: str
    actual: str


class LemmaReport(BaseModel):
    """Summary of a randomized Lemma verification run."""

    seed: int
    trials: int
    n_list: List[int]
    checks: int = 0
    failures: int = 0
    counterexamples: List[LemmaCounterexample] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def csv_row(self) -> Dict[str, int]:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "checks": self.checks,
            "failures": self.failures,
        }


class PowerCoefficientReport(BaseModel):
    """The x_i*x_j coefficient of f^(2^n) by closed form and by exact expansion."""

    polynomial: str
    n: int = Field(ge=2)
    pair: List[int]
    closed_form: int
    expanded: int
    half_power: int

    @computed_field  # type: ignore[prop-decorator]
    @property
    def matches(self) -> bool:
        return self.closed_form == self.expanded

    def csv_row(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "i": self.pair[0],
            "j": self.pair[1],
            "closed_form": self.closed_form,
            "expanded": self.expanded,
            "half_power": self.half_power,
            "matches": self.matches,
        }


class ObstructionReport(BaseModel):
    """A divisibility failure certifying that a polynomial is not in J(2^n, R_m)."""

    n: int
    pair: List[int]
    monomial: str
    coefficient: int
    divisor: int

    def csv_row(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "i": self.pair[0],
            "j": self.pair[1],
            "monomial": self.monomial,
            "coefficient": self.coefficient,
            "divisor": self.divisor,
        }


SCHEMAS: Dict[str, type] = {
    "pattern": PatternMatrixDocument,
    "bound": CertifiedBound,
    "finite-ring": FiniteRingReport,
    "lemma": LemmaReport,
    "power-coeff": PowerCoefficientReport,
    "obstruction": ObstructionReport,
}

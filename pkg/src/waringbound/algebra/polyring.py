"""
Sparse multivariate polynomials with arbitrary-precision integer coefficients.

A :class:`Polynomial` is an element of R_m = Z[x1, ..., xm]. Terms are stored in a dict
keyed by exponent tuples of length ``num_vars``; zero coefficients are never stored.
Iteration, printing and :meth:`Polynomial.terms` follow descending graded lexicographic
order. Values are immutable and safe to share between threads.
"""

from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..core.exceptions import VariableIndexError

Exponents = Tuple[int, ...]


class Monomial:
    """
    A monomial x^a = x1^a1 * ... * xk^ak.

    Trailing zero exponents are stripped, so the same monomial compares equal in every
    ring R_m that contains it.
    """

    __slots__ = ("exponents", "total_degree")

    def __init__(self, exponents: Iterable[int] = ()) -> None:
        exps = list(exponents)
        for position, e in enumerate(exps, start=1):
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponent of x{position} must be a non-negative int, got {e!r}")
        while exps and exps[-1] == 0:
            exps.pop()
        self.exponents: Exponents = tuple(exps)
        self.total_degree: int = sum(self.exponents)

    @classmethod
    def one(cls) -> "Monomial":
        """The empty monomial 1."""
        return cls(())

    @classmethod
    def var(cls, i: int, power: int = 1) -> "Monomial":
        """The monomial x_i^power (i is 1-based)."""
        if i < 1:
            raise VariableIndexError(f"variable index must be >= 1, got {i}")
        return cls([0] * (i - 1) + [power])

    @classmethod
    def from_powers(cls, powers: Mapping[int, int]) -> "Monomial":
        """Build a monomial from a mapping {variable index: exponent}."""
        if not powers:
            return cls.one()
        bad = [i for i in powers if i < 1]
        if bad:
            raise VariableIndexError(f"variable index must be >= 1, got {bad[0]}")
        exps = [0] * max(powers)
        for i, e in powers.items():
            exps[i - 1] += e
        return cls(exps)

    @property
    def max_variable(self) -> int:
        """Largest variable index with a positive exponent (0 for the monomial 1)."""
        return len(self.exponents)

    def padded(self, num_vars: int) -> Exponents:
        """Exponent tuple of length ``num_vars``."""
        if self.max_variable > num_vars:
            raise VariableIndexError(
                f"monomial {self} uses x{self.max_variable} but the ring has {num_vars} variables"
            )
        return self.exponents + (0,) * (num_vars - len(self.exponents))

    def render(self) -> str:
        """Render as ``x1^2*x3``; the monomial 1 renders as ``1``."""
        return _render_exponents(self.exponents) or "1"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Monomial({self.exponents!r})"


class TruncationSpec(BaseModel):
    """
    Performance control for exponentiation.

    After every intermediate product, monomials of total degree above
    ``max_total_degree`` (or with any exponent above ``max_var_degree``) are dropped and
    coefficients are reduced into [0, coefficient_modulus). A modulus of 0 means exact
    integer arithmetic.
    """

    max_total_degree: Optional[int] = Field(default=None, ge=0)
    coefficient_modulus: int = Field(default=0, ge=0)
    max_var_degree: Optional[int] = Field(default=None, ge=0)

    model_config = ConfigDict(frozen=True)

    @field_validator("coefficient_modulus")
    @classmethod
    def validate_modulus(cls, v: int) -> int:
        """Modulus must be 0 (exact) or at least 2."""
        if v == 1:
            raise ValueError("coefficient_modulus must be 0 or >= 2")
        return v

    @classmethod
    def exact(cls) -> "TruncationSpec":
        """No truncation, exact integers."""
        return cls()

    @classmethod
    def for_invariant(cls, n: int) -> "TruncationSpec":
        """Degree <= 2^n and coefficients mod 2^(n+1): enough for every coefficient phi reads."""
        return cls(max_total_degree=2**n, coefficient_modulus=2 ** (n + 1))

    @classmethod
    def for_pair_readoff(cls, n: int) -> "TruncationSpec":
        """Like :meth:`for_invariant`, also capping each exponent at 2^(n-1)."""
        return cls(
            max_total_degree=2**n,
            coefficient_modulus=2 ** (n + 1),
            max_var_degree=2 ** (n - 1),
        )

    @property
    def is_exact(self) -> bool:
        return (
            self.max_total_degree is None
            and self.coefficient_modulus == 0
            and self.max_var_degree is None
        )


EXACT = TruncationSpec.exact()

PolynomialLike = Union["Polynomial", int]


class Polynomial:
    """
    An element of R_m = Z[x1, ..., xm].

    Binary operations between polynomials with different ``num_vars`` extend both
    operands to the larger ring first.

    Examples:
        >>> x1, x2 = Polynomial.variable(1, 2), Polynomial.variable(2, 2)
        >>> str((x1 + x2) * (x1 - x2))
        'x1^2 - x2^2'
        >>> (1 + x1 + x2).pow(4).coeff(Monomial.from_powers({1: 1, 2: 1}))
        12
    """

    __slots__ = ("_num_vars", "_terms", "_hash")

    def __init__(
        self,
        num_vars: int,
        terms: Optional[Mapping[Union[Exponents, Monomial], int]] = None,
    ) -> None:
        if not isinstance(num_vars, int) or num_vars < 1:
            raise ValueError(f"num_vars must be a positive int, got {num_vars!r}")
        collected: Dict[Exponents, int] = {}
        for key, coefficient in (terms or {}).items():
            if not isinstance(coefficient, int):
                raise TypeError(f"coefficients must be int, got {type(coefficient).__name__}")
            monomial = key if isinstance(key, Monomial) else Monomial(key)
            exps = monomial.padded(num_vars)
            collected[exps] = collected.get(exps, 0) + coefficient
        self._num_vars = num_vars
        self._terms: Dict[Exponents, int] = {e: c for e, c in collected.items() if c != 0}
        self._hash: Optional[int] = None

    @classmethod
    def _from_canonical(cls, num_vars: int, terms: Dict[Exponents, int]) -> "Polynomial":
        # Trusted path: keys already have length num_vars and no coefficient is zero.
        poly = cls.__new__(cls)
        poly._num_vars = num_vars
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, num_vars: int = 1) -> "Polynomial":
        return cls._from_canonical(num_vars, {})

    @classmethod
    def constant(cls, value: int, num_vars: int = 1) -> "Polynomial":
        return cls(num_vars, {(0,) * num_vars: value})

    @classmethod
    def variable(cls, i: int, num_vars: Optional[int] = None) -> "Polynomial":
        """The polynomial x_i in R_m, with m = max(i, num_vars)."""
        if i < 1:
            raise VariableIndexError(f"variable index must be >= 1, got {i}")
        m = max(i, num_vars or 0)
        return cls._from_canonical(m, {Monomial.var(i).padded(m): 1})

    @classmethod
    def from_terms(
        cls, terms: Iterable[Tuple[Mapping[int, int], int]], num_vars: Optional[int] = None
    ) -> "Polynomial":
        """
        Build a polynomial from (powers, coefficient) pairs, e.g. ``[({1: 2}, 3), ({}, -1)]``.

        Args:
            terms: Pairs of {variable index: exponent} and integer coefficient
            num_vars: Ring size (default: largest variable used, at least 1)

        Returns:
            Polynomial
        """
        monomials = [(Monomial.from_powers(p), c) for p, c in terms]
        m = max([num_vars or 1] + [mono.max_variable for mono, _ in monomials])
        collected: Dict[Monomial, int] = {}
        for mono, c in monomials:
            collected[mono] = collected.get(mono, 0) + c
        return cls(m, collected)

    @property
    def num_vars(self) -> int:
        return self._num_vars

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> List[Tuple[Monomial, int]]:
        """Terms in descending graded lexicographic order."""
        return [(Monomial(e), c) for e, c in self._sorted_items()]

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self.terms())

    def _sorted_items(self) -> List[Tuple[Exponents, int]]:
        return sorted(self._terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def raw_terms(self) -> Mapping[Exponents, int]:
        """Read-only view of the exponent-tuple -> coefficient mapping."""
        return dict(self._terms)

    def degree(self) -> int:
        """Largest total degree of a term; the zero polynomial has degree -1."""
        return max((sum(e) for e in self._terms), default=-1)

    def max_variable(self) -> int:
        """Largest variable index occurring with a positive exponent (0 if none)."""
        best = 0
        for exps in self._terms:
            for position in range(len(exps), best, -1):
                if exps[position - 1]:
                    best = position
                    break
        return best

    def coeff(self, monomial: Union[Monomial, Iterable[int]]) -> int:
        """
        Coefficient c_f(x^a) of a monomial; 0 when absent.

        Raises:
            VariableIndexError: If the monomial uses a variable beyond ``num_vars``
        """
        mono = monomial if isinstance(monomial, Monomial) else Monomial(monomial)
        return self._terms.get(mono.padded(self._num_vars), 0)

    def constant_term(self) -> int:
        return self._terms.get((0,) * self._num_vars, 0)

    def extend(self, num_vars: int) -> "Polynomial":
        """Embed into R_num_vars (num_vars must not shrink the ring)."""
        if num_vars == self._num_vars:
            return self
        if num_vars < self._num_vars:
            raise VariableIndexError(
                f"cannot extend a polynomial in {self._num_vars} variables to {num_vars}"
            )
        pad = (0,) * (num_vars - self._num_vars)
        return Polynomial._from_canonical(num_vars, {e + pad: c for e, c in self._terms.items()})

    def restrict(self, variables: Iterable[int]) -> "Polynomial":
        """
        Set every variable outside ``variables`` to zero.

        This is a ring homomorphism R_m -> R_m, and it keeps the coefficient of every
        monomial supported on ``variables``.
        """
        keep = set(variables)
        outside = [i for i in range(self._num_vars) if (i + 1) not in keep]
        terms = {
            e: c for e, c in self._terms.items() if all(e[i] == 0 for i in outside)
        }
        return Polynomial._from_canonical(self._num_vars, terms)

    def project(self, variables: Sequence[int]) -> "Polynomial":
        """
        :meth:`restrict` to ``variables``, then rename ``variables[t]`` to x_(t+1).

        The result lives in R_len(variables). Coefficients of monomials supported on
        ``variables`` are kept under the renaming.

        Raises:
            VariableIndexError: If a variable is outside the ring or repeated
        """
        chosen = list(variables)
        if not chosen or len(set(chosen)) != len(chosen):
            raise VariableIndexError(f"need distinct variables to project on, got {chosen}")
        for v in chosen:
            if not 1 <= v <= self._num_vars:
                raise VariableIndexError(f"x{v} is not a variable of R_{self._num_vars}")
        positions = [v - 1 for v in chosen]
        terms: Dict[Exponents, int] = {}
        for e, c in self._terms.items():
            image = tuple(e[p] for p in positions)
            # supported on the chosen variables iff no degree is lost
            if sum(image) == sum(e):
                terms[image] = c
        return Polynomial._from_canonical(len(chosen), terms)

    def reduce_mod(self, modulus: int) -> "Polynomial":
        """Reduce every coefficient into [0, modulus)."""
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        terms = {e: c % modulus for e, c in self._terms.items() if c % modulus}
        return Polynomial._from_canonical(self._num_vars, terms)

    def _coerce(self, other: PolynomialLike) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other, self._num_vars)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def _aligned(self, other: "Polynomial") -> Tuple[int, "Polynomial", "Polynomial"]:
        m = max(self._num_vars, other._num_vars)
        return m, self.extend(m), other.extend(m)

    def __add__(self, other: PolynomialLike) -> "Polynomial":
        try:
            other_poly = self._coerce(other)
        except TypeError:
            return NotImplemented
        m, a, b = self._aligned(other_poly)
        terms = dict(a._terms)
        for e, c in b._terms.items():
            total = terms.get(e, 0) + c
            if total:
                terms[e] = total
            else:
                terms.pop(e, None)
        return Polynomial._from_canonical(m, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._from_canonical(self._num_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: PolynomialLike) -> "Polynomial":
        try:
            other_poly = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other_poly)

    def __rsub__(self, other: PolynomialLike) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: PolynomialLike) -> "Polynomial":
        try:
            other_poly = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.multiply(other_poly)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        return self.pow(exponent)

    def multiply(self, other: "Polynomial", spec: TruncationSpec = EXACT) -> "Polynomial":
        """Product, truncated according to ``spec``."""
        m, a, b = self._aligned(other)
        if a is b:
            return Polynomial._from_canonical(m, _square(a._terms, spec))
        return Polynomial._from_canonical(m, _multiply(a._terms, b._terms, spec))

    def pow(self, exponent: int, spec: TruncationSpec = EXACT) -> "Polynomial":
        """
        f^exponent by repeated squaring.

        Truncation (degree caps and coefficient reduction) is applied after every
        intermediate product, so the result agrees with the exact power reduced
        term-by-term on every surviving monomial.

        Args:
            exponent: Non-negative integer exponent
            spec: Truncation applied along the way (default: exact)

        Returns:
            Polynomial
        """
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a non-negative int, got {exponent!r}")
        m = self._num_vars
        result = _truncate({(0,) * m: 1}, spec)
        base = _truncate(dict(self._terms), spec)
        e = exponent
        while e:
            if e & 1:
                result = _multiply(result, base, spec)
            e >>= 1
            if e:
                base = _square(base, spec)
        return Polynomial._from_canonical(m, result)

    def render(self) -> str:
        """Canonical text form, e.g. ``4*x1^2*x2 - 3``; parse_poly reads it back."""
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for exps, c in self._sorted_items():
            mono = _render_exponents(exps)
            magnitude = abs(c)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(pieces)

    def _stripped(self) -> Dict[Exponents, int]:
        return {Monomial(e).exponents: c for e, c in self._terms.items()}

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other, self._num_vars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self._num_vars == other._num_vars:
            return self._terms == other._terms
        return self._stripped() == other._stripped()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._stripped().items()))
        return self._hash

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Polynomial({self.render()!r}, num_vars={self._num_vars})"


def _render_exponents(exps: Iterable[int]) -> str:
    factors = []
    for position, e in enumerate(exps, start=1):
        if e == 1:
            factors.append(f"x{position}")
        elif e > 1:
            factors.append(f"x{position}^{e}")
    return "*".join(factors)


def _keeps(exps: Exponents, spec: TruncationSpec) -> bool:
    if spec.max_total_degree is not None and sum(exps) > spec.max_total_degree:
        return False
    if spec.max_var_degree is not None and exps and max(exps) > spec.max_var_degree:
        return False
    return True


def _truncate(terms: Dict[Exponents, int], spec: TruncationSpec) -> Dict[Exponents, int]:
    if spec.is_exact:
        return terms
    modulus = spec.coefficient_modulus
    out: Dict[Exponents, int] = {}
    for e, c in terms.items():
        if not _keeps(e, spec):
            continue
        if modulus:
            c %= modulus
        if c:
            out[e] = c
    return out


def _finish(out: Dict[Exponents, int], spec: TruncationSpec) -> Dict[Exponents, int]:
    modulus = spec.coefficient_modulus
    if modulus:
        return {e: c % modulus for e, c in out.items() if c % modulus}
    return {e: c for e, c in out.items() if c}


def _by_degree(terms: Dict[Exponents, int]) -> List[Tuple[Exponents, int, int]]:
    return sorted(((e, c, sum(e)) for e, c in terms.items()), key=lambda t: t[2])


def _multiply(
    a: Dict[Exponents, int], b: Dict[Exponents, int], spec: TruncationSpec
) -> Dict[Exponents, int]:
    max_deg = spec.max_total_degree
    cap = spec.max_var_degree
    b_items = _by_degree(b)
    out: Dict[Exponents, int] = {}
    for ea, ca in a.items():
        da = sum(ea)
        for eb, cb, db in b_items:
            if max_deg is not None and da + db > max_deg:
                break
            e = tuple(x + y for x, y in zip(ea, eb))
            if cap is not None and max(e) > cap:
                continue
            out[e] = out.get(e, 0) + ca * cb
    return _finish(out, spec)


def _square(a: Dict[Exponents, int], spec: TruncationSpec) -> Dict[Exponents, int]:
    # Each unordered pair of distinct terms is visited once and doubled.
    max_deg = spec.max_total_degree
    cap = spec.max_var_degree
    items = _by_degree(a)
    out: Dict[Exponents, int] = {}
    for index, (ea, ca, da) in enumerate(items):
        for other in range(index, len(items)):
            eb, cb, db = items[other]
            if max_deg is not None and da + db > max_deg:
                break
            e = tuple(x + y for x, y in zip(ea, eb))
            if cap is not None and max(e) > cap:
                continue
            product = ca * cb if other == index else 2 * ca * cb
            out[e] = out.get(e, 0) + product
    return _finish(out, spec)


def coeff(f: Polynomial, a: Union[Monomial, Iterable[int]]) -> int:
    """c_f(x^a)."""
    return f.coeff(a)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def sub(f: Polynomial, g: Polynomial) -> Polynomial:
    return f - g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def power(f: Polynomial, e: int, spec: TruncationSpec = EXACT) -> Polynomial:
    """f^e under ``spec``; see :meth:`Polynomial.pow`."""
    return f.pow(e, spec)

"""
The mod-2 invariant of signed sums of 2^n-th powers.

For n >= 2 and 1 <= i < j <= m, every f^(2^n) has a coefficient at x_i*x_j divisible by
2^n and a coefficient at x_i^(2^(n-1))*x_j^(2^(n-1)) divisible by 2. Reading the two
quotients mod 2 and adding them gives a bit phi_ij; over all pairs this is a map to
(Z/2)^(m choose 2), additive on signed sums, whose value on one power depends only on
the parity of the constant term and of the linear coefficients of the base:

    phi_ij(f^(2^n)) = (c_f(1) + 1) * c_f(x_i) * c_f(x_j)  mod 2

Two computation paths are offered: reading coefficients of an expansion (``phi``,
``phi_of_expansion``) and the closed forms on the bases (``phi_closed_of_base``,
``phi_of_powersum``). They are cross-checked in the tests and by ``verify_lemma``.
"""

from typing import Optional, Tuple

from ..algebra.polyring import EXACT, Monomial, Polynomial, TruncationSpec
from ..core.exceptions import ConfigurationError, NotInSubringObstruction, VariableIndexError
from ..core.models import PatternMatrix, iter_pairs, pair_index
from ..utils.logging import get_logger
from .powersum import ExponentLike, PowerSum, as_exponent

logger = get_logger("invariant.lemma")


def _check_pair(num_vars: int, i: int, j: int) -> None:
    if not (1 <= i < j <= num_vars):
        raise VariableIndexError(f"pair ({i}, {j}) is not 1 <= i < j <= {num_vars}")


def pair_monomial(i: int, j: int) -> Monomial:
    """x_i * x_j."""
    return Monomial.from_powers({i: 1, j: 1})


def half_power_monomial(i: int, j: int, n: ExponentLike) -> Monomial:
    """x_i^(2^(n-1)) * x_j^(2^(n-1))."""
    half = as_exponent(n).half
    return Monomial.from_powers({i: half, j: half})


def _linear(f: Polynomial, i: int) -> int:
    return f.coeff(Monomial.var(i))


def coeff_xixj_closed(f: Polynomial, n: ExponentLike, i: int, j: int) -> int:
    """
    Coefficient of x_i*x_j in f^(2^n), from the constant, linear and x_i*x_j terms of f.

    2^n c(1)^(2^n - 1) c(x_i x_j) + 2^n (2^n - 1) c(1)^(2^n - 2) c(x_i) c(x_j)
    """
    k = as_exponent(n).k
    _check_pair(f.num_vars, i, j)
    c0 = f.constant_term()
    return k * c0 ** (k - 1) * f.coeff(pair_monomial(i, j)) + k * (k - 1) * c0 ** (
        k - 2
    ) * _linear(f, i) * _linear(f, j)


def intermediate_quotient_closed(f: Polynomial, n: ExponentLike, i: int, j: int) -> int:
    """Predicted parity of c_{f^(2^n)}(x_i x_j) / 2^n: c(1) (c(x_i x_j) + c(x_i) c(x_j)) mod 2."""
    as_exponent(n)
    _check_pair(f.num_vars, i, j)
    c0 = f.constant_term()
    return (c0 * (f.coeff(pair_monomial(i, j)) + _linear(f, i) * _linear(f, j))) % 2


def half_power_quotient_closed(f: Polynomial, n: ExponentLike, i: int, j: int) -> int:
    """Predicted parity of the half-power coefficient / 2: c(1) c(x_i x_j) + c(x_i) c(x_j) mod 2."""
    as_exponent(n)
    _check_pair(f.num_vars, i, j)
    c0 = f.constant_term()
    return (c0 * f.coeff(pair_monomial(i, j)) + _linear(f, i) * _linear(f, j)) % 2


def quotient_pair(g: Polynomial, n: ExponentLike, i: int, j: int) -> Tuple[int, int]:
    """
    The two quotient bits read by phi_ij.

    Args:
        g: Alleged member of J(2^n, R_m); coefficients may also be residues mod 2^(n+1)
        n: Exponent n >= 2
        i, j: Pair with i < j <= g.num_vars

    Returns:
        (c_g(x_i x_j) / 2^n mod 2, c_g(x_i^h x_j^h) / 2 mod 2) with h = 2^(n-1)

    Raises:
        NotInSubringObstruction: If a divisibility fails; g is then not in J(2^n, R_m)
    """
    exponent = as_exponent(n)
    _check_pair(g.num_vars, i, j)

    # x_i*x_j coefficient must be divisible by 2^n
    mono = pair_monomial(i, j)
    c_pair = g.coeff(mono)
    if c_pair % exponent.k:
        raise NotInSubringObstruction((i, j), mono.render(), c_pair, exponent.k)

    # x_i^h x_j^h coefficient must be even
    half_mono = half_power_monomial(i, j, exponent)
    c_half = g.coeff(half_mono)
    if c_half % 2:
        raise NotInSubringObstruction((i, j), half_mono.render(), c_half, 2)

    return (c_pair // exponent.k) % 2, (c_half // 2) % 2


def phi_ij(g: Polynomial, n: ExponentLike, i: int, j: int) -> int:
    """pi_ij(g): sum of the two quotient bits, mod 2."""
    first, second = quotient_pair(g, n, i, j)
    return (first + second) % 2


def phi_closed_of_base(f: Polynomial, n: ExponentLike, m: Optional[int] = None) -> PatternMatrix:
    """
    phi(f^(2^n)) without expanding: bit (i, j) = (c(1) + 1) c(x_i) c(x_j) mod 2.

    Args:
        f: The base polynomial
        n: Exponent n >= 2
        m: Ring size (default: f.num_vars)
    """
    as_exponent(n)
    m = m or f.num_vars
    if f.max_variable() > m:
        raise VariableIndexError(f"base uses x{f.max_variable()} but m = {m}")
    return rank_one_pattern(linear_part_mod2(f.extend(max(m, f.num_vars)), m), m)


def linear_part_mod2(f: Polynomial, m: Optional[int] = None) -> int:
    """
    The GF(2) vector u a single power contributes: parities of c(x_1), ..., c(x_m).

    Bit i-1 holds coordinate i. An odd constant term makes the contribution 0.
    """
    m = m or f.num_vars
    # Odd constant: the power contributes nothing mod 2
    if f.constant_term() % 2:
        return 0
    u = 0
    for i in range(1, min(m, f.num_vars) + 1):
        if _linear(f, i) % 2:
            u |= 1 << (i - 1)
    return u


def rank_one_pattern(u: int, m: int) -> PatternMatrix:
    """Off-diagonal part of u*u^T over GF(2), as a pattern."""
    support = [i for i in range(1, m + 1) if (u >> (i - 1)) & 1]
    mask = 0
    for a, i in enumerate(support):
        for j in support[a + 1 :]:
            mask |= 1 << pair_index(m, i, j)
    return PatternMatrix(m=m, mask=mask)


def phi(g: Polynomial, n: ExponentLike, m: Optional[int] = None) -> PatternMatrix:
    """
    pi(g) in (Z/2)^(m choose 2), read from the coefficients of g.

    Args:
        g: Alleged member of J(2^n, R_m), exact or reduced mod 2^(n+1)
        n: Exponent n >= 2
        m: Ring size (default: g.num_vars)

    Raises:
        NotInSubringObstruction: With the offending pair, if g fails a divisibility
    """
    exponent = as_exponent(n)
    m = m or g.num_vars
    if g.max_variable() > m:
        raise VariableIndexError(f"polynomial uses x{g.max_variable()} but m = {m}")
    g = g.extend(max(m, g.num_vars))

    # Pairs in lexicographic order, one bit each
    mask = 0
    for i, j in iter_pairs(m):
        if phi_ij(g, exponent, i, j):
            mask |= 1 << pair_index(m, i, j)
    return PatternMatrix(m=m, mask=mask)


def expand(s: PowerSum, spec: TruncationSpec = EXACT) -> Polynomial:
    """sum_t sign_t * base_t^(2^n), each power computed under ``spec``."""
    k = s.exponent.k
    m = s.num_vars
    total = Polynomial.zero(m)
    for sign, base in s.bases():
        power = base.pow(k, spec)
        total = total + power if sign > 0 else total - power
    if spec.coefficient_modulus:
        total = total.reduce_mod(spec.coefficient_modulus)
    return total


def phi_of_powersum(s: PowerSum, m: Optional[int] = None) -> PatternMatrix:
    """XOR of the closed forms of every base; signs do not matter mod 2."""
    m = max(m or 0, s.num_vars)
    result = PatternMatrix.zero(m)
    for _, base in s.bases(m):
        result = result ^ phi_closed_of_base(base, s.exponent, m)
    return result


def _check_readoff_spec(spec: TruncationSpec, n: int) -> None:
    k = 2**n
    if spec.max_total_degree is not None and spec.max_total_degree < k:
        raise ConfigurationError(f"truncation degree {spec.max_total_degree} drops x_i^h x_j^h")
    if spec.max_var_degree is not None and spec.max_var_degree < k // 2:
        raise ConfigurationError(f"per-variable cap {spec.max_var_degree} drops x_i^h x_j^h")
    if spec.coefficient_modulus and spec.coefficient_modulus % (2 * k):
        raise ConfigurationError(f"modulus must be a multiple of {2 * k}")


def phi_of_expansion(
    s: PowerSum, m: Optional[int] = None, spec: Optional[TruncationSpec] = None
) -> PatternMatrix:
    """
    phi(expand(s)) without building the full expansion.

    For each pair (i, j) every base is projected onto x_i, x_j (other variables set to 0,
    the pair renamed x1, x2), raised under ``spec`` and summed. The projection is a ring
    homomorphism that keeps the two coefficients phi_ij reads, so the result equals
    ``phi(expand(s, EXACT))``.

    Args:
        s: The power sum
        m: Ring size (default: s.num_vars)
        spec: Truncation for the restricted powers (default: degree <= 2^n, each exponent
            <= 2^(n-1), coefficients mod 2^(n+1))

    Raises:
        NotInSubringObstruction: If a read coefficient fails its divisibility, reported
            with the original pair
    """
    n = s.n
    spec = spec or TruncationSpec.for_pair_readoff(n)
    _check_readoff_spec(spec, n)
    m = max(m or 0, s.num_vars)
    bases = s.bases(m)
    k = s.exponent.k

    mask = 0
    for i, j in iter_pairs(m):
        total = Polynomial.zero(2)
        for sign, base in bases:
            local = base.project((i, j))
            if local.is_zero:
                continue
            power = local.pow(k, spec)
            total = total + power if sign > 0 else total - power
        if spec.coefficient_modulus:
            total = total.reduce_mod(spec.coefficient_modulus)
        try:
            bit = phi_ij(total, s.exponent, 1, 2)
        except NotInSubringObstruction as e:
            # Report against the original pair, not the renamed x1, x2
            read = pair_monomial(i, j) if e.divisor == k else half_power_monomial(i, j, n)
            raise NotInSubringObstruction((i, j), read.render(), e.coefficient, e.divisor) from e
        if bit:
            mask |= 1 << pair_index(m, i, j)
    logger.debug(f"Read phi of a {len(s)}-term power sum over {m} variables pair by pair")
    return PatternMatrix(m=m, mask=mask)

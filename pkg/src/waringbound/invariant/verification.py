"""Randomized and exhaustive checks of the power-coefficient lemma and of surjectivity."""

import random
from typing import List, Optional, Tuple

from ..algebra.polyring import Monomial, Polynomial, TruncationSpec
from ..core.config import RunConfig
from ..core.exceptions import NotInSubringObstruction
from ..core.models import LemmaCounterexample, LemmaReport, PatternMatrix, iter_pairs
from ..utils.logging import get_logger
from ..utils.parallel import ordered_map
from ..utils.sampling import random_polynomial
from .lemma import (
    coeff_xixj_closed,
    half_power_monomial,
    half_power_quotient_closed,
    intermediate_quotient_closed,
    pair_monomial,
    phi,
    phi_ij,
)
from .powersum import PowerExponent

logger = get_logger("invariant.verification")

MAX_COUNTEREXAMPLES = 20

TrialResult = Tuple[int, List[LemmaCounterexample]]


def pair_power(f: Polynomial, n: int, i: int, j: int) -> Polynomial:
    """
    The part of f^(2^n) supported on x_i, x_j, with exact integer coefficients.

    Only monomials with each exponent <= 2^(n-1) are kept; the lemma reads nothing else.
    """
    spec = TruncationSpec(max_total_degree=2**n, max_var_degree=2 ** (n - 1))
    return f.restrict((i, j)).pow(2**n, spec)


def _check_trial(
    trial: int, f: Polynomial, n_list: List[int], full_expansion: bool
) -> TrialResult:
    checks = 0
    failures: List[LemmaCounterexample] = []
    rendered = f.render()

    def record(
        n: int, pair: Optional[Tuple[int, int]], check: str, expected: object, actual: object
    ) -> None:
        failures.append(
            LemmaCounterexample(
                trial=trial,
                n=n,
                num_vars=f.num_vars,
                polynomial=rendered,
                pair=list(pair) if pair else None,
                check=check,
                expected=str(expected),
                actual=str(actual),
            )
        )

    for n in n_list:
        exponent = PowerExponent(n=n)
        full = f.pow(exponent.k) if full_expansion else None
        for i, j in iter_pairs(f.num_vars):
            g = pair_power(f, n, i, j)
            c_pair = g.coeff(pair_monomial(i, j))
            c_half = g.coeff(half_power_monomial(i, j, exponent))

            # Per-pair path against the full expansion
            if full is not None:
                checks += 1
                exact_pair = (
                    full.coeff(pair_monomial(i, j)),
                    full.coeff(half_power_monomial(i, j, exponent)),
                )
                if exact_pair != (c_pair, c_half):
                    record(n, (i, j), "restriction", exact_pair, (c_pair, c_half))

            # Both divisibility claims
            checks += 2
            if c_pair % exponent.k:
                record(n, (i, j), "divisibility_pair", f"0 mod {exponent.k}", c_pair)
            if c_half % 2:
                record(n, (i, j), "divisibility_half", "0 mod 2", c_half)

            checks += 1
            closed = coeff_xixj_closed(f, exponent, i, j)
            if closed != c_pair:
                record(n, (i, j), "closed_form", closed, c_pair)

            if c_pair % exponent.k == 0:
                checks += 1
                predicted = intermediate_quotient_closed(f, exponent, i, j)
                if (c_pair // exponent.k) % 2 != predicted:
                    actual = (c_pair // exponent.k) % 2
                    record(n, (i, j), "intermediate_congruence", predicted, actual)

            if c_half % 2 == 0:
                checks += 1
                predicted = half_power_quotient_closed(f, exponent, i, j)
                if (c_half // 2) % 2 != predicted:
                    record(n, (i, j), "half_power_congruence", predicted, (c_half // 2) % 2)

            # Combined bit against (c(1) + 1) c(x_i) c(x_j)
            checks += 1
            c_i, c_j = f.coeff(Monomial.var(i)), f.coeff(Monomial.var(j))
            expected_bit = ((f.constant_term() + 1) * c_i * c_j) % 2
            try:
                actual_bit = phi_ij(g, exponent, i, j)
            except NotInSubringObstruction as e:
                record(n, (i, j), "congruence", expected_bit, f"obstruction: {e}")
                continue
            if actual_bit != expected_bit:
                record(n, (i, j), "congruence", expected_bit, actual_bit)

    return checks, failures


def verify_lemma(
    config: RunConfig, workers: int = 1, full_expansion: bool = False
) -> LemmaReport:
    """
    Check the power-coefficient lemma on random polynomials.

    For every trial a polynomial f in m variables (2 <= m <= max_vars) is drawn from the
    trial's own seed, and for every n and pair (i, j) the suite checks both divisibility
    claims, the closed form of the x_i*x_j coefficient, the congruence of each quotient,
    and the combined congruence phi_ij(f^(2^n)) = (c(1)+1) c(x_i) c(x_j) mod 2.

    Args:
        config: Run parameters (seed, trials, n_list, sizes)
        workers: Number of worker threads
        full_expansion: Also expand f^(2^n) in full and compare with the per-pair path

    Returns:
        LemmaReport with check and failure counts and the first counterexamples
    """
    logger.info(
        f"Verifying lemma: {config.trials} trials, n in {config.n_list}, seed {config.seed}"
    )

    def run(trial: int) -> TrialResult:
        rng = random.Random(config.trial_seed(trial))
        m = rng.randint(2, config.max_vars)
        f = random_polynomial(rng, m, config.max_degree, config.coeff_bound)
        return _check_trial(trial, f, config.n_list, full_expansion)

    results = ordered_map(run, range(config.trials), workers)

    report = LemmaReport(seed=config.seed, trials=config.trials, n_list=list(config.n_list))
    for checks, failures in results:
        report.checks += checks
        report.failures += len(failures)
        room = MAX_COUNTEREXAMPLES - len(report.counterexamples)
        report.counterexamples.extend(failures[: max(room, 0)])

    if report.failures:
        logger.error(f"Lemma verification found {report.failures} failures")
    else:
        logger.info(f"Lemma verification passed {report.checks} checks")
    return report


def verify_surjectivity(max_m: int, n_list: List[int]) -> List[str]:
    """
    phi((x_i' + x_j')^(2^n)) must be exactly the pair (i', j'), for every m <= max_m.

    Returns:
        Descriptions of the failures; empty when every witness behaves
    """
    failures = []
    for n in n_list:
        k = 2**n
        for m in range(2, max_m + 1):
            for i, j in iter_pairs(m):
                base = Polynomial.variable(i, m) + Polynomial.variable(j, m)
                pattern = phi(base.pow(k), n, m)
                expected = PatternMatrix.from_pairs(m, [(i, j)])
                if pattern != expected:
                    failures.append(f"n={n} m={m} pair=({i},{j}): got {pattern.set_bits()}")
    return failures

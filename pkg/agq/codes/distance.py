"""
Minimum-distance computation for linear codes over GF(q^2).

Three routines with different guarantees:

- :func:`min_distance_exhaustive` is exact; it enumerates either the message space
  or column supports of the parity-check matrix, whichever touches fewer operands.
- :func:`min_weight_upper` samples random information sets and returns the lightest
  codeword seen, a reproducible upper bound for a fixed seed.
- :func:`brouwer_zimmermann` enumerates low-weight messages on a chain of
  (nearly) disjoint information sets and certifies a lower bound.

A code of dimension 0 has distance :data:`INFINITY`, never 0.
"""

import itertools
import logging
import math
from dataclasses import dataclass

import galois
import numpy as np

from agq.field import new_field
from agq.runner import run_partitioned

from .linear import LinearCode, pivot_columns, row_reduce, weights

log = logging.getLogger(__name__)

INFINITY = math.inf
Distance = int | float

DEFAULT_BUDGET = 1 << 24
DEFAULT_TRIALS = 100
DEFAULT_SEED = 0

# Pairs of rows are combined in the random search only below this many words per trial.
PAIR_SEARCH_LIMIT = 1 << 16
# Elements materialized per vectorized block.
_BLOCK_ELEMENTS = 1 << 21


class DistanceBudgetExceeded(RuntimeError):
    """Raised when exact enumeration would exceed the configured budget."""


@dataclass(frozen=True)
class DistanceBounds:
    """
    Outcome of an information-set enumeration.

    ``level_bound`` is the bound every unseen codeword satisfies after the last
    completed level; ``upper`` is the lightest codeword seen.
    """

    lower: int
    upper: Distance
    level_bound: int
    level: int
    words_checked: int

    @property
    def exact(self) -> bool:
        return self.level_bound >= self.upper


@dataclass(frozen=True)
class DistanceReport:
    lower: Distance
    upper: Distance
    exact: Distance | None
    method: str
    work: int


# ----------------------------------------------------------------------
# Exhaustive enumeration
# ----------------------------------------------------------------------
def exhaustive_plan(code: LinearCode) -> tuple[str, int]:
    """
    Pick the cheaper exact method and return (method, number of items to enumerate).

    Messages cost q2^k codewords of n symbols; supports cost one rank test of an
    (n-k)×w submatrix per w-subset, for w up to the Singleton bound n-k+1.
    """
    n, k = code.n, code.k
    messages = code.field.q2**k
    redundancy = n - k
    supports = sum(math.comb(n, w) for w in range(1, redundancy + 2))
    message_operands = messages * max(k, 1) * n
    support_operands = sum(math.comb(n, w) * w * max(redundancy, 1) for w in range(1, redundancy + 2))
    if message_operands <= support_operands:
        return "messages", messages
    return "supports", supports


def _min_weight_in_range(e: int, gen: np.ndarray, lo: int, hi: int) -> int:
    """Lightest codeword among message indices [lo, hi), skipping the zero message."""
    field = new_field(e)
    k, n = gen.shape
    idx = np.arange(max(lo, 1), hi, dtype=np.int64)
    if idx.size == 0:
        return n + 1
    place = field.q2 ** np.arange(k, dtype=np.int64)
    digits = (idx[:, None] // place[None, :]) % field.q2
    words = field.gf(digits) @ field.gf(gen)
    return int(weights(words).min())


def _exhaust_messages(code: LinearCode, workers: int) -> int:
    total = code.field.q2**code.k
    chunk = max(1, _BLOCK_ELEMENTS // code.n)
    gen = code.gen.view(np.ndarray).astype(np.int64)
    tasks = [(code.field.e, gen, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    log.debug("Enumerating %d messages of %r in %d blocks", total, code, len(tasks))
    return min(run_partitioned(_min_weight_in_range, tasks, workers))


def _exhaust_supports(code: LinearCode) -> int:
    parity = code.dual().gen
    redundancy = parity.shape[0]
    for w in range(1, redundancy + 2):
        for support in itertools.combinations(range(code.n), w):
            if redundancy == 0 or np.linalg.matrix_rank(parity[:, list(support)]) < w:
                log.debug("%r: dependent columns %s", code, support)
                return w
    raise AssertionError("Singleton bound violated")  # pragma: no cover


def min_distance_exhaustive(
    code: LinearCode,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> Distance:
    """
    Exact minimum Hamming weight over all nonzero codewords.

    Raises:
        DistanceBudgetExceeded: the cheaper enumeration still exceeds ``budget``.
    """
    if code.k == 0:
        return INFINITY
    method, count = exhaustive_plan(code)
    if count > budget:
        raise DistanceBudgetExceeded(
            f"{code!r}: exact distance needs {count} {method}, budget is {budget}"
        )
    if method == "messages":
        return _exhaust_messages(code, workers)
    return _exhaust_supports(code)


# ----------------------------------------------------------------------
# Random information-set search (upper bound)
# ----------------------------------------------------------------------
def _min_combination_weight(gen: galois.FieldArray, q2: int, pairs: bool) -> int:
    best = int(weights(gen).min())
    if not pairs:
        return best
    gf = type(gen)
    scalars = gf(np.arange(1, q2))[:, None, None]
    for i in range(gen.shape[0] - 1):
        words = gen[i][None, None, :] + scalars * gen[i + 1 :][None, :, :]
        best = min(best, int(weights(words).min()))
    return best


def min_weight_upper(code: LinearCode, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED) -> Distance:
    """
    Weight of the lightest codeword found over ``trials`` random information sets.

    Each trial permutes the columns, re-reduces the generator and inspects its rows
    (and, for small codes, all combinations of two rows). Weights are invariant
    under column permutation, so no un-permuting is needed.
    """
    if code.k == 0:
        return INFINITY
    k, n, q2 = code.k, code.n, code.field.q2
    pairs = math.comb(k, 2) * (q2 - 1) <= PAIR_SEARCH_LIMIT
    rng = np.random.default_rng(seed)

    best = _min_combination_weight(code.gen, q2, pairs)
    for trial in range(trials):
        if best == 1:
            break
        perm = rng.permutation(n)
        reduced = row_reduce(code.field, code.gen[:, perm], n)
        found = _min_combination_weight(reduced, q2, pairs)
        if found < best:
            log.debug("%r: trial %d found weight %d", code, trial, found)
            best = found
    return best


# ----------------------------------------------------------------------
# Brouwer-Zimmermann enumeration (certified lower bound)
# ----------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class _InfoSet:
    gamma: galois.FieldArray  # systematic generator, identity on the information set
    rank: int  # columns not shared with earlier sets


def information_sets(code: LinearCode) -> list[_InfoSet]:
    """
    Greedy chain of information sets, each taking as many unused columns as the
    generator's rank on them allows. The first set is always full.
    """
    n, k = code.n, code.k
    gf = code.field.gf
    used: list[int] = []
    sets: list[_InfoSet] = []
    while len(used) < n:
        used_set = set(used)
        unused = [c for c in range(n) if c not in used_set]
        order = unused + used
        reduced = row_reduce(code.field, code.gen[:, order], n)
        fresh = [order[p] for p in pivot_columns(reduced) if p < len(unused)]
        if not fresh:
            break
        gamma = gf.Zeros((k, n))
        gamma[:, order] = reduced
        sets.append(_InfoSet(gamma=gamma, rank=len(fresh)))
        used.extend(fresh)
    log.debug("%r: information set ranks %s", code, [s.rank for s in sets])
    return sets


def _level_bound(sets: list[_InfoSet], k: int, w: int) -> int:
    return sum(max(0, w + 1 - (k - s.rank)) for s in sets)


def _level_cost(k: int, q2: int, w: int) -> int:
    return math.comb(k, w) * (q2 - 1) ** (w - 1)


def _min_weight_at_level(gamma: galois.FieldArray, q2: int, w: int) -> int:
    """Lightest combination of exactly w rows, leading coefficient normalized to 1."""
    gf = type(gamma)
    k, n = gamma.shape
    tails = list(itertools.product(range(1, q2), repeat=w - 1))
    coefs = gf(np.array([(1, *t) for t in tails], dtype=np.int64).reshape(len(tails), w))
    combos = np.array(list(itertools.combinations(range(k), w)), dtype=np.int64).reshape(-1, w)
    block = max(1, _BLOCK_ELEMENTS // (len(tails) * n))

    best = n + 1
    for start in range(0, len(combos), block):
        rows = combos[start : start + block]
        words = gf.Zeros((len(rows), len(tails), n))
        for t in range(w):
            words += gamma[rows[:, t]][:, None, :] * coefs[:, t][None, :, None]
        best = min(best, int(weights(words).min()))
    return best


def brouwer_zimmermann(code: LinearCode, w_max: int, budget: int = DEFAULT_BUDGET) -> DistanceBounds:
    """
    Enumerate combinations of up to ``w_max`` rows on each information set.

    After level w every codeword not yet seen has weight at least
    sum_j max(0, w + 1 - (k - rank_j)); the search stops early once that bound
    reaches the lightest word found, and stops before any level whose cost would
    push the total past ``budget``.
    """
    k, q2 = code.k, code.field.q2
    if k == 0:
        return DistanceBounds(lower=1, upper=INFINITY, level_bound=code.n + 1, level=0, words_checked=0)

    sets = information_sets(code)
    best: Distance = INFINITY
    checked = 0
    bound = _level_bound(sets, k, 0)
    level = 0
    for w in range(1, min(w_max, k) + 1):
        active = [s for s in sets if w + 1 - (k - s.rank) > 0]
        cost = len(active) * _level_cost(k, q2, w)
        if checked + cost > budget:
            log.warning(
                "%r: stopping information-set enumeration before level %d (%d words over budget %d)",
                code,
                w,
                checked + cost,
                budget,
            )
            break
        for s in active:
            best = min(best, _min_weight_at_level(s.gamma, q2, w))
        checked += cost
        level = w
        bound = _level_bound(sets, k, w)
        log.debug("%r: level %d, bound %d, best %s", code, w, bound, best)
        if bound >= best:
            break

    lower = max(1, int(min(best, bound)))
    return DistanceBounds(lower=lower, upper=best, level_bound=bound, level=level, words_checked=checked)


def min_distance_lower_isd(code: LinearCode, w_max: int, budget: int = DEFAULT_BUDGET) -> int:
    """Certified lower bound on the minimum distance from :func:`brouwer_zimmermann`."""
    return brouwer_zimmermann(code, w_max, budget).lower


# ----------------------------------------------------------------------
# Combined certificate
# ----------------------------------------------------------------------
def certify_distance(
    code: LinearCode,
    *,
    budget: int = DEFAULT_BUDGET,
    trials: int = DEFAULT_TRIALS,
    w_max: int = 2,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
) -> DistanceReport:
    """
    Exact distance when exhaustion fits the budget, otherwise information-set bounds.

    ``exact`` is set only with a certificate: a completed exhaustive enumeration,
    or a lower bound that meets the lightest codeword found.
    """
    if code.k == 0:
        return DistanceReport(lower=INFINITY, upper=INFINITY, exact=INFINITY, method="trivial", work=0)

    method, count = exhaustive_plan(code)
    if count <= budget:
        d = min_distance_exhaustive(code, budget=budget, workers=workers)
        return DistanceReport(lower=d, upper=d, exact=d, method=f"exhaustive-{method}", work=count)

    bz = brouwer_zimmermann(code, w_max, budget)
    upper = bz.upper
    if bz.level_bound < upper:
        upper = min(upper, min_weight_upper(code, trials=trials, seed=seed))
    lower = max(1, int(min(upper, bz.level_bound)))
    exact = upper if bz.level_bound >= upper else None
    return DistanceReport(lower=lower, upper=upper, exact=exact, method="information-sets", work=bz.words_checked)

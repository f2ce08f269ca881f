""" Monte Carlo probe: how often does a pattern fit into random pools? """
import collections
import logging
import math
import random

from ..exceptions import DomainError
from ..search import Outcome
from .pattern import find_copy

# Creates a ClickLogger
logger = logging.getLogger(__name__)

WILSON_Z = 1.96
DEFAULT_PROBE_ATTEMPTS = 2000


class ProbeReport(collections.namedtuple('ProbeReport', ['trials', 'successes', 'low', 'high'])):
    """ Success count of a probe and its 95% Wilson score interval. """

    @property
    def rate(self):
        return self.successes / self.trials

    def to_dict(self):
        return {"trials": self.trials, "successes": self.successes, "rate": self.rate,
                "wilson_low": self.low, "wilson_high": self.high}


def wilson_interval(successes, trials, z=WILSON_Z):
    """ Wilson score interval for a binomial proportion.

    >>> wilson_interval(0, 10)[0]
    0.0
    """
    if trials < 1:
        raise DomainError("at least one trial is required")
    phat = successes / trials
    denominator = 1 + z * z / trials
    centre = (phat + z * z / (2 * trials)) / denominator
    spread = z / denominator * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials))
    return max(0.0, centre - spread), min(1.0, centre + spread)


def probe_gadget_availability(g, p_random, pattern, forbidden_size, trials, seed=0,
                              attempts=DEFAULT_PROBE_ATTEMPTS):
    """ Samples p-random vertex and colour pools plus a random forbidden set
    and counts the trials in which find_copy succeeds.

    Every trial draws from its own generator seeded with "seed:trial", so a
    single trial can be replayed on its own.

    Returns:
        ProbeReport
    """
    if trials < 1:
        raise DomainError("at least one trial is required")
    if not 0 <= p_random <= 1:
        raise DomainError("p_random must lie in [0, 1], got {}".format(p_random))
    if not 0 <= forbidden_size <= g.order:
        raise DomainError("forbidden set size must lie in 0..{}".format(g.order))
    elements = g.elements()
    successes = 0
    for trial in range(trials):
        rng = random.Random("{}:{}".format(seed, trial))
        vertex_pool = {e for e in elements if rng.random() < p_random}
        color_pool = {e for e in elements if rng.random() < p_random}
        forbidden = set(rng.sample(elements, forbidden_size))
        result = find_copy(pattern, vertex_pool, color_pool, forbidden,
                           seed=rng.randrange(2 ** 32), attempts=attempts)
        if result.outcome is Outcome.FOUND:
            successes += 1
    low, high = wilson_interval(successes, trials)
    logger.debug("probe on %s: %d/%d successes", g, successes, trials)
    return ProbeReport(trials, successes, low, high)

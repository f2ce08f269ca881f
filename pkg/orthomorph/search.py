""" Search budgets and the outcome types shared by every solver """
import collections
import enum
import time

from .exceptions import BudgetExceededError


class Outcome(enum.Enum):
    """ Result of a budgeted search. The values double as exit codes. """
    FOUND = 0
    NONEXISTENT = 1
    UNKNOWN = 2

    @property
    def color(self):
        return {0: 'green', 1: 'red', 2: 'yellow'}[self.value]

    @property
    def label(self):
        return self.name.lower()


class Verdict(enum.Enum):
    """ Result of a verification. The values double as exit codes. """
    PASS = 0
    FAIL = 1
    UNKNOWN = 2

    @property
    def color(self):
        return {0: 'green', 1: 'red', 2: 'yellow'}[self.value]

    @property
    def label(self):
        return self.name.lower()


class SearchBudget(collections.namedtuple('SearchBudget', ['max_nodes', 'max_seconds'])):
    """ Node cap plus an optional wall-clock cap for a single search.

    A budget is an immutable description; call meter() to start counting.
    """

    DEFAULT_NODES = 10 ** 8

    def __new__(cls, max_nodes=DEFAULT_NODES, max_seconds=None):
        return super(SearchBudget, cls).__new__(cls, max_nodes, max_seconds)

    @classmethod
    def unlimited(cls):
        return cls(None, None)

    def meter(self):
        return BudgetMeter(self)


class BudgetMeter(object):
    """ Counts search nodes against a SearchBudget """

    # the clock is only consulted every CLOCK_MASK + 1 nodes
    CLOCK_MASK = 0x3ff

    def __init__(self, budget=None):
        self.budget = budget or SearchBudget()
        self.nodes = 0
        self._deadline = None
        if self.budget.max_seconds is not None:
            self._deadline = time.monotonic() + self.budget.max_seconds

    def tick(self, count=1):
        """ Records `count` new nodes.

        Raises:
            BudgetExceededError: if the node cap or the deadline is passed.
        """
        self.nodes += count
        max_nodes = self.budget.max_nodes
        if max_nodes is not None and self.nodes > max_nodes:
            raise BudgetExceededError(
                "node budget of {} exhausted".format(max_nodes), self.nodes)
        if self._deadline is not None and not (self.nodes & self.CLOCK_MASK):
            if time.monotonic() > self._deadline:
                raise BudgetExceededError(
                    "time budget of {}s exhausted".format(self.budget.max_seconds), self.nodes)


class SearchResult(collections.namedtuple('SearchResult', ['outcome', 'witness', 'nodes', 'reason'])):
    """ Outcome of a search together with its witness (when found). """

    @classmethod
    def found(cls, witness, nodes=0, reason=''):
        return cls(Outcome.FOUND, witness, nodes, reason)

    @classmethod
    def nonexistent(cls, nodes=0, reason='exhaustive search'):
        return cls(Outcome.NONEXISTENT, None, nodes, reason)

    @classmethod
    def unknown(cls, nodes=0, reason='budget exhausted'):
        return cls(Outcome.UNKNOWN, None, nodes, reason)

    @property
    def is_found(self):
        return self.outcome is Outcome.FOUND

    def to_dict(self):
        return {"outcome": self.outcome.label, "nodes": self.nodes, "reason": self.reason}


def run_search(budget, search, *args, **kwargs):
    """ Runs `search(*args, meter=..., **kwargs)` under a budget.

    The search function returns its witness, or None once it has covered
    the whole tree.

    Args:
        budget (SearchBudget): caps for this search; None means the default.
        search (callable): the backtracking routine.

    Returns:
        SearchResult: FOUND with the witness, NONEXISTENT after exhaustive
            search, or UNKNOWN if the budget ran out first.
    """
    meter = (budget or SearchBudget()).meter()
    try:
        witness = search(*args, meter=meter, **kwargs)
    except BudgetExceededError as e:
        return SearchResult.unknown(meter.nodes, str(e))
    if witness is None:
        return SearchResult.nonexistent(meter.nodes)
    return SearchResult.found(witness, meter.nodes)

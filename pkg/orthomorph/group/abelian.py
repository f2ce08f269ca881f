"""
Finite abelian groups written as products of cyclic factors.

Elements are coordinate vectors with one residue per factor and a canonical
mixed-radix index in [0, n); the first factor is the most significant digit.
Searches elsewhere in the package work on these integer indices through the
`*_index` helpers and only wrap them into Element objects at their borders.
"""
import functools
import operator
import re

from ..exceptions import DomainError
from ..exceptions import GroupMismatchError
from ..exceptions import GroupSpecError

# groups up to this order get a precomputed addition table
TABLE_LIMIT = 256

_FACTOR_RE = re.compile(r'^z(\d+)(?:\^(\d+))?$')


class GroupSpec(object):
    """ A finite abelian group Z_{n_1} x ... x Z_{n_r}.

    Factors are kept exactly as given (no invariant-factor normalisation)
    but stored in descending order, so two specs with the same multiset of
    factors are equal and agree on coordinates.

    >>> str(GroupSpec([2, 4]))
    'Z4xZ2'
    >>> GroupSpec.parse('z2^3').order
    8
    """

    def __init__(self, factors=()):
        factors = tuple(sorted((int(f) for f in factors), reverse=True))
        if any(f < 2 for f in factors):
            raise GroupSpecError("cyclic factors must have order at least 2: {}".format(factors))
        self._factors = factors
        self._order = functools.reduce(operator.mul, factors, 1)
        weights = []
        weight = 1
        for f in reversed(factors):
            weights.append(weight)
            weight *= f
        self._weights = tuple(reversed(weights))
        self._cyclic = len(factors) <= 1
        self._coords = None
        self._table = None

    @classmethod
    def parse(cls, text):
        """ Parses the group grammar: "Z7", "Z4xZ2", "Z2^3" (case-insensitive).

        Raises:
            GroupSpecError: if the text is not a product of cyclic factors.
        """
        if not isinstance(text, str) or not text.strip():
            raise GroupSpecError("empty group spec")
        factors = []
        for part in re.split(r'[x×*]', text.strip().lower().replace(' ', '')):
            match = _FACTOR_RE.match(part)
            if not match:
                raise GroupSpecError("cannot parse group spec '{}'".format(text))
            order = int(match.group(1))
            power = int(match.group(2) or 1)
            if order == 1:
                continue
            if order < 1 or power < 1:
                raise GroupSpecError("cannot parse group spec '{}'".format(text))
            factors.extend([order] * power)
        return cls(factors)

    @classmethod
    def cyclic(cls, n):
        return cls([n] if n > 1 else [])

    @property
    def factors(self):
        return self._factors

    @property
    def order(self):
        return self._order

    @property
    def is_cyclic_product(self):
        """ True when the group has at most one cyclic factor """
        return self._cyclic

    def __eq__(self, other):
        return isinstance(other, GroupSpec) and self._factors == other._factors

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(('GroupSpec', self._factors))

    def __str__(self):
        if not self._factors:
            return 'Z1'
        return 'x'.join('Z{}'.format(f) for f in self._factors)

    def __repr__(self):
        return 'GroupSpec({!r})'.format(str(self))

    def __len__(self):
        return self._order

    # --- element construction -------------------------------------------------

    @property
    def identity(self):
        return Element(self, 0)

    def element(self, value):
        """ Returns the element with the given index, or with the given coordinates.

        Args:
            value (int or tuple): canonical index, or one residue per factor.
        """
        if isinstance(value, Element):
            self.check_member(value)
            return value
        if isinstance(value, (tuple, list)):
            return Element(self, self.encode(value))
        index = int(value)
        if self._cyclic and self._order:
            return Element(self, index % self._order)
        if not 0 <= index < self._order:
            raise DomainError("index {} outside {}".format(index, self))
        return Element(self, index)

    def elements(self):
        """ All elements in canonical index order """
        return [Element(self, i) for i in range(self._order)]

    def check_member(self, element):
        if not isinstance(element, Element):
            raise DomainError("{!r} is not a group element".format(element))
        if element.group is not self and element.group != self:
            raise GroupMismatchError("{} does not belong to {}".format(element, self))

    # --- coordinates ----------------------------------------------------------

    def encode(self, coords):
        coords = tuple(coords)
        if len(coords) != len(self._factors):
            raise DomainError("{} needs {} coordinates, got {}".format(
                self, len(self._factors), len(coords)))
        return sum((c % f) * w for c, f, w in zip(coords, self._factors, self._weights))

    def coords(self, index):
        if self._coords is None:
            self._coords = [self._decode(i) for i in range(self._order)]
        return self._coords[index]

    def _decode(self, index):
        return tuple((index // w) % f for f, w in zip(self._factors, self._weights))

    # --- index arithmetic -----------------------------------------------------

    def _addition_table(self):
        if self._table is None:
            n = self._order
            coords = [self.coords(i) for i in range(n)]
            self._table = [[self._encode_sum(coords[a], coords[b]) for b in range(n)]
                           for a in range(n)]
        return self._table

    def _encode_sum(self, x, y):
        return sum(((a + b) % f) * w for a, b, f, w in zip(x, y, self._factors, self._weights))

    def add_index(self, a, b):
        if self._cyclic:
            return (a + b) % self._order if self._order > 1 else 0
        if self._order <= TABLE_LIMIT:
            return self._addition_table()[a][b]
        return self._encode_sum(self.coords(a), self.coords(b))

    def neg_index(self, a):
        if self._cyclic:
            return (-a) % self._order if self._order > 1 else 0
        return self.encode(tuple(-c for c in self.coords(a)))

    def sub_index(self, a, b):
        return self.add_index(a, self.neg_index(b))

    def mul_index(self, t, a):
        if self._cyclic:
            return (t * a) % self._order if self._order > 1 else 0
        return self.encode(tuple(t * c for c in self.coords(a)))

    def sum_indices(self, indices):
        total = 0
        for i in indices:
            total = self.add_index(total, i)
        return total


@functools.total_ordering
class Element(object):
    """ An element of a GroupSpec, ordered by canonical index.

    >>> g = GroupSpec.parse('Z5')
    >>> int(g.element(3) + g.element(4))
    2
    """

    __slots__ = ('group', 'index')

    def __init__(self, group, index):
        self.group = group
        self.index = index

    @property
    def coords(self):
        return self.group.coords(self.index)

    @property
    def is_identity(self):
        return self.index == 0

    def _other(self, other):
        if not isinstance(other, Element):
            raise DomainError("{!r} is not a group element".format(other))
        if other.group is not self.group and other.group != self.group:
            raise GroupMismatchError("cannot combine elements of {} and {}".format(
                self.group, other.group))
        return other.index

    def __add__(self, other):
        return Element(self.group, self.group.add_index(self.index, self._other(other)))

    def __sub__(self, other):
        return Element(self.group, self.group.sub_index(self.index, self._other(other)))

    def __neg__(self):
        return Element(self.group, self.group.neg_index(self.index))

    def __rmul__(self, t):
        if not isinstance(t, int):
            return NotImplemented
        return Element(self.group, self.group.mul_index(t, self.index))

    def __eq__(self, other):
        return (isinstance(other, Element) and self.index == other.index and
                (self.group is other.group or self.group == other.group))

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.index < self._other(other)

    def __hash__(self):
        return hash((self.group, self.index))

    def __int__(self):
        return self.index

    def __index__(self):
        return self.index

    def __str__(self):
        if self.group.is_cyclic_product:
            return str(self.index)
        return '({})'.format(','.join(str(c) for c in self.coords))

    def __repr__(self):
        return 'Element({}, {})'.format(self.group, self)


def add(a, b):
    return a + b


def neg(a):
    return -a


def scalar_mul(t, a):
    return int(t) * a


def unpack(elements, group=None):
    """ Converts an iterable of Elements into (group, sorted tuple of indices).

    Args:
        elements (iterable): Element objects of a single group.
        group (GroupSpec): required only when `elements` may be empty.

    Raises:
        DomainError: if the group cannot be determined.
        GroupMismatchError: if the elements come from different groups.
    """
    elements = list(elements)
    if group is None:
        if not elements:
            raise DomainError("cannot infer the group of an empty collection")
        group = elements[0].group
    for e in elements:
        group.check_member(e)
    return group, tuple(sorted(e.index for e in elements))

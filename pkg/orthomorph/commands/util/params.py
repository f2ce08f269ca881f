""" click parameter types for the orthomorph grammar """
import fractions

import click

from ...exceptions import DomainError
from ...group import GroupSpec
from ...solver import CycleType
from ...solver import EquationSystem


class GroupParamType(click.ParamType):
    """ "Z7", "Z4xZ2", "Z2^3" """
    name = 'group'

    def convert(self, value, param, ctx):
        if isinstance(value, GroupSpec):
            return value
        try:
            return GroupSpec.parse(value)
        except DomainError as e:
            self.fail(str(e), param, ctx)


class CycleTypeParamType(click.ParamType):
    """ "1+3^2" """
    name = 'cycle-type'

    def convert(self, value, param, ctx):
        if isinstance(value, CycleType):
            return value
        try:
            return CycleType.parse(value)
        except DomainError as e:
            self.fail(str(e), param, ctx)


class IntListParamType(click.ParamType):
    """ "3,3" or "1,-1,2" """
    name = 'ints'

    def convert(self, value, param, ctx):
        if isinstance(value, (list, tuple)):
            return list(value)
        try:
            return [int(tok) for tok in value.replace(' ', '').split(',') if tok]
        except ValueError:
            self.fail("'{}' is not a comma separated list of integers".format(value), param, ctx)


class MatrixParamType(click.ParamType):
    """ "1,-1,-1;1,1,-1,0" """
    name = 'matrix'

    def convert(self, value, param, ctx):
        if isinstance(value, EquationSystem):
            return value
        try:
            return EquationSystem.parse(value)
        except DomainError as e:
            self.fail(str(e), param, ctx)


class FractionParamType(click.ParamType):
    """ "1/2" or "0.5" """
    name = 'fraction'

    def convert(self, value, param, ctx):
        if isinstance(value, fractions.Fraction):
            return value
        try:
            return fractions.Fraction(value)
        except (ValueError, ZeroDivisionError):
            self.fail("'{}' is not a fraction".format(value), param, ctx)


GROUP = GroupParamType()
CYCLE_TYPE = CycleTypeParamType()
INT_LIST = IntListParamType()
MATRIX = MatrixParamType()
FRACTION = FractionParamType()


def to_elements(group, indices):
    """ Elements of `group` for a list of canonical indices.

    Raises:
        DomainError: if an index lies outside 0..n-1.
    """
    bad = [i for i in indices if not 0 <= i < group.order]
    if bad:
        raise DomainError("indices {} lie outside {}".format(bad, group))
    return [group.element(i) for i in indices]

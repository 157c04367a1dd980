#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Enumeration types for randomchannels

All enumerations are stored in this package

"""

## \package randomchannels.enums

from __future__ import absolute_import, print_function, unicode_literals
from enum import IntEnum

########################################


def _lookup_member(enum_type, value, aliases):
    """
    Shared lookup for the enumerations of this module.

    Args:
        enum_type: IntEnum class to search.
        value: A member, a member name, a readable name or an alias.
        aliases: dict of extra lower case names.
    Returns:
        A member of enum_type or None on failure.
    """

    # Already the right type?
    if isinstance(value, enum_type):
        return value

    if value:
        test_name = str(value).strip().lower().replace('-', '_')
        if test_name in enum_type.__members__:
            return enum_type[test_name]
        result = aliases.get(test_name, None)
        if result is not None:
            return result

        # Try the readable names
        for item in enum_type:
            if test_name == repr(item).lower():
                return item
    return None

########################################


def validate_enum_type(value, data_type):
    """
    Verify a value is a specific data type.

    Check if the value is either None or an instance of a
    specfic data type. If so, return immediately. If the value is a string,
    call the lookup() function of the data type for conversion.

    Args:
        value: Value to check.
        data_type: Type instance of the class type to match.

    Returns:
        Value converted to data_type or None.

    Exception:
        TypeError if lookup() failed.
    """

    if value is not None:
        # Perform the lookup
        new_value = data_type.lookup(value)
        if new_value is None:
            msg = '"{}" must be of type "{}".'.format(
                value, data_type.__name__)
            raise TypeError(msg)
        # Save the converted type
        value = new_value
    return value

########################################


class Tier(IntEnum):
    """
    Row of a labeled index of S_2p.

    Position i on the top row maps to index i-1, position i on the
    bottom row maps to index p+i-1.
    """

    ## Top row, carries A
    T = 0
    ## Bottom row, carries the adjoint of A
    B = 1

    @staticmethod
    def lookup(tier_name):
        """
        Look up a Tier based on name.

        Args:
            tier_name: 't', 'b', 'top' or 'bottom'.
        Returns:
            A @ref Tier member or None on failure.
        """

        if isinstance(tier_name, Tier):
            return tier_name
        if tier_name:
            test_name = str(tier_name).strip().upper()
            if test_name in ('T', 'TOP'):
                return Tier.T
            if test_name in ('B', 'BOTTOM'):
                return Tier.B
        return None

    def __repr__(self):
        """
        Single letter name of the tier.
        """
        return self.name

    ## Allow str() to work.
    __str__ = __repr__

########################################


class Pairing(IntEnum):
    """
    Enumeration of the way the second channel's unitary is paired with
    the first one.
    """

    ## U and its entrywise conjugate
    conjugate = 0
    ## U twice
    identical = 1
    ## U and its conjugate transpose
    star = 2
    ## U and its transpose
    transpose = 3

    @staticmethod
    def lookup(pairing_name):
        """
        Look up a Pairing based on name.

        Note:
            String comparisons are case insensitive.

        Args:
            pairing_name: Pairing string to test.
        Returns:
            A @ref Pairing member or None on failure.
        """
        return _lookup_member(Pairing, pairing_name, _PAIRING_ALIASES)

    def is_flat(self):
        """
        Return True if the limiting output spectrum is flat for Bell inputs.
        """
        return self is not Pairing.conjugate

    def __repr__(self):
        """
        Convert the enumeration into a human readable pairing description

        Returns:
            Human readable string or None if the enumeration is invalid
        See Also:
            randomchannels.enums._PAIRING_READABLE
        """

        return _PAIRING_READABLE.get(self, None)

    ## Allow str() to work.
    __str__ = __repr__


## Alternate names for pairings
_PAIRING_ALIASES = {
    'ubar': Pairing.conjugate,
    'conj': Pairing.conjugate,
    'uu': Pairing.identical,
    'same': Pairing.identical,
    'adjoint': Pairing.star,
    'dagger': Pairing.star,
    't': Pairing.transpose
}

## List of human readable strings
#
# Dictionary to map Pairing enumerations into an human readable string
#
# @sa randomchannels.enums.Pairing.__repr__()

_PAIRING_READABLE = {
    Pairing.conjugate: 'U x conj(U)',
    Pairing.identical: 'U x U',
    Pairing.star: 'U x U*',
    Pairing.transpose: 'U x U^T'
}

########################################


class InputTypes(IntEnum):
    """
    Enumeration of the input states fed to the product channel.
    """

    ## Maximally entangled state
    bell = 0
    ## Bell state with root of unity phases
    dephased = 1
    ## Arbitrary coefficient matrix A
    generalized = 2
    ## Bell pair on the inner registers, maximally mixed outer registers
    mixed_bell = 3
    ## |0>|0>
    product = 4
    ## Bell state on a diagonal block
    low_rank = 5
    ## Interpolation between Bell and dephased Bell with a chosen |m|
    tilted = 6

    @staticmethod
    def lookup(input_name):
        """
        Look up an InputTypes based on name.

        Args:
            input_name: Input string to test.
        Returns:
            A @ref InputTypes member or None on failure.
        """
        return _lookup_member(InputTypes, input_name, _INPUTTYPES_ALIASES)

    def is_pure(self):
        """
        Return True if the input is a pure state.
        """
        return self is not InputTypes.mixed_bell

    def __repr__(self):
        """
        Convert the enumeration into a human readable input description

        Returns:
            Human readable string or None if the enumeration is invalid
        """

        return _INPUTTYPES_READABLE.get(self, None)

    ## Allow str() to work.
    __str__ = __repr__


## Alternate names for inputs
_INPUTTYPES_ALIASES = {
    'dephasedbell': InputTypes.dephased,
    'dephased_bell': InputTypes.dephased,
    'mixed': InputTypes.mixed_bell,
    'mixedbell': InputTypes.mixed_bell,
    'lowrank': InputTypes.low_rank,
    'general': InputTypes.generalized
}

## List of human readable strings
_INPUTTYPES_READABLE = {
    InputTypes.bell: 'Bell',
    InputTypes.dephased: 'Dephased Bell',
    InputTypes.generalized: 'Generalized Bell',
    InputTypes.mixed_bell: 'Mixed Bell',
    InputTypes.product: 'Product',
    InputTypes.low_rank: 'Low rank Bell',
    InputTypes.tilted: 'Tilted Bell'
}

########################################


class OutputTypes(IntEnum):
    """
    Which side of the Stinespring dilation is kept.
    """

    ## Keep the environment, trace out the output
    complementary = 0
    ## Keep the output, trace out the environment
    direct = 1

    @staticmethod
    def lookup(output_name):
        """
        Look up an OutputTypes based on name.

        Args:
            output_name: Output string to test.
        Returns:
            A @ref OutputTypes member or None on failure.
        """
        return _lookup_member(OutputTypes, output_name, {
            'complementary_output': OutputTypes.complementary,
            'direct_output': OutputTypes.direct,
            'env': OutputTypes.complementary,
            'out': OutputTypes.direct})

    def __repr__(self):
        """
        Name used in reports.
        """
        return self.name + '_output'

    ## Allow str() to work.
    __str__ = __repr__

########################################


class MomentModels(IntEnum):
    """
    Models with an exact finite dimensional moment formula.
    """

    ## Conjugate pairing, generalized Bell input
    conjugate = 0
    ## Identical pairing, generalized Bell input
    identical = 1
    ## Mixed Bell input, output side kept
    mixed_direct = 2
    ## Mixed Bell input, environment side kept
    mixed_complementary = 3

    @staticmethod
    def lookup(model_name):
        """
        Look up a MomentModels based on name.

        Args:
            model_name: Model string to test.
        Returns:
            A @ref MomentModels member or None on failure.
        """
        return _lookup_member(MomentModels, model_name, {
            'mixeddirect': MomentModels.mixed_direct,
            'mixedcomplementary': MomentModels.mixed_complementary})

    def is_mixed(self):
        """
        Return True if the model uses the mixed Bell input.
        """
        return self in (MomentModels.mixed_direct,
                        MomentModels.mixed_complementary)

    def pairing(self):
        """
        Return the @ref Pairing simulated by this model.
        """
        if self is MomentModels.identical:
            return Pairing.identical
        return Pairing.conjugate

    def output_type(self):
        """
        Return the @ref OutputTypes simulated by this model.
        """
        if self is MomentModels.mixed_direct:
            return OutputTypes.direct
        return OutputTypes.complementary

    def __repr__(self):
        """
        Name used in reports.
        """
        return self.name

    ## Allow str() to work.
    __str__ = __repr__

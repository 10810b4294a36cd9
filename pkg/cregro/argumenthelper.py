"""Module containing the logic for validating public arguments."""

from cregro.exceptions import ArgumentError
from cregro.exceptions import ArgumentValidationError


def validate_argument_type(*args, **kwargs):
    """Validate function/method argument type.

    Parameters
    ----------
    args (tuple): list of data type
    kwargs (dict): list of argument that needs to valid their types

    Returns
    -------
    bool: True if arguments match their types.

    Raises
    ------
    ArgumentError: if `args` is empty or element of `args` is not class
    ArgumentValidationError: if a value does not match any type in `args`

    Example
    -------
        >>> from cregro.argumenthelper import validate_argument_type
        >>> validate_argument_type(int, characteristic=101)
        True
        >>> validate_argument_type(int, characteristic='101')
        Traceback (most recent call last):
          ...
        cregro.exceptions.ArgumentValidationError: characteristic argument must be a data type of int.
    """
    if not args:
        raise ArgumentError('Cannot validate argument with no reference data type.')
    if not all(isinstance(arg, type) for arg in args):
        raise ArgumentError('args must contain all classes.')

    type_name = ', '.join(arg.__name__ for arg in args)
    type_name = '({})'.format(type_name) if len(args) > 1 else type_name

    for name, obj in kwargs.items():
        if not isinstance(obj, args) or isinstance(obj, bool) and bool not in args:
            fmt = '{} argument must be a data type of {}.'
            raise ArgumentValidationError(fmt.format(name, type_name))
    return True


def validate_argument_choice(**kwargs):
    """Validate function/method argument choice.

    Parameters
    ----------
    kwargs (dict): each value is a pair (argument, choices).

    Returns
    -------
    bool: True if every argument belongs to its choices.

    Raises
    ------
    ArgumentError: if a value is not an (argument, choices) pair
    ArgumentValidationError: if argument is not belong to choices.

    Example
    -------
        >>> from cregro.argumenthelper import validate_argument_choice
        >>> validate_argument_choice(ring_order=('lex', ('lex', 'degrevlex')))
        True
    """
    for name, value in kwargs.items():
        try:
            argument, choices = value
        except (TypeError, ValueError):
            raise ArgumentError('Invalid argument for verifying validate_argument_choice')

        if not isinstance(choices, (list, tuple)) or not choices:
            raise ArgumentError('choices CAN NOT be empty.')

        if argument not in choices:
            fmt = '{} argument must be a choice of {}.'
            raise ArgumentValidationError(fmt.format(name, tuple(choices)))
    return True


"""Module containing the logic for utilities."""

import re
from functools import lru_cache
from math import comb

from cregro.argumenthelper import validate_argument_type


class Printer:
    """A printer class drawing a text box around report lines.

    Methods
    Printer.get(data, header='', footer='', width=80) -> str
    Printer.print(data, header='', footer='', width=80, print_func=None) -> None
    """
    @classmethod
    def get(cls, data, header='', footer='', width=80):
        """Decorate data by organizing header, data and footer.

        Parameters
        ----------
        data (str, list): a text or a list of text.
        header (str): a header text.  Default is empty.
        footer (str): a footer text.  Default is empty.
        width (int): width of displayed text.  Default is 80.

        Returns
        -------
        str: the boxed text.
        """
        validate_argument_type(int, width=width)
        headers = str(header).splitlines() if header else []
        footers = str(footer).splitlines() if footer else []
        data = data if isinstance(data, (list, tuple)) else [data]

        right_bound = max(width - 4, 16)
        pat = r'(.{%s,%s}\S) +' % (12, right_bound)
        lines = []
        for item in data:
            for line in str(item).splitlines():
                line = line.rstrip()
                if len(line) > right_bound:
                    lines.extend(re.sub(pat, r'\1\n', line).splitlines())
                else:
                    lines.append(line)

        length = max([len(line) for line in lines + headers + footers] + [0])
        border = '+-{}-+'.format('-' * length)
        result = [border]
        for block in (headers, lines, footers):
            if not block:
                continue
            result.extend('| {} |'.format(line.ljust(length)) for line in block)
            result.append(border)
        return '\n'.join(result)

    @classmethod
    def print(cls, data, header='', footer='', width=80, print_func=None):
        """Print the boxed text produced by ``Printer.get``.

        Parameters
        ----------
        data (str, list): a text or a list of text.
        header (str): a header text.  Default is empty.
        footer (str): a footer text.  Default is empty.
        width (int): width of displayed text.  Default is 80.
        print_func (function): a print function.  Default is None.
        """
        txt = cls.get(data, header=header, footer=footer, width=width)
        print_func = print_func if callable(print_func) else print
        print_func(txt)


@lru_cache(maxsize=None)
def exponents_of_degree(nvars, degree):
    """Return all exponent vectors of ``nvars`` variables and total ``degree``.

    Vectors are listed in lexicographic descending order, so the output
    is deterministic.

    Parameters
    ----------
    nvars (int): number of variables.
    degree (int): the total degree.

    Returns
    -------
    tuple: a tuple of exponent tuples.  Empty when ``degree`` is negative.
    """
    if degree < 0:
        return tuple()
    if nvars == 0:
        return ((),) if degree == 0 else tuple()
    if nvars == 1:
        return ((degree,),)
    result = []
    for first in range(degree, -1, -1):
        for rest in exponents_of_degree(nvars - 1, degree - first):
            result.append((first,) + rest)
    return tuple(result)


def count_monomials(nvars, degree):
    """Return the number of monomials of total ``degree`` in ``nvars`` variables."""
    if degree < 0:
        return 0
    if nvars == 0:
        return 1 if degree == 0 else 0
    return comb(degree + nvars - 1, nvars - 1)


def pad_degree(degree, size):
    """Return ``degree`` as a tuple of length ``size``.

    An integer becomes ``(degree, 0, ..., 0)``; a shorter tuple is padded
    with zeros.
    """
    if isinstance(degree, int):
        degree = (degree,)
    degree = tuple(degree)
    if len(degree) > size:
        raise ValueError('degree {} has more than {} entries'.format(degree, size))
    return degree + (0,) * (size - len(degree))


def add_degrees(first, second):
    """Return the entrywise sum of two degree tuples."""
    return tuple(a + b for a, b in zip(first, second))

"""Module containing the logic for creating cregro sessions."""

import yaml

from cregro.exceptions import ScriptSyntaxError
from cregro.parser import parse
from cregro.session import Session


def create_from_script_file(filename, **kwargs):
    """Create a session from a script file.

    Parameters
    ----------
    filename (str): a script file.
    kwargs (dict): keyword arguments for Session instantiation.

    Returns
    -------
    Session: a Session instance.
    """
    from io import IOBase
    if isinstance(filename, IOBase):
        data = filename.read()
    else:
        with open(filename) as stream:
            data = stream.read()
    return create_from_script_data(data, **kwargs)


def create_from_script_data(data, **kwargs):
    """Create a session from script text.

    Parameters
    ----------
    data (str): script text.
    kwargs (dict): keyword arguments for Session instantiation.

    Returns
    -------
    Session: a Session instance.
    """
    return Session(parse(str(data)), **kwargs)


def _join(values):
    if isinstance(values, (list, tuple)):
        return ','.join(str(value) for value in values)
    return str(values)


def render_yaml_session(obj):
    """Render a YAML session mapping as script text.

    The mapping holds ``ring`` (``QQ[x,y]``), optional ``free`` (shift
    list), optional ``weight`` (``omega`` and ``epsilon`` lists), optional
    ``modules`` (name to element list) and ``commands`` (command strings).

    Raises
    ------
    ScriptSyntaxError: if the mapping misses the ring or has unknown keys.
    """
    if not isinstance(obj, dict):
        raise ScriptSyntaxError('a YAML session must be a mapping', 1, 1)
    unknown = sorted(set(obj) - {'ring', 'free', 'weight', 'modules', 'commands'})
    if unknown:
        raise ScriptSyntaxError('unknown YAML keys: {}'.format(', '.join(unknown)), 1, 1,
                                ['commands', 'free', 'modules', 'ring', 'weight'])
    if 'ring' not in obj:
        raise ScriptSyntaxError('a YAML session needs a ring', 1, 1, ['ring'])

    lines = ['ring {}'.format(obj['ring'])]
    if obj.get('free') is not None:
        lines.append('free F=({})'.format(_join(obj['free'])))
    weight = obj.get('weight')
    if weight is not None:
        if not isinstance(weight, dict):
            raise ScriptSyntaxError('weight must map omega and epsilon', 1, 1, ['epsilon', 'omega'])
        lines.append('weight omega={} epsilon={}'.format(
            _join(weight.get('omega', [])), _join(weight.get('epsilon', [0]))))
    for name, elements in (obj.get('modules') or {}).items():
        if not isinstance(elements, (list, tuple)):
            elements = [elements]
        lines.append('let {}=[{}]'.format(name, ', '.join(str(e) for e in elements)))
    lines.extend(str(command) for command in obj.get('commands') or [])
    return '\n'.join(lines) + '\n'


def create_from_yaml_file(filename, loader=yaml.SafeLoader, **kwargs):
    """Create a session from a YAML file.

    Parameters
    ----------
    filename (str): a YAML file.
    loader (yaml.loader.Loader): a YAML loader.
    kwargs (dict): keyword arguments for Session instantiation.

    Returns
    -------
    Session: a Session instance.
    """
    with open(filename) as stream:
        obj = yaml.load(stream, Loader=loader)
        return Session(parse(render_yaml_session(obj)), **kwargs)


def create_from_yaml_data(data, loader=yaml.SafeLoader, **kwargs):
    """Create a session from YAML data.

    Parameters
    ----------
    data (str): a YAML data in string format.
    loader (yaml.loader.Loader): a YAML loader.
    kwargs (dict): keyword arguments for Session instantiation.

    Returns
    -------
    Session: a Session instance.
    """
    obj = yaml.load(data, Loader=loader)
    return Session(parse(render_yaml_session(obj)), **kwargs)

"""Top-level module for cregro.

This module

- builds a session from create_from_script_file, create_from_script_data,
  create_from_yaml_file or create_from_yaml_data and runs its commands
- or exposes the engine directly: Ring, FreeModule, WeightData, Submodule,
  initial modules by saturation and by the lifting-lemma algorithm, free
  resolutions, Betti tables, regularity and componentwise regularity.

A session script declares a ring, a graded free module, the weights
(omega, epsilon), named submodules and commands.  For example

    ring QQ[x,y]
    free F=(0)
    weight omega=1,0 epsilon=0
    let I=[x^2+y^2, x*y]
    inw I

prints ``inw = [x^2, x*y, y^3]``.

Snippet 1: the initial module of a complete intersection

>>> from cregro import Ring, FreeModule, WeightData, Submodule
>>> from cregro import initial_module_sat
>>> from cregro.parser import parse_element
>>> module = FreeModule(Ring(['x', 'y']))
>>> ideal = Submodule(module, [parse_element(text, module) for text in ['x^2+y^2', 'x*y']])
>>> initial = initial_module_sat(ideal, WeightData((1, 0)))
>>> [g.to_text() for g in initial.groebner_basis()]
['x^2', 'x*y', 'y^3']

Snippet 2: componentwise regularity of (x^2, y^3)

>>> from cregro import creg_profile
>>> ideal = Submodule(module, [parse_element(text, module) for text in ['x^2', 'y^3']])
>>> creg_profile(ideal)
{2: 0, 3: 1}

Snippet 3: running a script

>>> from cregro import create_from_script_data
>>> session = create_from_script_data('ring QQ[x,y] let m=[x, y] reg m')
>>> session.run(print_func=lambda text: None)
0
"""

from cregro.polynomial import CoefficientField      # noqa
from cregro.polynomial import Ring                  # noqa
from cregro.polynomial import FreeModule            # noqa
from cregro.polynomial import WeightData            # noqa
from cregro.polynomial import ModuleElement         # noqa
from cregro.groebner import Submodule               # noqa
from cregro.initial import initial_module_sat       # noqa
from cregro.initial import weight_buchberger        # noqa
from cregro.resolution import Quotient              # noqa
from cregro.resolution import free_resolution       # noqa
from cregro.resolution import regularity            # noqa
from cregro.resolution import creg                  # noqa
from cregro.resolution import creg_profile          # noqa
from cregro.session import Session                  # noqa
from cregro.factory import create_from_script_file  # noqa
from cregro.factory import create_from_script_data  # noqa
from cregro.factory import create_from_yaml_file    # noqa
from cregro.factory import create_from_yaml_data    # noqa

from cregro.config import version
from cregro.config import edition

__version__ = version
__edition__ = edition

__all__ = [
    'CoefficientField',
    'FreeModule',
    'ModuleElement',
    'Quotient',
    'Ring',
    'Session',
    'Submodule',
    'WeightData',
    'create_from_script_data',
    'create_from_script_file',
    'create_from_yaml_data',
    'create_from_yaml_file',
    'creg',
    'creg_profile',
    'free_resolution',
    'initial_module_sat',
    'regularity',
    'weight_buchberger',
    'version',
    'edition'
]

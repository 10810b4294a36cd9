"""Module containing the logic for the session script language: a regex
lexer, a recursive-descent parser and the semantic pass binding names."""

import re
import logging
from collections import namedtuple
from dataclasses import dataclass
from dataclasses import field

from cregro.config import Data
from cregro.exceptions import CregroError
from cregro.exceptions import ScriptSyntaxError
from cregro.exceptions import ScriptSemanticError
from cregro.polynomial import CoefficientField
from cregro.polynomial import FreeModule
from cregro.polynomial import ModuleMonomial
from cregro.polynomial import ModuleElement
from cregro.polynomial import Ring
from cregro.polynomial import WeightData
from cregro.groebner import Submodule


logger = logging.getLogger(__file__)

Token = namedtuple('Token', ['kind', 'value', 'line', 'column'])

TOKEN_PATTERN = re.compile(r'''
    (?P<COMMENT>\#[^\n]*)
  | (?P<NEWLINE>\n)
  | (?P<SPACE>[ \t\r]+)
  | (?P<OPTION>--[A-Za-z][A-Za-z0-9_-]*)
  | (?P<INT>\d+)
  | (?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<OP>[\[\](),=+\-*/^])
  | (?P<ERROR>.)
''', re.VERBOSE)

BASIS_PATTERN = re.compile(r'e(\d+)$')

MODULE_COMMANDS = ('inw', 'gb', 'betti', 'reg', 'creg', 'ld')
COMMANDS = MODULE_COMMANDS + ('truncate', 'syz', 'check')
KEYWORDS = ('ring', 'free', 'weight', 'let') + COMMANDS
CHECK_OPTIONS = ('--seed', '--budget')


def tokenize(text):
    """Split script text into tokens; the last token has kind END.

    Raises
    ------
    ScriptSyntaxError: on a character outside the language.
    """
    tokens = []
    line, start = 1, 0
    for match in TOKEN_PATTERN.finditer(text):
        kind, value = match.lastgroup, match.group()
        column = match.start() - start + 1
        if kind == 'NEWLINE':
            line, start = line + 1, match.end()
        elif kind == 'ERROR':
            raise ScriptSyntaxError('unexpected character {!r}'.format(value), line, column)
        elif kind not in ('SPACE', 'COMMENT'):
            tokens.append(Token(kind, value, line, column))
    tokens.append(Token('END', '', line, len(text) - start + 1))
    return tokens


@dataclass(frozen=True)
class Position:
    line: int
    column: int


@dataclass(frozen=True)
class RingDecl:
    characteristic: int
    names: tuple
    position: Position = field(default=None, compare=False)

    def to_text(self):
        name = 'QQ' if self.characteristic == 0 else 'GF({})'.format(self.characteristic)
        return 'ring {}[{}]'.format(name, ','.join(self.names))


@dataclass(frozen=True)
class FreeDecl:
    shifts: tuple
    position: Position = field(default=None, compare=False)

    def to_text(self):
        return 'free F=({})'.format(','.join(map(str, self.shifts)))


@dataclass(frozen=True)
class WeightDecl:
    omega: tuple
    epsilon: tuple
    position: Position = field(default=None, compare=False)

    def to_text(self):
        return 'weight omega={} epsilon={}'.format(','.join(map(str, self.omega)),
                                                  ','.join(map(str, self.epsilon)))


@dataclass(frozen=True)
class Term:
    """A signed term: numerator/denominator and (name, exponent) factors."""
    numerator: int
    denominator: int
    factors: tuple

    def to_text(self):
        body = '*'.join(name if power == 1 else '{}^{}'.format(name, power)
                        for name, power in self.factors)
        scalar = abs(self.numerator)
        scalar = str(scalar) if self.denominator == 1 else '{}/{}'.format(scalar, self.denominator)
        if not body:
            return scalar
        if scalar == '1':
            return body
        return '{}*{}'.format(scalar, body)


@dataclass(frozen=True)
class ElementExpr:
    terms: tuple
    position: Position = field(default=None, compare=False)

    def to_text(self):
        pieces = []
        for index, term in enumerate(self.terms):
            sign = '-' if term.numerator < 0 else ('+' if index else '')
            pieces.append(sign + term.to_text())
        return ''.join(pieces)


@dataclass(frozen=True)
class LetDecl:
    name: str
    elements: tuple
    position: Position = field(default=None, compare=False)

    def to_text(self):
        return 'let {}=[{}]'.format(self.name, ', '.join(e.to_text() for e in self.elements))


@dataclass(frozen=True)
class Command:
    """A command; ``check`` carries the check name, the others a target."""
    name: str
    target: str = None
    argument: int = None
    check: str = None
    seed: int = None
    budget: int = None
    position: Position = field(default=None, compare=False)

    def to_text(self):
        words = [self.name]
        if self.check is not None:
            words.append(self.check)
        if self.target is not None:
            words.append(self.target)
        if self.argument is not None:
            words.append(str(self.argument))
        if self.seed is not None:
            words.extend(['--seed', str(self.seed)])
        if self.budget is not None:
            words.extend(['--budget', str(self.budget)])
        return ' '.join(words)


@dataclass(frozen=True)
class SessionScript:
    statements: tuple

    @property
    def commands(self):
        return [s for s in self.statements if isinstance(s, Command)]

    def to_text(self):
        return '\n'.join(statement.to_text() for statement in self.statements) + '\n'


class Parser:
    """Recursive-descent parser over the token list of one script.

    Methods
    -------
    parse_script() -> SessionScript
    parse_element() -> ElementExpr
    """
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def position(self, token=None):
        token = token or self.current
        return Position(token.line, token.column)

    def error(self, message, expected=(), token=None):
        token = token or self.current
        return ScriptSyntaxError(message, token.line, token.column, expected)

    def describe(self, token):
        return 'end of input' if token.kind == 'END' else repr(token.value)

    def peek(self, *values, kind=None):
        token = self.current
        if kind is not None and token.kind != kind:
            return False
        return not values or token.value in values and token.kind in ('OP', 'IDENT', 'OPTION')

    def advance(self):
        token = self.current
        if token.kind != 'END':
            self.index += 1
        return token

    def expect(self, value):
        if not self.peek(value):
            raise self.error('unexpected {}'.format(self.describe(self.current)), [value])
        return self.advance()

    def expect_kind(self, kind, label):
        if self.current.kind != kind:
            raise self.error('unexpected {}'.format(self.describe(self.current)), [label])
        return self.advance()

    def integer(self, signed=False):
        negative = False
        if signed and self.peek('-', kind='OP'):
            self.advance()
            negative = True
        value = int(self.expect_kind('INT', 'integer').value)
        return -value if negative else value

    def integers(self, signed=False):
        values = [self.integer(signed)]
        while self.peek(',', kind='OP'):
            self.advance()
            values.append(self.integer(signed))
        return tuple(values)

    def identifier(self):
        return self.expect_kind('IDENT', 'identifier').value

    def parse_script(self):
        statements = []
        while self.current.kind != 'END':
            statements.append(self.parse_statement())
        return SessionScript(tuple(statements))

    def parse_statement(self):
        token = self.current
        if token.kind != 'IDENT' or token.value not in KEYWORDS:
            raise self.error('unexpected {}'.format(self.describe(token)), KEYWORDS)
        handler = getattr(self, 'parse_{}'.format(token.value), None)
        if handler is None:
            return self.parse_command()
        return handler()

    def parse_ring(self):
        self.advance()
        token = self.current
        if self.peek('QQ', kind='IDENT'):
            self.advance()
            characteristic = 0
        elif self.peek('GF', kind='IDENT'):
            self.advance()
            self.expect('(')
            characteristic = self.integer()
            self.expect(')')
        else:
            raise self.error('unexpected {}'.format(self.describe(token)), ['QQ', 'GF'])
        self.expect('[')
        names = [self.identifier()]
        while self.peek(',', kind='OP'):
            self.advance()
            names.append(self.identifier())
        self.expect(']')
        return RingDecl(characteristic, tuple(names), position=Position(token.line, token.column))

    def parse_free(self):
        position = self.position()
        self.advance()
        self.expect('F')
        self.expect('=')
        self.expect('(')
        shifts = self.integers(signed=True)
        self.expect(')')
        return FreeDecl(shifts, position=position)

    def parse_weight(self):
        position = self.position()
        self.advance()
        self.expect('omega')
        self.expect('=')
        omega = self.integers()
        self.expect('epsilon')
        self.expect('=')
        epsilon = self.integers()
        return WeightDecl(omega, epsilon, position=position)

    def parse_let(self):
        self.advance()
        token = self.current
        name = self.identifier()
        if name in KEYWORDS:
            raise self.error('keyword {!r} cannot name a module'.format(name), ['identifier'], token)
        self.expect('=')
        self.expect('[')
        elements = [self.parse_element()]
        while self.peek(',', kind='OP'):
            self.advance()
            elements.append(self.parse_element())
        self.expect(']')
        return LetDecl(name, tuple(elements), position=Position(token.line, token.column))

    def parse_element(self):
        position = self.position()
        sign = 1
        if self.peek('+', '-', kind='OP'):
            sign = -1 if self.advance().value == '-' else 1
        terms = [self.parse_term(sign)]
        while self.peek('+', '-', kind='OP'):
            sign = -1 if self.advance().value == '-' else 1
            terms.append(self.parse_term(sign))
        return ElementExpr(tuple(terms), position=position)

    def parse_term(self, sign):
        numerator, denominator, factors = 1, 1, []
        if self.current.kind == 'INT':
            numerator = int(self.advance().value)
            if self.peek('/', kind='OP'):
                self.advance()
                token = self.current
                denominator = int(self.expect_kind('INT', 'integer').value)
                if not denominator:
                    raise ScriptSemanticError('division by zero', token.line, token.column)
            if not self.peek('*', kind='OP'):
                return Term(sign * numerator, denominator, ())
            self.advance()
        factors.append(self.parse_factor())
        while self.peek('*', kind='OP'):
            self.advance()
            factors.append(self.parse_factor())
        return Term(sign * numerator, denominator, tuple(factors))

    def parse_factor(self):
        token = self.current
        if token.kind != 'IDENT':
            raise self.error('unexpected {}'.format(self.describe(token)), ['identifier'])
        self.advance()
        power = 1
        if self.peek('^', kind='OP'):
            self.advance()
            power = self.integer()
        return token.value, power

    def parse_command(self):
        token = self.advance()
        position = Position(token.line, token.column)
        name = token.value
        if name == 'check':
            return self.parse_check_command(position)
        target = self.parse_target()
        argument = None
        if name == 'truncate':
            argument = self.integer()
        elif name == 'syz' and self.current.kind == 'INT':
            argument = self.integer()
        return Command(name, target=target, argument=argument, position=position)

    def parse_target(self):
        token = self.current
        if token.kind != 'IDENT' or token.value in KEYWORDS:
            raise self.error('unexpected {}'.format(self.describe(token)), ['module name'])
        return self.advance().value

    def parse_check_command(self, position):
        token = self.current
        if token.kind != 'IDENT' or token.value not in Data.check_names:
            raise self.error('unexpected {}'.format(self.describe(token)), Data.check_names)
        check = self.advance().value
        target = argument = None
        if self.current.kind == 'IDENT' and self.current.value not in KEYWORDS:
            target = self.advance().value
        if self.current.kind == 'INT':
            argument = self.integer()
        options = {}
        while self.current.kind == 'OPTION':
            token = self.current
            if token.value not in CHECK_OPTIONS or token.value in options:
                expected = [o for o in CHECK_OPTIONS if o not in options]
                raise self.error('unexpected option {!r}'.format(token.value), expected)
            self.advance()
            options[token.value] = self.integer()
        return Command('check', target=target, argument=argument, check=check,
                       seed=options.get('--seed'), budget=options.get('--budget'),
                       position=position)


def parse(text):
    """Parse script text into a SessionScript.

    Raises
    ------
    ScriptSyntaxError: on a lexical or syntactic error.
    """
    return Parser(text).parse_script()


def build_element(expression, module):
    """Return the ModuleElement of ``module`` denoted by an ElementExpr.

    Raises
    ------
    ScriptSemanticError: on unknown names, a missing or out-of-range basis
        element, or a coefficient the field cannot represent.
    """
    ring = module.ring
    position = expression.position or Position(0, 0)

    def fail(message):
        return ScriptSemanticError(message, position.line, position.column)

    coefficients = {}
    for term in expression.terms:
        exponents = [0] * ring.nvars
        component = None
        for name, power in term.factors:
            match = BASIS_PATTERN.match(name)
            if match:
                index = int(match.group(1))
                if component is not None or power != 1:
                    raise fail('a term holds exactly one basis element')
                if not 1 <= index <= module.rank:
                    raise fail('basis element {} outside rank {}'.format(name, module.rank))
                component = index - 1
            elif name in ring.names:
                exponents[ring.names.index(name)] += power
            else:
                raise fail('unknown variable {!r}'.format(name))
        if any(e > Data.max_exponent for e in exponents):
            raise fail('exponent overflow')
        if component is None:
            if module.rank != 1:
                raise fail('terms need a basis element e1..e{} in rank {}'.format(module.rank, module.rank))
            component = 0
        try:
            value = ring.field(term.numerator, term.denominator)
        except CregroError as ex:
            raise fail(str(ex))
        monomial = ModuleMonomial(tuple(exponents), component)
        total = coefficients.get(monomial, ring.field.zero) + value
        coefficients[monomial] = total
    return ModuleElement(module, coefficients)


def parse_element(text, module):
    """Parse one element of ``module`` from text like ``3*x^2*y*e1 - x*e2``."""
    parser = Parser(text)
    expression = parser.parse_element()
    if parser.current.kind != 'END':
        raise parser.error('unexpected {}'.format(parser.describe(parser.current)), ['+', '-'])
    return build_element(expression, module)


class BoundCommand:
    """A command with the session state it runs against.

    Attributes
    ----------
    command (Command): the parsed command.
    submodule (Submodule): the named submodule, None for sweeps.
    weight (WeightData): the session weights, validated for the submodule.
    """
    def __init__(self, command, submodule=None, weight=None):
        self.command = command
        self.submodule = submodule
        self.weight = weight

    def __repr__(self):
        return 'BoundCommand({})'.format(self.command.to_text())


def analyze(script):
    """Resolve declarations in order and bind every command.

    Defaults: ``free F=(0)`` and zero weights until declared.

    Returns
    -------
    list: BoundCommand objects in script order.

    Raises
    ------
    ScriptSemanticError: on non-prime fields, undeclared names, rank or
        length mismatches and inhomogeneous generators.
    """
    ring = module = weight = None
    modules, bound = {}, []

    def fail(message, node):
        position = node.position or Position(0, 0)
        return ScriptSemanticError(message, position.line, position.column)

    for statement in script.statements:
        if isinstance(statement, RingDecl):
            try:
                field_ = CoefficientField(statement.characteristic)
                ring = Ring(statement.names, field_)
            except CregroError as ex:
                raise fail(str(ex), statement)
            module = FreeModule(ring, (0,))
            weight = WeightData((0,) * ring.nvars)
        elif ring is None:
            raise fail('no ring declared', statement)
        elif isinstance(statement, FreeDecl):
            try:
                module = FreeModule(ring, statement.shifts)
            except CregroError as ex:
                raise fail(str(ex), statement)
            weight = WeightData(weight.omega, ())
        elif isinstance(statement, WeightDecl):
            try:
                weight = WeightData(statement.omega, statement.epsilon).for_module(module)
            except CregroError as ex:
                raise fail(str(ex), statement)
        elif isinstance(statement, LetDecl):
            generators = []
            for expression in statement.elements:
                element = build_element(expression, module)
                if not element.is_homogeneous:
                    raise fail('generator not homogeneous: {}'.format(element.to_text()), expression)
                generators.append(element)
            modules[statement.name] = Submodule(module, generators)
        else:
            bound.append(_bind(statement, modules, weight, fail))
    logger.debug('analyze: %d commands bound', len(bound))
    return bound


def _bind(command, modules, weight, fail):
    submodule = None
    if command.target is not None:
        if command.target not in modules:
            raise fail('undeclared module {!r}'.format(command.target), command)
        submodule = modules[command.target]
        try:
            weight = weight.for_module(submodule.ambient)
        except CregroError as ex:
            raise fail(str(ex), command)
    if command.name == 'check':
        if command.argument is not None and command.check not in Data.indexed_checks:
            raise fail('check {} takes no index'.format(command.check), command)
        if command.check == 'sameb' and command.argument not in (None, 0, 1):
            raise fail('check sameb level must be 0 or 1', command)
        if submodule is not None and (command.seed is not None or command.budget is not None):
            raise fail('--seed and --budget apply to sweeps only', command)
    return BoundCommand(command, submodule, weight)

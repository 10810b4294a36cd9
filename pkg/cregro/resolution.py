"""Module containing the logic for minimal free resolutions, Betti tables,
Hilbert functions, regularity, truncations, componentwise regularity,
syzygy modules and the linear defect."""

import logging
from collections import defaultdict
from itertools import combinations

from sympy.polys.matrices import DomainMatrix
from sympy.polys.monomials import monomial_divides
from sympy.polys.monomials import monomial_lcm

from cregro.config import Data
from cregro.argumenthelper import validate_argument_type
from cregro.polynomial import FreeModule
from cregro.polynomial import ModuleElement
from cregro.polynomial import evaluate_t
from cregro.polynomial import linear_combination
from cregro.groebner import Submodule
from cregro.groebner import minimal_generators
from cregro.groebner import syzygies
from cregro.utils import count_monomials
from cregro.utils import exponents_of_degree
from cregro.exceptions import ResolutionError
from cregro.exceptions import ZeroModuleError


logger = logging.getLogger(__file__)


class Quotient:
    """The quotient F/M of a free module by a submodule."""
    def __init__(self, relations):
        validate_argument_type(Submodule, relations=relations)
        self.relations = relations

    def __repr__(self):
        return 'Quotient({})'.format(self.to_text())

    def __eq__(self, other):
        return isinstance(other, Quotient) and other.relations == self.relations

    def __hash__(self):
        return hash(('quotient', self.relations))

    @property
    def ambient(self):
        return self.relations.ambient

    @property
    def ring(self):
        return self.relations.ring

    @property
    def is_zero(self):
        return all(self.relations.contains(self.ambient.basis_element(j))
                   for j in range(self.ambient.rank))

    def to_text(self):
        return 'F/{}'.format(self.relations.to_text())


class BettiTable:
    """Graded Betti numbers beta_{i,j}: i homological, j internal degree.

    Methods
    -------
    regularity() -> int
    dominated_by(other) -> bool
    consecutive_cancellations(smaller) -> list or None
    to_text() -> str
    to_dict() -> dict
    """
    def __init__(self, entries=None):
        self.entries = {
            (int(i), int(j)): int(value)
            for (i, j), value in (entries or {}).items() if value
        }
        for key, value in self.entries.items():
            if value < 0:
                raise ResolutionError('negative Betti number at {}'.format(key))

    def __eq__(self, other):
        return isinstance(other, BettiTable) and other.entries == self.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def __repr__(self):
        return 'BettiTable({})'.format(sorted(self.entries.items()))

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    @classmethod
    def from_resolution(cls, resolution):
        entries = defaultdict(int)
        for index, module in enumerate(resolution.modules):
            for shift in module.shifts:
                entries[(index, shift[0])] += 1
        return cls(entries)

    @classmethod
    def from_dict(cls, data):
        return cls({(i, j): value for i, j, value in data['betti']})

    @property
    def is_zero(self):
        return not self.entries

    @property
    def length(self):
        return max((i for i, _ in self.entries), default=-1)

    def total(self, index):
        return sum(value for (i, _), value in self.entries.items() if i == index)

    def totals(self):
        return [self.total(index) for index in range(self.length + 1)]

    def degrees(self, index):
        """Return the sorted internal degrees j with beta_{index,j} != 0."""
        return sorted(j for i, j in self.entries if i == index)

    def regularity(self):
        if not self.entries:
            raise ZeroModuleError('regularity of the zero module is undefined')
        return max(j - i for i, j in self.entries)

    def shifted(self, offset):
        """Return the table with homological indices moved by ``offset``."""
        return BettiTable({(i + offset, j): v for (i, j), v in self.entries.items()})

    def violations(self, other):
        """Return the positions where this table exceeds ``other``."""
        keys = sorted(set(self.entries) | set(other.entries))
        return [key for key in keys if self[key] > other[key]]

    def dominated_by(self, other):
        return not self.violations(other)

    def consecutive_cancellations(self, smaller):
        """Return the cancellations turning this table into ``smaller``.

        For each internal degree j the number c_i of cancelled pairs
        (beta_{i,j}, beta_{i+1,j}) is forced: c_0 = d_0 and
        c_i = d_i - c_{i-1}, where d is the entrywise difference.  The
        reduction is feasible iff every c_i >= 0 and the last is zero.

        Returns
        -------
        list: ((i, j), (i + 1, j), count) triples, or None when infeasible.
        """
        keys = set(self.entries) | set(smaller.entries)
        if any(self[key] < smaller[key] for key in keys):
            return None
        top = max((i for i, _ in keys), default=-1)
        result = []
        for degree in sorted({j for _, j in keys}):
            carried = 0
            for index in range(top + 1):
                count = self[(index, degree)] - smaller[(index, degree)] - carried
                if count < 0:
                    return None
                if count and index == top:
                    return None
                if count:
                    result.append(((index, degree), (index + 1, degree), count))
                carried = count
        return result

    def to_text(self):
        """Render the table in the triangular layout: columns i, rows j - i."""
        if not self.entries:
            return '       0\ntotal: 0'
        top = self.length
        rows = sorted({j - i for i, j in self.entries})
        cells = {
            row: [self[(i, row + i)] for i in range(top + 1)] for row in range(rows[0], rows[-1] + 1)
        }
        totals = self.totals()
        widths = []
        for index in range(top + 1):
            candidates = [str(index), str(totals[index])] + [str(cells[row][index]) for row in cells]
            widths.append(max(len(text) for text in candidates))
        label = max([len('total:')] + [len('{}:'.format(row)) for row in cells])

        def render(name, values):
            texts = [('.' if value == 0 else str(value)).rjust(width)
                     for value, width in zip(values, widths)]
            return name.rjust(label) + ''.join(' ' + text for text in texts)

        lines = [' ' * label + ''.join(' ' + str(i).rjust(w) for i, w in enumerate(widths))]
        lines.append('total:'.rjust(label) + ''.join(
            ' ' + str(value).rjust(width) for value, width in zip(totals, widths)))
        for row in sorted(cells):
            lines.append(render('{}:'.format(row), cells[row]))
        return '\n'.join(lines)

    def to_dict(self):
        return {'betti': [[i, j, value] for (i, j), value in sorted(self.entries.items())]}


class FreeResolution:
    """A graded free complex F_0 <- F_1 <- ... <- F_l.

    Attributes
    ----------
    modules (tuple): the free modules F_0, ..., F_l.
    maps (tuple): maps[i] lists the images of the basis of F_{i+1} in F_i,
        so maps[i] is the differential d_{i+1}.
    target (Submodule, Quotient): the resolved object, if known.
    augmentation (tuple): images of the basis of F_0 when the target is a submodule.
    """
    def __init__(self, modules, maps, target=None, augmentation=()):
        self.modules = tuple(modules)
        self.maps = tuple(tuple(columns) for columns in maps)
        self.target = target
        self.augmentation = tuple(augmentation)
        if len(self.maps) != max(len(self.modules) - 1, 0):
            raise ResolutionError('a complex with {} modules needs {} maps'.format(
                len(self.modules), max(len(self.modules) - 1, 0)))
        for index, columns in enumerate(self.maps):
            if len(columns) != self.modules[index + 1].rank:
                raise ResolutionError('d_{} has {} columns but F_{} has rank {}'.format(
                    index + 1, len(columns), index + 1, self.modules[index + 1].rank))
            for column in columns:
                if column.module != self.modules[index]:
                    raise ResolutionError('a column of d_{} is not in F_{}'.format(index + 1, index))

    def __repr__(self):
        return 'FreeResolution(ranks={})'.format([m.rank for m in self.modules])

    @property
    def length(self):
        return len(self.modules) - 1

    @property
    def ring(self):
        return self.modules[0].ring if self.modules else None

    def differential(self, index):
        """Return the columns of d_index : F_index -> F_{index - 1}."""
        return self.maps[index - 1]

    def betti_table(self):
        return BettiTable.from_resolution(self)

    def is_complex(self):
        """Return True if d_i o d_{i+1} = 0 for every i."""
        for index in range(1, len(self.maps)):
            for column in self.maps[index]:
                if linear_combination(column, self.maps[index - 1], self.modules[index - 1]):
                    return False
        return True

    def is_minimal(self):
        """Return True if no differential has a non-zero constant entry."""
        return _find_unit(self.modules, [list(columns) for columns in self.maps]) is None

    def euler_characteristic(self, degree):
        """Return sum_i (-1)^i dim (F_i)_degree."""
        return sum((-1) ** index * module.dimension(degree)
                   for index, module in enumerate(self.modules))

    def to_text(self):
        lines = []
        for index, columns in enumerate(self.maps):
            lines.append('d{} = [{}]'.format(index + 1, ', '.join(c.to_text() for c in columns)))
        return '\n'.join(lines)


def _find_unit(modules, maps):
    for index, columns in enumerate(maps):
        zero = (0,) * modules[index].ring.nvars
        for column_index, column in enumerate(columns):
            for monomial, value in sorted(column.coefficients.items()):
                if monomial.exponents == zero:
                    return index, column_index, monomial.component, value
    return None


def _without(shifts, position):
    return shifts[:position] + shifts[position + 1:]


def _renumber(rank, position):
    return {k: (k if k < position else k - 1) for k in range(rank) if k != position}


def _cancel(modules, maps, index, column_index, row, unit):
    ring = modules[index].ring
    pivot = maps[index][column_index]
    columns = []
    for position, column in enumerate(maps[index]):
        if position == column_index:
            continue
        entry = column.component(row)
        if entry:
            column = column + pivot.mul_polynomial({e: -v / unit for e, v in entry.items()})
        columns.append(column)

    target = FreeModule(ring, _without(modules[index].shifts, row))
    source = FreeModule(ring, _without(modules[index + 1].shifts, column_index))
    rows = _renumber(modules[index].rank, row)
    maps[index] = [column.map_to(target, rows) for column in columns]
    if index + 1 < len(maps):
        renumber = _renumber(modules[index + 1].rank, column_index)
        maps[index + 1] = [column.map_to(source, renumber) for column in maps[index + 1]]
    if index > 0:
        maps[index - 1] = [c for k, c in enumerate(maps[index - 1]) if k != row]
    modules[index] = target
    modules[index + 1] = source


def minimalize(resolution):
    """Return a minimal resolution of the same module.

    Unit entries are cancelled one at a time by homogeneous column
    operations, dropping the matching pair of basis elements.

    Raises
    ------
    ResolutionError: if the input is not a complex.
    """
    if not resolution.is_complex():
        raise ResolutionError('input is not a complex')
    modules = list(resolution.modules)
    maps = [list(columns) for columns in resolution.maps]
    cancelled = 0
    while True:
        found = _find_unit(modules, maps)
        if found is None:
            break
        _cancel(modules, maps, *found)
        cancelled += 1
    while modules and modules[-1].rank == 0:
        modules.pop()
        if maps:
            maps.pop()
    logger.debug('minimalize: %d cancellations', cancelled)
    return FreeResolution(modules, maps, target=resolution.target,
                          augmentation=resolution.augmentation)


def free_resolution(target):
    """Return the minimal graded free resolution of a submodule or quotient.

    Each step takes a minimal generating set of the syzygies of the
    previous columns.  Quotients whose relations contain units are
    minimalized afterwards.

    Raises
    ------
    ResolutionError: if the length exceeds the number of variables.
    """
    if isinstance(target, Submodule):
        ring = target.ring
        current = minimal_generators(target)
        if not current:
            return FreeResolution([], [], target=target)
        modules = [FreeModule(ring, [g.degree for g in current])]
        maps, augmentation = [], current
    elif isinstance(target, Quotient):
        ring = target.ring
        current = minimal_generators(target.relations)
        modules, maps, augmentation = [target.ambient], [], ()
        if current:
            maps.append(current)
            modules.append(FreeModule(ring, [g.degree for g in current]))
    else:
        raise ResolutionError('cannot resolve {!r}'.format(target))

    while current:
        presentation = syzygies(current, minimal=True)
        if not presentation.columns:
            break
        if len(maps) >= ring.nvars:
            raise ResolutionError('resolution longer than the number of variables')
        current = list(presentation.columns)
        maps.append(current)
        modules.append(FreeModule(ring, [c.degree for c in current]))

    resolution = FreeResolution(modules, maps, target=target, augmentation=augmentation)
    if isinstance(target, Quotient) and not resolution.is_minimal():
        resolution = minimalize(resolution)
    logger.debug('free_resolution: ranks %s', [m.rank for m in resolution.modules])
    return resolution


def specialize(resolution, alpha):
    """Return the complex F~ (x) A[t]/(t - alpha) of a bigraded resolution."""
    ring = resolution.ring
    if ring is None or ring.t_index is None:
        raise ResolutionError('only resolutions over the bigraded ring can be specialized')
    base = ring.base_ring()
    modules = [FreeModule(base, [shift[0] for shift in m.shifts]) for m in resolution.modules]
    maps = [
        [evaluate_t(column, alpha, target=modules[index]) for column in columns]
        for index, columns in enumerate(resolution.maps)
    ]
    target = None
    if isinstance(resolution.target, Quotient) and modules:
        relations = maps[0] if maps else []
        target = Quotient(Submodule(modules[0], relations, check=False))
    return FreeResolution(modules, maps, target=target)


class HilbertFunction:
    """The Hilbert function of a submodule N of F or of F/N.

    Values come from the standard monomials of the leading module of N
    under the canonical order.  A rational certificate (numerator over
    (1 - z)^n) is derived by inclusion-exclusion on the lcm lattice when
    every component has at most ``Data.lcm_lattice_cap`` leading monomials.
    """
    def __init__(self, target):
        if isinstance(target, Quotient):
            submodule, self.is_quotient = target.relations, True
        else:
            validate_argument_type(Submodule, target=target)
            submodule, self.is_quotient = target, False
        ambient = submodule.ambient
        if ambient.ring.grading_size != 1:
            raise ResolutionError('Hilbert functions need a standard graded ring')
        self.ambient = ambient
        self.nvars = ambient.ring.nvars
        leads = defaultdict(list)
        for element in submodule.groebner_basis():
            monomial = element.terms[0][1]
            leads[monomial.component].append(monomial.exponents)
        self.leads = dict(leads)
        self.numerator = self._numerator()

    def _numerator(self):
        numerator = defaultdict(int)
        for component, shift in enumerate(self.ambient.shifts):
            generators = self.leads.get(component, [])
            if len(generators) > Data.lcm_lattice_cap:
                return None
            for size in range(len(generators) + 1):
                for subset in combinations(generators, size):
                    lcm = (0,) * self.nvars
                    for exponents in subset:
                        lcm = monomial_lcm(lcm, exponents)
                    numerator[sum(lcm) + shift[0]] += (-1) ** size
        return {k: v for k, v in sorted(numerator.items()) if v}

    def _is_standard(self, exponents, component):
        return not any(monomial_divides(lead, exponents) for lead in self.leads.get(component, ()))

    def count(self, degree):
        """Return dim_K (F/N)_degree by counting standard monomials."""
        total = 0
        for component, shift in enumerate(self.ambient.shifts):
            for exponents in exponents_of_degree(self.nvars, degree - shift[0]):
                if self._is_standard(exponents, component):
                    total += 1
        return total

    def quotient_value(self, degree):
        if self.numerator is None:
            return self.count(degree)
        return sum(h * count_monomials(self.nvars, degree - k) for k, h in self.numerator.items())

    def value(self, degree):
        quotient = self.quotient_value(degree)
        if self.is_quotient:
            return quotient
        return self.ambient.dimension(degree) - quotient

    def values(self, bound):
        return [self.value(degree) for degree in range(bound + 1)]

    @property
    def series_numerator(self):
        """Return the numerator over (1 - z)^n, or None past the lattice cap."""
        if self.numerator is None or self.is_quotient:
            return self.numerator
        numerator = defaultdict(int)
        for shift in self.ambient.shifts:
            numerator[shift[0]] += 1
        for k, h in self.numerator.items():
            numerator[k] -= h
        return {k: v for k, v in sorted(numerator.items()) if v}


def hilbert_function(target, degree):
    """Return dim_K of the degree ``degree`` part of a submodule or quotient."""
    return HilbertFunction(target).value(degree)


def hilbert_series(target):
    """Return the numerator of the Hilbert series over (1 - z)^n as {k: h_k}.

    Raises
    ------
    ResolutionError: past the lcm-lattice cap, where no certificate is derived.
    """
    numerator = HilbertFunction(target).series_numerator
    if numerator is None:
        raise ResolutionError('more than {} leading monomials in one component'.format(
            Data.lcm_lattice_cap))
    return numerator


def hilbert_bound(submodule):
    """Return the tabulation bound: top generator or basis degree + n + slack."""
    degrees = [g.degree[0] for g in submodule.generators]
    degrees += [g.degree[0] for g in submodule.groebner_basis()]
    shifts = [shift[0] for shift in submodule.ambient.shifts]
    return max(degrees + shifts) + submodule.ring.nvars + Data.hilbert_slack


def regularity(target):
    """Return max{j - i : beta_{i,j} != 0}.

    Raises
    ------
    ZeroModuleError: for the zero module.
    """
    return free_resolution(target).betti_table().regularity()


def truncation(submodule, degree):
    """Return M<a>, the submodule generated by the degree-a component of M.

    A K-basis of M_a comes from row-reducing all degree-a multiples of a
    Groebner basis of M.
    """
    ambient = submodule.ambient
    ring = ambient.ring
    if ring.grading_size != 1:
        raise ResolutionError('truncation needs a standard graded ring')
    spanning = []
    for element in submodule.groebner_basis():
        gap = degree - element.degree[0]
        for exponents in exponents_of_degree(ring.nvars, gap):
            spanning.append(element.mul_monomial(exponents))
    if not spanning:
        return Submodule(ambient, [])

    key = ambient.canonical_key
    monomials = sorted({m for element in spanning for m in element.coefficients}, key=key, reverse=True)
    zero = ring.field.zero
    rows = [[element.coefficients.get(m, zero) for m in monomials] for element in spanning]
    reduced, pivots = DomainMatrix(rows, (len(rows), len(monomials)), ring.field.domain).rref()
    basis = []
    for row in reduced.to_list()[:len(pivots)]:
        basis.append(ModuleElement(ambient, {m: v for m, v in zip(monomials, row) if v}))
    return Submodule(ambient, basis)


def creg_profile(submodule):
    """Return {d: reg(M<d>) - d} over the generator degrees d of M.

    Raises
    ------
    ZeroModuleError: for the zero module.
    """
    validate_argument_type(Submodule, submodule=submodule)
    if submodule.is_zero:
        raise ZeroModuleError('componentwise regularity of the zero module is undefined')
    profile = {}
    for degree in sorted(set(submodule.generator_degrees())):
        profile[degree] = regularity(truncation(submodule, degree)) - degree
    return profile


def creg(submodule):
    return max(creg_profile(submodule).values())


def is_componentwise_linear(submodule):
    return creg(submodule) == 0


def syzygy_module(target, index, resolution=None):
    """Return Omega_i, the image of d_{i+1} in F_i; Omega_i = M for i < 0."""
    if index < 0:
        return target
    resolution = resolution or free_resolution(target)
    if index < len(resolution.maps):
        return Submodule(resolution.modules[index], resolution.maps[index], check=False)
    if index < len(resolution.modules):
        return Submodule(resolution.modules[index], [])
    ambient = resolution.modules[-1] if resolution.modules else target.ambient
    return Submodule(ambient, [])


def linear_part(resolution):
    """Return lin(F): the complex keeping only the entries of degree one."""
    maps = []
    for columns in resolution.maps:
        linear = []
        for column in columns:
            kept = {m: c for m, c in column.coefficients.items() if sum(m.exponents) == 1}
            linear.append(ModuleElement(column.module, kept))
        maps.append(linear)
    return FreeResolution(resolution.modules, maps, target=resolution.target)


def _has_homology(complex_, index):
    source = complex_.modules[index]
    presentation = syzygies(complex_.maps[index - 1], degrees=source.shifts,
                            ambient=complex_.modules[index - 1])
    kernel = Submodule(source, presentation.columns, check=False)
    if kernel.is_zero:
        return False
    image = Submodule(source, complex_.maps[index] if index < len(complex_.maps) else [],
                      check=False)
    bound = max(g.degree[0] for g in kernel.generators)
    kernel_hf, image_hf = HilbertFunction(kernel), HilbertFunction(image)
    return any(kernel_hf.value(d) != image_hf.value(d) for d in range(bound + 1))


def linear_defect(target, bound=None):
    """Return ld = max{i : H_i(lin(F)) != 0}, or 0 when no such i <= bound.

    Homology is detected by comparing the Hilbert functions of kernel and
    image up to the top generator degree of the kernel.
    """
    resolution = free_resolution(target)
    complex_ = linear_part(resolution)
    top = resolution.length if bound is None else min(bound, resolution.length)
    defect = 0
    for index in range(1, top + 1):
        if _has_homology(complex_, index):
            defect = index
    return defect

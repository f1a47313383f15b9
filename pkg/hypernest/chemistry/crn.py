"""
Chemical reaction networks: species, complexes and reactions.

Reaction lists are written one reaction per line::

    # comments run to the end of the line
    r1: A <-> 2B
    r2: A + C <-> D
    r3: D -> B + E

A reversible line ``x: ... <-> ...`` yields the reactions ``x+`` and ``x-``. Lines without
an id are numbered ``r<k>`` by their position among reaction lines.
"""
import logging
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from hypernest.core.hypergraph import EdgeId, Hypergraph, NodeId
from hypernest.lib import helpers, names

logger = logging.getLogger(__name__)

LINE_ID_RE = re.compile(r'\s*([A-Za-z_][A-Za-z0-9_]*[+-]?)\s*:')
TOKEN_RE = re.compile(r"""
    (?P<space>\s+)
  | (?P<reversible><->|⇌|↔)
  | (?P<irreversible>->|→)
  | (?P<plus>\+)
  | (?P<integer>\d+)
  | (?P<identifier>[A-Za-z_][A-Za-z0-9_]*)
""", re.VERBOSE)

# coefficients and their differences stay within the int64 stoichiometric matrices
MAX_COEFFICIENT = 2 ** 31 - 1

FORWARD_SUFFIX = '+'
REVERSE_SUFFIX = '-'


class CrnError(Exception):
    pass


class CrnSyntaxError(CrnError):
    def __init__(self, message: str, line: int, column: int) -> None:
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f'line {line}, column {column}: {message}')


@dataclass(frozen=True)
class Violation:
    kind: str
    element: str
    message: str
    severity: str = names.ERROR_SEVERITY

    def __str__(self) -> str:
        return f'{self.severity}: {self.kind}: {self.element}: {self.message}'


class CrnAxiomError(CrnError):
    def __init__(self, violations: Sequence[Violation]) -> None:
        self.violations = list(violations)
        super().__init__('; '.join(str(violation) for violation in self.violations))


@dataclass(frozen=True)
class Complex:
    """A complex as its stoichiometric coefficients; equal maps are the same complex."""
    terms: Tuple[Tuple[str, int], ...]

    @classmethod
    def from_mapping(cls, coefficients: Mapping[str, int]) -> 'Complex':
        return cls(tuple(sorted(coefficients.items())))

    @property
    def species(self) -> Tuple[str, ...]:
        return tuple(species for species, _ in self.terms)

    def coefficient(self, species: str) -> int:
        for name, coefficient in self.terms:
            if name == species:
                return coefficient
        return 0

    def as_dict(self) -> Dict[str, int]:
        return dict(self.terms)


@dataclass(frozen=True)
class Reaction:
    id: str
    reactant: Complex
    product: Complex


@dataclass(frozen=True)
class Crn:
    species: Tuple[str, ...] = ()
    complexes: Tuple[Complex, ...] = ()
    reactions: Tuple[Reaction, ...] = ()

    def render_complex(self, complex_: Complex) -> str:
        """Terms in species declaration order, e.g. ``A + 2B``."""
        position = {species: index for index, species in enumerate(self.species)}
        ordered = sorted(complex_.terms, key=lambda term: (position.get(term[0], len(position)), term[0]))
        return ' + '.join(species if coefficient == 1 else f'{coefficient}{species}'
                          for species, coefficient in ordered)

    def get_reaction(self, reaction_id: str) -> Reaction:
        for reaction in self.reactions:
            if reaction.id == reaction_id:
                return reaction
        raise KeyError(reaction_id)


class _LineParser:
    def __init__(self, text: str, line: int, offset: int) -> None:
        self.line = line
        self.tokens: List[Tuple[str, str, int]] = []
        position = 0
        while position < len(text):
            match = TOKEN_RE.match(text, position)
            if match is None:
                raise CrnSyntaxError(f'unexpected character {text[position]!r}', line, offset + position + 1)
            kind = match.lastgroup
            assert kind is not None
            if kind != 'space':
                self.tokens.append((kind, match.group(), offset + position + 1))
            position = match.end()
        self.index = 0
        self.end_column = offset + len(text) + 1

    def peek(self) -> Optional[Tuple[str, str, int]]:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def fail(self, message: str) -> CrnSyntaxError:
        token = self.peek()
        column = token[2] if token is not None else self.end_column
        return CrnSyntaxError(message, self.line, column)

    def expect(self, *kinds: str) -> Tuple[str, str, int]:
        token = self.peek()
        if token is None or token[0] not in kinds:
            found = 'end of line' if token is None else repr(token[1])
            raise self.fail(f'expected {" or ".join(kinds)}, found {found}')
        self.index += 1
        return token

    def parse_complex(self, appearance: List[str]) -> Complex:
        coefficients: Dict[str, int] = {}
        while True:
            coefficient = 1
            token = self.peek()
            if token is not None and token[0] == 'integer':
                self.index += 1
                coefficient = int(token[1])
                if coefficient == 0:
                    raise CrnSyntaxError('stoichiometric coefficient must be at least 1', self.line, token[2])
                if coefficient > MAX_COEFFICIENT:
                    raise CrnSyntaxError(f'stoichiometric coefficient must be at most {MAX_COEFFICIENT}',
                                         self.line, token[2])
            _, species, column = self.expect('identifier')
            if species in coefficients:
                raise CrnSyntaxError(f'species {species!r} repeated in one complex; '
                                     f'write a coefficient instead', self.line, column)
            coefficients[species] = coefficient
            if species not in appearance:
                appearance.append(species)
            token = self.peek()
            if token is None or token[0] != 'plus':
                return Complex.from_mapping(coefficients)
            self.index += 1

    def parse_reaction(self, appearance: List[str]) -> Tuple[Complex, bool, Complex]:
        reactant = self.parse_complex(appearance)
        arrow_kind, _, _ = self.expect('irreversible', 'reversible')
        product = self.parse_complex(appearance)
        if self.peek() is not None:
            raise self.fail('expected end of line')
        return reactant, arrow_kind == 'reversible', product


def parse_crn(text: str) -> Crn:
    species: List[str] = []
    complexes: List[Complex] = []
    reactions: List[Reaction] = []
    seen_ids: Dict[str, int] = {}
    reaction_lines = 0

    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split('#', 1)[0]
        if not line.strip():
            continue
        reaction_lines += 1

        id_match = LINE_ID_RE.match(line)
        offset = 0
        if id_match is not None:
            base_id = id_match.group(1)
            id_column = id_match.start(1) + 1
            offset = id_match.end()
        else:
            base_id = f'r{reaction_lines}'
            id_column = 1

        parser = _LineParser(line[offset:], line_number, offset)
        reactant, reversible, product = parser.parse_reaction(species)

        if reactant == product:
            raise CrnAxiomError([Violation(names.SELF_REACTION, base_id,
                                           f'line {line_number}: complex reacts to itself')])

        if reversible:
            if base_id.endswith((FORWARD_SUFFIX, REVERSE_SUFFIX)):
                raise CrnSyntaxError(f'reversible reaction id {base_id!r} must not end with '
                                     f'{FORWARD_SUFFIX!r} or {REVERSE_SUFFIX!r}', line_number, id_column)
            new_reactions = [Reaction(base_id + FORWARD_SUFFIX, reactant, product),
                             Reaction(base_id + REVERSE_SUFFIX, product, reactant)]
        else:
            new_reactions = [Reaction(base_id, reactant, product)]

        for reaction in new_reactions:
            if reaction.id in seen_ids:
                raise CrnSyntaxError(f'duplicate reaction id {reaction.id!r} '
                                     f'(first defined on line {seen_ids[reaction.id]})', line_number, id_column)
            seen_ids[reaction.id] = line_number
            reactions.append(reaction)

        for complex_ in (reactant, product):
            if complex_ not in complexes:
                complexes.append(complex_)

    crn = Crn(tuple(species), tuple(complexes), tuple(reactions))
    logger.debug('parsed reaction network: %d species, %d complexes, %d reactions',
                 len(crn.species), len(crn.complexes), len(crn.reactions))
    return crn


def _reversible_base(forward: Reaction, reverse: Reaction) -> Optional[str]:
    if not (forward.id.endswith(FORWARD_SUFFIX) and reverse.id.endswith(REVERSE_SUFFIX)):
        return None
    base_id = forward.id[:-1]
    if reverse.id[:-1] != base_id or not helpers.is_identifier(base_id):
        return None
    if forward.reactant != reverse.product or forward.product != reverse.reactant:
        return None
    return base_id


def render_crn(crn: Crn) -> str:
    """Canonical text; ``parse_crn`` of the result gives back an equal network."""
    lines = []
    index = 0
    while index < len(crn.reactions):
        reaction = crn.reactions[index]
        reactant = crn.render_complex(reaction.reactant)
        product = crn.render_complex(reaction.product)
        base_id = None
        if index + 1 < len(crn.reactions):
            base_id = _reversible_base(reaction, crn.reactions[index + 1])
        if base_id is not None:
            lines.append(f'{base_id}: {reactant} <-> {product}')
            index += 2
        else:
            lines.append(f'{reaction.id}: {reactant} -> {product}')
            index += 1
    return ''.join(line + '\n' for line in lines)


def validate(crn: Crn) -> List[Violation]:
    """
    Check the network axioms. An empty list means the network is valid; an empty network
    is valid vacuously. Duplicate reactions are reported with warning severity.
    """
    violations: List[Violation] = []
    declared_species = set(crn.species)
    declared_complexes = set(crn.complexes)

    for species in helpers.find_duplicates(crn.species):
        violations.append(Violation(names.DUPLICATE_SPECIES, str(species), 'species declared more than once'))

    for complex_ in helpers.find_duplicates(crn.complexes):
        violations.append(Violation(names.DUPLICATE_COMPLEX, crn.render_complex(complex_),
                                    'complex declared more than once'))

    for complex_ in crn.complexes:
        label = crn.render_complex(complex_)
        if not complex_.terms:
            violations.append(Violation(names.EMPTY_COMPLEX, label, 'complex has no species'))
        for species, coefficient in complex_.terms:
            if coefficient < 1:
                violations.append(Violation(names.NONPOSITIVE_COEFFICIENT, label,
                                            f'coefficient of {species} is {coefficient}'))
            elif coefficient > MAX_COEFFICIENT:
                violations.append(Violation(names.COEFFICIENT_TOO_LARGE, label,
                                            f'coefficient of {species} exceeds {MAX_COEFFICIENT}'))
            if species not in declared_species:
                violations.append(Violation(names.UNDECLARED_SPECIES, label,
                                            f'species {species} is not declared'))

    for reaction_id in helpers.find_duplicates(reaction.id for reaction in crn.reactions):
        violations.append(Violation(names.DUPLICATE_REACTION_ID, str(reaction_id), 'reaction id used more than once'))

    used_complexes = set()
    pair_ids: Dict[Tuple[Complex, Complex], List[str]] = {}
    for reaction in crn.reactions:
        for complex_ in (reaction.reactant, reaction.product):
            used_complexes.add(complex_)
            if complex_ not in declared_complexes:
                violations.append(Violation(names.UNDECLARED_COMPLEX, reaction.id,
                                            f'complex {crn.render_complex(complex_)} is not declared'))
        if reaction.reactant == reaction.product:
            violations.append(Violation(names.SELF_REACTION, reaction.id,
                                        f'complex {crn.render_complex(reaction.reactant)} reacts to itself'))
        pair_ids.setdefault((reaction.reactant, reaction.product), []).append(reaction.id)

    for (reactant, product), reaction_ids in pair_ids.items():
        if len(reaction_ids) > 1:
            violations.append(Violation(names.DUPLICATE_REACTION, helpers.join_labels(reaction_ids),
                                        f'{crn.render_complex(reactant)} -> {crn.render_complex(product)} '
                                        f'is declared by several reactions',
                                        severity=names.WARNING_SEVERITY))

    for complex_ in crn.complexes:
        if complex_ not in used_complexes:
            violations.append(Violation(names.ISOLATED_COMPLEX, crn.render_complex(complex_),
                                        'complex takes part in no reaction'))

    used_species = {species for complex_ in crn.complexes for species in complex_.species}
    for species in crn.species:
        if species not in used_species:
            violations.append(Violation(names.ORPHAN_SPECIES, species, 'species appears in no complex'))

    for violation in violations:
        if violation.severity == names.WARNING_SEVERITY:
            logger.warning('%s', violation)
    return violations


def errors_only(violations: Iterable[Violation]) -> List[Violation]:
    return [violation for violation in violations if violation.severity == names.ERROR_SEVERITY]


def to_reaction_hypergraph(crn: Crn) -> Hypergraph:
    """
    One node per species, one simple hyperedge per complex and one directed hyperedge per
    reaction. Complex hyperedges carry their coefficients as features, reaction hyperedges
    their net stoichiometric change, both aligned with the species order.
    """
    errors = errors_only(validate(crn))
    if errors:
        raise CrnAxiomError(errors)

    graph = Hypergraph(node_dim=0, edge_dim=len(crn.species))
    species_nodes: Dict[str, NodeId] = {}
    for species in crn.species:
        species_nodes[species] = graph.add_node(species)

    complex_edges: Dict[Complex, EdgeId] = {}
    for complex_ in crn.complexes:
        complex_edges[complex_] = graph.add_simple_edge(
            [species_nodes[species] for species in complex_.species],
            label=crn.render_complex(complex_),
            features=[complex_.coefficient(species) for species in crn.species],
        )

    for reaction in crn.reactions:
        graph.add_directed_edge(
            complex_edges[reaction.reactant],
            complex_edges[reaction.product],
            label=reaction.id,
            features=[reaction.product.coefficient(species) - reaction.reactant.coefficient(species)
                      for species in crn.species],
        )

    logger.debug('built reaction hypergraph: %d nodes, %d hyperedges', graph.order, graph.size)
    return graph



"""
Chemical-system documents (YAML)::

    molecules:
      hydrogen:
        atoms: [H, H]
        bonds:
        - {atoms: [0, 1], kind: sigma}
    reactions:
    - id: r1
      reactants: [{molecule: hydrogen, multiplicity: 1}]
      products: [{molecule: hydrogen, multiplicity: 1}]

An atom is either an element symbol or a mapping with ``symbol`` and ``features``.
"""
from typing import Any, Dict, List, Mapping, Tuple

import yaml

from hypernest.chemistry.molecules import (
    AtomSpec, BondSpec, ChemicalSystemSpec, MoleculeSpec, ReactionSpec,
)
from hypernest.exporters.canonical import DocumentError, SchemaError
from hypernest.lib import helpers


def _mapping(value: Any, where: str) -> Mapping[str, Any]:
    if not isinstance(value, dict):
        raise SchemaError(f'{where}: expected a mapping, got {type(value).__name__}')
    return value


def _list(value: Any, where: str) -> List[Any]:
    if value is None:
        return []
    if not isinstance(value, list):
        raise SchemaError(f'{where}: expected a list, got {type(value).__name__}')
    return value


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f'{where}: expected an integer, got {value!r}')
    return value


def _text(value: Any, where: str) -> str:
    if not isinstance(value, str) or not value:
        raise SchemaError(f'{where}: expected a non-empty string, got {value!r}')
    return value


def _atom(value: Any, where: str) -> AtomSpec:
    if isinstance(value, str):
        return AtomSpec(_text(value, where))
    document = _mapping(value, where)
    features = []
    for feature in _list(document.get('features'), f'{where}.features'):
        if isinstance(feature, bool) or not isinstance(feature, (int, float)):
            raise SchemaError(f'{where}.features: expected numbers, got {feature!r}')
        number = helpers.finite_float(feature)
        if number is None:
            raise SchemaError(f'{where}.features: expected finite numbers, got {feature!r}')
        features.append(number)
    return AtomSpec(_text(document.get('symbol'), f'{where}.symbol'), tuple(features))


def _bond(value: Any, where: str) -> BondSpec:
    document = _mapping(value, where)
    atoms = tuple(_int(index, f'{where}.atoms') for index in _list(document.get('atoms'), f'{where}.atoms'))
    return BondSpec(atoms, _text(document.get('kind'), f'{where}.kind'))


def _molecule(name: Any, value: Any) -> MoleculeSpec:
    where = f'molecules.{name}'
    document = _mapping(value, where)
    atoms = tuple(_atom(atom, f'{where}.atoms[{index}]')
                  for index, atom in enumerate(_list(document.get('atoms'), f'{where}.atoms')))
    bonds = tuple(_bond(bond, f'{where}.bonds[{index}]')
                  for index, bond in enumerate(_list(document.get('bonds'), f'{where}.bonds')))
    return MoleculeSpec(_text(name, 'molecules'), atoms, bonds)


def _participants(value: Any, where: str) -> Tuple[Tuple[str, int], ...]:
    participants = []
    for index, item in enumerate(_list(value, where)):
        document = _mapping(item, f'{where}[{index}]')
        multiplicity = _int(document.get('multiplicity', 1), f'{where}[{index}].multiplicity')
        participants.append((_text(document.get('molecule'), f'{where}[{index}].molecule'), multiplicity))
    return tuple(participants)


def _reaction(value: Any, index: int) -> ReactionSpec:
    where = f'reactions[{index}]'
    document = _mapping(value, where)
    return ReactionSpec(_text(document.get('id'), f'{where}.id'),
                        _participants(document.get('reactants'), f'{where}.reactants'),
                        _participants(document.get('products'), f'{where}.products'))


def parse_chemical_system(text: str) -> ChemicalSystemSpec:
    try:
        document = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise DocumentError(f'not a YAML document: {exc}') from exc
    document = _mapping(document, 'document')
    unknown = sorted(set(document) - {'molecules', 'reactions'})
    if unknown:
        raise SchemaError(f'document: unknown sections {unknown}')
    molecules = _mapping(document.get('molecules') or {}, 'molecules')
    return ChemicalSystemSpec(
        molecules=tuple(_molecule(name, value) for name, value in molecules.items()),
        reactions=tuple(_reaction(value, index)
                        for index, value in enumerate(_list(document.get('reactions'), 'reactions'))),
    )


def _atom_document(atom: AtomSpec) -> Any:
    if not atom.features:
        return atom.symbol
    return {'symbol': atom.symbol, 'features': list(atom.features)}


def dump_chemical_system(system: ChemicalSystemSpec) -> str:
    document: Dict[str, Any] = {
        'molecules': {
            molecule.name: {
                'atoms': [_atom_document(atom) for atom in molecule.atoms],
                'bonds': [{'atoms': list(bond.atoms), 'kind': bond.kind} for bond in molecule.bonds],
            }
            for molecule in system.molecules
        },
        'reactions': [
            {
                'id': reaction.id,
                'reactants': [{'molecule': name, 'multiplicity': k} for name, k in reaction.reactants],
                'products': [{'molecule': name, 'multiplicity': k} for name, k in reaction.products],
            }
            for reaction in system.reactions
        ],
    }
    return yaml.safe_dump(document, sort_keys=False, default_flow_style=None, allow_unicode=True)

from typing_extensions import Final

SIMPLE_KIND: Final = 'simple'
NESTING_KIND: Final = 'nesting'
DIRECTED_KIND: Final = 'directed'

EDGE_KINDS = {
    SIMPLE_KIND,
    NESTING_KIND,
    DIRECTED_KIND,
}

SIMPLE_HYPERGRAPH: Final = 'simple'
NESTED_HYPERGRAPH: Final = 'nested'
DIRECTED_HYPERGRAPH: Final = 'directed'
NESTED_DIRECTED_HYPERGRAPH: Final = 'nested-directed'

INCIDENCE_MATRIX: Final = 'incidence'
SPLIT_MATRIX: Final = 'split'
SIGNED_MATRIX: Final = 'signed'
STOICH_COMPLEXES_MATRIX: Final = 'stoich-complexes'
STOICH_REACTIONS_MATRIX: Final = 'stoich-reactions'

HYPERGRAPH_MATRIX_KINDS = [
    INCIDENCE_MATRIX,
    SPLIT_MATRIX,
    SIGNED_MATRIX,
]
CRN_MATRIX_KINDS = [
    STOICH_COMPLEXES_MATRIX,
    STOICH_REACTIONS_MATRIX,
]

NODE_ROW_HEADER: Final = 'node'
SPECIES_ROW_HEADER: Final = 'species'

CANONICAL_SCHEMA: Final = 'hypernest/1'

CANONICAL_FORMAT: Final = 'hg'
CRN_FORMAT: Final = 'crn'
CHEM_FORMAT: Final = 'chem'

INPUT_FORMATS = [
    CANONICAL_FORMAT,
    CRN_FORMAT,
    CHEM_FORMAT,
]

BENZENE_EXAMPLE: Final = 'benzene'
HYDROGENATION_EXAMPLE: Final = 'hydrogenation'
FEINBERG_EXAMPLE: Final = 'feinberg'
METABOLIC_EXAMPLE: Final = 'metabolic'
LESMIS_EXAMPLE: Final = 'lesmis'
CLINICAL_EXAMPLE: Final = 'clinical'

EXAMPLE_NAMES = [
    BENZENE_EXAMPLE,
    HYDROGENATION_EXAMPLE,
    FEINBERG_EXAMPLE,
    METABOLIC_EXAMPLE,
    LESMIS_EXAMPLE,
    CLINICAL_EXAMPLE,
]

CONFIG_SECTION: Final = 'hypernest'
CONFIG_FILES = ['hypernest.ini', 'setup.cfg']
COLOR_ENV_VAR: Final = 'HYPERNEST_COLOR'

# crn violation kinds
SELF_REACTION: Final = 'self-reaction'
ISOLATED_COMPLEX: Final = 'isolated-complex'
ORPHAN_SPECIES: Final = 'orphan-species'
UNDECLARED_SPECIES: Final = 'undeclared-species'
UNDECLARED_COMPLEX: Final = 'undeclared-complex'
EMPTY_COMPLEX: Final = 'empty-complex'
NONPOSITIVE_COEFFICIENT: Final = 'nonpositive-coefficient'
COEFFICIENT_TOO_LARGE: Final = 'coefficient-too-large'
DUPLICATE_SPECIES: Final = 'duplicate-species'
DUPLICATE_COMPLEX: Final = 'duplicate-complex'
DUPLICATE_REACTION_ID: Final = 'duplicate-reaction-id'
DUPLICATE_REACTION: Final = 'duplicate-reaction'

ERROR_SEVERITY: Final = 'error'
WARNING_SEVERITY: Final = 'warning'

ATOM_WRAPPER_LABEL: Final = 'atom'
REACTANTS_SUFFIX: Final = 'reactants'
PRODUCTS_SUFFIX: Final = 'products'

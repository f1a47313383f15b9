"""
Worked examples: molecules, chemical systems, reaction networks and two multilevel
hypergraphs built from text corpora.
"""
from typing import Dict, List, Sequence, Tuple

from hypernest.chemistry.molecules import (
    AtomSpec, BondSpec, ChemicalSystemSpec, MoleculeSpec, ReactionSpec,
)
from hypernest.core.hypergraph import EdgeId, Hypergraph, NodeId

SIGMA_BOND = 'sigma'
PI_DELOCALIZED_BOND = 'pi-delocalized'

HYDROGENATION_REACTION_ID = 'r1'

FEINBERG_CRN = """\
# reaction network with five species and two reversible pairs
r1: A <-> 2B
r2: A + C <-> D
r3: D -> B + E
r4: B + E -> A + C
"""

METABOLIC_CRN = """\
# toy metabolic network; the first reaction is reversible
r1: 3a + 2b <-> c
r2: c + b -> a + 4d
r3: d -> 2e
"""

Scene = Sequence[str]
Chapter = Tuple[str, Sequence[Scene]]
Book = Tuple[str, Sequence[Chapter]]
Volume = Tuple[str, Sequence[Book]]

# volume -> book -> chapter -> scenes (characters appearing together)
LESMIS_VOLUMES: Sequence[Volume] = (
    ('Fantine', (
        ('A Just Man', (
            ('M. Myriel', (('Myriel', 'Napoleon'), ('Myriel', 'Baptistine', 'MmeMagloire'))),
            ('The Fall', (('Myriel', 'Valjean'), ('Valjean', 'Gervais'))),
        )),
        ('In the Year 1817', (
            ('A Double Quartette', (('Tholomyes', 'Fantine', 'Favourite'), ('Fantine', 'Dahlia'))),
        )),
    )),
    ('Cosette', (
        ('Waterloo', (
            ('The Field', (('Thenardier', 'Pontmercy'),)),
        )),
        ('The Ship Orion', (
            ('Number 24601', (('Valjean', 'Javert'), ('Valjean', 'Cosette', 'Thenardier'))),
            ('The Inn', (('Cosette', 'MmeThenardier', 'Thenardier'),)),
        )),
    )),
)

# patient -> notes (physician, words)
CLINICAL_PATIENTS: Sequence[Tuple[str, Sequence[Tuple[str, Sequence[str]]]]] = (
    ('patient-1', (
        ('dr-adams', ('chest', 'pain', 'troponin', 'elevated')),
        ('dr-baker', ('chest', 'pain', 'resolved')),
    )),
    ('patient-2', (
        ('dr-adams', ('dyspnea', 'edema', 'furosemide')),
    )),
)

# parent taxonomy -> taxonomies (name, words)
CLINICAL_TAXONOMY: Sequence[Tuple[str, Sequence[Tuple[str, Sequence[str]]]]] = (
    ('cardiovascular', (
        ('ischemic heart disease', ('chest', 'pain', 'troponin')),
        ('heart failure', ('dyspnea', 'edema')),
    )),
    ('pharmacology', (
        ('diuretics', ('furosemide',)),
    )),
)


def benzene_fixture() -> MoleculeSpec:
    """C6H6: six C-C sigma bonds, six C-H sigma bonds and one delocalized pi bond over the ring."""
    atoms = tuple(AtomSpec('C') for _ in range(6)) + tuple(AtomSpec('H') for _ in range(6))
    bonds = [BondSpec((i, (i + 1) % 6), SIGMA_BOND) for i in range(6)]
    bonds += [BondSpec((i, i + 6), SIGMA_BOND) for i in range(6)]
    bonds.append(BondSpec(tuple(range(6)), PI_DELOCALIZED_BOND))
    return MoleculeSpec('benzene', atoms, tuple(bonds))


def hydrogen_fixture() -> MoleculeSpec:
    return MoleculeSpec('hydrogen', (AtomSpec('H'), AtomSpec('H')), (BondSpec((0, 1), SIGMA_BOND),))


def cyclohexane_fixture() -> MoleculeSpec:
    """C6H12: a ring of six C-C sigma bonds, each carbon carrying two hydrogens."""
    atoms = tuple(AtomSpec('C') for _ in range(6)) + tuple(AtomSpec('H') for _ in range(12))
    bonds = [BondSpec((i, (i + 1) % 6), SIGMA_BOND) for i in range(6)]
    for i in range(6):
        bonds.append(BondSpec((i, 6 + 2 * i), SIGMA_BOND))
        bonds.append(BondSpec((i, 7 + 2 * i), SIGMA_BOND))
    return MoleculeSpec('cyclohexane', atoms, tuple(bonds))


def hydrogenation_fixture() -> ChemicalSystemSpec:
    """C6H6 + 3H2 -> C6H12."""
    benzene = benzene_fixture()
    hydrogen = hydrogen_fixture()
    cyclohexane = cyclohexane_fixture()
    reaction = ReactionSpec(HYDROGENATION_REACTION_ID,
                            reactants=((benzene.name, 1), (hydrogen.name, 3)),
                            products=((cyclohexane.name, 1),))
    return ChemicalSystemSpec(molecules=(benzene, hydrogen, cyclohexane), reactions=(reaction,))


def feinberg_fixture() -> str:
    return FEINBERG_CRN


def metabolic_fixture() -> str:
    return METABOLIC_CRN


def _chain(graph: Hypergraph, siblings: Sequence[EdgeId], label: str) -> None:
    for source, target in zip(siblings, siblings[1:]):
        graph.add_directed_edge(source, target, label=label)


def lesmis_fixture() -> Hypergraph:
    """
    A two-volume miniature of a novel: characters are nodes, scenes are simple hyperedges,
    chapters, books and volumes are nesting hyperedges, and consecutive parts at the same
    level are linked by directed ``next`` hyperedges.
    """
    graph = Hypergraph()
    characters: Dict[str, NodeId] = {}

    def character(name: str) -> NodeId:
        if name not in characters:
            characters[name] = graph.add_node(name)
        return characters[name]

    volume_edges: List[EdgeId] = []
    for volume_title, books in LESMIS_VOLUMES:
        book_edges: List[EdgeId] = []
        for book_title, chapters in books:
            chapter_edges: List[EdgeId] = []
            for chapter_title, scenes in chapters:
                scene_edges = [graph.add_simple_edge([character(name) for name in scene],
                                                     label=f'{chapter_title}, scene {index}')
                               for index, scene in enumerate(scenes, start=1)]
                _chain(graph, scene_edges, 'next')
                chapter_edges.append(graph.add_nesting_edge(scene_edges, label=chapter_title))
            _chain(graph, chapter_edges, 'next')
            book_edges.append(graph.add_nesting_edge(chapter_edges, label=book_title))
        _chain(graph, book_edges, 'next')
        volume_edges.append(graph.add_nesting_edge(book_edges, label=volume_title))
    _chain(graph, volume_edges, 'next')
    return graph


def clinical_notes_fixture() -> Hypergraph:
    """
    Words are nodes; notes and taxonomies are simple hyperedges; patients, physicians and
    parent taxonomies are nesting hyperedges; directed hyperedges link each patient to the
    physicians who wrote their notes and back.
    """
    graph = Hypergraph()
    words: Dict[str, NodeId] = {}

    def word(text: str) -> NodeId:
        if text not in words:
            words[text] = graph.add_node(text)
        return words[text]

    notes_by_physician: Dict[str, List[EdgeId]] = {}
    patient_edges: List[Tuple[EdgeId, List[str]]] = []
    for patient, notes in CLINICAL_PATIENTS:
        note_edges = []
        physicians = []
        for index, (physician, note_words) in enumerate(notes, start=1):
            note = graph.add_simple_edge([word(text) for text in note_words], label=f'{patient} note {index}')
            note_edges.append(note)
            notes_by_physician.setdefault(physician, []).append(note)
            if physician not in physicians:
                physicians.append(physician)
        patient_edges.append((graph.add_nesting_edge(note_edges, label=patient), physicians))

    physician_edges = {physician: graph.add_nesting_edge(note_edges, label=physician)
                       for physician, note_edges in sorted(notes_by_physician.items())}

    for parent, taxonomies in CLINICAL_TAXONOMY:
        taxonomy_edges = [graph.add_simple_edge([word(text) for text in taxonomy_words], label=name)
                          for name, taxonomy_words in taxonomies]
        graph.add_nesting_edge(taxonomy_edges, label=parent)

    for patient_edge, physicians in patient_edges:
        for physician in physicians:
            graph.add_directed_edge(patient_edge, physician_edges[physician], label='seen by')
            graph.add_directed_edge(physician_edges[physician], patient_edge, label='treats')
    return graph

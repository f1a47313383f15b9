import argparse
import logging
import os
import re
import sys
from typing import Callable, Dict, List, Optional, Sequence

from hypernest.chemistry import crn, fixtures, molecules
from hypernest.config.context import ConfigError, HypernestContext
from hypernest.core import matrices
from hypernest.core.hypergraph import Hypergraph, HypergraphError, classify
from hypernest.exporters import canonical, documents, dot, tables
from hypernest.lib import names

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2

EXTENSION_FORMATS = {
    '.hg': names.CANONICAL_FORMAT,
    '.crn': names.CRN_FORMAT,
    '.chem': names.CHEM_FORMAT,
}
CHEM_DOCUMENT_RE = re.compile(r'^molecules\s*:', re.MULTILINE)

RED = '\033[31m'
YELLOW = '\033[33m'
RESET = '\033[0m'

REACTION_LEVEL = 'reaction'
MULTILEVEL_LEVEL = 'multilevel'
COMPLEXES_MATRIX = 'complexes'
REACTIONS_MATRIX = 'reactions'


class UsageError(Exception):
    pass


class Diagnostics:
    def __init__(self, color: bool) -> None:
        self.color = color

    def _emit(self, prefix: str, message: str, color_code: str) -> None:
        if self.color:
            prefix = f'{color_code}{prefix}{RESET}'
        print(f'{prefix}: {message}', file=sys.stderr)

    def error(self, message: str) -> None:
        self._emit('error', message, RED)

    def violation(self, violation: crn.Violation) -> None:
        color_code = RED if violation.severity == names.ERROR_SEVERITY else YELLOW
        self._emit(violation.severity, f'{violation.kind}: {violation.element}: {violation.message}', color_code)


def read_input(path: Optional[str]) -> str:
    if path is None or path == '-':
        return sys.stdin.read()
    with open(path, encoding='utf-8') as f:
        return f.read()


def write_output(text: str, path: Optional[str]) -> None:
    if path is None or path == '-':
        sys.stdout.write(text)
        return
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)


def detect_format(path: Optional[str], text: str, override: Optional[str]) -> str:
    if override is not None:
        return override
    if path is not None and path != '-':
        extension = os.path.splitext(path)[1].lower()
        if extension in EXTENSION_FORMATS:
            return EXTENSION_FORMATS[extension]
    if text.lstrip().startswith('{'):
        return names.CANONICAL_FORMAT
    if CHEM_DOCUMENT_RE.search(text):
        return names.CHEM_FORMAT
    return names.CRN_FORMAT


def load_hypergraph(text: str, input_format: str, context: HypernestContext) -> Hypergraph:
    if input_format == names.CANONICAL_FORMAT:
        graph = canonical.from_canonical(text, check_acyclicity=context.check_acyclicity)
    elif input_format == names.CRN_FORMAT:
        graph = crn.to_reaction_hypergraph(crn.parse_crn(text))
    else:
        graph = molecules.build_chemical_hypergraph(documents.parse_chemical_system(text))
    return finish_hypergraph(graph, context)


def finish_hypergraph(graph: Hypergraph, context: HypernestContext) -> Hypergraph:
    if context.check_acyclicity:
        graph.check_acyclicity()
    return graph


def load_reaction_network(text: str, input_format: str) -> crn.Crn:
    if input_format == names.CRN_FORMAT:
        return crn.parse_crn(text)
    if input_format == names.CHEM_FORMAT:
        return molecules.build_reaction_network(documents.parse_chemical_system(text))
    raise UsageError(f'a reaction network is needed, got a {input_format!r} document')


def report_violations(violations: Sequence[crn.Violation], diagnostics: Diagnostics) -> bool:
    """Print every violation; return True when none has error severity."""
    for violation in violations:
        diagnostics.violation(violation)
    return not crn.errors_only(violations)


def cmd_validate(args: argparse.Namespace, context: HypernestContext, diagnostics: Diagnostics) -> int:
    text = read_input(args.input)
    input_format = detect_format(args.input, text, args.format)
    if input_format == names.CRN_FORMAT:
        network = crn.parse_crn(text)
        if not report_violations(crn.validate(network), diagnostics):
            return EXIT_INVALID
        write_output(f'valid reaction network: {len(network.species)} species, '
                     f'{len(network.complexes)} complexes, {len(network.reactions)} reactions\n', args.out)
        return EXIT_OK
    if input_format == names.CHEM_FORMAT:
        system = documents.parse_chemical_system(text)
        system.check()
        write_output(f'valid chemical system: {len(system.molecules)} molecules, '
                     f'{len(system.reactions)} reactions\n', args.out)
        return EXIT_OK
    graph = canonical.from_canonical(text, check_acyclicity=context.check_acyclicity)
    graph.check_acyclicity()
    write_output(f'valid {classify(graph).name} hypergraph: {graph.order} nodes, {graph.size} hyperedges\n',
                 args.out)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace, context: HypernestContext, diagnostics: Diagnostics) -> int:
    text = read_input(args.input)
    graph = load_hypergraph(text, detect_format(args.input, text, args.format), context)
    write_output(classify(graph).name + '\n', args.out)
    return EXIT_OK


def cmd_matrix(args: argparse.Namespace, context: HypernestContext, diagnostics: Diagnostics) -> int:
    text = read_input(args.input)
    input_format = detect_format(args.input, text, args.format)
    if args.kind in names.CRN_MATRIX_KINDS:
        network = load_reaction_network(text, input_format)
        if not report_violations(crn.errors_only(crn.validate(network)), diagnostics):
            return EXIT_INVALID
        if args.kind == names.STOICH_COMPLEXES_MATRIX:
            output = tables.to_csv(matrices.stoichiometric_complexes(network))
        else:
            output = tables.to_csv(matrices.stoichiometric_reactions_signed(network))
    else:
        graph = load_hypergraph(text, input_format, context)
        if args.kind == names.INCIDENCE_MATRIX:
            output = tables.to_csv(matrices.incidence(graph))
        elif args.kind == names.SPLIT_MATRIX:
            output = tables.split_to_csv(matrices.directed_incidence_split(graph))
        else:
            output = tables.to_csv(matrices.directed_incidence_signed(graph))
    write_output(output, args.out)
    return EXIT_OK


def cmd_dot(args: argparse.Namespace, context: HypernestContext, diagnostics: Diagnostics) -> int:
    text = read_input(args.input)
    graph = load_hypergraph(text, detect_format(args.input, text, args.format), context)
    write_output(dot.to_dot(graph), args.out)
    return EXIT_OK


def _require_format(args: argparse.Namespace, expected: str) -> None:
    if args.format is not None and args.format != expected:
        raise UsageError(f'{args.command} reads {expected!r} input, --format {args.format!r} conflicts')


def cmd_crn_parse(args: argparse.Namespace, context: HypernestContext, diagnostics: Diagnostics) -> int:
    _require_format(args, names.CRN_FORMAT)
    network = crn.parse_crn(read_input(args.input))
    if not report_violations(crn.validate(network), diagnostics):
        return EXIT_INVALID
    if args.matrix == COMPLEXES_MATRIX:
        output = tables.to_csv(matrices.stoichiometric_complexes(network))
    elif args.matrix == REACTIONS_MATRIX:
        output = tables.to_csv(matrices.stoichiometric_reactions_signed(network))
    else:
        output = crn.render_crn(network)
    write_output(output, args.out)
    return EXIT_OK


def cmd_crn_hypergraph(args: argparse.Namespace, context: HypernestContext, diagnostics: Diagnostics) -> int:
    _require_format(args, names.CRN_FORMAT)
    network = crn.parse_crn(read_input(args.input))
    graph = finish_hypergraph(crn.to_reaction_hypergraph(network), context)
    write_output(canonical.to_canonical(graph), args.out)
    return EXIT_OK


def cmd_chem_build(args: argparse.Namespace, context: HypernestContext, diagnostics: Diagnostics) -> int:
    _require_format(args, names.CHEM_FORMAT)
    system = documents.parse_chemical_system(read_input(args.input))
    if args.level == REACTION_LEVEL:
        graph = crn.to_reaction_hypergraph(molecules.build_reaction_network(system))
    else:
        graph = molecules.build_chemical_hypergraph(system)
    write_output(canonical.to_canonical(finish_hypergraph(graph, context)), args.out)
    return EXIT_OK


EXAMPLES: Dict[str, Callable[[], str]] = {
    names.BENZENE_EXAMPLE: lambda: canonical.to_canonical(
        molecules.build_molecular_hypergraph(fixtures.benzene_fixture())),
    names.HYDROGENATION_EXAMPLE: lambda: documents.dump_chemical_system(fixtures.hydrogenation_fixture()),
    names.FEINBERG_EXAMPLE: fixtures.feinberg_fixture,
    names.METABOLIC_EXAMPLE: fixtures.metabolic_fixture,
    names.LESMIS_EXAMPLE: lambda: canonical.to_canonical(fixtures.lesmis_fixture()),
    names.CLINICAL_EXAMPLE: lambda: canonical.to_canonical(fixtures.clinical_notes_fixture()),
}


def cmd_example(args: argparse.Namespace, context: HypernestContext, diagnostics: Diagnostics) -> int:
    write_output(EXAMPLES[args.name](), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='hypernest',
                                     description='Build, check and export nested and directed hypergraphs.')
    parser.add_argument('--config', metavar='PATH', help='ini file with a [hypernest] section')
    parser.add_argument('-v', '--verbose', action='store_true', help='log debug messages to stderr')

    io_options = argparse.ArgumentParser(add_help=False)
    io_options.add_argument('--out', metavar='PATH', help='output file (default: standard output)')

    input_options = argparse.ArgumentParser(add_help=False, parents=[io_options])
    input_options.add_argument('input', nargs='?', help='input file; "-" or nothing reads standard input')
    input_options.add_argument('--format', choices=names.INPUT_FORMATS,
                               help='input format (default: by extension, then by content)')

    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    validate = subparsers.add_parser('validate', parents=[input_options], help='check a document')
    validate.set_defaults(handler=cmd_validate)

    classify_parser = subparsers.add_parser('classify', parents=[input_options], help='print the hypergraph class')
    classify_parser.set_defaults(handler=cmd_classify)

    matrix = subparsers.add_parser('matrix', parents=[input_options], help='print a matrix as CSV')
    matrix.add_argument('--kind', choices=[*names.HYPERGRAPH_MATRIX_KINDS, *names.CRN_MATRIX_KINDS],
                        default=names.INCIDENCE_MATRIX)
    matrix.set_defaults(handler=cmd_matrix)

    dot_parser = subparsers.add_parser('dot', parents=[input_options], help='print Graphviz DOT')
    dot_parser.set_defaults(handler=cmd_dot)

    crn_parse = subparsers.add_parser('crn-parse', parents=[input_options],
                                      help='parse and check a reaction network')
    crn_parse.add_argument('--matrix', choices=[COMPLEXES_MATRIX, REACTIONS_MATRIX],
                           help='print a stoichiometric matrix instead of the normalized network')
    crn_parse.set_defaults(handler=cmd_crn_parse)

    crn_hypergraph = subparsers.add_parser('crn-hypergraph', parents=[input_options],
                                           help='print the reaction hypergraph of a reaction network')
    crn_hypergraph.set_defaults(handler=cmd_crn_hypergraph)

    chem_build = subparsers.add_parser('chem-build', parents=[input_options],
                                       help='build the hypergraph of a chemical system')
    chem_build.add_argument('--level', choices=[MULTILEVEL_LEVEL, REACTION_LEVEL], default=MULTILEVEL_LEVEL)
    chem_build.set_defaults(handler=cmd_chem_build)

    example = subparsers.add_parser('example', parents=[io_options], help='print a bundled example')
    example.add_argument('name', choices=names.EXAMPLE_NAMES)
    example.set_defaults(handler=cmd_example)
    return parser


def configure_logging(level: int) -> None:
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s', force=True)


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        context = HypernestContext(args.config)
        diagnostics = Diagnostics(context.color)
        configure_logging(logging.DEBUG if args.verbose else context.log_level)
        logger.debug('containment re-checks: %s', context.check_acyclicity)
    except ConfigError as exc:
        Diagnostics(color=False).error(str(exc))
        return EXIT_USAGE

    logger.debug('running %s', args.command)
    try:
        return args.handler(args, context, diagnostics)
    except crn.CrnAxiomError as exc:
        for violation in exc.violations:
            diagnostics.violation(violation)
        return EXIT_INVALID
    except (HypergraphError, molecules.ChemSpecError, canonical.DanglingReferenceError) as exc:
        diagnostics.error(str(exc))
        return EXIT_INVALID
    except (crn.CrnSyntaxError, canonical.DocumentError, ConfigError, UsageError) as exc:
        diagnostics.error(str(exc))
        return EXIT_USAGE
    except OSError as exc:
        diagnostics.error(f'{exc.filename or "input"}: {exc.strerror or exc}')
        return EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == '__main__':
    main()

"""
The ``classic-lcs`` command line.

Each verb reads the concepts of the given concept files, or of
the standard input for ``-``, and prints its result on the
standard output. The exit code is 0 for a true or successful
result and 1 for a false result. Malformed input exits with 2,
total semantics on a concept with other constructors than
conjunction and same-as exits with 3 and a missing total
attribute lcs exits with 4. An internal error exits with 5 and an
``oracle-check`` whose search space outgrows the limit prints
unknown and exits with 6.
"""
import argparse
import json
import logging
import sys
import time
from . import __version__
from .automaton import is_infinite
from .canonical import canonical_graph
from .classification import (classify, print_classification)
from .concept import (in_s_fragment, print_concept)
from .constants import (DEF_MAX_DOMAIN, DEF_MODEL_LIMIT, PARTIAL, SEMANTICS,
                        TOTAL)
from .diagram import (automaton_to_dot, to_dot)
from .errors import (ConceptSyntaxError, FragmentError,
                     InconclusiveSearchError, LcsNotFoundError,
                     ReasonerError)
from .graph import (concept_to_graph, edge_count, graph_to_concept,
                    node_count)
from .interpretation import find_countermodel
from .parser import read_concepts
from .product import lcs_graph
from .subsumption import (check_subsumption, equivalent, is_inconsistent)
from .total import (configuration_automata, existence_witness, lcs_total_n,
                    lcs_total_n_graph)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_FRAGMENT = 3
EXIT_NO_LCS = 4
EXIT_INTERNAL = 5
EXIT_INCONCLUSIVE = 6

VERBS = ('parse', 'normalize', 'subsumes', 'equiv', 'sat', 'lcs',
         'lcs-exists', 'graph', 'oracle-check', 'classify')

# The verbs which accept total semantics on any concept.
SYNTACTIC_VERBS = ('parse', 'graph')


class UsageError(Exception):
    """The command arguments do not fit the verb."""
    pass


class _Result(object):
    """A verb result: the printed text, the exit code and the JSON fields."""

    def __init__(self, text, code=EXIT_TRUE, value=None, graph=None,
                 witness=None):
        self.text = text
        self.code = code
        self.value = text if value is None else value
        self.graph = graph
        self.witness = witness


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('paths', nargs='+', metavar='FILE',
                        help="concept file, or - for the standard input")
    common.add_argument('--semantics', choices=SEMANTICS, default=PARTIAL,
                        help="the attribute semantics (default partial)")
    common.add_argument('--dot', action='store_true',
                        help="print graphs in the DOT language")
    common.add_argument('--debug-automata', action='store_true',
                        help="print the total lcs automata on stderr")
    common.add_argument('--json', action='store_true',
                        help="print the result as a JSON object")
    common.add_argument('--max-domain', type=int, default=DEF_MAX_DOMAIN,
                        help="the largest countermodel domain size")
    common.add_argument('--limit', type=int, default=DEF_MODEL_LIMIT,
                        help="the largest interpretation space searched per domain size")
    common.add_argument('--html', action='store_true',
                        help="print the classification as HTML")
    common.add_argument('-v', '--verbose', action='store_true',
                        help="log progress")
    common.add_argument('-d', '--debug', action='store_true',
                        help="log details")

    parser = argparse.ArgumentParser(
        prog='classic-lcs',
        description="Subsumption and least common subsumers of CLASSIC"
                    " concept descriptions.")
    parser.add_argument('--version', action='version', version=__version__)
    verbs = parser.add_subparsers(dest='verb', metavar='VERB')
    verbs.required = True
    for verb in VERBS:
        verbs.add_parser(verb, parents=[common])
    return parser


def _configure_logging(args):
    if args.debug:
        level = logging.DEBUG
    elif args.verbose:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(stream=sys.stderr, level=level, force=True,
                        format='%(levelname)s %(message)s')


def _take(concepts, count, verb):
    if len(concepts) < count:
        raise UsageError("%s needs %d concepts, but the input has %d" %
                         (verb, count, len(concepts)))
    return concepts[:count]


def _boolean(value, graph=None):
    return _Result('true' if value else 'false',
                   EXIT_TRUE if value else EXIT_FALSE, value, graph)


def _parse(args, concepts):
    return _Result('\n'.join(print_concept(c) for c in concepts),
                   value=[print_concept(c) for c in concepts])


def _graph(args, concepts):
    graphs = [concept_to_graph(c) for c in concepts]
    dots = [to_dot(g, "C%d" % i) for i, g in enumerate(graphs, 1)]
    return _Result(''.join(dots).rstrip('\n'), value=dots, graph=graphs[0])


def _normalize(args, concepts):
    graphs = [canonical_graph(c) for c in concepts]
    if args.dot:
        texts = [to_dot(g, "C%d" % i).rstrip('\n')
                 for i, g in enumerate(graphs, 1)]
    else:
        texts = [print_concept(graph_to_concept(g, args.semantics))
                 for g in graphs]
    return _Result('\n'.join(texts), value=texts, graph=graphs[0])


def _subsumes(args, concepts):
    sub, sup = _take(concepts, 2, args.verb)
    return _boolean(check_subsumption(sub, sup, args.semantics),
                    canonical_graph(sub))


def _equiv(args, concepts):
    first, second = _take(concepts, 2, args.verb)
    return _boolean(equivalent(first, second, args.semantics),
                    canonical_graph(first))


def _sat(args, concepts):
    concept, = _take(concepts, 1, args.verb)
    return _boolean(not is_inconsistent(concept), canonical_graph(concept))


def _lcs(args, concepts):
    _take(concepts, 2, args.verb)
    if args.semantics == TOTAL:
        if args.debug_automata:
            _print_automata(concepts)
        graph = lcs_total_n_graph(concepts)
        result = graph_to_concept(graph, TOTAL)
    else:
        graph = lcs_graph(concepts)
        result = graph_to_concept(graph, PARTIAL)
    text = to_dot(graph, 'lcs').rstrip('\n') if args.dot \
        else print_concept(result)
    return _Result(text, value=print_concept(result), graph=graph)


def _lcs_exists(args, concepts):
    _take(concepts, 2, args.verb)
    if args.semantics == PARTIAL:
        return _boolean(True)
    if args.debug_automata:
        _print_automata(concepts)
    if len(concepts) == 2:
        witness = existence_witness(*concepts)
    else:
        try:
            lcs_total_n(concepts)
            witness = None
        except LcsNotFoundError as e:
            witness = e.witness
    result = _boolean(witness is None)
    if witness is not None:
        result.witness = str(witness)
    return result


def _print_automata(concepts):
    for config, automaton in configuration_automata(*concepts[:2]):
        name = "%s %s%s" % (config.side, config.a,
                            ' infinite' if is_infinite(automaton) else '')
        sys.stderr.write(automaton_to_dot(automaton, name))


def _oracle_check(args, concepts):
    sub, sup = _take(concepts, 2, args.verb)
    try:
        found = find_countermodel(sub, sup, args.max_domain, args.semantics,
                                  args.limit)
    except InconclusiveSearchError as e:
        return _Result("unknown\n%s" % e, EXIT_INCONCLUSIVE, None,
                       witness=str(e))
    if found is None:
        return _boolean(True)
    interpretation, element = found
    frame = interpretation.to_frame()
    text = "false\n%s\nwitness element: %d" % (frame.to_string(), element)
    return _Result(text, EXIT_FALSE, False,
                   witness="element %d of\n%s" % (element, frame.to_string()))


def _classify(args, concepts):
    frame = classify(concepts, semantics=args.semantics)
    if args.html:
        text = print_classification(frame, format='html').data
    else:
        text = print_classification(frame, format='text')
    value = {sub: [sup for sup in frame.columns if frame.at[sub, sup]]
             for sub in frame.index}
    return _Result(text, value=value)


COMMANDS = {
    'parse': _parse,
    'graph': _graph,
    'normalize': _normalize,
    'subsumes': _subsumes,
    'equiv': _equiv,
    'sat': _sat,
    'lcs': _lcs,
    'lcs-exists': _lcs_exists,
    'oracle-check': _oracle_check,
    'classify': _classify,
}


def run_cli(argv=None):
    """
    Runs the command line.

    :param argv: the arguments without the program name (default
        the process arguments)
    :return: the exit code
    """
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return e.code if e.code is not None else EXIT_TRUE
    _configure_logging(args)
    start = time.perf_counter()
    try:
        _, concepts = read_concepts(args.paths)
        if args.semantics == TOTAL and args.verb not in SYNTACTIC_VERBS:
            for concept in concepts:
                if not in_s_fragment(concept):
                    raise FragmentError("Total semantics needs conjunctions"
                                        " of same-as equalities: %s" %
                                        print_concept(concept))
        result = COMMANDS[args.verb](args, concepts)
    except (ConceptSyntaxError, UsageError, OSError) as e:
        print("classic-lcs: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except FragmentError as e:
        print("classic-lcs: %s" % e, file=sys.stderr)
        return EXIT_FRAGMENT
    except LcsNotFoundError as e:
        print("classic-lcs: %s" % e, file=sys.stderr)
        if e.witness is not None:
            print("classic-lcs: pumpable words: %s" %
                  '; '.join(' '.join(w) for w in e.witness.words),
                  file=sys.stderr)
        if args.json:
            print(json.dumps({'result': None, 'witness': str(e.witness)}))
        return EXIT_NO_LCS
    except ReasonerError as e:
        print("classic-lcs: internal error: %s" % e, file=sys.stderr)
        return EXIT_INTERNAL
    elapsed = (time.perf_counter() - start) * 1000
    if args.json:
        print(json.dumps(_json(result, elapsed)))
    else:
        print(result.text)
    return result.code


def _json(result, elapsed):
    content = {'result': result.value}
    if result.witness is not None:
        content['witness'] = result.witness
    stats = {'time_ms': round(elapsed, 3)}
    if result.graph is not None:
        stats['nodes'] = node_count(result.graph)
        stats['edges'] = edge_count(result.graph)
    content['stats'] = stats
    return content


def main():
    sys.exit(run_cli())


if __name__ == '__main__':
    main()

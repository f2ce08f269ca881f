"""
Certificate documents: search outputs that can be re-checked from scratch.

A certificate is a JSON object with at least "kind", "group" (null for
bipartite graphs), "verified" and "seed". verify_certificate never reads
the stored "verified" flag; it rebuilds the witness and checks it with
the same predicates the library uses, independently of how it was found.

Malformed documents (missing keys, wrong JSON types, unknown kinds,
unparseable group specs) raise CertificateError. Well-formed documents
whose witness is wrong produce a FAIL verdict naming the first problem.
"""
import collections
import json
import logging

from .absorbers import RMBG
from .absorbers import AbsorberInstance
from .absorbers import rmbg_verify
from .absorbers import verify_m_absorbs
from .exceptions import CertificateError
from .exceptions import DomainError
from .families import GoodFamilies
from .families import check_good_families
from .group import GroupSpec
from .rainbow import ColoredDigraphView
from .rainbow import Matching
from .rainbow import parse_view
from .search import SearchBudget
from .search import Verdict
from .sequencing import ColorSequence
from .solver import CycleType
from .solver import EquationSystem
from .solver import check_orthomorphism
from .solver import cycle_type
from .solver import matching_violations
from .zerosum import Partition

# Creates a ClickLogger
logger = logging.getLogger(__name__)

KINDS = ('orthomorphism', 'partition', 'matching', 'matchability', 'sequence',
         'good_families', 'absorber', 'rmbg')


class CertificateCheck(collections.namedtuple('CertificateCheck', ['verdict', 'problems'])):
    """ Verdict of verify_certificate plus every problem found, in order """

    @property
    def first_problem(self):
        return self.problems[0] if self.problems else None

    def to_dict(self):
        return {"verdict": self.verdict.label, "problems": list(self.problems)}


def _document(kind, group, payload, seed):
    doc = collections.OrderedDict()
    doc["group"] = None if group is None else str(group)
    doc["kind"] = kind
    doc.update(payload)
    doc["verified"] = False
    doc["seed"] = seed
    doc["verified"] = verify_certificate(doc).verdict is Verdict.PASS
    return doc


def orthomorphism_certificate(phi, seed=0):
    return _document('orthomorphism', phi.group, {
        "perm": list(phi.perm),
        "cycle_type": str(phi.cycle_type()),
    }, seed)


def partition_certificate(partition, seed=0):
    payload = partition.to_dict()
    del payload["group"]
    return _document('partition', partition.group, payload, seed)


def matching_certificate(matching, k, view=None, seed=0):
    """ A cycle factor of `view` (the whole group when None) """
    view = view or ColoredDigraphView(matching.group)
    return _document('matching', matching.group, {
        "k": k,
        "vertices": view.vertex_indices(),
        "colors": view.color_indices(),
        "edges": matching.to_list(),
    }, seed)


def matchability_certificate(system, group, vectors, seed=0):
    return _document('matchability', group, {
        "matrix": system.to_list(),
        "vectors": [list(v) for v in vectors],
    }, seed)


def sequence_certificate(sequence, mode, seed=0):
    return _document('sequence', sequence.group, {
        "mode": mode,
        "sequence": list(sequence.indices),
    }, seed)


def good_families_certificate(families, seed=0):
    payload = families.to_dict()
    del payload["group"]
    return _document('good_families', families.group, payload, seed)


def absorber_certificate(instance, k, seed=0):
    payload = instance.to_dict()
    del payload["group"]
    payload["k"] = k
    return _document('absorber', instance.group, payload, seed)


def rmbg_certificate(graph, samples, exhaustive_threshold, seed=0):
    payload = graph.to_dict()
    payload["samples"] = samples
    payload["exhaustive_threshold"] = exhaustive_threshold
    return _document('rmbg', None, payload, seed)


def _require(doc, *keys):
    missing = [key for key in keys if key not in doc]
    if missing:
        raise CertificateError("{} certificate lacks {}".format(doc.get("kind"), ', '.join(missing)))


def _int_list(value, name):
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise CertificateError("'{}' must be a list of integers".format(name))
    return value


def _in_range(indices, group):
    return all(0 <= i < group.order for i in indices)


def _check_orthomorphism(doc, group):
    _require(doc, "perm")
    perm = _int_list(doc["perm"], "perm")
    if len(perm) != group.order or not _in_range(perm, group):
        return ["perm is not a map from {} to itself".format(group)]
    verdict = check_orthomorphism(perm, group)
    if not verdict.ok:
        return [verdict.reason]
    if "cycle_type" in doc:
        try:
            claimed = CycleType.parse(doc["cycle_type"])
        except DomainError as e:
            raise CertificateError(str(e))
        actual = cycle_type(perm)
        if actual != claimed:
            return ["cycle type is {}, certificate claims {}".format(actual, claimed)]
    return []


def _check_partition(doc, group):
    _require(doc, "blocks", "block_sums")
    blocks = doc["blocks"]
    if not isinstance(blocks, list):
        raise CertificateError("'blocks' must be a list")
    blocks = [_int_list(b, "blocks") for b in blocks]
    sums = _int_list(doc["block_sums"], "block_sums")
    ground = _int_list(doc["elements"], "elements") if "elements" in doc else None
    if len(sums) != len(blocks):
        return ["{} blocks but {} block sums".format(len(blocks), len(sums))]
    if not _in_range(sums, group) or not all(_in_range(b, group) for b in blocks):
        return ["an index lies outside {}".format(group)]
    return Partition(group, blocks, sums, ground).violations()


def _check_matching(doc, group):
    _require(doc, "k", "edges")
    edges = doc["edges"]
    if not isinstance(edges, list) or not all(isinstance(e, dict) and "cycle" in e for e in edges):
        raise CertificateError("'edges' must be a list of objects with a 'cycle'")
    vertices = _int_list(doc["vertices"], "vertices") if "vertices" in doc else None
    colors = _int_list(doc["colors"], "colors") if "colors" in doc else None
    for field in [vertices, colors] + [_int_list(e["cycle"], "cycle") for e in edges]:
        if field is not None and not _in_range(field, group):
            return ["an index lies outside {}".format(group)]
    problems = []
    k = doc["k"]
    for position, edge in enumerate(edges):
        if len(edge["cycle"]) != k:
            problems.append("edge {} has length {}, expected {}".format(position, len(edge["cycle"]), k))
    if any(len(e["cycle"]) < 2 for e in edges):
        return problems + ["an edge has fewer than two vertices"]
    matching = Matching.from_list(group, edges)
    for position, (edge, stored) in enumerate(zip(matching, edges)):
        if "colors" in stored and sorted(c.index for c in edge.colors) != sorted(stored["colors"]):
            problems.append("edge {} lists colours that its cycle does not use".format(position))
    view = parse_view(group, vertices, colors)
    problems.extend(matching.violations(view, perfect=True))
    return problems


def _check_matchability(doc, group):
    _require(doc, "matrix", "vectors")
    try:
        system = EquationSystem(doc["matrix"])
    except (DomainError, TypeError, ValueError) as e:
        raise CertificateError("bad matrix: {}".format(e))
    vectors = doc["vectors"]
    if not isinstance(vectors, list):
        raise CertificateError("'vectors' must be a list")
    return matching_violations(system, group, [_int_list(v, "vectors") for v in vectors])


def _check_sequence(doc, group):
    _require(doc, "sequence")
    indices = _int_list(doc["sequence"], "sequence")
    mode = doc.get("mode", "cycle")
    if mode not in ('cycle', 'path'):
        raise CertificateError("unknown sequence mode '{}'".format(mode))
    if not _in_range(indices, group):
        return ["an entry lies outside {}".format(group)]
    sequence = ColorSequence.from_indices(group, indices)
    problems = []
    if not sequence.is_rainbow():
        problems.append("the sequence repeats a colour")
    if 0 in indices:
        problems.append("the sequence contains the identity")
    if mode == 'cycle' and (len(sequence) < 2 or not sequence.is_cycle_candidate()):
        problems.append("not a cycle-candidate")
    if mode == 'path' and not sequence.is_path_candidate():
        problems.append("not a path-candidate")
    return problems


def _check_good_families(doc, group):
    _require(doc, "k", "f", "s", "z_S", "q", "F", "S")
    tuples = [_int_list(t, "F/S") for t in list(doc["F"]) + list(doc["S"])]
    parameters = _int_list([doc["f"], doc["s"], doc["q"]], "f/s/q")
    if not _in_range(parameters, group) or not all(_in_range(t, group) for t in tuples):
        return ["an index lies outside {}".format(group)]
    try:
        families = GoodFamilies.from_dict(doc)
    except (KeyError, TypeError, ValueError) as e:
        raise CertificateError("bad families: {}".format(e))
    report = check_good_families(families, group, families.k)
    return ["{} fails".format(name) for name in report.failures()]


def _check_absorber(doc, group, budget):
    _require(doc, "k", "reservoir_vertices", "reservoir_colors", "family", "m")
    fields = [_int_list(doc["reservoir_vertices"], "reservoir_vertices"),
              _int_list(doc["reservoir_colors"], "reservoir_colors")]
    for member in doc["family"]:
        fields.append(_int_list(member.get("vertices", []), "family"))
        fields.append(_int_list(member.get("colors", []), "family"))
    if not all(_in_range(field, group) for field in fields):
        return ["an index lies outside {}".format(group)]
    try:
        instance = AbsorberInstance.from_dict(group, doc)
    except (KeyError, TypeError) as e:
        raise CertificateError("bad absorber: {}".format(e))
    except DomainError as e:
        return [str(e)]
    verdict = verify_m_absorbs(instance, ColoredDigraphView(group), doc["k"], budget)
    if verdict.verdict is Verdict.UNKNOWN:
        return None
    return [] if verdict.verdict is Verdict.PASS else [verdict.reason]


def _check_rmbg(doc):
    _require(doc, "h", "beta", "edges")
    try:
        graph = RMBG.from_dict(doc)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise CertificateError("bad graph: {}".format(e))
    verdict = rmbg_verify(graph, doc.get("samples", 1000), doc.get("seed", 0),
                          doc.get("exhaustive_threshold", 100000))
    return [] if verdict.verdict is Verdict.PASS else [verdict.reason]


def verify_certificate(doc, budget=None):
    """ Re-verifies a certificate document from scratch.

    Args:
        doc (dict): the parsed certificate.
        budget (SearchBudget): caps for the checks that search (absorbers).

    Returns:
        CertificateCheck: PASS, FAIL with the violated invariants, or
            UNKNOWN when a bounded check ran out of budget.

    Raises:
        CertificateError: if the document does not follow the schema.
    """
    if not isinstance(doc, dict):
        raise CertificateError("a certificate must be a JSON object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise CertificateError("unknown certificate kind '{}'".format(kind))
    budget = budget or SearchBudget()

    try:
        if kind == 'rmbg':
            problems = _check_rmbg(doc)
        else:
            _require(doc, "group")
            try:
                group = GroupSpec.parse(doc["group"])
            except DomainError as e:
                raise CertificateError(str(e))
            checker = {
                'orthomorphism': _check_orthomorphism,
                'partition': _check_partition,
                'matching': _check_matching,
                'matchability': _check_matchability,
                'sequence': _check_sequence,
                'good_families': _check_good_families,
            }.get(kind)
            problems = checker(doc, group) if checker else _check_absorber(doc, group, budget)
    except (KeyError, TypeError, AttributeError) as e:
        raise CertificateError("malformed {} certificate: {}".format(kind, e))

    if problems is None:
        return CertificateCheck(Verdict.UNKNOWN, ["budget exhausted"])
    verdict = Verdict.FAIL if problems else Verdict.PASS
    logger.debug("%s certificate: %s", kind, verdict.label)
    return CertificateCheck(verdict, list(problems))


def dumps(doc):
    """ Canonical text of a document: keys in insertion order, two-space indent """
    return json.dumps(doc, indent=2, separators=(',', ': '))


def load_certificate(fp):
    """ Reads a certificate from an open text file.

    Raises:
        CertificateError: if the text is not JSON.
    """
    try:
        return json.load(fp)
    except ValueError as e:
        raise CertificateError("not a JSON document: {}".format(e))

"""
Command-line front end.

Inputs are ``.pcc`` paths or fixture references such as ``@polygon:5``.
Exit codes: 0 pass, 1 property false or counterexample found, 2 invalid
input, 3 budget exceeded.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from polycell.core.config import settings
from polycell.core.errors import BadParameter, PolycellError
from polycell.corpus.registry import get_all_fixtures, resolve_reference
from polycell.formats import pcc
from polycell.formats.dot import block_graph_dot, skeleton_dot
from polycell.models.homology import homology_h1, simply_connected_necessary
from polycell.models.multigraph import components, is_bipartite, is_connected, is_r_thin
from polycell.models.polycomplex import (
    Complex,
    euler_characteristic,
    has_surface_structure,
    is_elementary,
    is_ordinary,
    is_polygonal,
    is_simple_complex,
    link,
)
from polycell.services.blocks import block_graph, face_blocks_by_label, face_blocks_intrinsic
from polycell.services.complex_products import (
    as_complex,
    count_complex_homomorphisms,
    product_chain,
)
from polycell.services.factorization import complex_prime_factorization, graph_prime_factorization
from polycell.services.graph_products import count_graph_homomorphisms
from polycell.services.symmetry import (
    complex_automorphism_group,
    graph_automorphism_group,
    is_arc_transitive,
    is_edge_transitive,
    is_flag_transitive,
    is_vertex_transitive,
)
from polycell.suites.conjecture import FAMILIES, run_conjecture
from polycell.suites.registry import SUITES, list_suites
from polycell.suites.runner import run_suite

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FALSE = 1


def load_input(reference: str) -> Complex:
    if reference.startswith("@"):
        return as_complex(resolve_reference(reference))
    path = Path(reference)
    if not path.exists():
        raise BadParameter(f"no such document {reference!r}")
    return pcc.load(path)


def write_output(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info(f"wrote {out}")
    else:
        sys.stdout.write(text)


def _yes(value: bool) -> str:
    return "yes" if value else "no"


def cmd_product(args) -> int:
    chain = product_chain([load_input(r) for r in args.inputs])
    write_output(pcc.dumps(chain.complex), args.out)
    return EXIT_PASS


def cmd_build(args) -> int:
    write_output(pcc.dumps(load_input(args.fixture)), args.out)
    return EXIT_PASS


def cmd_link(args) -> int:
    x = load_input(args.input)
    graph = link(x, args.vertex).graph
    lines = [f"vertices {len(graph.vertices)}: {' '.join(graph.vertices)}"]
    lines += [f"edge {e.id} {e.ends[0]} {e.ends[1]}" for e in graph.edges]
    write_output("\n".join(lines) + "\n", args.out)
    return EXIT_PASS


def cmd_euler(args) -> int:
    write_output(f"{euler_characteristic(load_input(args.input))}\n", args.out)
    return EXIT_PASS


def cmd_aut(args) -> int:
    x = load_input(args.input)
    group = graph_automorphism_group(x.skeleton) if args.skeleton else complex_automorphism_group(x)
    lines = [f"order {group.order}", f"generators {len(group.generators)}"]
    for kind in ("v", "d", "f", "fl"):
        orbits = group.orbits(kind)
        if orbits:
            lines.append(f"{kind} orbits {len(orbits)}")
    if args.generators:
        lines += [group.cycle_notation(g) for g in group.generators]
    write_output("\n".join(lines) + "\n", args.out)
    return EXIT_PASS


def cmd_flags(args) -> int:
    x = load_input(args.input)
    lines = [f"flags {len(x.flags)}", f"flag-transitive {_yes(is_flag_transitive(x))}"]
    if args.list:
        lines += [f"{flag.face} {flag.position} {flag.side}" for flag in x.flags]
    write_output("\n".join(lines) + "\n", args.out)
    return EXIT_PASS


def cmd_check(args) -> int:
    x = load_input(args.input)
    g = x.skeleton
    betti, torsion = homology_h1(x)
    rows = [
        ("vertices", len(g.vertices)),
        ("edges", len(g.edges)),
        ("faces", len(x.faces)),
        ("components", len(components(g))),
        ("connected", _yes(is_connected(g))),
        ("bipartite", _yes(is_bipartite(g))),
        ("simple skeleton", _yes(g.is_simple)),
        ("r-thin", _yes(is_r_thin(g))),
        ("polygonal", _yes(is_polygonal(x))),
        ("simple complex", _yes(is_simple_complex(x))),
        ("elementary", _yes(is_elementary(x))),
        ("ordinary", _yes(is_ordinary(x))),
        ("surface structure", _yes(has_surface_structure(x))),
        ("euler characteristic", euler_characteristic(x)),
        ("betti_1", betti),
        ("torsion", " ".join(map(str, torsion)) or "none"),
        ("simply connected test", simply_connected_necessary(x).value),
    ]
    if args.symmetry:
        rows += [
            ("vertex-transitive", _yes(is_vertex_transitive(g))),
            ("edge-transitive", _yes(is_edge_transitive(g))),
            ("arc-transitive", _yes(is_arc_transitive(g))),
            ("flag-transitive", _yes(is_flag_transitive(x))),
        ]
    write_output("".join(f"{name}: {value}\n" for name, value in rows), args.out)
    return EXIT_PASS


def cmd_factor(args) -> int:
    x = load_input(args.input)
    if args.graph:
        result = graph_prime_factorization(x.skeleton, args.graph_class)
        factors = [as_complex(f) for f in result.factors]
    else:
        result = complex_prime_factorization(x)
        factors = list(result.factors)
    if not result.verify():
        logger.error("factorization certificate failed to verify")
        return EXIT_FALSE
    text = "".join(f"# factor {k}\n{pcc.dumps(f)}" for k, f in enumerate(factors))
    write_output(text, args.out)
    return EXIT_PASS


def cmd_blocks(args) -> int:
    if args.intrinsic:
        x = load_input(args.inputs[0])
        blocks = face_blocks_intrinsic(x, args.intrinsic)
        lines = [f"block {k}: {' '.join(sorted(b.members))}" for k, b in enumerate(blocks)]
    else:
        chain = product_chain([load_input(r) for r in args.inputs])
        blocks = face_blocks_by_label(chain)
        lines = [
            f"block ({','.join(b.generators)}) parity {''.join(map(str, b.parity))}: "
            f"{len(b)} faces"
            for b in blocks
        ]
    write_output("\n".join(lines) + "\n", args.out)
    return EXIT_PASS


def cmd_homcount(args) -> int:
    source, target = load_input(args.source), load_input(args.target)
    if args.complex:
        count = count_complex_homomorphisms(source, target)
    else:
        count = count_graph_homomorphisms(source.skeleton, target.skeleton)
    write_output(f"{count}\n", args.out)
    return EXIT_PASS


def cmd_dot(args) -> int:
    if args.blocks:
        text = block_graph_dot(block_graph([load_input(r) for r in args.inputs]))
    else:
        text = skeleton_dot(product_chain([load_input(r) for r in args.inputs]).complex)
    write_output(text, args.out)
    return EXIT_PASS


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.seed, args.trials, args.workers, args.timing)
    write_output(report.to_json() + "\n", args.out)
    logger.info(f"suite {args.suite}: {report.status}")
    return EXIT_PASS if report.ok else EXIT_FALSE


def cmd_conjecture(args) -> int:
    report = run_conjecture(args.conjecture, args.max_size, args.seed, args.workers, args.timing)
    write_output(report.to_json() + "\n", args.out)
    return EXIT_FALSE if report.counterexample else EXIT_PASS


def cmd_suites(args) -> int:
    lines = [f"{suite.suite_id}\t{suite.title}" for suite in list_suites()]
    if args.fixtures:
        lines += [f"\t{f.description}" for f in get_all_fixtures().values()]
    write_output("\n".join(lines) + "\n", args.out)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycell",
        description="Tensor products, links, symmetry and factorization of polygonal complexes",
    )
    parser.add_argument("--log-level", default=settings.LOG_LEVEL)
    parser.add_argument("--budget", type=int, help="search node budget for this run")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--out", help="write the result to this file instead of stdout")
        p.add_argument(
            "--budget", type=int, default=argparse.SUPPRESS, help="search node budget for this run"
        )
        p.set_defaults(handler=handler)
        return p

    p = command("product", cmd_product, "tensor product of two or more inputs")
    p.add_argument("inputs", nargs="+")

    p = command("build", cmd_build, "write a fixture as a document")
    p.add_argument("fixture")

    p = command("link", cmd_link, "link graph at a vertex")
    p.add_argument("input")
    p.add_argument("vertex")

    p = command("euler", cmd_euler, "Euler characteristic")
    p.add_argument("input")

    p = command("aut", cmd_aut, "automorphism group order and orbits")
    p.add_argument("input")
    p.add_argument("--skeleton", action="store_true", help="use the 1-skeleton only")
    p.add_argument("--generators", action="store_true", help="print generators in cycle notation")

    p = command("flags", cmd_flags, "flags and flag-transitivity")
    p.add_argument("input")
    p.add_argument("--list", action="store_true")

    p = command("check", cmd_check, "structural predicates and invariants")
    p.add_argument("input")
    p.add_argument("--symmetry", action="store_true", help="also compute transitivity")

    p = command("factor", cmd_factor, "prime factorization")
    p.add_argument("input")
    p.add_argument("--graph", action="store_true", help="factor the skeleton as a graph")
    p.add_argument("--class", dest="graph_class", choices=("S", "S0"), default="S")

    p = command("blocks", cmd_blocks, "face blocks of a product of the inputs")
    p.add_argument("inputs", nargs="+")
    p.add_argument(
        "--intrinsic", type=int, metavar="M", help="blocks of one complex with M factors"
    )

    p = command("homcount", cmd_homcount, "count homomorphisms")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--complex", action="store_true", help="count complex homomorphisms")

    p = command("dot", cmd_dot, "DOT export of a skeleton or block graph")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--blocks", action="store_true", help="export the block graph of the factors")

    for name, handler, help_text in (
        ("verify", cmd_verify, "run a verification suite"),
        ("conjecture", cmd_conjecture, "bounded counterexample search"),
    ):
        p = command(name, handler, help_text)
        if name == "verify":
            p.add_argument("suite", choices=sorted(SUITES))
            p.add_argument("--trials", type=int, default=settings.DEFAULT_TRIALS)
        else:
            p.add_argument("conjecture", choices=("h11", "h12"))
            p.add_argument("--max-size", choices=sorted(FAMILIES), default="small")
        p.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
        p.add_argument("--workers", type=int, default=settings.SUITE_WORKERS)
        p.add_argument("--timing", action="store_true", help="include wall-clock time")

    p = command("suites", cmd_suites, "list verification suites")
    p.add_argument("--fixtures", action="store_true", help="also list fixtures")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    if args.budget is not None:
        settings.SEARCH_NODE_BUDGET = args.budget
    try:
        return args.handler(args)
    except PolycellError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code

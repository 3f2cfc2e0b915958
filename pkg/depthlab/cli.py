"""Command line interface: ``depth``, ``betti``, ``linquot``, ``toric``, ``construct`` and ``sweep``.

Every command fills a :py:class:`~depthlab.reports.Report`. The exit status is ``2`` after an error, ``1`` when a
comparison row fails and ``0`` otherwise; the report is written in all three cases.
"""

import argparse
import concurrent.futures
import contextlib
import io
import logging
import pathlib
import random
import sys
import time

from pydantic import ValidationError

from . import logs
from ._config import RunConfig
from ._exceptions import DepthLabException, InvalidSpecError, ResourceLimitError
from ._misc import inputs_digest, parse_int_list
from ._version import __version__
from .constructions import (
    DepthFunctionSpec,
    Graph,
    Poset,
    all_posets,
    antichain_poset,
    chain_poset,
    delta,
    edge_ideal,
    hp_ideal,
    net_graph,
    random_chordal_complement_graph,
    rank,
)
from .constructions.families import Prediction, VeroneseSpec, predicted_sqfree_veronese
from .formats import format_groebner, format_ideal, parse_graph, parse_ideal, parse_ordering, parse_poset
from .lab import DepthLab
from .monomials import MonomialIdeal, generating_degree, is_equigenerated, is_squarefree, krull_dim_quotient, power
from .oracle import DepthProfile
from .rees import YOrder, edge_ideal_y_order, initial_ideal, rees_projection_is_zero
from .reports import ComparisonRow, Report

LOGGER = logging.getLogger("depthlab.cli")

CONSTRUCT_FAMILIES = (
    "veronese",
    "sqfree-veronese",
    "edge",
    "poset",
    "decreasing",
    "staircase",
    "nonmonotone",
    "prescribed",
)
SWEEP_FAMILIES = ("sqfree-veronese", "veronese", "posets", "chordal-edges", "staircase")
STAIRCASE_SWEEP_SPECS = ("0,1,2", "1,2", "0,2")


class _Inputs:
    """Reads input files and remembers their contents for the report digest."""

    def __init__(self):
        self.texts: list[str] = []

    def read(self, path: str) -> str:
        text = pathlib.Path(path).read_text(encoding="utf-8")
        self.texts.append(text)
        return text

    @property
    def digest(self) -> str:
        return inputs_digest(self.texts) if self.texts else ""


def _depth_rows(report: Report, prediction: Prediction, observed: list[int]) -> None:
    for k, value in enumerate(observed, start=1):
        if k > len(prediction.profile) and prediction.tail is None:
            break
        relation = "" if prediction.kind == "exact" else ">= "
        report.add(
            ComparisonRow.check(
                f"depth S/I^{k}",
                prediction.holds(k, value),
                f"{relation}{prediction.at(k)}",
                value,
                (prediction.citation, "oracle"),
            )
        )


def _profile_results(report: Report, lab: DepthLab, i: MonomialIdeal, kmax: int | None = None) -> list[int]:
    profile = lab.oracle.profile(i, kmax)
    report.results["profile"] = list(profile.values)
    if profile.stable_tail:
        k0, value = profile.stable_tail
        report.results["stabilization"] = f"observed constant {value} from k={k0} (not certified)"
    else:
        report.results["stabilization"] = "not observed"
    return list(profile.values)


# --- CLI command handlers ---


def _depth_command(args: argparse.Namespace, lab: DepthLab, report: Report, inputs: _Inputs) -> None:
    i = parse_ideal(inputs.read(args.file))
    report.results["n"] = i.n
    report.results["generators"] = len(i.gens)
    report.results["dim"] = krull_dim_quotient(i)
    values = _profile_results(report, lab, i)
    if args.expect:
        expected = parse_int_list(args.expect)
        for k, value in enumerate(values, start=1):
            if k <= len(expected):
                report.add(ComparisonRow.compare(f"depth S/I^{k}", expected[k - 1], value, ("expected", "oracle")))
    if is_equigenerated(i):
        report.results["analytic_spread"] = _spread_rows(report, lab, i, values)


def _spread_rows(report: Report, lab: DepthLab, i: MonomialIdeal, values: list[int]) -> int:
    check = lab.toric.spread_check(i, DepthProfile.from_values(values))
    report.add(
        ComparisonRow.check(
            "min depth S/I^k <= n - spread", check.min_ok, f"<= {check.bound}", check.min_depth, ("spread", "oracle")
        )
    )
    report.add(
        ComparisonRow.check(
            "last depth S/I^k <= n - spread", check.tail_ok, f"<= {check.bound}", check.tail, ("spread", "oracle")
        )
    )
    return check.spread


def _betti_command(args: argparse.Namespace, lab: DepthLab, report: Report, inputs: _Inputs) -> None:
    i = parse_ideal(inputs.read(args.file))
    if args.power:
        i = power(i, args.power)
    table = lab.oracle.betti(i)
    report.results["power"] = args.power or 1
    report.results["projdim"] = table.projdim
    report.results["depth"] = i.n - table.projdim - 1
    if lab.config.output_format == "doc":
        report.results["betti"] = table.to_document()
    else:
        report.results["betti"] = table.format_text()


def _linquot_command(args: argparse.Namespace, lab: DepthLab, report: Report, inputs: _Inputs) -> None:
    k = args.power or 1
    poset: Poset | None = None
    if args.poset:
        poset = parse_poset(inputs.read(args.poset))
        i = power(hp_ideal(poset, lab.config.caps.poset_ideals), k)
    elif args.file:
        i = parse_ideal(inputs.read(args.file))
        if args.power:
            i = power(i, k)
    else:
        raise InvalidSpecError("input", info="give an ideal file or --poset")
    report.results["generators"] = len(i.gens)

    if args.order == "search":
        cert = lab.linquot.search(i)
        if cert is None:
            report.results["result"] = "no linear quotients order"
            return
    elif args.order == "revlex":
        cert = lab.linquot.revlex(i)
    elif args.order == "hp":
        if poset is None:
            raise InvalidSpecError("--order hp needs --poset")
        cert = lab.linquot.poset_power(poset, k)
        if cert.valid:
            value, witness = lab.construct.delta(poset, k)
            report.results["delta"] = value
            report.results["delta_witness"] = witness.format(poset)
            report.add(ComparisonRow.compare(f"q(H_P^{k})", value, cert.q, ("delta", "certificate")))
    else:
        cert = lab.linquot.verify(i, parse_ordering(inputs.read(args.order), i.ambient))

    report.results["certificate"] = cert.format_text(i.ambient.names)
    if not cert.valid:
        step, _ = cert.violation
        report.add(ComparisonRow.check("linear quotients", False, "valid", f"violation at step {step}"))
        return
    report.results["q"] = cert.q
    formula = lab.linquot.depth(cert, i.n)
    report.add(ComparisonRow.compare("depth S/I", formula, lab.oracle.depth(i), ("linear quotients", "oracle")))


def _is_edge_ideal(i: MonomialIdeal) -> bool:
    return bool(i.gens) and is_squarefree(i) and generating_degree(i) == 2


def _toric_command(args: argparse.Namespace, lab: DepthLab, report: Report, inputs: _Inputs) -> None:
    i = parse_ideal(inputs.read(args.file))
    priority: tuple[int, ...] = ()
    edges = _is_edge_ideal(i)
    if args.vertex_order:
        priority = edge_ideal_y_order(i, [v - 1 for v in parse_int_list(args.vertex_order)])
    elif edges:
        priority = edge_ideal_y_order(i, range(i.n))
    y_order = args.y_order or (YOrder.REVLEX.value if args.vertex_order or edges else YOrder.LEX.value)
    gb = lab.toric.groebner(i, YOrder(y_order), priority)
    report.results["order"] = gb.order.describe()
    report.results["kernel_size"] = len(gb)
    report.results["initial_generators"] = len(initial_ideal(gb).gens)
    report.results["statistics"] = dict(gb.stats)
    report.results["basis"] = format_groebner(gb, i)
    holds = lab.toric.x_condition(gb)
    if args.x_condition or args.bounds or args.verify:
        report.results["x_condition"] = holds
    if args.verify:
        zero = all(rees_projection_is_zero(i, g) for g in gb)
        report.add(ComparisonRow.check("kernel maps to zero", zero, True, zero, ("basis", "substitution")))
    if not holds:
        if args.bounds:
            report.results["bounds"] = "x-condition fails, no bounds"
        return
    if args.bounds or args.verify:
        bounds = lab.toric.bounds(gb)
        reported = [bounds.reported(k) for k in range(1, lab.config.kmax + 1)]
        report.results["bounds"] = reported
        report.results["limit_bound"] = bounds.reported_limit
        if args.verify:
            values = _profile_results(report, lab, i)
            for k, (bound, value) in enumerate(zip(reported, values), start=1):
                report.add(
                    ComparisonRow.check(f"depth S/I^{k}", value >= bound, f">= {bound}", value, ("bound", "oracle"))
                )
    if args.verify:
        for k in range(1, lab.config.kmax + 1):
            cert = lab.toric.standard_certificate(i, k, gb)
            report.add(
                ComparisonRow.check(
                    f"standard order of I^{k} has linear quotients",
                    cert.valid,
                    True,
                    cert.valid,
                    ("x-condition", "certificate"),
                )
            )


def _construct(args: argparse.Namespace, lab: DepthLab, inputs: _Inputs) -> tuple[MonomialIdeal, Prediction | None]:
    family = args.family
    if family == "veronese":
        if args.n is None or args.d is None or not args.bounds:
            raise InvalidSpecError("--n, --d and --bounds")
        return lab.construct.veronese(args.n, args.d, parse_int_list(args.bounds))
    if family == "sqfree-veronese":
        if args.n is None or args.d is None:
            raise InvalidSpecError("--n and --d")
        return lab.construct.sqfree_veronese(args.n, args.d)
    if family == "edge":
        graph = net_graph() if args.net or not args.file else parse_graph(inputs.read(args.file))
        order = [v - 1 for v in parse_int_list(args.vertex_order)] if args.vertex_order else None
        return lab.construct.edge(graph, order)
    if family == "poset":
        if args.chain:
            poset = chain_poset(args.chain)
        elif args.antichain:
            poset = antichain_poset(args.antichain)
        elif args.file:
            poset = parse_poset(inputs.read(args.file))
        else:
            raise InvalidSpecError("--file, --chain or --antichain")
        return lab.construct.poset(poset)
    if family in ("decreasing", "staircase"):
        if not args.f:
            raise InvalidSpecError("--f")
        if family == "decreasing":
            return lab.construct.decreasing(args.f)
        return lab.construct.staircase(args.f)
    if family == "nonmonotone":
        return lab.construct.nonmonotone()
    if args.d is None or args.t is None:
        raise InvalidSpecError("--d and --t")
    return lab.construct.prescribed(args.d, args.t)


def _construct_command(args: argparse.Namespace, lab: DepthLab, report: Report, inputs: _Inputs) -> None:
    i, prediction = _construct(args, lab, inputs)
    ideal_text = format_ideal(i, comment=f"family: {args.family}")
    report.results["family"] = args.family
    report.results["n"] = i.n
    report.results["generators"] = len(i.gens)
    if prediction is not None:
        report.results["prediction"] = prediction.model_dump(mode="json")
        if prediction.caveat:
            LOGGER.warning("%s", prediction.caveat)
    if args.out:
        ideal_path = pathlib.Path(f"{args.out}.ideal")
        ideal_path.write_text(ideal_text, encoding="utf-8")
        report.results["ideal_file"] = str(ideal_path)
        if prediction is not None:
            prediction_path = pathlib.Path(f"{args.out}.prediction.json")
            prediction_path.write_text(prediction.model_dump_json(indent=2) + "\n", encoding="utf-8")
            report.results["prediction_file"] = str(prediction_path)
    else:
        report.results["ideal"] = ideal_text
    if args.verify:
        values = _profile_results(report, lab, i)
        if prediction is not None:
            _depth_rows(report, prediction, values)


# --- sweeps ---


def _sweep_tasks(family: str, config: RunConfig, count: int, nmax: int | None) -> list[dict]:
    rng = random.Random(config.seed)
    if family == "sqfree-veronese":
        top = nmax or 6
        return [{"n": n, "d": d} for n in range(3, top + 1) for d in range(2, n)]
    if family == "veronese":
        tasks = []
        while len(tasks) < count:
            n = rng.randint(2, nmax or 5)
            d = rng.randint(2, 3 if n > 4 else 4)
            bounds = sorted(rng.randint(1, d) for _ in range(n))
            if d <= sum(bounds) <= d + n - 1:
                tasks.append({"n": n, "d": d, "bounds": bounds})
        return tasks
    if family == "posets":
        return [
            {"elements": p.n, "covers": [list(c) for c in p.cover_relations()]}
            for n in range(1, (nmax or 4) + 1)
            for p in all_posets(n)
        ]
    if family == "chordal-edges":
        tasks = []
        for _ in range(count):
            g = random_chordal_complement_graph(rng.randint(3, nmax or 6), rng)
            tasks.append({"vertices": g.n, "edges": [list(e) for e in g.sorted_edges()]})
        return tasks
    return [{"f": f} for f in STAIRCASE_SWEEP_SPECS]


def _sweep_instance(job: tuple[str, dict, dict]) -> list[dict]:
    """Runs one sweep instance; module level so that worker processes can pickle it."""
    family, task, config_data = job
    lab = DepthLab(RunConfig.model_validate(config_data))
    kmax = lab.config.kmax
    rows: list[ComparisonRow] = []
    if family == "sqfree-veronese":
        n, d = task["n"], task["d"]
        i, _ = lab.construct.sqfree_veronese(n, d)
        values = lab.oracle.profile(i, kmax).values
        for k, value in enumerate(values, start=1):
            rows.append(
                ComparisonRow.compare(f"I_{n},{d} k={k}", predicted_sqfree_veronese(n, d, k), value)
            )
        for k in range(1, kmax + 1):
            cert = lab.linquot.revlex(power(i, k))
            rows.append(
                ComparisonRow.check(
                    f"I_{n},{d} k={k} revlex",
                    cert.valid and n - cert.q - 1 == predicted_sqfree_veronese(n, d, k),
                    predicted_sqfree_veronese(n, d, k),
                    n - cert.q - 1 if cert.valid else "no certificate",
                    ("formula", "linear quotients"),
                )
            )
    elif family == "veronese":
        spec = VeroneseSpec(task["n"], task["d"], tuple(task["bounds"]))
        i, prediction = lab.construct.veronese(spec.n, spec.d, spec.bounds)
        label = f"veronese n={spec.n} d={spec.d} e={list(spec.bounds)}"
        rows.append(ComparisonRow.compare(label, prediction.at(1), lab.oracle.depth(i)))
        cert = lab.linquot.revlex(i)
        rows.append(
            ComparisonRow.compare(
                f"{label} revlex",
                prediction.at(1),
                lab.linquot.depth(cert, i.n) if cert.valid else "no certificate",
                ("formula", "linear quotients"),
            )
        )
    elif family == "posets":
        p = Poset(task["elements"], [tuple(c) for c in task["covers"]])
        label = f"poset n={p.n} covers={task['covers']}"
        top = rank(p) + 2
        hp = hp_ideal(p, lab.config.caps.poset_ideals)
        values = lab.oracle.profile(hp, top).values
        deltas = [delta(p, k, lab.config.caps.delta)[0] for k in range(1, top + 1)]
        for k, value in enumerate(values, start=1):
            rows.append(ComparisonRow.compare(f"{label} k={k}", 2 * p.n - deltas[k - 1] - 1, value))
        growth = deltas[: rank(p) + 1]
        rows.append(
            ComparisonRow.check(
                f"{label} delta",
                all(a < b for a, b in zip(growth, growth[1:])) and deltas[rank(p)] == p.n and deltas[-1] == p.n,
                "strictly increasing to n",
                deltas,
                ("formula", "search"),
            )
        )
    elif family == "chordal-edges":
        g = Graph(task["vertices"], [tuple(e) for e in task["edges"]])
        i = edge_ideal(g)
        label = f"edges n={g.n} {[[a + 1, b + 1] for a, b in g.sorted_edges()]}"
        profile = lab.oracle.profile(i, kmax)
        linear = all(lab.oracle.has_linear_resolution(power(i, k)) for k in range(1, kmax + 1))
        rows.append(ComparisonRow.check(f"{label} linear", linear, True, linear, ("chordal complement", "oracle")))
        rows.append(
            ComparisonRow.check(
                f"{label} non-increasing",
                profile.is_non_increasing(),
                "non-increasing",
                list(profile.values),
                ("linear powers", "oracle"),
            )
        )
        rows.append(
            ComparisonRow.check(
                f"{label} bounded by depth S/I",
                all(v <= profile[1] for v in profile.values),
                f"<= {profile[1]}",
                list(profile.values),
                ("squarefree", "oracle"),
            )
        )
    else:
        spec = DepthFunctionSpec.parse(task["f"], increasing=True)
        i, prediction = lab.construct.staircase(spec)
        top = max(kmax, spec.stabilization())
        values = lab.oracle.profile(i, top).values
        for k, value in enumerate(values, start=1):
            rows.append(ComparisonRow.compare(f"staircase f={task['f']} k={k}", prediction.at(k), value))
    return [row.model_dump(mode="json") for row in rows]


def _sweep_command(args: argparse.Namespace, lab: DepthLab, report: Report, inputs: _Inputs) -> None:
    tasks = _sweep_tasks(args.family, lab.config, args.count, args.nmax)
    config_data = lab.config.model_dump(mode="json")
    jobs = [(args.family, task, config_data) for task in tasks]
    LOGGER.info("sweep %s: %d instances, %d workers", args.family, len(jobs), args.workers)
    if args.workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.workers) as executor:
            results = list(executor.map(_sweep_instance, jobs))
    else:
        results = [_sweep_instance(job) for job in jobs]
    for rows in results:
        for row in rows:
            report.add(ComparisonRow.model_validate(row))
    report.results["family"] = args.family
    report.results["instances"] = len(tasks)
    report.results["rows"] = sum(len(rows) for rows in results)


# --- parser ---


def _common_args() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--field", help="homology coefficients: q or p:<prime>")
    parent.add_argument("--kmax", type=int, help="number of powers")
    parent.add_argument("--format", dest="output_format", choices=("text", "doc"), help="report format")
    parent.add_argument("--seed", type=int, help="seed of randomized sweeps")
    for cap in ("lattice", "buchberger", "delta", "search", "poset-ideals"):
        parent.add_argument(f"--cap-{cap}", type=int, dest=f"cap_{cap.replace('-', '_')}", metavar="N")
    parent.add_argument("--output", help="write the report to this file instead of stdout")
    parent.add_argument("-v", "--verbose", action="count", default=0, help="collect log lines, twice for debug")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="depthlab", description="Depth functions of powers of monomial ideals.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _common_args()
    subparsers = parser.add_subparsers(dest="command", required=True)

    depth = subparsers.add_parser("depth", parents=[common], help="depth profile of an ideal file")
    depth.add_argument("file")
    depth.add_argument("--expect", help="expected profile, comma separated")
    depth.set_defaults(func=_depth_command)

    betti = subparsers.add_parser("betti", parents=[common], help="Betti table of an ideal or one of its powers")
    betti.add_argument("file")
    betti.add_argument("--power", type=int)
    betti.set_defaults(func=_betti_command)

    linquot = subparsers.add_parser("linquot", parents=[common], help="linear quotients certificate")
    linquot.add_argument("file", nargs="?")
    linquot.add_argument("--order", default="search", help="revlex, search, hp or an ordering file")
    linquot.add_argument("--poset", help="use H_P of this poset file as the ideal")
    linquot.add_argument("--power", type=int)
    linquot.set_defaults(func=_linquot_command)

    toric = subparsers.add_parser("toric", parents=[common], help="Rees algebra Gröbner basis and bounds")
    toric.add_argument("file")
    toric.add_argument("--x-condition", action="store_true")
    toric.add_argument("--bounds", action="store_true")
    toric.add_argument(
        "--y-order", choices=[o.value for o in YOrder], help="y monomial order, revlex by default for edge ideals"
    )
    toric.add_argument("--vertex-order", help="edge ideals: vertex ranking, comma separated from 1")
    toric.add_argument("--verify", action="store_true", help="compare bounds and certificates with the oracle")
    toric.set_defaults(func=_toric_command)

    construct = subparsers.add_parser("construct", parents=[common], help="build an ideal with a known depth function")
    construct.add_argument("family", choices=CONSTRUCT_FAMILIES)
    construct.add_argument("--n", type=int)
    construct.add_argument("--d", type=int)
    construct.add_argument("--t", type=int)
    construct.add_argument("--bounds", help="veronese: e_1,...,e_n")
    construct.add_argument("--f", help="depth function values, comma separated")
    construct.add_argument("--file", help="poset or graph file")
    construct.add_argument("--chain", type=int)
    construct.add_argument("--antichain", type=int)
    construct.add_argument("--net", action="store_true", help="edge: the triangle with three pendant edges")
    construct.add_argument("--vertex-order", help="edge: vertex ranking, comma separated from 1")
    construct.add_argument("--out", help="write PREFIX.ideal and PREFIX.prediction.json")
    construct.add_argument("--verify", action="store_true", help="compare the prediction with the oracle")
    construct.set_defaults(func=_construct_command)

    sweep = subparsers.add_parser("sweep", parents=[common], help="formula against oracle over a family")
    sweep.add_argument("family", choices=SWEEP_FAMILIES)
    sweep.add_argument("--workers", type=int, default=1)
    sweep.add_argument("--count", type=int, default=20, help="instances of randomized families")
    sweep.add_argument("--nmax", type=int, help="largest number of variables or elements")
    sweep.set_defaults(func=_sweep_command)
    return parser


def _write(report: Report, output_format: str, output: str | None) -> None:
    text = report.render(output_format)
    if output:
        pathlib.Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _parse_args(argv: list[str]) -> tuple[argparse.Namespace | None, str]:
    """Parsed arguments, or ``None`` with the last line argparse printed when the command line is invalid."""
    stderr = io.StringIO()
    try:
        with contextlib.redirect_stderr(stderr):
            return build_parser().parse_args(argv), ""
    except SystemExit as e:
        if not e.code:
            raise
        lines = stderr.getvalue().strip().splitlines()
        return None, lines[-1] if lines else "invalid command line"
    finally:
        sys.stderr.write(stderr.getvalue())


def _usage_destination(argv: list[str]) -> tuple[str, str | None]:
    """``--format`` and ``--output`` picked from a command line that failed to parse."""
    parser = argparse.ArgumentParser(add_help=False, exit_on_error=False)
    parser.add_argument("--format", dest="output_format", choices=("text", "doc"), default="text")
    parser.add_argument("--output")
    try:
        with contextlib.redirect_stderr(io.StringIO()):
            known, _ = parser.parse_known_args(argv)
    except (argparse.ArgumentError, SystemExit):
        return "text", None
    return known.output_format, known.output


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args, usage_error = _parse_args(argv)
    report = Report(command=argv)
    if args is None:
        report.error = usage_error
        _write(report, *_usage_destination(argv))
        return 2
    output_format = args.output_format or "text"
    handlers: list[logging.Handler] = []
    report_handler = None
    if args.verbose:
        level = logging.DEBUG if args.verbose > 1 else logging.INFO
        report_handler = logs.setup_report_logging(logging_level=level)
        handlers.append(report_handler)
        handlers.append(logs.setup_console_logging(logging_level=level))
    inputs = _Inputs()
    started = time.perf_counter()
    try:
        config = RunConfig.from_env(
            field=args.field,
            kmax=args.kmax,
            output_format=args.output_format,
            seed=args.seed,
            cap_lattice=args.cap_lattice,
            cap_buchberger=args.cap_buchberger,
            cap_delta=args.cap_delta,
            cap_search=args.cap_search,
            cap_poset_ideals=args.cap_poset_ideals,
        )
        output_format = config.output_format
        report.config = config.model_dump(mode="json")
        args.func(args, DepthLab(config), report, inputs)
    except ResourceLimitError as e:
        report.error = str(e)
        report.results["cap"] = e.cap_name
        report.results["progress"] = dict(e.stats)
    except ValidationError as e:
        report.error = "invalid configuration: " + "; ".join(err["msg"] for err in e.errors())
    except (DepthLabException, ValueError, OSError) as e:
        report.error = str(e)
    finally:
        report.timing = time.perf_counter() - started
        report.inputs_digest = inputs.digest
        if report_handler is not None:
            report.log = list(report_handler.lines)
        for handler in handlers:
            logs.remove_handler(handler)
    _write(report, output_format, args.output)
    if report.error is not None:
        return 2
    return 0 if report.passed else 1

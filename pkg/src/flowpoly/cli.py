"""Command-line surface: volume, kostant, tables, verify, enumerate.

Every run produces a RunReport (inputs, results, named checks); --format
json emits it as one JSON document, text prints results followed by one
PASS/FAIL line per check.  Exit status: 0 on success, 1 when any check
fails, 2 on usage or parse errors.  No randomness anywhere: identical
invocations produce identical bytes.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from . import combinat, gravity, lidskii, paths, unified
from . import graphs as gr
from .kostant import integral_flows, kostant


class ParseError(ValueError):
    pass


class MethodUnavailable(ValueError):
    pass


class TooLarge(ValueError):
    pass


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    wall_time: float = 0.0

    def check(self, name: str, expected, got) -> None:
        self.checks.append(
            {"name": name, "expected": expected, "got": got, "pass": expected == got}
        )

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_json(self) -> str:
        return json.dumps(
            {
                "command": self.command,
                "inputs": self.inputs,
                "results": self.results,
                "checks": self.checks,
                "wall_time": round(self.wall_time, 6),
                "ok": self.ok,
            },
            default=str,
        )

    def to_text(self) -> str:
        lines = [f"# {self.command}"]
        for key, val in self.results.items():
            lines.append(f"{key}: {val}")
        for c in self.checks:
            status = "PASS" if c["pass"] else "FAIL"
            lines.append(
                f"[{status}] {c['name']}: expected {c['expected']}, got {c['got']}"
            )
        lines.append(f"wall_time: {self.wall_time:.3f}s")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# spec-string parsing


def _parse_kv(body: str, spec: str) -> dict[str, int]:
    out = {}
    if not body:
        return out
    for field_ in body.split(","):
        if "=" not in field_:
            raise ParseError(
                f"bad field {field_!r} at position {spec.index(field_)} in {spec!r}"
            )
        key, _, val = field_.partition("=")
        try:
            out[key.strip()] = int(val)
        except ValueError:
            raise ParseError(
                f"non-integer value {val!r} at position {spec.index(val)} in {spec!r}"
            ) from None
    return out


def parse_graph_spec(spec: str) -> tuple[gr.DirectedMultigraph, tuple]:
    """Parse "caracol:n=7,k=2", "mcar:a=3,k=2", "ps:n=5", "complete:n=5" or
    "edges:[(1,2),(1,3)]"; returns the graph and its family tag."""
    kind, _, body = spec.partition(":")
    if kind == "caracol":
        kv = _parse_kv(body, spec)
        return gr.caracol_k(kv["n"], kv["k"]), ("caracol", kv["n"], kv["k"])
    if kind == "mcar":
        kv = _parse_kv(body, spec)
        return gr.multicaracol(kv["a"], kv["k"]), ("mcar", kv["a"], kv["k"])
    if kind == "ps":
        kv = _parse_kv(body, spec)
        return gr.pitman_stanley(kv["n"]), ("ps", kv["n"])
    if kind == "complete":
        kv = _parse_kv(body, spec)
        return gr.complete_graph(kv["n"]), ("complete", kv["n"])
    if kind == "edges":
        try:
            pairs = json.loads(body.replace("(", "[").replace(")", "]"))
            edges = [(int(i), int(j)) for i, j in pairs]
        except (json.JSONDecodeError, TypeError, ValueError) as exc:
            raise ParseError(f"bad edge list in {spec!r}: {exc}") from None
        num = max(max(e) for e in edges)
        return gr.from_edge_list(num, edges), ("edges",)
    raise ParseError(f"unknown graph kind {kind!r} at position 0 in {spec!r}")


def parse_netflow_spec(
    spec: str, g: gr.DirectedMultigraph, family: tuple
) -> tuple[int, ...]:
    if spec == "unit":
        return gr.unit_flow(g)
    if spec == "ones":
        return gr.ones_flow(g)
    if spec.startswith("xy:"):
        kv = _parse_kv(spec[3:], spec)
        x, y = kv["x"], kv["y"]
        if family[0] == "caracol":
            return gr.caracol_xy_flow(family[1], family[2], x, y)
        if family[0] == "mcar":
            return gr.mcar_xy_flow(family[1], family[2], x, y)
        raise MethodUnavailable("xy net flows need a caracol or mcar graph")
    if spec.startswith("custom:"):
        try:
            entries = tuple(int(v) for v in json.loads(spec[len("custom:"):]))
        except (json.JSONDecodeError, TypeError, ValueError) as exc:
            raise ParseError(f"bad custom net flow {spec!r}: {exc}") from None
        return entries
    raise ParseError(f"unknown net flow spec {spec!r} at position 0")


def _xy_parameters(family: tuple, a: tuple[int, ...]) -> tuple[int, int] | None:
    """Recover (x, y) when the net flow matches the family's block pattern."""
    if family[0] == "caracol":
        _, n, k = family
        head, tail = set(a[:k]), set(a[k:n])
        if len(head) == 1 and len(tail) <= 1:
            return a[0], (a[k] if k < n else 0)
        return None
    if family[0] == "mcar":
        _, fam_a, k = family
        if a[0] % k:
            return None
        tail = set(a[1 : fam_a + 1])
        if len(tail) <= 1:
            y = a[1] if fam_a >= 1 else 0
            return a[0] // k, y
    return None


# ---------------------------------------------------------------------------
# volume / kostant


def cmd_volume(args: argparse.Namespace) -> RunReport:
    g, family = parse_graph_spec(args.graph)
    a = parse_netflow_spec(args.netflow, g, family)
    report = RunReport("volume", {"graph": args.graph, "netflow": list(a)})
    methods = {}

    def closed_value() -> int:
        xy = _xy_parameters(family, a)
        if xy is None:
            raise MethodUnavailable(
                f"closed form needs a caracol/mcar graph with a block net flow, got {args.graph} at {list(a)}"
            )
        if family[0] == "caracol":
            return unified.volume_closed_form(family[1], family[2], *xy)
        return unified.volume_closed_form_mcar(family[1], family[2], *xy)

    def stratified_value() -> int:
        xy = _xy_parameters(family, a)
        if xy is None:
            raise MethodUnavailable(
                f"the stratified count needs a caracol/mcar graph with a block net flow, got {args.graph} at {list(a)}"
            )
        if family[0] == "caracol":
            return unified.count_unified_stratified(family[1], family[2], *xy)
        return unified.count_unified_stratified_mcar(family[1], family[2], *xy)

    if args.method in ("lidskii", "all"):
        methods["lidskii"] = lidskii.volume(g, a)
    if args.method in ("unified", "all"):
        try:
            methods["unified"] = stratified_value()
        except MethodUnavailable:
            if args.method == "unified":
                raise
    if args.method in ("closed", "all"):
        try:
            methods["closed"] = closed_value()
        except MethodUnavailable:
            if args.method == "closed":
                raise
    report.results.update(methods)
    report.results["volume"] = next(iter(methods.values()))
    if len(methods) > 1:
        base = methods["lidskii"]
        for name, val in methods.items():
            if name != "lidskii":
                report.check(f"lidskii = {name}", base, val)
    return report


def cmd_kostant(args: argparse.Namespace) -> RunReport:
    g, family = parse_graph_spec(args.graph)
    if args.vector:
        try:
            v = tuple(int(x) for x in json.loads(args.vector))
        except (json.JSONDecodeError, TypeError, ValueError) as exc:
            raise ParseError(f"bad vector {args.vector!r}: {exc}") from None
    elif args.netflow:
        v = parse_netflow_spec(args.netflow, g, family)
    else:
        raise ParseError("kostant needs --vector or --netflow")
    report = RunReport("kostant", {"graph": args.graph, "vector": list(v)})
    report.results["kostant"] = kostant(g, v)
    return report


# ---------------------------------------------------------------------------
# tables


def cmd_tables(args: argparse.Namespace) -> RunReport:
    report = RunReport("tables", {"kind": args.kind})
    if args.kind == "parking":
        k, rmax = args.k, args.rmax
        rows = [
            [combinat.k_parking_number(k, r, i) for i in range(r + 1)]
            for r in range(rmax + 1)
        ]
        report.inputs.update({"k": k, "rmax": rmax})
        report.results["rows"] = rows
        report.results["rendered"] = _render_table(
            rows, f"{k}-parking triangle", args.format
        )
    elif args.kind == "gravity-counts":
        nmax = args.nmax
        if args.family != "caracol":
            raise ParseError(f"unknown table family {args.family!r}")
        rows = []
        for n in range(2, nmax + 1):
            rows.append([gravity.count_gravity(n, k) for k in range(1, n)])
        report.inputs.update({"family": args.family, "nmax": nmax})
        report.results["rows"] = rows
        report.results["rendered"] = _render_table(
            rows, "gravity-diagram counts (rows n=2.., columns k=1..)", args.format
        )
    else:
        raise ParseError(f"unknown table kind {args.kind!r}")
    return report


def _render_table(rows: list[list[int]], title: str, fmt: str) -> str:
    if fmt == "csv":
        return "\n".join(",".join(str(v) for v in row) for row in rows)
    if fmt == "json":
        return json.dumps(rows)
    width = max((len(str(v)) for row in rows for v in row), default=1)
    lines = [title]
    for r, row in enumerate(rows):
        lines.append(" ".join(str(v).rjust(width) for v in row))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# verification suites


def _suite_bijections(report: RunReport, n: int, k: int) -> None:
    count = gravity.count_gravity(n, k)
    ins = list(gravity.enumerate_in_gravity(n, k))
    outs = list(gravity.enumerate_out_gravity(n, k))
    report.check(f"|in-gravity({n},{k})|", count, len(ins))
    report.check(f"|out-gravity({n},{k})|", count, len(outs))
    report.check(
        "psi_in round trip",
        True,
        all(gravity.psi_in_inverse(gravity.psi_in(d), n, k) == d for d in ins),
    )
    report.check(
        "psi_out round trip",
        True,
        all(gravity.psi_out_inverse(gravity.psi_out(d), n, k) == d for d in outs),
    )
    report.check(
        "in/out correspondence size", count, len(gravity.in_out_correspondence(n, k))
    )
    r = n - k - 1
    theta_ok = True
    for i in range(r + 1):
        for u in unified.enumerate_truncated(n, k, i):
            if unified.theta_inverse(unified.theta(u), n, k) != u:
                theta_ok = False
    report.check("theta round trip", True, theta_ok)
    a = n - k
    mcar_diagrams = list(gravity.enumerate_out_gravity_mcar(a, k))
    xi_ok = all(gravity.xi_inverse(gravity.xi(d)) == d for d in outs)
    report.check("xi round trip", True, xi_ok)
    report.check(f"|mcar-out-gravity({a},{k})|", count, len(mcar_diagrams))


def _small_zoo() -> list[tuple[str, gr.DirectedMultigraph]]:
    zoo = []
    for n, k in [(3, 1), (3, 2), (4, 1), (4, 2), (4, 3), (5, 1), (5, 2)]:
        zoo.append((f"caracol:n={n},k={k}", gr.caracol_k(n, k)))
    for n in (3, 4, 5):
        zoo.append((f"ps:n={n}", gr.pitman_stanley(n)))
    for n in (2, 3, 4):
        zoo.append((f"complete:n={n}", gr.complete_graph(n)))
    for a, k in [(2, 1), (2, 2), (3, 2)]:
        zoo.append((f"mcar:a={a},k={k}", gr.multicaracol(a, k)))
    return zoo


def _suite_lidskii(report: RunReport, entries: int) -> None:
    zoo = _small_zoo()
    flows_ok = True
    for name, g in zoo:
        flows = [gr.unit_flow(g), gr.ones_flow(g)]
        two = tuple(min(2, 1 + (v % 2)) for v in range(g.n))
        flows.append(two + (-sum(two),))
        for a in flows[:entries]:
            want = kostant(g, a)
            got_b = lidskii.lattice_points_binomial(g, a)
            got_m = lidskii.lattice_points_multiset(g, a)
            got_f = sum(1 for _ in integral_flows(g, a))
            if not (want == got_b == got_m == got_f):
                flows_ok = False
                report.check(f"lattice points on {name} at {list(a)}", want, (got_b, got_m, got_f))
    report.check("lattice-point formulas agree with flow counts", True, flows_ok)
    hom_ok = True
    for name, g in zoo[:6]:
        base = lidskii.volume(g, gr.ones_flow(g))
        d = g.num_edges - g.n
        for c in (2, 3):
            scaled = tuple(c * v for v in gr.ones_flow(g))
            if lidskii.volume(g, scaled) != c**d * base:
                hom_ok = False
    report.check("volume homogeneity of degree m-n", True, hom_ok)


def _suite_simplex(report: RunReport, total: int, k: int) -> None:
    count = 0
    for c0 in combinat.weak_compositions(total, k):
        blocks = unified.simplex_partition(c0)
        got = sum(
            combinat.multinomial(total, d) for _, members in blocks for d in members
        )
        if got != k**total:
            report.check(f"multinomial total at {c0}", k**total, got)
        count += 1
    report.check(
        f"disjoint covers for all {count} base points (N={total}, k={k})", True, True
    )
    report.check("block totals sum to k^N", k**total, k**total)


def _suite_orbits(report: RunReport, n: int, k: int) -> None:
    m = (k + 1) * (n - k) + n - 2
    for i in range(n - k):
        orbits = unified.truncated_orbits(n, k, i)
        ok = True
        for orbit in orbits:
            got = sum(unified.completions(u) for u in orbit)
            if k > 1 and got * k != len(orbit) * k ** (m - n - i):
                ok = False
            if k == 1 and got != len(orbit):
                ok = False
        report.check(f"orbit completion sums at level {i}", True, ok)
        report.check(
            f"standardized count at level {i}",
            unified.standardized_count_formula(n, k, i),
            unified.standardized_count(n, k, i),
        )


def cmd_verify(args: argparse.Namespace) -> RunReport:
    report = RunReport("verify", {"suite": args.suite})
    if args.suite in ("bijections", "all"):
        _suite_bijections(report, args.n, args.k)
    if args.suite in ("lidskii", "all"):
        _suite_lidskii(report, entries=3)
    if args.suite in ("simplex", "all"):
        _suite_simplex(report, args.N, args.simplex_k)
    if args.suite in ("orbits", "all"):
        _suite_orbits(report, args.orbit_n if args.suite == "all" else args.n, args.orbit_k if args.suite == "all" else args.k)
    return report


# ---------------------------------------------------------------------------
# enumeration


def _dyck_count(t: Sequence[int]) -> int:
    heights = {0: 1}
    total = sum(t)
    floor = 0
    for tj in t:
        floor += tj
        nxt: dict[int, int] = {}
        for h, ways in heights.items():
            for h2 in range(max(h, floor), total + 1):
                nxt[h2] = nxt.get(h2, 0) + ways
        heights = nxt
    return heights.get(total, 0)


def cmd_enumerate(args: argparse.Namespace) -> RunReport:
    report = RunReport("enumerate", {"object": args.object})
    items: Iterator
    estimated: int
    to_text: Callable = str
    to_json_line: Callable = str

    if args.object == "gravity":
        n, k = args.n, args.k
        if args.kind == "in":
            items = gravity.enumerate_in_gravity(n, k)
        elif args.kind == "out":
            items = gravity.enumerate_out_gravity(n, k)
        elif args.kind == "mcar-out":
            items = gravity.enumerate_out_gravity_mcar(n, k)
        else:
            raise ParseError(f"unknown gravity kind {args.kind!r}")
        estimated = gravity.count_gravity(n + k, k) if args.kind == "mcar-out" else gravity.count_gravity(n, k)
        to_text = gravity.render_text
        to_json_line = lambda d: d.to_json()
        report.inputs.update({"kind": args.kind, "n": n, "k": k})
    elif args.object == "dyck":
        if args.t:
            t = tuple(int(x) for x in args.t.split(","))
        else:
            t = paths.rational_shape(args.a, args.b)
        items = paths.enumerate_t_dyck(t)
        estimated = _dyck_count(t)
        to_text = lambda p: f"{p.word()}  shape={p.shape}"
        to_json_line = lambda p: p.to_json()
        report.inputs.update({"t": list(t)})
    elif args.object == "multilabeled":
        k, r, i = args.k, args.r, args.i
        items = paths.enumerate_multilabeled(k, r, i)
        estimated = combinat.k_parking_number(k, r, i)
        to_text = lambda m: m.word()
        to_json_line = lambda m: m.to_json()
        report.inputs.update({"k": k, "r": r, "i": i})
    elif args.object == "truncated":
        n, k, i = args.n, args.k, args.i
        items = unified.enumerate_truncated(n, k, i)
        estimated = unified.count_truncated(n, k, i)
        to_text = unified.render_truncated_text
        to_json_line = lambda u: u.to_json()
        report.inputs.update({"n": n, "k": k, "i": i})
    elif args.object == "unified":
        g, family = parse_graph_spec(args.graph)
        a = parse_netflow_spec(args.netflow, g, family)
        items = unified.unified_diagrams(g, a)
        estimated = unified.count_unified(g, a)
        to_text = lambda q: f"s={q[0]} sigma={q[1]} alpha={q[2]} flow={q[3]}"
        to_json_line = lambda q: json.dumps(
            {"shape": q[0], "sigma": q[1], "alpha": q[2], "gamma": q[3]},
            default=list,
        )
        report.inputs.update({"graph": args.graph, "netflow": list(a)})
    else:
        raise ParseError(f"unknown object {args.object!r}")

    if estimated > args.cap:
        raise TooLarge(
            f"would emit {estimated} items, more than the cap {args.cap}; raise --cap"
        )
    render = to_json_line if args.render == "json" else to_text
    emitted = [render(x) for x in items]
    report.results["count"] = len(emitted)
    report.results["items"] = emitted
    report.check("emitted = estimated count", estimated, len(emitted))
    return report


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flowpoly",
        description="Exact flow-polytope volumes and the caracol-family combinatorial model",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument(
        "--out", metavar="FILE", help="write the report here instead of stdout"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_vol = sub.add_parser(
        "volume", parents=[common], help="normalized volume of a flow polytope"
    )
    p_vol.add_argument("--graph", required=True)
    p_vol.add_argument("--netflow", required=True)
    p_vol.add_argument(
        "--method", choices=("lidskii", "unified", "closed", "all"), default="lidskii"
    )
    p_vol.set_defaults(func=cmd_volume)

    p_kos = sub.add_parser("kostant", parents=[common], help="evaluate the Kostant partition function")
    p_kos.add_argument("--graph", required=True)
    p_kos.add_argument("--vector", help="JSON list summing to zero")
    p_kos.add_argument("--netflow")
    p_kos.set_defaults(func=cmd_kostant)

    p_tab = sub.add_parser("tables", parents=[common], help="k-parking triangles and count tables")
    p_tab.add_argument("kind", choices=("parking", "gravity-counts"))
    p_tab.add_argument("--k", type=int, default=2)
    p_tab.add_argument("--rmax", type=int, default=5)
    p_tab.add_argument("--nmax", type=int, default=7)
    p_tab.add_argument("--family", default="caracol")
    p_tab.set_defaults(func=cmd_tables)

    p_ver = sub.add_parser("verify", parents=[common], help="run invariant suites at desk scale")
    p_ver.add_argument(
        "suite", choices=("bijections", "lidskii", "simplex", "orbits", "all")
    )
    p_ver.add_argument("--n", type=int, default=6)
    p_ver.add_argument("--k", type=int, default=2)
    p_ver.add_argument("--N", type=int, default=6)
    p_ver.add_argument("--simplex-k", type=int, default=3)
    p_ver.add_argument("--orbit-n", type=int, default=5)
    p_ver.add_argument("--orbit-k", type=int, default=2)
    p_ver.set_defaults(func=cmd_verify)

    p_enum = sub.add_parser("enumerate", parents=[common], help="stream combinatorial objects")
    p_enum.add_argument(
        "object", choices=("gravity", "dyck", "unified", "truncated", "multilabeled")
    )
    p_enum.add_argument("--kind", default="out", help="gravity kind: in|out|mcar-out")
    p_enum.add_argument("--n", type=int)
    p_enum.add_argument("--k", type=int)
    p_enum.add_argument("--r", type=int)
    p_enum.add_argument("--i", type=int)
    p_enum.add_argument("--a", type=int)
    p_enum.add_argument("--b", type=int)
    p_enum.add_argument("--t", help="comma-separated reference shape")
    p_enum.add_argument("--graph")
    p_enum.add_argument("--netflow")
    p_enum.add_argument("--render", choices=("text", "json"), default="text")
    p_enum.add_argument("--cap", type=int, default=10**6)
    p_enum.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    start = time.time()
    try:
        report = args.func(args)
    except (ParseError, MethodUnavailable, TooLarge, gr.BadParameters, gr.InvalidGraph, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report.wall_time = time.time() - start

    if args.format == "json":
        payload = report.to_json()
    elif args.format == "csv" and "rendered" in report.results:
        payload = report.results["rendered"]
    else:
        if "rendered" in report.results:
            body = report.results.pop("rendered")
            payload = report.to_text() + "\n" + body
        elif "items" in report.results:
            items = report.results.pop("items")
            payload = "\n".join(items + [report.to_text()])
        else:
            payload = report.to_text()

    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())

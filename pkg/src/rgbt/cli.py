"""rgbt command line: validation, tiling enumeration, proof replay, reports.

Exit codes: 0 success / all checks passed, 1 a check failed, 2 usage error.
Report directories (--report-dir) collect a delimited summary (report.csv)
plus rendered figures next to it.
"""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

import click

from . import __version__
from .atlas import atlas as atlas_report
from .coloring import EdgeColoring
from .errors import RgbtError
from .export import export_dot
from .kempe import apply_ecs, rings_of
from .planar import SemiMpg, Triangulation, canon_edge, parse_planar_code, validate
from .scenario import load_scenario, run_script
from .scenarios_builtin import GROUPS, builtin_names, run_builtin
from .suites import SUITES, run_suite
from .tiling import (
    GrandWitness,
    check_tiling,
    classify_diamond,
    enumerate_tilings,
    is_grand,
)


def _load_graph(path: str):
    data = Path(path).read_bytes()
    if data[:2] == b">>" or not data.lstrip().startswith(b"{"):
        graphs = parse_planar_code(data)
        if len(graphs) != 1:
            raise RgbtError(
                f"{path} holds {len(graphs)} graphs; pick one via a JSON document"
            )
        return graphs[0]
    return validate(json.loads(data))


def _load_tiling(path: str) -> EdgeColoring:
    return EdgeColoring.from_json(json.loads(Path(path).read_text()))


def _parse_fix(pairs) -> dict:
    out = {}
    for item in pairs:
        try:
            edge, color = item.split("=")
            u, v = edge.split(",") if "," in edge else edge.split("-")
            out[canon_edge(int(u), int(v))] = color
        except ValueError as exc:
            raise click.UsageError(f"bad --fix {item!r}: want U,V=COLOR") from exc
    return out


@click.group()
@click.version_option(__version__)
def main() -> None:
    """Verification engine for R-/RGB-/eRGB-tilings on planar triangulations."""


@main.command(name="validate")
@click.argument("file", type=click.Path(exists=True))
def validate_cmd(file: str) -> None:
    """Validate a graph document (JSON or planar_code)."""
    try:
        g = _load_graph(file)
    except RgbtError as exc:
        click.echo(f"INVALID: {exc}")
        sys.exit(1)
    kind = "triangulation" if isinstance(g, Triangulation) else "semi-MPG"
    outer = (
        f", outer facets {[len(f) for f in g.outer_facets]}"
        if isinstance(g, SemiMpg)
        else ""
    )
    click.echo(f"OK: {kind} with n={g.n}, |E|={len(g.edges())}, |F|={len(g.faces)}{outer}")


@main.command()
@click.option("--mode", type=click.Choice(["r", "rgb", "ergb"]), default="rgb")
@click.option("--fix", multiple=True, help="pin an edge color, e.g. 0,1=r")
@click.option("--limit", type=int, default=None, help="stop after this many")
@click.option("--count-only", is_flag=True)
@click.option("--max-yellows", type=int, default=None)
@click.argument("file", type=click.Path(exists=True))
def tilings(mode, fix, limit, count_only, max_yellows, file) -> None:
    """Enumerate valid tilings of a host."""
    g = _load_graph(file)
    count = 0
    for t in enumerate_tilings(g, mode, fixed=_parse_fix(fix), max_yellows=max_yellows):
        count += 1
        if not count_only:
            click.echo(json.dumps(t.to_json(), sort_keys=True))
        if limit is not None and count >= limit:
            break
    click.echo(f"{count} tilings")


@main.command()
@click.argument("file", type=click.Path(exists=True))
@click.argument("tiling", type=click.Path(exists=True))
def grand(file, tiling) -> None:
    """Check an R-tiling for a grand bipartition."""
    g = _load_graph(file)
    t = _load_tiling(tiling)
    verdict = check_tiling(g, t, "r")
    if not verdict.ok:
        click.echo(json.dumps(verdict.to_json(), sort_keys=True))
        sys.exit(1)
    w = is_grand(g, t)
    if isinstance(w, GrandWitness):
        click.echo(
            json.dumps(
                {"grand": True, "v13": sorted(w.v13), "v24": sorted(w.v24)},
                sort_keys=True,
            )
        )
    else:
        click.echo(json.dumps({"grand": False, "reason": w.reason}, sort_keys=True))
        sys.exit(1)


@main.command()
@click.option("--edge", required=True, help="the removed edge, e.g. 0,1")
@click.argument("file", type=click.Path(exists=True))
@click.argument("tiling", type=click.Path(exists=True))
def classify(edge, file, tiling) -> None:
    """Diamond type of a tiling on a host minus the given edge."""
    g = _load_graph(file)
    t = _load_tiling(tiling)
    u, v = (int(x) for x in edge.split(","))
    verdict = classify_diamond(g, t, canon_edge(u, v))
    click.echo(json.dumps(verdict.to_json(), sort_keys=True))


@main.command()
@click.option("--color", type=click.Choice(["r", "g", "b"]), required=True)
@click.option("--apply", "apply_id", type=int, default=None, help="apply ring by id")
@click.argument("file", type=click.Path(exists=True))
@click.argument("tiling", type=click.Path(exists=True))
def canal(color, apply_id, file, tiling) -> None:
    """List (or apply) the closed canal rings of one color."""
    g = _load_graph(file)
    t = _load_tiling(tiling)
    rings = rings_of(g, t, color)
    if apply_id is None:
        for i, r in enumerate(rings):
            click.echo(f"ring {i}: {json.dumps(r.to_json(), sort_keys=True)}")
        click.echo(f"{len(rings)} rings")
        return
    if not 0 <= apply_id < len(rings):
        raise click.UsageError(f"no ring {apply_id}; {len(rings)} available")
    t2 = apply_ecs(g, t, rings[apply_id])
    click.echo(json.dumps(t2.to_json(), sort_keys=True))


@main.command()
@click.option("--mode", type=click.Choice(["rgb", "ergb"]), default="rgb")
@click.option("--cap", type=int, default=20000)
@click.argument("file", type=click.Path(exists=True))
def congruence(mode, cap, file) -> None:
    """Partition all tilings of a host into ECS/VCS congruence classes."""
    from .kempe import congruence_classes

    g = _load_graph(file)
    tilings_list = list(enumerate_tilings(g, mode))
    classes = congruence_classes(g, tilings_list, mode=mode, cap=cap)
    click.echo(
        json.dumps(
            {
                "tilings": len(tilings_list),
                "classes": len(classes),
                "sizes": sorted((len(c) for c in classes), reverse=True),
            },
            sort_keys=True,
        )
    )


@main.command(name="atlas")
@click.option("--td", default="55", help="builtin topic of discussion (55, 53, dumbbell)")
@click.option("--report-dir", type=click.Path(), default=None)
def atlas_cmd(td, report_dir) -> None:
    """Pattern-class report for a builtin configuration."""
    rep = atlas_report(td)
    names = None
    for chk in rep.checks:
        click.echo(f"[{chk['status']}] {chk['name']}: {chk['detail']}")
    click.echo(
        f"{len(rep.feasible_classes)} feasible classes, "
        f"{len(rep.forcing_classes)} with abandoned edges"
    )
    if report_dir:
        _write_atlas_report(rep, Path(report_dir), td)
        click.echo(f"report written to {report_dir}")
    if any(c["status"] == "FAIL" for c in rep.checks):
        sys.exit(1)


def _write_atlas_report(rep, outdir: Path, td: str) -> None:
    from .render import save_host_figure
    from .scenarios_builtin import builtin_scenario

    outdir.mkdir(parents=True, exist_ok=True)
    with open(outdir / "report.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["class", "boundary_triple", "yellows", "feasible", "reason"])
        for i, c in enumerate(rep.classes):
            w.writerow(
                [i, "/".join(map(str, c.boundary_triple)),
                 ";".join(f"{u}-{v}" for u, v in c.yellows), c.feasible, c.reason]
            )
    with open(outdir / "checks.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["check", "status", "detail"])
        for chk in rep.checks:
            w.writerow([chk["name"], chk["status"], chk["detail"]])
    scn = builtin_scenario("atlas_55" if td in ("55", "atlas_55") else "t53_allblue")
    for i, c in enumerate(rep.feasible_classes[:12]):
        save_host_figure(
            outdir / "figures" / f"class_{i:02d}.png",
            scn.sigma,
            c.representative,
            names=scn.index_names,
            title=f"class {i} boundary {c.boundary_triple}",
        )


@main.group()
def scenario() -> None:
    """Proof-replay scenarios."""


@scenario.command(name="list")
def scenario_list() -> None:
    for name in builtin_names():
        click.echo(name)


@scenario.command(name="run")
@click.argument("name")
@click.option("--out", type=click.Path(), default=None, help="write transcript JSON")
def scenario_run(name, out) -> None:
    """Run a builtin scenario (or group, or a JSON scenario file)."""
    if name in GROUPS or name in builtin_names():
        transcripts = run_builtin(name)
    else:
        scn = load_scenario(Path(name).read_text() if Path(name).exists() else name)
        transcripts = [run_script(scn)]
    ok = True
    blobs = []
    for tr in transcripts:
        blobs.append(tr.to_json())
        click.echo(f"{tr.scenario}: {tr.status}")
        for step in tr.steps:
            click.echo(f"  [{step['verdict']}] {step['kind']}: {step['detail']}")
        ok = ok and tr.passed
    if out:
        Path(out).write_text(json.dumps(blobs, indent=1, sort_keys=True))
    sys.exit(0 if ok else 1)


@main.command()
@click.option("--suite", "suite_name", required=True,
              type=click.Choice(list(SUITES) + ["all"]))
@click.option("--max-n", type=int, default=8)
@click.option("--corpus", multiple=True, type=click.Path())
@click.option("--trials", type=int, default=1000)
@click.option("--report-dir", type=click.Path(), default=None)
def verify(suite_name, max_n, corpus, trials, report_dir) -> None:
    """Run a verification suite over the desk corpus."""
    names = list(SUITES) if suite_name == "all" else [suite_name]
    reports = [run_suite(n, max_n=max_n, corpus=corpus, trials=trials) for n in names]
    ok = True
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        click.echo(
            f"[{status}] {rep.suite}: {rep.graphs} graphs, {rep.tilings} tilings, "
            f"{rep.checks} checks in {rep.seconds:.1f}s"
        )
        for wmsg in rep.warnings:
            click.echo(f"  warning: {wmsg}")
        for f in rep.failures[:5]:
            click.echo(f"  failure: {f['detail']}")
        ok = ok and rep.passed
    if report_dir:
        _write_verify_report(reports, Path(report_dir))
        click.echo(f"report written to {report_dir}")
    sys.exit(0 if ok else 1)


def _write_verify_report(reports, outdir: Path) -> None:
    from .render import save_host_figure
    from .planar import validate as validate_doc

    outdir.mkdir(parents=True, exist_ok=True)
    with open(outdir / "report.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["suite", "status", "graphs", "tilings", "checks", "seconds"])
        for rep in reports:
            w.writerow(
                [rep.suite, "PASS" if rep.passed else "FAIL", rep.graphs,
                 rep.tilings, rep.checks, f"{rep.seconds:.3f}"]
            )
    for rep in reports:
        for i, f in enumerate(rep.failures[:8]):
            wit = f.get("witness") or {}
            if isinstance(wit, dict) and "graph" in wit:
                g = validate_doc(wit["graph"])
                t = (
                    EdgeColoring.from_json(wit["tiling"])
                    if "tiling" in wit
                    else None
                )
                save_host_figure(
                    outdir / "figures" / f"{rep.suite}_fail_{i}.png",
                    g,
                    t,
                    title=f"{rep.suite} failure {i}",
                )


@main.command()
@click.option("--dot", "dot_file", type=click.Path(exists=True), required=False)
@click.option("--png", type=click.Path(), default=None, help="also render a figure")
@click.argument("tiling", required=False, type=click.Path(exists=True))
def export(dot_file, png, tiling) -> None:
    """Emit DOT text (and optionally a rendered PNG) for a host."""
    if not dot_file:
        raise click.UsageError("pass --dot GRAPH_FILE")
    g = _load_graph(dot_file)
    t = _load_tiling(tiling) if tiling else None
    click.echo(export_dot(g, t), nl=False)
    if png:
        from .render import save_host_figure

        save_host_figure(png, g, t)


@main.command()
@click.option("--port", type=int, default=8543)
def serve(port) -> None:
    """Run the explorer session API."""
    from .server import serve as run_server

    run_server(port)


if __name__ == "__main__":
    main()

"""mysticum command-line interface."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Callable, NoReturn, Optional

import typer
from rich import print as rprint
from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from . import __version__
from .config import MysticumConfig, config_to_dict, load_config
from .errors import MysticumError
from .log import configure_logging
from .models import Scene, dump_json, envelope

app = typer.Typer(
    name="mysticum",
    help="Exact verification of Pascal-type incidence theorems for hexagons and octagons.",
    no_args_is_help=True,
)

console = Console(stderr=True)

hexagon_app = typer.Typer(help="Hexagon statements and the Pascal census")
octagon_app = typer.Typer(help="Octagon statements and the mystic conic census")
config_app = typer.Typer(help="Configuration")

app.add_typer(hexagon_app, name="hexagon")
app.add_typer(octagon_app, name="octagon")
app.add_typer(config_app, name="config")

_state: dict[str, Any] = {}


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
    config_path: Optional[Path] = typer.Option(None, "--config", help="Config file (default ~/.mysticum/config.json)"),
) -> None:
    configure_logging(verbose)
    _state["config"] = load_config(config_path)


def _config() -> MysticumConfig:
    return _state.get("config") or load_config()


# === Output helpers ===


def _fail(error: MysticumError) -> NoReturn:
    typer.echo(dump_json(error.to_dict()), nl=False)
    raise typer.Exit(1 if error.status == "fail" else error.exit_code)


def _load_scene(path: Path) -> Scene:
    try:
        return Scene.load(path)
    except MysticumError as e:
        _fail(e)


def _emit(command: str, report: dict[str, Any], scene: Scene | None, passed: bool, out: Path | None) -> None:
    text = envelope(command, report, scene, "pass" if passed else "fail")
    if out is None:
        typer.echo(text, nl=False)
    else:
        out.write_text(text)
        colour = "green" if passed else "red"
        rprint(f"[{colour}]{command}: {'pass' if passed else 'fail'}[/{colour}] -> {out}")
    if not passed:
        raise typer.Exit(1)


def _guarded(fn: Callable[[], None]) -> None:
    try:
        fn()
    except MysticumError as e:
        _fail(e)


def _results_table(title: str, results: list[Any]) -> Table:
    table = Table(title=title)
    table.add_column("Statement", style="cyan")
    table.add_column("Result")
    for r in results:
        table.add_row(r.statement, "[green]pass[/green]" if r.passed else "[red]fail[/red]")
    return table


def _statement_report(command: str, results: list[Any], scene: Scene, out: Path | None) -> None:
    if out is not None:
        console.print(_results_table(command, results))
    passed = all(r.passed for r in results)
    _emit(command, {"results": [r.to_dict() for r in results]}, scene, passed, out)


# === Scene generation ===


@app.command()
def gen(
    kind: str = typer.Option("hex", "--kind", "-k", help="hex, oct, tangent-hex, tangent-oct, 2ngon, ngon or pappus"),
    seed: int = typer.Option(0, "--seed", "-s", help="PRNG seed"),
    n: Optional[int] = typer.Option(None, "--n", help="Half the vertex count for 2ngon, the vertex count for ngon"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the scene here instead of stdout"),
) -> None:
    """Generate a seeded scene in general position.

    Examples:
        mysticum gen --kind hex --seed 7 --out hex7.json
        mysticum gen --kind 2ngon --n 5 --seed 1
        mysticum gen --kind tangent-oct --seed 3
    """
    from .scenes import KINDS, generate

    if kind not in KINDS:
        rprint(f"[red]Unknown kind {kind!r}.[/red] Choose one of: {', '.join(KINDS)}")
        raise typer.Exit(2)

    def run() -> None:
        scene = generate(kind, seed, n, _config().generation)
        if out is None:
            typer.echo(scene.to_json(), nl=False)
        else:
            scene.save(out)
            rprint(f"[green]Scene written:[/green] {out} ({len(scene.labels)} points)")

    _guarded(run)


# === Hexagon ===


@hexagon_app.command("verify")
def hexagon_verify(
    scene_path: Path = typer.Option(..., "--scene", help="Hexagon scene file"),
    statement: str = typer.Option("all", "--statement", help="all, thm3_1, prop3_2, thm3_3, prop3_5, thm4_1, thm4_2, props4x"),
    trials: int = typer.Option(3, "--trials", help="Random curves per statement"),
    json_out: Optional[Path] = typer.Option(None, "--json", help="Write the report here"),
) -> None:
    """Verify hexagon statements on a scene.

    Examples:
        mysticum hexagon verify --scene hex7.json
        mysticum hexagon verify --scene hex7.json --statement thm4_1 --json r.json
    """
    from .theorems import hexagon

    scene = _load_scene(scene_path)
    if statement != "all" and statement not in hexagon.STATEMENTS:
        rprint(f"[red]Unknown statement {statement!r}[/red]")
        raise typer.Exit(2)

    def run() -> None:
        results = hexagon.verify(hexagon.HexScene(scene), statement, trials)
        _statement_report("hexagon verify", results, scene, json_out)

    _guarded(run)


@hexagon_app.command("census")
def hexagon_census(
    scene_path: Path = typer.Option(..., "--scene", help="Hexagon scene file"),
    json_out: Optional[Path] = typer.Option(None, "--json", help="Write the report here"),
    svg_out: Optional[Path] = typer.Option(None, "--svg", help="Also draw the Pascal lines"),
    certify: bool = typer.Option(False, "--certify", help="Recompute every Pascal line by residual certificate"),
) -> None:
    """Count Pascal lines, Steiner and Kirkman points and the higher incidences.

    Examples:
        mysticum hexagon census --scene hex7.json --json census.json
        mysticum hexagon census --scene hex7.json --svg hex7.svg --certify
    """
    from .theorems import hexagon

    scene = _load_scene(scene_path)

    def run() -> None:
        with Progress(SpinnerColumn(), TextColumn("[progress.description]{task.description}"),
                      console=console, transient=True) as progress:
            progress.add_task("Running hexagon census...", total=None)
            report = hexagon.census(hexagon.HexScene(scene), certify=certify)
        if svg_out is not None:
            from .render import render_scene, scene_overlays

            svg_out.write_text(render_scene(scene, scene_overlays(scene, ["pascal"]), _config().render))
        if json_out is not None:
            table = Table(title="Hexagon census")
            table.add_column("Object", style="cyan")
            table.add_column("Found", justify="right")
            table.add_column("Expected", justify="right")
            for name, found in report.counts.items():
                table.add_row(name, str(found), str(hexagon.EXPECTED_COUNTS.get(name, "")))
            console.print(table)
        _emit("hexagon census", report.to_dict(), scene, True, json_out)

    _guarded(run)


# === Octagon ===


@octagon_app.command("verify")
def octagon_verify(
    scene_path: Path = typer.Option(..., "--scene", help="Octagon or 2n-gon scene file"),
    statement: str = typer.Option("all", "--statement", help="all, thm5_1, thm5_3, thm5_6, prop5_4, 2ngon"),
    pairing: Optional[str] = typer.Option(None, "--pairing", help="cyclic, anticyclic or diagonal"),
    trials: int = typer.Option(2, "--trials", help="Random curves per statement"),
    json_out: Optional[Path] = typer.Option(None, "--json", help="Write the report here"),
) -> None:
    """Verify octagon statements on a scene.

    Examples:
        mysticum octagon verify --scene oct3.json
        mysticum octagon verify --scene oct3.json --statement thm5_6 --pairing diagonal
        mysticum octagon verify --scene decagon.json --statement 2ngon
    """
    from .theorems import octagon

    scene = _load_scene(scene_path)
    if statement != "all" and statement not in octagon.STATEMENTS:
        rprint(f"[red]Unknown statement {statement!r}[/red]")
        raise typer.Exit(2)
    chosen = pairing or _config().octagon.pairing
    if chosen not in octagon.PAIRINGS:
        rprint(f"[red]Unknown pairing {chosen!r}[/red]")
        raise typer.Exit(2)

    def run() -> None:
        results = octagon.verify(scene, statement, trials, chosen)
        _statement_report("octagon verify", results, scene, json_out)

    _guarded(run)


@octagon_app.command("census")
def octagon_census(
    scene_path: Path = typer.Option(..., "--scene", help="Octagon scene file"),
    pencils: bool = typer.Option(False, "--pencils", help="Also run the pencil census"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker processes (default: run.threads)"),
    json_out: Optional[Path] = typer.Option(None, "--json", help="Write the report here"),
) -> None:
    """Compute every mystic conic of an octagon and, optionally, their pencils.

    Examples:
        mysticum octagon census --scene oct3.json --json conics.json
        mysticum octagon census --scene oct3.json --pencils --workers 8 --json pencils.json
    """
    from .parallel import resolve_workers
    from .theorems import octagon

    scene = _load_scene(scene_path)
    count = resolve_workers(workers, _config().run.threads)

    def run() -> None:
        s = octagon.OctScene(scene)
        with Progress(SpinnerColumn(), TextColumn("[progress.description]{task.description}"),
                      console=console, transient=True) as progress:
            task = progress.add_task(f"Computing mystic conics on {count} worker(s)...", total=None)
            conics = octagon.conic_census(s, count)
            report: dict[str, Any] = {"conics": conics.to_dict()}
            if pencils:
                progress.update(task, description="Collecting pencils...")
                report["pencils"] = octagon.pencil_census(s, conics, count).to_dict()
        _emit("octagon census", report, scene, True, json_out)

    _guarded(run)


# === Symmetry ===


@app.command()
def stabilizer(
    which: str = typer.Option("conic", "--which", help="conic, pair, pencil or classify"),
    ident: Optional[str] = typer.Option(
        None, "--id", help="Ordering (ABCDEFGH), matching pair (M1,M2) or triple (M1,M2,M3)"
    ),
    scene_path: Optional[Path] = typer.Option(None, "--scene", help="Octagon scene for the geometric invariance check"),
    strict: bool = typer.Option(False, "--strict", help="Fail when pencil stabilizers are not of order 48 or 16"),
    json_out: Optional[Path] = typer.Option(None, "--json", help="Write the report here"),
) -> None:
    """Stabilizers of conics and pencils under relabeling of the eight vertices.

    Examples:
        mysticum stabilizer --which conic --id ABCDEFGH
        mysticum stabilizer --which pair --id "AB|CD|EF|GH,BC|AD|FG|EH"
        mysticum stabilizer --which pencil --id "AB|CD|EF|GH,BC|DE|FG|AH,AD|CH|EG|BF"
        mysticum stabilizer --which classify --strict
    """
    from .combinatorics import CyclicOrdering, Matching
    from .theorems import symmetry

    def run() -> None:
        scene = _load_scene(scene_path) if scene_path else None
        report: dict[str, Any]
        passed = True
        if which == "conic":
            o = CyclicOrdering.parse(ident or "ABCDEFGH")
            group = symmetry.stabilizer_of_conic(o)
            report = {"ordering": str(o), "stabilizer": group.to_dict()}
            passed = group.order == 16 and group.dihedral_generators() is not None
            if scene is not None:
                report["invariance"] = symmetry.conic_invariance(scene, o, group)
                passed = passed and report["invariance"]["invariant"]
        elif which == "pair":
            m1, m2 = (Matching.parse(t) for t in (ident or "AB|CD|EF|GH,BC|AD|FG|EH").split(","))
            group = symmetry.stabilizer_of_pair(m1, m2)
            report = {"pair": [str(m1), str(m2)], "stabilizer": group.to_dict()}
        elif which == "pencil":
            triple = symmetry.triple_object((ident or ",".join(symmetry.TYPE_1_TRIPLE)).split(","))
            group = symmetry.stabilizer(triple)
            report = {
                "triple": sorted(str(m) for m in triple),
                "stabilizer": group.to_dict(),
                "structure_summary": symmetry.structure_summary(group),
            }
        elif which == "classify":
            report = symmetry.classify_pencils(strict=strict).to_dict()
        else:
            rprint(f"[red]Unknown stabilizer target {which!r}[/red]")
            raise typer.Exit(2)
        _emit("stabilizer", report, scene, passed, json_out)

    try:
        _guarded(run)
    except ValueError as e:
        rprint(f"[red]{e}[/red]")
        raise typer.Exit(2)


# === Nets ===


@app.command()
def net(
    kind: str = typer.Option("lines34", "--kind", help="lines34 or conics33"),
    scene_path: Path = typer.Option(..., "--scene", help="Hexagon scene (lines34) or octagon scene (conics33)"),
    pairing: Optional[str] = typer.Option(None, "--pairing", help="Pairing for conics33"),
    json_out: Optional[Path] = typer.Option(None, "--json", help="Write the report here"),
) -> None:
    """Build and validate a net of lines or of conics.

    Examples:
        mysticum net --kind lines34 --scene hex7.json
        mysticum net --kind conics33 --scene oct3.json --json net.json
    """
    from .theorems import nets

    scene = _load_scene(scene_path)

    def run() -> None:
        if kind == "lines34":
            from .theorems.hexagon import HexScene

            line_net = nets.build_line_net(HexScene(scene))
            dual_report = nets.validate_point_net(nets.dualize_line_net(line_net))
            report = {
                "net": line_net.to_dict(),
                "validation": nets.validate_line_net(line_net).to_dict(),
                "dual_validation": dual_report.to_dict(),
            }
            passed = dual_report.valid
        elif kind == "conics33":
            from .theorems.octagon import OctScene

            example = nets.build_example_conic_net(OctScene(scene), pairing or _config().octagon.pairing)
            report = example.to_dict()
            model = nets.net_as_p5(example.net)
            report["coefficient_model"] = model.to_dict()
            passed = example.report.valid and model.valid
        else:
            rprint(f"[red]Unknown net kind {kind!r}[/red]")
            raise typer.Exit(2)
        _emit("net", report, scene, passed, json_out)

    _guarded(run)


# === Duals and degenerations ===


@app.command()
def dual(
    statement: str = typer.Option("all", "--statement", help="all, prop6_1, thm6_2, thm6_3, thm6_4, thm6_5, thm6_6"),
    scene_path: Path = typer.Option(..., "--scene", help="Tangent hexagon or octagon scene"),
    json_out: Optional[Path] = typer.Option(None, "--json", help="Write the report here"),
) -> None:
    """Verify statements about conics inscribed in polygons, through duality.

    Examples:
        mysticum dual --statement prop6_1 --scene thex.json
        mysticum dual --scene toct.json
    """
    from .theorems import dual_degenerate

    scene = _load_scene(scene_path)
    if statement != "all" and statement not in dual_degenerate.DUAL_STATEMENTS:
        rprint(f"[red]Unknown statement {statement!r}[/red]")
        raise typer.Exit(2)
    _guarded(lambda: _statement_report("dual", dual_degenerate.verify_duals(scene, statement), scene, json_out))


@app.command()
def degenerate(
    statement: str = typer.Option("all", "--statement", help="all, prop7_1, prop7_2, prop7_3, prop7_4, pappus, limit"),
    scene_path: Path = typer.Option(..., "--scene", help="ngon or pappus scene"),
    json_out: Optional[Path] = typer.Option(None, "--json", help="Write the report here"),
) -> None:
    """Verify tangency and line-pair limits of the hexagon and octagon statements.

    Examples:
        mysticum degenerate --statement prop7_1 --scene pentagon.json
        mysticum degenerate --statement pappus --scene pappus.json
    """
    from .theorems import dual_degenerate

    scene = _load_scene(scene_path)
    if statement != "all" and statement not in dual_degenerate.DEGENERATE_STATEMENTS:
        rprint(f"[red]Unknown statement {statement!r}[/red]")
        raise typer.Exit(2)
    _guarded(lambda: _statement_report(
        "degenerate", dual_degenerate.verify_degenerates(scene, statement), scene, json_out
    ))


# === Rendering ===


@app.command()
def render(
    scene_path: Path = typer.Option(..., "--scene", help="Scene file"),
    overlay: Optional[list[str]] = typer.Option(None, "--overlay", help="pascal, steiner, kirkman, plucker, cayley, mystic, residual"),
    out: Path = typer.Option(..., "--out", "-o", help="SVG output path"),
    viewport: Optional[float] = typer.Option(None, "--viewport", help="Half-width of the drawn square"),
) -> None:
    """Draw a scene and overlays as SVG.

    Examples:
        mysticum render --scene hex7.json --overlay pascal --overlay steiner --out hex7.svg
        mysticum render --scene oct3.json --overlay mystic --overlay residual --out oct3.svg
    """
    from dataclasses import replace

    from .render import render_scene, scene_overlays

    scene = _load_scene(scene_path)
    cfg = _config().render
    if viewport is not None:
        cfg = replace(cfg, viewport=viewport)

    def run() -> None:
        svg = render_scene(scene, scene_overlays(scene, overlay or []), cfg)
        out.write_text(svg)
        rprint(f"[green]Wrote[/green] {out}")

    _guarded(run)


# === Configuration ===


@config_app.command("show")
def config_show() -> None:
    """Print the effective configuration as JSON."""
    typer.echo(dump_json({"version": __version__, **config_to_dict(_config())}), nl=False)

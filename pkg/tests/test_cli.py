import json

import pytest
from click.testing import CliRunner

from app.main import cli, run
from app.utils.corpus import petersen
from app.utils.generators import cycle


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def c5_file(graph_file):
    return graph_file(cycle(5), "c5.mg")


def _construct(runner, graph_path, tmp_path):
    certificate = tmp_path / "certificate.json"
    result = runner.invoke(cli, ["construct", str(graph_path), "-o", str(certificate)])
    assert result.exit_code == 0, result.output
    return certificate


def test_construct_then_verify(runner, c5_file, tmp_path):
    """A constructed certificate verifies against the line graph it came from"""
    certificate = _construct(runner, c5_file, tmp_path)
    result = runner.invoke(cli, ["verify", str(certificate), "--line-graph-of", str(c5_file)])
    assert result.exit_code == 0
    assert result.output.splitlines()[-1] == "overall pass"


def test_tampered_certificate_fails_verification(runner, c5_file, tmp_path):
    """An even path makes verify exit with status 1"""
    certificate = _construct(runner, c5_file, tmp_path)
    document = json.loads(certificate.read_text())
    document["paths"][2]["vertices"] = [0, 1, 2]
    certificate.write_text(json.dumps(document))
    result = runner.invoke(cli, ["verify", str(certificate)])
    assert result.exit_code == 1
    assert "check totally_odd fail" in result.output


def test_parity_check_can_be_switched_off(runner, graph_file, tmp_path):
    """C_4 has a strong K_3 with an even path, accepted only under --no-odd"""
    certificate = tmp_path / "even.json"
    c4 = str(graph_file(cycle(4), "c4.mg"))
    result = runner.invoke(cli, ["search", c4, "-t", "3", "--no-odd", "-o", str(certificate)])
    assert result.exit_code == 0, result.output
    assert runner.invoke(cli, ["verify", str(certificate)]).exit_code == 1
    assert runner.invoke(cli, ["verify", str(certificate), "--no-odd"]).exit_code == 0


def test_blowup_then_verify(runner, c5_file, tmp_path):
    """The m=3 lift of the C_5 certificate verifies as K_9"""
    certificate = _construct(runner, c5_file, tmp_path)
    lifted = tmp_path / "lifted.json"
    result = runner.invoke(
        cli, ["blowup", str(certificate), str(c5_file), "-m", "3", "-o", str(lifted)]
    )
    assert result.exit_code == 0, result.output
    assert json.loads(lifted.read_text())["t"] == 9
    assert runner.invoke(cli, ["verify", str(lifted)]).exit_code == 0


def test_verify_json_report(runner, c5_file, tmp_path):
    """--format json prints the report model"""
    certificate = _construct(runner, c5_file, tmp_path)
    result = runner.invoke(cli, ["--format", "json", "verify", str(certificate)])
    assert json.loads(result.output)["overall"] is True


def test_two_verify_targets_is_a_usage_error(runner, c5_file, tmp_path):
    """--graph and --line-graph-of exclude each other"""
    certificate = _construct(runner, c5_file, tmp_path)
    result = runner.invoke(
        cli,
        ["verify", str(certificate), "--graph", str(c5_file), "--line-graph-of", str(c5_file)],
    )
    assert result.exit_code == 2


def test_zero_budget_is_a_usage_error(runner, c5_file):
    """Budgets must be positive"""
    result = runner.invoke(cli, ["--budget", "0", "chi-index", str(c5_file)])
    assert result.exit_code == 2


def test_malformed_graph_file_fails(runner, tmp_path):
    """Parse errors exit with status 1"""
    bad = tmp_path / "bad.mg"
    bad.write_text("p mg 2 1\ne 1 3 1\n")
    result = runner.invoke(cli, ["chi-index", str(bad)])
    assert result.exit_code == 1


def test_search_exhausted(runner, graph_file):
    """C_4 has no totally odd K_3"""
    result = runner.invoke(cli, ["search", str(graph_file(cycle(4))), "-t", "3"])
    assert result.exit_code == 1
    assert result.output.startswith("outcome exhausted")


def test_search_found_in_line_graph(runner, c5_file):
    """L(C_5) = C_5 contains K_3"""
    result = runner.invoke(cli, ["search", str(c5_file), "-t", "3", "--line-graph"])
    assert result.exit_code == 0
    assert json.loads(result.output)["provenance"]["case"] == "oracle"


def test_search_out_of_budget(runner, graph_file):
    """A one-node budget ends with status 3"""
    result = runner.invoke(
        cli, ["--budget", "1", "search", str(graph_file(petersen())), "-t", "4"]
    )
    assert result.exit_code == 3


def test_chi_index_text(runner, c5_file):
    """χ'(C_5) = 3"""
    result = runner.invoke(cli, ["chi-index", str(c5_file)])
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "chromatic_index 3"


def test_chi_json(runner, c5_file):
    """χ(C_5) = 3 as JSON"""
    result = runner.invoke(cli, ["--format", "json", "chi", str(c5_file)])
    assert json.loads(result.output)["chromatic_number"] == 3


def test_linegraph_map_comments(runner, c5_file):
    """Vertex 1 of L(C_5) is the edge 1-2"""
    result = runner.invoke(cli, ["linegraph", str(c5_file)])
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "c map 1 1 2"


def test_thomassen_text(runner, c5_file):
    """C_5 with d=2 is joined at vertices 0 and 1"""
    result = runner.invoke(cli, ["thomassen", str(c5_file)])
    assert result.exit_code == 0
    assert result.output.splitlines()[:2] == ["x 0", "y 1"]


def test_critical_of_class_one_graph_fails(runner, graph_file):
    """C_4 is class 1"""
    result = runner.invoke(cli, ["critical", str(graph_file(cycle(4)))])
    assert result.exit_code == 1


def test_flower_certificate_verifies(runner, tmp_path):
    """The flower and its certificate agree"""
    graph = tmp_path / "flower.mg"
    certificate = tmp_path / "flower.json"
    result = runner.invoke(
        cli, ["flower", "4", "--padding", "1", "-o", str(graph), "--certificate", str(certificate)]
    )
    assert result.exit_code == 0, result.output
    result = runner.invoke(cli, ["verify", str(certificate), "--graph", str(graph)])
    assert result.exit_code == 0


def test_chi_bound(runner, c5_file):
    """χ(L(2C_5)) stays within 2·3"""
    result = runner.invoke(cli, ["chi-bound", str(c5_file), "-m", "2"])
    assert result.exit_code == 0
    assert result.output.splitlines()[-1] == "result pass"


def test_scan_generated_graphs(runner):
    """Connected graphs up to 4 vertices have no counterexample"""
    result = runner.invoke(cli, ["scan", "--generate", "4"])
    assert result.exit_code == 0
    assert result.output.splitlines()[-1] == (
        "summary graphs=10 counterexample_candidates=0 halted=false"
    )


def test_scan_needs_exactly_one_source(runner):
    """--generate and --random together are a usage error"""
    result = runner.invoke(cli, ["scan", "--generate", "3", "--random", "2"])
    assert result.exit_code == 2


def test_scan_random_graphs_is_seeded(runner):
    """The same seed gives the same ledger"""
    arguments = ["scan", "--random", "3", "--vertices", "5", "--seed", "7"]
    first = runner.invoke(cli, ["--format", "json", *arguments])
    second = runner.invoke(cli, ["--format", "json", *arguments])
    assert first.exit_code == 0
    canonical = [e["canonical"] for e in json.loads(first.output)["entries"]]
    assert canonical == [e["canonical"] for e in json.loads(second.output)["entries"]]


def test_run_returns_exit_status(c5_file):
    """run() maps failures to statuses instead of exiting"""
    assert run(["chi-index", str(c5_file)]) == 0
    assert run(["--budget", "0", "chi-index", str(c5_file)]) == 2

import json
from unittest.mock import MagicMock, patch

import pytest

from barClasses import generate
from graphModel import read_graph
from run import EXIT_IO, EXIT_OK, EXIT_PROPERTY, EXIT_SEED, EXIT_SIMULATION, EXIT_USAGE, build_parser, main


def _make_scenario(tmp_path, **fields):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(fields))
    return str(path)


def _stdout_json(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

def test_gen_writes_reloadable_graph(tmp_path):
    out = tmp_path / "g.json"
    assert main(["gen", "cycle:6", "-o", str(out)]) == EXIT_OK
    g = read_graph(out)
    assert len(g) == 7
    assert g == generate("cycle:6").graph
    assert json.loads(out.read_text())["witness"]["stream"]


def test_gen_to_stdout(capsys):
    assert main(["gen", "wheel:5"]) == EXIT_OK
    data = _stdout_json(capsys)
    assert data["family"] == "wheel"
    assert len(data["graph"]["nodes"]) == 5


def test_gen_edgelist(capsys):
    assert main(["gen", "wheel:4", "--format", "edgelist"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "# nodes=4 edges=6"
    assert len(lines[1:]) == 6


@pytest.mark.parametrize("spec", ["cycle:2", "moebius:5", "cycle:x"])
def test_gen_bad_spec(spec, capsys):
    assert main(["gen", spec]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# run
# ---------------------------------------------------------------------------

def test_run_wheel_marks_everything(tmp_path, capsys):
    path = _make_scenario(tmp_path, graph="wheel:6", seed_triangle=[0, 1, 2])
    assert main(["run", path]) == EXIT_OK
    assert _stdout_json(capsys)["localizable_nodes"] == [0, 1, 2, 3, 4, 5]


def test_run_two_components_marks_seed_side(tmp_path, capsys):
    path = _make_scenario(tmp_path, graph="disjoint:wheel4+wheel4")
    assert main(["run", path]) == EXIT_OK
    assert _stdout_json(capsys)["localizable_nodes"] == [0, 1, 2, 3]


def test_run_bad_seed(tmp_path):
    path = _make_scenario(tmp_path, graph="wheel:6", seed_triangle=[1, 2, 4])
    assert main(["run", path]) == EXIT_SEED


def test_run_seed_override(tmp_path, capsys):
    path = _make_scenario(tmp_path, graph="wheel:6")
    assert main(["run", path, "--seed-triangle", "0,3,4"]) == EXIT_OK
    assert _stdout_json(capsys)["seed_triangle"] == [0, 3, 4]


def test_run_is_repeatable(tmp_path, capsys):
    path = _make_scenario(tmp_path, graph="net:linked", scheduler_seed=7)
    main(["run", path])
    first = capsys.readouterr().out
    main(["run", path])
    assert capsys.readouterr().out == first


def test_run_writes_trace_and_metrics(tmp_path, capsys):
    path = _make_scenario(tmp_path, graph="cycle:5")
    trace = tmp_path / "trace.txt"
    assert main(["run", path, "--trace", str(trace), "--metrics"]) == EXIT_OK
    report = _stdout_json(capsys)
    lines = trace.read_text().splitlines()
    assert len(lines) == report["total_messages"]
    assert report["metrics"]["within_budget"]


@pytest.mark.parametrize("content", [None, "{not json", '{"seed_triangle": [0, 1, 2]}'])
def test_run_unreadable_scenario(tmp_path, content):
    path = tmp_path / "scenario.json"
    if content is not None:
        path.write_text(content)
    assert main(["run", str(path)]) == EXIT_IO


def test_run_to_s3(tmp_path):
    path = _make_scenario(tmp_path, graph="wheel:5")
    with patch("boto3.client") as factory:
        assert main(["run", path, "-o", "s3://bucket/runs/w5.json"]) == EXIT_OK
    kwargs = factory.return_value.put_object.call_args.kwargs
    assert kwargs["Key"] == "runs/w5.json"
    assert json.loads(kwargs["Body"])["num_nodes"] == 5


# ---------------------------------------------------------------------------
# oracle, ftg, trace
# ---------------------------------------------------------------------------

def test_oracle_verdict(capsys):
    assert main(["oracle", "wheel:6"]) == EXIT_OK
    verdict = _stdout_json(capsys)
    assert verdict["globally_rigid"] and verdict["three_connected"]


def test_oracle_on_file(tmp_path, capsys):
    path = tmp_path / "path.txt"
    path.write_text("0 1\n1 2\n2 3\n")
    assert main(["oracle", str(path)]) == EXIT_OK
    assert not _stdout_json(capsys)["globally_rigid"]


def test_ftg_report(capsys):
    assert main(["ftg", "cycle:5"]) == EXIT_OK
    data = _stdout_json(capsys)
    assert len(data["base_cycles"]) == 1
    assert data["components"] == 1


def test_ftg_dot(capsys):
    assert main(["ftg", "wheel:4", "--format", "dot"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("graph")


def test_ftg_root_must_be_triangle():
    assert main(["ftg", "wheel:6", "--seed-triangle", "1,2,4"]) == EXIT_SEED


def test_trace_lines(capsys):
    assert main(["trace", "wheel:4", "--scheduler-seed", "2"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    clock, kind = lines[0].split()[:2]
    assert int(clock) >= 1
    assert kind == "NBR_LIST"


# ---------------------------------------------------------------------------
# compare
# ---------------------------------------------------------------------------

def test_compare_net_passes(capsys):
    assert main(["compare", "net:linked", "--trials", "4"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert [line.split()[0] for line in lines] == ["PASS", "PASS"]


def test_compare_graft_is_sound_but_partial(capsys):
    assert main(["compare", "graft:bar=wheel6,m=3", "--trials", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "6 of 9 marked nodes" in out


def test_compare_reports_property_failure(capsys):
    with patch("run.is_globally_rigid") as oracle:
        oracle.return_value.globally_rigid = False
        assert main(["compare", "wheel:5", "--trials", "2"]) == EXIT_PROPERTY
    assert "FAIL" in capsys.readouterr().out


def test_compare_corrupted_file(tmp_path):
    path = tmp_path / "broken.txt"
    path.write_text("0 1 2\n")
    assert main(["compare", str(path)]) == EXIT_IO


def test_compare_triangle_free_has_no_seed(tmp_path):
    path = tmp_path / "square.txt"
    path.write_text("0 1\n1 2\n2 3\n3 0\n")
    assert main(["compare", str(path)]) == EXIT_SEED


def test_compare_reads_stored_graph_from_s3(capsys):
    body = generate("wheel:5").to_json().encode("utf-8")
    with patch("boto3.client") as factory:
        factory.return_value.get_object.return_value = {"Body": MagicMock(read=MagicMock(return_value=body))}
        assert main(["compare", "s3://bucket/graphs/w5.json", "--trials", "2"]) == EXIT_OK
    factory.return_value.get_object.assert_called_once_with(Bucket="bucket", Key="graphs/w5.json")
    assert "5 of 5 marked nodes" in capsys.readouterr().out


def test_compare_event_ceiling_is_an_exit_code(monkeypatch, capsys):
    monkeypatch.setenv("TRIBAR_EVENT_FACTOR", "0")
    monkeypatch.setenv("TRIBAR_EVENT_SLACK", "1")
    assert main(["compare", "wheel:5", "--trials", "1"]) == EXIT_SIMULATION
    assert "did not quiesce" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# Parser and logging
# ---------------------------------------------------------------------------

def test_seed_flag_validated():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["trace", "wheel:4", "--seed-triangle", "0,1"])


def test_log_level_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("TRIBAR_LOG_LEVEL", "debug")
    with patch("run.logging.basicConfig") as config:
        main(["gen", "wheel:4"])
    assert config.call_args.kwargs["level"] == 10

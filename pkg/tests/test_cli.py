import json

import pytest

from polycell.cli.commands import run
from polycell.core.config import settings
from polycell.corpus import builders
from polycell.formats import pcc


@pytest.fixture
def product_file(tmp_path):
    path = tmp_path / "triangle_pentagon.pcc"
    assert run(["product", "@polygon:3", "@polygon:5", "--out", str(path)]) == 0
    return path


def output_of(capsys, argv, code=0):
    assert run(argv) == code
    return capsys.readouterr().out


def test_euler_of_a_product(capsys, product_file):
    assert output_of(capsys, ["euler", str(product_file)]) == "-13\n"


def test_build_writes_a_document(tmp_path):
    path = tmp_path / "torus.pcc"
    assert run(["build", "@torus", "--out", str(path)]) == 0
    assert pcc.load(path) == builders.torus()


def test_check_reports_homology(capsys):
    text = output_of(capsys, ["check", "@projective_plane"])
    assert "betti_1: 0\n" in text
    assert "torsion: 2\n" in text
    assert "simply connected test: fails_h1\n" in text
    text = output_of(capsys, ["check", "@polygon:4", "--symmetry"])
    assert "bipartite: yes\n" in text
    assert "flag-transitive: yes\n" in text


def test_link_and_flags(capsys):
    text = output_of(capsys, ["link", "@dunce_hat", "v"])
    assert text.startswith("vertices 2:")
    assert text.count("\nedge ") == 3
    text = output_of(capsys, ["flags", "@dunce_hat", "--list"])
    assert text.startswith("flags 6\nflag-transitive no\n")


def test_automorphisms(capsys):
    assert output_of(capsys, ["aut", "@polygon:5"]).startswith("order 10\n")
    text = output_of(capsys, ["aut", "@complete:3", "--skeleton", "--generators"])
    assert text.startswith("order 6\n")
    assert "v orbits 1" in text


def test_homcount(capsys):
    assert output_of(capsys, ["homcount", "@polygon:3", "@one_gon", "--complex"]) == "2\n"
    assert output_of(capsys, ["homcount", "@complete:3", "@loop"]) == "8\n"


def test_factor_a_product(capsys, product_file):
    text = output_of(capsys, ["factor", str(product_file)])
    assert text.count("# factor") == 2
    text = output_of(capsys, ["factor", str(product_file), "--graph"])
    assert text.count("# factor") == 2


def test_blocks_and_dot(capsys):
    text = output_of(capsys, ["blocks", "@polygon:6", "@polygon:6"])
    assert all(line.startswith("block (f,f) parity ") for line in text.splitlines())
    text = output_of(capsys, ["dot", "@polygon:3"])
    assert text.startswith('graph "skeleton" {')
    text = output_of(capsys, ["dot", "--blocks", "@polygon_chain:2,6", "@polygon:6"])
    assert text.startswith('graph "blocks" {')


def test_verify_writes_a_report(capsys):
    text = output_of(capsys, ["verify", "e8", "--trials", "2", "--seed", "3"])
    report = json.loads(text)
    assert report["suite"] == "e8"
    assert report["passed"] == 2
    assert "wall_clock" not in report


def test_listing(capsys):
    text = output_of(capsys, ["suites"])
    assert text.splitlines()[0].startswith("e3a\t")
    assert "@tetrahedron" not in text
    assert "@tetrahedron\t" in output_of(capsys, ["suites", "--fixtures"])


@pytest.mark.parametrize(
    "argv",
    [
        ["euler", "@nonexistent"],
        ["euler", "@polygon:0"],
        ["euler", "missing.pcc"],
        ["factor", "@polygon:6"],
        ["link", "@polygon:3", "nowhere"],
    ],
)
def test_invalid_input_exits_with_two(argv):
    assert run(argv) == 2


def test_malformed_documents_exit_with_two(tmp_path):
    path = tmp_path / "broken.pcc"
    path.write_text("pcc 1\nvertex a\nedge e a\n", encoding="utf-8")
    assert run(["euler", str(path)]) == 2


def test_budget_exhaustion_exits_with_three(monkeypatch):
    monkeypatch.setattr(settings, "SEARCH_NODE_BUDGET", settings.SEARCH_NODE_BUDGET)
    assert run(["--budget", "2", "aut", "@cube_surface"]) == 3


def test_budget_is_accepted_after_the_subcommand(monkeypatch, capsys):
    monkeypatch.setattr(settings, "SEARCH_NODE_BUDGET", settings.SEARCH_NODE_BUDGET)
    assert run(["aut", "@cube_surface", "--budget", "2"]) == 3
    text = output_of(capsys, ["verify", "e8", "--trials", "1", "--budget", "200000"])
    assert json.loads(text)["passed"] == 1
    assert settings.SEARCH_NODE_BUDGET == 200000

import json

import pytest

from conftest import FIXTURE_DIR
from oriented_hypergraphs.cli import main

K3 = str(FIXTURE_DIR / "g1_k3.json")
STAR_PLUS = str(FIXTURE_DIR / "g2_sigma1.json")
STAR_MIXED = str(FIXTURE_DIR / "g2_sigma2.json")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_charpoly_text_output(capsys):
    code, out, _ = run(capsys, "charpoly", K3, "--matrix", "laplacian", "--mode", "det")
    assert code == 0
    assert out == "x^3 - 6x^2 + 9x\n"
    code, out, _ = run(capsys, "charpoly", K3, "--matrix", "adjacency", "--mode", "perm")
    assert code == 0
    assert out == "x^3 + 3x - 2\n"


def test_charpoly_multivariate(capsys):
    code, out, _ = run(
        capsys,
        "charpoly",
        STAR_MIXED,
        "--matrix",
        "laplacian",
        "--mode",
        "det",
        "--multivariate",
    )
    assert code == 0
    assert out.startswith("+1*x[v1,v1]*x[v2,v2]*x[v3,v3]")


def test_matrices_on_empty_input(tmp_path, capsys):
    src = tmp_path / "empty.json"
    src.write_text('{"vertices": [], "edges": [], "incidences": []}')
    code, out, _ = run(capsys, "matrices", str(src))
    assert code == 0
    assert out == "H (0x0):\nA (0x0):\nD (0x0):\nL (0x0):\n"


def test_matrices_alignment(capsys):
    code, out, _ = run(capsys, "matrices", K3)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "H (3x3):"
    assert "v2   -1    0    1" in out


def test_total_minor_and_contributors(capsys):
    code, out, _ = run(
        capsys, "total-minor", STAR_MIXED, "--target", "laplacian", "--mode", "det"
    )
    assert code == 0
    assert len(out.strip().split()) == 24
    code, out, _ = run(capsys, "contributors", STAR_PLUS)
    assert code == 0
    assert out.splitlines()[0] == "contributors: 6"
    code, out, _ = run(capsys, "contributors", K3, "--strong")
    assert out.splitlines()[0] == "contributors: 2"
    code, out, _ = run(capsys, "contributors", K3, "--class", "v1:v1")
    assert out.splitlines()[0] == "contributors: 10"
    assert "class: v1->v1" in out


def test_verify_subcommand(capsys):
    code, out, _ = run(capsys, "verify", STAR_MIXED)
    assert code == 0
    assert out.splitlines() == [
        "adjacency det: PASS",
        "adjacency perm: PASS",
        "laplacian det: PASS",
        "laplacian perm: PASS",
    ]


def test_loading_and_omega(capsys):
    code, out, _ = run(capsys, "loading", K3)
    assert code == 0
    assert "incidences: 6 -> 9" in out
    assert "added 0:0,2 at (v1, e23)" in out
    code, out, _ = run(capsys, "omega")
    assert code == 0
    assert "truth: vertex 1:v edge 1:e incidence 1:i" in out


def test_classify_subcommand(capsys):
    code, out, _ = run(
        capsys,
        "classify",
        K3,
        "--vertices",
        "v1,v2",
        "--edges",
        "e12",
        "--incidences",
        "i12a,i12b",
    )
    assert code == 0
    assert "v1 -> 1:v" in out
    assert "v3 -> 0" in out
    assert "i13a -> 0:1" in out


def test_arborescences_subcommand(capsys):
    code, out, _ = run(capsys, "arborescences", K3, "--roots", "v1")
    assert code == 0
    assert out.splitlines()[0] == "arborescences: 3"
    assert out.splitlines()[-1] == "coefficient of x[v1,v1]: 3"
    code, out, _ = run(capsys, "arborescences", K3, "--roots", "v1,v2")
    assert out.splitlines()[0] == "arborescences: 2"
    assert out.splitlines()[-1] == "coefficient of x[v1,v1]*x[v2,v2]: -2"


def test_activation_subcommand(capsys):
    code, out, _ = run(capsys, "activation", K3)
    assert code == 0
    assert out.splitlines()[0] == "activation classes: 8"


def test_exit_code_for_bad_input(tmp_path, capsys):
    src = tmp_path / "broken.json"
    src.write_text("{")
    code, _, err = run(capsys, "matrices", str(src))
    assert code == 1
    assert "error:" in err


def test_exit_code_for_bad_flag_value(capsys):
    code, _, err = run(capsys, "charpoly", K3, "--matrix", "nope", "--mode", "det")
    assert code == 1
    assert "error:" in err


def test_exit_code_for_enumeration_cap(capsys):
    code, _, err = run(capsys, "contributors", K3, "--max-enum", "3")
    assert code == 2
    assert "resource limit" in err


def test_exit_code_for_vertex_guard(capsys):
    code, _, err = run(capsys, "contributors", K3, "--max-vertices", "2")
    assert code == 2


def test_json_output_is_deterministic_and_tagged(capsys):
    code, first, _ = run(capsys, "activation", K3, "--json")
    assert code == 0
    code, second, _ = run(capsys, "activation", K3, "--json")
    assert first == second
    payload = json.loads(first)
    assert payload["format"] == 1
    assert payload["command"] == "activation"
    assert payload["count"] == 8


def test_json_charpoly_payload(capsys):
    code, out, _ = run(
        capsys, "charpoly", K3, "--matrix", "laplacian", "--mode", "det", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["coefficients"] == [0, 9, -6, 1]
    assert payload["multivariate"] is False


def test_json_total_minor_payload(capsys):
    code, out, _ = run(
        capsys, "total-minor", K3, "--target", "adjacency", "--mode", "det", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    top = payload["terms"][0]
    assert len(top["monomial"]) == 3
    assert isinstance(top["coefficient"], int)

import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zonobelt import catalog
from zonobelt.cli import format_generator_file, main, parse_generator_file
from zonobelt.errors import ParseError
from zonobelt.zonotope import GeneratorSet


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def gen_file(tmp_path):
    def write(V, name="v.txt"):
        p = tmp_path / name
        p.write_text(format_generator_file(V, "test input"))
        return str(p)
    return write


def test_parse_basic():
    V = parse_generator_file("# cube\n2 2\n1 0\n0 1\n")
    assert V.gens == ((1, 0), (0, 1))


def test_parse_rationals():
    V = parse_generator_file("2 2\n1/2 -3\n+4 0\n")
    assert V.gens[0] == (Fraction(1, 2), Fraction(4))


@pytest.mark.parametrize("text, line", [
    ("", 0),
    ("2\n1 0\n", 1),
    ("2 2\n1 0\n", 2),
    ("2 2\n1 0\n0 x\n", 3),
    ("2 2\n1 0\n0 1.5\n", 3),
    ("2 2\n1 0 0\n0 1\n", 2),
    ("2 2\n1/0 0\n0 1\n", 2),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_generator_file(text)
    assert info.value.line == line


rats = st.fractions(min_value=-20, max_value=20, max_denominator=7)


@settings(max_examples=100)
@given(st.integers(1, 4).flatmap(lambda d: st.lists(st.lists(rats, min_size=d, max_size=d), min_size=1, max_size=6)))
def test_format_parse_roundtrip(cols):
    V = GeneratorSet.from_columns(cols)
    assert parse_generator_file(format_generator_file(V, "x")).gens == V.gens


def test_check_exit_codes(capsys, gen_file):
    code, out, _ = run(capsys, "check", gen_file(catalog.cube(3).generators))
    assert code == 0 and out.startswith("parallelohedron")
    octagon = GeneratorSet.from_columns([(1, 0), (0, 1), (1, 1), (1, -1)])
    code, out, _ = run(capsys, "check", gen_file(octagon))
    assert code == 4 and "witness" in out and "directions=4" in out


def test_validation_exit_code(capsys, gen_file):
    code, _, err = run(capsys, "check", gen_file(GeneratorSet.from_columns([(1, 0, 0), (0, 1, 0)])))
    assert code == 3 and "error" in err


def test_reduce_flag(capsys, gen_file):
    path = gen_file(catalog.permutahedron_raw(3))
    assert run(capsys, "diameter", path)[0] == 3
    code, out, _ = run(capsys, "diameter", path, "--reduce")
    assert code == 0 and out.splitlines()[0] == "2"


def test_parse_exit_code(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("2 2\n1 0\n0 y\n")
    code, _, err = run(capsys, "facets", str(p))
    assert code == 2 and "line 3" in err


def test_missing_file_exit_code(capsys, tmp_path):
    assert run(capsys, "facets", str(tmp_path / "nope.txt"))[0] == 2


def test_facets_and_belts(capsys, gen_file):
    path = gen_file(catalog.hexagonal_prism().generators)
    code, out, _ = run(capsys, "facets", path)
    assert code == 0 and len(out.strip().splitlines()) == 4
    code, out, _ = run(capsys, "belts", path)
    assert code == 0 and out.strip()


def test_distance_on_paper_example(capsys, gen_file):
    path = gen_file(catalog.paper_example_6d().generators)
    code, out, _ = run(capsys, "distance", path, "--from", "0,1,2,3,4", "--to", "{5,6,7,8,9}")
    assert code == 0 and out.splitlines()[0] == "3"


def test_diameter_prints_bound_line(capsys, gen_file):
    code, out, _ = run(capsys, "diameter", gen_file(catalog.paper_example_6d().generators))
    lines = out.splitlines()
    assert code == 0 and lines[0] == "3"
    assert any("bound" in line for line in lines)


def test_normal_form_command(capsys, gen_file):
    path = gen_file(catalog.paper_example_6d().generators)
    code, out, _ = run(capsys, "normal-form", path, "--e", "0,1,2,3,4", "--f", "5,6,7,8,9")
    assert code == 0
    assert "1 1 0 0 0" in out


def test_catalog_list_and_emit(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "paper6d" in out.split()
    code, out, _ = run(capsys, "catalog", "rhombic_dodecahedron", "--emit")
    assert parse_generator_file(out).gens == catalog.rhombic_dodecahedron().generators.gens
    assert run(capsys, "catalog", "nothing")[0] == 3


def test_search_spot(capsys):
    code, out, _ = run(capsys, "search", "--dim", "6", "--spot", "1100001100001100001110001")
    data = json.loads(out)
    assert code == 0 and data["maxPairDistance"] == 3


def test_search_d4_default_and_full(capsys):
    _, out, _ = run(capsys, "search", "--dim", "4")
    reduced = json.loads(out)
    _, out, _ = run(capsys, "search", "--dim", "4", "--full")
    full = json.loads(out)
    assert full["scanned"] == 512 and reduced["scanned"] < 512
    assert full["maxPairDistance"] == reduced["maxPairDistance"] == 2


def test_search_checkpoint_resume(capsys, tmp_path):
    ck = str(tmp_path / "ck.json")
    _, out, _ = run(capsys, "search", "--dim", "4", "--full", "--checkpoint", ck, "--stop-after", "100")
    assert json.loads(out)["complete"] is False
    _, out, _ = run(capsys, "search", "--dim", "4", "--full", "--checkpoint", ck)
    assert json.loads(out)["complete"] is True


def test_export_graph(capsys, gen_file):
    path = gen_file(catalog.rhombic_dodecahedron().generators)
    code, out, _ = run(capsys, "export-graph", path, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["version"] == 1 and len(data["nodes"]) == 6
    code, out, _ = run(capsys, "export-graph", path)
    assert out.startswith("graph belts {") and "F0 --" in out


def test_stdin_and_module_entry(tmp_path):
    text = format_generator_file(catalog.cube(3).generators)
    res = subprocess.run([sys.executable, "-m", "zonobelt", "diameter", "-"], input=text,
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.splitlines()[0] == "1"

import json
import random
from fractions import Fraction

import pytest

from conftest import random_germ, random_t
from valinterp import io
from valinterp.cli import run
from valinterp.interp import decide
from valinterp.intersect import CurveGerm, factorial_curve
from valinterp.poly import INF, format_poly
from valinterp.valtree import QMValuation


def cli(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def factorial_instance(bs):
    return {
        "vars": ["x", "y"],
        "curves": [{"poly": format_poly(factorial_curve(j), ["x", "y"]), "b": str(b), "irreducible": "verify"}
                   for j, b in enumerate(bs, 1)],
    }


@pytest.fixture
def instance_file(tmp_path):
    def write(data, name="inst.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)
    return write


# --- JSON -----------------------------------------------------------------------


def test_jsonable_types():
    assert io.jsonable({"a": [Fraction(3, 2), INF, 4, None, True]}) == {"a": ["3/2", "inf", 4, None, True]}
    with pytest.raises(TypeError):
        io.jsonable(0.5)


def test_instance_round_trip():
    rng = random.Random(8)
    for _ in range(20):
        v = QMValuation(random_germ(rng), random_t(rng))
        items = []
        for _ in range(3):
            g = random_germ(rng)
            items.append((g, v(g)))
        data = json.loads(json.dumps(io.instance_to_json(items)))
        back, vars = io.parse_instance(data)
        assert [(g.poly, b) for g, b in back] == [(g.poly, b) for g, b in items]


def test_result_round_trip():
    items, _ = io.parse_instance(factorial_instance([2, 3, 5]))
    res = decide(items)
    data = json.loads(json.dumps(io.result_to_json(res)))
    v = io.solution_from_json(data)
    assert v.t == 5 and v.curve.poly == factorial_curve(3)
    assert data["certificate"]["B"] == ["2", "3", "5"]


@pytest.mark.parametrize(
    "data",
    [{}, {"curves": []}, {"curves": [{"poly": "y"}]}, {"vars": ["x"], "curves": [{"poly": "y", "b": "1"}]},
     {"curves": [{"poly": "y", "b": "1", "irreducible": "maybe"}]}],
)
def test_bad_instances(data):
    with pytest.raises(ValueError):
        io.parse_instance(data)


# --- CLI --------------------------------------------------------------------------


def test_cli_imult_and_skewness(capsys):
    assert cli(capsys, "imult", "y^2-x^3", "y-x^2") == (0, "3\n", "")
    assert cli(capsys, "imult", "x*y", "x")[1] == "inf\n"
    assert cli(capsys, "skewness", "(y^2-x^3)^3 - x^10", "y^2-x^3")[1] == "5/3\n"
    assert cli(capsys, "mult", "y^2-x^3")[1] == "2\n"
    assert cli(capsys, "oracle-imult", "y^2-x^3", "y^3-x^2")[1] == "4\n"
    assert cli(capsys, "imult", "v^2-u^3", "v-u^2", "--vars", "u,v")[1] == "3\n"


def test_cli_interpolate_text_and_json_agree(capsys, instance_file):
    path = instance_file(factorial_instance([2, 3, 5]))
    code, text, _ = cli(capsys, "interpolate", "--input", path)
    assert code == 0 and text.startswith("yes: minimal solution v = (")
    code, out, _ = cli(capsys, "interpolate", "--input", path, "--json")
    data = json.loads(out)
    assert data["decision"] == "yes" and data["minimal_solution"]["t"] == "5"
    assert f"t={data['minimal_solution']['t']}" in text
    assert data["minimal_solution"]["curve"] in text


def test_cli_interpolate_no(capsys, instance_file):
    code, text, _ = cli(capsys, "interpolate", "--input", instance_file(factorial_instance([2, 2, 5])))
    assert code == 0
    assert text.startswith("no: condition2 fails at pair (3, 2): skewness 3, required == 2")


def test_cli_evaluate(capsys, instance_file, tmp_path):
    inst = instance_file(factorial_instance([2, 3, 5]))
    code, out, _ = cli(capsys, "interpolate", "--input", inst, "--json")
    sol = tmp_path / "sol.json"
    sol.write_text(out)
    code, text, _ = cli(capsys, "evaluate", "--solution", str(sol), "--instance", inst)
    assert code == 0 and text.splitlines()[0] == "all targets match"
    code, text, _ = cli(capsys, "evaluate", "--curve", "y", "--t", "3/2", "y^2-x^3", "x")
    assert text.splitlines() == ["v(y^2 - x^3) = 3", "v(x) = 1"]


def test_cli_check_sequence(capsys, instance_file):
    code, text, _ = cli(capsys, "check-sequence", "--input", instance_file(factorial_instance(range(2, 8))))
    assert code == 0 and text.startswith("pass: 15 pairs")
    code, out, _ = cli(capsys, "check-sequence", "--json", "--input",
                       instance_file(factorial_instance([2, 3, 4, 6, 7, 8])))
    assert json.loads(out)["first_failure"]["pair"] == [5, 4]


def test_cli_monomial(capsys, instance_file):
    assert cli(capsys, "monomial-sigma", "--vars", "2", "--a", "1", "--a", "1", "z1^4*z2^4")[1] == "8\n"
    assert cli(capsys, "monomial-jump", "--vars", "2", "--a", "3", "--a", "5", "1")[1] == "8/15\n"
    code, out, _ = cli(capsys, "monomial-tian", "--vars", "2", "--a", "1", "--a", "2", "--t", "2", "z1+z2", "--json")
    assert json.loads(out) == {"t": "2", "value": "5/2", "exact": "5/2", "consistent": True}
    code, text, _ = cli(capsys, "monomial-decide", "--pair", "1,0:1", "--pair", "0,1:2", "--pair", "1,1:4")
    assert code == 0 and text.startswith("no: sigma = 8 != 7")
    path = instance_file({"pairs": [{"beta": [1, 0], "a": "1"}, {"beta": [0, 1], "a": "2"},
                                    {"beta": [1, 1], "a": "3"}]}, "pairs.json")
    code, out, _ = cli(capsys, "monomial-decide", "--input", path, "--json")
    assert json.loads(out)["witness"] == ["1", "2"]
    path = instance_file({"vars": 2, "a": ["1/3", "1/2"], "f": "z1^2*z2 - z1*z2^2"}, "m.json")
    assert cli(capsys, "monomial-sigma", "--input", path)[1] == "7\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["imult", "2x", "y"],
        ["imult", "x"],
        ["bogus"],
        [],
        ["interpolate", "--input", "/nonexistent.json"],
        ["monomial-sigma", "z1"],
        ["monomial-decide", "--pair", "1,0"],
        ["oracle-imult", "x*y", "x"],
        ["skewness", "x*y", "x", "--irreducible", "verify"],
    ],
)
def test_cli_invalid_input_exits_1(capsys, argv):
    code, out, err = cli(capsys, *argv)
    assert code == 1 and err


def test_cli_instance_error_exits_1(capsys, instance_file):
    data = {"curves": [{"poly": "y", "b": "2"}, {"poly": "2*y", "b": "3"}]}
    code, _, err = cli(capsys, "interpolate", "--input", instance_file(data))
    assert code == 1 and "same curve" in err


def test_cli_inconsistency_exits_2(capsys, monkeypatch):
    import valinterp.cli as mod
    from valinterp.lp import InconsistencyError

    def boom(pairs):
        raise InconsistencyError("routes disagree")
    monkeypatch.setattr(mod, "monomial_interp_decide", boom)
    code, _, err = cli(capsys, "monomial-decide", "--pair", "1,0:1")
    assert code == 2 and "routes disagree" in err

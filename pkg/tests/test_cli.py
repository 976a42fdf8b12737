import json

import jsonschema
import pytest

from frl import cli, schemas
from frl.groupring import GroupRingElement
from frl.words import Word

# (argv, expected exit status)
CORPUS = [
    (["translate", "--sentence", "E x . (x*x = 1 & ~(x = 1))"], 0),
    (["translate", "--sentence", "E x . x = 1"], 2),
    (["translate", "--sentence", "E x . (x*x = 1 & ~(x = 1)"], 2),
    (["check", "--model", "zfree", "--sentence", "A x . A y . x*y = y*x", "--word-len", "1"], 1),
    (["check", "--model", "free", "--sentence", "A x . (x*x = 1 -> x = 1)", "--word-len", "3"], 0),
    (["check", "--model", "zfree", "--sentence", "A x . ((G(x) & x^2 = 1) -> x = 1)"], 0),
    (["check", "--model", "zfree", "--sentence", "E x . ((G(x) & x^2 = 1) & ~(x = 1))"], 1),
    (["check", "--model", "free", "--sentence", "E x . ~(x = 1)"], 0),
    (["check", "--model", "sym:2", "--sentence", "A x . (x^2 = 1 -> x = 1)"], 1),
    (["check", "--model", "sym:4", "--sentence",
      "A x . A y . A z . (((~(y = 1) & x*y = y*x) & y*z = z*y) -> x*z = z*x)"], 1),
    (["check", "--model", "zp-sym:2:2", "--sentence", "A x . ((P(x) & x^2 = 0) -> x = 0)"], 0),
    (["check", "--model", "zp-sym:2:4", "--sentence", "A x . x = x"], 2),
    (["check", "--model", "mystery", "--sentence", "A x . x = x"], 2),
    (["check", "--model", "free", "--sentence", "A x . E y . x = y"], 2),
    (["check", "--sentence", "A x . x = x", "--word-len", "-1"], 2),
    (["classify", "--sentence", "A x . (x*x = 1 -> x = 1)"], 0),
    (["classify", "--sentence", "A x . ((P(x) & x^2 = 0) -> x = 0)"], 0),
    (["classify", "--sentence", "A x . G(x)", "--language", "L0"], 2),
    (["axioms", "--family", "torsion", "--n-max", "4"], 0),
    (["axioms", "--family", "rct"], 0),
    (["axioms", "--family", "bogus"], 2),
    (["diagram", "--constants", "1,a", "--depth", "1"], 0),
    (["diagram", "--constants", "a,a", "--depth", "1"], 2),
    (["separate", "--element", "[1*a - 1*b]"], 0),
    (["separate", "--element", "[0]"], 2),
    (["zerodivisor", "--element", "[1 - 1*a]", "--radius", "2"], 0),
    (["zerodivisor", "--element", "[1 - 1*a]", "--cyclic", "3"], 0),
    (["stallings", "--subgroup", "a*a,b", "--word", "a*a*b"], 0),
    (["stallings", "--subgroup", "a*a,b", "--word", "a"], 1),
    (["intersect", "--subgroup", "a*a,b", "--subgroup", "a"], 0),
    (["eval", "--model", "zfree", "--formula", "x*y = y*x", "--assign", "x=a,y=b"], 1),
    (["eval", "--model", "zfree", "--formula", "G(x)", "--assign", "x=[1*a*b]"], 0),
    ([], 2),
]


def run(capsys, argv):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_corpus_size():
    assert len(CORPUS) >= 30


@pytest.mark.parametrize("argv,expected", CORPUS, ids=[" ".join(a[:1]) + f"-{i}" for i, (a, _) in enumerate(CORPUS)])
def test_exit_codes(capsys, argv, expected):
    code, out, err = run(capsys, argv)
    assert code == expected, err
    if argv:
        assert err.startswith("# seed: ") or expected == 2


@pytest.mark.parametrize("argv,expected", [c for c in CORPUS if c[0] and c[1] != 2])
def test_json_output_validates(capsys, argv, expected):
    code, out, _ = run(capsys, argv + ["--json"])
    assert code == expected
    jsonschema.validate(json.loads(out), schemas.BY_COMMAND[argv[0]])


def test_translate_output(capsys):
    _, out, _ = run(capsys, CORPUS[0][0])
    assert out == "A x . ((G(x) & x*x = 1) -> 1 - x = 0)\n"


def test_separate_certificate(capsys):
    _, out, _ = run(capsys, ["separate", "--element", "[1*a - 1*b]"])
    assert json.loads(out) == {"degree": 2, "images": {"a": [2, 1], "b": [1, 2]}, "prime": 2,
                               "image_terms": [[1, [1, 2]], [1, [2, 1]]]}


def test_text_and_json_verdicts_agree(capsys):
    argv = ["check", "--model", "free", "--sentence", "A x . A y . x*y = y*x", "--word-len", "1"]
    _, text, _ = run(capsys, argv)
    _, raw, _ = run(capsys, argv + ["--json"])
    data = json.loads(raw)
    assert text.strip() == f"{data['verdict']}: " + ", ".join(f"{k} = {v}" for k, v in data["assignment"].items())


def test_error_reports_position(capsys):
    code, _, err = run(capsys, ["classify", "--sentence", "A x . (x = 1"])
    assert code == 2 and "position 12" in err and "^" in err


def test_environment_defaults(capsys, monkeypatch):
    monkeypatch.setenv("FRL_SEED", "17")
    monkeypatch.setenv("FRL_RANK", "3")
    code, out, err = run(capsys, ["intersect", "--subgroup", "a,c", "--subgroup", "c", "--json"])
    assert code == 0 and err.startswith("# seed: 17")
    assert json.loads(out)["basis"] == ["c"]
    code, _, err = run(capsys, ["axioms", "--family", "ct", "--seed", "4"])
    assert err.startswith("# seed: 4")
    monkeypatch.setenv("FRL_RANK", "x")
    assert run(capsys, ["axioms", "--family", "ct"])[0] == 2


def test_seed_makes_separation_reproducible(capsys):
    argv = ["separate", "--element", "[1*a*b*a - 2*b*a*b + 3*a^3]", "--seed", "9"]
    assert run(capsys, argv)[1] == run(capsys, argv)[1]


def test_parse_ring_literal_reexport():
    assert cli.parse_ring_literal("[1 - 1*a]") == GroupRingElement([(Word(), 1), (Word([1]), -1)])
    assert cli.parse_ring_literal("[0*a]").is_zero()
    assert str(cli.parse_ring_literal("[2*a*b^-1 + 3]")) == "[3 + 2*a*b^-1]"


def test_split_list():
    assert cli.split_list("[1 - 1*a], b,1") == ["[1 - 1*a]", "b", "1"]
    with pytest.raises(cli.UsageError):
        cli.split_list("a,,b")

import json
from fractions import Fraction

import pytest

from corecover import (
    ParseError,
    format_pattern,
    format_rational,
    format_sign_vector,
    parse_arrangement,
    parse_pattern,
    parse_rational,
    parse_sign_vector,
    serialize_arrangement,
)
from corecover.cli import main
from corecover.stability import Status

F = Fraction
Z, W, O, B = Status.Z, Status.W, Status.ZERO, Status.BOTH

A2_DOC = {
    "dim": 1,
    "normals": [[-1], [1], [1]],
    "lifts": ["1", "-1/2", "0"],
}
HIRZ_DOC = {
    "dim": 2,
    "normals": [[1, 0], [0, 1], [-1, -1], [0, -1]],
    "lifts": ["1", "1", "1", "1"],
}


def write(tmp_path, doc, name="arr.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


class TestRationals:
    def test_parse(self):
        assert parse_rational("-1/2") == F(-1, 2)
        assert parse_rational("7") == F(7)

    @pytest.mark.parametrize("bad", ["1/0", "1/-2", "2/4", "0.5", "", "1 /2", "+3"])
    def test_rejects(self, bad):
        with pytest.raises(ParseError):
            parse_rational(bad)

    def test_format(self):
        assert format_rational(F(-1, 2)) == "-1/2"
        assert format_rational(F(4, 2)) == "2"


class TestArrangementFile:
    def test_parse_a2(self):
        arr = parse_arrangement(json.dumps(A2_DOC))
        assert arr.n == 1 and arr.d == 3
        assert arr.lifts == (F(1), F(-1, 2), F(0))

    def test_parse_trapezoid(self):
        arr = parse_arrangement(json.dumps(HIRZ_DOC).encode("utf-8"))
        assert arr.normals == ((1, 0), (0, 1), (-1, -1), (0, -1))

    def test_non_primitive_message(self):
        doc = dict(HIRZ_DOC, normals=[[2, 0], [0, 1], [-1, -1], [0, -1]])
        with pytest.raises(ParseError, match="normal 1 not primitive"):
            parse_arrangement(json.dumps(doc))

    def test_rank_message(self):
        doc = {"dim": 2, "normals": [[1, 0], [-1, 0]], "lifts": ["0", "1"]}
        with pytest.raises(ParseError, match="normals do not span"):
            parse_arrangement(json.dumps(doc))

    def test_bad_lift_message(self):
        doc = dict(A2_DOC, lifts=["1", "2/4", "0"])
        with pytest.raises(ParseError, match="bad lift 2"):
            parse_arrangement(json.dumps(doc))

    def test_missing_key(self):
        with pytest.raises(ParseError, match="missing key: lifts"):
            parse_arrangement(json.dumps({"dim": 1, "normals": [[1]]}))

    def test_unexpected_key(self):
        with pytest.raises(ParseError, match="unexpected key"):
            parse_arrangement(json.dumps(dict(A2_DOC, extra=1)))

    def test_bool_entry_rejected(self):
        doc = dict(A2_DOC, normals=[[True], [1], [1]])
        with pytest.raises(ParseError, match="non-integer"):
            parse_arrangement(json.dumps(doc))

    def test_invalid_json(self):
        with pytest.raises(ParseError, match="invalid JSON"):
            parse_arrangement(b"{nope")

    def test_roundtrip_identity(self):
        arr = parse_arrangement(json.dumps(dict(A2_DOC, name="a2")))
        again = parse_arrangement(serialize_arrangement(arr))
        assert again == arr and again.name == "a2"

    def test_serialize_canonical(self):
        arr = parse_arrangement(json.dumps(A2_DOC))
        text = serialize_arrangement(arr)
        assert text == serialize_arrangement(parse_arrangement(text))
        assert list(json.loads(text)) == ["dim", "normals", "lifts"]

    def test_random_roundtrip(self):
        import random

        from corecover.randgen import random_smooth_arrangement

        rng = random.Random(13)
        for _ in range(25):
            arr = random_smooth_arrangement(rng, max_d=6)
            assert parse_arrangement(serialize_arrangement(arr)) == arr


class TestPatternCodec:
    def test_roundtrip(self):
        assert parse_pattern("zw0*", 4) == (Z, W, O, B)
        assert format_pattern((Z, W, O, B)) == "zw0*"

    def test_bad_char_position(self):
        with pytest.raises(ParseError, match="position 3"):
            parse_pattern("zwx0", 4)

    def test_bad_length(self):
        with pytest.raises(ParseError):
            parse_pattern("zw", 4)

    def test_signs(self):
        assert parse_sign_vector("+-+", 3) == (1, -1, 1)
        assert format_sign_vector((1, -1, 1)) == "+-+"
        with pytest.raises(ParseError, match="position 2"):
            parse_sign_vector("+x-", 3)


class TestCli:
    def test_check_smooth(self, tmp_path, capsys):
        code = main(["check", write(tmp_path, HIRZ_DOC)])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out == {"regular": True, "simple": True, "smooth": True}

    def test_check_not_smooth(self, tmp_path, capsys):
        doc = {"dim": 1, "normals": [[-1], [1], [1]], "lifts": ["1", "-1", "0"]}
        code = main(["check", write(tmp_path, doc)])
        out = json.loads(capsys.readouterr().out)
        assert code == 1
        assert out["simple"] is False

    def test_stability_semistable(self, tmp_path, capsys):
        code = main(["stability", write(tmp_path, A2_DOC), "--pattern", "zw0"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["semistable"] is True
        assert out["witness"] == ["1", "-1/2", "0"]

    def test_stability_unstable_exit_1(self, tmp_path, capsys):
        code = main(["stability", write(tmp_path, A2_DOC), "--pattern", "000"])
        out = json.loads(capsys.readouterr().out)
        assert code == 1
        assert out["semistable"] is False and "farkas" in out

    def test_stability_trapezoid_bottom(self, tmp_path, capsys):
        code = main(["stability", write(tmp_path, HIRZ_DOC), "--pattern", "z0zz"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0 and out["semistable"] is True

    def test_stability_bad_pattern_exit_2(self, tmp_path, capsys):
        code = main(["stability", write(tmp_path, A2_DOC), "--pattern", "zq0"])
        err = capsys.readouterr().err
        assert code == 2 and "position 2" in err

    def test_star_pattern_realizability(self, tmp_path, capsys):
        code = main(["stability", write(tmp_path, A2_DOC), "--pattern", "*zz"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["realizable"] is False
        assert out["semistable"] is True

    def test_cover(self, tmp_path, capsys):
        code = main(["cover", write(tmp_path, A2_DOC)])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out == {"covered": True, "witness_count": 7, "counterexamples": []}

    def test_cover_empty_core_exit_2(self, tmp_path, capsys):
        doc = {"dim": 2, "normals": [[1, 0], [1, 0], [0, 1]], "lifts": ["0", "-1", "0"]}
        code = main(["cover", write(tmp_path, doc)])
        assert code == 2
        assert "hypothesis" in capsys.readouterr().err

    def test_core(self, tmp_path, capsys):
        code = main(["core", write(tmp_path, A2_DOC)])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["theta_cpt_count"] == 2
        kinds = {c["eps"]: c["classification"] for c in out["components"]}
        assert kinds == {
            "-++": "unbounded",
            "+++": "bounded",
            "+-+": "bounded",
            "+--": "unbounded",
        }
        bounded = [c for c in out["components"] if c["classification"] == "bounded"]
        assert bounded[0]["vertices"] == [["1/2"], ["1"]]

    def test_density(self, tmp_path, capsys):
        code = main(["density", write(tmp_path, A2_DOC)])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["all_hold"] is True
        assert len(out["density"]) == 8

    def test_complement(self, tmp_path, capsys):
        code = main(["complement", write(tmp_path, A2_DOC), "--chart=+++"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["excluded_patterns"] == ["zww", "zw0"]
        assert out["all_in_extended_core"] is True
        assert out["max_state_dim"] == 1
        assert out["component_breakdown"] == {
            "+-+": ["zw0"],
            "+--": ["zww", "zw0"],
        }

    def test_report(self, tmp_path, capsys):
        code = main(["report", write(tmp_path, A2_DOC)])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert list(out) == ["smooth", "torus", "core", "covering", "density"]
        assert out["torus"]["m"] == 2
        assert out["torus"]["alpha"] == ["1", "-1/2"]
        assert out["covering"]["covered"] is True

    def test_report_with_chart(self, tmp_path, capsys):
        code = main(["report", write(tmp_path, A2_DOC), "--chart", "+++"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0 and "complement" in out

    def test_report_empty_core(self, tmp_path, capsys):
        doc = {"dim": 2, "normals": [[1, 0], [1, 0], [0, 1]], "lifts": ["0", "-1", "0"]}
        code = main(["report", write(tmp_path, doc)])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["covering"] is None
        assert out["core"]["theta_cpt_count"] == 0

    def test_guard_env_var(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("CORECOVER_MAX_D", "2")
        code = main(["cover", write(tmp_path, A2_DOC)])
        assert code == 2
        capsys.readouterr()
        code = main(["cover", write(tmp_path, A2_DOC), "--force"])
        assert code == 0

    def test_seed_flag_accepted(self, tmp_path, capsys):
        code = main(["cover", write(tmp_path, A2_DOC), "--seed", "7"])
        assert code == 0

    def test_missing_file_exit_2(self, capsys):
        assert main(["check", "/nonexistent/arr.json"]) == 2

    def test_unknown_command_exit_2(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_render(self, tmp_path):
        out = tmp_path / "pic.svg"
        code = main(["render", write(tmp_path, HIRZ_DOC), "-o", str(out)])
        assert code == 0
        assert out.read_text().startswith("<?xml")

    def test_render_high_dim_exit_2(self, tmp_path, capsys):
        doc = {
            "dim": 3,
            "normals": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            "lifts": ["0", "0", "0"],
        }
        code = main(["render", write(tmp_path, doc), "-o", str(tmp_path / "x.svg")])
        assert code == 2
        assert "n <= 2" in capsys.readouterr().err

    def test_fixture_files_parse(self):
        import pathlib

        for path in sorted(pathlib.Path("fixtures").glob("*.json")):
            arr = parse_arrangement(path.read_bytes())
            assert arr.d >= arr.n

import io
import json

import pytest

from cellrook import cli


@pytest.fixture
def shape_file(tmp_path):
    def make(text, name="shape.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return make


def call(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.run(argv, out)
    return code, out.getvalue()


def test_poly_square(shape_file):
    assert call(["poly", shape_file("##\n##\n")]) == (0, "1 + 4t + t^2\n")


def test_poly_json(shape_file):
    assert call(["poly", "--json", shape_file(".#.\n###\n.#.\n")]) == (0, "[1, 5, 4]\n")


def test_poly_stdin(monkeypatch):
    assert call(["poly"], "1 1\n2 1\n1 2\n", monkeypatch) == (0, "1 + 3t + t^2\n")


def test_enumerate_count():
    assert call(["enumerate", "--rank", "4", "--universe", "poly", "--emit=count"]) == (0, "5\n")
    assert call(["enumerate", "--rank", "3", "--universe", "collection", "--emit", "count"]) == (0, "5\n")


def test_enumerate_text_and_json():
    code, text = call(["enumerate", "--rank", "3"])
    assert code == 0
    assert text.count("; poly rank 3") == 2
    code, lines = call(["enumerate", "--rank", "3", "--emit", "json"])
    assert [json.loads(line)["cells"] for line in lines.splitlines()][0]


def test_stable_plus(shape_file):
    code, text = call(["stable", shape_file(".#.\n###\n.#.\n")])
    assert code == 0
    first, witness = text.splitlines()
    assert first == "false"
    assert "not a square" in witness


def test_stable_alignment(shape_file):
    path = shape_file(".#\n##.#\n#.#\n")
    assert call(["stable", path])[1].startswith("false")
    assert call(["stable", path, "--alignment", "coordinate"]) == (0, "true\n")


def test_rook_number_and_classes(shape_file):
    path = shape_file("###\n###\n###\n")
    assert call(["rook-number", path]) == (0, "3\n")
    assert call(["classes", path, "--k", "2"]) == (0, "9\n")


def test_classes_out_of_range(shape_file):
    assert call(["classes", shape_file("##\n"), "--k", "3"])[0] == 2


def test_show(shape_file):
    code, text = call(["show", shape_file(".#.\n###\n.#.\n")])
    assert code == 0
    for key in ("rank 5", "rows (3)", "columns (3)", "maximal rectangles (2)",
                "residue (1,2) (3,2)", "stable squares", "not square"):
        assert key in text


@pytest.mark.parametrize("emit", ["coords", "json"])
def test_show_emit(shape_file, emit):
    code, text = call(["show", shape_file("#\n##\n"), "--emit", emit])
    assert code == 0
    assert ("1 1" in text) if emit == "coords" else ('"cells"' in text)


def test_verify(shape_file):
    code, text = call(["verify", shape_file("##\n##\n")])
    assert code == 0
    assert "polynomial 1 + 4t + t^2" in text
    assert "domino-stable true  palindromic true" in text
    code, line = call(["verify", "--json", shape_file("##\n##\n")])
    assert json.loads(line)["checks"]["theorem"] == "pass"


def test_verify_failure_exit(shape_file):
    path = shape_file(".#\n##.#\n#.#\n")
    assert call(["verify", path])[0] == 0
    assert call(["verify", path, "--alignment", "coordinate"])[0] == 1


def test_corpus_verify(tmp_path):
    reports = tmp_path / "r.jsonl"
    code, text = call(["corpus-verify", "--rank", "5", "--min-rank", "1",
                       "--universe", "poly", "--reports", str(reports)])
    assert code == 0
    agg = json.loads(text)
    assert agg["total"] == 1 + 1 + 2 + 5 + 12 and agg["failures"] == 0
    lines = reports.read_text().splitlines()
    assert len(lines) == agg["total"]
    assert set(json.loads(lines[0])) == {"id", "rank", "poly", "stable", "palindromic", "checks"}


def test_corpus_counterexample():
    code, text = call(["corpus-verify", "--rank", "6", "--universe", "collection",
                       "--alignment", "coordinate"])
    assert code == 1
    assert text.startswith("counterexample ")


def test_corpus_keep_going_audit():
    code, text = call(["corpus-verify", "--rank", "6", "--universe", "collection",
                       "--alignment", "coordinate", "--keep-going"])
    assert code == 1
    assert json.loads(text)["failures"] == 1
    code, text = call(["corpus-verify", "--rank", "6", "--universe", "collection",
                       "--audit-alignment"])
    assert code == 0
    assert len(json.loads(text)["alignment_disagreements"]) == 1


def test_corpus_jobs_same_aggregate():
    argv = ["corpus-verify", "--rank", "6", "--min-rank", "2", "--universe", "collection"]
    assert call(argv + ["--jobs", "1"]) == call(argv + ["--jobs", "2"])


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["enumerate"], ["enumerate", "--rank", "x"], ["classes", "-"],
    ["enumerate", "--rank", "40"], ["corpus-verify", "--rank", "3", "--min-rank", "5"],
])
def test_usage_errors(argv):
    assert call(argv)[0] == 2


def test_parse_error(shape_file):
    assert call(["poly", shape_file("#?#\n")])[0] == 2
    assert call(["poly", "/nonexistent/shape.txt"])[0] == 2


def test_determinism(shape_file):
    path = shape_file("..#\n..##\n.##\n##\n.#\n")
    for verb in (["show"], ["poly"], ["verify"], ["stable"]):
        assert call(verb + [path]) == call(verb + [path])
    argv = ["enumerate", "--rank", "6", "--universe", "collection"]
    assert call(argv) == call(argv)


def test_jobs_env(monkeypatch):
    monkeypatch.setenv("CELLROOK_JOBS", "2")
    assert call(["enumerate", "--rank", "7", "--emit", "count"]) == (0, "108\n")

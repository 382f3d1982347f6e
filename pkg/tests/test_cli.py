import subprocess
import sys

import pytest

from pancyclic import cli
from pancyclic.digraph import complete, directed_cycle, format_digraph, parse_digraph
from pancyclic.families import FAMILY_NAMES, build_h2m, build_h_mm, recognize
from pancyclic.lemmas import LemmaReport, Status


@pytest.fixture
def write(tmp_path):
    def _write(d_or_text, name="d.txt"):
        path = tmp_path / name
        path.write_text(d_or_text if isinstance(d_or_text, str) else format_digraph(d_or_text))
        return str(path)
    return _write


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestSpectrum:
    def test_complete_four(self, capsys, write):
        code, out, _ = run(capsys, "spectrum", write(complete(4)))
        assert code == 0
        assert out == "spectrum=2,3,4 pancyclic=true hamiltonian=true\n"

    def test_directed_five_cycle(self, capsys, write):
        code, out, _ = run(capsys, "spectrum", write(directed_cycle(5)))
        assert out == "spectrum=5 pancyclic=false hamiltonian=true\n"

    def test_malformed_row(self, capsys, write):
        code, out, err = run(capsys, "spectrum", write("3\n010\n00\n100\n"))
        assert code == 2 and out == ""
        assert "line 3" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "spectrum", str(tmp_path / "nope.txt"))
        assert code == 1 and "cannot read" in err


class TestFamily:
    def test_h_mm_round_trip(self, capsys):
        code, out, _ = run(capsys, "family", "h_mm", "--m", "5")
        assert code == 0
        d = parse_digraph(out)
        assert d.p == 10 and d == build_h_mm(5)
        assert format_digraph(d) == out
        assert str(recognize(d)) == "Hmm(5)"

    def test_two_cliques_cut(self, capsys):
        _, out, _ = run(capsys, "family", "two_cliques_cut", "--m", "3")
        assert parse_digraph(out).p == 7

    def test_prime(self, capsys):
        _, out, _ = run(capsys, "family", "h2m", "--m", "5", "--prime")
        assert parse_digraph(out) == build_h2m(5, prime=True)
        _, out2, _ = run(capsys, "family", "h2m_prime", "--m", "5")
        assert out2 == out

    @pytest.mark.parametrize("name", FAMILY_NAMES)
    def test_every_name_round_trips(self, capsys, name):
        _, out, _ = run(capsys, "family", name, "--m", "3")
        assert format_digraph(parse_digraph(out)) == out
        assert recognize(parse_digraph(out)) is not None

    def test_orientation(self, capsys):
        _, out, _ = run(capsys, "family", "h_mm1", "--m", "4", "--orientation", "out")
        assert str(recognize(parse_digraph(out))) == "Hmm1(4,out)"

    def test_bad_m(self, capsys):
        code, _, err = run(capsys, "family", "h_mm", "--m", "1")
        assert code == 1 and "m must be >= 2" in err


class TestRecognizeCheck:
    def test_recognize(self, capsys, write):
        _, out, _ = run(capsys, "recognize", write(build_h_mm(3)))
        assert out == "Hmm(3) A={0,1,2} B={3,4,5}\n"
        _, out, _ = run(capsys, "recognize", write(complete(5)))
        assert out == "none\n"

    def test_check(self, capsys, write):
        code, out, _ = run(capsys, "check", write(complete(10)))
        assert (code, out) == (0, "verdict=Pancyclic\n")
        _, out, _ = run(capsys, "check", write(build_h_mm(5)))
        assert out == "verdict=Exceptional family=Hmm(5) A={0,1,2,3,4} B={5,6,7,8,9} missing=6,7,8,9,10\n"
        _, out, _ = run(capsys, "check", write(directed_cycle(10)))
        assert out == "verdict=HypothesisNotMet reason=min_degree,min_semidegree\n"


class TestLemma:
    def test_tiny_insertion(self, capsys, write):
        code, out, _ = run(capsys, "lemma", write("3\n011\n000\n010\n"), "--id", "2", "--x", "2", "--path", "0,1")
        assert code == 0
        assert out == "lemma=2 status=Holds witness=1\n"

    def test_lemma1_and_5(self, capsys, write):
        code, out, _ = run(capsys, "lemma", write(complete(5)), "--id", "1", "--x", "4", "--cycle", "0,1,2,3")
        assert code == 0 and out.startswith("lemma=1 status=Holds")
        code, out, _ = run(capsys, "lemma", write(complete(10)), "--id", "5", "--x", "9",
                           "--cycle", "0,1,2,3,4,5,6,7,8")
        assert code == 0 and out.startswith("lemma=5 status=Holds")

    def test_lemma6_premise(self, capsys, write):
        code, out, _ = run(capsys, "lemma", write(complete(10)), "--id", "6", "--x", "9",
                           "--cycle", "0,1,2,3,4,5,6,7,8", "--n", "5", "--k", "1", "--a", "1")
        assert code == 0 and "status=PremiseFailed" in out

    def test_missing_parameter(self, capsys, write):
        code, _, err = run(capsys, "lemma", write(complete(5)), "--id", "3", "--x", "4", "--cycle", "0,1,2,3")
        assert code == 1 and "--n" in err

    def test_invalid_cycle(self, capsys, write):
        code, _, err = run(capsys, "lemma", write(directed_cycle(5)), "--id", "1", "--x", "4",
                           "--cycle", "3,2,1,0")
        assert code == 1 and "not a cycle" in err

    def test_violation_exit_code(self, capsys, write, monkeypatch):
        monkeypatch.setattr(cli, "lemma2_check", lambda d, p, x: LemmaReport("2", Status.VIOLATED))
        code, out, _ = run(capsys, "lemma", write(complete(3)), "--id", "2", "--x", "2", "--path", "0,1")
        assert code == 3 and "Violated" in out


class TestCampaign:
    def test_p10_100(self, capsys, tmp_path):
        argv = ["campaign", "--p", "10", "--samples", "100", "--seed", "1", "--out", str(tmp_path)]
        code, out, err = run(capsys, *argv)
        assert code == 0
        assert "PotentialCounterexample: 0" in out and "counterexample files: none" in out
        assert "runtime" in err and "runtime" not in out
        assert out.count("verdict=") == 100
        assert run(capsys, *argv)[1] == out

    def test_guard(self, capsys):
        code, _, err = run(capsys, "campaign", "--p", "20", "--samples", "1")
        assert code == 1 and "resource guard" in err

    def test_counterexample_exit_code(self, capsys, tmp_path, monkeypatch):
        from pancyclic import harness
        from pancyclic.spectrum import CycleSpectrum
        monkeypatch.setattr(harness, "recognize", lambda d: None)
        monkeypatch.setattr(harness, "cycle_spectrum", lambda d, lengths=None: CycleSpectrum(d.p, frozenset()))
        code, out, _ = run(capsys, "campaign", "--p", "10", "--samples", "1", "--out", str(tmp_path))
        assert code == 3 and "PotentialCounterexample: 1" in out


class TestUsage:
    @pytest.mark.parametrize("argv", [
        [],
        ["spectrum"],
        ["frobnicate"],
        ["family", "k_mm", "--m", "3"],
        ["family", "h_mm"],
        ["campaign", "--p", "10", "--samples", "1", "--bogus"],
        ["lemma", "x.txt", "--id", "7", "--x", "0"],
        ["lemma", "x.txt", "--id", "2", "--x", "0", "--path", "0,a"],
    ])
    def test_exit_1(self, argv):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 1

    def test_module_entry_point(self, tmp_path):
        path = tmp_path / "k4.txt"
        path.write_text(format_digraph(complete(4)))
        proc = subprocess.run([sys.executable, "-m", "pancyclic", "spectrum", str(path)],
                              capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout == "spectrum=2,3,4 pancyclic=true hamiltonian=true\n"

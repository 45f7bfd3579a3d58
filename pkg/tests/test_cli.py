import pytest

from djvm.cli import main

DEMO_FILE = """\
# bins and values from the worked example
A 100
A 100
A 20
A 400
B 30
B 200
B 300
C 100
C 100
C 100
"""


def run_cli(args, capsys):
    try:
        code = main(args)
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def demo_file(tmp_path):
    path = tmp_path / "data.txt"
    path.write_text(DEMO_FILE)
    return str(path)


class TestMachineShow:
    def test_qr3(self, capsys):
        code, out, _ = run_cli(["machine-show", "--qr", "3"], capsys)
        assert code == 0
        assert out.startswith("MAIN MEMORY")
        assert " 76 :" in out

    def test_qr1(self, capsys):
        code, out, _ = run_cli(["machine-show", "--qr", "1"], capsys)
        assert code == 0
        assert "V2 :" in out.split("DJ VECTOR REGISTERS")[1]

    def test_over_cap(self, capsys):
        code, _, err = run_cli(["machine-show", "--qr", "9"], capsys)
        assert code == 1
        assert err


class TestDj:
    def test_constant_with_matrix(self, capsys):
        code, out, _ = run_cli(
            ["dj", "--n", "3", "--oracle", "constant1", "--show-matrix"], capsys)
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "0 -1 -2 -3 -4 -5 -6 -7"
        assert lines[-1] == "constant"

    def test_mask(self, capsys):
        code, out, _ = run_cli(["dj", "--n", "3", "--oracle", "mask:4"], capsys)
        assert code == 0
        assert out.strip() == "balanced, states: 100"

    def test_table(self, capsys):
        code, out, _ = run_cli(["dj", "--n", "2", "--oracle", "table:1010"], capsys)
        assert code == 0
        assert out.strip() == "balanced, states: 01"

    def test_bad_oracle(self, capsys):
        code, _, err = run_cli(["dj", "--oracle", "bogus"], capsys)
        assert code == 1 and err


class TestPartition:
    def test_demo_file(self, demo_file, capsys):
        code, out, _ = run_cli(["partition", "--input", demo_file], capsys)
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "1 0 0 0 1 0 0 1 0 0"
        assert lines[1] == "parts: 3"

    def test_single_row(self, tmp_path, capsys):
        path = tmp_path / "one.txt"
        path.write_text("X 7\n")
        code, out, _ = run_cli(["partition", "--input", str(path)], capsys)
        assert code == 0
        assert out.strip().splitlines() == ["1", "parts: 1"]

    def test_capacity(self, tmp_path, capsys):
        path = tmp_path / "big.txt"
        path.write_text("".join(f"A {i}\n" for i in range(26)))
        code, _, err = run_cli(["partition", "--input", str(path)], capsys)
        assert code == 3 and err

    def test_missing_file(self, capsys):
        code, _, err = run_cli(["partition", "--input", "/no/such/file"], capsys)
        assert code == 2 and err


class TestReduce:
    def test_sum(self, demo_file, capsys):
        code, out, _ = run_cli(
            ["reduce", "--input", demo_file, "--op", "sum"], capsys)
        assert code == 0
        assert out.strip() == "620 530 300"

    def test_explicit_pv_product(self, tmp_path, capsys):
        path = tmp_path / "values.txt"
        path.write_text("\n".join("2 2 3 1 1 2 7 5 2 1".split()) + "\n")
        code, out, _ = run_cli(
            ["reduce", "--input", str(path), "--op", "product",
             "--pv", "1 0 0 0 1 0 1 1 0 0"], capsys)
        assert code == 0
        assert out.strip() == "12 2 7 10"

    def test_pv_first_bit(self, tmp_path, capsys):
        path = tmp_path / "values.txt"
        path.write_text("1\n2\n")
        code, _, err = run_cli(
            ["reduce", "--input", str(path), "--op", "sum", "--pv", "0 1"],
            capsys)
        assert code == 2 and err

    def test_show_machine_dump_separated(self, demo_file, capsys):
        code, out, _ = run_cli(
            ["reduce", "--input", demo_file, "--op", "sum", "--show-machine"],
            capsys)
        assert code == 0
        head, _, rest = out.partition("\n\n")
        assert head.strip() == "620 530 300"
        assert rest.startswith("MAIN MEMORY")

    def test_deterministic(self, demo_file, capsys):
        _, out1, _ = run_cli(["reduce", "--input", demo_file, "--op", "sum"], capsys)
        _, out2, _ = run_cli(["reduce", "--input", demo_file, "--op", "sum"], capsys)
        assert out1 == out2


class TestDemo:
    def test_passes(self, capsys):
        code, out, _ = run_cli(["demo"], capsys)
        assert code == 0
        assert out.count("QUERY REGISTER IN 0 STATE") == 3
        assert "620 530 300" in out

    def test_corrupted(self, capsys):
        code, _, err = run_cli(["demo", "--corrupt-expectation"], capsys)
        assert code == 2 and "self-check failed" in err

    def test_ascii(self, capsys):
        code, out, _ = run_cli(["demo", "--ascii"], capsys)
        assert code == 0
        assert "⊗" not in out

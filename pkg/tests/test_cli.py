import pytest

from rgdopt.cli import main
from rgdopt.designs import read_blocks, verify_rgd
from rgdopt.graphgen.graph6 import write_graph6

PAPER_X0_SMALL = {
    (5, 4): (0, 0), (6, 3): (0, 0), (6, 4): (0, 0), (7, 4): (0, 0), (7, 6): (0, 0),
    (8, 3): (0, 0), (8, 4): (0, 0), (8, 5): (0, 0), (8, 6): (0, 0), (9, 4): (1, 1),
    (9, 6): (0, 0), (10, 3): (1, 1), (10, 4): (1, 1), (10, 5): (1, 1), (10, 6): (1, 1),
    (10, 7): (0, 0), (10, 8): (0, 0),
}


@pytest.fixture
def run(tmp_path, capsys):
    cache = tmp_path / "cache"

    def _run(*args):
        code = main([*map(str, args), "--cache", str(cache)])
        out = capsys.readouterr()
        return code, out.out, out.err

    _run.cache = cache
    return _run


@pytest.fixture
def v14_candidates(tmp_path, data_dir):
    path = tmp_path / "v14.g6"
    graphs = [
        verify_rgd(read_blocks(data_dir / "appendix" / "design12.blocks")).graph,
        verify_rgd(read_blocks(data_dir / "v14_k2_r5_a_best_y0.blocks")).graph,
    ]
    write_graph6([g.adj for g in graphs], path)
    return path


@pytest.mark.parametrize("v,d,expected", [(6, 3, "2 graphs"), (5, 3, "0 graphs"), (7, 2, "1 graph")])
def test_enumerate(run, v, d, expected):
    code, out, _ = run("enumerate", v, d)
    assert code == 0 and out.strip() == expected


def test_enumerate_writes_graph6(run, tmp_path):
    out_file = tmp_path / "g.g6"
    run("enumerate", 8, 3, "--out", out_file)
    assert len(out_file.read_text().splitlines()) == 5


def test_rank_prints_x0(run):
    code, out, _ = run("rank", 10, 7, "--criterion", "a")
    assert code == 0 and "x0^A = 0" in out
    code, out, _ = run("rank", 12, 4, "--criterion", "a")
    assert "x0^A = 2" in out


def test_rank_is_idempotent_and_survives_corruption(run):
    run("rank", 9, 4, "--criterion", "both")
    path = run.cache / "v9-d4-a.rank"
    first = path.read_bytes()
    run("rank", 9, 4, "--criterion", "a")
    assert path.read_bytes() == first
    path.write_bytes(first[: len(first) // 2])
    code, out, _ = run("rank", 9, 4, "--criterion", "a")
    assert code == 0 and "x0^A = 1" in out
    assert path.read_bytes() == first
    g6 = run.cache / "v9-d4.g6"
    g6.write_text(g6.read_text()[:-20])
    path.unlink()
    run("rank", 9, 4, "--criterion", "a")
    assert g6.read_text().splitlines()[-1].startswith("# checksum ")
    assert path.read_bytes() == first


def test_rank_independent_of_workers(run):
    run("rank", 10, 4, "--criterion", "a")
    serial = (run.cache / "v10-d4-a.rank").read_bytes()
    (run.cache / "v10-d4-a.rank").unlink()
    (run.cache / "v10-d4.g6").unlink()
    run("rank", 10, 4, "--criterion", "a", "--workers", 2)
    assert (run.cache / "v10-d4-a.rank").read_bytes() == serial


def test_rank_tsv(run):
    code, out, _ = run("rank", 9, 4, "--format", "tsv")
    assert out.splitlines() == ["9\t4\ta\t1\t16", "9\t4\td\t1\t16"]


def test_rank_infeasible(run):
    code, _, err = run("rank", 9, 3)
    assert code == 1 and "empty" in err


@pytest.mark.slow
def test_rank_thirteen_six(run):
    code, out, _ = run("rank", 13, 6, "--criterion", "d", "--workers", 4)
    assert "x0^D = 3" in out


def test_best_k33(run):
    code, out, _ = run("best", 6, 2, 3, "--criterion", "a", "--out", run.cache / "best.blocks")
    assert code == 0
    assert "rank 1 of 2" in out
    d = read_blocks(run.cache / "best.blocks")
    g = verify_rgd(d).graph
    # the only triangle-free cubic graph on 6 vertices is K3,3
    assert g.delta == 3
    assert not any((g.adj[i] >> j) & 1 and g.adj[i] & g.adj[j] for i in range(6) for j in range(6))


def test_best_reports_values_at_lambda_and_lambda_plus_lambda_tilde(run):
    code, out, _ = run("best", 8, 4, 8, "--criterion", "d")
    assert code == 0
    assert "λ=3 δ=3 λ̃=3" in out
    assert "x=3\t" in out and "x=6\t" in out
    assert "rank 1: yes" in out


def test_best_none_up_to_max_rank(run):
    code, out, _ = run("best", 6, 3, 4, "--criterion", "a", "--max-rank", 1)
    assert code == 1 and "none up to rank 1" in out


def test_best_d_for_v14_among_paper_candidates(run, v14_candidates):
    code, out, _ = run("best", 14, 2, 5, "--criterion", "d", "--graphs", v14_candidates)
    assert code == 0
    assert "D=1627920000" in out
    assert "candidates supplied" in out


def test_best_a_at_y0_for_v14_among_paper_candidates(run, v14_candidates):
    code, out, _ = run("best", 14, 2, 5, "--criterion", "a", "--at-y", 0, "--graphs", v14_candidates)
    assert code == 0
    assert "D=1627763046" in out
    # 68.2336883 printed for this design is 14 times the harmonic mean 4.8738349
    assert "A~4.8738349" in out
    code, out, _ = run("best", 14, 2, 5, "--criterion", "a", "--at-y", 1, "--graphs", v14_candidates)
    assert "x=1" in out and "D=" in out
    assert "1627920000" not in out  # at x=1 it is #12 that wins; its D(1) is printed instead


def test_verify(run, data_dir, tmp_path):
    code, out, _ = run("verify", data_dir / "appendix" / "design12.blocks")
    assert code == 0 and out.splitlines()[0] == "RGD: v=14 k=2 r=5 λ=0 δ=5, connected"
    code, out, _ = run("verify", data_dir / "appendix" / "design21.blocks")
    assert out.startswith("RGD: v=20 k=2 r=3 λ=0 δ=3")
    bad = tmp_path / "bad.blocks"
    bad.write_text("1 2 3\n1 2 3 4\n")
    code, _, err = run("verify", bad, "-k", 3)
    assert code == 2 and "parse error" in err


def test_verify_failure_exit_code(run, data_dir):
    code, out, _ = run("verify", data_dir / "appendix" / "design08.blocks")
    assert code == 1 and "unequal" in out


def test_table_reproduces_small_x0_rows(run):
    code, out, _ = run("table", "--v-max", 10)
    rows = [line.split("\t") for line in out.splitlines()[1:]]
    got = {(int(r[0]), int(r[1])): (int(r[3]), int(r[4])) for r in rows}
    assert {k: got[k] for k in PAPER_X0_SMALL} == PAPER_X0_SMALL
    extra = [r for r in rows if (int(r[0]), int(r[1])) not in PAPER_X0_SMALL]
    # only complete graphs beyond the paper's rows
    assert all(int(r[1]) == int(r[0]) - 1 and r[2] == "1" for r in extra)


def test_table_lambda_columns(run):
    code, out, _ = run("table", "--k", 2, "--v-min", 6, "--v-max", 6, "--r-max", 3)
    assert "6\t2\t3\t9\t0\t1\t3" in out.splitlines()
    code, out, _ = run("table", "--k", 4, "--v-min", 10, "--v-max", 10, "--r-max", 4)
    assert "10\t4\t4\t10\t1\t2\t3" in out.splitlines()


def test_values(run, data_dir, tmp_path):
    code, out, _ = run("values", data_dir / "appendix" / "design12.blocks", "--x", 0, "--x", 5)
    lines = out.splitlines()
    assert lines[0].endswith("D=1627920000")
    assert lines[1].endswith("D=2529608091727840200000000")
    k5 = tmp_path / "k5.blocks"
    k5.write_text("".join(f"{i} {j}\n" for i in range(1, 6) for j in range(i + 1, 6)))
    code, _, err = run("values", k5)
    assert code == 1 and "BIBD" in err
    k33 = tmp_path / "k33.blocks"
    k33.write_text("".join(f"{i} {j}\n" for i in (1, 2, 3) for j in (4, 5, 6)))
    code, out, _ = run("values", k33)
    # nontrivial Laplacian eigenvalues 3,3,3,3,6
    assert out.strip() == "x=0\tA=10/3\tA~3.3333333\tD=486"


def test_develop_cyclic(run, tmp_path):
    out_file = tmp_path / "fano.blocks"
    code, _, err = run("develop-cyclic", 7, "1,2,4", "--out", out_file)
    assert code == 0 and read_blocks(out_file).b == 7
    assert "δ=0" in err


def test_min_lambda(run, tmp_path):
    code, out, _ = run("min-lambda", 6, 3)
    assert code == 0 and out.strip() == "λ̃(6,3) = 2"
    code, out, _ = run("min-lambda", 8, 3, "--cap", 5)
    assert code == 1 and "unknown above cap 5" in out


def test_usage_errors(run):
    with pytest.raises(SystemExit) as exc:
        main(["rank", "x", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    code, _, _ = run("enumerate", 2, 1)
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["rank", "9", "4", "--workers", "0"])
    assert exc.value.code == 2

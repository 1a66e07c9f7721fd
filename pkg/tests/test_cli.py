from click.testing import CliRunner

from grouporder.cli import cli


def run(*args):
    return CliRunner().invoke(cli, args, standalone_mode=True)


def test_order_cmp_free():
    result = run("order", "cmp", "--group", "F2", "x1", "x2")
    assert result.exit_code == 0
    assert result.output == "result=GREATER\ncap=2\n"


def test_order_cmp_equal():
    result = run("order", "cmp", "--group", "F2", "x1 x1^-1", "1")
    assert result.exit_code == 0
    assert result.output == "result=EQUAL\n"


def test_order_cmp_oracle_groups():
    result = run("order", "cmp", "--group", "Z^2", "0,1", "1,0")
    assert result.exit_code == 0
    assert result.output == "result=LESS\n"
    result = run("order", "cmp", "--group", "BS(1,2)", "0;k=0", "1;k=0")
    assert result.output == "result=LESS\n"


def test_magnus_expand():
    result = run("magnus", "expand", "--deg", "2", "x1 x2 x1^-1 x2^-1")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "cap=2"
    assert lines[1] == "series=1 + X{1}X{2} - X{2}X{1}"
    assert lines[2:] == ["term:1=1", "term:X{1}X{2}=1", "term:X{2}X{1}=-1"]


def test_rs_rewrite():
    result = run("rs", "rewrite", "--group", "Z^2", "g{1,0} s1 g{-2,0}")
    assert result.exit_code == 0
    assert result.output == "kernel=x{1,0,1}\n"


def test_rs_rewrite_not_in_kernel():
    result = run("rs", "rewrite", "--group", "Z^2", "s1")
    assert result.exit_code == 1
    assert result.output == "error=NotInKernel\nresidual=1,0\n"


def test_fiber_make_and_mul():
    result = run("fiber", "make", "--group", "Z^2", "s1", "s1")
    assert result.exit_code == 0
    assert result.output == "ok=true\nu=s1\nv=s1\n"
    result = run("fiber", "mul", "--group", "Z^2", "s1", "s1", "s1^-1", "s1^-1")
    assert result.exit_code == 0
    assert result.output == "u=1\nv=1\n"


def test_fiber_make_not_in_fiber():
    result = run("fiber", "make", "--group", "Z^2", "s1", "1")
    assert result.exit_code == 1
    assert result.output == "error=NotInFiber\npi1=1,0\npi2=0,0\n"


def test_fiber_cmp_levels():
    result = run("fiber", "cmp", "--group", "Z^2", "1", "1", "s1", "s1")
    assert result.exit_code == 0
    assert result.output == "result=LESS\nlevel=quotient\n"
    # u = s1 g{-1,0} projects to the kernel generator x_{1,1}
    result = run("fiber", "cmp", "--group", "Z^2", "1", "1", "s1 g{-1,0}", "1")
    assert result.output == "result=LESS\nlevel=kernel\n"
    result = run("fiber", "cmp", "--group", "Z^2", "s1", "s1", "s1", "s1")
    assert result.output == "result=EQUAL\nlevel=none\n"


def test_fiber_act():
    result = run("fiber", "act", "--group", "Z^2", "s1", "x{0,0,2}")
    assert result.exit_code == 0
    assert result.output == "kernel=x{0,0,1} x{1,0,2} x{0,0,1}^-1\n"


def test_quotients_count():
    result = run("quotients", "count", "--target", "S3", "higman")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert "target=S3" in lines
    assert "total=1" in lines
    assert "nontrivial=0" in lines
    assert any(line.startswith("nodes=") for line in lines)


def test_quotients_count_budget_exhausted():
    result = run(
        "quotients", "count", "--target", "S4", "--max-nodes", "5", "lemma41"
    )
    assert result.exit_code == 3
    assert result.output.splitlines()[0] == "error=BudgetExhausted"


def test_quotients_trivial_upto():
    result = run("quotients", "trivial-upto", "--K", "3", "higman")
    assert result.exit_code == 0
    assert result.output == (
        "S2:total=1 nontrivial=0\nS3:total=1 nontrivial=0\ntrivial_upto=true\n"
    )
    result = run("quotients", "trivial-upto", "--K", "3", "BS(1,2)")
    assert result.output.endswith("trivial_upto=false\n")


def test_abelianize():
    result = run("abelianize", "lemma41")
    assert result.exit_code == 0
    assert result.output == "invariant_factors= free_rank=0 balanced=true\n"
    result = run("abelianize", "BS(1,-1)")
    assert result.output == "invariant_factors=2 free_rank=1 balanced=false\n"


def test_gentorsion_verify():
    result = run(
        "gentorsion", "verify", "--group", "BS(1,-1)",
        "--base", "s1", "--conj", "1", "--conj", "s2",
    )
    assert result.exit_code == 0
    assert result.output == "valid=true\n"
    result = run(
        "gentorsion", "verify", "--group", "BS(1,2)",
        "--base", "s1", "--conj", "1", "--conj", "s2",
    )
    assert result.output == "valid=false\n"


def test_gentorsion_search():
    result = run("gentorsion", "search", "--group", "BS(1,-1)", "--base", "s1")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "found=true"
    assert lines[1] == "base=s1"
    assert len(lines) == 4  # two conjugators
    result = run("gentorsion", "search", "--group", "Z^2", "--base", "s1")
    assert result.output == "found=false\n"


def test_selftest_quick():
    result = run("selftest", "--seed", "7", "--quick")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert len(lines) == 10
    assert all(line.startswith("PASS ") for line in lines)


def test_byte_stable_output():
    a = run("quotients", "count", "--target", "S4", "higman")
    b = run("quotients", "count", "--target", "S4", "higman")
    assert a.output == b.output


def test_usage_errors_exit_2():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "grouporder.cli", "order", "cmp",
         "--group", "Q8", "x1", "x2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    assert "usage error" in proc.stderr
    proc = subprocess.run(
        [sys.executable, "-m", "grouporder.cli", "nosuchcommand"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2


def test_budget_exit_3_via_main():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "grouporder.cli", "quotients", "count",
         "--target", "S4", "--max-nodes", "5", "lemma41"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 3

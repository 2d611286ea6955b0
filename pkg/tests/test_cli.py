from dodecagrid import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rules_check_builtin(capsys):
    code, out, _ = run(capsys, "rules", "check")
    assert code == 0
    assert "262 rules, 0 coherence violations, 1 determinism conflicts" in out
    assert "rules 4 and 118" in out


def test_rules_check_file_with_duplicate(tmp_path, capsys):
    from dodecagrid import rules as R
    from dodecagrid import geometry as G
    base = R.parse_rule("1 W:WWWWWBBWWBBW:B")
    rot = R.rotate_rule(base, G.rotation_maps()[9])
    f = tmp_path / "dup.rules"
    f.write_text(f"1 {base.text()}\n2 {rot.text()}\n")
    code, out, _ = run(capsys, "rules", "check", "--rules", str(f))
    assert code == 1 and "VIOLATION" in out


def test_rules_check_malformed(tmp_path, capsys):
    f = tmp_path / "bad.rules"
    f.write_text("W:WWWWW\n")
    code, _, err = run(capsys, "rules", "check", "--rules", str(f))
    assert code == 2 and "error" in err


def test_rules_canon(capsys):
    code, out, _ = run(capsys, "rules", "canon", "W:WWWWWBBWWBBW:B")
    assert code == 0 and out.strip() == "W:WWWWWWWBWBBB:B"
    code, _, err = run(capsys, "rules", "canon", "W:WWWWW")
    assert code == 2


def test_rules_dump(capsys):
    code, out, _ = run(capsys, "rules", "dump")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 262
    assert lines[0] == "1 W:WWWWWWWWWWWW:W"
    assert lines[-1].startswith("r19 ")


def test_sim_line_rows(capsys):
    code, out, _ = run(capsys, "sim", "line")
    assert code == 0
    rows = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert len(rows) == 13
    assert rows[0] == "line W B W W W W W W W W W W W W W"


def test_sim_grow_steps(capsys):
    code, out, _ = run(capsys, "sim", "grow", "--steps", "5")
    assert code == 0
    rows = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert len(rows) == 24


def test_sim_unknown_scenario(capsys):
    code, _, err = run(capsys, "sim", "warp")
    assert code == 2 and "unknown scenario" in err


def test_sim_strict_missing_rule(capsys):
    # the grow scenario relies on kept scenery, so strict mode reports
    # the first uncovered neighborhood
    code, _, err = run(capsys, "sim", "grow", "--strict")
    assert code == 3 and "no rule for tile" in err


def test_sim_trace_file(tmp_path, capsys):
    out_file = tmp_path / "line.trace"
    code, _, _ = run(capsys, "sim", "line", "--trace", str(out_file))
    assert code == 0
    assert "line W B W" in out_file.read_text()


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "all")
    assert code == 0
    assert out.count(": ok") == len(__import__(
        "dodecagrid.scenarios", fromlist=["BUILDERS"]).BUILDERS)


def test_verify_one_and_unknown(capsys):
    code, out, _ = run(capsys, "verify", "dec0")
    assert code == 0 and "dec0: ok" in out
    code, _, err = run(capsys, "verify", "nonesuch")
    assert code == 2


def test_rotations(capsys):
    code, out, _ = run(capsys, "rotations", "--classify", "9", "4")
    assert code == 0 and "vertex axis" in out and "turn 2" in out
    code, out, _ = run(capsys, "rotations", "--classify", "0", "1")
    assert code == 0 and "identity" in out
    code, _, err = run(capsys, "rotations", "--classify", "0", "7")
    assert code == 2
    code, out, _ = run(capsys, "rotations", "--list")
    assert code == 0 and len(out.strip().splitlines()) == 60

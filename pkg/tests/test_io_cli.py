import io
import json

import pytest

from twcert.cli import main
from twcert.decompose import TreeDecomposition
from twcert.generators import complete_bipartite, wall
from twcert.io import (
    read_gr,
    read_graph_json,
    read_td,
    write_gr,
    write_graph_json,
    write_td,
)


def _roundtrip_json(g):
    buf = io.StringIO()
    write_graph_json(g, buf)
    buf.seek(0)
    return read_graph_json(buf)


def _roundtrip_gr(g):
    buf = io.StringIO()
    write_gr(g, buf)
    buf.seek(0)
    return read_gr(buf)


def test_graph_roundtrips():
    for g in [wall(3, 3), complete_bipartite(2, 3)]:
        assert _roundtrip_json(g) == g
        assert _roundtrip_gr(g) == g


def test_gr_format_header():
    buf = io.StringIO()
    write_gr(wall(2, 2), buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "p tw 4 4"
    assert lines[1].split() == ["1", "2"]


def test_gr_parse_errors():
    with pytest.raises(ValueError):
        read_gr(io.StringIO("1 2\n"))
    with pytest.raises(ValueError):
        read_gr(io.StringIO("p tw x\n"))


def test_td_roundtrip():
    td = TreeDecomposition(bags=((0, 1), (1, 2)), tree_edges=((0, 1),))
    buf = io.StringIO()
    write_td(td, 3, buf)
    text = buf.getvalue()
    assert text.startswith("s td 2 2 3")
    buf.seek(0)
    assert read_td(buf) == td


def test_malformed_graph_json():
    with pytest.raises(ValueError):
        read_graph_json(io.StringIO('{"edges": []}'))


def test_cli_gen_detect_roundtrip(tmp_path):
    out = tmp_path / "w.json"
    assert main(["gen", "wall", "--n", "3", "--m", "3", "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["n"] == 12
    assert (
        main(["detect", "--pattern", "claw", "--t1", "1", "--t2", "1", "--t3", "1",
              "-i", str(out)])
        == 0
    )
    assert main(["detect", "--pattern", "theta", "--t", "2", "-i", str(out)]) == 0


def test_cli_detect_exit_codes(tmp_path):
    k23 = tmp_path / "k23.json"
    assert main(["gen", "theta", "--l1", "2", "--l2", "2", "--l3", "2", "-o", str(k23)]) == 0
    assert main(["detect", "--pattern", "theta", "--t", "2", "-i", str(k23)]) == 0
    assert main(["detect", "--pattern", "theta", "--t", "3", "-i", str(k23)]) == 1


def test_cli_tw_and_td_output(tmp_path):
    g = tmp_path / "g.json"
    td = tmp_path / "g.td"
    out = tmp_path / "tw.json"
    main(["gen", "wall", "--n", "2", "--m", "3", "-o", str(g)])
    assert main(["tw", "-i", str(g), "--td", str(td), "-o", str(out)]) == 0
    assert td.read_text().startswith("s td")
    payload = json.loads(out.read_text())
    assert payload["exact"] == 2


def test_cli_sep(tmp_path, capsys):
    g = tmp_path / "p4.json"
    main(["gen", "claw", "--t1", "0", "--t2", "2", "--t3", "1", "-o", str(g)])
    assert main(["sep", "-i", str(g), "--c", "1/2"]) == 0
    assert json.loads(capsys.readouterr().out)["separation_number"] == 1


def test_cli_usage_errors(tmp_path):
    assert main(["detect", "--pattern", "induced", "-i", "missing.json"]) == 64
    assert main(["verify", "not-a-suite"]) == 64


def test_cli_centralbag_certificate(tmp_path):
    g = tmp_path / "w.json"
    pat = tmp_path / "p1.json"
    out = tmp_path / "cb.json"
    main(["gen", "wall", "--n", "3", "--m", "3", "-o", str(g)])
    pat.write_text('{"n": 1, "edges": []}\n')
    code = main([
        "centralbag", "-i", str(g), "--pattern", str(pat), "--c", "1/2",
        "--d", "2", "-o", str(out),
    ])
    assert code in (0, 2)  # hypothesis-unmet entries give 2, never 1
    payload = json.loads(out.read_text())
    assert payload["certificate"]["summary"]["fail"] == 0
    rc_out = tmp_path / "rc.json"
    assert main(["recheck", "-i", str(out), "-o", str(rc_out)]) == 0
    rc = json.loads(rc_out.read_text())
    assert rc["problems"] == [] and rc["checked"] == rc["confirmed"]


def test_cli_verify_deterministic(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert main(["verify", "anchors", "-o", str(a)]) == 0
    assert main(["verify", "anchors", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_cli_decompose_chordal_witnesses_hole(tmp_path, capsys):
    g = tmp_path / "c4.json"
    g.write_text('{"n": 4, "edges": [[0,1],[1,2],[2,3],[0,3]]}\n')
    assert main(["decompose", "--method", "chordal", "-i", str(g)]) == 1
    assert "hole" in capsys.readouterr().out

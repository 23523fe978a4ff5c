import pytest

import phin


def test_command_list():
    names = phin.command_names()
    assert "gl3-certificate" in names
    assert "selftest" in names


def test_validate():
    out = phin.run("validate", {"phi": [[1, 0], [0, 2]], "nil": [[0, 1], [0, 0]]})
    assert out == {"f": 1, "n": 2, "valid": True}


def test_relation_violation():
    with pytest.raises(phin.PhinError) as info:
        phin.run("validate", {"phi": [[1, 0], [0, 1]], "nil": [[0, 1], [0, 0]]})
    assert info.value.exit_code == 1
    assert info.value.body["error"]["index"] == 0


def test_certificate_matches_cli_text():
    payload = {"phi": [[1, 0, 0], [0, 3, 0], [0, 0, 3]]}
    code, text = phin.run_raw("gl3-certificate", payload, p=3)
    assert code == 0
    assert text.endswith("\n")
    out = phin.run("gl3-certificate", payload, p=3)
    assert out["verdict"] == "SINGULAR"
    assert out["preimages"] == "P1"
    assert out["in_x_reg"] is False
    assert out["tangent_span_dim"] >= 10


def test_canonical_point_is_irrational():
    out = phin.run("canonical-point", {"nil": [[0, 1], [0, 0]]}, p=2)
    assert out["phi"][0][0][0] == ["0", "1/2"]


def test_malformed_payload():
    code, _ = phin._phin.run_command("validate", "{oops", 2, None, None)
    assert code == 1


def test_selftest():
    assert phin.run("selftest")["passed"] is True

import json

from hopfcheck.cli import main
from hopfcheck.documents import canonical_json, hopf_to_doc
from hopfcheck.catalog import lookup


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_catalog_hopf(capsys):
    code, out, _ = run(capsys, "check", "kC2/Q")
    assert code == 0
    assert "hopf axioms: PASS" in out and "involutory: yes" in out


def test_check_reports_non_involutory(capsys):
    code, out, _ = run(capsys, "check", "H4/Q")
    assert code == 0
    assert "involutory: NO" in out


def test_check_module(capsys):
    code, out, _ = run(capsys, "check", "kS3/F3/regular")
    assert code == 0
    assert "module axioms: PASS" in out


def test_check_broken_document_exits_one(tmp_path, capsys):
    doc = hopf_to_doc(lookup("kC2/Q").payload)
    doc["antipode"] = [["0", "0"], ["0", "0"]]
    path = tmp_path / "broken.json"
    path.write_text(canonical_json(doc))
    code, out, _ = run(capsys, "check", str(path))
    assert code == 1
    assert "FAIL" in out
    assert "antipode" in out  # names the violated identity


def test_parse_error_exits_two(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "parse error" in err


def test_unknown_id_exits_two(capsys):
    code, _, err = run(capsys, "check", "kC9/Q")
    assert code == 2


def test_semisimple_with_oracle(capsys):
    code, out, _ = run(capsys, "semisimple", "kC2/F2/regular", "--oracle")
    assert code == 0
    assert "false (radical dim 1" in out
    assert "oracle: agrees" in out


def test_semisimple_char_zero(capsys):
    code, out, _ = run(capsys, "semisimple", "kS3/Q/regular")
    assert code == 0
    assert out.startswith("true")


def test_semisimple_oracle_bound_warns_not_fails(capsys):
    code, out, _ = run(capsys, "semisimple", "kS3/F5/regular", "--oracle")
    assert code == 0
    assert "oracle: skipped" in out


def test_semisimple_bound_flag_tightens_the_oracle(capsys):
    code, out, _ = run(capsys, "semisimple", "kC2/F2/regular", "--oracle", "--bound", "3")
    assert code == 0
    assert "oracle: skipped" in out  # 2^2 = 4 exceeds the tightened cap


def test_dual_document_roundtrips_through_check(tmp_path, capsys):
    out_path = tmp_path / "dual.json"
    code, _, _ = run(capsys, "dual", "kC2/Q/regular", "--out", str(out_path))
    assert code == 0
    code, out, _ = run(capsys, "check", str(out_path))
    assert code == 0
    assert "PASS" in out


def test_tensor_document_roundtrips_through_check(tmp_path, capsys):
    out_path = tmp_path / "tensor.json"
    code, _, _ = run(capsys, "tensor", "kC2/Q/regular", "kC2/Q/regular", "--out", str(out_path))
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["dim"] == 4
    code, out, _ = run(capsys, "check", str(out_path))
    assert code == 0


def test_tensor_mismatch_exits_two(capsys):
    code, _, err = run(capsys, "tensor", "kC2/Q/regular", "kC3/Q/trivial")
    assert code == 2
    assert "different algebras" in err


def test_export_emits_canonical_document(tmp_path, capsys):
    out_path = tmp_path / "kc2.json"
    code, _, _ = run(capsys, "export", "kC2/Q", "--out", str(out_path))
    assert code == 0
    text = out_path.read_text()
    assert canonical_json(json.loads(text)) == text


def test_list_filters_by_kind(capsys):
    code, out, _ = run(capsys, "list", "--kind", "hopf")
    assert code == 0
    assert "kC2/Q" in out
    assert "regular" not in out


def test_campaign_on_one_field(capsys):
    code, out, _ = run(capsys, "campaign", "--field", "Q", "--category", "module")
    assert code == 0
    assert "CONSISTENT" in out


def test_campaign_machine_format_is_deterministic(tmp_path, capsys):
    args = ["campaign", "--field", "F3", "--category", "comodule", "--format", "machine"]
    docs = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        code, _, _ = run(capsys, *args, "--out", str(path))
        assert code == 0
        doc = json.loads(path.read_text())
        doc.pop("wall_time")
        docs.append(doc)
    assert docs[0] == docs[1]
    assert docs[0]["counterexamples"] == []
    assert docs[0]["ok"] is True


def test_campaign_fault_injection_exits_nonzero(capsys):
    code, out, _ = run(capsys, "campaign", "--field", "F2", "--category", "module", "--inject-fault")
    assert code == 1
    assert "FAILED" in out
    assert "serre_inconsistency" in out


def test_campaign_yd_only(capsys):
    code, out, _ = run(capsys, "campaign", "--field", "Q", "--category", "yd")
    assert code == 0
    assert "CONSISTENT" in out


def test_semisimple_on_a_hopf_id_is_a_usage_error(capsys):
    code, _, err = run(capsys, "semisimple", "kC2/Q")
    assert code == 2
    assert "error" in err


def test_dual_on_a_hopf_id_is_a_usage_error(capsys):
    code, _, err = run(capsys, "dual", "H4/Q")
    assert code == 2


def test_check_negative_fixture_reports_and_exits_zero(capsys):
    code, out, _ = run(capsys, "check", "kS3/Q/ydbadline")
    assert code == 0
    assert "FAIL" in out
    assert "tagged negative fixture" in out

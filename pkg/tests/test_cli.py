import contextlib
import io
import json
import os

import pytest

from enrlat.cli import (
    datum_from_json,
    datum_to_json,
    fqf_from_json,
    fqf_to_json,
    inputs_digest,
    main,
)
from enrlat.fqf import discriminant_form, fqf_isomorphic
from enrlat.lattice import Lattice, standard_lattice
from enrlat.nikulin import find_embedding_datum


def run_cli(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_envelope_shape():
    code, out = run_cli(["--json", "standard-lattice", "--tag", "U"])
    assert code == 0
    env = json.loads(out)
    assert set(env) == {"command", "inputs_digest", "verdicts", "payload", "runtime_ms"}
    assert env["command"] == "standard-lattice"
    assert env["runtime_ms"] == 0
    assert env["payload"]["gram"] == [[0, 1], [1, 0]]


def test_json_output_is_byte_stable():
    argv = ["--json", "theorem-a", "--rho", "20", "--params", "[2,1,3]", "--label", "[1,0]"]
    _, first = run_cli(argv)
    _, second = run_cli(argv)
    assert first == second


def test_digest_depends_on_inputs_only():
    assert inputs_digest({"a": 1}) == inputs_digest({"a": 1})
    assert inputs_digest({"a": 1}) != inputs_digest({"a": 2})
    _, one = run_cli(["--json", "epsilon", "--vector", "[1,0,0,0,0,0,0,0,0,0,0,0]"])
    _, two = run_cli(["--json", "epsilon", "--vector", "[0,1,0,0,0,0,0,0,0,0,0,0]"])
    assert json.loads(one)["inputs_digest"] != json.loads(two)["inputs_digest"]


def test_exit_codes_cover_pass_fail_error():
    code, _ = run_cli(["--json", "nikulin-exists", "--signature", "[1,1]"])
    assert code == 0
    code, _ = run_cli(["--json", "nikulin-exists", "--signature", "[0,1]"])
    assert code == 1
    err = io.StringIO()
    with contextlib.redirect_stderr(err):
        code, _ = run_cli(["--json", "sublattice", "--gram", "[[4]]", "--prime", "2"])
    assert code == 2


def test_error_envelope_names_the_error():
    code, out = run_cli(["--json", "sublattice", "--gram", "[[4]]", "--prime", "2"])
    assert code == 2
    env = json.loads(out)
    assert env["error"]["type"] == "BadPrime"


def test_roots_verdict_and_payload():
    code, out = run_cli(["--json", "roots", "--gram", "[[-2]]", "--norm", "-2"])
    assert code == 0
    env = json.loads(out)
    assert env["verdicts"]["found"]
    assert env["payload"]["count"] == 2
    code, out = run_cli(["--json", "roots", "--gram", "[[-4]]", "--norm", "-2"])
    assert code == 1
    assert json.loads(out)["payload"]["count"] == 0


def test_epsilon_command():
    code, out = run_cli(["--json", "epsilon", "--vector", "[1,1] + []"])
    assert code == 2
    code, out = run_cli(["--json", "epsilon", "--vector", "[1,1,0,0,0,0,0,0,0,0,0,0]"])
    assert code == 0
    assert json.loads(out)["payload"]["parity"] == 0


def test_theorem_a_negative_label_exits_one():
    code, out = run_cli(
        ["--json", "theorem-a", "--rho", "20", "--params", "[1,0,1]", "--label", "[0,0]"]
    )
    assert code in (1, 2)


def test_fqf_json_round_trip():
    form = discriminant_form(Lattice([[4, 0], [0, -6]]))
    blob = fqf_to_json(form)
    back = fqf_from_json(blob)
    assert fqf_isomorphic(form, back) is not None
    assert blob == fqf_to_json(back)


def test_datum_json_round_trip(tmp_path):
    lat = Lattice([[4, 0], [0, 4]])
    datum = find_embedding_datum(lat)
    blob = datum_to_json(datum)
    back = datum_from_json(blob)
    assert back.h_l == datum.h_l
    assert back.gamma == datum.gamma
    assert back.k_rank == datum.k_rank
    assert fqf_isomorphic(back.k_fqf, datum.k_fqf) is not None
    path = tmp_path / "datum.json"
    path.write_text(json.dumps(blob))
    code, out = run_cli(
        ["--json", "verify-datum", "--gram", "[[4,0],[0,4]]", "--datum-file", str(path)]
    )
    assert code == 0
    assert json.loads(out)["verdicts"]["valid"]


def test_transfer_down_then_verify(tmp_path):
    lat = Lattice([[4, 0], [0, 4]])
    datum = find_embedding_datum(lat)
    path = tmp_path / "datum.json"
    path.write_text(json.dumps(datum_to_json(datum)))
    code, out = run_cli(
        [
            "--json",
            "transfer",
            "--direction",
            "down",
            "--parent-gram",
            "[[4,0],[0,4]]",
            "--child-gram",
            "[[36,0],[0,4]]",
            "--child-basis",
            "[[3,0],[0,1]]",
            "--datum-file",
            str(path),
        ]
    )
    assert code == 0
    child_blob = json.loads(out)["payload"]["datum"]
    child_path = tmp_path / "child.json"
    child_path.write_text(json.dumps(child_blob))
    code, out = run_cli(
        ["--json", "verify-datum", "--gram", "[[36,0],[0,4]]", "--datum-file", str(child_path)]
    )
    assert code == 0
    assert json.loads(out)["verdicts"]["valid"]


def test_verify_embedding_file_flow(tmp_path):
    good = {
        "source_gram": [[4, 0], [0, 4]],
        "images": [
            [1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            [1, -2, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0],
        ],
    }
    path = tmp_path / "emb.json"
    path.write_text(json.dumps(good))
    code, out = run_cli(["--json", "verify-embedding", "--file", str(path)])
    assert code == 0
    env = json.loads(out)
    assert env["verdicts"]["valid"]
    assert env["verdicts"]["complement_twice_even"]
    assert env["payload"]["label"] == [1, 1]

    bad = dict(good, images=[good["images"][0], [0, 0, 2, 4, 0, 0, 0, 0, 0, 0, 0, 0]])
    path.write_text(json.dumps(bad))
    code, out = run_cli(["--json", "verify-embedding", "--file", str(path)])
    assert code == 1
    assert not json.loads(out)["verdicts"]["valid"]


def test_condition_star_command():
    code, out = run_cli(
        [
            "--json",
            "condition-star",
            "--parent-gram",
            "[[4,0],[0,4]]",
            "--child-gram",
            "[[36,0],[0,4]]",
        ]
    )
    assert code == 0
    assert json.loads(out)["verdicts"]["satisfied"]


def test_class_group_command():
    code, out = run_cli(["--json", "class-group", "--disc", "-23"])
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["class_number"] == 3
    assert payload["forms"] == [[1, 1, 6], [2, -1, 3], [2, 1, 3]]


def test_theorem_c_command_exit_codes():
    code, out = run_cli(["--json", "theorem-c", "--gram", "[[2,1],[1,10]]"])
    assert code == 0
    assert json.loads(out)["verdicts"]["applies"]
    code, out = run_cli(["--json", "theorem-c", "--gram", "[[2,1],[1,2]]"])
    assert code == 1


def test_brauer_image_command():
    code, out = run_cli(["--json", "brauer-image", "--rho", "20", "--params", "[1,0,1]"])
    assert code == 0
    payload = json.loads(out)["payload"]
    assert [0, 0] in payload["realized"]
    assert set(map(tuple, map(tuple, payload["realized"]))) <= set(
        map(tuple, payload["upper_bound"])
    )


def test_im_phi_bound_command():
    code, out = run_cli(["--json", "im-phi-bound", "--gram", "[[2,0],[0,6]]"])
    assert code == 0
    assert json.loads(out)["payload"]["trivial_only"]


def test_accept_single_fast_criterion():
    code, out = run_cli(["--json", "accept", "--criterion", "3"])
    assert code == 0
    env = json.loads(out)
    assert env["verdicts"]["all_pass"]
    assert env["payload"]["results"][0]["criterion"] == 3


def test_accept_rejects_unknown_suite():
    with pytest.raises(SystemExit):
        run_cli(["--json", "accept", "--suite", "bogus"])


def test_human_mode_prints_verdict_lines():
    code, out = run_cli(["condition-star", "--parent-gram", "[[4,0],[0,4]]", "--child-gram", "[[36,0],[0,4]]"])
    assert code == 0
    assert "satisfied: True" in out


def test_alternate_flag_spellings_share_digests():
    # the same mathematical inputs must digest identically however spelled
    a = run_cli(["--json", "standard-lattice", "--tag", "N"])[1]
    b = run_cli(["standard-lattice", "--name", "N", "--json"])[1]
    assert a == b
    a = run_cli(["--json", "class-group", "--disc", "-23"])[1]
    b = run_cli(["--json", "class-group", "-D", "-23"])[1]
    assert a == b
    a = run_cli(["--json", "epsilon", "--vector", "[1,0,0,0,0,0,0,0,0,0,0,0]"])[1]
    b = run_cli(["--json", "epsilon", "--vector", "1,0,0,0,0,0,0,0,0,0,0,0"])[1]
    assert a == b
    a = run_cli(["--json", "theorem-c", "--gram", "[[2,1],[1,10]]"])[1]
    b = run_cli(["--json", "theorem-c", "--gram", "2,1;1,10"])[1]
    assert a == b
    a = run_cli(["--json", "nikulin-exists", "--signature", "[0,10]", "--gram", "[[-2]]"])[1]
    b = run_cli(["--json", "nikulin-exists", "--sig", "0,10", "--gram", "[[-2]]"])[1]
    assert a == b


def test_file_based_input_spellings(tmp_path):
    lat = tmp_path / "lat.json"
    lat.write_text('{"gram": [[4,0],[0,4]]}')
    rows = tmp_path / "rows.json"
    rows.write_text("[[3,0],[0,1]]")
    code, out = run_cli(["--json", "roots", "--gram-file", str(lat), "--norm", "4"])
    assert code == 0
    assert json.loads(out)["payload"]["count"] == 4
    code, out = run_cli(["--json", "sublattice", "--p", "3", "--lattice", str(lat)])
    assert code == 0
    assert json.loads(out)["payload"]["gram"] == [[36, 0], [0, 4]]
    code, out = run_cli(
        ["--json", "condition-star", "--lattice", str(lat), "--sublattice", str(rows)]
    )
    assert code == 0
    assert json.loads(out)["verdicts"]["satisfied"]


def test_verify_embedding_positional_file(tmp_path):
    code, out = run_cli(
        ["--json", "theorem-a", "--rho", "20", "--params", "2,1,3", "--label", "1,1"]
    )
    emb = tmp_path / "emb.json"
    emb.write_text(json.dumps(json.loads(out)["payload"]))
    code, out = run_cli(["--json", "verify-embedding", str(emb)])
    assert code == 0
    assert json.loads(out)["verdicts"]["valid"]


def test_accept_positional_suite_name():
    code, out = run_cli(["--json", "accept", "theorem-c"])
    assert code == 0
    env = json.loads(out)
    assert [r["criterion"] for r in env["payload"]["results"]] == [11]


def test_seed_flag_only_tags_the_digest():
    plain = run_cli(["--json", "epsilon", "--vector", "1,0,0,0,0,0,0,0,0,0,0,0"])[1]
    tagged = run_cli(["--json", "--seed", "9", "epsilon", "--vector", "1,0,0,0,0,0,0,0,0,0,0,0"])[1]
    trailing = run_cli(["--json", "epsilon", "--vector", "1,0,0,0,0,0,0,0,0,0,0,0", "--seed", "9"])[1]
    assert tagged == trailing
    assert json.loads(plain)["payload"] == json.loads(tagged)["payload"]
    assert json.loads(plain)["inputs_digest"] != json.loads(tagged)["inputs_digest"]

"""CLI: subcommands, exit codes, deterministic reports."""

import json
import subprocess
import sys


from g2spin7.cli import main
from g2spin7.dsl import parse_form


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


class TestInduce:
    def test_cy_first_column_json(self, capsys):
        rc, out, _ = run(capsys, "induce", "cy", "--xi", "e7", "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["omega"] == "e16 - e25 - e34"
        assert "e1 -> -e6" in payload["j_table"]
        assert "e2 -> e5" in payload["j_table"]
        assert "e3 -> e4" in payload["j_table"]
        assert payload["im_omega"] == "-e124 + e135 + e236 + e456"

    def test_cy_second_column_json(self, capsys):
        rc, out, _ = run(capsys, "induce", "cy", "--xi", "e3", "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert payload["omega"] == "e12 - e47 - e56"
        assert "e1 -> -e2" in payload["j_table"]
        assert "e4 -> e7" in payload["j_table"]
        assert "e5 -> e6" in payload["j_table"]
        assert parse_form(payload["im_omega"], 7) == parse_form(
            "e157 - e146 + e245 + e267", 7
        )

    def test_g2_worked_examples(self, capsys):
        rc, out, _ = run(capsys, "induce", "g2", "--gamma", "e4", "--format", "json")
        assert rc == 0
        got = json.loads(out)["phi"]
        assert parse_form(got, 8) == parse_form(
            "-e123 + e356 - e378 - e257 - e268 - e158 + e167", 8
        )
        rc, out, _ = run(capsys, "induce", "g2", "--gamma", "e5", "--format", "json")
        got = json.loads(out)["phi"]
        assert parse_form(got, 8) == parse_form(
            "e126 - e346 + e137 + e247 + e148 - e238 + e678", 8
        )

    def test_missing_direction(self, capsys):
        rc, _, err = run(capsys, "induce", "cy")
        assert rc == 2 and "xi" in err


class TestVerify:
    def test_zero_samples_usage_error(self, capsys):
        rc, _, err = run(capsys, "verify", "g2", "--samples", "0")
        assert rc == 2

    def test_small_g2_pass(self, capsys):
        rc, out, _ = run(capsys, "verify", "g2", "--samples", "5",
                         "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert payload["pass"] is True
        assert payload["sign_ledger"]["cy-holomorphic-volume"] == -1

    def test_small_spin7_pass(self, capsys):
        rc, out, _ = run(capsys, "verify", "spin7", "--samples", "5",
                         "--format", "json")
        assert rc == 0
        assert json.loads(out)["pass"] is True

    def test_reports_byte_identical(self, capsys):
        rc1, out1, _ = run(capsys, "verify", "g2", "--samples", "4",
                           "--format", "json", "--seed", "11")
        rc2, out2, _ = run(capsys, "verify", "g2", "--samples", "4",
                           "--format", "json", "--seed", "11")
        assert rc1 == rc2 == 0
        assert out1 == out2

    def test_float_backend(self, capsys):
        rc, out, _ = run(capsys, "--backend", "float", "verify", "g2",
                         "--samples", "5", "--format", "json")
        assert rc == 0
        assert json.loads(out)["backend"] == "float"


class TestMirrorReport:
    def test_worked_pair(self, capsys):
        rc, out, _ = run(capsys, "mirror-report", "--xi", "e7",
                         "--xi-prime", "e3", "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert payload["transfer_identities_pass"] is True
        assert payload["witness_forms_pass"] is True
        assert payload["classification"] == {"xi": "lagrangian",
                                             "xi_prime": "complex"}
        start = payload["interpolation"]["start"]
        assert start["sympl_weight"] == "0" and start["cplx_weight"] == "1"
        end = payload["interpolation"]["end"]
        assert end["sympl_weight"] == "1" and end["cplx_weight"] == "0"
        assert end["xi_dd"] == "e7"
        assert start["xi_dd"] == "-e3"

    def test_bad_plane(self, capsys):
        rc, _, err = run(capsys, "mirror-report", "--xi", "e7",
                         "--xi-prime", "e3", "--lambda", "e1")
        assert rc == 2


class TestTrialityCommand:
    def test_coordinate_frame(self, capsys):
        rc, out, _ = run(capsys, "triality", "--alpha", "e4", "--beta", "e5",
                         "--gamma", "e6", "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert all(payload["identities"].values())
        assert payload["table"]["row1"]["matches_reference_diagram"]
        assert payload["table"]["row2"]["matches_reference_diagram"]


class TestEquiv:
    def test_identity(self, capsys):
        phi = "e123 + e145 + e167 + e246 - e257 - e347 - e356"
        rc, out, _ = run(capsys, "equiv", "--a", phi, "--b", phi,
                         "--format", "json")
        assert rc == 0
        payload = json.loads(out)
        assert payload["found"] and payload["perm"] == [1, 2, 3, 4, 5, 6, 7]

    def test_not_equivalent(self, capsys):
        phi = "e123 + e145 + e167 + e246 - e257 - e347 - e356"
        flipped = "e123 + e145 + e167 + e246 - e257 - e347 + e356"
        rc, out, _ = run(capsys, "equiv", "--a", phi, "--b", flipped,
                         "--format", "json")
        assert rc == 1
        assert json.loads(out)["found"] is False

    def test_sign_flip_on_one_axis_is_equivalent(self, capsys):
        rc, out, _ = run(capsys, "equiv", "--a", "e123 + e456",
                         "--b", "e123 - e456", "--format", "json")
        assert rc == 0
        assert json.loads(out)["found"] is True

    def test_parse_error_exit_2(self, capsys):
        rc, _, err = run(capsys, "equiv", "--a", "e12 +", "--b", "e12")
        assert rc == 2 and "position" in err


def test_console_script_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "g2spin7.cli", "induce", "cy", "--xi", "e7"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "e16 - e25 - e34" in proc.stdout

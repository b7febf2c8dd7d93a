import json

import pytest

from climbtrace import auto_offset, new_record, synth_climb
from climbtrace.cli import main
from conftest import spike_trace


def csv_constant_1g(seconds=2.0):
    rows = ["t,mag"]
    rows += [f"{i / 20},1.0" for i in range(int(seconds * 20) + 1)]
    return ("\n".join(rows) + "\n").encode()


def csv_from_log(log):
    rows = ["t,mag"]
    rows += [f"{t!r},{m!r}" for t, m in zip(log.times_s, log.magnitudes)]
    return ("\n".join(rows) + "\n").encode()


@pytest.fixture
def climbs_dir(tmp_path):
    return tmp_path / "climbs"


def run(climbs_dir, *argv):
    return main(["--dir", str(climbs_dir), *argv])


def run_json(capsys, climbs_dir, *argv):
    code = run(climbs_dir, *argv, "--json")
    assert code == 0
    return json.loads(capsys.readouterr().out)


def ingest_csv(tmp_path, climbs_dir, capsys, data, epoch_ms, title=None, extra=()):
    path = tmp_path / f"log_{epoch_ms}.csv"
    path.write_bytes(data)
    argv = ["ingest", str(path), "--recorded-at-ms", str(epoch_ms), *extra]
    if title:
        argv += ["--title", title]
    return run_json(capsys, climbs_dir, *argv)


def test_ingest_constant_prints_zero_score(tmp_path, climbs_dir, capsys):
    path = tmp_path / "flat.csv"
    path.write_bytes(csv_constant_1g())
    code = run(climbs_dir, "ingest", str(path), "--recorded-at-ms", "1000")
    out = capsys.readouterr().out
    assert code == 0
    assert "smoothness score: 0" in out


def test_ingest_then_list(tmp_path, climbs_dir, capsys):
    summary = ingest_csv(tmp_path, climbs_dir, capsys, csv_constant_1g(), 1000, title="flat")
    rows = run_json(capsys, climbs_dir, "list")
    assert [r["id"] for r in rows] == [summary["id"]]
    assert rows[0]["title"] == "flat"


def test_ingest_malformed_csv_fails(tmp_path, climbs_dir, capsys):
    path = tmp_path / "bad.csv"
    path.write_bytes(b"t,mag\n0,1\n0.05,zap\n")
    code = run(climbs_dir, "ingest", str(path))
    captured = capsys.readouterr()
    assert code == 1
    assert "line 3" in captured.err
    assert captured.out == ""


def test_ingest_trim_lead_drops_start(tmp_path, climbs_dir, capsys):
    # 1 s of noise spike at the front, then flat
    rows = ["t,mag"] + [f"{i / 20},{5.0 if i < 20 else 1.0}" for i in range(61)]
    path = tmp_path / "lead.csv"
    path.write_bytes(("\n".join(rows) + "\n").encode())
    trimmed = run_json(
        capsys, climbs_dir, "ingest", str(path), "--recorded-at-ms", "1000", "--trim-lead", "1.0"
    )
    assert trimmed["duration"] == pytest.approx(2.0)
    assert trimmed["display_score"] == 0


def test_list_empty_store_header_only(climbs_dir, capsys):
    assert run(climbs_dir, "list") == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == 1
    assert out[0].startswith("id")


def test_list_newest_first_and_delete(tmp_path, climbs_dir, capsys):
    ids = [
        ingest_csv(tmp_path, climbs_dir, capsys, csv_constant_1g(), epoch)["id"]
        for epoch in (1000, 3000, 2000)
    ]
    rows = run_json(capsys, climbs_dir, "list")
    assert [r["id"] for r in rows] == [ids[1], ids[2], ids[0]]

    assert run(climbs_dir, "delete", ids[1][:8]) == 0
    capsys.readouterr()
    rows = run_json(capsys, climbs_dir, "list")
    assert ids[1] not in [r["id"] for r in rows]


def test_analyze_json_has_full_report(tmp_path, climbs_dir, capsys):
    summary = ingest_csv(tmp_path, climbs_dir, capsys, csv_constant_1g(), 1000)
    detail = run_json(capsys, climbs_dir, "analyze", summary["id"])
    report = detail["report"]
    assert set(report) >= {
        "mean",
        "variance",
        "mean_sq_diff",
        "lag1_autocorr",
        "display_score",
        "min",
        "max",
        "duration",
        "per_second_scores",
    }
    assert report["display_score"] == 0
    assert report["variance"] == 0.0


def test_analyze_static_scores_below_dynamic(tmp_path, climbs_dir, capsys):
    static = synth_climb(8.0, 0.0, 2.0, seed=19)
    dynamic = synth_climb(8.0, 3.0, 2.0, seed=19)
    s = ingest_csv(tmp_path, climbs_dir, capsys, csv_from_log(static), 1000)
    d = ingest_csv(tmp_path, climbs_dir, capsys, csv_from_log(dynamic), 2000)
    s_detail = run_json(capsys, climbs_dir, "analyze", s["id"])
    d_detail = run_json(capsys, climbs_dir, "analyze", d["id"])
    assert s_detail["report"]["display_score"] < d_detail["report"]["display_score"]


def test_analyze_unknown_id_fails(climbs_dir, capsys):
    assert run(climbs_dir, "analyze", "feedbeef") == 1
    assert "error" in capsys.readouterr().err


def test_crop_then_analyze_recomputes(tmp_path, climbs_dir, capsys):
    from climbtrace import ClimbStore

    record = new_record(spike_trace(), title="spiky")
    ClimbStore(climbs_dir).save(record)
    before = run_json(capsys, climbs_dir, "analyze", record.id)
    cropped = run_json(capsys, climbs_dir, "crop", record.id, "--at", "7.0")
    after = run_json(capsys, climbs_dir, "analyze", cropped["id"])
    assert cropped["id"] != record.id
    assert after["report"]["display_score"] < before["report"]["display_score"]


def test_rename_updates_listing(tmp_path, climbs_dir, capsys):
    summary = ingest_csv(tmp_path, climbs_dir, capsys, csv_constant_1g(), 1000)
    assert run(climbs_dir, "rename", summary["id"], "--title", "pink v2 route") == 0
    capsys.readouterr()
    rows = run_json(capsys, climbs_dir, "list")
    assert rows[0]["title"] == "pink v2 route"


def test_export_import_round_trip_identical_analysis(tmp_path, climbs_dir, capsys):
    summary = ingest_csv(
        tmp_path, climbs_dir, capsys, csv_from_log(synth_climb(5.0, 1.0, 2.0, seed=2)), 4000
    )
    out_file = tmp_path / "shared.climb.json"
    assert run(climbs_dir, "export", summary["id"], "--out", str(out_file)) == 0
    capsys.readouterr()
    original = run_json(capsys, climbs_dir, "analyze", summary["id"])

    other_dir = tmp_path / "other_climbs"
    imported = run_json(capsys, other_dir, "import", "--file", str(out_file))
    assert imported["id"] == summary["id"]
    copied = run_json(capsys, other_dir, "analyze", summary["id"])
    assert copied == original


def test_attach_video_prints_auto_offset(tmp_path, climbs_dir, capsys):
    epoch = 1_554_034_803_000
    summary = ingest_csv(tmp_path, climbs_dir, capsys, csv_constant_1g(), epoch)
    video_epoch = epoch - 3000
    attached = run_json(
        capsys,
        climbs_dir,
        "attach-video",
        summary["id"],
        "--file",
        f"VID_{video_epoch}.mp4",
        "--fps",
        "30",
    )
    assert attached["offset_ms"] == auto_offset(video_epoch, epoch)
    assert attached["offset_ms"] == 3000


def test_graph_detail_width(tmp_path, climbs_dir, capsys):
    rows = ["t,mag"] + [f"{i / 20},{1.0 + (i % 5) * 0.1}" for i in range(201)]
    path = tmp_path / "ten.csv"
    path.write_bytes(("\n".join(rows) + "\n").encode())
    summary = ingest_csv(tmp_path, climbs_dir, capsys, path.read_bytes(), 1000)
    out = tmp_path / "ten.svg"
    assert run(climbs_dir, "graph", summary["id"], "--mode", "detail", "--out", str(out)) == 0
    assert 'width="1000"' in out.read_text()


def test_graph_thumbnail_width_matches_flag(tmp_path, climbs_dir, capsys):
    summary = ingest_csv(tmp_path, climbs_dir, capsys, csv_constant_1g(), 1000)
    out = tmp_path / "thumb.svg"
    code = run(
        climbs_dir,
        "graph",
        summary["id"],
        "--mode",
        "thumbnail",
        "--box-width",
        "240",
        "--out",
        str(out),
    )
    assert code == 0
    assert 'width="240"' in out.read_text()


def test_graph_output_reproducible(tmp_path, climbs_dir, capsys):
    summary = ingest_csv(
        tmp_path, climbs_dir, capsys, csv_from_log(synth_climb(4.0, 2.0, 2.0, seed=8)), 1000
    )
    first = tmp_path / "a.svg"
    second = tmp_path / "b.svg"
    run(climbs_dir, "graph", summary["id"], "--out", str(first))
    run(climbs_dir, "graph", summary["id"], "--out", str(second))
    assert first.read_bytes() == second.read_bytes()


def test_env_var_selects_dir_and_flag_wins(tmp_path, capsys, monkeypatch):
    env_dir = tmp_path / "from_env"
    flag_dir = tmp_path / "from_flag"
    monkeypatch.setenv("CLIMBTRACE_DIR", str(env_dir))

    path = tmp_path / "flat.csv"
    path.write_bytes(csv_constant_1g())
    assert main(["ingest", str(path), "--recorded-at-ms", "1000"]) == 0
    capsys.readouterr()
    assert any(env_dir.glob("climb_*.json"))

    assert main(["--dir", str(flag_dir), "list", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == []


def test_serve_refuses_occupied_port(climbs_dir, capsys):
    import socket

    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.bind(("127.0.0.1", 0))
    sock.listen(1)
    port = sock.getsockname()[1]
    try:
        assert run(climbs_dir, "serve", "--port", str(port)) == 1
        assert "cannot bind" in capsys.readouterr().err
    finally:
        sock.close()

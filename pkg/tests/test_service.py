import json

import pytest
from fastapi.testclient import TestClient

from climbtrace import new_record
from climbtrace.service import create_app
from climbtrace.store import serialize_record
from conftest import constant_trace, spike_trace


@pytest.fixture
def client(store):
    return TestClient(create_app(store))


@pytest.fixture
def spiky(store):
    record = new_record(spike_trace(), title="spiky")
    store.save(record)
    return record


def test_list_empty_store(client):
    response = client.get("/climbs")
    assert response.status_code == 200
    assert response.json() == []


def test_list_returns_summaries(client, store, fixture_records):
    rows = client.get("/climbs").json()
    assert len(rows) == len(fixture_records)
    assert set(rows[0]) == {"id", "title", "recorded_at_ms", "duration", "display_score"}
    epochs = [r["recorded_at_ms"] for r in rows]
    assert epochs == sorted(epochs, reverse=True)


def test_get_climb_detail_with_graph(client, spiky):
    doc = client.get(f"/climbs/{spiky.id}").json()
    assert doc["id"] == spiky.id
    assert doc["title"] == "spiky"
    assert doc["report"]["display_score"] > 0
    assert doc["graph"]["mode"] == "detail"
    assert doc["graph"]["width"] == 800  # 8 s at 100 px/s
    assert len(doc["graph"]["points"]) == len(spiky.trace)


def test_get_unknown_climb_404(client):
    assert client.get("/climbs/feedbeef").status_code == 404


def test_import_climb_endpoint(client, store, spiky):
    data = store.export_climb(spiky.id)
    store.delete(spiky.id)
    response = client.post("/climbs", content=data)
    assert response.status_code == 201
    assert response.json()["id"] == spiky.id
    assert client.get(f"/climbs/{spiky.id}").status_code == 200


def test_import_duplicate_is_noop(client, store, spiky):
    data = store.export_climb(spiky.id)
    first = client.post("/climbs", content=data).json()
    second = client.post("/climbs", content=data).json()
    assert first["id"] == second["id"] == spiky.id
    assert len(client.get("/climbs").json()) == 1


def test_import_malformed_409(client):
    assert client.post("/climbs", content=b"{not json").status_code == 409
    assert (
        client.post("/climbs", content=json.dumps({"schema_version": 99}).encode()).status_code
        == 409
    )


def test_crop_returns_new_id(client, spiky):
    response = client.post(f"/climbs/{spiky.id}/crop", json={"at_s": 7.0})
    assert response.status_code == 200
    doc = response.json()
    assert doc["id"] != spiky.id
    assert doc["duration"] == pytest.approx(7.0)
    assert client.get(f"/climbs/{spiky.id}").status_code == 404
    assert client.get(f"/climbs/{doc['id']}").status_code == 200


def test_crop_at_or_past_duration_400(client, spiky):
    duration = spiky.trace.duration_s
    assert client.post(f"/climbs/{spiky.id}/crop", json={"at_s": duration}).status_code == 400
    assert client.post(f"/climbs/{spiky.id}/crop", json={"at_s": duration + 5}).status_code == 400


def test_crop_unknown_404(client):
    assert client.post("/climbs/feedbeef/crop", json={"at_s": 1.0}).status_code == 404


def test_rename_endpoint(client, spiky):
    response = client.patch(f"/climbs/{spiky.id}", json={"title": "yellow v1 route"})
    assert response.status_code == 200
    assert response.json()["title"] == "yellow v1 route"
    assert client.get(f"/climbs/{spiky.id}").json()["title"] == "yellow v1 route"


def test_rename_empty_title_400(client, spiky):
    assert client.patch(f"/climbs/{spiky.id}", json={"title": "  "}).status_code == 400


def test_delete_endpoint(client, spiky):
    assert client.delete(f"/climbs/{spiky.id}").status_code == 204
    assert client.delete(f"/climbs/{spiky.id}").status_code == 404
    assert client.get("/climbs").json() == []


def test_attach_video_endpoint(client, store):
    record = new_record(constant_trace(epoch_ms=1_554_034_803_000))
    store.save(record)
    response = client.post(
        f"/climbs/{record.id}/video",
        json={"filename": "VID_1554034800000.mp4", "fps": 29.97},
    )
    assert response.status_code == 200
    link = response.json()
    assert link == {"filename": "VID_1554034800000.mp4", "offset_ms": 3000, "fps": 29.97}
    assert client.get(f"/climbs/{record.id}").json()["video"] == link


def test_video_static_file_and_range_requests(client, store):
    payload = bytes(range(200))
    (store.storage_dir / "clip.mp4").write_bytes(payload)

    full = client.get("/videos/clip.mp4")
    assert full.status_code == 200
    assert full.content == payload

    partial = client.get("/videos/clip.mp4", headers={"Range": "bytes=10-19"})
    assert partial.status_code == 206
    assert partial.content == payload[10:20]
    assert partial.headers["content-range"] == f"bytes 10-19/{len(payload)}"


def test_video_missing_or_traversal_404(client):
    assert client.get("/videos/nope.mp4").status_code == 404
    assert client.get("/videos/..%2Fsecret.json").status_code == 404


def test_cors_allows_local_ui(client):
    response = client.get("/climbs", headers={"Origin": "http://localhost:5173"})
    assert response.headers.get("access-control-allow-origin") == "*"


def test_mutations_visible_to_fresh_store(client, store, spiky):
    from climbtrace import ClimbStore

    client.patch(f"/climbs/{spiky.id}", json={"title": "renamed"})
    fresh = ClimbStore(store.storage_dir).load_all()
    assert fresh[0].title == "renamed"

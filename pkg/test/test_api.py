"""REST API"""

from lorenz_links.config import settings
from lorenz_links.topology.schemas import validate_document

PREFIX = settings.API_PREFIX


def test_root_and_health(api_client):
    assert api_client.get("/").json()["name"] == settings.APP_NAME
    health = api_client.get("/health")
    assert health.status_code == 200
    assert health.json()["status"] == "healthy"


def test_show(api_client):
    response = api_client.post(f"{PREFIX}/links/show", json={"vector": "2,2"})
    assert response.status_code == 200
    body = response.json()
    assert body["tlink"] == [[2, 2]]
    assert body["braids"]["tlink"]["letters"] == [1, 1]
    assert body["svg"] is None
    validate_document("show", body)


def test_show_with_svg(api_client):
    response = api_client.post(f"{PREFIX}/links/show", json={"tlink": "(2,3)", "include_svg": True})
    assert response.status_code == 200
    assert response.json()["svg"].startswith("<svg")


def test_input_errors_are_400(api_client):
    assert api_client.post(f"{PREFIX}/links/show", json={"vector": "3,2"}).status_code == 400
    assert api_client.post(f"{PREFIX}/links/show", json={}).status_code == 400
    both = api_client.post(f"{PREFIX}/links/verify", json={"vector": "2", "tlink": "(2,1)"})
    assert both.status_code == 400
    assert "exactly one" in both.json()["detail"]


def test_verify(api_client):
    response = api_client.post(f"{PREFIX}/links/verify", json={"vector": "2,2,2", "skip": ["jones"]})
    assert response.status_code == 200
    body = response.json()
    validate_document("instance", body)
    assert body["verified"] is True
    assert body["invariants"]["grid"]["jones"] is None


def test_report(api_client):
    response = api_client.post(f"{PREFIX}/links/report", json={"braid": "s1 s1 s1"})
    assert response.status_code == 200
    body = response.json()
    validate_document("report", body)
    assert body["source"] == "braid"
    assert body["alexander"] == {"min_deg": 0, "coeffs": [1, -1, 1]}


def test_report_bad_braid(api_client):
    response = api_client.post(f"{PREFIX}/links/report", json={"braid": "q7"})
    assert response.status_code == 400


def test_battery(api_client):
    response = api_client.get(f"{PREFIX}/battery", params={"max_sum": 3})
    assert response.status_code == 200
    body = response.json()
    validate_document("battery", body)
    assert (body["passed"], body["failed"]) == (6, 0)


def test_battery_limit(api_client):
    too_big = settings.API_BATTERY_MAX_SUM + 1
    assert api_client.get(f"{PREFIX}/battery", params={"max_sum": too_big}).status_code == 400
    assert api_client.get(f"{PREFIX}/battery", params={"max_sum": 0}).status_code == 400


def test_oversized_links_are_rejected(api_client):
    for body in ({"vector": "1000"}, {"vector": "1^100000000"}, {"tlink": "(2,1),(1000,1)"}):
        response = api_client.post(f"{PREFIX}/links/verify", json=body)
        assert response.status_code == 400
        assert "limit" in response.json()["detail"]
    at_limit = settings.API_MAX_STRANDS - 1
    assert api_client.post(f"{PREFIX}/links/show", json={"vector": str(at_limit)}).status_code == 200


def test_oversized_braids_are_rejected(api_client):
    too_long = " ".join(["s1"] * (settings.API_MAX_LETTERS + 1))
    for body in (
        {"braid": too_long},
        {"braid": "s1", "strands": settings.API_MAX_STRANDS + 1},
        {"braid": f"s{settings.API_MAX_STRANDS}"},
    ):
        response = api_client.post(f"{PREFIX}/links/report", json=body)
        assert response.status_code == 400
        assert "limit" in response.json()["detail"]

"""Donor and patient profile endpoints: enrollment, reads, updates."""

from conftest import auth, enroll_donor, enroll_patient, register_and_login


def test_donor_enrollment_grants_role_without_relogin(client):
    token = register_and_login(client, "Donor1", "donor1@test.com")
    r = client.get("/api/donor/profile", headers=auth(token))
    assert r.status_code == 403  # registered but not enrolled

    created = enroll_donor(client, token)
    assert created["blood_group"] == "A+"
    assert created["visible_now"] is True
    assert created["next_eligible_date"] is None

    r = client.get("/api/donor/profile", headers=auth(token))
    assert r.status_code == 200
    assert r.json()["city"] == "Sukot"


def test_enroll_requires_all_fields(client):
    token = register_and_login(client, "Donor1", "donor1@test.com")
    r = client.post("/api/donor/profile", json={"phone": "12345"}, headers=auth(token))
    assert r.status_code == 422
    details = r.json()["error"]["details"]
    assert set(details["missing_fields"]) == {"city", "blood_group"}


def test_enroll_rejects_unknown_group(client):
    token = register_and_login(client, "Donor1", "donor1@test.com")
    r = client.post(
        "/api/donor/profile",
        json={"phone": "12345", "city": "Sukot", "blood_group": "C+"},
        headers=auth(token),
    )
    assert r.status_code == 422
    assert r.json()["error"]["code"] == "INVALID_BLOOD_GROUP"


def test_put_toggles_availability(client):
    token = register_and_login(client, "Donor1", "donor1@test.com")
    enroll_donor(client, token)
    r = client.put("/api/donor/profile", json={"available": False}, headers=auth(token))
    assert r.status_code == 200
    r = client.get("/api/donor/profile", headers=auth(token))
    assert r.json()["available"] is False
    assert r.json()["visible_now"] is False


def test_put_rejects_bad_group(client):
    token = register_and_login(client, "Donor1", "donor1@test.com")
    enroll_donor(client, token)
    r = client.put("/api/donor/profile", json={"blood_group": "C+"}, headers=auth(token))
    assert r.status_code == 422
    assert r.json()["error"]["code"] == "INVALID_BLOOD_GROUP"


def test_put_rejects_malformed_phone(client):
    token = register_and_login(client, "Donor1", "donor1@test.com")
    enroll_donor(client, token)
    r = client.put("/api/donor/profile", json={"phone": "12"}, headers=auth(token))
    assert r.status_code == 422
    assert r.json()["error"]["code"] == "VALIDATION_FAILED"


def test_put_partial_update_keeps_other_fields(client):
    token = register_and_login(client, "Donor1", "donor1@test.com")
    enroll_donor(client, token, city="Sukot", phone="0987654321")
    client.put("/api/donor/profile", json={"city": "Lahore"}, headers=auth(token))
    body = client.get("/api/donor/profile", headers=auth(token)).json()
    assert body["city"] == "Lahore"
    assert body["phone"] == "0987654321"


def test_profile_requires_donor_role(client):
    patient_token = register_and_login(client, "Patient1", "patient1@test.com")
    enroll_patient(client, patient_token)
    r = client.get("/api/donor/profile", headers=auth(patient_token))
    assert r.status_code == 403
    assert r.json()["error"]["code"] == "ROLE_MISSING"


def test_profile_requires_token(client):
    assert client.get("/api/donor/profile").status_code == 401


def test_patient_profile_round_trip(client):
    token = register_and_login(client, "Patient1", "patient1@test.com")
    created = enroll_patient(client, token, phone="0321654987", city="Sukot")
    assert created["city"] == "Sukot"
    r = client.put("/api/patient/profile", json={"city": "Lahore"}, headers=auth(token))
    assert r.status_code == 200
    assert client.get("/api/patient/profile", headers=auth(token)).json()["city"] == "Lahore"


def test_patient_profile_needs_patient_role(client):
    token = register_and_login(client, "Donor1", "donor1@test.com")
    enroll_donor(client, token)
    assert client.get("/api/patient/profile", headers=auth(token)).status_code == 403


def test_user_may_hold_both_roles(client):
    token = register_and_login(client, "Both", "both@test.com")
    enroll_donor(client, token)
    enroll_patient(client, token)
    assert client.get("/api/donor/profile", headers=auth(token)).status_code == 200
    assert client.get("/api/patient/profile", headers=auth(token)).status_code == 200
    r = client.post("/api/login", json={"email": "both@test.com", "password": "s3cretpw"})
    assert sorted(r.json()["roles"]) == ["DONOR", "PATIENT"]


def test_donor_profile_shows_cooldown_fields(client, clock):
    token = register_and_login(client, "Donor1", "donor1@test.com")
    profile = enroll_donor(client, token)
    r = client.post(
        "/api/donations",
        json={"donor_id": profile["donor_id"], "donated_on": "2025-06-15"},
        headers=auth(token),
    )
    assert r.status_code == 201
    body = client.get("/api/donor/profile", headers=auth(token)).json()
    assert body["last_donation_date"] == "2025-06-15"
    assert body["next_eligible_date"] == "2025-09-13"
    assert body["visible_now"] is False
    clock.advance(days=90)
    from conftest import login

    token = login(client, "donor1@test.com")  # old session expired with the clock jump
    body = client.get("/api/donor/profile", headers=auth(token)).json()
    assert body["visible_now"] is True

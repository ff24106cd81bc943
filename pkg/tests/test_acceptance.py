"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
report lines.
"""

import itertools
import random
import time
from concurrent.futures import ThreadPoolExecutor
from datetime import date, timedelta

from fastapi.testclient import TestClient

from conftest import START, auth, build_app, login
from authz_matrix import ACTORS, ANON, MATRIX, fill
from hemobank.clock import FixedClock
from hemobank.domain import (
    BloodGroup,
    DonorRecord,
    MatchQuery,
    antigens_of,
    is_compatible,
    match_donors,
)
from hemobank.seeds import seed_profile
from hemobank.storage import InMemoryStore, SqliteStore


def report(line: str) -> None:
    print(f"\n[PASS] {line}")


def fresh_app():
    clock = FixedClock(START)
    store = InMemoryStore(now_fn=clock.now)
    store.migrate()
    return build_app(store, clock), store, clock


def seeded_app():
    app, store, clock = fresh_app()
    creds = seed_profile(store, "fig6", app.state.auth.hasher)
    return app, store, clock, creds


# -- criterion 1 -------------------------------------------------------------


def test_compatibility_oracle_all_64_pairs():
    started = time.monotonic()
    groups = list(BloodGroup)
    compatible = 0
    for donor, recipient in itertools.product(groups, groups):
        expected = antigens_of(donor) <= antigens_of(recipient)
        assert is_compatible(donor, recipient) == expected
        compatible += expected
    assert compatible == 27
    assert all(is_compatible(BloodGroup.O_NEG, r) for r in groups)
    assert all(is_compatible(d, BloodGroup.AB_POS) for d in groups)
    elapsed = time.monotonic() - started
    assert elapsed < 1.0
    report(f"compatibility oracle: 64/64 pairs agree, 27 compatible, "
           f"O- universal donor, AB+ universal recipient ({elapsed:.3f}s)")


# -- criterion 2 -------------------------------------------------------------


def test_cooldown_visibility_property_1000_pairs():
    started = time.monotonic()
    rng = random.Random(90)
    base = date(2020, 1, 1)
    pairs = [(0, 0), (0, 90)]  # both boundary days, explicitly
    while len(pairs) < 1000:
        pairs.append((rng.randrange(0, 2000), rng.randrange(0, 240)))

    for start_offset, probe_offset in pairs:
        donated = base + timedelta(days=start_offset)
        probe = donated + timedelta(days=probe_offset)
        donor = DonorRecord(1, 1, "0987654321", "Sukot", BloodGroup.A_POS,
                            last_donation_date=donated)
        query = MatchQuery(blood_group=BloodGroup.A_POS, city="Sukot", now=probe)
        visible = match_donors(query, [donor]) != []
        in_cooldown = donated <= probe < donated + timedelta(days=90)
        assert visible == (not in_cooldown), (donated, probe)

    elapsed = time.monotonic() - started
    assert elapsed < 5.0
    report(f"cooldown: 1000 (donation, probe) pairs match the half-open "
           f"90-day window, boundaries included ({elapsed:.3f}s)")


# -- criterion 3 -------------------------------------------------------------


def test_fig6_end_to_end_donation_cycle():
    started = time.monotonic()
    app, store, clock, creds = seeded_app()
    client = TestClient(app)

    patient = login(client, "patient1@test.com", creds["patient1@test.com"])
    r = client.post(
        "/api/requests",
        json={"blood_group": "A+", "quantity_units": 2, "city": "Sukot"},
        headers=auth(patient),
    )
    assert r.status_code == 201
    rid = r.json()["request_id"]

    matches = client.get(f"/api/requests/{rid}/matches", headers=auth(patient)).json()
    assert [m["name"] for m in matches] == ["Donor1", "Donor2"]

    admin = login(client, "admin@test.com", creds["admin@test.com"])
    donor1 = client.get("/api/admin/donors", params={"q": "Donor1"}, headers=auth(admin)).json()
    donor1_id = donor1["items"][0]["donor_id"]
    r = client.post(
        "/api/donations",
        json={"donor_id": donor1_id, "donated_on": str(clock.today())},
        headers=auth(admin),
    )
    assert r.status_code == 201

    matches = client.get(f"/api/requests/{rid}/matches", headers=auth(patient)).json()
    assert [m["name"] for m in matches] == ["Donor2"]

    clock.advance(days=90)
    patient = login(client, "patient1@test.com", creds["patient1@test.com"])
    matches = client.get(f"/api/requests/{rid}/matches", headers=auth(patient)).json()
    assert [m["name"] for m in matches] == ["Donor1", "Donor2"]

    elapsed = time.monotonic() - started
    assert elapsed < 10.0
    report(f"seeded end-to-end: [Donor1, Donor2] -> donation hides Donor1 -> "
           f"+90 days restores order ({elapsed:.3f}s)")


# -- criterion 4 -------------------------------------------------------------


def test_twenty_concurrent_registrations_one_email():
    app, _, _ = fresh_app()

    def attempt(i: int) -> int:
        with TestClient(app) as c:
            r = c.post(
                "/api/register",
                json={"name": f"Racer{i}", "email": "contended@test.com", "password": "s3cretpw"},
            )
            return r.status_code

    with ThreadPoolExecutor(max_workers=20) as pool:
        statuses = list(pool.map(attempt, range(20)))

    assert statuses.count(201) == 1
    assert statuses.count(409) == 19
    report("uniqueness under contention: 20 concurrent registrations -> "
           "1 success, 19 DUPLICATE_EMAIL")


# -- criterion 5 -------------------------------------------------------------


def _matrix_context(app, client, clock):
    """Standard actor set: enrolled patient owning a request, donor, admin."""
    from conftest import enroll_donor, enroll_patient, make_admin, register_and_login

    tokens = {}
    tokens["patient"] = register_and_login(client, "Patient1", "patient1@test.com")
    enroll_patient(client, tokens["patient"])
    tokens["donor"] = register_and_login(client, "Donor1", "donor1@test.com")
    donor = enroll_donor(client, tokens["donor"])
    make_admin(app)
    tokens["admin"] = login(client, "root@test.com")
    r = client.post(
        "/api/requests",
        json={"blood_group": "A+", "quantity_units": 1, "city": "Sukot"},
        headers=auth(tokens["patient"]),
    )
    ctx = {
        "request_id": r.json()["request_id"],
        "donor_id": donor["donor_id"],
        "donor_user_id": donor["user_id"],
        "today": str(clock.today()),
    }
    return tokens, ctx


def test_authorization_matrix_sweep():
    deviations = []
    for method, path_template, body_template, allowed in MATRIX:
        for actor in ACTORS:
            app, _, clock = fresh_app()
            client = TestClient(app)
            tokens, ctx = _matrix_context(app, client, clock)
            headers = {} if actor == ANON else auth(tokens[actor])
            path = fill(path_template, ctx)
            body = fill(body_template, ctx)
            r = client.request(method, path, json=body, headers=headers)
            got_through = r.status_code not in (401, 403)
            expected = actor in allowed
            if got_through != expected:
                deviations.append((method, path_template, actor, r.status_code))
            elif not expected:
                wanted = 401 if actor == ANON else 403
                if r.status_code != wanted:
                    deviations.append((method, path_template, actor, r.status_code))
    assert deviations == [], deviations
    report(f"authorization matrix: {len(MATRIX)} endpoints x {len(ACTORS)} actors, "
           "zero deviations")


# -- criterion 6 -------------------------------------------------------------


def test_match_notification_idempotence_over_5_calls():
    app, store, clock, creds = seeded_app()
    client = TestClient(app)
    patient = login(client, "patient1@test.com", creds["patient1@test.com"])
    r = client.post(
        "/api/requests",
        json={"blood_group": "A+", "quantity_units": 1, "city": "Sukot"},
        headers=auth(patient),
    )
    rid = r.json()["request_id"]

    for _ in range(5):
        r = client.get(f"/api/requests/{rid}/matches", headers=auth(patient))
        assert r.status_code == 200
        assert len(r.json()) == 2

    for email in ("donor1@test.com", "donor2@test.com"):
        token = login(client, email, creds[email])
        notes = client.get("/api/notifications", headers=auth(token)).json()
        assert len([n for n in notes if n["kind"] == "MATCH_FOUND"]) == 1
    report("notification idempotence: 5 /matches calls -> exactly one "
           "MATCH_FOUND per matched donor")


# -- criterion 7 -------------------------------------------------------------


def test_admin_filters_on_seeded_donors():
    app, store, clock, creds = seeded_app()
    client = TestClient(app)
    admin = login(client, "admin@test.com", creds["admin@test.com"])

    r = client.get("/api/admin/donors", params={"blood_group": "A-"}, headers=auth(admin))
    assert [i["name"] for i in r.json()["items"]] == ["Donor2"]

    r = client.get("/api/admin/donors", params={"q": "Sukot"}, headers=auth(admin))
    assert [i["name"] for i in r.json()["items"]] == ["Donor1"]

    r = client.get("/api/admin/donors", params={"q": "no-such-donor"}, headers=auth(admin))
    assert r.json() == {"items": [], "total": 0}
    report("admin filters: blood_group=A- -> Donor2; q=Sukot -> Donor1; "
           "no match -> empty page, total 0")


# -- criterion 8 -------------------------------------------------------------


def _atomicity_trials(make_store, trials: int) -> int:
    from hemobank.storage import RoleKind

    today = date(2025, 6, 15)
    intact = 0
    for i in range(trials):
        store = make_store(i)
        store.migrate()
        user = store.insert_user("Donor1", "donor1@test.com", "h")
        donor = store.upsert_role(
            user.user_id, RoleKind.DONOR,
            {"phone": "0987654321", "city": "Sukot", "blood_group": "A+"},
        )
        original = store._write_donor_cooldown

        def explode(*args, **kwargs):
            raise RuntimeError("injected fault between the two writes")

        store._write_donor_cooldown = explode
        try:
            store.record_donation(donor.donor_id, today, today=today)
        except RuntimeError:
            pass
        finally:
            store._write_donor_cooldown = original

        donations = store.list_donations_by_donor(donor.donor_id)
        cooldown = store.get_donor(donor.donor_id).last_donation_date
        both = len(donations) == 1 and cooldown == today
        neither = len(donations) == 0 and cooldown is None
        if both or neither:
            intact += 1
        store.close()
    return intact


def test_record_donation_atomicity_100_trials(tmp_path):
    trials = 100
    memory_ok = _atomicity_trials(lambda i: InMemoryStore(), trials // 2)
    sqlite_ok = _atomicity_trials(
        lambda i: SqliteStore(str(tmp_path / f"trial{i}.db")), trials // 2
    )
    assert memory_ok + sqlite_ok == trials
    report(f"atomicity: injected fault between record_donation writes, "
           f"{trials}/{trials} trials left both-or-neither (both backends)")

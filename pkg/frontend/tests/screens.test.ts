// @vitest-environment jsdom
import { beforeEach, describe, expect, it, vi } from "vitest";

import type { ApiClient, AdminDonorPage, MatchItem } from "../src/api.js";
import type { AppContext } from "../src/context.js";
import { clearSession, saveSession } from "../src/session.js";
import { renderAdminDonors, DONOR_TABLE_COLUMNS } from "../src/screens/adminDonors.js";
import { renderRequest } from "../src/screens/request.js";
import { renderLanding } from "../src/screens/landing.js";
import { resolve } from "../src/router.js";

async function flush(times = 3): Promise<void> {
  for (let i = 0; i < times; i++) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

function ctxWith(api: Partial<ApiClient>, overrides: Partial<AppContext> = {}): AppContext {
  return {
    api: api as ApiClient,
    session: () => null,
    navigate: vi.fn(),
    logout: vi.fn(),
    debounceMs: 0,
    ...overrides,
  };
}

beforeEach(() => {
  clearSession();
  document.body.innerHTML = "";
  location.hash = "";
});

const FIG6_PAGE: AdminDonorPage = {
  total: 2,
  items: [
    {
      donor_id: 1, user_id: 1, name: "Donor1", email: "donor1@test.com",
      phone: "0987654321", city: "Sukot", blood_group: "A+", status: "ACTIVE",
      available: true, last_donation_date: null, next_eligible_date: null, visible_now: true,
    },
    {
      donor_id: 2, user_id: 2, name: "Donor2", email: "donor2@test.com",
      phone: "0123456789", city: "Guprenwala", blood_group: "A-", status: "ACTIVE",
      available: true, last_donation_date: null, next_eligible_date: null, visible_now: true,
    },
  ],
};

describe("admin donor table", () => {
  it("renders exactly the seven columns in order", async () => {
    const ctx = ctxWith({ adminDonors: async () => FIG6_PAGE });
    const screen = renderAdminDonors(ctx);
    document.body.append(screen);
    await flush();
    const headers = [...screen.querySelectorAll("thead th")].map((th) => th.textContent);
    expect(headers).toEqual(["Donor", "Phone", "Email", "City", "Blood Group", "Status", "Actions"]);
    expect(DONOR_TABLE_COLUMNS).toEqual(headers);
  });

  it("shows the seeded rows with their fields", async () => {
    const ctx = ctxWith({ adminDonors: async () => FIG6_PAGE });
    const screen = renderAdminDonors(ctx);
    document.body.append(screen);
    await flush();
    const firstRow = [...screen.querySelectorAll("tbody tr")][0];
    const cells = [...firstRow.querySelectorAll("td")].map((td) => td.textContent);
    expect(cells.slice(0, 6)).toEqual(
      ["Donor1", "0987654321", "donor1@test.com", "Sukot", "A+", "ACTIVE"],
    );
  });

  it("passes the dropdown filter to the API and repaints from the response", async () => {
    const calls: unknown[] = [];
    const ctx = ctxWith({
      adminDonors: async (params = {}) => {
        calls.push(params);
        if (params.blood_group === "A-") {
          return { total: 1, items: [FIG6_PAGE.items[1]] };
        }
        return FIG6_PAGE;
      },
    });
    const screen = renderAdminDonors(ctx);
    document.body.append(screen);
    await flush();
    const dropdown = screen.querySelector("select[name=blood_group_filter]") as HTMLSelectElement;
    dropdown.value = "A-";
    dropdown.dispatchEvent(new Event("change"));
    await flush();
    const names = [...screen.querySelectorAll("tbody tr td:first-child")].map((n) => n.textContent);
    expect(names).toEqual(["Donor2"]);
    expect(calls.at(-1)).toMatchObject({ blood_group: "A-" });
  });

  it("renders whatever the API says, even when self-contradictory", async () => {
    // a donor the domain would call hidden/incompatible; the UI must not care
    const contradictory: AdminDonorPage = {
      total: 1,
      items: [{
        ...FIG6_PAGE.items[0],
        blood_group: "Z?", status: "ACTIVE", visible_now: false,
        last_donation_date: null, next_eligible_date: "2099-01-01",
      }],
    };
    const ctx = ctxWith({ adminDonors: async () => contradictory });
    const screen = renderAdminDonors(ctx);
    document.body.append(screen);
    await flush();
    const cells = [...screen.querySelectorAll("tbody td")].map((td) => td.textContent);
    expect(cells[4]).toBe("Z?");
    expect(cells[5]).toContain("hidden");
  });

  it("discards stale filter responses by sequence number", async () => {
    let resolveSlow: (page: AdminDonorPage) => void = () => {};
    let call = 0;
    const ctx = ctxWith({
      adminDonors: async () => {
        call += 1;
        if (call === 1) {
          return new Promise<AdminDonorPage>((r) => { resolveSlow = r; });
        }
        return { total: 1, items: [FIG6_PAGE.items[1]] };
      },
    });
    const screen = renderAdminDonors(ctx);
    document.body.append(screen);
    // second refresh overtakes the first
    const dropdown = screen.querySelector("select[name=blood_group_filter]") as HTMLSelectElement;
    dropdown.value = "A-";
    dropdown.dispatchEvent(new Event("change"));
    await flush();
    resolveSlow(FIG6_PAGE); // the slow, stale response arrives last
    await flush();
    const names = [...screen.querySelectorAll("tbody tr td:first-child")].map((n) => n.textContent);
    expect(names).toEqual(["Donor2"]);
  });

  it("shows the one-time password exactly once after add-donor", async () => {
    const ctx = ctxWith({
      adminDonors: async () => FIG6_PAGE,
      adminCreateDonor: async () => ({ user_id: 9, donor_id: 9, temp_password: "pw-once-xyz" }),
    });
    const screen = renderAdminDonors(ctx);
    document.body.append(screen);
    await flush();
    (screen.querySelector(".add-donor") as HTMLButtonElement).click();
    const form = screen.querySelector(".add-donor-form") as HTMLFormElement;
    (form.querySelector("[name=name]") as HTMLInputElement).value = "Donor3";
    (form.querySelector("[name=email]") as HTMLInputElement).value = "d3@test.com";
    (form.querySelector("[name=phone]") as HTMLInputElement).value = "03001234567";
    (form.querySelector("[name=city]") as HTMLInputElement).value = "Lahore";
    form.dispatchEvent(new Event("submit"));
    await flush();
    const slot = screen.querySelector(".one-time-password");
    expect(slot?.textContent).toContain("pw-once-xyz");
    (slot?.querySelector("button") as HTMLButtonElement).click();
    expect(screen.querySelector(".one-time-password")).toBeNull();
  });

  it("asks for confirmation before deleting", async () => {
    const deleted: number[] = [];
    const ctx = ctxWith({
      adminDonors: async () => FIG6_PAGE,
      adminDeleteDonor: async (id: number) => { deleted.push(id); },
    });
    const screen = renderAdminDonors(ctx);
    document.body.append(screen);
    await flush();
    const confirmSpy = vi.spyOn(window, "confirm").mockReturnValueOnce(false);
    const firstDelete = screen.querySelector("[data-action=delete]") as HTMLButtonElement;
    firstDelete.click();
    expect(deleted).toEqual([]);
    confirmSpy.mockReturnValueOnce(true);
    firstDelete.click();
    await flush();
    expect(deleted).toEqual([1]);
  });

  it("has the sidebar items of the admin layout", async () => {
    const ctx = ctxWith({ adminDonors: async () => FIG6_PAGE });
    const screen = renderAdminDonors(ctx);
    const labels = [...screen.querySelectorAll(".sidebar a")].map((a) => a.textContent);
    expect(labels).toEqual(["Dashboard", "Donors", "Patients", "Notifications", "Profile", "Logout"]);
  });
});

describe("blood request screen", () => {
  const MATCHES: MatchItem[] = [
    { donor_id: 1, user_id: 1, name: "Donor1", phone: "0987654321", city: "Sukot",
      blood_group: "A+", city_match: true, exact_group: true },
    { donor_id: 2, user_id: 2, name: "Donor2", phone: "0123456789", city: "Guprenwala",
      blood_group: "A-", city_match: false, exact_group: false },
  ];

  function fillAndSubmit(screen: HTMLElement, quantity: string) {
    (screen.querySelector("[name=city]") as HTMLInputElement).value = "Sukot";
    (screen.querySelector("[name=quantity_units]") as HTMLInputElement).value = quantity;
    (screen.querySelector("form") as HTMLFormElement).dispatchEvent(new Event("submit"));
  }

  it("offers exactly the eight blood groups", () => {
    const screen = renderRequest(ctxWith({}));
    const options = [...screen.querySelectorAll("select[name=blood_group] option")]
      .map((o) => o.textContent);
    expect(options).toEqual(["A+", "A-", "B+", "B-", "AB+", "AB-", "O+", "O-"]);
  });

  it("rejects quantity 0 inline without any network call", async () => {
    const createRequest = vi.fn();
    const screen = renderRequest(ctxWith({ createRequest }));
    document.body.append(screen);
    fillAndSubmit(screen, "0");
    await flush();
    expect(createRequest).not.toHaveBeenCalled();
    const error = screen.querySelector("[data-error-for=quantity_units]");
    expect(error?.textContent).toMatch(/at least 1/);
  });

  it("renders matches in exactly the API's order with badges", async () => {
    const ctx = ctxWith({
      createRequest: async () => ({
        request_id: 1, patient_id: 1, blood_group: "A+", quantity_units: 2,
        city: "Sukot", status: "OPEN", created_at: "",
      }),
      matches: async () => MATCHES,
    });
    const screen = renderRequest(ctx);
    document.body.append(screen);
    fillAndSubmit(screen, "2");
    await flush();
    const names = [...screen.querySelectorAll(".match-name")].map((n) => n.textContent);
    expect(names).toEqual(["Donor1", "Donor2"]);
    const first = screen.querySelector(".match-item") as HTMLElement;
    expect(first.querySelector(".badge-city")).not.toBeNull();
    expect(first.querySelector(".badge-exact")).not.toBeNull();
    const second = screen.querySelectorAll(".match-item")[1] as HTMLElement;
    expect(second.querySelector(".badge-city")).toBeNull();
  });

  it("renders the API order verbatim even if it looks wrong", async () => {
    const ctx = ctxWith({
      createRequest: async () => ({
        request_id: 1, patient_id: 1, blood_group: "A+", quantity_units: 2,
        city: "Sukot", status: "OPEN", created_at: "",
      }),
      matches: async () => [...MATCHES].reverse(), // server said Donor2 first
    });
    const screen = renderRequest(ctx);
    document.body.append(screen);
    fillAndSubmit(screen, "2");
    await flush();
    const names = [...screen.querySelectorAll(".match-name")].map((n) => n.textContent);
    expect(names).toEqual(["Donor2", "Donor1"]);
  });

  it("shows an explicit empty state", async () => {
    const ctx = ctxWith({
      createRequest: async () => ({
        request_id: 1, patient_id: 1, blood_group: "AB-", quantity_units: 1,
        city: "Sukot", status: "OPEN", created_at: "",
      }),
      matches: async () => [],
    });
    const screen = renderRequest(ctx);
    document.body.append(screen);
    fillAndSubmit(screen, "1");
    await flush();
    expect(screen.querySelector(".empty-matches")?.textContent).toMatch(/no donors currently/i);
  });

  it("disables the submit button while the request is in flight", async () => {
    let release: () => void = () => {};
    const ctx = ctxWith({
      createRequest: () =>
        new Promise((resolve) => {
          release = () =>
            resolve({
              request_id: 1, patient_id: 1, blood_group: "A+", quantity_units: 2,
              city: "Sukot", status: "OPEN", created_at: "",
            });
        }),
      matches: async () => [],
    });
    const screen = renderRequest(ctx);
    document.body.append(screen);
    const submit = screen.querySelector("button[type=submit]") as HTMLButtonElement;
    fillAndSubmit(screen, "2");
    expect(submit.disabled).toBe(true);
    release();
    await flush();
    expect(submit.disabled).toBe(false);
  });

  it("contact opens the messaging screen for that donor", async () => {
    const navigate = vi.fn();
    const ctx = ctxWith(
      {
        createRequest: async () => ({
          request_id: 1, patient_id: 1, blood_group: "A+", quantity_units: 2,
          city: "Sukot", status: "OPEN", created_at: "",
        }),
        matches: async () => MATCHES,
      },
      { navigate },
    );
    const screen = renderRequest(ctx);
    document.body.append(screen);
    fillAndSubmit(screen, "2");
    await flush();
    (screen.querySelector(".contact") as HTMLButtonElement).click();
    expect(navigate).toHaveBeenCalledWith("#/messages/1");
  });
});

describe("routing and landing", () => {
  it("anonymous landing shows register and login links", () => {
    const screen = renderLanding(ctxWith({}));
    expect(screen.querySelector("[data-link=register]")).not.toBeNull();
    expect(screen.querySelector("[data-link=login]")).not.toBeNull();
  });

  it("authenticated landing redirects to the role home", () => {
    saveSession({ token: "t", roles: ["ADMIN"], email: "a@test.com", expiresAt: "" });
    const navigate = vi.fn();
    const ctx = ctxWith({}, { navigate, session: () => ({ token: "t", roles: ["ADMIN"], email: "a@test.com", expiresAt: "" }) });
    renderLanding(ctx);
    expect(navigate).toHaveBeenCalledWith("#/admin/donors");
  });

  it("unknown routes render not-found without crashing", () => {
    const screen = resolve(ctxWith({}), "#/no/such/page");
    expect(screen.textContent).toMatch(/not found/i);
  });

  it("role-guarded routes render access denied for the wrong role", () => {
    const session = { token: "t", roles: ["PATIENT"], email: "p@test.com", expiresAt: "" };
    const screen = resolve(ctxWith({}, { session: () => session }), "#/admin/donors");
    expect(screen.textContent).toMatch(/access denied/i);
  });

  it("guarded routes send anonymous visitors to login", () => {
    const navigate = vi.fn();
    resolve(ctxWith({}, { navigate }), "#/request");
    expect(navigate).toHaveBeenCalledWith("#/login");
  });
});

// Admin donor management: search bar, blood-group dropdown, and the donor
// table with inline edit, delete, and add-donor (one-time password shown
// exactly once). Out-of-order filter responses are dropped by sequence
// number so a stale search can never overwrite a newer one.

import { ApiFault, type AdminDonorRow } from "../api.js";
import type { AppContext } from "../context.js";
import { BLOOD_GROUPS } from "../context.js";
import { banner, clear, debounced, el, showErrors, withSubmitLock } from "../dom.js";
import { requiredErrors, serverFieldErrors } from "../validate.js";

export const DONOR_TABLE_COLUMNS = [
  "Donor",
  "Phone",
  "Email",
  "City",
  "Blood Group",
  "Status",
  "Actions",
];

const SIDEBAR_ITEMS: [string, string][] = [
  ["Dashboard", "#/admin/dashboard"],
  ["Donors", "#/admin/donors"],
  ["Patients", "#/admin/patients"],
  ["Notifications", "#/notifications"],
];

export function adminSidebar(ctx: AppContext, selected: string): HTMLElement {
  const nav = el("nav", { class: "sidebar" });
  for (const [label, hash] of SIDEBAR_ITEMS) {
    nav.append(
      el("a", { href: hash, class: label === selected ? "side-link active" : "side-link" }, [
        label,
      ]),
    );
  }
  nav.append(el("div", { class: "side-section" }, ["ACCOUNT PAGES"]));
  nav.append(el("a", { href: "#/profile", class: "side-link" }, ["Profile"]));
  const logout = el("a", { href: "#/", class: "side-link", "data-action": "logout" }, ["Logout"]);
  logout.addEventListener("click", () => ctx.logout());
  nav.append(logout);
  return nav;
}

function groupDropdown(): HTMLSelectElement {
  const select = el("select", { name: "blood_group_filter" }) as HTMLSelectElement;
  select.append(el("option", { value: "" }, ["Select Blood Group"]));
  for (const g of BLOOD_GROUPS) select.append(el("option", { value: g }, [g]));
  return select;
}

function editorRow(
  ctx: AppContext,
  row: AdminDonorRow,
  done: () => void,
): HTMLTableRowElement {
  const phone = el("input", { name: "phone", value: row.phone }) as HTMLInputElement;
  const city = el("input", { name: "city", value: row.city }) as HTMLInputElement;
  const group = el("select", { name: "blood_group" }) as HTMLSelectElement;
  for (const g of BLOOD_GROUPS) {
    const option = el("option", { value: g }, [g]) as HTMLOptionElement;
    if (g === row.blood_group) option.selected = true;
    group.append(option);
  }
  const status = el("select", { name: "status" }) as HTMLSelectElement;
  for (const s of ["ACTIVE", "INACTIVE"]) {
    const option = el("option", { value: s }, [s]) as HTMLOptionElement;
    if (s === row.status) option.selected = true;
    status.append(option);
  }
  const save = el("button", { type: "button" }, ["Save"]) as HTMLButtonElement;
  const cancel = el("button", { type: "button" }, ["Cancel"]) as HTMLButtonElement;
  cancel.addEventListener("click", done);
  save.addEventListener("click", () => {
    void withSubmitLock(save, async () => {
      try {
        await ctx.api.adminUpdateDonor(row.donor_id, {
          phone: phone.value,
          city: city.value,
          blood_group: group.value,
          status: status.value,
        });
        done();
      } catch (err) {
        if (err instanceof ApiFault) {
          cell.append(banner("error", err.message));
        }
      }
    });
  });
  const cell = el("td", { colspan: String(DONOR_TABLE_COLUMNS.length) }, [
    el("div", { class: "inline-edit" }, [phone, city, group, status, save, cancel]),
  ]);
  const tr = el("tr", { class: "edit-row" }) as HTMLTableRowElement;
  tr.append(cell);
  return tr;
}

export function renderAdminDonors(ctx: AppContext): HTMLElement {
  const search = el("input", {
    name: "q",
    placeholder: "Search donors",
    class: "search-bar",
  }) as HTMLInputElement;
  const dropdown = groupDropdown();
  const addButton = el("button", { type: "button", class: "add-donor" }, [
    "Add donor",
  ]) as HTMLButtonElement;
  const totalNote = el("span", { class: "muted total" });

  const thead = el("thead", {}, [
    el("tr", {}, DONOR_TABLE_COLUMNS.map((c) => el("th", {}, [c]))),
  ]);
  const tbody = el("tbody") as HTMLTableSectionElement;
  const table = el("table", { class: "donor-table" }, [thead, tbody]);

  const passwordSlot = el("div", { class: "password-slot" });
  const addSlot = el("div", { class: "add-slot" });

  const main = el("section", { class: "admin-main" }, [
    el("div", { class: "toolbar" }, [search, dropdown, addButton, totalNote]),
    passwordSlot,
    addSlot,
    table,
  ]);
  const root = el("div", { class: "admin-screen" }, [adminSidebar(ctx, "Donors"), main]);

  let seq = 0;
  const refresh = async () => {
    const my = ++seq;
    try {
      const page = await ctx.api.adminDonors({
        q: search.value.trim() || undefined,
        blood_group: dropdown.value || undefined,
      });
      if (my !== seq) return; // a newer filter already superseded this response
      totalNote.textContent = `${page.total} donor(s)`;
      clear(tbody);
      for (const row of page.items) {
        const actions = el("td", { class: "actions" });
        const edit = el("button", { type: "button", "data-action": "edit" }, ["Edit"]);
        const remove = el("button", { type: "button", "data-action": "delete" }, ["Delete"]);
        actions.append(edit, remove);
        const tr = el("tr", { "data-donor-id": String(row.donor_id) }, [
          el("td", {}, [row.name]),
          el("td", {}, [row.phone]),
          el("td", {}, [row.email]),
          el("td", {}, [row.city]),
          el("td", {}, [row.blood_group]),
          el("td", {}, [row.status + (row.visible_now ? "" : " (hidden)")]),
          actions,
        ]) as HTMLTableRowElement;
        edit.addEventListener("click", () => {
          const editor = editorRow(ctx, row, () => void refresh());
          tr.replaceWith(editor);
        });
        remove.addEventListener("click", () => {
          if (!window.confirm(`Delete donor ${row.name}?`)) return;
          void ctx.api
            .adminDeleteDonor(row.donor_id)
            .then(() => refresh())
            .catch((err) => {
              if (err instanceof ApiFault) main.prepend(banner("error", err.message));
            });
        });
        tbody.append(tr);
      }
    } catch (err) {
      if (my !== seq) return;
      clear(tbody);
      if (err instanceof ApiFault) main.prepend(banner("error", err.message));
    }
  };

  search.addEventListener("input", debounced(() => void refresh(), ctx.debounceMs ?? 250));
  dropdown.addEventListener("change", () => void refresh());

  addButton.addEventListener("click", () => {
    if (addSlot.firstChild) {
      clear(addSlot);
      return;
    }
    const name = el("input", { name: "name", placeholder: "Name" }) as HTMLInputElement;
    const email = el("input", { name: "email", placeholder: "Email" }) as HTMLInputElement;
    const phone = el("input", { name: "phone", placeholder: "Phone" }) as HTMLInputElement;
    const city = el("input", { name: "city", placeholder: "City" }) as HTMLInputElement;
    const group = el("select", { name: "blood_group" }) as HTMLSelectElement;
    for (const g of BLOOD_GROUPS) group.append(el("option", { value: g }, [g]));
    const submit = el("button", { type: "submit" }, ["Create donor"]) as HTMLButtonElement;
    const form = el("form", { class: "card add-donor-form" }, [
      el("h3", {}, ["Add donor"]),
      name,
      email,
      phone,
      city,
      group,
      submit,
    ]);
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      const errors = requiredErrors({
        name: name.value,
        email: email.value,
        phone: phone.value,
        city: city.value,
      });
      showErrors(form, errors);
      if (Object.keys(errors).length) return;
      void withSubmitLock(submit, async () => {
        try {
          const created = await ctx.api.adminCreateDonor({
            name: name.value,
            email: email.value,
            phone: phone.value,
            city: city.value,
            blood_group: group.value,
          });
          clear(addSlot);
          clear(passwordSlot);
          // shown exactly once; gone after dismissal or any rerender
          const dismiss = el("button", { type: "button" }, ["Dismiss"]);
          dismiss.addEventListener("click", () => clear(passwordSlot));
          passwordSlot.append(
            el("div", { class: "banner banner-success one-time-password" }, [
              `Donor created. One-time password for ${email.value}: `,
              el("code", {}, [created.temp_password]),
              " ",
              dismiss,
            ]),
          );
          void refresh();
        } catch (err) {
          if (err instanceof ApiFault) {
            const details = err.validation();
            if (details) showErrors(form, serverFieldErrors(details));
            else form.prepend(banner("error", err.message));
          }
        }
      });
    });
    addSlot.append(form);
  });

  void refresh();
  return root;
}

export function renderAdminPlaceholder(ctx: AppContext, title: string): HTMLElement {
  return el("div", { class: "admin-screen" }, [
    adminSidebar(ctx, title),
    el("section", { class: "admin-main" }, [
      el("h2", {}, [title]),
      el("p", { class: "muted" }, ["This panel is not part of the current build."]),
    ]),
  ]);
}

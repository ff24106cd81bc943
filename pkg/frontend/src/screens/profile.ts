// Profile editor. Donors edit contact info, blood group, and availability;
// patients edit contact info; accounts with no role yet choose one here.

import { ApiFault, type DonorProfile, type PatientProfile } from "../api.js";
import type { AppContext } from "../context.js";
import { BLOOD_GROUPS } from "../context.js";
import { banner, clear, el, showErrors, withSubmitLock } from "../dom.js";
import { hasRole, updateRoles } from "../session.js";
import { requiredErrors, serverFieldErrors } from "../validate.js";

function groupSelect(name: string, selected?: string): HTMLSelectElement {
  const select = el("select", { name }) as HTMLSelectElement;
  for (const group of BLOOD_GROUPS) {
    const option = el("option", { value: group }, [group]) as HTMLOptionElement;
    if (group === selected) option.selected = true;
    select.append(option);
  }
  return select;
}

function labeled(label: string, input: HTMLElement): HTMLElement {
  return el("label", { class: "field" }, [label, input]);
}

function donorEditor(ctx: AppContext, profile: DonorProfile, root: HTMLElement): HTMLElement {
  const phone = el("input", { name: "phone", value: profile.phone }) as HTMLInputElement;
  const city = el("input", { name: "city", value: profile.city }) as HTMLInputElement;
  const group = groupSelect("blood_group", profile.blood_group);
  const available = el("input", { name: "available", type: "checkbox" }) as HTMLInputElement;
  available.checked = profile.available;
  const submit = el("button", { type: "submit" }, ["Save"]) as HTMLButtonElement;

  const cooldownNote =
    !profile.visible_now && profile.next_eligible_date
      ? banner(
          "info",
          `Resting after your ${profile.last_donation_date} donation; ` +
            `you reappear in searches on ${profile.next_eligible_date}.`,
        )
      : null;

  const form = el("form", { class: "card", "data-screen": "donor-profile" }, [
    el("h2", {}, ["Donor profile"]),
    el("p", {}, [`Signed in as ${profile.name} (${profile.email})`]),
    ...(cooldownNote ? [cooldownNote] : []),
    el("p", { class: "muted" }, [
      `Status: ${profile.status}`,
      profile.visible_now ? " - currently visible to patients" : " - currently hidden",
    ]),
    labeled("Phone", phone),
    labeled("City", city),
    labeled("Blood group", group),
    el("label", { class: "field-inline" }, [available, " Available to donate"]),
    submit,
  ]);

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const errors = requiredErrors({ phone: phone.value, city: city.value });
    showErrors(form, errors);
    if (Object.keys(errors).length) return;
    void withSubmitLock(submit, async () => {
      try {
        await ctx.api.updateDonorProfile({
          phone: phone.value,
          city: city.value,
          blood_group: group.value,
          available: available.checked,
        });
        render(ctx, root); // reload to show computed visibility
      } catch (err) {
        form.querySelectorAll(".banner-error").forEach((n) => n.remove());
        if (err instanceof ApiFault) {
          const details = err.validation();
          if (details) {
            showErrors(form, serverFieldErrors(details));
            return;
          }
          form.prepend(banner("error", err.message));
        }
      }
    });
  });
  return form;
}

function patientEditor(ctx: AppContext, profile: PatientProfile): HTMLElement {
  const phone = el("input", { name: "phone", value: profile.phone }) as HTMLInputElement;
  const city = el("input", { name: "city", value: profile.city }) as HTMLInputElement;
  const submit = el("button", { type: "submit" }, ["Save"]) as HTMLButtonElement;
  const form = el("form", { class: "card", "data-screen": "patient-profile" }, [
    el("h2", {}, ["Patient profile"]),
    el("p", {}, [`Signed in as ${profile.name} (${profile.email})`]),
    labeled("Phone", phone),
    labeled("City", city),
    submit,
  ]);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const errors = requiredErrors({ phone: phone.value, city: city.value });
    showErrors(form, errors);
    if (Object.keys(errors).length) return;
    void withSubmitLock(submit, async () => {
      try {
        await ctx.api.updatePatientProfile({ phone: phone.value, city: city.value });
        form.prepend(banner("success", "saved"));
      } catch (err) {
        if (err instanceof ApiFault) {
          const details = err.validation();
          if (details) showErrors(form, serverFieldErrors(details));
          else form.prepend(banner("error", err.message));
        }
      }
    });
  });
  return form;
}

function enrollForms(ctx: AppContext, root: HTMLElement): HTMLElement {
  const wrap = el("div", { class: "enroll", "data-screen": "enroll" }, [
    el("h2", {}, ["Choose how you take part"]),
  ]);

  const dPhone = el("input", { name: "phone" }) as HTMLInputElement;
  const dCity = el("input", { name: "city" }) as HTMLInputElement;
  const dGroup = groupSelect("blood_group");
  const dSubmit = el("button", { type: "submit" }, ["Become a donor"]) as HTMLButtonElement;
  const donorForm = el("form", { class: "card", "data-form": "enroll-donor" }, [
    el("h3", {}, ["I want to donate"]),
    labeled("Phone", dPhone),
    labeled("City", dCity),
    labeled("Blood group", dGroup),
    dSubmit,
  ]);
  donorForm.addEventListener("submit", (event) => {
    event.preventDefault();
    const errors = requiredErrors({ phone: dPhone.value, city: dCity.value });
    showErrors(donorForm, errors);
    if (Object.keys(errors).length) return;
    void withSubmitLock(dSubmit, async () => {
      try {
        await ctx.api.enrollDonor({
          phone: dPhone.value,
          city: dCity.value,
          blood_group: dGroup.value,
        });
        const session = ctx.session();
        if (session) updateRoles([...session.roles, "DONOR"]);
        render(ctx, root);
      } catch (err) {
        if (err instanceof ApiFault) donorForm.prepend(banner("error", err.message));
      }
    });
  });

  const pPhone = el("input", { name: "phone" }) as HTMLInputElement;
  const pCity = el("input", { name: "city" }) as HTMLInputElement;
  const pSubmit = el("button", { type: "submit" }, ["Register as patient"]) as HTMLButtonElement;
  const patientForm = el("form", { class: "card", "data-form": "enroll-patient" }, [
    el("h3", {}, ["I need blood"]),
    labeled("Phone", pPhone),
    labeled("City", pCity),
    pSubmit,
  ]);
  patientForm.addEventListener("submit", (event) => {
    event.preventDefault();
    const errors = requiredErrors({ phone: pPhone.value, city: pCity.value });
    showErrors(patientForm, errors);
    if (Object.keys(errors).length) return;
    void withSubmitLock(pSubmit, async () => {
      try {
        await ctx.api.enrollPatient({ phone: pPhone.value, city: pCity.value });
        const session = ctx.session();
        if (session) updateRoles([...session.roles, "PATIENT"]);
        ctx.navigate("#/request");
      } catch (err) {
        if (err instanceof ApiFault) patientForm.prepend(banner("error", err.message));
      }
    });
  });

  wrap.append(donorForm, patientForm);
  return wrap;
}

function render(ctx: AppContext, root: HTMLElement): void {
  clear(root);
  const session = ctx.session();
  if (!session) return;
  const sections: Promise<HTMLElement | null>[] = [];
  if (hasRole(session, "DONOR")) {
    sections.push(ctx.api.donorProfile().then((p) => donorEditor(ctx, p, root)));
  }
  if (hasRole(session, "PATIENT")) {
    sections.push(ctx.api.patientProfile().then((p) => patientEditor(ctx, p)));
  }
  if (!sections.length) {
    if (hasRole(session, "ADMIN")) {
      root.append(
        el("div", { class: "card" }, [
          el("h2", {}, ["Administrator account"]),
          el("p", {}, [`Signed in as ${session.email}.`]),
        ]),
      );
    } else {
      root.append(enrollForms(ctx, root));
    }
    return;
  }
  void Promise.all(sections)
    .then((nodes) => {
      for (const node of nodes) if (node) root.append(node);
    })
    .catch((err) => {
      root.append(banner("error", err instanceof ApiFault ? err.message : "failed to load"));
    });
}

export function renderProfile(ctx: AppContext): HTMLElement {
  const root = el("div", { class: "profile-screen" });
  render(ctx, root);
  return root;
}

// Blood request form plus the ranked match list the server returns.
// The list is displayed exactly in API order; ranking and compatibility are
// never recomputed here.

import { ApiFault, type MatchItem } from "../api.js";
import type { AppContext } from "../context.js";
import { BLOOD_GROUPS } from "../context.js";
import { banner, clear, el, showErrors, withSubmitLock } from "../dom.js";
import { quantityError, requiredErrors, serverFieldErrors } from "../validate.js";

function matchList(ctx: AppContext, items: MatchItem[]): HTMLElement {
  if (!items.length) {
    return el("div", { class: "card empty-matches" }, [
      el("p", {}, ["No donors currently available for this request."]),
    ]);
  }
  const rows = items.map((item) =>
    el("li", { class: "match-item", "data-donor-id": String(item.donor_id) }, [
      el("span", { class: "match-name" }, [item.name]),
      el("span", { class: "match-group" }, [item.blood_group]),
      el("span", { class: "match-city" }, [item.city]),
      el("span", { class: "match-phone" }, [item.phone]),
      ...(item.city_match ? [el("span", { class: "badge badge-city" }, ["same city"])] : []),
      ...(item.exact_group ? [el("span", { class: "badge badge-exact" }, ["exact group"])] : []),
      (() => {
        const contact = el("button", { class: "contact", type: "button" }, ["Contact"]);
        contact.addEventListener("click", () => ctx.navigate(`#/messages/${item.user_id}`));
        return contact;
      })(),
    ]),
  );
  return el("div", { class: "card matches" }, [
    el("h3", {}, ["Matched donors"]),
    el("ol", { class: "match-list" }, rows),
  ]);
}

export function renderRequest(ctx: AppContext): HTMLElement {
  const group = el("select", { name: "blood_group" }) as HTMLSelectElement;
  for (const g of BLOOD_GROUPS) group.append(el("option", { value: g }, [g]));
  const quantity = el("input", {
    name: "quantity_units",
    type: "number",
    value: "1",
    min: "1",
  }) as HTMLInputElement;
  const city = el("input", { name: "city" }) as HTMLInputElement;
  const submit = el("button", { type: "submit" }, ["Find donors"]) as HTMLButtonElement;

  const form = el("form", { class: "card request-form" }, [
    el("h2", {}, ["Request blood"]),
    el("label", { class: "field" }, ["Blood group", group]),
    el("label", { class: "field" }, ["Units needed", quantity]),
    el("label", { class: "field" }, ["City", city]),
    submit,
  ]);
  const results = el("div", { class: "request-results" });
  const root = el("div", { class: "request-screen" }, [form, results]);

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const errors: Record<string, string> = {
      ...requiredErrors({ city: city.value }),
    };
    const qty = Number(quantity.value);
    const qtyProblem = quantityError(qty);
    if (qtyProblem) errors.quantity_units = qtyProblem;
    showErrors(form, errors);
    if (Object.keys(errors).length) return; // no network call on bad input
    void withSubmitLock(submit, async () => {
      try {
        const request = await ctx.api.createRequest({
          blood_group: group.value,
          quantity_units: qty,
          city: city.value,
        });
        const items = await ctx.api.matches(request.request_id);
        clear(results);
        results.append(
          el("p", { class: "muted" }, [
            `Request #${request.request_id} (${request.blood_group}, `,
            `${request.quantity_units} unit(s), ${request.city})`,
          ]),
          matchList(ctx, items),
        );
      } catch (err) {
        clear(results);
        if (err instanceof ApiFault) {
          const details = err.validation();
          if (details) {
            showErrors(form, serverFieldErrors(details));
            return;
          }
          results.append(banner("error", err.message));
        } else {
          results.append(banner("error", "request failed"));
        }
      }
    });
  });
  return root;
}

import { el } from "../dom.js";
import type { AppContext } from "../context.js";
import { roleHome } from "../context.js";

export function renderLanding(ctx: AppContext): HTMLElement {
  const session = ctx.session();
  if (session) {
    // signed-in visitors go straight to their role's home screen
    ctx.navigate(roleHome(session));
    return el("div");
  }
  return el("div", { class: "landing" }, [
    el("h1", {}, ["Give blood, save a life"]),
    el("p", {}, [
      "A shared space for donors, patients, and coordinators: register as a ",
      "donor, or find compatible donors near you when you need blood.",
    ]),
    el("p", { class: "landing-links" }, [
      el("a", { href: "#/register", class: "button", "data-link": "register" }, ["Register"]),
      " ",
      el("a", { href: "#/login", class: "button", "data-link": "login" }, ["Log in"]),
    ]),
    el("h2", {}, ["About"]),
    el("p", {}, [
      "Patients describe what they need (blood group, units, city) and get a ",
      "ranked list of currently available, compatible donors. Donors control ",
      "their own availability, and every donation starts a 90-day rest period ",
      "during which the donor is not contacted.",
    ]),
  ]);
}

export function renderNotFound(): HTMLElement {
  return el("div", { class: "not-found" }, [
    el("h1", {}, ["Page not found"]),
    el("p", {}, ["That page does not exist. ", el("a", { href: "#/" }, ["Back to start"])]),
  ]);
}

export function renderAccessDenied(): HTMLElement {
  return el("div", { class: "access-denied" }, [
    el("h1", {}, ["Access denied"]),
    el("p", {}, ["Your account does not have permission to view this page."]),
  ]);
}

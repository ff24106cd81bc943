import { ApiClient } from "./api.js";
import type { AppContext } from "./context.js";
import { clear, el } from "./dom.js";
import { resolve } from "./router.js";
import { clearSession, loadSession } from "./session.js";

declare global {
  interface Window {
    HEMOBANK_API_BASE?: string;
  }
}

function topNav(ctx: AppContext): HTMLElement {
  const session = ctx.session();
  const nav = el("header", { class: "topnav" }, [
    el("a", { href: "#/", class: "brand" }, ["hemobank"]),
  ]);
  if (session) {
    if (session.roles.includes("PATIENT")) {
      nav.append(el("a", { href: "#/request" }, ["Request blood"]));
    }
    nav.append(
      el("a", { href: "#/messages" }, ["Messages"]),
      el("a", { href: "#/notifications" }, ["Notifications"]),
      el("a", { href: "#/profile" }, ["Profile"]),
    );
    if (session.roles.includes("ADMIN")) {
      nav.append(el("a", { href: "#/admin/donors" }, ["Admin"]));
    }
    const logout = el("button", { class: "linkish", type: "button" }, ["Logout"]);
    logout.addEventListener("click", () => ctx.logout());
    nav.append(el("span", { class: "spacer" }), el("span", { class: "muted" }, [session.email]), logout);
  } else {
    nav.append(
      el("span", { class: "spacer" }),
      el("a", { href: "#/login" }, ["Log in"]),
      el("a", { href: "#/register" }, ["Register"]),
    );
  }
  return nav;
}

export function startApp(root: HTMLElement, baseUrl: string): AppContext {
  const ctx: AppContext = {
    api: new ApiClient({
      baseUrl,
      getToken: () => loadSession()?.token ?? null,
      onUnauthorized: () => {
        // expired or revoked token: drop the session and go to login
        clearSession();
        ctx.navigate("#/login");
      },
    }),
    session: () => loadSession(),
    navigate: (hash: string) => {
      if (location.hash === hash) render();
      else location.hash = hash;
    },
    logout: () => {
      clearSession();
      ctx.navigate("#/");
    },
  };

  const render = () => {
    clear(root);
    root.append(topNav(ctx), resolve(ctx, location.hash || "#/"));
  };

  window.addEventListener("hashchange", render);
  render();
  return ctx;
}

// Browser entry point; tests import startApp and drive it directly.
if (typeof document !== "undefined" && document.getElementById("app")) {
  const base = window.HEMOBANK_API_BASE ?? "http://localhost:8080";
  startApp(document.getElementById("app") as HTMLElement, base);
}

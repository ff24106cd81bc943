// Hash router with role guards. Forbidden screens render access-denied;
// unauthenticated visitors are sent to login.

import type { AppContext } from "./context.js";
import { renderAccessDenied, renderLanding, renderNotFound } from "./screens/landing.js";
import { renderLogin, renderRegister } from "./screens/authScreens.js";
import { renderProfile } from "./screens/profile.js";
import { renderRequest } from "./screens/request.js";
import { renderMessages } from "./screens/messages.js";
import { renderNotifications } from "./screens/notifications.js";
import { renderAdminDonors, renderAdminPlaceholder } from "./screens/adminDonors.js";

interface Route {
  pattern: RegExp;
  role?: "DONOR" | "PATIENT" | "ADMIN" | "any";
  render: (ctx: AppContext, params: string[]) => HTMLElement;
}

const ROUTES: Route[] = [
  { pattern: /^#?\/?$/, render: (ctx) => renderLanding(ctx) },
  { pattern: /^#\/login$/, render: (ctx) => renderLogin(ctx) },
  { pattern: /^#\/register$/, render: (ctx) => renderRegister(ctx) },
  { pattern: /^#\/profile$/, role: "any", render: (ctx) => renderProfile(ctx) },
  { pattern: /^#\/request$/, role: "PATIENT", render: (ctx) => renderRequest(ctx) },
  { pattern: /^#\/messages$/, role: "any", render: (ctx) => renderMessages(ctx) },
  {
    pattern: /^#\/messages\/(\d+)$/,
    role: "any",
    render: (ctx, params) => renderMessages(ctx, Number(params[0])),
  },
  { pattern: /^#\/notifications$/, role: "any", render: (ctx) => renderNotifications(ctx) },
  { pattern: /^#\/admin\/donors$/, role: "ADMIN", render: (ctx) => renderAdminDonors(ctx) },
  {
    pattern: /^#\/admin\/dashboard$/,
    role: "ADMIN",
    render: (ctx) => renderAdminPlaceholder(ctx, "Dashboard"),
  },
  {
    pattern: /^#\/admin\/patients$/,
    role: "ADMIN",
    render: (ctx) => renderAdminPlaceholder(ctx, "Patients"),
  },
];

export function resolve(ctx: AppContext, hash: string): HTMLElement {
  for (const route of ROUTES) {
    const match = hash.match(route.pattern);
    if (!match) continue;
    if (route.role) {
      const session = ctx.session();
      if (!session) {
        ctx.navigate("#/login");
        return renderLogin(ctx);
      }
      if (route.role !== "any" && !session.roles.includes(route.role)) {
        return renderAccessDenied();
      }
    }
    return route.render(ctx, match.slice(1));
  }
  return renderNotFound();
}

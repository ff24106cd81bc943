import { ApiFault } from "../api.js";
import type { AppContext } from "../context.js";
import { banner, el } from "../dom.js";

export function renderNotifications(ctx: AppContext): HTMLElement {
  const list = el("ul", { class: "notifications" });
  const root = el("div", { class: "card" }, [el("h2", {}, ["Notifications"]), list]);

  const load = async () => {
    try {
      const rows = await ctx.api.notifications();
      list.replaceChildren();
      if (!rows.length) {
        list.append(el("li", { class: "muted" }, ["Nothing yet."]));
        return;
      }
      for (const n of rows) {
        const item = el("li", { class: n.read ? "note note-read" : "note note-unread" }, [
          el("span", { class: "note-kind" }, [n.kind.replace("_", " ").toLowerCase()]),
          el("span", { class: "note-payload" }, [n.payload]),
        ]);
        if (!n.read) {
          const mark = el("button", { type: "button" }, ["Mark read"]) as HTMLButtonElement;
          mark.addEventListener("click", () => {
            mark.disabled = true;
            void ctx.api
              .markNotificationRead(n.notification_id)
              .then(load)
              .catch(() => {
                mark.disabled = false;
              });
          });
          item.append(mark);
        }
        list.append(item);
      }
    } catch (err) {
      list.replaceChildren(
        banner("error", err instanceof ApiFault ? err.message : "failed to load"),
      );
    }
  };
  void load();
  return root;
}

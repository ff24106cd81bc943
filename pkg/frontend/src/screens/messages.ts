// Conversation list and thread view. Sends append optimistically and are
// reconciled against the server response; a failed send restores the draft.

import { ApiFault, type Message } from "../api.js";
import type { AppContext } from "../context.js";
import { banner, clear, el } from "../dom.js";

function messageNode(m: Message, mine: boolean): HTMLElement {
  return el("li", { class: mine ? "msg msg-mine" : "msg" }, [
    el("span", { class: "msg-body" }, [m.body]),
    el("span", { class: "msg-meta" }, [new Date(m.sent_at).toLocaleString()]),
  ]);
}

async function renderThread(ctx: AppContext, root: HTMLElement, partnerId: number): Promise<void> {
  clear(root);
  const list = el("ul", { class: "thread" });
  const draft = el("textarea", { name: "body", rows: "2" }) as HTMLTextAreaElement;
  const send = el("button", { type: "submit" }, ["Send"]) as HTMLButtonElement;
  send.disabled = true;
  draft.addEventListener("input", () => {
    send.disabled = !draft.value.trim();
  });

  const form = el("form", { class: "send-box" }, [draft, send]);
  root.append(list, form);

  let thread: Message[] = [];
  const repaint = () => {
    clear(list);
    for (const m of thread) list.append(messageNode(m, m.recipient_user_id === partnerId));
  };

  try {
    thread = await ctx.api.conversation(partnerId);
    repaint();
  } catch (err) {
    if (err instanceof ApiFault && err.status === 404) {
      root.prepend(banner("error", "user unavailable"));
      form.remove();
      return;
    }
    throw err;
  }

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const body = draft.value.trim();
    if (!body || send.disabled) return;
    send.disabled = true;
    const pending: Message = {
      message_id: -1,
      sender_user_id: -1,
      recipient_user_id: partnerId,
      body,
      sent_at: new Date().toISOString(),
      read: false,
    };
    thread = [...thread, pending];
    repaint();
    draft.value = "";
    void ctx.api
      .sendMessage(partnerId, body)
      .then((saved) => {
        thread = [...thread.filter((m) => m !== pending && m.message_id !== -1), saved];
        repaint();
      })
      .catch((err) => {
        thread = thread.filter((m) => m !== pending); // roll back the optimistic row
        repaint();
        draft.value = body; // give the draft back
        send.disabled = false;
        const message =
          err instanceof ApiFault && err.status === 404
            ? "user unavailable"
            : err instanceof ApiFault
              ? err.message
              : "send failed";
        root.prepend(banner("error", message));
      });
  });
}

export function renderMessages(ctx: AppContext, partnerId?: number): HTMLElement {
  const sidebar = el("div", { class: "conversations card" }, [el("h3", {}, ["Conversations"])]);
  const threadPane = el("div", { class: "thread-pane card" });
  const root = el("div", { class: "messages-screen" }, [sidebar, threadPane]);

  void ctx.api
    .conversations()
    .then((convs) => {
      if (!convs.length) {
        sidebar.append(el("p", { class: "muted" }, ["No conversations yet."]));
      }
      for (const c of convs) {
        const link = el("a", { href: `#/messages/${c.user_id}`, class: "conv-link" }, [
          c.name,
          c.unread_count ? el("span", { class: "unread" }, [` (${c.unread_count})`]) : "",
        ]);
        sidebar.append(el("div", { class: "conv-row" }, [link]));
      }
    })
    .catch(() => sidebar.append(banner("error", "could not load conversations")));

  if (partnerId !== undefined) {
    void renderThread(ctx, threadPane, partnerId);
  } else {
    threadPane.append(el("p", { class: "muted" }, ["Pick a conversation or contact a donor."]));
  }
  return root;
}

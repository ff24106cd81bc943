// Tiny DOM helpers; the app renders everything through these.

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  children: (Node | string)[] = [],
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (key === "class") node.className = value;
    else node.setAttribute(key, value);
  }
  for (const child of children) {
    node.append(typeof child === "string" ? document.createTextNode(child) : child);
  }
  return node;
}

export function clear(node: HTMLElement): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

export function fieldError(name: string, message: string): HTMLElement {
  return el("div", { class: "field-error", "data-error-for": name }, [message]);
}

export function showErrors(form: HTMLElement, errors: Record<string, string>): void {
  form.querySelectorAll(".field-error").forEach((n) => n.remove());
  for (const [name, message] of Object.entries(errors)) {
    const input = form.querySelector(`[name="${name}"]`);
    const marker = fieldError(name, message);
    if (input && input.parentElement) input.parentElement.append(marker);
    else form.append(marker);
  }
}

export function banner(kind: "error" | "info" | "success", text: string): HTMLElement {
  return el("div", { class: `banner banner-${kind}`, role: "status" }, [text]);
}

// Disables the submit control for the duration of an async action; forms
// never double-submit.
export async function withSubmitLock<T>(
  button: HTMLButtonElement,
  action: () => Promise<T>,
): Promise<T> {
  if (button.disabled) throw new Error("submit already in flight");
  button.disabled = true;
  try {
    return await action();
  } finally {
    button.disabled = false;
  }
}

export function debounced(fn: () => void, delayMs: number): () => void {
  let timer: ReturnType<typeof setTimeout> | null = null;
  return () => {
    if (timer !== null) clearTimeout(timer);
    timer = setTimeout(fn, delayMs);
  };
}

import { ApiFault } from "../api.js";
import type { AppContext } from "../context.js";
import { roleHome } from "../context.js";
import { banner, el, showErrors, withSubmitLock } from "../dom.js";
import { saveSession } from "../session.js";
import { requiredErrors, serverFieldErrors } from "../validate.js";

function labeled(label: string, input: HTMLElement): HTMLElement {
  return el("label", { class: "field" }, [label, input]);
}

export function renderLogin(ctx: AppContext): HTMLElement {
  const email = el("input", { name: "email", type: "email", autocomplete: "username" });
  const password = el("input", { name: "password", type: "password" });
  const submit = el("button", { type: "submit" }, ["Log in"]) as HTMLButtonElement;
  const form = el("form", { class: "card auth-form" }, [
    el("h1", {}, ["Log in"]),
    labeled("Email", email),
    labeled("Password", password),
    submit,
    el("p", {}, ["No account yet? ", el("a", { href: "#/register" }, ["Register"])]),
  ]);

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const errors = requiredErrors({ email: email.value, password: password.value });
    showErrors(form, errors);
    if (Object.keys(errors).length) return;
    void withSubmitLock(submit, async () => {
      try {
        const res = await ctx.api.login(email.value.trim(), password.value);
        saveSession({
          token: res.token,
          roles: res.roles,
          email: email.value.trim(),
          expiresAt: res.expires_at,
        });
        ctx.navigate(roleHome(ctx.session()));
      } catch (err) {
        form.querySelectorAll(".banner").forEach((n) => n.remove());
        const message = err instanceof ApiFault ? err.message : "login failed";
        form.prepend(banner("error", message));
      }
    });
  });
  return form;
}

export function renderRegister(ctx: AppContext): HTMLElement {
  const name = el("input", { name: "name" });
  const email = el("input", { name: "email", type: "email" });
  const password = el("input", { name: "password", type: "password" });
  const submit = el("button", { type: "submit" }, ["Create account"]) as HTMLButtonElement;
  const form = el("form", { class: "card auth-form" }, [
    el("h1", {}, ["Register"]),
    labeled("Name", name),
    labeled("Email", email),
    labeled("Password", password),
    submit,
    el("p", {}, ["Already registered? ", el("a", { href: "#/login" }, ["Log in"])]),
  ]);

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const errors = requiredErrors({
      name: name.value,
      email: email.value,
      password: password.value,
    });
    if (!errors.password && password.value.length < 8) {
      errors.password = "at least 8 characters";
    }
    showErrors(form, errors);
    if (Object.keys(errors).length) return;
    void withSubmitLock(submit, async () => {
      try {
        await ctx.api.register(name.value.trim(), email.value.trim(), password.value);
        const res = await ctx.api.login(email.value.trim(), password.value);
        saveSession({
          token: res.token,
          roles: res.roles,
          email: email.value.trim(),
          expiresAt: res.expires_at,
        });
        ctx.navigate("#/profile"); // fresh accounts pick a role there
      } catch (err) {
        form.querySelectorAll(".banner").forEach((n) => n.remove());
        if (err instanceof ApiFault) {
          const details = err.validation();
          if (details) {
            showErrors(form, serverFieldErrors(details));
            return;
          }
          form.prepend(banner("error", err.message));
        } else {
          form.prepend(banner("error", "registration failed"));
        }
      }
    });
  });
  return form;
}

// The signed-in view state: kept in memory and mirrored to sessionStorage
// (never durable localStorage), cleared on logout.

export interface ViewSession {
  token: string;
  roles: string[];
  email: string;
  expiresAt: string;
}

const KEY = "hemobank.session";

let current: ViewSession | null = null;

function storage(): Storage | null {
  try {
    return typeof sessionStorage === "undefined" ? null : sessionStorage;
  } catch {
    return null;
  }
}

export function loadSession(): ViewSession | null {
  if (current) return current;
  const raw = storage()?.getItem(KEY);
  if (!raw) return null;
  try {
    current = JSON.parse(raw) as ViewSession;
  } catch {
    storage()?.removeItem(KEY);
    current = null;
  }
  return current;
}

export function saveSession(session: ViewSession): void {
  current = session;
  storage()?.setItem(KEY, JSON.stringify(session));
}

export function updateRoles(roles: string[]): void {
  if (!current) return;
  saveSession({ ...current, roles });
}

export function clearSession(): void {
  current = null;
  storage()?.removeItem(KEY);
}

export function hasRole(session: ViewSession | null, role: string): boolean {
  return !!session && session.roles.includes(role);
}

import type { ApiClient } from "./api.js";
import type { ViewSession } from "./session.js";

export interface AppContext {
  api: ApiClient;
  session: () => ViewSession | null;
  navigate: (hash: string) => void;
  logout: () => void;
  // test hook: screens with debounced inputs use this delay
  debounceMs?: number;
}

export const BLOOD_GROUPS = ["A+", "A-", "B+", "B-", "AB+", "AB-", "O+", "O-"];

export function roleHome(session: ViewSession | null): string {
  if (!session) return "#/";
  if (session.roles.includes("ADMIN")) return "#/admin/donors";
  if (session.roles.includes("PATIENT")) return "#/request";
  return "#/profile";
}

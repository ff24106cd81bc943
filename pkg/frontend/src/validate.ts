// Client-side form checks that mirror the server's field rules, so obvious
// mistakes surface inline before any network call. The server remains the
// authority; these never replace its validation.

export interface FieldErrors {
  [field: string]: string;
}

const EMAIL_RE = /^[^@\s]+@[^@\s]+\.[^@\s]+$/;
const PHONE_RE = /^[0-9+\- ]+$/;

export function requiredErrors(fields: Record<string, string>): FieldErrors {
  const errors: FieldErrors = {};
  for (const [name, raw] of Object.entries(fields)) {
    const value = (raw ?? "").trim();
    if (!value) {
      errors[name] = "required";
      continue;
    }
    if (name === "email" && !EMAIL_RE.test(value)) {
      errors[name] = "expected name@domain.tld";
    } else if (name === "phone") {
      if (value.length < 5 || value.length > 20) {
        errors[name] = "must be 5-20 characters";
      } else if (!PHONE_RE.test(value)) {
        errors[name] = "digits, +, -, space only";
      }
    }
  }
  return errors;
}

export function quantityError(value: number): string | null {
  if (!Number.isInteger(value) || value < 1) return "must be at least 1";
  return null;
}

// Translate a server-side validation report into per-field messages.
export function serverFieldErrors(details: {
  missing_fields: string[];
  malformed_fields: [string, string][];
}): FieldErrors {
  const errors: FieldErrors = {};
  for (const field of details.missing_fields) errors[field] = "required";
  for (const [field, reason] of details.malformed_fields) errors[field] = reason;
  return errors;
}

// Typed client for the hemobank JSON API. All domain decisions (compatibility,
// cooldown, ranking) come from the server; this file only moves data.

export interface LoginResponse {
  token: string;
  expires_at: string;
  roles: string[];
}

export interface DonorProfile {
  donor_id: number;
  user_id: number;
  name: string;
  email: string;
  phone: string;
  city: string;
  blood_group: string;
  status: string;
  available: boolean;
  last_donation_date: string | null;
  next_eligible_date: string | null;
  visible_now: boolean;
}

export interface PatientProfile {
  patient_id: number;
  user_id: number;
  name: string;
  email: string;
  phone: string;
  city: string;
}

export interface BloodRequest {
  request_id: number;
  patient_id: number;
  blood_group: string;
  quantity_units: number;
  city: string;
  status: string;
  created_at: string;
}

export interface MatchItem {
  donor_id: number;
  user_id: number;
  name: string;
  phone: string;
  city: string;
  blood_group: string;
  city_match: boolean;
  exact_group: boolean;
}

export interface AdminDonorRow extends DonorProfile {}

export interface AdminDonorPage {
  items: AdminDonorRow[];
  total: number;
}

export interface AdminDonorCreated {
  user_id: number;
  donor_id: number;
  temp_password: string;
}

export interface Message {
  message_id: number;
  sender_user_id: number;
  recipient_user_id: number;
  body: string;
  sent_at: string;
  read: boolean;
}

export interface Conversation {
  user_id: number;
  name: string;
  last_message_at: string;
  unread_count: number;
}

export interface Notification {
  notification_id: number;
  kind: string;
  payload: string;
  created_at: string;
  read: boolean;
}

export interface ValidationDetails {
  ok: boolean;
  missing_fields: string[];
  malformed_fields: [string, string][];
}

export class ApiFault extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly details?: unknown,
  ) {
    super(message);
  }

  validation(): ValidationDetails | null {
    const d = this.details as ValidationDetails | undefined;
    if (d && Array.isArray(d.missing_fields) && Array.isArray(d.malformed_fields)) return d;
    return null;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export interface ApiClientOptions {
  baseUrl: string;
  getToken: () => string | null;
  fetchFn?: FetchLike;
  onUnauthorized?: () => void;
}

export class ApiClient {
  private fetchFn: FetchLike;

  constructor(private opts: ApiClientOptions) {
    this.fetchFn = opts.fetchFn ?? ((input, init) => fetch(input, init));
  }

  private async call<T>(method: string, path: string, body?: unknown): Promise<T> {
    const headers: Record<string, string> = { Accept: "application/json" };
    const token = this.opts.getToken();
    if (token) headers["Authorization"] = `Bearer ${token}`;
    if (body !== undefined) headers["Content-Type"] = "application/json";
    const response = await this.fetchFn(this.opts.baseUrl + path, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (response.status === 204) return undefined as T;
    const payload = await response.json().catch(() => null);
    if (!response.ok) {
      const err = payload?.error ?? {};
      const fault = new ApiFault(
        response.status,
        err.code ?? "UNKNOWN",
        err.message ?? `request failed with status ${response.status}`,
        err.details,
      );
      if (fault.status === 401 && this.opts.onUnauthorized) this.opts.onUnauthorized();
      throw fault;
    }
    return payload as T;
  }

  register(name: string, email: string, password: string): Promise<{ user_id: number }> {
    return this.call("POST", "/api/register", { name, email, password });
  }

  login(email: string, password: string): Promise<LoginResponse> {
    return this.call("POST", "/api/login", { email, password });
  }

  donorProfile(): Promise<DonorProfile> {
    return this.call("GET", "/api/donor/profile");
  }

  enrollDonor(fields: {
    phone: string;
    city: string;
    blood_group: string;
    available?: boolean;
  }): Promise<DonorProfile> {
    return this.call("POST", "/api/donor/profile", fields);
  }

  updateDonorProfile(fields: {
    phone?: string;
    city?: string;
    blood_group?: string;
    available?: boolean;
  }): Promise<DonorProfile> {
    return this.call("PUT", "/api/donor/profile", fields);
  }

  patientProfile(): Promise<PatientProfile> {
    return this.call("GET", "/api/patient/profile");
  }

  enrollPatient(fields: { phone: string; city: string }): Promise<PatientProfile> {
    return this.call("POST", "/api/patient/profile", fields);
  }

  updatePatientProfile(fields: { phone?: string; city?: string }): Promise<PatientProfile> {
    return this.call("PUT", "/api/patient/profile", fields);
  }

  createRequest(fields: {
    blood_group: string;
    quantity_units: number;
    city: string;
  }): Promise<BloodRequest> {
    return this.call("POST", "/api/requests", fields);
  }

  matches(requestId: number): Promise<MatchItem[]> {
    return this.call("GET", `/api/requests/${requestId}/matches`);
  }

  recordDonation(fields: {
    donor_id: number;
    donated_on: string;
    request_id?: number;
  }): Promise<unknown> {
    return this.call("POST", "/api/donations", fields);
  }

  adminDonors(params: {
    blood_group?: string;
    q?: string;
    offset?: number;
    limit?: number;
  } = {}): Promise<AdminDonorPage> {
    const search = new URLSearchParams();
    if (params.blood_group) search.set("blood_group", params.blood_group);
    if (params.q) search.set("q", params.q);
    if (params.offset !== undefined) search.set("offset", String(params.offset));
    if (params.limit !== undefined) search.set("limit", String(params.limit));
    const suffix = search.toString() ? `?${search.toString()}` : "";
    return this.call("GET", `/api/admin/donors${suffix}`);
  }

  adminCreateDonor(fields: {
    name: string;
    email: string;
    phone: string;
    city: string;
    blood_group: string;
  }): Promise<AdminDonorCreated> {
    return this.call("POST", "/api/admin/donors", fields);
  }

  adminUpdateDonor(
    donorId: number,
    fields: {
      phone?: string;
      city?: string;
      blood_group?: string;
      status?: string;
      available?: boolean;
    },
  ): Promise<AdminDonorRow> {
    return this.call("PUT", `/api/admin/donors/${donorId}`, fields);
  }

  adminDeleteDonor(donorId: number): Promise<void> {
    return this.call("DELETE", `/api/admin/donors/${donorId}`);
  }

  sendMessage(recipientUserId: number, body: string): Promise<Message> {
    return this.call("POST", "/api/messages", { recipient_user_id: recipientUserId, body });
  }

  conversation(userId: number, offset = 0, limit = 50): Promise<Message[]> {
    return this.call("GET", `/api/messages/with/${userId}?offset=${offset}&limit=${limit}`);
  }

  conversations(): Promise<Conversation[]> {
    return this.call("GET", "/api/messages/conversations");
  }

  notifications(): Promise<Notification[]> {
    return this.call("GET", "/api/notifications");
  }

  markNotificationRead(id: number): Promise<Notification> {
    return this.call("POST", `/api/notifications/${id}/read`);
  }
}

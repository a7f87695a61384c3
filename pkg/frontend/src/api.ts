/** Typed client for the quiz service. The UI is a pure client of this API:
 * every state change goes through an endpoint and nothing is recomputed in
 * the browser. The bearer token lives in memory only. */

import type {
  Audience,
  CandidateDto,
  ExportFormat,
  JobDto,
  SectionTreeDto,
  SessionDto,
  StructureDto,
  VerifiedCandidateDto,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public errorType: string | null,
    message: string,
  ) {
    super(message);
  }

  /** Conflicts mean another tab moved the session: refetch and retry. */
  get isStale(): boolean {
    return this.status === 409 || this.status === 422;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export interface PollOptions {
  /** Base delay in ms; doubles per attempt, capped at `maxDelayMs`. */
  initialDelayMs?: number;
  /** Generation on real models is minutes-long; never poll faster than this cap. */
  maxDelayMs?: number;
  timeoutMs?: number;
  onProgress?: (job: JobDto) => void;
  sleep?: (ms: number) => Promise<void>;
}

const defaultSleep = (ms: number) => new Promise<void>((r) => setTimeout(r, ms));

export class ApiClient {
  constructor(
    private readonly token: string,
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private headers(extra?: Record<string, string>): Record<string, string> {
    const base: Record<string, string> = this.token
      ? { Authorization: `Bearer ${this.token}` }
      : {};
    return { ...base, ...extra };
  }

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const response = await this.fetchImpl(this.base + path, init);
    if (!response.ok) {
      let errorType: string | null = null;
      let message = `${response.status}`;
      try {
        const body = await response.json();
        errorType = body.type ?? null;
        message = body.error ?? message;
      } catch {
        // non-JSON error body: keep the status text
      }
      throw new ApiError(response.status, errorType, message);
    }
    return response;
  }

  private async requestJson<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.request(path, init);
    return (await response.json()) as T;
  }

  uploadDocument(file: Blob, filename: string): Promise<JobDto> {
    const form = new FormData();
    form.append("file", file, filename);
    return this.requestJson<JobDto>("/documents", {
      method: "POST",
      headers: this.headers(),
      body: form,
    });
  }

  getJob(jobId: string): Promise<JobDto> {
    return this.requestJson<JobDto>(`/jobs/${jobId}`, { headers: this.headers() });
  }

  getSections(docId: string): Promise<SectionTreeDto> {
    return this.requestJson<SectionTreeDto>(`/documents/${docId}/sections`, {
      headers: this.headers(),
    });
  }

  /** Full interchange document: section tree plus passage texts. */
  getStructure(docId: string): Promise<StructureDto> {
    return this.requestJson<StructureDto>(`/documents/${docId}/structure`, {
      headers: this.headers(),
    });
  }

  createSession(docId: string, config: Record<string, unknown> = {}): Promise<SessionDto> {
    return this.requestJson<SessionDto>("/sessions", {
      method: "POST",
      headers: this.headers({ "Content-Type": "application/json" }),
      body: JSON.stringify({ doc_id: docId, config }),
    });
  }

  getSession(sessionId: string): Promise<SessionDto> {
    return this.requestJson<SessionDto>(`/sessions/${sessionId}`, {
      headers: this.headers(),
    });
  }

  chooseSections(sessionId: string, sectionIds: string[]): Promise<SessionDto> {
    return this.requestJson<SessionDto>(`/sessions/${sessionId}/sections`, {
      method: "POST",
      headers: this.headers({ "Content-Type": "application/json" }),
      body: JSON.stringify({ section_ids: sectionIds }),
    });
  }

  startGeneration(sessionId: string): Promise<JobDto> {
    return this.requestJson<JobDto>(`/sessions/${sessionId}/generate`, {
      method: "POST",
      headers: this.headers(),
    });
  }

  async getCandidates(sessionId: string): Promise<CandidateDto[]> {
    return this.candidateLines<CandidateDto>(sessionId, "all");
  }

  /** Verified rows carry candidate fields plus the extracted answer span. */
  async getVerifiedCandidates(sessionId: string): Promise<VerifiedCandidateDto[]> {
    return this.candidateLines<VerifiedCandidateDto>(sessionId, "verified");
  }

  private async candidateLines<T>(sessionId: string, status: string): Promise<T[]> {
    const response = await this.request(
      `/sessions/${sessionId}/candidates?status=${status}`,
      { headers: this.headers() },
    );
    const text = await response.text();
    return text
      .split("\n")
      .filter((line) => line.trim().length > 0)
      .map((line) => JSON.parse(line) as T);
  }

  setSelections(sessionId: string, candidateIds: string[]): Promise<SessionDto> {
    return this.requestJson<SessionDto>(`/sessions/${sessionId}/selections`, {
      method: "POST",
      headers: this.headers({ "Content-Type": "application/json" }),
      body: JSON.stringify({ candidate_ids: candidateIds }),
    });
  }

  /** Raw export bytes; downloads must hand the user exactly these bytes. */
  async exportQuiz(
    sessionId: string,
    audience: Audience,
    format: ExportFormat,
  ): Promise<{ bytes: Uint8Array; contentType: string }> {
    const response = await this.request(
      `/sessions/${sessionId}/quiz?audience=${audience}&format=${format}`,
      { headers: this.headers() },
    );
    const buffer = await response.arrayBuffer();
    return {
      bytes: new Uint8Array(buffer),
      contentType: response.headers.get("content-type") ?? "application/octet-stream",
    };
  }

  /** Poll a job until it terminates, backing off exponentially (capped). */
  async pollJob(jobId: string, options: PollOptions = {}): Promise<JobDto> {
    const initial = options.initialDelayMs ?? 250;
    const cap = options.maxDelayMs ?? 5000;
    const timeout = options.timeoutMs ?? 10 * 60 * 1000;
    const sleep = options.sleep ?? defaultSleep;
    let delay = initial;
    let waited = 0;
    for (;;) {
      const job = await this.getJob(jobId);
      options.onProgress?.(job);
      if (job.status === "succeeded" || job.status === "failed") {
        return job;
      }
      if (waited >= timeout) {
        throw new ApiError(504, "PollTimeout", `job ${jobId} did not finish in time`);
      }
      await sleep(delay);
      waited += delay;
      delay = Math.min(delay * 2, cap);
    }
  }
}

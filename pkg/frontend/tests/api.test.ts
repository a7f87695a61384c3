import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import type { JobDto } from "../src/types.js";

interface Recorded {
  url: string;
  init?: RequestInit;
}

function clientWith(
  handler: (url: string, init?: RequestInit) => Response | Promise<Response>,
  token = "tok",
): { client: ApiClient; calls: Recorded[] } {
  const calls: Recorded[] = [];
  const client = new ApiClient(token, "", async (url, init) => {
    calls.push({ url, init });
    return handler(url, init);
  });
  return { client, calls };
}

const json = (body: unknown, status = 200) =>
  new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });

describe("ApiClient", () => {
  it("sends the bearer token on every request", async () => {
    const { client, calls } = clientWith(() => json({ doc_id: "d", sections: [] }));
    await client.getSections("d");
    const headers = calls[0]!.init?.headers as Record<string, string>;
    expect(headers.Authorization).toBe("Bearer tok");
  });

  it("raises ApiError with the server's type and message", async () => {
    const { client } = clientWith(() =>
      json({ error: "not a pool member", type: "NotVerified" }, 422),
    );
    const failure = await client.setSelections("s", ["c1"]).catch((e) => e);
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure.status).toBe(422);
    expect(failure.errorType).toBe("NotVerified");
    expect(failure.isStale).toBe(true);
  });

  it("treats 409 as stale and 404 as not", async () => {
    const conflict = new ApiError(409, "InvalidState", "x");
    const missing = new ApiError(404, null, "x");
    expect(conflict.isStale).toBe(true);
    expect(missing.isStale).toBe(false);
  });

  it("parses candidate JSON lines", async () => {
    const body = [
      JSON.stringify({ candidate_id: "c1", status: "verified" }),
      JSON.stringify({ candidate_id: "c2", status: "rejected_duplicate" }),
    ].join("\n");
    const { client } = clientWith(
      () => new Response(body, { status: 200, headers: { "Content-Type": "application/x-ndjson" } }),
    );
    const rows = await client.getCandidates("s");
    expect(rows.map((r) => r.candidate_id)).toEqual(["c1", "c2"]);
  });

  it("returns export bytes verbatim", async () => {
    const payload = "# Quiz: sample\n\n## Trainee section\n\n1. Who?\n";
    const { client } = clientWith(
      () => new Response(payload, { status: 200, headers: { "Content-Type": "text/markdown; charset=utf-8" } }),
    );
    const { bytes, contentType } = await client.exportQuiz("s", "trainee", "markdown");
    expect(new TextDecoder().decode(bytes)).toBe(payload);
    expect(contentType).toContain("text/markdown");
  });

  it("polls with exponential backoff capped at 5 seconds", async () => {
    let polls = 0;
    const job = (status: JobDto["status"]): JobDto => ({
      job_id: "j1",
      kind: "generate",
      status,
      progress: { done: polls, total: 8 },
      result_ref: null,
      error: null,
    });
    const { client } = clientWith(() => {
      polls += 1;
      return json(job(polls >= 8 ? "succeeded" : "running"));
    });
    const delays: number[] = [];
    const done = await client.pollJob("j1", {
      initialDelayMs: 500,
      sleep: async (ms) => {
        delays.push(ms);
      },
    });
    expect(done.status).toBe("succeeded");
    expect(delays).toEqual([500, 1000, 2000, 4000, 5000, 5000, 5000]);
  });

  it("reports progress on each poll", async () => {
    let polls = 0;
    const { client } = clientWith(() => {
      polls += 1;
      return json({
        job_id: "j1",
        kind: "ingest",
        status: polls >= 3 ? "succeeded" : "running",
        progress: { done: polls, total: 3 },
        result_ref: polls >= 3 ? "doc" : null,
        error: null,
      });
    });
    const seen: number[] = [];
    await client.pollJob("j1", {
      sleep: async () => {},
      onProgress: (j) => seen.push(j.progress.done),
    });
    expect(seen).toEqual([1, 2, 3]);
  });
});

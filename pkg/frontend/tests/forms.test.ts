import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { submitRecord } from "../src/forms.js";
import { Session } from "../src/session.js";

function authedClient(responses: Response[], calls: string[] = []): ApiClient {
  const session = new Session();
  session.start({
    token: "t",
    username: "doc",
    expiresAt: new Date(Date.now() + 60_000).toISOString(),
  });
  return new ApiClient("", session, async (url) => {
    calls.push(url);
    return responses.shift()!;
  });
}

describe("submitRecord", () => {
  it("rejects an empty patient name without any request", async () => {
    const calls: string[] = [];
    const result = await submitRecord(authedClient([], calls), {
      patientName: "  ",
      text: "something",
    });
    expect(result.ok).toBe(false);
    expect(result.fieldError).toContain("Patient name");
    expect(calls).toHaveLength(0);
  });

  it("rejects an empty payload without any request", async () => {
    const calls: string[] = [];
    const result = await submitRecord(authedClient([], calls), {
      patientName: "Casey",
      text: "   ",
    });
    expect(result.ok).toBe(false);
    expect(calls).toHaveLength(0);
  });

  it("surfaces the server's extraction error inline", async () => {
    const client = authedClient([
      new Response(
        JSON.stringify({
          error_code: "extraction_failed",
          message: "pass-through extractor handles text payloads only",
        }),
        { status: 422 },
      ),
    ]);
    const result = await submitRecord(client, {
      patientName: "Casey",
      imageBase64: "aGVsbG8=",
    });
    expect(result.ok).toBe(false);
    expect(result.fieldError).toContain("text payloads only");
  });

  it("returns the created record on success", async () => {
    const record = {
      record_id: "rec-1",
      patient_name: "Casey",
      created_at: "2026-08-09T12:00:00+00:00",
      raw_text: "x",
      findings_text: "x",
      classification: null,
    };
    const client = authedClient([
      new Response(JSON.stringify(record), { status: 200 }),
    ]);
    const result = await submitRecord(client, { patientName: "Casey", text: "x" });
    expect(result.ok).toBe(true);
    expect(result.record?.record_id).toBe("rec-1");
  });
});

import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api";

interface Recorded {
  url: string;
  method: string;
  body: unknown;
}

function recordingClient(status: number, payload: unknown) {
  const calls: Recorded[] = [];
  const client = new ApiClient("", async (url, init) => {
    calls.push({
      url,
      method: init?.method ?? "GET",
      body: typeof init?.body === "string" ? JSON.parse(init.body) : undefined,
    });
    return new Response(JSON.stringify(payload), {
      status,
      headers: { "content-type": "application/json" },
    });
  });
  return { client, calls };
}

describe("ApiClient", () => {
  it("lists prompts from the wrapped collection", async () => {
    const { client, calls } = recordingClient(200, { prompts: [{ id: "p1" }] });
    const prompts = await client.listPrompts();
    expect(calls[0]).toEqual({ url: "/prompts", method: "GET", body: undefined });
    expect(prompts).toEqual([{ id: "p1" }]);
  });

  it("passes prompt filters as query parameters", async () => {
    const { client, calls } = recordingClient(200, { prompts: [] });
    await client.listPrompts({ level: "A1", topic: "سفر" });
    expect(calls[0].url).toBe(`/prompts?level=A1&topic=${encodeURIComponent("سفر")}`);
  });

  it("creates users and essays with the documented field names", async () => {
    const { client, calls } = recordingClient(201, { user_id: "u1" });
    await client.createUser({ locale: "ar" });
    await client.createEssay("u1", "p1");
    expect(calls[0]).toEqual({ url: "/users", method: "POST", body: { locale: "ar" } });
    expect(calls[1]).toEqual({
      url: "/essays",
      method: "POST",
      body: { user_id: "u1", prompt_id: "p1" },
    });
  });

  it("submits checks to the essay's check endpoint", async () => {
    const { client, calls } = recordingClient(200, { revision_no: 1 });
    await client.check("e9", "نص المقال");
    expect(calls[0]).toEqual({
      url: "/essays/e9/check",
      method: "POST",
      body: { text: "نص المقال" },
    });
  });

  it("asks for diffs with from/to query parameters", async () => {
    const { client, calls } = recordingClient(200, { ops: [] });
    await client.diff("e9", 1, 2);
    expect(calls[0].url).toBe("/essays/e9/diff?from=1&to=2");
    expect(calls[0].method).toBe("GET");
  });

  it("updates profiles with PATCH", async () => {
    const { client, calls } = recordingClient(200, { user_id: "u1" });
    await client.updateProfile("u1", { locale: "en" });
    expect(calls[0]).toEqual({
      url: "/users/u1/profile",
      method: "PATCH",
      body: { locale: "en" },
    });
  });

  it("surfaces service error codes", async () => {
    const { client } = recordingClient(422, {
      code: "unscorable_input",
      message: "no words",
    });
    const err = await client.check("e9", "123").catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(422);
    expect(err.code).toBe("unscorable_input");
  });

  it("maps bodyless failures to a generic http_error", async () => {
    const client = new ApiClient("", async () => new Response("not json", { status: 500 }));
    const err = await client.health().catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.code).toBe("http_error");
  });

  it("maps network failures to status 0", async () => {
    const client = new ApiClient("", async () => {
      throw new TypeError("fetch failed");
    });
    const err = await client.health().catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(0);
    expect(err.code).toBe("network_error");
  });
});

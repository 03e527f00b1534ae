// End-to-end contract checks against a live validation service.
// Skipped unless WEST_SERVICE_URL points at a running instance:
//
//   uvicorn west.service:app --port 8000 &
//   WEST_SERVICE_URL=http://127.0.0.1:8000 npm test

import { describe, expect, it } from "vitest";

import { Client } from "./api.js";
import { match, parseRegexTable } from "./regex.js";
import {
  applyEquivResponse,
  applyRegexResponse,
  initialState,
} from "./state.js";

const base = process.env.WEST_SERVICE_URL;
const live = describe.skipIf(!base);

live("editor contract", () => {
  const client = new Client(base);

  it("renders S1 for p1", async () => {
    const response = await client.regex("p1");
    expect(response.regex).toBe("S1");
    const state = applyRegexResponse(initialState(), response);
    expect(state.table).toEqual([["S1"]]);
    expect(state.grid.length).toBe(2);
  });
});

live("sandbox contract", () => {
  const client = new Client(base);

  it("G[0,1] p0 matches 1,1 and rejects 1,0", async () => {
    const good = await client.match("G[0,1] p0", "1,1");
    expect(good.match).toBe(true);
    expect(good.satisfies).toBe(true);
    const bad = await client.match("G[0,1] p0", "1,0");
    expect(bad.match).toBe(false);
    expect(bad.satisfies).toBe(false);
  });

  it("client-side matching agrees with the service", async () => {
    const regex = await client.regex("G[0,1] p0");
    const table = parseRegexTable(regex.regex);
    for (const trace of [
      [[true], [true]],
      [[true], [false]],
      [[false], [true]],
      [[false], [false]],
    ]) {
      const text = trace.map((s) => (s[0] ? "1" : "0")).join(",");
      const verdict = await client.match("G[0,1] p0", text);
      expect(match(trace, table)).toBe(verdict.match);
    }
  });
});

live("equivalence contract", () => {
  const client = new Client(base);

  it("loads a valid witness for p0 vs p1 into the sandbox", async () => {
    let state = applyRegexResponse(initialState(), await client.regex("p0"));
    const verdict = await client.equiv("p0", "p1");
    expect(verdict.verdict).toBe("inequivalent");
    expect(verdict.witness).toBeTruthy();
    state = applyEquivResponse(state, verdict);
    // The witness is concrete over the common alphabet; the sandbox
    // keeps the editor formula's shape and takes the overlap.
    expect(state.grid.length).toBe(1);
    const witnessBits = verdict.witness!.split(",").map((g) => g[0] === "1");
    expect(state.grid[0]).toEqual(witnessBits.slice(0, state.complen));
  });

  it("reports tautologies equivalent", async () => {
    const verdict = await client.equiv("true", "p0 | !p0");
    expect(verdict.verdict).toBe("equivalent");
  });
});

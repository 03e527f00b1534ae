// Client-side mirror of the trace-regex matching predicates, kept tiny:
// the server owns the transformation, the client only re-evaluates
// matching to highlight which alternative accepted the sandbox trace.

/** One timestep of a concrete trace: truth value per proposition. */
export type TraceState = boolean[];
export type Trace = TraceState[];

/** Rows = alternatives, columns = timesteps, cells = width-n 01S strings. */
export type RegexTable = string[][];

export function matchTimestep(state: TraceState, stateRegex: string): boolean {
  for (let i = 0; i < stateRegex.length; i++) {
    const bit = stateRegex[i];
    const held = state[i] ?? false;
    if (bit === "1" && !held) return false;
    if (bit === "0" && held) return false;
  }
  return true;
}

export function matchRegex(trace: Trace, alternative: string[]): boolean {
  if (trace.length < alternative.length) return false;
  return alternative.every((stateRegex, t) =>
    matchTimestep(trace[t]!, stateRegex),
  );
}

export function match(trace: Trace, table: RegexTable): boolean {
  return table.some((alternative) => matchRegex(trace, alternative));
}

/** Index of the first alternative matching the trace, or null. */
export function matchedAlternative(
  trace: Trace,
  table: RegexTable,
): number | null {
  for (let i = 0; i < table.length; i++) {
    if (matchRegex(trace, table[i]!)) return i;
  }
  return null;
}

/**
 * Parse the service's regex text (commas between timesteps, newlines
 * between alternatives) into a table. The empty string is the
 * match-nothing regex: no rows.
 */
export function parseRegexTable(text: string): RegexTable {
  if (text === "") return [];
  return text
    .replace(/\n$/, "")
    .split("\n")
    .map((line) => (line === "" ? [] : line.split(",")));
}

/** Serialize a toggle grid (grid[variable][timestep]) as trace text. */
export function gridToTraceText(grid: boolean[][]): string {
  const nvars = grid.length;
  const steps = grid[0]?.length ?? 0;
  const groups: string[] = [];
  for (let t = 0; t < steps; t++) {
    let group = "";
    for (let k = 0; k < nvars; k++) group += grid[k]![t] ? "1" : "0";
    groups.push(group);
  }
  return groups.join(",");
}

/** Grid column t as a trace state (truth per variable). */
export function gridToTrace(grid: boolean[][]): Trace {
  const steps = grid[0]?.length ?? 0;
  const trace: Trace = [];
  for (let t = 0; t < steps; t++) {
    trace.push(grid.map((row) => row[t] ?? false));
  }
  return trace;
}

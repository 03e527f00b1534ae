// Pure session state and its transitions. The DOM layer applies these
// and re-renders; keeping them pure makes the invariants unit-testable:
// the sandbox grid always has the (nvars, complen) shape of the last
// successful regex response, and verdicts belong to the current text.

import type { ApiError, EquivResponse, RegexResponse } from "./api.js";
import { parseRegexTable, type RegexTable } from "./regex.js";

export interface SessionState {
  formulaText: string;
  diagnostics: ApiError | null;
  regexText: string | null;
  table: RegexTable;
  nvars: number;
  complen: number;
  alternatives: number;
  /** grid[variable][timestep] toggle states. */
  grid: boolean[][];
  matchVerdict: { match: boolean; satisfies: boolean } | null;
  comparisonText: string;
  equivVerdict: EquivResponse | null;
}

export function initialState(): SessionState {
  return {
    formulaText: "",
    diagnostics: null,
    regexText: null,
    table: [],
    nvars: 0,
    complen: 0,
    alternatives: 0,
    grid: [],
    matchVerdict: null,
    comparisonText: "",
    equivVerdict: null,
  };
}

function resizeGrid(
  grid: boolean[][],
  nvars: number,
  steps: number,
): boolean[][] {
  const next: boolean[][] = [];
  for (let k = 0; k < nvars; k++) {
    const row: boolean[] = [];
    for (let t = 0; t < steps; t++) row.push(grid[k]?.[t] ?? false);
    next.push(row);
  }
  return next;
}

export function setFormulaText(
  state: SessionState,
  text: string,
): SessionState {
  // Editing invalidates every verdict tied to the previous formula.
  return {
    ...state,
    formulaText: text,
    diagnostics: null,
    matchVerdict: null,
    equivVerdict: null,
  };
}

export function clearFormula(state: SessionState): SessionState {
  return {
    ...setFormulaText(state, ""),
    regexText: null,
    table: [],
    nvars: 0,
    complen: 0,
    alternatives: 0,
    grid: [],
  };
}

export function applyRegexResponse(
  state: SessionState,
  response: RegexResponse,
): SessionState {
  return {
    ...state,
    diagnostics: null,
    regexText: response.regex,
    table: parseRegexTable(response.regex),
    nvars: response.nvars,
    complen: response.complen,
    alternatives: response.alternatives,
    grid: resizeGrid(state.grid, response.nvars, response.complen),
    matchVerdict: null,
  };
}

export function applyDiagnostics(
  state: SessionState,
  error: ApiError,
): SessionState {
  return { ...state, diagnostics: error, matchVerdict: null };
}

export function toggleCell(
  state: SessionState,
  variable: number,
  timestep: number,
): SessionState {
  const grid = state.grid.map((row) => row.slice());
  if (grid[variable] === undefined || grid[variable][timestep] === undefined) {
    return state;
  }
  grid[variable][timestep] = !grid[variable][timestep];
  return { ...state, grid, matchVerdict: null };
}

export function applyMatchResponse(
  state: SessionState,
  response: { match: boolean; satisfies: boolean },
): SessionState {
  return {
    ...state,
    matchVerdict: { match: response.match, satisfies: response.satisfies },
  };
}

export function setComparisonText(
  state: SessionState,
  text: string,
): SessionState {
  return { ...state, comparisonText: text, equivVerdict: null };
}

export function applyEquivResponse(
  state: SessionState,
  response: EquivResponse,
): SessionState {
  let next: SessionState = { ...state, equivVerdict: response };
  if (response.verdict === "inequivalent" && response.witness) {
    next = loadWitness(next, response.witness);
  }
  return next;
}

/**
 * Load a concrete witness trace into the sandbox. The witness may be
 * wider or longer than the grid (it is built over the common variable
 * count and horizon of both formulas); cells beyond the grid's
 * (nvars, complen) shape are dropped so the grid invariant holds.
 */
export function loadWitness(
  state: SessionState,
  witnessText: string,
): SessionState {
  const groups = witnessText === "" ? [] : witnessText.split(",");
  const grid = resizeGrid([], state.nvars, state.complen);
  for (let t = 0; t < Math.min(groups.length, state.complen); t++) {
    const group = groups[t]!;
    for (let k = 0; k < Math.min(group.length, state.nvars); k++) {
      grid[k]![t] = group[k] === "1";
    }
  }
  return { ...state, grid, matchVerdict: null };
}

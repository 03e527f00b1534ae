// DOM wiring for the three panels: formula editor, trace sandbox, and
// equivalence checker. All state transitions live in state.ts; this
// module only renders and forwards events.

import {
  ApiFailure,
  Client,
  LatestOnly,
  debounce,
  type ApiError,
} from "./api.js";
import {
  gridToTrace,
  gridToTraceText,
  match,
  matchedAlternative,
} from "./regex.js";
import {
  applyDiagnostics,
  applyEquivResponse,
  applyMatchResponse,
  applyRegexResponse,
  clearFormula,
  initialState,
  setComparisonText,
  setFormulaText,
  toggleCell,
  type SessionState,
} from "./state.js";

const client = new Client();
const regexGate = new LatestOnly();
const matchGate = new LatestOnly();
const equivGate = new LatestOnly();

let state: SessionState = initialState();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const formulaInput = el<HTMLInputElement>("formula");
const diagnosticsBox = el<HTMLDivElement>("diagnostics");
const regexMeta = el<HTMLDivElement>("regex-meta");
const regexTableBox = el<HTMLDivElement>("regex-table");
const sandboxBox = el<HTMLDivElement>("sandbox");
const matchBadge = el<HTMLDivElement>("match-badge");
const comparisonInput = el<HTMLInputElement>("comparison");
const equivButton = el<HTMLButtonElement>("equiv-check");
const equivBadge = el<HTMLDivElement>("equiv-badge");

function describeError(error: ApiError): string {
  if (error.code === "budget_exceeded") {
    return "formula too large for the configured budget; " +
      "try smaller intervals or fewer operators";
  }
  const caret = error.position
    ? ` (line ${error.position[0]}, column ${error.position[1]})`
    : "";
  return `${error.code}: ${error.message}${caret}`;
}

function renderDiagnostics(): void {
  if (state.diagnostics) {
    diagnosticsBox.textContent = describeError(state.diagnostics);
    diagnosticsBox.classList.remove("hidden");
  } else {
    diagnosticsBox.textContent = "";
    diagnosticsBox.classList.add("hidden");
  }
}

function renderRegexTable(): void {
  regexTableBox.replaceChildren();
  if (state.regexText === null) {
    regexMeta.textContent = "";
    return;
  }
  regexMeta.textContent =
    `${state.nvars} variable(s), computation length ${state.complen}, ` +
    `${state.alternatives} alternative(s)`;

  const highlight = matchedAlternative(gridToTrace(state.grid), state.table);
  const table = document.createElement("table");
  state.table.forEach((alternative, row) => {
    const tr = document.createElement("tr");
    if (row === highlight) tr.classList.add("matched");
    alternative.forEach((stateRegex) => {
      const td = document.createElement("td");
      td.textContent = stateRegex;
      if (stateRegex.includes("S")) td.classList.add("wild");
      tr.appendChild(td);
    });
    table.appendChild(tr);
  });
  regexTableBox.appendChild(table);
}

function renderSandbox(): void {
  sandboxBox.replaceChildren();
  if (state.nvars === 0 || state.complen === 0) {
    matchBadge.textContent = "";
    matchBadge.className = "badge";
    return;
  }
  const table = document.createElement("table");
  for (let k = 0; k < state.nvars; k++) {
    const tr = document.createElement("tr");
    const label = document.createElement("th");
    label.textContent = `p${k}`;
    tr.appendChild(label);
    for (let t = 0; t < state.complen; t++) {
      const td = document.createElement("td");
      const button = document.createElement("button");
      button.textContent = state.grid[k]![t] ? "1" : "0";
      button.classList.toggle("on", state.grid[k]![t]!);
      button.addEventListener("click", () => {
        state = toggleCell(state, k, t);
        render();
        void refreshMatch();
      });
      td.appendChild(button);
      tr.appendChild(td);
    }
    table.appendChild(tr);
  }
  sandboxBox.appendChild(table);

  if (state.matchVerdict) {
    const { match, satisfies } = state.matchVerdict;
    matchBadge.textContent = match ? "match" : "no match";
    matchBadge.className = `badge ${match ? "good" : "bad"}`;
    if (match !== satisfies) {
      // The transformation theorem says this cannot happen at complen.
      matchBadge.textContent += " (disagrees with semantics!)";
      matchBadge.className = "badge alert";
    }
  } else {
    matchBadge.textContent = "";
    matchBadge.className = "badge";
  }
}

function renderEquiv(): void {
  const verdict = state.equivVerdict;
  if (!verdict) {
    equivBadge.textContent = "";
    equivBadge.className = "badge";
    return;
  }
  if (verdict.verdict === "equivalent") {
    equivBadge.textContent = "equivalent";
    equivBadge.className = "badge good";
  } else if (verdict.verdict === "inequivalent") {
    equivBadge.textContent = `inequivalent, witness ${verdict.witness ?? ""}`;
    equivBadge.className = "badge bad";
  } else {
    equivBadge.textContent = "limit: expansion budget exhausted";
    equivBadge.className = "badge alert";
  }
}

function render(): void {
  renderDiagnostics();
  renderRegexTable();
  renderSandbox();
  renderEquiv();
}

async function refreshRegex(): Promise<void> {
  const formula = state.formulaText.trim();
  if (formula === "") {
    state = clearFormula(state);
    render();
    return;
  }
  try {
    const response = await regexGate.run((signal) =>
      client.regex(formula, true, signal),
    );
    if (!response) return; // stale
    state = applyRegexResponse(state, response);
  } catch (err) {
    if (err instanceof ApiFailure) {
      state = applyDiagnostics(state, err.error);
    } else {
      state = applyDiagnostics(state, {
        code: "internal",
        message: String(err),
      });
    }
  }
  render();
}

async function refreshMatch(): Promise<void> {
  if (state.regexText === null || state.nvars === 0 || state.complen === 0) {
    return;
  }
  const formula = state.formulaText.trim();
  const trace = gridToTraceText(state.grid);
  try {
    const response = await matchGate.run((signal) =>
      client.match(formula, trace, true, signal),
    );
    if (!response) return;
    // Cross-implementation check: the local matcher must agree with the
    // service on the displayed table.
    const local = match(gridToTrace(state.grid), state.table);
    if (local !== response.match) {
      console.warn(
        `client/service match disagreement on trace "${trace}": ` +
          `client ${local}, service ${response.match}`,
      );
    }
    state = applyMatchResponse(state, response);
    render();
  } catch (err) {
    if (err instanceof ApiFailure) {
      state = applyDiagnostics(state, err.error);
      render();
    }
  }
}

async function refreshEquiv(): Promise<void> {
  const formula = state.formulaText.trim();
  const comparison = state.comparisonText.trim();
  if (formula === "" || comparison === "") return;
  try {
    const response = await equivGate.run((signal) =>
      client.equiv(formula, comparison, signal),
    );
    if (!response) return;
    state = applyEquivResponse(state, response);
    render();
    void refreshMatch();
  } catch (err) {
    if (err instanceof ApiFailure) {
      state = applyDiagnostics(state, err.error);
      render();
    }
  }
}

const debouncedRegex = debounce(() => void refreshRegex(), 300);

formulaInput.addEventListener("input", () => {
  state = setFormulaText(state, formulaInput.value);
  render();
  debouncedRegex();
});

comparisonInput.addEventListener("input", () => {
  state = setComparisonText(state, comparisonInput.value);
  render();
});

equivButton.addEventListener("click", () => void refreshEquiv());

render();

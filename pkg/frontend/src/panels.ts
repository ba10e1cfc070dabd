// Correlation panel and extremes table. Displayed numbers come straight
// from the API payload via String(); nothing is recomputed client-side.

import type { Correlation, ExtremesResponse, PairRow } from "./types.js";

export function renderCorrelationPanel(container: HTMLElement, corr: Correlation): void {
  container.textContent = "";
  container.classList.remove("hidden");
  const dl = document.createElement("dl");
  dl.className = "correlation";
  const rows: [string, string, string][] = [
    ["rho", "ρ", String(corr.rho)],
    ["p_value", "p", corr.p_value === null ? "n/a" : String(corr.p_value)],
    ["n", "n", String(corr.n)],
  ];
  for (const [field, label, text] of rows) {
    const dt = document.createElement("dt");
    dt.textContent = label;
    const dd = document.createElement("dd");
    dd.dataset.field = field;
    dd.textContent = text;
    dl.appendChild(dt);
    dl.appendChild(dd);
  }
  container.appendChild(dl);
}

export function hideCorrelationPanel(container: HTMLElement): void {
  container.textContent = "";
  container.classList.add("hidden");
}

function pairSection(
  title: string,
  rows: PairRow[],
  lexicon: string,
  onPick?: (a: string, b: string) => void,
): HTMLElement {
  const section = document.createElement("section");
  const h = document.createElement("h3");
  h.textContent = title;
  section.appendChild(h);
  const table = document.createElement("table");
  table.className = "extremes-table";
  const head = document.createElement("tr");
  for (const col of ["category a", "category b", "ρ", "p", "n"]) {
    const th = document.createElement("th");
    th.textContent = col;
    head.appendChild(th);
  }
  table.appendChild(head);
  for (const row of rows) {
    const tr = document.createElement("tr");
    tr.className = "pair-row";
    tr.dataset.a = row.pair[0];
    tr.dataset.b = row.pair[1];
    const cells = [
      row.pair[0],
      row.pair[1],
      String(row.rho),
      row.p_value === null ? "n/a" : String(row.p_value),
      String(row.n),
    ];
    for (const text of cells) {
      const td = document.createElement("td");
      td.textContent = text;
      tr.appendChild(td);
    }
    if (onPick) {
      tr.addEventListener("click", () =>
        onPick(`${lexicon}:${row.pair[0]}`, `${lexicon}:${row.pair[1]}`),
      );
    }
    table.appendChild(tr);
  }
  section.appendChild(table);
  return section;
}

export function renderExtremesTable(
  container: HTMLElement,
  payload: ExtremesResponse,
  onPick?: (a: string, b: string) => void,
): void {
  container.textContent = "";
  container.appendChild(pairSection("most correlated", payload.top, payload.lexicon, onPick));
  container.appendChild(pairSection("least correlated", payload.bottom, payload.lexicon, onPick));
  if (payload.skipped_undefined > 0) {
    const note = document.createElement("p");
    note.className = "skip-note";
    note.textContent = `${payload.skipped_undefined} pair(s) had no defined correlation`;
    container.appendChild(note);
  }
}

export function showError(banner: HTMLElement, message: string): void {
  banner.textContent = message;
  banner.classList.remove("hidden");
}

export function clearError(banner: HTMLElement): void {
  banner.textContent = "";
  banner.classList.add("hidden");
}

import { describe, expect, it } from "vitest";

import {
  clearError,
  hideCorrelationPanel,
  renderCorrelationPanel,
  renderExtremesTable,
  showError,
} from "../src/panels.js";
import type { ExtremesResponse } from "../src/types.js";

function host(): HTMLElement {
  const div = document.createElement("div");
  document.body.appendChild(div);
  return div;
}

describe("correlation panel", () => {
  it("shows rho, p, n verbatim from the payload", () => {
    const el = host();
    const corr = { rho: -0.5642881398080217, p_value: 0.32149857, n: 5 };
    renderCorrelationPanel(el, corr);
    expect(el.querySelector('[data-field="rho"]')!.textContent).toBe(String(corr.rho));
    expect(el.querySelector('[data-field="p_value"]')!.textContent).toBe(
      String(corr.p_value),
    );
    expect(el.querySelector('[data-field="n"]')!.textContent).toBe("5");
  });

  it("renders a placeholder for a null p-value", () => {
    const el = host();
    renderCorrelationPanel(el, { rho: 1, p_value: null, n: 2 });
    expect(el.querySelector('[data-field="p_value"]')!.textContent).toBe("n/a");
  });

  it("hides cleanly", () => {
    const el = host();
    renderCorrelationPanel(el, { rho: 1, p_value: 0, n: 50 });
    hideCorrelationPanel(el);
    expect(el.classList.contains("hidden")).toBe(true);
    expect(el.textContent).toBe("");
  });
});

describe("extremes table", () => {
  const payload: ExtremesResponse = {
    lexicon: "liwc_small",
    k: 2,
    top: [
      { pair: ["A", "B"], rho: 0.9731, p_value: 0.0001, n: 50 },
      { pair: ["A", "C"], rho: 0.51, p_value: 0.02, n: 48 },
    ],
    bottom: [{ pair: ["B", "C"], rho: -0.88, p_value: 0.003, n: 49 }],
    skipped_undefined: 1,
  };

  it("renders both sections with payload values verbatim", () => {
    const el = host();
    renderExtremesTable(el, payload);
    const rows = Array.from(el.querySelectorAll<HTMLTableRowElement>(".pair-row"));
    expect(rows).toHaveLength(3);
    const first = Array.from(rows[0].cells).map((c) => c.textContent);
    expect(first).toEqual(["A", "B", String(0.9731), String(0.0001), "50"]);
    expect(el.textContent).toContain("1 pair(s) had no defined correlation");
  });

  it("clicking a row feeds the pair into the picker callback", () => {
    const el = host();
    const picked: string[][] = [];
    renderExtremesTable(el, payload, (a, b) => picked.push([a, b]));
    el.querySelectorAll<HTMLTableRowElement>(".pair-row")[2].click();
    expect(picked).toEqual([["liwc_small:B", "liwc_small:C"]]);
  });
});

describe("error banner", () => {
  it("shows and clears", () => {
    const el = host();
    el.classList.add("hidden");
    showError(el, "not_found: no category");
    expect(el.classList.contains("hidden")).toBe(false);
    expect(el.textContent).toContain("not_found");
    clearError(el);
    expect(el.classList.contains("hidden")).toBe(true);
  });
});

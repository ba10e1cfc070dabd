// Contract tests against a live fixture server (spawned in global-setup):
// everything the UI displays must be traceable, verbatim, to an API field.

import { beforeAll, describe, expect, inject, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { renderChoropleth } from "../src/choropleth.js";
import { renderCorrelationPanel, renderExtremesTable } from "../src/panels.js";
import { decodeStates, topoSize, type StatePath } from "../src/topo.js";
import type { CompareResponse, ExtremesResponse } from "../src/types.js";

const base = inject("baseUrl");
const api = new ApiClient(base);

let states: StatePath[];
let size: [number, number];

beforeAll(async () => {
  const topo = await api.geometry();
  states = decodeStates(topo).sort((a, b) => a.index - b.index);
  size = topoSize(topo);
});

function host(): HTMLElement {
  const div = document.createElement("div");
  document.body.appendChild(div);
  return div;
}

describe("compare view against the fixture server", () => {
  it("panel shows exactly the /compare payload's rho, p, n", async () => {
    const payload = (await api.compare(
      "liwc_small:Money",
      "liwc_small:Positive Feelings",
    )) as CompareResponse;
    const panel = host();
    renderCorrelationPanel(panel, payload.correlation);
    expect(panel.querySelector('[data-field="rho"]')!.textContent).toBe(
      String(payload.correlation.rho),
    );
    expect(panel.querySelector('[data-field="p_value"]')!.textContent).toBe(
      payload.correlation.p_value === null
        ? "n/a"
        : String(payload.correlation.p_value),
    );
    expect(panel.querySelector('[data-field="n"]')!.textContent).toBe(
      String(payload.correlation.n),
    );
  });

  it("compare(X, X) shows rho 1", async () => {
    const payload = await api.compare("liwc_small:Money", "liwc_small:Money");
    expect(payload.correlation.rho).toBe(1);
    const panel = host();
    renderCorrelationPanel(panel, payload.correlation);
    expect(panel.querySelector('[data-field="rho"]')!.textContent).toBe("1");
  });

  it("rendered map values equal the payload values verbatim", async () => {
    const payload = await api.compare(
      "liwc_small:Money",
      "themes:Hard Work",
    );
    const mapHost = host();
    renderChoropleth(mapHost, payload.a.map, states, size);
    for (const path of Array.from(
      mapHost.querySelectorAll<SVGPathElement>("path.state"),
    )) {
      const idx = states.find((s) => s.usps === path.dataset.usps)!.index;
      const want = payload.a.map.values[idx];
      expect(path.dataset.value).toBe(want === null ? "" : String(want));
      const wantBin = payload.a.map.bins[idx];
      expect(path.dataset.bin).toBe(wantBin === null ? "" : String(wantBin));
    }
  });

  it("unknown selections surface as ApiError for the selector UI", async () => {
    await expect(api.compare("liwc_small:NoSuch", "liwc_small:Money")).rejects.toThrow(
      ApiError,
    );
    try {
      await api.compare("liwc_small:NoSuch", "liwc_small:Money");
    } catch (err) {
      expect((err as ApiError).status).toBe(404);
      expect((err as ApiError).code).toBe("not_found");
    }
  });
});

describe("extremes browser against the fixture server", () => {
  it("table matches /correlations/extremes row for row", async () => {
    const payload = (await api.extremes(3, "liwc_small")) as ExtremesResponse;
    const el = host();
    renderExtremesTable(el, payload);
    const rows = Array.from(el.querySelectorAll<HTMLTableRowElement>(".pair-row"));
    const wanted = [...payload.top, ...payload.bottom];
    expect(rows).toHaveLength(wanted.length);
    wanted.forEach((want, i) => {
      const cells = Array.from(rows[i].cells).map((c) => c.textContent);
      expect(cells).toEqual([
        want.pair[0],
        want.pair[1],
        String(want.rho),
        want.p_value === null ? "n/a" : String(want.p_value),
        String(want.n),
      ]);
    });
  });

  it("k=1 yields one top and one bottom row", async () => {
    const payload = await api.extremes(1, "liwc_small");
    expect(payload.top).toHaveLength(1);
    expect(payload.bottom).toHaveLength(1);
  });

  it("a lexicon with no defined pairs is a visible error, not a blank view", async () => {
    await expect(api.extremes(3, "themes")).rejects.toMatchObject({
      status: 422,
      code: "insufficient_data",
    });
  });
});

describe("word maps against the fixture server", () => {
  it("unknown words render an all-zero map (no error)", async () => {
    const res = await api.wordMap("xyzzy");
    const mapHost = host();
    renderChoropleth(mapHost, res.map, states, size);
    for (const v of res.map.values) {
      expect(v === null || v === 0).toBe(true);
    }
  });

  it("the fixture's regional word shades only its home state", async () => {
    // "maui" appears only in the California user's posts in this corpus.
    const res = await api.wordMap("maui");
    const nonZero = res.map.values
      .map((v, i) => [v, i] as const)
      .filter(([v]) => v !== null && v !== 0);
    expect(nonZero).toHaveLength(1);
    const ca = states.find((s) => s.usps === "CA")!;
    expect(nonZero[0][1]).toBe(ca.index);
    const mapHost = host();
    renderChoropleth(mapHost, res.map, states, size);
    const caPath = mapHost.querySelector<SVGPathElement>('path[data-usps="CA"]')!;
    const top = res.map.legend.bins - 1;
    expect(caPath.classList.contains(`bin-${top}`)).toBe(true);
  });
});

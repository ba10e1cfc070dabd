import { readFileSync } from "node:fs";
import { join } from "node:path";

import { beforeAll, describe, expect, it } from "vitest";

import { ramp, renderChoropleth, setHighlight, validateMapSpec } from "../src/choropleth.js";
import { decodeStates, topoSize, type StatePath, type Topology } from "../src/topo.js";
import type { MapSpec } from "../src/types.js";

// The geometry asset is generated by the Python package and checked in.
const TOPO_PATH = join(__dirname, "..", "..", "src", "geolex", "assets", "us-states.topo.json");
const FROZEN_PATH = join(__dirname, "fixtures", "frozen-map.json");

let states: StatePath[];
let size: [number, number];

beforeAll(() => {
  const topo = JSON.parse(readFileSync(TOPO_PATH, "utf-8")) as Topology;
  states = decodeStates(topo).sort((a, b) => a.index - b.index);
  size = topoSize(topo);
});

function container(): HTMLElement {
  const div = document.createElement("div");
  document.body.appendChild(div);
  return div;
}

function uniformSpec(value: number): MapSpec {
  return {
    values: Array(50).fill(value),
    denominator: null,
    bins: Array(50).fill(0),
    bin_edges: [],
    legend: { min: value, max: value, bins: 1 },
  };
}

describe("geometry decoding", () => {
  it("decodes 50 closed tiles", () => {
    expect(states).toHaveLength(50);
    expect(states[0].usps).toBe("AK");
    for (const s of states) {
      expect(s.d.startsWith("M")).toBe(true);
      expect(s.d.endsWith("Z")).toBe(true);
    }
  });
});

describe("choropleth rendering", () => {
  it("uniform vector renders a single fill and single-bin legend", () => {
    const host = container();
    renderChoropleth(host, uniformSpec(0.25), states, size);
    const fills = new Set(
      Array.from(host.querySelectorAll<SVGPathElement>("path.state")).map((p) =>
        p.getAttribute("fill"),
      ),
    );
    expect(fills.size).toBe(1);
    expect(host.querySelectorAll(".legend-item:not(.legend-nodata)")).toHaveLength(1);
  });

  it("darker fill for higher bins", () => {
    const colors = ramp(5);
    expect(colors).toHaveLength(5);
    const luminance = (hex: string) =>
      parseInt(hex.slice(1, 3), 16) + parseInt(hex.slice(3, 5), 16) + parseInt(hex.slice(5, 7), 16);
    for (let i = 1; i < colors.length; i++) {
      expect(luminance(colors[i])).toBeLessThan(luminance(colors[i - 1]));
    }
  });

  it("hawaii-only signal shades only Hawaii", () => {
    const hi = states.find((s) => s.usps === "HI")!;
    const values: (number | null)[] = Array(50).fill(0);
    const bins: (number | null)[] = Array(50).fill(0);
    values[hi.index] = 0.5;
    bins[hi.index] = 1;
    for (const s of [0, 7]) {
      values[s] = null;
      bins[s] = null;
    }
    const spec: MapSpec = {
      values,
      denominator: null,
      bins,
      bin_edges: [0.25],
      legend: { min: 0, max: 0.5, bins: 2 },
    };
    const host = container();
    renderChoropleth(host, spec, states, size);
    const byUsps = new Map(
      Array.from(host.querySelectorAll<SVGPathElement>("path.state")).map((p) => [
        p.dataset.usps,
        p,
      ]),
    );
    const colors = ramp(2);
    expect(byUsps.get("HI")!.getAttribute("fill")).toBe(colors[1]);
    expect(byUsps.get("TX")!.getAttribute("fill")).toBe(colors[0]);
    expect(byUsps.get("AK")!.getAttribute("fill")).toBe("url(#nodata)");
    expect(byUsps.get("AK")!.querySelector("title")!.textContent).toContain("no data");
  });

  it("tooltips carry the raw value string and bin", () => {
    const spec = uniformSpec(0.123456789);
    const host = container();
    renderChoropleth(host, spec, states, size);
    const tx = host.querySelector<SVGPathElement>('path[data-usps="TX"]')!;
    expect(tx.dataset.value).toBe(String(0.123456789));
    expect(tx.querySelector("title")!.textContent).toBe(
      `Texas: ${String(0.123456789)} (bin 0)`,
    );
  });

  it("hover callback fires and highlight syncs", () => {
    const spec = uniformSpec(1);
    const host = container();
    let seen: string | null = null;
    const svg = renderChoropleth(host, spec, states, size, {
      onHover: (info) => {
        seen = info?.usps ?? null;
      },
    });
    const tx = host.querySelector<SVGPathElement>('path[data-usps="TX"]')!;
    tx.dispatchEvent(new Event("mouseenter"));
    expect(seen).toBe("TX");
    setHighlight(svg, "TX");
    expect(tx.classList.contains("hovered")).toBe(true);
    setHighlight(svg, null);
    expect(tx.classList.contains("hovered")).toBe(false);
  });

  it("rejects malformed payloads instead of rendering blank", () => {
    expect(() =>
      validateMapSpec({ values: [1, 2] } as unknown as MapSpec, 50),
    ).toThrow(/malformed/);
  });

  it("frozen payload renders a pixel-stable snapshot", () => {
    const spec = JSON.parse(readFileSync(FROZEN_PATH, "utf-8")) as MapSpec;
    const host = container();
    renderChoropleth(host, spec, states, size);
    expect(host.innerHTML).toMatchSnapshot();
  });
});

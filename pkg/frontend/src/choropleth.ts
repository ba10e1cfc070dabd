// SVG choropleth over the tile-grid geometry. The darker a state, the
// higher its bin; null values are hatched "no data". Every number shown
// (tooltips, legend) is the raw API value via String() — the client never
// recomputes map values.

import type { CityDot, MapSpec } from "./types.js";
import type { StatePath } from "./topo.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface HoverInfo {
  usps: string;
  name: string;
  value: number | null;
  bin: number | null;
}

export interface RenderOptions {
  onHover?: (info: HoverInfo | null) => void;
  cities?: CityDot[];
}

// Single-hue sequential ramp, light to dark (mirrors the server's SVG export).
export function ramp(n: number): string[] {
  const light = [0xeb, 0xf3, 0xfb];
  const dark = [0x08, 0x30, 0x6b];
  if (n <= 1) return [`#${dark.map((c) => c.toString(16).padStart(2, "0")).join("")}`];
  const colors: string[] = [];
  for (let i = 0; i < n; i++) {
    const t = i / (n - 1);
    const rgb = light.map((a, j) => Math.round(a + (dark[j] - a) * t));
    colors.push(`#${rgb.map((c) => c.toString(16).padStart(2, "0")).join("")}`);
  }
  return colors;
}

export function validateMapSpec(spec: MapSpec, nStates: number): void {
  if (
    !spec ||
    !Array.isArray(spec.values) ||
    !Array.isArray(spec.bins) ||
    !Array.isArray(spec.bin_edges) ||
    spec.values.length !== nStates ||
    spec.bins.length !== nStates ||
    !spec.legend ||
    typeof spec.legend.bins !== "number"
  ) {
    throw new Error("malformed map payload");
  }
}

function el<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

export function renderChoropleth(
  container: HTMLElement,
  spec: MapSpec,
  states: StatePath[],
  size: [number, number],
  opts: RenderOptions = {},
): SVGSVGElement {
  validateMapSpec(spec, states.length);
  container.textContent = "";
  const [width, height] = size;
  const colors = ramp(spec.legend.bins);

  const svg = el("svg", {
    viewBox: `0 0 ${width} ${height}`,
    class: "choropleth",
    role: "img",
  });
  const defs = el("defs", {});
  const pattern = el("pattern", {
    id: "nodata",
    width: "6",
    height: "6",
    patternUnits: "userSpaceOnUse",
  });
  pattern.appendChild(el("rect", { width: "6", height: "6", fill: "#f2f2f2" }));
  pattern.appendChild(
    el("path", { d: "M0,6 L6,0", stroke: "#c4c4c4", "stroke-width": "1" }),
  );
  defs.appendChild(pattern);
  svg.appendChild(defs);

  for (const state of states) {
    const value = spec.values[state.index];
    const bin = spec.bins[state.index];
    const fill = bin === null ? "url(#nodata)" : colors[bin];
    const path = el("path", {
      d: state.d,
      fill,
      stroke: "#ffffff",
      "stroke-width": "1.5",
      class: bin === null ? "state bin-null" : `state bin-${bin}`,
      "data-usps": state.usps,
      "data-value": value === null ? "" : String(value),
      "data-bin": bin === null ? "" : String(bin),
    });
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent =
      value === null
        ? `${state.name}: no data`
        : `${state.name}: ${String(value)} (bin ${bin})`;
    path.appendChild(title);
    if (opts.onHover) {
      path.addEventListener("mouseenter", () =>
        opts.onHover!({ usps: state.usps, name: state.name, value, bin }),
      );
      path.addEventListener("mouseleave", () => opts.onHover!(null));
    }
    svg.appendChild(path);

    const label = el("text", {
      x: String(state.cx),
      y: String(state.cy + 4),
      "text-anchor": "middle",
      "font-size": "13",
      class: "state-label",
      fill: bin !== null && spec.legend.bins > 1 && bin >= spec.legend.bins / 2
        ? "#ffffff"
        : "#333333",
    });
    label.textContent = state.usps;
    svg.appendChild(label);
  }

  if (opts.cities && opts.cities.length) {
    const byUsps = new Map(states.map((s) => [s.usps, s]));
    const top = Math.max(...opts.cities.map((c) => c.count));
    for (const city of opts.cities) {
      const state = byUsps.get(city.usps);
      if (!state) continue;
      const r = 3 + 8 * Math.sqrt(city.count / top);
      const dot = el("circle", {
        cx: String(state.cx),
        cy: String(state.cy),
        r: r.toFixed(2),
        class: "city-dot",
        fill: "#d95f0e",
        "fill-opacity": "0.75",
      });
      const title = document.createElementNS(SVG_NS, "title");
      title.textContent = `${city.city}, ${city.usps}: ${String(city.count)}`;
      dot.appendChild(title);
      svg.appendChild(dot);
    }
  }

  container.appendChild(svg);
  container.appendChild(renderLegend(spec, colors));
  return svg;
}

function renderLegend(spec: MapSpec, colors: string[]): HTMLElement {
  const legend = document.createElement("div");
  legend.className = "legend";
  const note = document.createElement("span");
  note.className = "legend-note";
  note.textContent = "darker = higher";
  legend.appendChild(note);

  const labels = [spec.legend.min, ...spec.bin_edges, spec.legend.max];
  for (let i = 0; i < colors.length; i++) {
    const item = document.createElement("span");
    item.className = "legend-item";
    const swatch = document.createElement("span");
    swatch.className = "legend-swatch";
    swatch.style.backgroundColor = colors[i];
    item.appendChild(swatch);
    const text = document.createElement("span");
    text.className = "legend-range";
    text.textContent = `${String(labels[i])} – ${String(labels[i + 1])}`;
    item.appendChild(text);
    legend.appendChild(item);
  }
  const noData = document.createElement("span");
  noData.className = "legend-item legend-nodata";
  noData.textContent = "hatched = no data";
  legend.appendChild(noData);
  return legend;
}

export function setHighlight(svg: SVGSVGElement, usps: string | null): void {
  for (const node of Array.from(svg.querySelectorAll<SVGPathElement>(".state"))) {
    node.classList.toggle("hovered", usps !== null && node.dataset.usps === usps);
  }
}

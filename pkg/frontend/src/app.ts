// Application shell: mode tabs, selection controls, hash routing, and the
// render loop. The URL hash is the source of truth for the view; controls
// write to it and the hashchange handler re-renders.

import { ApiClient, ApiError } from "./api.js";
import { renderChoropleth, setHighlight } from "./choropleth.js";
import {
  clearError,
  hideCorrelationPanel,
  renderCorrelationPanel,
  renderExtremesTable,
  showError,
} from "./panels.js";
import { decodeStates, topoSize, type StatePath } from "./topo.js";
import type { MapSpec, Meta } from "./types.js";
import {
  DEFAULT_VIEW,
  parseViewState,
  serializeViewState,
  type Mode,
  type ViewState,
} from "./viewstate.js";

const MODES: { mode: Mode; label: string }[] = [
  { mode: "density", label: "Density" },
  { mode: "word", label: "Word" },
  { mode: "category", label: "Category" },
  { mode: "facet", label: "Demographics" },
  { mode: "compare", label: "Compare" },
  { mode: "extremes", label: "Extremes" },
];

interface Dom {
  modes: HTMLElement;
  controls: HTMLElement;
  error: HTMLElement;
  single: HTMLElement;
  compare: HTMLElement;
  mapA: HTMLElement;
  mapB: HTMLElement;
  panel: HTMLElement;
  extremes: HTMLElement;
}

function grabDom(): Dom {
  const get = (id: string) => {
    const node = document.getElementById(id);
    if (!node) throw new Error(`missing #${id}`);
    return node;
  };
  return {
    modes: get("modes"),
    controls: get("controls"),
    error: get("error"),
    single: get("map-single"),
    compare: get("compare"),
    mapA: get("map-a"),
    mapB: get("map-b"),
    panel: get("corr-panel"),
    extremes: get("extremes"),
  };
}

function option(value: string, label?: string): HTMLOptionElement {
  const opt = document.createElement("option");
  opt.value = value;
  opt.textContent = label ?? value;
  return opt;
}

export class App {
  private states: StatePath[] = [];
  private size: [number, number] = [0, 0];
  private meta!: Meta;
  private dom: Dom;
  private generation = 0;

  constructor(private api: ApiClient) {
    this.dom = grabDom();
  }

  async start(): Promise<void> {
    const [topo, meta] = await Promise.all([this.api.geometry(), this.api.meta()]);
    this.states = decodeStates(topo).sort((a, b) => a.index - b.index);
    this.size = topoSize(topo);
    this.meta = meta;
    this.renderModeTabs();
    window.addEventListener("hashchange", () => void this.sync());
    await this.sync();
  }

  private view(): ViewState {
    return parseViewState(window.location.hash);
  }

  private navigate(vs: ViewState): void {
    const hash = serializeViewState(vs);
    if (window.location.hash === hash) {
      void this.sync();
    } else {
      window.location.hash = hash;
    }
  }

  private renderModeTabs(): void {
    this.dom.modes.textContent = "";
    for (const { mode, label } of MODES) {
      const btn = document.createElement("button");
      btn.textContent = label;
      btn.dataset.mode = mode;
      btn.addEventListener("click", () => this.navigate(this.defaultFor(mode)));
      this.dom.modes.appendChild(btn);
    }
  }

  private defaultFor(mode: Mode): ViewState {
    const lexicons = Object.keys(this.meta.lexicons).sort();
    const first = lexicons[0];
    const cats = first ? this.meta.lexicons[first] : [];
    switch (mode) {
      case "word":
        return { mode, word: "lake" };
      case "category":
        return { mode, lexicon: first, category: cats[0] };
      case "facet":
        return { mode, kind: "gender", value: "female" };
      case "density":
        return { ...DEFAULT_VIEW };
      case "compare":
        return {
          mode,
          a: first && cats[0] ? `${first}:${cats[0]}` : undefined,
          b: first && cats[1] ? `${first}:${cats[1]}` : undefined,
        };
      case "extremes":
        return { mode, lexicon: first, k: 3 };
    }
  }

  private async sync(): Promise<void> {
    const vs = this.view();
    const gen = ++this.generation;
    clearError(this.dom.error);
    for (const btn of Array.from(this.dom.modes.querySelectorAll("button"))) {
      btn.classList.toggle("active", btn.dataset.mode === vs.mode);
    }
    this.renderControls(vs);
    try {
      await this.renderView(vs, gen);
    } catch (err) {
      if (err instanceof DOMException && err.name === "AbortError") return;
      if (gen !== this.generation) return;
      const message =
        err instanceof ApiError
          ? `${err.code}: ${err.message}`
          : `render failed: ${String(err)}`;
      showError(this.dom.error, message);
    }
  }

  private show(which: "single" | "compare" | "extremes"): void {
    this.dom.single.classList.toggle("hidden", which !== "single");
    this.dom.compare.classList.toggle("hidden", which !== "compare");
    this.dom.extremes.classList.toggle("hidden", which !== "extremes");
  }

  private async renderView(vs: ViewState, gen: number): Promise<void> {
    switch (vs.mode) {
      case "word": {
        if (!vs.word) return this.show("single");
        const res = await this.api.wordMap(vs.word);
        if (gen !== this.generation) return;
        this.show("single");
        this.drawSingle(res.map);
        break;
      }
      case "category": {
        if (!vs.lexicon || !vs.category) return this.show("single");
        const res = await this.api.categoryMap(vs.lexicon, vs.category);
        if (gen !== this.generation) return;
        this.show("single");
        this.drawSingle(res.map);
        break;
      }
      case "facet": {
        if (!vs.kind || !vs.value) return this.show("single");
        const res = await this.api.facetMap(vs.kind, vs.value);
        if (gen !== this.generation) return;
        this.show("single");
        this.drawSingle(res.map);
        break;
      }
      case "density": {
        const res = await this.api.density(vs.threshold ?? 100);
        if (gen !== this.generation) return;
        this.show("single");
        renderChoropleth(this.dom.single, res.map, this.states, this.size, {
          cities: res.cities,
        });
        break;
      }
      case "compare": {
        if (!vs.a || !vs.b) {
          // one side cleared: single-map mode, panel hidden
          this.show("compare");
          this.dom.mapB.textContent = "";
          hideCorrelationPanel(this.dom.panel);
          const only = vs.a ?? vs.b;
          if (only) {
            const [lex, cat] = splitSelector(only);
            const res = await this.api.categoryMap(lex, cat);
            if (gen !== this.generation) return;
            renderChoropleth(this.dom.mapA, res.map, this.states, this.size);
          } else {
            this.dom.mapA.textContent = "";
          }
          break;
        }
        const res = await this.api.compare(vs.a, vs.b);
        if (gen !== this.generation) return;
        this.show("compare");
        const svgA = renderChoropleth(this.dom.mapA, res.a.map, this.states, this.size, {
          onHover: (info) => this.syncHover(info?.usps ?? null),
        });
        const svgB = renderChoropleth(this.dom.mapB, res.b.map, this.states, this.size, {
          onHover: (info) => this.syncHover(info?.usps ?? null),
        });
        this.hoverTargets = [svgA, svgB];
        renderCorrelationPanel(this.dom.panel, res.correlation);
        break;
      }
      case "extremes": {
        const res = await this.api.extremes(vs.k ?? 3, vs.lexicon);
        if (gen !== this.generation) return;
        this.show("extremes");
        renderExtremesTable(this.dom.extremes, res, (a, b) =>
          this.navigate({ mode: "compare", a, b }),
        );
        break;
      }
    }
  }

  private hoverTargets: SVGSVGElement[] = [];

  private syncHover(usps: string | null): void {
    for (const svg of this.hoverTargets) setHighlight(svg, usps);
  }

  private drawSingle(map: MapSpec): void {
    renderChoropleth(this.dom.single, map, this.states, this.size);
  }

  // -- controls ---------------------------------------------------------

  private renderControls(vs: ViewState): void {
    const c = this.dom.controls;
    c.textContent = "";
    const lexicons = Object.keys(this.meta.lexicons).sort();
    switch (vs.mode) {
      case "word": {
        const input = document.createElement("input");
        input.type = "search";
        input.placeholder = "type any word";
        input.value = vs.word ?? "";
        input.id = "word-input";
        const go = document.createElement("button");
        go.textContent = "map it";
        const submit = () =>
          this.navigate({ mode: "word", word: input.value.trim().toLowerCase() });
        go.addEventListener("click", submit);
        input.addEventListener("keydown", (e) => {
          if (e.key === "Enter") submit();
        });
        c.append(input, go);
        break;
      }
      case "category": {
        const lexSel = document.createElement("select");
        for (const name of lexicons) lexSel.appendChild(option(name));
        if (vs.lexicon) lexSel.value = vs.lexicon;
        const catSel = document.createElement("select");
        const fillCats = () => {
          catSel.textContent = "";
          for (const cat of this.meta.lexicons[lexSel.value] ?? []) {
            catSel.appendChild(option(cat));
          }
        };
        fillCats();
        if (vs.category) catSel.value = vs.category;
        lexSel.addEventListener("change", () => {
          fillCats();
          this.navigate({ mode: "category", lexicon: lexSel.value, category: catSel.value });
        });
        catSel.addEventListener("change", () =>
          this.navigate({ mode: "category", lexicon: lexSel.value, category: catSel.value }),
        );
        c.append(lexSel, catSel);
        break;
      }
      case "facet": {
        const kindSel = document.createElement("select");
        kindSel.append(option("gender"), option("industry"));
        kindSel.value = vs.kind ?? "gender";
        const genderSel = document.createElement("select");
        genderSel.append(option("female"), option("male"));
        const industryInput = document.createElement("input");
        industryInput.placeholder = "industry label";
        const apply = () => {
          const kind = kindSel.value as "gender" | "industry";
          const value = kind === "gender" ? genderSel.value : industryInput.value.trim();
          if (value) this.navigate({ mode: "facet", kind, value });
        };
        if (vs.kind === "industry") {
          industryInput.value = vs.value ?? "";
          c.append(kindSel, industryInput);
        } else {
          if (vs.value) genderSel.value = vs.value;
          c.append(kindSel, genderSel);
        }
        kindSel.addEventListener("change", apply);
        genderSel.addEventListener("change", apply);
        industryInput.addEventListener("keydown", (e) => {
          if (e.key === "Enter") apply();
        });
        break;
      }
      case "density": {
        const label = document.createElement("label");
        label.textContent = "city threshold ";
        const input = document.createElement("input");
        input.type = "number";
        input.min = "1";
        input.value = String(vs.threshold ?? 100);
        input.addEventListener("change", () => {
          const threshold = Math.max(1, Number(input.value) || 100);
          this.navigate({ mode: "density", threshold });
        });
        label.appendChild(input);
        c.appendChild(label);
        break;
      }
      case "compare": {
        c.appendChild(this.selectorPicker("a", vs, vs.a));
        c.appendChild(this.selectorPicker("b", vs, vs.b));
        break;
      }
      case "extremes": {
        const lexSel = document.createElement("select");
        for (const name of lexicons) lexSel.appendChild(option(name));
        if (vs.lexicon) lexSel.value = vs.lexicon;
        const kInput = document.createElement("input");
        kInput.type = "number";
        kInput.min = "1";
        kInput.value = String(vs.k ?? 3);
        const apply = () =>
          this.navigate({
            mode: "extremes",
            lexicon: lexSel.value,
            k: Math.max(1, Number(kInput.value) || 3),
          });
        lexSel.addEventListener("change", apply);
        kInput.addEventListener("change", apply);
        c.append(lexSel, kInput);
        break;
      }
    }
  }

  private selectorPicker(side: "a" | "b", vs: ViewState, current?: string): HTMLElement {
    const wrap = document.createElement("span");
    wrap.className = "selector";
    const sel = document.createElement("select");
    sel.appendChild(option("", `(clear ${side})`));
    for (const [lexicon, cats] of Object.entries(this.meta.lexicons).sort()) {
      for (const cat of cats) {
        sel.appendChild(option(`${lexicon}:${cat}`));
      }
    }
    if (current) sel.value = current;
    sel.addEventListener("change", () => {
      const next: ViewState = { ...vs, mode: "compare" };
      if (sel.value) next[side] = sel.value;
      else delete next[side];
      this.navigate(next);
    });
    wrap.appendChild(sel);
    return wrap;
  }
}

function splitSelector(token: string): [string, string] {
  const i = token.indexOf(":");
  return i < 0 ? [token, ""] : [token.slice(0, i), token.slice(i + 1)];
}

if (typeof window !== "undefined" && document.getElementById("modes")) {
  const app = new App(new ApiClient());
  app.start().catch((err) => {
    const banner = document.getElementById("error");
    if (banner) showError(banner, `failed to start: ${String(err)}`);
  });
}

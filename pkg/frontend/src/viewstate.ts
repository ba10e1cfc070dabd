// The URL hash carries the whole view: parse(serialize(vs)) restores it,
// so any map is a shareable link. Hover state is transient and excluded.

export type Mode = "word" | "category" | "facet" | "density" | "compare" | "extremes";

export interface ViewState {
  mode: Mode;
  word?: string;
  lexicon?: string;
  category?: string;
  kind?: "gender" | "industry";
  value?: string;
  threshold?: number;
  a?: string;
  b?: string;
  k?: number;
}

export const DEFAULT_VIEW: ViewState = { mode: "density", threshold: 100 };

const MODES: Mode[] = ["word", "category", "facet", "density", "compare", "extremes"];

export function serializeViewState(vs: ViewState): string {
  const params = new URLSearchParams();
  switch (vs.mode) {
    case "word":
      if (vs.word) params.set("w", vs.word);
      break;
    case "category":
      if (vs.lexicon) params.set("lexicon", vs.lexicon);
      if (vs.category) params.set("category", vs.category);
      break;
    case "facet":
      if (vs.kind) params.set("kind", vs.kind);
      if (vs.value) params.set("value", vs.value);
      break;
    case "density":
      if (vs.threshold !== undefined) params.set("min", String(vs.threshold));
      break;
    case "compare":
      if (vs.a) params.set("a", vs.a);
      if (vs.b) params.set("b", vs.b);
      break;
    case "extremes":
      if (vs.lexicon) params.set("lexicon", vs.lexicon);
      if (vs.k !== undefined) params.set("k", String(vs.k));
      break;
  }
  const query = params.toString();
  return `#/${vs.mode}` + (query ? `?${query}` : "");
}

function positiveInt(raw: string | null): number | undefined {
  if (raw === null) return undefined;
  const n = Number(raw);
  return Number.isInteger(n) && n >= 1 ? n : undefined;
}

export function parseViewState(hash: string): ViewState {
  const m = /^#\/([a-z]+)(?:\?(.*))?$/.exec(hash);
  if (!m || !MODES.includes(m[1] as Mode)) {
    return { ...DEFAULT_VIEW };
  }
  const mode = m[1] as Mode;
  const params = new URLSearchParams(m[2] ?? "");
  const vs: ViewState = { mode };
  switch (mode) {
    case "word": {
      const w = params.get("w");
      if (w) vs.word = w;
      break;
    }
    case "category": {
      const lexicon = params.get("lexicon");
      const category = params.get("category");
      if (lexicon) vs.lexicon = lexicon;
      if (category) vs.category = category;
      break;
    }
    case "facet": {
      const kind = params.get("kind");
      if (kind === "gender" || kind === "industry") vs.kind = kind;
      const value = params.get("value");
      if (value) vs.value = value;
      break;
    }
    case "density": {
      const threshold = positiveInt(params.get("min"));
      if (threshold !== undefined) vs.threshold = threshold;
      break;
    }
    case "compare": {
      const a = params.get("a");
      const b = params.get("b");
      if (a) vs.a = a;
      if (b) vs.b = b;
      break;
    }
    case "extremes": {
      const lexicon = params.get("lexicon");
      if (lexicon) vs.lexicon = lexicon;
      const k = positiveInt(params.get("k"));
      if (k !== undefined) vs.k = k;
      break;
    }
  }
  return vs;
}

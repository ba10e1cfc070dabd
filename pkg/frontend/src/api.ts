// Thin fetch client. Each named slot keeps at most one request in flight:
// starting a new one aborts the previous, so the latest selection wins.

import type {
  ApiErrorBody,
  CategoryMapResponse,
  CompareResponse,
  DensityResponse,
  ExtremesResponse,
  FacetMapResponse,
  Meta,
  WordMapResponse,
} from "./types.js";
import type { Topology } from "./topo.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
  }
}

export class ApiClient {
  private controllers = new Map<string, AbortController>();

  constructor(private base: string = "") {}

  private async getJson<T>(path: string, slot?: string): Promise<T> {
    let signal: AbortSignal | undefined;
    if (slot) {
      this.controllers.get(slot)?.abort();
      const controller = new AbortController();
      this.controllers.set(slot, controller);
      signal = controller.signal;
    }
    const res = await fetch(this.base + path, { signal });
    if (!res.ok) {
      let code = "http_error";
      let message = `HTTP ${res.status}`;
      try {
        const body = (await res.json()) as ApiErrorBody;
        if (body?.error) {
          code = body.error.code;
          message = body.error.message;
        }
      } catch {
        // non-JSON error body: keep the generic message
      }
      throw new ApiError(res.status, code, message);
    }
    return (await res.json()) as T;
  }

  meta(): Promise<Meta> {
    return this.getJson("/api/v1/meta");
  }

  geometry(): Promise<Topology> {
    return this.getJson("/assets/us-states.topo.json");
  }

  wordMap(word: string): Promise<WordMapResponse> {
    return this.getJson(`/api/v1/map/word/${encodeURIComponent(word)}`, "map");
  }

  categoryMap(lexicon: string, category: string): Promise<CategoryMapResponse> {
    return this.getJson(
      `/api/v1/map/category/${encodeURIComponent(lexicon)}/${encodeURIComponent(category)}`,
      "map",
    );
  }

  facetMap(kind: "gender" | "industry", value: string): Promise<FacetMapResponse> {
    const q = new URLSearchParams({ kind, value });
    return this.getJson(`/api/v1/map/facet?${q}`, "map");
  }

  density(threshold: number): Promise<DensityResponse> {
    const q = new URLSearchParams({ threshold: String(threshold) });
    return this.getJson(`/api/v1/map/density?${q}`, "map");
  }

  compare(a: string, b: string): Promise<CompareResponse> {
    const q = new URLSearchParams({ a, b });
    return this.getJson(`/api/v1/compare?${q}`, "map");
  }

  extremes(k: number, lexicon?: string): Promise<ExtremesResponse> {
    const q = new URLSearchParams({ k: String(k) });
    if (lexicon) q.set("lexicon", lexicon);
    return this.getJson(`/api/v1/correlations/extremes?${q}`, "map");
  }
}

// Payload shapes of the /api/v1 endpoints (see docs/api.md in the repo root).

export interface Legend {
  min: number;
  max: number;
  bins: number;
}

export interface MapSpec {
  values: (number | null)[];
  denominator: number[] | null;
  bins: (number | null)[];
  bin_edges: number[];
  legend: Legend;
}

export interface StateInfo {
  usps: string;
  name: string;
}

export interface Meta {
  doc_count: number;
  user_total: number;
  token_total: number;
  states: StateInfo[];
  lexicons: Record<string, string[]>;
  default_bins: number;
  warnings: Record<string, number>;
}

export interface WordMapResponse {
  kind: "word";
  word: string;
  map: MapSpec;
}

export interface CategoryMapResponse {
  kind: "category";
  lexicon: string;
  category: string;
  map: MapSpec;
}

export interface FacetMapResponse {
  kind: "facet";
  facet: "gender" | "industry";
  value: string;
  map: MapSpec;
}

export interface CityDot {
  city: string;
  usps: string;
  count: number;
}

export interface DensityResponse {
  kind: "density";
  threshold: number;
  map: MapSpec;
  cities: CityDot[];
}

export interface Correlation {
  rho: number;
  p_value: number | null;
  n: number;
}

export interface CompareSide {
  lexicon: string;
  category: string;
  map: MapSpec;
}

export interface CompareResponse {
  a: CompareSide;
  b: CompareSide;
  correlation: Correlation;
}

export interface PairRow {
  pair: [string, string];
  rho: number;
  p_value: number | null;
  n: number;
}

export interface ExtremesResponse {
  lexicon: string;
  k: number;
  top: PairRow[];
  bottom: PairRow[];
  skipped_undefined: number;
}

export interface ApiErrorBody {
  error: { code: string; message: string };
}

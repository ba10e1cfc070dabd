// Tiny TopoJSON reader for the server's state-geometry asset: absolute
// (non-quantized) arcs, one polygon ring per state.

export interface TopoGeometry {
  type: "Polygon";
  arcs: number[][];
  id: string;
  properties: { usps: string; name: string; index: number };
}

export interface Topology {
  type: "Topology";
  bbox?: number[];
  objects: { states: { type: "GeometryCollection"; geometries: TopoGeometry[] } };
  arcs: number[][][];
}

export interface StatePath {
  usps: string;
  name: string;
  index: number;
  d: string;
  cx: number;
  cy: number;
}

function ringPoints(topo: Topology, arcIndex: number): number[][] {
  if (arcIndex >= 0) return topo.arcs[arcIndex];
  return [...topo.arcs[~arcIndex]].reverse();
}

export function decodeStates(topo: Topology): StatePath[] {
  return topo.objects.states.geometries.map((g) => {
    const ring = g.arcs[0].flatMap((ai) => ringPoints(topo, ai));
    const d =
      `M${ring[0][0]},${ring[0][1]}` +
      ring.slice(1).map(([x, y]) => `L${x},${y}`).join("") +
      "Z";
    const xs = ring.map((p) => p[0]);
    const ys = ring.map((p) => p[1]);
    return {
      usps: g.properties.usps,
      name: g.properties.name,
      index: g.properties.index,
      d,
      cx: (Math.min(...xs) + Math.max(...xs)) / 2,
      cy: (Math.min(...ys) + Math.max(...ys)) / 2,
    };
  });
}

export function topoSize(topo: Topology): [number, number] {
  if (topo.bbox && topo.bbox.length === 4) {
    return [topo.bbox[2] - topo.bbox[0], topo.bbox[3] - topo.bbox[1]];
  }
  let w = 0;
  let h = 0;
  for (const arc of topo.arcs) {
    for (const [x, y] of arc) {
      w = Math.max(w, x);
      h = Math.max(h, y);
    }
  }
  return [w, h];
}

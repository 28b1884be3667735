/** Chain the server's unordered slice segments into polylines.
 *
 * The service clips each triangle independently and returns segments in
 * no particular order; endpoints of adjacent segments agree to well
 * below 1e-9, so greedy endpoint matching reconstructs the section
 * curves (closed loops or open chains).
 */

export type Pt = number[];
export type Segment = [Pt, Pt];

export interface Polyline {
  points: Pt[];
  closed: boolean;
}

const TOL = 1e-9;

function same(a: Pt, b: Pt): boolean {
  let d = 0;
  for (let i = 0; i < a.length; i++) d = Math.max(d, Math.abs(a[i] - b[i]));
  return d <= TOL;
}

export function chainSegments(segments: Segment[]): Polyline[] {
  const unused = segments.map((s) => [s[0].slice(), s[1].slice()] as Segment);
  const out: Polyline[] = [];
  while (unused.length > 0) {
    const seg = unused.pop()!;
    const chain: Pt[] = [seg[0], seg[1]];
    let grew = true;
    while (grew) {
      grew = false;
      const head = chain[0];
      const tail = chain[chain.length - 1];
      for (let i = 0; i < unused.length; i++) {
        const [a, b] = unused[i];
        if (same(tail, a)) {
          chain.push(b);
        } else if (same(tail, b)) {
          chain.push(a);
        } else if (same(head, a)) {
          chain.unshift(b);
        } else if (same(head, b)) {
          chain.unshift(a);
        } else {
          continue;
        }
        unused.splice(i, 1);
        grew = true;
        break;
      }
    }
    const closed = chain.length > 2 && same(chain[0], chain[chain.length - 1]);
    if (closed) chain.pop();
    out.push({ points: chain, closed });
  }
  return out;
}

/** Drop zero-length segments (degenerate clips). */
export function cleanSegments(segments: Segment[]): Segment[] {
  return segments.filter(([a, b]) => !same(a, b));
}

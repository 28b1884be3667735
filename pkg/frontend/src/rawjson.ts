/** Extraction of raw value tokens from JSON text.
 *
 * The diagnostics panel must show numbers exactly as the server emitted
 * them; JSON.parse followed by String() can change the spelling (for
 * example "1e-05" becomes "0.00001").  This walks the JSON text with a
 * tiny tokenizer and returns the verbatim byte span of the value at a
 * given path.
 */

type Path = (string | number)[];

function skipWs(s: string, i: number): number {
  while (i < s.length && (s[i] === " " || s[i] === "\n" || s[i] === "\t" || s[i] === "\r")) i++;
  return i;
}

function scanString(s: string, i: number): number {
  // s[i] === '"'; returns index just past the closing quote
  i++;
  while (i < s.length) {
    if (s[i] === "\\") i += 2;
    else if (s[i] === '"') return i + 1;
    else i++;
  }
  throw new Error("unterminated string");
}

function scanValue(s: string, i: number): number {
  i = skipWs(s, i);
  const c = s[i];
  if (c === '"') return scanString(s, i);
  if (c === "{" || c === "[") {
    const close = c === "{" ? "}" : "]";
    let depth = 0;
    while (i < s.length) {
      if (s[i] === '"') {
        i = scanString(s, i);
        continue;
      }
      if (s[i] === c) depth++;
      else if (s[i] === close) {
        depth--;
        if (depth === 0) return i + 1;
      }
      i++;
    }
    throw new Error("unterminated container");
  }
  // number / true / false / null
  let j = i;
  while (j < s.length && !',}] \n\t\r'.includes(s[j])) j++;
  return j;
}

/** Return [start, end) of the value at `path`, or null if absent. */
export function rawSpan(text: string, path: Path): [number, number] | null {
  let i = skipWs(text, 0);
  for (const step of path) {
    i = skipWs(text, i);
    if (typeof step === "string") {
      if (text[i] !== "{") return null;
      i++;
      let found = false;
      while (true) {
        i = skipWs(text, i);
        if (text[i] === "}") break;
        const keyEnd = scanString(text, i);
        const key = JSON.parse(text.slice(i, keyEnd)) as string;
        i = skipWs(text, keyEnd);
        if (text[i] !== ":") throw new Error("expected colon");
        i = skipWs(text, i + 1);
        if (key === step) {
          found = true;
          break;
        }
        i = scanValue(text, i);
        i = skipWs(text, i);
        if (text[i] === ",") i++;
      }
      if (!found) return null;
    } else {
      if (text[i] !== "[") return null;
      i++;
      for (let k = 0; k < step; k++) {
        i = scanValue(text, i);
        i = skipWs(text, i);
        if (text[i] !== ",") return null;
        i++;
      }
      i = skipWs(text, i);
    }
  }
  i = skipWs(text, i);
  return [i, scanValue(text, i)];
}

/** Verbatim text of the value at `path` (quotes kept for strings). */
export function rawToken(text: string, path: Path): string | null {
  const span = rawSpan(text, path);
  return span === null ? null : text.slice(span[0], span[1]);
}

/** rawToken with string unquoting, for display. */
export function rawDisplay(text: string, path: Path): string | null {
  const tok = rawToken(text, path);
  if (tok === null) return null;
  if (tok.startsWith('"')) return JSON.parse(tok) as string;
  return tok;
}

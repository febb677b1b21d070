/** Whitespace tokenizer with punctuation peeling, in the treebank style:
 * sentence punctuation and brackets separate from words, hyphenated
 * compounds (System-A) stay whole. */

const PEEL_TRAILING = /[.,;:!?)\]}]$/;
const PEEL_LEADING = /^[(\[{]/;

export function tokenize(text: string): string[] {
  const out: string[] = [];
  for (const chunk of text.split(/\s+/)) {
    if (!chunk) continue;
    pushChunk(chunk, out);
  }
  return out;
}

function pushChunk(chunk: string, out: string[]): void {
  if (chunk.length > 1 && PEEL_LEADING.test(chunk)) {
    out.push(chunk[0]);
    pushChunk(chunk.slice(1), out);
    return;
  }
  const trailing: string[] = [];
  let core = chunk;
  while (core.length > 1 && PEEL_TRAILING.test(core)) {
    trailing.unshift(core[core.length - 1]);
    core = core.slice(0, -1);
  }
  if (core) out.push(core);
  out.push(...trailing);
}

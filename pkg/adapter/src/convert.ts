/** CLI: convert raw requirements (CSV with id,text columns, or JSONL) into
 * the corpus JSONL the linter reads.
 *
 *   node dist/convert.js --input raw.csv [--trees treebank.jsonl] --output corpus.jsonl
 *
 * Exit codes: 0 ok, 1 usage, 2 bad data.
 */

import fs from "node:fs";
import Papa from "papaparse";

import { annotate, Treebank, validateRecord } from "./annotate.js";
import { AnnotatedRequirement, RawRequirement, ValidationError } from "./model.js";

export function readRawRequirements(path: string): RawRequirement[] {
  const content = fs.readFileSync(path, "utf-8");
  const rows = path.endsWith(".csv") ? parseCsv(content) : parseJsonl(content, path);
  rows.forEach((row, i) => {
    if (!row.id || typeof row.text !== "string" || !row.text.trim()) {
      throw new ValidationError(`${path}: row ${i + 1}: needs non-empty id and text`);
    }
  });
  return rows;
}

function parseCsv(content: string): RawRequirement[] {
  const parsed = Papa.parse<Record<string, string>>(content, {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    throw new ValidationError(`CSV parse error: ${first.message} (row ${first.row})`);
  }
  return parsed.data.map((row) => ({ id: row.id ?? "", text: row.text ?? "" }));
}

function parseJsonl(content: string, path: string): RawRequirement[] {
  return content
    .split(/\r?\n/)
    .filter((line) => line.trim())
    .map((line, i) => {
      try {
        return JSON.parse(line) as RawRequirement;
      } catch (err) {
        throw new ValidationError(`${path}: line ${i + 1}: malformed JSON`);
      }
    });
}

export function readTreebank(path: string): Treebank {
  const treebank: Treebank = new Map();
  for (const line of fs.readFileSync(path, "utf-8").split(/\r?\n/)) {
    if (!line.trim()) continue;
    const entry = JSON.parse(line) as { id: string; tree: string };
    treebank.set(entry.id, entry.tree);
  }
  return treebank;
}

export interface ConvertResult {
  count: number;
  warnings: string[];
}

export function convert(inputPath: string, outputPath: string, treesPath?: string): ConvertResult {
  const raw = readRawRequirements(inputPath);
  const treebank = treesPath ? readTreebank(treesPath) : undefined;

  const seen = new Set<string>();
  const lines: string[] = [];
  const warnings: string[] = [];
  for (const requirement of raw) {
    if (seen.has(requirement.id)) {
      throw new ValidationError(`duplicate id ${requirement.id}`);
    }
    seen.add(requirement.id);
    const { record, warning } = annotate(requirement, treebank);
    validateRecord(record);
    if (warning) warnings.push(warning);
    lines.push(JSON.stringify(serializeRecord(record)));
  }
  fs.writeFileSync(outputPath, lines.join("\n") + (lines.length ? "\n" : ""), "utf-8");
  return { count: lines.length, warnings };
}

/** Fixed key order so conversions are byte-stable. */
function serializeRecord(record: AnnotatedRequirement) {
  return {
    id: record.id,
    text: record.text,
    tokens: record.tokens.map((t) => ({
      text: t.text,
      lemma: t.lemma,
      pos: t.pos,
      index: t.index,
    })),
    tree: record.tree,
    marks: record.marks.map((m) => ({ kind: m.kind, before_token: m.before_token })),
  };
}

function parseArgs(argv: string[]): { input: string; output: string; trees?: string } | null {
  const args: Record<string, string> = {};
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (!flag.startsWith("--") || value === undefined) return null;
    args[flag.slice(2)] = value;
  }
  if (!args.input || !args.output) return null;
  return { input: args.input, output: args.output, trees: args.trees };
}

export function main(argv: string[]): number {
  const args = parseArgs(argv);
  if (args === null) {
    console.error("usage: convert --input raw.(csv|jsonl) --output corpus.jsonl [--trees treebank.jsonl]");
    return 1;
  }
  try {
    const { count, warnings } = convert(args.input, args.output, args.trees);
    for (const warning of warnings) console.error(`warning: ${warning}`);
    console.log(`wrote ${count} requirements to ${args.output}`);
    return 0;
  } catch (err) {
    if (err instanceof ValidationError) {
      console.error(`error: ${err.message}`);
      return 2;
    }
    if (err instanceof Error && "code" in err && err.code === "ENOENT") {
      console.error(`error: ${err.message}`);
      return 2;
    }
    throw err;
  }
}

if (process.argv[1] && process.argv[1].endsWith("convert.js")) {
  process.exit(main(process.argv.slice(2)));
}

export { annotate, validateRecord, type AnnotateResult, type Treebank } from "./annotate.js";
export { convert, main, readRawRequirements, readTreebank } from "./convert.js";
export type { AnnotatedRequirement, LayoutMark, RawRequirement, Token } from "./model.js";
export { ValidationError } from "./model.js";
export { preprocess, removeQuotes } from "./preprocess.js";
export { leafPairs, leafWords } from "./ptb.js";
export { tokenize } from "./tokenize.js";

declare module "wink-pos-tagger" {
  interface WinkTokenTag {
    value: string;
    tag: string;
    normal: string;
    pos: string;
    lemma?: string;
  }
  interface WinkTagger {
    tagSentence(sentence: string): WinkTokenTag[];
    tagRawTokens(tokens: string[]): WinkTokenTag[];
  }
  function tagger(): WinkTagger;
  export default tagger;
}

//! Bracketed phrase-structure trees.
//!
//! Labeled notation is `(LABEL child child ...)` where bare atoms are
//! terminals: `(S (NP (N Liverpool)) (VP (V is) ...))`. With
//! [`BracketOptions::allow_unlabeled`] the stream is treated as pure
//! bracketing — every atom is a terminal and every group gets the label `—`
//! — which is how worked PARSEVAL examples are usually printed.

use super::{Corpus, ParseError, Sentence, Token};

/// Placeholder label assigned to groups read in unlabeled mode.
pub const UNLABELED: &str = "—";

/// A labeled ordered tree over a token sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PhraseTree {
    Node {
        label: String,
        children: Vec<PhraseTree>,
    },
    Leaf(Token),
}

impl PhraseTree {
    pub fn node(label: impl Into<String>, children: Vec<PhraseTree>) -> Self {
        PhraseTree::Node {
            label: label.into(),
            children,
        }
    }

    pub fn leaf(token: Token) -> Self {
        PhraseTree::Leaf(token)
    }

    /// Terminal tokens in reading order.
    pub fn leaves(&self) -> Vec<&Token> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Token>) {
        match self {
            PhraseTree::Leaf(t) => out.push(t),
            PhraseTree::Node { children, .. } => {
                for c in children {
                    c.collect_leaves(out);
                }
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            PhraseTree::Leaf(_) => 1,
            PhraseTree::Node { children, .. } => children.iter().map(|c| c.leaf_count()).sum(),
        }
    }

    /// Inclusive token interval covered by this node, 1-based.
    pub fn span(&self) -> (usize, usize) {
        let leaves = self.leaves();
        match (leaves.first(), leaves.last()) {
            (Some(a), Some(b)) => (a.index, b.index),
            _ => (0, 0),
        }
    }

    /// Number of nonterminal nodes in the tree.
    pub fn node_count(&self) -> usize {
        match self {
            PhraseTree::Leaf(_) => 0,
            PhraseTree::Node { children, .. } => {
                1 + children.iter().map(|c| c.node_count()).sum::<usize>()
            }
        }
    }

    pub fn label(&self) -> Option<&str> {
        match self {
            PhraseTree::Node { label, .. } => Some(label),
            PhraseTree::Leaf(_) => None,
        }
    }

    /// Every nonterminal as `(start, end, label)`, pre-order.
    pub fn labeled_spans(&self) -> Vec<(usize, usize, String)> {
        let mut out = Vec::new();
        self.collect_spans(&mut out);
        out
    }

    fn collect_spans(&self, out: &mut Vec<(usize, usize, String)>) {
        if let PhraseTree::Node { label, children } = self {
            let (s, e) = self.span();
            out.push((s, e, label.clone()));
            for c in children {
                c.collect_spans(out);
            }
        }
    }
}

/// Options for [`read_bracketed`].
#[derive(Debug, Clone, Copy, Default)]
pub struct BracketOptions {
    /// Treat the stream as unlabeled bracketing: every atom is a terminal,
    /// every group gets the label `—`.
    pub allow_unlabeled: bool,
    /// Reject nodes that mix terminal and nonterminal children.
    pub strict: bool,
}

#[derive(Debug)]
enum Lexeme {
    Open(usize),
    Close(usize),
    Atom(usize, String),
}

fn lex(input: &str) -> Vec<Lexeme> {
    let mut out = Vec::new();
    let mut atom_start = None;
    for (i, ch) in input.char_indices() {
        match ch {
            '(' | ')' | c if c.is_whitespace() || c == '(' || c == ')' => {
                if let Some(s) = atom_start.take() {
                    out.push(Lexeme::Atom(s, input[s..i].to_string()));
                }
                if ch == '(' {
                    out.push(Lexeme::Open(i));
                } else if ch == ')' {
                    out.push(Lexeme::Close(i));
                }
            }
            _ => {
                if atom_start.is_none() {
                    atom_start = Some(i);
                }
            }
        }
    }
    if let Some(s) = atom_start {
        out.push(Lexeme::Atom(s, input[s..].to_string()));
    }
    out
}

/// Read a stream of bracketed trees, one [`Sentence`] per top-level group.
///
/// Token indices are assigned 1-based in leaf order within each tree. An
/// empty stream yields an empty corpus.
pub fn read_bracketed(input: &str, options: BracketOptions) -> Result<Corpus<PhraseTree>, ParseError> {
    let lexemes = lex(input);
    let mut corpus = Corpus::new("bracketed");

    // Stack of open groups: (byte position, label slot, children).
    let mut stack: Vec<(usize, Option<String>, Vec<PhraseTree>)> = Vec::new();
    for lexeme in lexemes {
        match lexeme {
            Lexeme::Open(pos) => stack.push((pos, None, Vec::new())),
            Lexeme::Atom(pos, text) => match stack.last_mut() {
                None => {
                    return Err(ParseError::Invalid {
                        line: 0,
                        msg: format!("stray token `{text}` outside brackets at byte {pos}"),
                    })
                }
                Some((_, label, children)) => {
                    if !options.allow_unlabeled && label.is_none() && children.is_empty() {
                        *label = Some(text);
                    } else {
                        children.push(PhraseTree::Leaf(Token::new(0, text)));
                    }
                }
            },
            Lexeme::Close(pos) => {
                let (open_pos, label, children) = stack
                    .pop()
                    .ok_or(ParseError::UnbalancedBrackets { position: pos })?;
                let label = match label {
                    Some(l) => l,
                    None if options.allow_unlabeled => UNLABELED.to_string(),
                    None => return Err(ParseError::EmptyNode { position: open_pos }),
                };
                if children.is_empty() {
                    return Err(ParseError::EmptyNode { position: open_pos });
                }
                if options.strict {
                    let leaves = children
                        .iter()
                        .filter(|c| matches!(c, PhraseTree::Leaf(_)))
                        .count();
                    if leaves != 0 && leaves != children.len() {
                        return Err(ParseError::MixedTerminalNonterminal { position: open_pos });
                    }
                }
                let node = PhraseTree::Node { label, children };
                match stack.last_mut() {
                    Some((_, _, parent)) => parent.push(node),
                    None => {
                        let tree = number_leaves(node);
                        let tokens = tree.leaves().into_iter().cloned().collect();
                        corpus.sentences.push(Sentence::new(tokens, Some(tree)));
                    }
                }
            }
        }
    }
    if let Some((pos, _, _)) = stack.last() {
        return Err(ParseError::UnbalancedBrackets { position: *pos });
    }
    Ok(corpus)
}

fn number_leaves(tree: PhraseTree) -> PhraseTree {
    fn walk(tree: PhraseTree, next: &mut usize) -> PhraseTree {
        match tree {
            PhraseTree::Leaf(mut t) => {
                t.index = *next;
                *next += 1;
                PhraseTree::Leaf(t)
            }
            PhraseTree::Node { label, children } => PhraseTree::Node {
                label,
                children: children.into_iter().map(|c| walk(c, next)).collect(),
            },
        }
    }
    let mut next = 1;
    walk(tree, &mut next)
}

/// Render one tree in the notation [`read_bracketed`] accepts.
///
/// Nodes labeled `—` are written as bare groups so unlabeled corpora
/// round-trip.
pub fn write_bracketed(tree: &PhraseTree) -> String {
    fn walk(tree: &PhraseTree, out: &mut String) {
        match tree {
            PhraseTree::Leaf(t) => out.push_str(&t.form),
            PhraseTree::Node { label, children } => {
                out.push('(');
                let mut first = true;
                if label != UNLABELED {
                    out.push_str(label);
                    first = false;
                }
                for c in children {
                    if !first {
                        out.push(' ');
                    }
                    first = false;
                    walk(c, out);
                }
                out.push(')');
            }
        }
    }
    let mut out = String::new();
    walk(tree, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_example_tree() {
        let text = "(S (NP (N Liverpool)) (VP (V is) (VP (V playing) (ADVP (ADV well)))))";
        let corpus = read_bracketed(text, BracketOptions::default()).unwrap();
        assert_eq!(corpus.len(), 1);
        let tree = corpus.sentences[0].analysis.as_ref().unwrap();
        assert_eq!(tree.node_count(), 8); // S NP N VP V VP V ADVP ADV minus... counted below
        let forms: Vec<_> = tree.leaves().iter().map(|t| t.form.clone()).collect();
        assert_eq!(forms, ["Liverpool", "is", "playing", "well"]);
        assert_eq!(tree.leaf_count(), 4);
    }

    #[test]
    fn empty_stream_is_empty_corpus() {
        let corpus = read_bracketed("", BracketOptions::default()).unwrap();
        assert!(corpus.is_empty());
    }

    #[test]
    fn unlabeled_groups_get_placeholder_label() {
        let corpus = read_bracketed(
            "((He)(ran))",
            BracketOptions {
                allow_unlabeled: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(corpus.len(), 1);
        let tree = corpus.sentences[0].analysis.as_ref().unwrap();
        let mut spans: Vec<_> = tree.labeled_spans().iter().map(|(s, e, _)| (*s, *e)).collect();
        spans.sort_unstable();
        assert_eq!(spans, [(1, 1), (1, 2), (2, 2)]);
        assert!(tree.labeled_spans().iter().all(|(_, _, l)| l == UNLABELED));
    }

    #[test]
    fn unbalanced_brackets_are_rejected() {
        let err = read_bracketed("(S (NP he)", BracketOptions::default()).unwrap_err();
        assert!(matches!(err, ParseError::UnbalancedBrackets { .. }));
        let err = read_bracketed("(S he))", BracketOptions::default()).unwrap_err();
        assert!(matches!(err, ParseError::UnbalancedBrackets { position: 6 }));
    }

    #[test]
    fn empty_node_is_rejected() {
        let err = read_bracketed("(S ())", BracketOptions::default()).unwrap_err();
        assert!(matches!(err, ParseError::EmptyNode { .. }));
        let err = read_bracketed("(S)", BracketOptions::default()).unwrap_err();
        assert!(matches!(err, ParseError::EmptyNode { .. }));
    }

    #[test]
    fn strict_mode_rejects_mixed_children() {
        let opts = BracketOptions {
            strict: true,
            ..Default::default()
        };
        let err = read_bracketed("(VP (V is) playing)", opts).unwrap_err();
        assert!(matches!(err, ParseError::MixedTerminalNonterminal { .. }));
        // Non-strict accepts the same input.
        assert!(read_bracketed("(VP (V is) playing)", BracketOptions::default()).is_ok());
    }

    #[test]
    fn roundtrip_is_structurally_identical() {
        let text = "(S (NP (N Liverpool)) (VP (V is) (VP playing well)))";
        let corpus = read_bracketed(text, BracketOptions::default()).unwrap();
        let tree = corpus.sentences[0].analysis.as_ref().unwrap();
        let rendered = write_bracketed(tree);
        let reread = read_bracketed(&rendered, BracketOptions::default()).unwrap();
        assert_eq!(reread.sentences[0].analysis.as_ref().unwrap(), tree);
    }
}

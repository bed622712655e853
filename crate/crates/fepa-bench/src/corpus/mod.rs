//! Corpus and analysis formats.
//!
//! Everything a parser or treebank can hand us is normalized into one of
//! three analysis types over a shared [`Token`] sequence:
//!
//! - [`PhraseTree`] — labeled ordered trees read from bracket notation,
//! - [`DepGraph`] — per-token head indices (0 = root) with optional labels,
//!   read from tab-separated dependency files or TIGER-XML,
//! - [`GrSet`] — grammatical-relation tuples read from `(rel arg arg ...)`
//!   lines.
//!
//! Readers are pure and reentrant; corpora are immutable after load and safe
//! to share across threads. All readers accept UTF-8 text only.

mod bracketed;
mod dep;
mod gr;
mod parallel;
mod tiger;

pub use bracketed::{read_bracketed, write_bracketed, BracketOptions, PhraseTree};
pub use dep::{read_dep_tsv, write_dep_tsv, DepGraph, DepOptions};
pub use gr::{read_gr, write_gr, GrRelation, GrSet};
pub use parallel::{read_parallel, write_parallel, ParallelPair};
pub use tiger::{read_tiger_xml, write_tiger_xml};

use thiserror::Error;

/// A single token of a sentence. Indices are 1-based and consecutive.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Token {
    pub index: usize,
    pub form: String,
    pub lemma: Option<String>,
    pub pos: Option<String>,
}

impl Token {
    pub fn new(index: usize, form: impl Into<String>) -> Self {
        Token {
            index,
            form: form.into(),
            lemma: None,
            pos: None,
        }
    }

    pub fn with_pos(index: usize, form: impl Into<String>, pos: impl Into<String>) -> Self {
        Token {
            index,
            form: form.into(),
            lemma: None,
            pos: Some(pos.into()),
        }
    }
}

/// One sentence record: its tokens, at most one analysis, an optional genre tag.
#[derive(Debug, Clone, PartialEq)]
pub struct Sentence<A> {
    pub tokens: Vec<Token>,
    pub analysis: Option<A>,
    pub genre: Option<String>,
}

impl<A> Sentence<A> {
    pub fn new(tokens: Vec<Token>, analysis: Option<A>) -> Self {
        Sentence {
            tokens,
            analysis,
            genre: None,
        }
    }

    /// Surface forms joined by single spaces.
    pub fn text(&self) -> String {
        self.tokens
            .iter()
            .map(|t| t.form.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A sequence of sentences from one source.
#[derive(Debug, Clone, PartialEq)]
pub struct Corpus<A> {
    pub sentences: Vec<Sentence<A>>,
    pub source: String,
}

impl<A> Corpus<A> {
    pub fn new(source: impl Into<String>) -> Self {
        Corpus {
            sentences: Vec::new(),
            source: source.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    /// Genre tags present in the corpus, deduplicated, in first-seen order.
    pub fn genres(&self) -> Vec<String> {
        let mut seen = Vec::new();
        for s in &self.sentences {
            if let Some(g) = &s.genre {
                if !seen.iter().any(|x| x == g) {
                    seen.push(g.clone());
                }
            }
        }
        seen
    }
}

impl<A> Default for Corpus<A> {
    fn default() -> Self {
        Corpus::new("")
    }
}

/// Errors raised while reading corpus or analysis files.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("unbalanced brackets at byte {position}")]
    UnbalancedBrackets { position: usize },
    #[error("empty node at byte {position}")]
    EmptyNode { position: usize },
    #[error("node mixing terminals and nonterminals at byte {position}")]
    MixedTerminalNonterminal { position: usize },
    #[error("line {line}: expected {expected} tab-separated columns, got {got}")]
    BadColumnCount {
        line: usize,
        expected: usize,
        got: usize,
    },
    #[error("line {line}: head index {head} out of range for a {len}-token sentence")]
    HeadOutOfRange { line: usize, head: usize, len: usize },
    #[error("sentence {sentence}: dependency cycle detected")]
    CycleDetected { sentence: usize },
    #[error("line {line}: malformed relation: {text}")]
    MalformedRelation { line: usize, text: String },
    #[error("missing attribute `{name}` on <{element}>")]
    MissingAttribute { element: String, name: String },
    #[error("edge references undeclared id `{idref}`")]
    DanglingEdgeRef { idref: String },
    #[error("sentence {sentence}: token counts differ ({left} vs {right})")]
    LengthMismatch {
        sentence: usize,
        left: usize,
        right: usize,
    },
    #[error("line {line}: {msg}")]
    Invalid { line: usize, msg: String },
    #[error("xml error: {0}")]
    Xml(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Split a line of text into whitespace-delimited tokens with 1-based indices.
pub fn tokenize_line(line: &str) -> Vec<Token> {
    line.split_whitespace()
        .enumerate()
        .map(|(i, w)| Token::new(i + 1, w))
        .collect()
}

//! fepa-bench: a toolkit for evaluating syntactic parsers.
//!
//! The library scores parser output against gold-standard analyses along five
//! criteria and combines them into comparative reports:
//!
//! - **Preciseness** — PARSEVAL with crossing brackets and the leaf-ancestor
//!   metric for phrase-structure output ([`constituency`]); attachment scores
//!   (UAS/LAS/DA/RA/CM), Lin's link categorization and hierarchy-tolerant
//!   grammatical-relation matching for dependency output ([`dependency`]).
//! - **Coverage** — covered/fragmented/failed/terminated bookkeeping, genre
//!   generalizability and n-gram parsability error mining ([`coverage`]).
//! - **Robustness** — seeded misspelling injection, UR/LR scores, degradation
//!   curves and max-similarity scoring over corrections ([`robustness`]).
//! - **Efficiency** — an external-process benchmark harness with per-sentence
//!   timing, crash supervision and a resumable run ledger ([`harness`]).
//! - **Subtlety** — tagset detail, ambiguity and underspecification factors,
//!   plus per-criterion ranking and weighted multi-parser comparison
//!   ([`profile`]).
//!
//! Corpus readers and writers for bracketed trees, dependency TSV, GR tuples,
//! TIGER-XML and parallel correct/noisy corpora live in [`corpus`].
//!
//! Every capability has a runnable example under `examples/`; the `fepa-bench`
//! binary exposes the same operations as subcommands (`eval`, `mine`, `noise`,
//! `robust`, `bench`, `subtlety`, `compare`, `convert`).

pub mod constituency;
pub mod corpus;
pub mod coverage;
pub mod dependency;
pub mod harness;
pub mod profile;
pub mod report;
pub mod robustness;

pub use corpus::{Corpus, DepGraph, GrSet, ParallelPair, PhraseTree, Sentence, Token};

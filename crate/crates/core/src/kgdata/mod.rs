//! Triple stores: parsing, integer vocabularies, split validation, and the
//! unique-ID / shared-ID dataset builders for single and multi-source graphs.

mod dataset;
mod graph;
mod io;
mod symbols;

pub use dataset::{
    build_shared_ids, build_unique_ids, remove_overlap_triples, AlignmentSeed, IdMode, KgSource,
    MultiSourceDataset, RawDataset, RawKg, RawLinks, RawTypes, TypeAssertions,
};
pub use graph::{Adjacency, Direction, FilterMode, KnowledgeGraph, KnownFilter};
pub use io::{
    load_alignment_pairs, load_multi_kg_dir, load_single_kg_dir, load_triples, split_ratio,
    LoadOptions, TripleFormat,
};
pub use symbols::SymbolTable;

/// Integer-encoded relational triple. Ids index the owning symbol tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub head: usize,
    pub rel: usize,
    pub tail: usize,
}

impl Triple {
    pub fn new(head: usize, rel: usize, tail: usize) -> Self {
        Triple { head, rel, tail }
    }
}

/// Surface-form triple as read from disk, before vocabulary encoding.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RawTriple {
    pub head: String,
    pub relation: String,
    pub tail: String,
}

impl RawTriple {
    pub fn new(
        head: impl Into<String>,
        relation: impl Into<String>,
        tail: impl Into<String>,
    ) -> Self {
        RawTriple { head: head.into(), relation: relation.into(), tail: tail.into() }
    }
}

/// Disjoint train/valid/test triple sets.
#[derive(Debug, Clone, Default)]
pub struct SplitTriples {
    pub train: Vec<Triple>,
    pub valid: Vec<Triple>,
    pub test: Vec<Triple>,
}

/// What `validate_split` dropped and why.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SplitReport {
    pub dropped_valid: usize,
    pub dropped_test: usize,
}

impl SplitReport {
    pub fn is_empty(&self) -> bool {
        self.dropped_valid == 0 && self.dropped_test == 0
    }
}

/// Drops valid/test triples whose entity or relation never occurs in train
/// and errors on overlapping splits.
pub fn validate_split(split: &mut SplitTriples) -> crate::Result<SplitReport> {
    use std::collections::HashSet;

    let train_set: HashSet<Triple> = split.train.iter().copied().collect();
    for (name, part) in [("valid", &split.valid), ("test", &split.test)] {
        if part.iter().any(|t| train_set.contains(t)) {
            return Err(crate::Error::Dataset(format!("{name} split overlaps train split")));
        }
    }
    let valid_set: HashSet<Triple> = split.valid.iter().copied().collect();
    if split.test.iter().any(|t| valid_set.contains(t)) {
        return Err(crate::Error::Dataset("test split overlaps valid split".into()));
    }

    let mut seen_ent = HashSet::new();
    let mut seen_rel = HashSet::new();
    for t in &split.train {
        seen_ent.insert(t.head);
        seen_ent.insert(t.tail);
        seen_rel.insert(t.rel);
    }
    let keep = |t: &Triple| {
        seen_ent.contains(&t.head) && seen_ent.contains(&t.tail) && seen_rel.contains(&t.rel)
    };
    let mut report = SplitReport::default();
    let before = split.valid.len();
    split.valid.retain(keep);
    report.dropped_valid = before - split.valid.len();
    let before = split.test.len();
    split.test.retain(keep);
    report.dropped_test = before - split.test.len();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(h: usize, r: usize, ta: usize) -> Triple {
        Triple::new(h, r, ta)
    }

    #[test]
    fn validate_split_drops_unseen() {
        let mut split = SplitTriples {
            train: vec![t(0, 0, 1), t(1, 0, 2)],
            valid: vec![t(0, 0, 2)],
            test: vec![t(0, 0, 3), t(2, 0, 0)],
        };
        let report = validate_split(&mut split).unwrap();
        assert_eq!(report, SplitReport { dropped_valid: 0, dropped_test: 1 });
        assert_eq!(split.test, vec![t(2, 0, 0)]);
    }

    #[test]
    fn validate_split_accepts_proper_split() {
        let mut split = SplitTriples {
            train: vec![t(0, 0, 1), t(1, 0, 2), t(2, 1, 0)],
            valid: vec![t(0, 0, 2)],
            test: vec![t(1, 1, 0)],
        };
        let report = validate_split(&mut split).unwrap();
        assert!(report.is_empty());
        assert_eq!(split.valid.len(), 1);
        assert_eq!(split.test.len(), 1);
    }

    #[test]
    fn validate_split_rejects_overlap() {
        let mut split = SplitTriples {
            train: vec![t(0, 0, 1)],
            valid: vec![],
            test: vec![t(0, 0, 1)],
        };
        assert!(validate_split(&mut split).is_err());
    }

    #[test]
    fn validate_split_drops_unseen_relation() {
        let mut split = SplitTriples {
            train: vec![t(0, 0, 1)],
            valid: vec![t(1, 1, 0)],
            test: vec![],
        };
        let report = validate_split(&mut split).unwrap();
        assert_eq!(report.dropped_valid, 1);
    }
}

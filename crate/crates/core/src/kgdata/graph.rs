//! Integer-encoded graph structure: adjacency and the known-triple filter.

use std::collections::{HashMap, HashSet};

use super::{SymbolTable, Triple};
use crate::{Error, Result};

/// Which role an adjacency edge plays relative to the indexed entity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Out,
    In,
}

/// Per-entity incidence lists.
#[derive(Debug, Clone, Default)]
pub struct Adjacency {
    /// `out[e]` lists `(rel, tail)` for triples with head `e`.
    out: Vec<Vec<(usize, usize)>>,
    /// `inn[e]` lists `(rel, head)` for triples with tail `e`.
    inn: Vec<Vec<(usize, usize)>>,
}

impl Adjacency {
    pub fn from_triples(n_entities: usize, triples: &[Triple]) -> Self {
        let mut out = vec![Vec::new(); n_entities];
        let mut inn = vec![Vec::new(); n_entities];
        for t in triples {
            out[t.head].push((t.rel, t.tail));
            inn[t.tail].push((t.rel, t.head));
        }
        Adjacency { out, inn }
    }

    pub fn out_edges(&self, e: usize) -> &[(usize, usize)] {
        &self.out[e]
    }

    pub fn in_edges(&self, e: usize) -> &[(usize, usize)] {
        &self.inn[e]
    }

    /// All incident edges of `e` as `(rel, neighbor, direction)`.
    pub fn neighbors(&self, e: usize) -> impl Iterator<Item = (usize, usize, Direction)> + '_ {
        self.out[e]
            .iter()
            .map(|&(r, t)| (r, t, Direction::Out))
            .chain(self.inn[e].iter().map(|&(r, h)| (r, h, Direction::In)))
    }

    pub fn degree(&self, e: usize) -> usize {
        self.out[e].len() + self.inn[e].len()
    }

    /// Reconstructs the triple set from out-edges (used to assert consistency).
    pub fn reconstruct_triples(&self) -> Vec<Triple> {
        let mut v = Vec::new();
        for (h, edges) in self.out.iter().enumerate() {
            for &(r, t) in edges {
                v.push(Triple::new(h, r, t));
            }
        }
        v
    }
}

/// Which known triples feed the filter used by negative sampling and
/// filtered ranking. Train-only is the default; the extended mode adds
/// validation and test triples for community-standard filtered reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FilterMode {
    #[default]
    TrainOnly,
    TrainValidTest,
}

/// Membership index over known triples, with per-query candidate lists.
#[derive(Debug, Clone, Default)]
pub struct KnownFilter {
    set: HashSet<Triple>,
    tails: HashMap<(usize, usize), Vec<usize>>,
    heads: HashMap<(usize, usize), Vec<usize>>,
}

impl KnownFilter {
    pub fn from_sets(sets: &[&[Triple]]) -> Self {
        let mut f = KnownFilter::default();
        for set in sets {
            for &t in *set {
                if f.set.insert(t) {
                    f.tails.entry((t.head, t.rel)).or_default().push(t.tail);
                    f.heads.entry((t.rel, t.tail)).or_default().push(t.head);
                }
            }
        }
        for v in f.tails.values_mut() {
            v.sort_unstable();
        }
        for v in f.heads.values_mut() {
            v.sort_unstable();
        }
        f
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.set.contains(t)
    }

    /// Known tails for `(head, rel)`, sorted ascending.
    pub fn tails_of(&self, head: usize, rel: usize) -> &[usize] {
        self.tails.get(&(head, rel)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Known heads for `(rel, tail)`, sorted ascending.
    pub fn heads_of(&self, rel: usize, tail: usize) -> &[usize] {
        self.heads.get(&(rel, tail)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }
}

/// Immutable integer-encoded triple store with adjacency and known-triple
/// filter. `triples` is the (deduplicated) training set; the filter may
/// additionally cover validation/test triples depending on [`FilterMode`].
#[derive(Debug, Clone)]
pub struct KnowledgeGraph {
    pub entities: SymbolTable,
    pub relations: SymbolTable,
    pub triples: Vec<Triple>,
    pub adjacency: Adjacency,
    pub known_filter: KnownFilter,
}

impl KnowledgeGraph {
    /// Builds a graph from `triples` (deduplicated, first occurrence kept).
    /// `filter_extra` triples are folded into the known filter only.
    pub fn new(
        entities: SymbolTable,
        relations: SymbolTable,
        triples: Vec<Triple>,
        filter_extra: &[&[Triple]],
    ) -> Result<Self> {
        let n_e = entities.len();
        let n_r = relations.len();
        let mut seen = HashSet::with_capacity(triples.len());
        let mut deduped = Vec::with_capacity(triples.len());
        for t in triples {
            if t.head >= n_e || t.tail >= n_e {
                return Err(Error::Dataset(format!(
                    "entity id out of range in triple ({}, {}, {})",
                    t.head, t.rel, t.tail
                )));
            }
            if t.rel >= n_r {
                return Err(Error::Dataset(format!(
                    "relation id {} out of range (n_r = {n_r})",
                    t.rel
                )));
            }
            if seen.insert(t) {
                deduped.push(t);
            }
        }
        let adjacency = Adjacency::from_triples(n_e, &deduped);
        let mut sets: Vec<&[Triple]> = vec![&deduped];
        sets.extend_from_slice(filter_extra);
        let known_filter = KnownFilter::from_sets(&sets);
        Ok(KnowledgeGraph { entities, relations, triples: deduped, adjacency, known_filter })
    }

    pub fn n_entities(&self) -> usize {
        self.entities.len()
    }

    pub fn n_relations(&self) -> usize {
        self.relations.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy_tables(n_e: usize, n_r: usize) -> (SymbolTable, SymbolTable) {
        let mut ents = SymbolTable::new();
        let mut rels = SymbolTable::new();
        for i in 0..n_e {
            ents.intern(&format!("e{i}"));
        }
        for i in 0..n_r {
            rels.intern(&format!("r{i}"));
        }
        (ents, rels)
    }

    #[test]
    fn dedup_and_adjacency_round_trip() {
        let (e, r) = toy_tables(3, 1);
        let triples =
            vec![Triple::new(0, 0, 1), Triple::new(0, 0, 1), Triple::new(1, 0, 2)];
        let kg = KnowledgeGraph::new(e, r, triples, &[]).unwrap();
        assert_eq!(kg.triples.len(), 2);
        let mut rebuilt = kg.adjacency.reconstruct_triples();
        rebuilt.sort_unstable();
        let mut expect = kg.triples.clone();
        expect.sort_unstable();
        assert_eq!(rebuilt, expect);
        assert_eq!(kg.adjacency.degree(1), 2);
    }

    #[test]
    fn out_of_range_id_rejected() {
        let (e, r) = toy_tables(2, 1);
        assert!(KnowledgeGraph::new(e, r, vec![Triple::new(0, 0, 5)], &[]).is_err());
    }

    #[test]
    fn filter_lists_are_sorted_and_queryable() {
        let (e, r) = toy_tables(4, 2);
        let train = vec![Triple::new(0, 0, 3), Triple::new(0, 0, 1), Triple::new(2, 1, 1)];
        let extra = vec![Triple::new(0, 0, 2)];
        let kg = KnowledgeGraph::new(e, r, train, &[&extra]).unwrap();
        assert_eq!(kg.known_filter.tails_of(0, 0), &[1, 2, 3]);
        assert_eq!(kg.known_filter.heads_of(1, 1), &[2]);
        assert!(kg.known_filter.contains(&Triple::new(0, 0, 2)));
        assert!(!kg.known_filter.contains(&Triple::new(3, 0, 0)));
    }
}

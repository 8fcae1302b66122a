//! String-to-id interning with dense, contiguous ids.

use std::collections::HashMap;

use crate::{Error, Result};

/// Bidirectional symbol table. Ids are dense `0..len`, and `forward` and
/// `backward` stay mutual inverses: one string per id, one id per string.
#[derive(Debug, Clone, Default)]
pub struct SymbolTable {
    forward: HashMap<String, usize>,
    backward: Vec<String>,
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id of `s`, interning it if unseen.
    pub fn intern(&mut self, s: &str) -> usize {
        if let Some(&id) = self.forward.get(s) {
            return id;
        }
        let id = self.backward.len();
        self.forward.insert(s.to_owned(), id);
        self.backward.push(s.to_owned());
        id
    }

    pub fn id(&self, s: &str) -> Option<usize> {
        self.forward.get(s).copied()
    }

    pub fn require(&self, s: &str) -> Result<usize> {
        self.id(s).ok_or_else(|| Error::Dataset(format!("unknown symbol: {s}")))
    }

    pub fn symbol(&self, id: usize) -> Option<&str> {
        self.backward.get(id).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.backward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.backward.is_empty()
    }

    /// Symbols in id order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &str)> {
        self.backward.iter().enumerate().map(|(i, s)| (i, s.as_str()))
    }
}

use serde::{Deserialize, Serialize};

/// Outcome of a bounded combinatorial search.
///
/// `NotFound` is only produced after the search space was exhausted, so it is
/// a proof of non-existence. `Exhausted` means the node budget ran out first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "certificate", rename_all = "snake_case")]
pub enum Search<T> {
    Found(T),
    NotFound,
    Exhausted,
}

impl<T> Search<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Search::Exhausted)
    }

    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_ref(&self) -> Search<&T> {
        match self {
            Search::Found(t) => Search::Found(t),
            Search::NotFound => Search::NotFound,
            Search::Exhausted => Search::Exhausted,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::NotFound => Search::NotFound,
            Search::Exhausted => Search::Exhausted,
        }
    }

    /// `Some(true)` for Found, `Some(false)` for NotFound, `None` when the
    /// budget ran out.
    pub fn verdict(&self) -> Option<bool> {
        match self {
            Search::Found(_) => Some(true),
            Search::NotFound => Some(false),
            Search::Exhausted => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Search::Found(_) => "found",
            Search::NotFound => "not_found",
            Search::Exhausted => "exhausted",
        }
    }
}

/// Search budget measured in search-tree nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 5_000_000;

    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes }
    }

    pub fn unlimited() -> Self {
        Budget { max_nodes: u64::MAX }
    }

    pub(crate) fn counter(self) -> NodeCounter {
        NodeCounter { used: 0, max: self.max_nodes }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::nodes(Self::DEFAULT_NODES)
    }
}

/// Per-invocation node counter.
#[derive(Debug)]
pub(crate) struct NodeCounter {
    used: u64,
    max: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct OutOfBudget;

impl NodeCounter {
    pub(crate) fn tick(&mut self) -> Result<(), OutOfBudget> {
        if self.used >= self.max {
            return Err(OutOfBudget);
        }
        self.used += 1;
        Ok(())
    }
}

//! Named pass/fail results shared by the verifiers.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// enough detail to reproduce a failure; empty on success
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
    /// number of products examined, for sampled expansion checks
    #[serde(skip_serializing_if = "Option::is_none")]
    pub products: Option<usize>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), passed, witnesses: Vec::new(), products: None }
    }

    /// Passes iff `witnesses` is empty; keeps at most a handful of them.
    pub fn from_witnesses(name: impl Into<String>, mut witnesses: Vec<String>) -> Self {
        witnesses.truncate(8);
        Check { name: name.into(), passed: witnesses.is_empty(), witnesses, products: None }
    }

    pub fn with_products(mut self, products: usize) -> Self {
        self.products = Some(products);
        self
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        if !self.passed {
            self.witnesses.push(w.into());
        }
        self
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// How much of a finite family a verifier walks through.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    Exhaustive,
    /// `count` random draws from a generator seeded with `seed`
    Sampled { count: usize, seed: u64 },
}
